"""Collects one status line per acceptance criterion for the terminal summary."""

LINES: list[str] = []


def record(number: int, status: str, detail: str) -> str:
    line = f"criterion {number}: {status}  {detail}"
    LINES.append(line)
    print(line)
    return line
