"""Pipe-table primitives shared by the taxonomy, sidecar and response readers.

Cell escapes: ``\\|`` is a literal pipe, ``\\n`` a line break inside the cell and
``\\\\`` a literal backslash. Any other backslash pair is kept verbatim.
"""
from __future__ import annotations

import re

_SEPARATOR_CELL_RE = re.compile(r"^:?-+:?$")


def escape_cell(text: str) -> str:
    out = []
    for ch in text:
        if ch == "\\":
            out.append("\\\\")
        elif ch == "|":
            out.append("\\|")
        elif ch == "\n":
            out.append("\\n")
        else:
            out.append(ch)
    return "".join(out)


def unescape_cell(text: str, *, decode_newlines: bool = True) -> str:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\\" and i + 1 < n:
            nxt = text[i + 1]
            if nxt == "\\" or nxt == "|":
                out.append(nxt)
                i += 2
                continue
            if nxt == "n" and decode_newlines:
                out.append("\n")
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def split_row(line: str) -> list[str] | None:
    """Split a pipe-delimited row into raw (still escaped) cells.

    Leading and trailing pipes are optional. Returns None when the line holds
    no unescaped pipe at all.
    """
    cells: list[str] = []
    buf: list[str] = []
    saw_pipe = False
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch == "\\" and i + 1 < n:
            buf.append(line[i : i + 2])
            i += 2
            continue
        if ch == "|":
            saw_pipe = True
            cells.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
        i += 1
    cells.append("".join(buf))
    if not saw_pipe:
        return None
    stripped = line.strip()
    if stripped.startswith("|"):
        cells = cells[1:]
    if stripped.endswith("|") and not stripped.endswith("\\|") and cells:
        cells = cells[:-1]
    return [c.strip() for c in cells]


def is_separator_row(cells: list[str]) -> bool:
    return bool(cells) and all(_SEPARATOR_CELL_RE.match(c.strip()) for c in cells)


def format_row(cells: list[str]) -> str:
    return "| " + " | ".join(cells) + " |"


def separator_row(width: int) -> str:
    return "|" + "|".join(["---"] * width) + "|"


def strip_code_fence(text: str) -> str:
    """Remove one enclosing inline or block code fence, if present."""
    m = re.fullmatch(r"```[\w+.-]*\n(.*?)\n?```", text, flags=re.DOTALL)
    if m:
        return m.group(1)
    m = re.fullmatch(r"(`+)(.*)\1", text, flags=re.DOTALL)
    if m and "`" * len(m.group(1)) not in m.group(2):
        inner = m.group(2)
        if len(m.group(1)) > 1 and len(inner) >= 2 and inner[0] == " " and inner[-1] == " ":
            inner = inner[1:-1]
        return inner
    return text


def fence_code(text: str) -> str:
    """Wrap text in the shortest inline fence that survives strip_code_fence."""
    longest = max((len(run) for run in re.findall(r"`+", text)), default=0)
    if longest == 0:
        return f"`{text}`"
    fence = "`" * (longest + 1)
    return f"{fence} {text} {fence}"
