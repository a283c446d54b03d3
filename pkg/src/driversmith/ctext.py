"""Lexical helpers for C source text.

Shared by the repository parser, the driver structural check, and the
def-use extraction: all three need comment/string-aware scanning without
a full C frontend. Stripping preserves layout (every blanked character
becomes a space, newlines survive) so offsets and line numbers computed
on the stripped text are valid in the original.
"""

from __future__ import annotations

import re

C_KEYWORDS = frozenset({
    "auto", "break", "case", "char", "const", "continue", "default", "do",
    "double", "else", "enum", "extern", "float", "for", "goto", "if",
    "inline", "int", "long", "register", "restrict", "return", "short",
    "signed", "sizeof", "static", "struct", "switch", "typedef", "union",
    "unsigned", "void", "volatile", "while",
    "_Alignas", "_Alignof", "_Atomic", "_Bool", "_Complex", "_Generic",
    "_Noreturn", "_Static_assert", "_Thread_local",
})

TYPE_KEYWORDS = frozenset({
    "void", "char", "short", "int", "long", "float", "double", "signed",
    "unsigned", "const", "volatile", "restrict", "struct", "union", "enum",
    "_Bool", "_Complex", "_Atomic",
})

STORAGE_KEYWORDS = frozenset({
    "static", "extern", "inline", "register", "_Noreturn", "_Thread_local",
})

IDENT_RE = re.compile(r"[A-Za-z_]\w*")


def strip_comments_and_strings(text: str) -> str:
    """Blank out comments and string/char literals, preserving layout."""
    out = list(text)
    i, n = 0, len(text)
    NORMAL, LINE, BLOCK, STRING, CHAR = range(5)
    state = NORMAL
    while i < n:
        c = text[i]
        nxt = text[i + 1] if i + 1 < n else ""
        if state == NORMAL:
            if c == "/" and nxt == "/":
                state = LINE
                out[i] = out[i + 1] = " "
                i += 2
                continue
            if c == "/" and nxt == "*":
                state = BLOCK
                out[i] = out[i + 1] = " "
                i += 2
                continue
            if c == '"':
                state = STRING
                i += 1
                continue
            if c == "'":
                state = CHAR
                i += 1
                continue
            i += 1
        elif state == LINE:
            if c == "\n":
                state = NORMAL
            elif c == "\\" and nxt == "\n":
                out[i] = " "
                i += 2
                continue
            else:
                out[i] = " "
            i += 1
        elif state == BLOCK:
            if c == "*" and nxt == "/":
                out[i] = out[i + 1] = " "
                state = NORMAL
                i += 2
                continue
            if c != "\n":
                out[i] = " "
            i += 1
        else:  # STRING or CHAR
            quote = '"' if state == STRING else "'"
            if c == "\\" and nxt:
                out[i] = " "
                if nxt != "\n":
                    out[i + 1] = " "
                i += 2
                continue
            if c == quote:
                state = NORMAL
            elif c == "\n":
                # unterminated literal; recover at end of line
                state = NORMAL
            else:
                out[i] = " "
            i += 1
    return "".join(out)


def blank_preprocessor_lines(stripped: str) -> str:
    """Blank #-directives (with backslash continuations) from stripped text."""
    lines = stripped.split("\n")
    i = 0
    while i < len(lines):
        if lines[i].lstrip().startswith("#"):
            while True:
                cont = lines[i].rstrip().endswith("\\")
                lines[i] = " " * len(lines[i])
                if not cont or i + 1 >= len(lines):
                    break
                i += 1
        i += 1
    return "\n".join(lines)


def prepare(text: str) -> str:
    """Full scan preparation: strip literals, comments, and directives."""
    return blank_preprocessor_lines(strip_comments_and_strings(text))


def iter_call_sites(stripped: str):
    """Yield (callee_name, 1-based line) for direct call expressions.

    A call site is an identifier immediately followed by '(' that is not a
    keyword and not a struct-member access (preceded by '.' or '->'); calls
    through bare function pointers like (*fp)(x) never match because no
    identifier precedes the paren.
    """
    for m in re.finditer(r"\b([A-Za-z_]\w*)\s*\(", stripped):
        name = m.group(1)
        if name in C_KEYWORDS:
            continue
        j = m.start() - 1
        while j >= 0 and stripped[j] in " \t":
            j -= 1
        if j >= 0 and (stripped[j] == "." or (stripped[j] == ">" and j > 0 and stripped[j - 1] == "-")):
            continue
        line = stripped.count("\n", 0, m.start()) + 1
        yield name, line


def has_call_token(source: str, name: str) -> bool:
    """True if `name(` occurs in source outside comments and strings."""
    stripped = strip_comments_and_strings(source)
    return re.search(r"\b" + re.escape(name) + r"\s*\(", stripped) is not None


def line_of(text: str, offset: int) -> int:
    return text.count("\n", 0, offset) + 1
