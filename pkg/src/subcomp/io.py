"""Edge-list, graph6 and vertex-weight text formats.

Edge lists are ``n m`` followed by exactly ``m`` lines ``u v``; lines starting
with ``#`` are comments.  The writer emits the canonical form (edges with
``u < v``, sorted), so ``parse_edge_list(write_edge_list(g)) == g`` and writing
a parsed canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence

from .graph import Graph, GraphError, from_edge_list


_DECIMAL = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)")


class ParseError(ValueError):
    """Malformed input text; the message names the offending line."""


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((number, stripped.split()))
    return out


def _int(token: str, line: int) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ParseError(f"non-integer token {token!r} at line {line}") from None
    return value


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing 'n m' header")
    line, tokens = lines[0]
    if len(tokens) != 2:
        raise ParseError(f"malformed header at line {line}: expected 'n m'")
    n, m = (_int(t, line) for t in tokens)
    if n < 0 or m < 0:
        raise ParseError(f"malformed header at line {line}: negative count")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for line, tokens in body:
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v' at line {line}")
        u, v = (_int(t, line) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range at line {line}")
        if u == v:
            raise ParseError(f"self-loop at line {line}")
        edges.append((u, v))
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges])


def parse_graph6(text: str) -> Graph:
    """Decode a header-less graph6 string with ``n <= 62``."""
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string")
    codes = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise ParseError(f"invalid graph6 character {ch!r}")
        codes.append(c)
    n = codes[0]
    if n == 63:
        raise ParseError("graph6 sizes above 62 are not supported")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    if len(codes) - 1 != need:
        raise ParseError(f"graph6 bit field has {len(codes) - 1} bytes, expected {need}")
    edges = []
    index = 0
    for v in range(1, n):
        for u in range(v):
            byte, offset = divmod(index, 6)
            if codes[1 + byte] >> (5 - offset) & 1:
                edges.append((u, v))
            index += 1
    return from_edge_list(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 output is limited to n <= 62")
    bitlist = [g.rows[v] >> u & 1 for v in range(1, g.n) for u in range(v)]
    bitlist += [0] * (-len(bitlist) % 6)
    out = [chr(63 + g.n)]
    for i in range(0, len(bitlist), 6):
        value = 0
        for b in bitlist[i:i + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_weights(text: str, n: int) -> tuple[Fraction, ...]:
    """Per-vertex weights as exact fractions; vertices not listed weigh 1.

    Weights are plain decimals such as ``3`` or ``0.25``.
    """
    weights = [Fraction(1)] * n
    seen = set()
    for line, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise ParseError(f"expected 'v w' at line {line}")
        v = _int(tokens[0], line)
        if not 0 <= v < n:
            raise ParseError(f"vertex id out of range at line {line}")
        if v in seen:
            raise ParseError(f"duplicate weight for vertex {v} at line {line}")
        if not _DECIMAL.fullmatch(tokens[1]):
            raise ParseError(f"malformed weight {tokens[1]!r} at line {line}")
        w = Fraction(tokens[1])
        if w <= 0:
            raise ParseError(f"weight must be positive (line {line})")
        seen.add(v)
        weights[v] = w
    return tuple(weights)


def scale_weights(weights: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    """Integers ``c`` and a common denominator ``d`` with ``weights[v] == c[v] / d``."""
    fracs = [Fraction(w) for w in weights]
    d = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
    return tuple(int(f * d) for f in fracs), d


def format_weight(w: Fraction) -> int | str:
    """An integer when ``w`` is integral, else its exact decimal expansion as a string."""
    w = Fraction(w)
    if w.denominator == 1:
        return w.numerator
    d = w.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        raise ValueError(f"{w} has no finite decimal expansion")
    digits = max(twos, fives)
    text = str(abs(w.numerator) * 10 ** digits // w.denominator).rjust(digits + 1, "0")
    sign = "-" if w < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}".rstrip("0")
