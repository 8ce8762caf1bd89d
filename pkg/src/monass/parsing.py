"""Text formats: ring headers, ideals, graphs and session scripts.

    ring x,y,z            ring x1..x6
    (x^3, x*y*z, y^2*z)   (0)
    graph 6; 1-2 2-3 3-1  cycle:5  wheel:6
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError
from .graphs import SimpleGraph, cycle_graph, wheel_graph
from .ideal import MonomialIdeal
from .ring import RingContext, parse_monomial

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_RANGE = re.compile(r"([A-Za-z][A-Za-z_]*)(\d+)\s*\.\.\s*(?:([A-Za-z][A-Za-z_]*))?(\d+)\Z")


def parse_ring(text: str, *, line: int = 1) -> RingContext:
    """Parse ``ring x,y,z`` or ``ring x1..x6``; the ``ring`` keyword is optional."""
    body = text.strip()
    if body.startswith("ring ") or body == "ring":
        body = body[4:].strip()
    if not body:
        raise ParseError("empty ring declaration", text, 0, line)
    m = _RANGE.match(body)
    if m:
        prefix, lo, prefix2, hi = m.groups()
        if prefix2 and prefix2 != prefix:
            raise ParseError(f"range prefixes differ: {prefix} vs {prefix2}", text, text.find(prefix2), line)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ParseError("empty variable range", text, text.find(".."), line)
        return RingContext(f"{prefix}{k}" for k in range(lo, hi + 1))
    names = [s.strip() for s in re.split(r"[,\s]+", body) if s.strip()]
    for nm in names:
        if not _IDENT.fullmatch(nm):
            raise ParseError(f"invalid variable name {nm!r}", text, max(text.find(nm), 0), line)
    try:
        return RingContext(names)
    except ValueError as exc:
        raise ParseError(str(exc), text, 0, line) from None


def _natural_key(name: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name)]


def infer_ring(*texts: str) -> RingContext:
    """Ring on every identifier appearing in the texts, in natural sort order."""
    names = set()
    for t in texts:
        names.update(_IDENT.findall(t))
    if not names:
        names = {"x"}
    return RingContext(sorted(names, key=_natural_key))


def parse_ideal(ctx: RingContext, text: str, *, line: int = 1) -> MonomialIdeal:
    """Parse ``'(' term (',' term)* ')'`` or ``(0)``."""
    s = text.rstrip()
    start = len(s) - len(s.lstrip())
    if start >= len(s) or s[start] != "(":
        raise ParseError("an ideal must start with '('", text, start, line)
    if s[-1] != ")":
        raise ParseError("an ideal must end with ')'", text, len(s), line)
    inner_start = start + 1
    inner = s[inner_start:-1]
    if inner.strip() == "0":
        return MonomialIdeal.zero(ctx)
    if "(" in inner or ")" in inner:
        pos = inner_start + min(i for i in (inner.find("("), inner.find(")")) if i >= 0)
        raise ParseError("nested parentheses are not allowed", text, pos, line)
    gens = []
    pos = inner_start
    for piece in inner.split(","):
        gens.append(parse_monomial(ctx, piece, offset=pos, line=line))
        pos += len(piece) + 1
    return MonomialIdeal(ctx, gens)


def parse_graph(text: str, *, line: int = 1) -> SimpleGraph:
    """Parse ``graph N; a-b c-d ...`` or a named family ``cycle:k`` / ``wheel:k``."""
    s = text.strip()
    m = re.fullmatch(r"(cycle|wheel):(\d+)", s)
    if m:
        k = int(m.group(2))
        try:
            return cycle_graph(k) if m.group(1) == "cycle" else wheel_graph(k)
        except ValueError as exc:
            raise ParseError(str(exc), text, text.find(m.group(2)), line) from None
    m = re.fullmatch(r"graph\s+(\d+)\s*;(.*)", s, re.S)
    if not m:
        raise ParseError("expected 'graph N; a-b ...', 'cycle:k' or 'wheel:k'", text, 0, line)
    nverts = int(m.group(1))
    edges = []
    base = text.find(";") + 1
    for em in re.finditer(r"\S+", m.group(2)):
        tok = em.group()
        pm = re.fullmatch(r"(\d+)-(\d+)", tok)
        if not pm:
            raise ParseError(f"bad edge {tok!r}", text, base + em.start(), line)
        edges.append((int(pm.group(1)), int(pm.group(2))))
    try:
        return SimpleGraph(nverts, edges)
    except ValueError as exc:
        raise ParseError(str(exc), text, base, line) from None


# -- session scripts ------------------------------------------------------------


@dataclass
class Statement:
    line: int
    target: str | None
    words: list[str]
    text: str


@dataclass
class SessionScript:
    """One ring declaration followed by bindings ``NAME = expr`` and commands."""

    ring: RingContext
    statements: list[Statement] = field(default_factory=list)


_BIND = re.compile(r"([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.+)\Z")


def _split_words(body: str) -> list[str]:
    # an ideal literal stays one word
    words, i = [], 0
    while i < len(body):
        if body[i].isspace():
            i += 1
        elif body[i] == "(":
            j = body.find(")", i)
            if j < 0:
                j = len(body) - 1
            words.append(body[i : j + 1])
            i = j + 1
        else:
            j = i
            while j < len(body) and not body[j].isspace():
                j += 1
            words.append(body[i:j])
            i = j
    return words


def parse_script(text: str) -> SessionScript:
    ring = None
    stmts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("ring ") or body == "ring":
            if ring is not None:
                raise ParseError("only one ring declaration per script", raw, 0, lineno)
            ring = parse_ring(body, line=lineno)
            continue
        if ring is None:
            raise ParseError("the script must declare its ring first", raw, 0, lineno)
        m = _BIND.match(body)
        if m and not body.startswith("check "):
            stmts.append(Statement(lineno, m.group(1), _split_words(m.group(2)), raw))
        else:
            stmts.append(Statement(lineno, None, _split_words(body), raw))
    if ring is None:
        raise ParseError("no ring declaration found", text, 0, 1)
    return SessionScript(ring, stmts)
