"""Finite quivers: the data type, a small text format, degrees and shapes."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from qct.errors import (
    DisconnectedQuiverError,
    QuiverSyntaxError,
    QuiverValidationError,
    UnknownVertexError,
)

_NAME = re.compile(r"[A-Za-z0-9_]+")


class Arrow(NamedTuple):
    id: str
    source: str
    target: str


class Degree(NamedTuple):
    incoming: int
    outgoing: int

    def __str__(self) -> str:
        return f"({self.incoming},{self.outgoing})"


@dataclass(frozen=True)
class Shape:
    kind: str  # "A", "Atilde" or "other"
    m: int | None = None

    def __str__(self) -> str:
        if self.kind == "A":
            return f"LinearA({self.m})"
        if self.kind == "Atilde":
            return f"CycleATilde({self.m})"
        return "Other"

    @property
    def is_linear(self) -> bool:
        return self.kind == "A"

    @property
    def is_cycle(self) -> bool:
        return self.kind == "Atilde"


def LinearA(m: int) -> Shape:
    return Shape("A", m)


def CycleATilde(m: int) -> Shape:
    return Shape("Atilde", m)


OTHER = Shape("other")


@dataclass(frozen=True, eq=False)
class Quiver:
    """Vertices are kept in a fixed order; arrows keep their declaration order."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(*a) for a in self.arrows))
        if not self.vertices:
            raise QuiverValidationError("a quiver needs at least one vertex")
        seen = set()
        for v in self.vertices:
            if not _NAME.fullmatch(v):
                raise QuiverValidationError(f"bad vertex name {v!r}")
            if v in seen:
                raise QuiverValidationError(f"duplicate vertex {v!r}")
            seen.add(v)
        ids = set()
        for a in self.arrows:
            if a.id in ids:
                raise QuiverValidationError(f"duplicate arrow id {a.id!r}")
            ids.add(a.id)
            for end in (a.source, a.target):
                if end not in seen:
                    raise QuiverValidationError(f"arrow {a.id} uses undeclared vertex {end!r}")

    # equality is structural so quivers can be compared in tests
    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.id: i for i, a in enumerate(self.arrows)}

    @cached_property
    def arrow_by_id(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def out_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(xs) for v, xs in out.items()}

    @cached_property
    def in_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        inc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(xs) for v, xs in inc.items()}

    @cached_property
    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))

    def degree(self, v: str) -> Degree:
        return degree(self, v)

    def check_vertex(self, v: str) -> None:
        if v not in self.index:
            raise UnknownVertexError(f"unknown vertex {v!r}")


def degree(q: Quiver, v: str) -> Degree:
    q.check_vertex(v)
    return Degree(len(q.in_arrows[v]), len(q.out_arrows[v]))


def components(q: Quiver) -> list[Quiver]:
    """Connected components, each as a quiver, ordered by their first vertex."""
    adj: dict[str, set[str]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    comp_of: dict[str, int] = {}
    n_comp = 0
    for v in q.vertices:
        if v in comp_of:
            continue
        comp_of[v] = n_comp
        todo = deque([v])
        while todo:
            u = todo.popleft()
            for w in adj[u]:
                if w not in comp_of:
                    comp_of[w] = n_comp
                    todo.append(w)
        n_comp += 1
    out = []
    for c in range(n_comp):
        vs = tuple(v for v in q.vertices if comp_of[v] == c)
        arr = tuple(a for a in q.arrows if comp_of[a.source] == c)
        out.append(Quiver(vs, arr))
    return out


def is_connected(q: Quiver) -> bool:
    return len(components(q)) == 1


def require_connected(q: Quiver) -> None:
    if not is_connected(q):
        raise DisconnectedQuiverError(
            f"quiver has {len(components(q))} connected components; use --per-component"
        )


def classify_shape(q: Quiver) -> Shape:
    require_connected(q)
    m = len(q.vertices)
    degs = [degree(q, v) for v in q.vertices]
    if m == 1 and not q.arrows:
        return LinearA(1)
    if all(d == (1, 1) for d in degs):
        # connected and every vertex (1,1): an oriented cycle
        return CycleATilde(m)
    if len(q.arrows) == m - 1:
        counts = {d: degs.count(d) for d in set(degs)}
        if counts.get((0, 1)) == 1 and counts.get((1, 0)) == 1 and counts.get((1, 1), 0) == m - 2:
            return LinearA(m)
    return OTHER


def linear_quiver(m: int) -> Quiver:
    """The oriented path 1 -> 2 -> ... -> m."""
    vs = tuple(str(i) for i in range(1, m + 1))
    return Quiver(vs, tuple(Arrow(f"a{i}", vs[i], vs[i + 1]) for i in range(m - 1)))


def cycle_quiver(m: int) -> Quiver:
    """The oriented cycle 1 -> 2 -> ... -> m -> 1."""
    vs = tuple(str(i) for i in range(1, m + 1))
    return Quiver(vs, tuple(Arrow(f"a{i}", vs[i], vs[(i + 1) % m]) for i in range(m)))


def from_edges(edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Quiver:
    """Build a quiver from (source, target) pairs with auto ids, vertices in first-appearance order."""
    vs: list[str] = list(dict.fromkeys(str(v) for v in vertices))
    arrows = []
    for i, (s, t) in enumerate(edges):
        s, t = str(s), str(t)
        for v in (s, t):
            if v not in vs:
                vs.append(v)
        arrows.append(Arrow(f"a{i}", s, t))
    return Quiver(tuple(vs), tuple(arrows))


# -- text format -----------------------------------------------------------

_ARROW_LINE = re.compile(
    r"^\s*(?:(?P<id>[A-Za-z0-9_]+)\s*:\s*)?(?P<src>[A-Za-z0-9_]+)\s*->\s*(?P<tgt>[A-Za-z0-9_]+)\s*$"
)
_VERTEX_LINE = re.compile(r"^\s*vertex\s+(?P<name>[A-Za-z0-9_]+)\s*$")


def _syntax_column(line: str) -> int:
    """1-based column of the first character that cannot continue a valid line."""
    # walk the tokens we expect and report where things go wrong
    pos = len(line) - len(line.lstrip())
    m = _NAME.match(line, pos)
    if not m:
        return pos + 1
    pos = m.end()
    rest = line[pos:].lstrip()
    pos = len(line) - len(rest)
    if rest.startswith(":"):
        pos += 1
        pos += len(line[pos:]) - len(line[pos:].lstrip())
        m = _NAME.match(line, pos)
        if not m:
            return pos + 1
        pos = m.end()
        pos += len(line[pos:]) - len(line[pos:].lstrip())
    if not line.startswith("->", pos):
        return pos + 1
    pos += 2
    pos += len(line[pos:]) - len(line[pos:].lstrip())
    m = _NAME.match(line, pos)
    if not m:
        return pos + 1
    return m.end() + 1


def parse_quiver(text: str) -> Quiver:
    declared: list[str] = []
    order: list[str] = []
    seen: set[str] = set()
    raw_arrows: list[tuple[str | None, str, str, int]] = []

    def note(v: str) -> None:
        if v not in seen:
            seen.add(v)
            order.append(v)

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _VERTEX_LINE.match(line)
        if m:
            name = m.group("name")
            if name in declared:
                raise QuiverSyntaxError(f"vertex {name!r} declared twice", lineno, line.index(name) + 1)
            declared.append(name)
            note(name)
            continue
        m = _ARROW_LINE.match(line)
        if not m:
            raise QuiverSyntaxError(f"cannot parse {stripped!r}", lineno, _syntax_column(line))
        raw_arrows.append((m.group("id"), m.group("src"), m.group("tgt"), lineno))
        note(m.group("src"))
        note(m.group("tgt"))

    if not order:
        raise QuiverSyntaxError("no vertices or arrows", 1, 1)

    explicit = {aid for aid, *_ in raw_arrows if aid is not None}
    arrows = []
    used: set[str] = set()
    for i, (aid, s, t, lineno) in enumerate(raw_arrows):
        if aid is None:
            aid = f"a{i}"
            if aid in explicit:
                raise QuiverValidationError(
                    f"line {lineno}: auto id {aid} collides with an explicit arrow id"
                )
        if aid in used:
            raise QuiverValidationError(f"line {lineno}: duplicate arrow id {aid!r}")
        used.add(aid)
        if declared:
            for v in (s, t):
                if v not in declared:
                    raise QuiverValidationError(f"line {lineno}: undeclared vertex {v!r}")
        arrows.append(Arrow(aid, s, t))
    return Quiver(tuple(order), tuple(arrows))


def serialize(q: Quiver) -> str:
    """Text form that parses back to an equal quiver.

    Vertex lines are written only when needed: when some vertex has no arrows,
    or when the arrow list alone would reorder the vertices.  In that case every
    vertex is declared, since a partial declaration would make the other
    vertices dangling.
    """
    from_arrows: list[str] = []
    for a in q.arrows:
        for v in (a.source, a.target):
            if v not in from_arrows:
                from_arrows.append(v)
    lines = []
    if tuple(from_arrows) != q.vertices:
        lines.extend(f"vertex {v}" for v in q.vertices)
    for i, a in enumerate(q.arrows):
        if a.id == f"a{i}":
            lines.append(f"{a.source} -> {a.target}")
        else:
            lines.append(f"{a.id}: {a.source} -> {a.target}")
    return "\n".join(lines) + "\n"


def load_quiver(path) -> Quiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())
