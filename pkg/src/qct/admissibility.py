"""Pre-admissibility, flow paths, q-values and the admissible degree.

A flow path is a path v1 -> ... -> vk (k >= 2) whose interior vertices all have
degree (1,1) while the endpoints do not.  A closed flow path lists its endpoint
twice.  The quiver is n-admissible when it is n-pre-admissible and n divides
k + q for every flow path (for an oriented m-cycle: when n divides m).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from qct.errors import NotPreAdmissibleError, ShapeError
from qct.quiver import Arrow, Degree, Quiver, classify_shape, degree, is_connected, require_connected

_BASE_DEGREES = {(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1)}


@dataclass(frozen=True)
class Violation:
    rule: str  # deg | multi | sum3 | flow
    where: tuple

    def to_json(self) -> dict:
        return {"rule": self.rule, "where": list(self.where)}


@dataclass(frozen=True)
class AdmissibilityReport:
    violations: tuple[Violation, ...] = ()
    n: int | None = None

    @property
    def verdict(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.verdict

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "violations": [v.to_json() for v in self.violations]}

    def to_text(self) -> str:
        head = "admissible" if self.verdict else "not admissible"
        if self.n is not None:
            head = f"n={self.n}: {head}"
        lines = [head]
        for v in self.violations:
            lines.append(f"  {v.rule}: {' '.join(str(x) for x in v.where)}")
        return "\n".join(lines)


@dataclass(frozen=True)
class EndpointContext:
    """Neighbours of the endpoints of a flow path; None where no such vertex exists.

    ``minus1`` is the other out-neighbour of v1, ``minus2``/``minus3`` its
    in-neighbours; ``plus1`` is the source of the other arrow into vk,
    ``plus2``/``plus3`` the out-neighbours of vk.
    """

    minus1: str | None = None
    minus2: str | None = None
    minus3: str | None = None
    plus1: str | None = None
    plus2: str | None = None
    plus3: str | None = None

    def to_json(self) -> dict:
        return {
            "v-1": self.minus1, "v-2": self.minus2, "v-3": self.minus3,
            "v+1": self.plus1, "v+2": self.plus2, "v+3": self.plus3,
        }


@dataclass(frozen=True)
class FlowPath:
    vertices: tuple[str, ...]
    arrows: tuple[str, ...]
    context: EndpointContext = field(default_factory=EndpointContext, compare=False)

    @property
    def length(self) -> int:
        return len(self.vertices)

    k = length

    @property
    def first(self) -> str:
        return self.vertices[0]

    @property
    def last(self) -> str:
        return self.vertices[-1]

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def __str__(self) -> str:
        return "->".join(self.vertices)


@dataclass(frozen=True)
class QValues:
    k: int
    q1: int
    qk: int

    @property
    def q(self) -> int:
        return -1 + self.q1 + self.qk

    @property
    def total(self) -> int:
        """k + q, the quantity n has to divide."""
        return self.k + self.q

    def p_for(self, n: int) -> Fraction:
        return Fraction(self.total, n)


def _require_n(n: int) -> None:
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def is_n_pre_admissible(q: Quiver, n: int) -> AdmissibilityReport:
    require_connected(q)
    _require_n(n)
    allowed = _BASE_DEGREES | ({(2, 2)} if n == 2 else set())
    out: list[Violation] = []
    degs = {v: degree(q, v) for v in q.vertices}
    for v in q.vertices:
        if tuple(degs[v]) not in allowed:
            out.append(Violation("deg", (v, str(degs[v]))))
    by_pair: dict[tuple[str, str], list[str]] = {}
    for a in q.arrows:
        by_pair.setdefault((a.source, a.target), []).append(a.id)
    for (s, t), ids in by_pair.items():
        if len(ids) > 1:
            out.append(Violation("multi", (s, t, *ids)))
    for a in q.arrows:
        if degs[a.source].outgoing + degs[a.target].incoming > 3:
            out.append(Violation("sum3", (a.id, a.source, a.target)))
    return AdmissibilityReport(tuple(out), n)


def _context(q: Quiver, first_arrow: Arrow, last_arrow: Arrow) -> EndpointContext:
    v1, vk = first_arrow.source, last_arrow.target
    other_out = [a.target for a in q.out_arrows[v1] if a.id != first_arrow.id]
    ins = [a.source for a in q.in_arrows[v1]]
    other_in = [a.source for a in q.in_arrows[vk] if a.id != last_arrow.id]
    outs = [a.target for a in q.out_arrows[vk]]

    def pick(xs, i):
        return xs[i] if i < len(xs) else None

    return EndpointContext(
        minus1=pick(other_out, 0), minus2=pick(ins, 0), minus3=pick(ins, 1),
        plus1=pick(other_in, 0), plus2=pick(outs, 0), plus3=pick(outs, 1),
    )


def enumerate_flow_paths(q: Quiver) -> list[FlowPath]:
    report = is_n_pre_admissible(q, 2)
    if not report:
        raise NotPreAdmissibleError("flow paths need a 2-pre-admissible quiver", report)
    shape = classify_shape(q)
    if shape.is_cycle or (shape.is_linear and shape.m == 1):
        return []
    one_one = Degree(1, 1)
    paths = []
    for v in q.vertices:
        if degree(q, v) == one_one:
            continue
        for start in q.out_arrows[v]:
            verts, arrs = [v], [start]
            cur = start.target
            while degree(q, cur) == one_one:
                if len(arrs) > len(q.arrows):  # pragma: no cover - ruled out by pre-admissibility
                    raise RuntimeError("flow path does not terminate")
                verts.append(cur)
                nxt = q.out_arrows[cur][0]
                arrs.append(nxt)
                cur = nxt.target
            verts.append(cur)
            paths.append(FlowPath(tuple(verts), tuple(a.id for a in arrs), _context(q, arrs[0], arrs[-1])))
    paths.sort(key=lambda fp: (q.index[fp.first], [q.arrow_index[a] for a in fp.arrows]))
    return paths


def q_values(fp: FlowPath, q: Quiver) -> QValues:
    q1 = int(degree(q, fp.first) == (2, 1))
    qk = int(degree(q, fp.last) == (1, 2))
    return QValues(fp.length, q1, qk)


def is_n_admissible(q: Quiver, n: int) -> AdmissibilityReport:
    pre = is_n_pre_admissible(q, n)
    if not pre:
        return pre
    shape = classify_shape(q)
    if shape.is_cycle:
        if shape.m % n:
            return AdmissibilityReport((Violation("flow", tuple(q.vertices)),), n)
        return AdmissibilityReport((), n)
    out = []
    for fp in enumerate_flow_paths(q):
        t = q_values(fp, q).total
        if t % n:
            out.append(Violation("flow", (*fp.vertices, f"k+q={t}")))
    return AdmissibilityReport(tuple(out), n)


def has_22_vertex(q: Quiver) -> bool:
    return any(degree(q, v) == (2, 2) for v in q.vertices)


def admissible_degree(q: Quiver) -> int:
    shape = classify_shape(q)
    if shape.is_linear and shape.m == 1:
        return 1
    if shape.is_cycle:
        return shape.m if shape.m >= 2 else 1
    if not is_n_pre_admissible(q, 2):
        return 1
    g = 0
    for fp in enumerate_flow_paths(q):
        g = math.gcd(g, q_values(fp, q).total)
    if has_22_vertex(q):
        return 2 if g % 2 == 0 else 1
    return g if g >= 2 else 1


def admits_nZ(q: Quiver, n: int) -> bool:
    _require_n(n)
    shape = classify_shape(q)
    if shape.is_linear:
        return (shape.m - 1) % n == 0
    if shape.is_cycle:
        return shape.m % n == 0
    return False


# -- divisor lattice ---------------------------------------------------------

def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class DivisorLattice:
    N: int
    divisors: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    @staticmethod
    def meet(a: int, b: int) -> int:
        return math.gcd(a, b)

    @staticmethod
    def join(a: int, b: int) -> int:
        return a * b // math.gcd(a, b)

    def leq(self, a: int, b: int) -> bool:
        return b % a == 0

    def to_json(self) -> dict:
        return {"N": self.N, "divisors": list(self.divisors), "covers": [list(c) for c in self.covers]}

    def to_dot(self) -> str:
        lines = ["digraph divisors {", "  rankdir=BT;"]
        lines += [f'  "{d}";' for d in self.divisors]
        lines += [f'  "{a}" -> "{b}";' for a, b in self.covers]
        lines.append("}")
        return "\n".join(lines) + "\n"


def divisor_lattice(N: int) -> DivisorLattice:
    if int(N) != N or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    divs = tuple(d for d in range(1, N + 1) if N % d == 0)
    primes = _prime_factors(N)
    covers = tuple((d, d * p) for d in divs for p in primes if N % (d * p) == 0)
    return DivisorLattice(N, divs, covers)


# -- generators --------------------------------------------------------------

def generate_admissible(n: int, skeleton: Quiver, seed: int = 0) -> Quiver:
    """Pad the flow paths of ``skeleton`` until every k + q is a multiple of n.

    Fresh vertices ``_pad<i>`` are inserted on the first arrow of each flow
    path.  Seed 0 gives the minimal padding; any other seed adds an extra n
    to a random subset of the flow paths.
    """
    _require_n(n)
    shape = classify_shape(skeleton)
    if shape.is_cycle:
        raise ShapeError("oriented cycles have no flow paths; use a cycle of length n*t instead")
    report = is_n_pre_admissible(skeleton, n)
    if not report:
        raise NotPreAdmissibleError(f"skeleton is not {n}-pre-admissible", report)
    paths = enumerate_flow_paths(skeleton)
    rng = np.random.default_rng(seed)
    extra_by_arrow: dict[str, int] = {}
    for fp in paths:
        t = q_values(fp, skeleton).total
        need = -t % n
        if seed != 0:
            need += n * int(rng.integers(0, 2))
        extra_by_arrow[fp.arrows[0]] = need

    taken = set(skeleton.vertices)
    counter = 0

    def fresh() -> str:
        nonlocal counter
        while f"_pad{counter}" in taken:
            counter += 1
        name = f"_pad{counter}"
        taken.add(name)
        counter += 1
        return name

    vertices = list(skeleton.vertices)
    edges: list[tuple[str, str]] = []
    for a in skeleton.arrows:
        chain = [a.source]
        for _ in range(extra_by_arrow.get(a.id, 0)):
            v = fresh()
            vertices.append(v)
            chain.append(v)
        chain.append(a.target)
        edges.extend(zip(chain, chain[1:]))
    arrows = tuple(Arrow(f"a{i}", s, t) for i, (s, t) in enumerate(edges))
    return Quiver(tuple(vertices), arrows)


def random_skeleton(seed: int, n: int = 2, max_vertices: int = 6, max_tries: int = 10_000) -> Quiver:
    """A random connected n-pre-admissible quiver that is not an oriented cycle.

    Used to feed :func:`generate_admissible` during fuzzing.  Rejection sampling
    over small random quivers; deterministic in ``seed``.
    """
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        nv = int(rng.integers(2, max_vertices + 1))
        na = int(rng.integers(nv - 1, nv + 3))
        names = [str(i) for i in range(1, nv + 1)]
        pairs = set()
        edges = []
        for _ in range(na):
            s, t = (names[int(i)] for i in rng.integers(0, nv, size=2))
            if (s, t) in pairs:
                continue
            pairs.add((s, t))
            edges.append((s, t))
        q = Quiver(tuple(names), tuple(Arrow(f"a{i}", s, t) for i, (s, t) in enumerate(edges)))
        if not is_connected(q):
            continue
        if classify_shape(q).is_cycle:
            continue
        if is_n_pre_admissible(q, n):
            return q
    raise RuntimeError("no pre-admissible skeleton found")  # pragma: no cover
