"""Indecomposable modules over kQ/J^2 as strings of length at most 2.

For a 2-pre-admissible quiver every indecomposable is a string module whose
word has at most two letters, so the whole category is a finite list.  A word
is a tuple of letters; ``"a3"`` is the arrow ``a3`` read forwards and ``"-a3"``
read backwards.  Simples have the empty word and carry their vertex instead.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from qct.admissibility import (
    FlowPath,
    divisor_lattice,
    enumerate_flow_paths,
    is_n_admissible,
    is_n_pre_admissible,
    q_values,
)
from qct.errors import DegreeError, NotAdmissibleError, NotPreAdmissibleError, ShapeError
from qct.quiver import Quiver, classify_shape, degree


def _letter(arrow_id: str, inverse: bool) -> str:
    return f"-{arrow_id}" if inverse else arrow_id


def _split(letter: str) -> tuple[str, bool]:
    return (letter[1:], True) if letter.startswith("-") else (letter, False)


def _invert(word: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(_letter(a, not inv) for a, inv in (_split(x) for x in reversed(word)))


def _word_key(q: Quiver, word: tuple[str, ...]) -> list[tuple[int, int]]:
    return [(q.arrow_index[a], int(inv)) for a, inv in (_split(x) for x in word)]


def _sorted_vertices(q: Quiver, vs: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(vs, key=q.index.__getitem__))


@dataclass(frozen=True)
class StringModule:
    """An indecomposable module given by a canonical word.

    Only ``word`` and ``vertex`` take part in equality; the other fields are
    views computed from the quiver when the module is built.
    """

    word: tuple[str, ...]
    vertex: str | None = None
    top: tuple[str, ...] = field(default=(), compare=False)
    socle: tuple[str, ...] = field(default=(), compare=False)
    dim: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_simple(self) -> bool:
        return not self.word

    @property
    def total_dim(self) -> int:
        return sum(c for _, c in self.dim)

    @property
    def dim_vector(self) -> dict[str, int]:
        return dict(self.dim)

    @property
    def label(self) -> str:
        if self.is_simple:
            return self.vertex
        return f"{' '.join(self.top)}/{' '.join(self.socle)}"

    def __str__(self) -> str:
        return self.label

    def sort_key(self, q: Quiver):
        if self.is_simple:
            return (0, [(q.index[self.vertex], 0)])
        return (self.length, _word_key(q, self.word))

    def to_json(self) -> dict:
        out = {
            "word": list(self.word),
            "top": list(self.top),
            "socle": list(self.socle),
            "dim": dict(self.dim),
            "label": self.label,
        }
        if self.is_simple:
            out["vertex"] = self.vertex
        return out


def _walk(q: Quiver, word: tuple[str, ...]) -> list[str]:
    """Vertices visited by a word, or raise ValueError if it is not a walk."""
    verts: list[str] = []
    for x in word:
        a, inv = _split(x)
        if a not in q.arrow_by_id:
            raise ValueError(f"unknown arrow {a!r}")
        arr = q.arrow_by_id[a]
        s, t = (arr.target, arr.source) if inv else (arr.source, arr.target)
        if verts and verts[-1] != s:
            raise ValueError(f"word {word} is not a walk")
        if not verts:
            verts.append(s)
        verts.append(t)
    return verts


def string_module(q: Quiver, word: Iterable[str]) -> StringModule:
    """Build the module of a word with one or two letters, in canonical form."""
    word = tuple(word)
    if not 1 <= len(word) <= 2:
        raise ValueError("use simple() for the empty word; longer words vanish under J^2")
    verts = _walk(q, word)
    if len(word) == 2:
        (a, ia), (b, ib) = _split(word[0]), _split(word[1])
        if ia == ib:
            raise ValueError(f"word {word} contains a path of length 2")
        if a == b:
            raise ValueError(f"word {word} is not reduced")
    inv = _invert(word)
    if _word_key(q, inv) < _word_key(q, word):
        word, verts = inv, verts[::-1]
    top, socle = _top_socle(word, verts)
    dims = Counter(verts)
    return StringModule(
        word,
        None,
        _sorted_vertices(q, top),
        _sorted_vertices(q, socle),
        tuple((v, dims[v]) for v in q.vertices if dims[v]),
    )


def _top_socle(word: tuple[str, ...], verts: list[str]) -> tuple[list[str], list[str]]:
    """Positions of the walk that are sources (top) or sinks (socle) of the letters."""
    top, socle = [], []
    for i, v in enumerate(verts):
        is_low = False
        if i > 0:
            _, back = _split(word[i - 1])
            is_low |= not back  # forward letter ends here
        if i < len(word):
            _, back = _split(word[i])
            is_low |= back  # backward letter starts at its target
        (socle if is_low else top).append(v)
    return top, socle


def simple(q: Quiver, v: str) -> StringModule:
    q.check_vertex(v)
    return StringModule((), v, (v,), (v,), ((v, 1),))


def _check_small(q: Quiver, v: str, count: int, what: str) -> None:
    if count > 2:
        raise NotPreAdmissibleError(f"{what} of vertex {v} has more than two arrows")


def projective(q: Quiver, v: str) -> StringModule:
    q.check_vertex(v)
    outs = q.out_arrows[v]
    _check_small(q, v, len(outs), "projective")
    if not outs:
        return simple(q, v)
    if len(outs) == 1:
        return string_module(q, (outs[0].id,))
    return string_module(q, (_letter(outs[0].id, True), outs[1].id))


def injective(q: Quiver, v: str) -> StringModule:
    q.check_vertex(v)
    ins = q.in_arrows[v]
    _check_small(q, v, len(ins), "injective")
    if not ins:
        return simple(q, v)
    if len(ins) == 1:
        return string_module(q, (ins[0].id,))
    return string_module(q, (ins[0].id, _letter(ins[1].id, True)))


def _require_pre_admissible(q: Quiver) -> None:
    report = is_n_pre_admissible(q, 2)
    if not report:
        raise NotPreAdmissibleError("this operation needs a 2-pre-admissible quiver", report)


def enumerate_indecomposables(q: Quiver) -> list[StringModule]:
    """Simples, then one-letter strings, then two-letter strings."""
    _require_pre_admissible(q)
    out = [simple(q, v) for v in q.vertices]
    out += [string_module(q, (a.id,)) for a in q.arrows]
    two = set()
    for v in q.vertices:
        if len(q.out_arrows[v]) == 2:
            two.add(projective(q, v))
        if len(q.in_arrows[v]) == 2:
            two.add(injective(q, v))
    out += sorted(two, key=lambda m: m.sort_key(q))
    return out


def module_from_label(q: Quiver, label: str) -> StringModule:
    """Inverse of ``StringModule.label``; the order of vertices on each side is free."""
    text = label.strip()
    if "/" not in text:
        return simple(q, text)
    top_s, soc_s = text.split("/", 1)
    key = (sorted(top_s.split()), sorted(soc_s.split()))
    for a in q.arrows:
        m = string_module(q, (a.id,))
        if (sorted(m.top), sorted(m.socle)) == key:
            return m
    for v in q.vertices:
        for m in (projective(q, v), injective(q, v)):
            if (sorted(m.top), sorted(m.socle)) == key:
                return m
    raise ValueError(f"no indecomposable with label {label!r}")


def module_from_json(q: Quiver, obj) -> StringModule:
    if isinstance(obj, str):
        return module_from_label(q, obj)
    word = tuple(obj.get("word", ()))
    if not word:
        return simple(q, obj["vertex"])
    return string_module(q, word)


def is_projective(q: Quiver, m: StringModule) -> bool:
    return len(m.top) == 1 and projective(q, m.top[0]) == m


def is_injective(q: Quiver, m: StringModule) -> bool:
    return len(m.socle) == 1 and injective(q, m.socle[0]) == m


@dataclass(frozen=True)
class SemisimpleModule:
    vertices: tuple[str, ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.vertices

    def summands(self, q: Quiver) -> list[StringModule]:
        return [simple(q, v) for v in self.vertices]

    def __str__(self) -> str:
        return " + ".join(f"S({v})" for v in self.vertices) or "0"


def _semisimple(q: Quiver, counter: Counter) -> SemisimpleModule:
    vs = []
    for v in q.vertices:
        vs += [v] * counter[v]
    return SemisimpleModule(tuple(vs))


def syzygy(q: Quiver, m: StringModule) -> SemisimpleModule:
    """Kernel of the projective cover; semisimple because J^2 = 0."""
    rad_cover = Counter()
    for v in m.top:
        for a in q.out_arrows[v]:
            rad_cover[a.target] += 1
    rad_m = Counter() if m.is_simple else Counter(m.socle)
    diff = rad_cover - rad_m
    if rad_cover != diff + rad_m:  # pragma: no cover - guards the closed form
        raise AssertionError(f"radical of {m.label} does not embed into its cover")
    return _semisimple(q, diff)


def cosyzygy_simple(q: Quiver, v: str) -> SemisimpleModule:
    q.check_vertex(v)
    return _semisimple(q, Counter(a.source for a in q.in_arrows[v]))


def tau_inverse_simple(q: Quiver, v: str) -> "ModuleList":
    """Inverse AR translate of S(v) from the in-degree of v.

    With a single arrow w -> v it is the cokernel of S(v) into P(w): the simple
    S(w) when w has no other arrow out, else the one-letter string of w's other
    arrow.  With two arrows in it is I(v).
    """
    q.check_vertex(v)
    ins = q.in_arrows[v]
    if not ins:
        return ModuleList(())
    if len(ins) == 2:
        return ModuleList((injective(q, v),))
    alpha = ins[0]
    others = [b for b in q.out_arrows[alpha.source] if b.id != alpha.id]
    if not others:
        return ModuleList((simple(q, alpha.source),))
    if len(others) > 1:  # pragma: no cover - excluded by pre-admissibility
        raise AssertionError("cokernel is not indecomposable")
    return ModuleList((string_module(q, (others[0].id,)),))


def flow_projective(q: Quiver, fp: FlowPath) -> StringModule:
    if degree(q, fp.last).incoming == 1:
        return projective(q, fp.last)
    return projective(q, fp.context.plus1)


def flow_injective(q: Quiver, fp: FlowPath) -> StringModule:
    if degree(q, fp.first).outgoing == 1:
        return injective(q, fp.first)
    return injective(q, fp.context.minus1)


def tau_n_orbit(q: Quiver, fp: FlowPath, n: int) -> list[StringModule]:
    """P(v), then the simples S(v_{k-jn+qk}) for 0 < j < p, then I(v); p = (k+q)/n."""
    report = is_n_admissible(q, n)
    if not report:
        raise NotAdmissibleError(f"quiver is not {n}-admissible", report)
    qv = q_values(fp, q)
    p = qv.total // n
    orbit = [flow_projective(q, fp)]
    for j in range(1, p):
        orbit.append(simple(q, fp.vertices[qv.k - j * n + qv.qk - 1]))
    orbit.append(flow_injective(q, fp))
    return orbit


def tau2_inverse_22(q: Quiver, v: str) -> StringModule:
    if degree(q, v) != (2, 2):
        raise DegreeError(f"vertex {v} has degree {degree(q, v)}, expected (2,2)")
    _require_pre_admissible(q)
    return injective(q, v)


@dataclass(frozen=True, eq=False)
class ModuleList:
    """A finite direct sum of indecomposables.

    Equality and inclusion compare the sets of indecomposable summands, which
    is what determines the additive closure; multiplicities only matter for
    :attr:`is_basic`.
    """

    items: tuple[StringModule, ...] = ()

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, m) -> bool:
        return m in self.indecomposables

    @property
    def indecomposables(self) -> frozenset[StringModule]:
        return frozenset(self.items)

    @property
    def is_basic(self) -> bool:
        return len(set(self.items)) == len(self.items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleList):
            return NotImplemented
        return self.indecomposables == other.indecomposables

    def __hash__(self) -> int:
        return hash(self.indecomposables)

    def __le__(self, other: "ModuleList") -> bool:
        return self.indecomposables <= other.indecomposables

    def issubset(self, other: "ModuleList") -> bool:
        return self <= other

    def labels(self) -> list[str]:
        return [m.label for m in self.items]

    def to_json(self) -> list[dict]:
        return [m.to_json() for m in self.items]

    @classmethod
    def from_json(cls, q: Quiver, data) -> "ModuleList":
        return cls(tuple(module_from_json(q, x) for x in data))


def _dedupe(items: Iterable[StringModule]) -> tuple[StringModule, ...]:
    return tuple(dict.fromkeys(items))


def build_M(q: Quiver, n: int) -> ModuleList:
    """The basic n-cluster tilting module of an n-admissible quiver (not a cycle)."""
    shape = classify_shape(q)
    if shape.is_cycle:
        raise ShapeError("oriented cycles have a family of answers; use cycle_family")
    report = is_n_admissible(q, n)
    if not report:
        raise NotAdmissibleError(f"quiver is not {n}-admissible", report)
    projs = [projective(q, v) for v in q.vertices]
    middle = []
    for fp in enumerate_flow_paths(q):
        middle += tau_n_orbit(q, fp, n)[1:-1]
    injs = [injective(q, v) for v in q.vertices]
    items = _dedupe(projs + middle + injs)
    result = ModuleList(items)
    if len(items) != len(projs) + len(middle) + len(set(injs) - set(projs)):
        raise AssertionError("M is not basic")  # pragma: no cover
    return result


def cycle_family(q: Quiver, n: int, field: int = 2) -> list[ModuleList]:
    """Generator sets for the oriented m-cycle, one per starting simple, deduplicated.

    The n-translates of the starting simple are computed by the oracle.
    """
    shape = classify_shape(q)
    if not shape.is_cycle:
        raise ShapeError("cycle_family needs an oriented cycle")
    if n < 2 or shape.m % n:
        raise NotAdmissibleError(f"n={n} does not divide the cycle length {shape.m}")
    from qct.oracle import Oracle

    orc = Oracle(q, field)
    projs = [projective(q, v) for v in q.vertices]
    seen: set[frozenset] = set()
    out = []
    for v in q.vertices:
        orbit = [simple(q, v)]
        for _ in range(shape.m // n - 1):
            nxt = orc.tau_n_inverse(orbit[-1], n)
            if len(nxt) != 1:  # pragma: no cover
                raise AssertionError("translate of a simple is not indecomposable")
            orbit.append(nxt[0])
        member = ModuleList(_dedupe(projs + orbit))
        if member.indecomposables not in seen:
            seen.add(member.indecomposables)
            out.append(member)
    return out


def cluster_tilting_subcategories(q: Quiver, n: int, field: int = 2) -> list[ModuleList]:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [ModuleList(tuple(enumerate_indecomposables(q)))]
    if not is_n_admissible(q, n):
        return []
    if classify_shape(q).is_cycle:
        return cycle_family(q, n, field)
    return [build_M(q, n)]


@dataclass(frozen=True)
class CTLattice:
    """n-cluster tilting subcategories indexed by the divisors of N.

    ``covers`` holds pairs (a, b) where C_a is a maximal proper subcategory of
    C_b; then a = b * prime, since a larger n gives a smaller subcategory.
    """

    N: int
    subcats: tuple[tuple[int, ModuleList], ...]
    covers: tuple[tuple[int, int], ...]

    def __getitem__(self, n: int) -> ModuleList:
        return dict(self.subcats)[n]

    @property
    def indices(self) -> list[int]:
        return [n for n, _ in self.subcats]

    def meet(self, a: int, b: int) -> ModuleList:
        from math import lcm

        return self[lcm(a, b)]

    def join(self, a: int, b: int) -> ModuleList:
        from math import gcd

        return self[gcd(a, b)]

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "subcategories": [
                {"n": n, "size": len(gens.indecomposables), "generators": gens.to_json()}
                for n, gens in self.subcats
            ],
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self) -> str:
        lines = ["digraph ct_lattice {", "  rankdir=BT;"]
        for n, gens in self.subcats:
            lines.append(f'  "C{n}" [label="C_{n} ({len(gens.indecomposables)})"];')
        for small, big in self.covers:
            lines.append(f'  "C{small}" -> "C{big}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def lattice_of_ct(q: Quiver, field: int = 2) -> CTLattice:
    from qct.admissibility import admissible_degree

    if classify_shape(q).is_cycle:
        raise ShapeError("the lattice statement excludes oriented cycles")
    N = admissible_degree(q)
    lat = divisor_lattice(N)
    subcats = tuple((d, cluster_tilting_subcategories(q, d, field)[0]) for d in lat.divisors)
    # d | d*p in the divisor order means C_{d*p} sits inside C_d
    covers = tuple((big_n, small_n) for small_n, big_n in lat.covers)
    return CTLattice(N, subcats, covers)
