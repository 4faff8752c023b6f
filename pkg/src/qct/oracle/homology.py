"""Projective covers, minimal resolutions, Ext and the AR translates."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from qct import linalg as la
from qct.errors import ResolutionCapExceeded
from qct.oracle.representation import (
    Morphism,
    ProjectiveSum,
    Representation,
    _opposite,
    cokernel,
    dual,
    kernel,
    morphism_from_generators,
    zero_rep,
)

DEFAULT_MAX_RESOLUTION = 64


def projective_cover(x: Representation) -> tuple[ProjectiveSum, Morphism]:
    """Minimal projective cover: one generator per basis vector of a complement of rad X."""
    q, p = x.quiver, x.p
    tops, images = [], []
    for v in q.vertices:
        d = x.dim(v)
        if d == 0:
            continue
        cols = [x.map(a.id) for a in q.in_arrows[v] if x.dim(a.source)]
        span = la.column_space(np.concatenate(cols, axis=1), p) if cols else la.zeros(d, 0)
        comp = la.complement_columns(span, d, p)
        for c in range(comp.shape[1]):
            tops.append(v)
            images.append(comp[:, c])
    ps = ProjectiveSum(q, tops, p)
    return ps, morphism_from_generators(ps, x, images)


def syzygy_rep(x: Representation) -> Representation:
    _, cover = projective_cover(x)
    return kernel(cover)[0]


def cosyzygy_rep(x: Representation) -> Representation:
    """Cokernel of the injective envelope, computed as D Omega D."""
    return dual(syzygy_rep(dual(x)))


@dataclass
class Resolution:
    """Minimal projective resolution, extended on demand.

    ``terms[i]`` is P_i; ``diffs[i]`` (i >= 1) is the matrix of d_i : P_i -> P_{i-1}
    whose column j is the image of generator j of P_i in the labelled basis of
    P_{i-1}.  ``kernels[i]`` is the kernel of P_i -> P_{i-1} (of P_0 -> X for i = 0).
    """

    module: Representation
    max_length: int = DEFAULT_MAX_RESOLUTION
    terms: list[ProjectiveSum] = field(default_factory=list)
    diffs: list[np.ndarray | None] = field(default_factory=list)
    kernels: list[tuple[Representation, Morphism]] = field(default_factory=list)

    def __post_init__(self):
        if not self.terms:
            ps, cover = projective_cover(self.module)
            self.terms.append(ps)
            self.diffs.append(None)
            self.kernels.append(kernel(cover))

    @property
    def length(self) -> int:
        """Index of the last computed term."""
        return len(self.terms) - 1

    def extend_to(self, i: int) -> None:
        if i > self.max_length:
            raise ResolutionCapExceeded(
                f"resolution term {i} requested but the cap is {self.max_length}"
            )
        while self.length < i:
            k, incl = self.kernels[-1]
            prev = self.terms[-1]
            ps, cover = projective_cover(k)
            into_prev = cover.then(incl)
            d = la.zeros(prev.rep.total_dim, len(ps))
            for j, v in enumerate(ps.tops):
                col = into_prev.block(v)[:, ps.pos[(j, None)][1]]
                off = prev.rep.offsets[v]
                d[off:off + len(col), j] = col
            self.terms.append(ps)
            self.diffs.append(d)
            self.kernels.append(kernel(into_prev))

    def term(self, i: int) -> ProjectiveSum:
        self.extend_to(i)
        return self.terms[i]

    def tops(self, i: int) -> list[str]:
        return self.term(i).tops

    def is_minimal(self) -> bool:
        """Every differential lands in the radical: no generator coordinates are hit."""
        p = self.module.p
        for i in range(1, self.length + 1):
            prev, d = self.terms[i - 1], self.diffs[i]
            rows = [prev.global_index((j, None)) for j in range(len(prev))]
            if rows and d.size and not la.is_zero(d[rows, :], p):
                return False
        return True

    def composes_to_zero(self) -> bool:
        p = self.module.p
        for i in range(2, self.length + 1):
            a = _as_global_map(self.terms[i - 1], self.terms[i - 2], self.diffs[i - 1])
            if a.size and self.diffs[i].size and not la.is_zero(la.matmul(a, self.diffs[i], p), p):
                return False
        return True


def _as_global_map(src: ProjectiveSum, tgt: ProjectiveSum, d: np.ndarray) -> np.ndarray:
    """The full matrix of a map between projective sums given by generator images."""
    p = src.p
    full = la.zeros(tgt.rep.total_dim, src.rep.total_dim)
    for lab in src.global_labels():
        j, arr = lab
        col = d[:, j]
        if arr is not None:
            col = la.matmul(_arrow_global(tgt, arr), col.reshape(-1, 1), p).reshape(-1)
        full[:, src.global_index(lab)] = col
    return full


def _arrow_global(ps: ProjectiveSum, arrow_id: str) -> np.ndarray:
    """Action of one arrow on the whole space of a projective sum."""
    q = ps.quiver
    a = q.arrow_by_id[arrow_id]
    n = ps.rep.total_dim
    m = la.zeros(n, n)
    blk = ps.rep.map(arrow_id)
    rs, cs = ps.rep.offsets[a.target], ps.rep.offsets[a.source]
    m[rs:rs + blk.shape[0], cs:cs + blk.shape[1]] = blk
    return m


def _coefficients(prev: ProjectiveSum, d: np.ndarray, l: int, j: int):
    """Coefficient of generator l and of its arrow elements in d(generator j)."""
    gen = d[prev.global_index((l, None)), j]
    arrows = {}
    for a in prev.quiver.out_arrows[prev.tops[l]]:
        arrows[a.id] = d[prev.global_index((l, a.id)), j]
    return gen, arrows


def induced_on_hom(prev: ProjectiveSum, cur: ProjectiveSum, d: np.ndarray, b: Representation) -> np.ndarray:
    """Matrix of Hom(d, B) : Hom(P_prev, B) -> Hom(P_cur, B) using Hom(P, B) = sum of B at the tops."""
    p = b.p
    row_off, acc = [], 0
    for v in cur.tops:
        row_off.append(acc)
        acc += b.dim(v)
    n_rows = acc
    col_off, acc = [], 0
    for v in prev.tops:
        col_off.append(acc)
        acc += b.dim(v)
    m = la.zeros(n_rows, acc)
    for j, vj in enumerate(cur.tops):
        dj = b.dim(vj)
        if dj == 0:
            continue
        for l, vl in enumerate(prev.tops):
            dl = b.dim(vl)
            if dl == 0:
                continue
            gen, arrows = _coefficients(prev, d, l, j)
            blk = la.zeros(dj, dl)
            if gen and vj == vl:
                blk = (blk + gen * la.identity(dj)) % p
            for aid, c in arrows.items():
                if c:
                    blk = (blk + c * b.map(aid)) % p
            m[row_off[j]:row_off[j] + dj, col_off[l]:col_off[l] + dl] = blk
    return m


def hom_from_projective_dim(ps: ProjectiveSum, b: Representation) -> int:
    return sum(b.dim(v) for v in ps.tops)


def ext_dim_from_resolution(res: Resolution, b: Representation, i: int) -> int:
    if i < 1:
        raise ValueError("Ext degree must be at least 1")
    res.extend_to(i + 1)
    p = b.p
    hom_i = hom_from_projective_dim(res.terms[i], b)
    if hom_i == 0:
        return 0
    out_rank = la.rank(induced_on_hom(res.terms[i], res.terms[i + 1], res.diffs[i + 1], b), p)
    in_rank = la.rank(induced_on_hom(res.terms[i - 1], res.terms[i], res.diffs[i], b), p)
    return hom_i - out_rank - in_rank


def ext_dim(a: Representation, b: Representation, i: int, max_length: int | None = None) -> int:
    """dim Ext^i(a, b) from a minimal projective resolution of ``a``."""
    res = Resolution(a, DEFAULT_MAX_RESOLUTION if max_length is None else max_length)
    return ext_dim_from_resolution(res, b, i)


def ext_dim_simple(res: Resolution, v: str, i: int) -> int:
    """dim Ext^i(X, S(v)): multiplicity of P(v) in the i-th term of a minimal resolution."""
    return res.tops(i).count(v)


# -- transpose and translates ---------------------------------------------------------

def transpose(x: Representation, max_length: int = DEFAULT_MAX_RESOLUTION) -> Representation:
    """Tr X, a representation of the opposite quiver."""
    res = Resolution(x, max_length)
    res.extend_to(1)
    p0, p1, d1 = res.terms[0], res.terms[1], res.diffs[1]
    op = _opposite(x.quiver)
    if len(p1) == 0:
        return zero_rep(op, x.p)
    p0s = ProjectiveSum(op, p0.tops, x.p)
    p1s = ProjectiveSum(op, p1.tops, x.p)
    images = []
    for l in range(len(p0)):
        vec = la.zeros(p1s.rep.dim(p0.tops[l]), 1)[:, 0]
        for j in range(len(p1)):
            gen, arrows = _coefficients(p0, d1, l, j)
            if gen:
                vec[p1s.pos[(j, None)][1]] += gen
            for aid, c in arrows.items():
                if c:
                    vec[p1s.pos[(j, aid)][1]] += c
        images.append(vec % x.p)
    f = morphism_from_generators(p0s, p1s.rep, images)
    return cokernel(f)[0]


def tau(x: Representation, max_length: int = DEFAULT_MAX_RESOLUTION) -> Representation:
    """D Tr X; zero for projective X."""
    return dual(transpose(x, max_length))


def tau_inverse(x: Representation, max_length: int = DEFAULT_MAX_RESOLUTION) -> Representation:
    """Tr D X; zero for injective X."""
    return transpose(dual(x), max_length)


def auslander_reiten_translate(x: Representation, direction: str = "forward") -> Representation:
    """``forward`` gives D Tr, ``inverse`` gives Tr D.

    Projective input to ``forward`` (injective input to ``inverse``) yields the
    zero representation; check ``.is_zero`` on the result.
    """
    if direction == "forward":
        return tau(x)
    if direction == "inverse":
        return tau_inverse(x)
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def tau_n_inverse_rep(x: Representation, n: int) -> Representation:
    """tau^- Omega^{-(n-1)} X."""
    y = x
    for _ in range(n - 1):
        y = cosyzygy_rep(y)
        if y.is_zero:
            return y
    return tau_inverse(y)


def tau_n_rep(x: Representation, n: int) -> Representation:
    """tau Omega^{n-1} X."""
    y = x
    for _ in range(n - 1):
        y = syzygy_rep(y)
        if y.is_zero:
            return y
    return tau(y)
