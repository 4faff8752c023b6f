"""Representations of a quiver bound by J^2 over GF(p), and maps between them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from qct import linalg as la
from qct.modules import StringModule, _split
from qct.quiver import Quiver


def _opposite(q: Quiver) -> Quiver:
    op = q.opposite
    # make the opposite of the opposite the original object
    op.__dict__.setdefault("opposite", q)
    return op


@dataclass(frozen=True, eq=False)
class Representation:
    """``dims[i]`` is the space at vertex ``quiver.vertices[i]``; ``maps[j]`` is the
    matrix of arrow ``quiver.arrows[j]``, of shape dim(target) x dim(source)."""

    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[np.ndarray, ...]
    p: int = 2

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != len(q.vertices) or len(self.maps) != len(q.arrows):
            raise ValueError("dimension data does not match the quiver")
        fixed = []
        for a, m in zip(q.arrows, self.maps):
            m = np.asarray(m, dtype=np.int64) % self.p
            want = (self.dims[q.index[a.target]], self.dims[q.index[a.source]])
            if m.shape != want:
                raise ValueError(f"arrow {a.id}: matrix shape {m.shape}, expected {want}")
            fixed.append(m)
        object.__setattr__(self, "maps", tuple(fixed))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        for a in q.arrows:
            for b in q.out_arrows[a.target]:
                prod = la.matmul(self.map(b.id), self.map(a.id), self.p)
                if not la.is_zero(prod, self.p):
                    raise AssertionError(f"J^2 relation fails on {a.id} then {b.id}")

    def dim(self, v: str) -> int:
        return self.dims[self.quiver.index[v]]

    def map(self, arrow_id: str) -> np.ndarray:
        return self.maps[self.quiver.arrow_index[arrow_id]]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.total_dim == 0

    @property
    def dim_vector(self) -> dict[str, int]:
        return {v: d for v, d in zip(self.quiver.vertices, self.dims) if d}

    @cached_property
    def offsets(self) -> dict[str, int]:
        out, acc = {}, 0
        for v, d in zip(self.quiver.vertices, self.dims):
            out[v] = acc
            acc += d
        return out

    def radical_rank(self) -> int:
        """Dimension of rad X = sum of the images of all arrows."""
        total = 0
        for v in self.quiver.vertices:
            cols = [self.map(a.id) for a in self.quiver.in_arrows[v]]
            if cols and self.dim(v):
                total += la.rank(np.concatenate(cols, axis=1), self.p)
        return total

    def __repr__(self) -> str:
        return f"Representation({self.dim_vector}, p={self.p})"


def zero_rep(q: Quiver, p: int) -> Representation:
    return Representation(q, (0,) * len(q.vertices), tuple(la.zeros(0, 0) for _ in q.arrows), p)


def direct_sum(reps: list[Representation]) -> Representation:
    q, p = reps[0].quiver, reps[0].p
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(len(q.vertices)))
    maps = []
    for a in q.arrows:
        blocks = [r.map(a.id) for r in reps]
        m = la.zeros(sum(b.shape[0] for b in blocks), sum(b.shape[1] for b in blocks))
        r0 = c0 = 0
        for b in blocks:
            m[r0:r0 + b.shape[0], c0:c0 + b.shape[1]] = b
            r0 += b.shape[0]
            c0 += b.shape[1]
        maps.append(m)
    return Representation(q, dims, tuple(maps), p)


def dual(x: Representation) -> Representation:
    """D X = Hom_k(X, k), a representation of the opposite quiver."""
    return Representation(_opposite(x.quiver), x.dims, tuple(m.T.copy() for m in x.maps), x.p)


def realize(q: Quiver, m: StringModule, p: int = 2) -> Representation:
    """The string module as 0/1 matrices: one basis vector per vertex of the walk."""
    if m.is_simple:
        dims = [0] * len(q.vertices)
        dims[q.index[m.vertex]] = 1
        maps = tuple(la.zeros(dims[q.index[a.target]], dims[q.index[a.source]]) for a in q.arrows)
        return Representation(q, tuple(dims), maps, p)
    verts = []
    for x in m.word:
        a, inv = _split(x)
        arr = q.arrow_by_id[a]
        s, t = (arr.target, arr.source) if inv else (arr.source, arr.target)
        if not verts:
            verts.append(s)
        verts.append(t)
    dims = [0] * len(q.vertices)
    slot = []
    for v in verts:
        slot.append(dims[q.index[v]])
        dims[q.index[v]] += 1
    maps = {a.id: la.zeros(dims[q.index[a.target]], dims[q.index[a.source]]) for a in q.arrows}
    for i, x in enumerate(m.word):
        a, inv = _split(x)
        lo, hi = (i, i + 1) if inv else (i + 1, i)
        maps[a][slot[lo], slot[hi]] = 1
    return Representation(q, tuple(dims), tuple(maps[a.id] for a in q.arrows), p)


# -- morphisms -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Morphism:
    """Per-vertex blocks; ``blocks[i]`` has shape dim_target(v) x dim_source(v)."""

    source: Representation
    target: Representation
    blocks: tuple[np.ndarray, ...]

    def block(self, v: str) -> np.ndarray:
        return self.blocks[self.source.quiver.index[v]]

    def then(self, other: "Morphism") -> "Morphism":
        """``other`` after ``self``."""
        p = self.source.p
        return Morphism(
            self.source,
            other.target,
            tuple(la.matmul(g, f, p) for f, g in zip(self.blocks, other.blocks)),
        )

    def rank(self) -> int:
        return sum(la.rank(b, self.source.p) for b in self.blocks if b.size)

    def is_iso(self) -> bool:
        if self.source.dims != self.target.dims:
            return False
        return all(la.rank(b, self.source.p) == b.shape[0] for b in self.blocks if b.size)

    def vec(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([b.reshape(-1) for b in self.blocks])


def _hom_layout(a: Representation, b: Representation) -> tuple[dict[str, int], int]:
    off, n = {}, 0
    for v in a.quiver.vertices:
        off[v] = n
        n += b.dim(v) * a.dim(v)
    return off, n


def hom_system(a: Representation, b: Representation) -> tuple[np.ndarray, dict[str, int], int]:
    """Linear system whose kernel is Hom(a, b), in row-major vec coordinates."""
    q, p = a.quiver, a.p
    off, n = _hom_layout(a, b)
    rows = []
    for arr in q.arrows:
        s, t = arr.source, arr.target
        r = b.dim(t) * a.dim(s)
        if r == 0 or n == 0:
            continue
        m = la.zeros(r, n)
        if a.dim(t):
            m[:, off[t]:off[t] + b.dim(t) * a.dim(t)] += np.kron(la.identity(b.dim(t)), a.map(arr.id).T)
        if b.dim(s):
            m[:, off[s]:off[s] + b.dim(s) * a.dim(s)] -= np.kron(b.map(arr.id), la.identity(a.dim(s)))
        rows.append(m % p)
    system = np.concatenate(rows, axis=0) if rows else la.zeros(0, n)
    return system, off, n


def hom_dim(a: Representation, b: Representation) -> int:
    if not (set(a.dim_vector) & set(b.dim_vector)):
        return 0
    system, _, n = hom_system(a, b)
    return n - la.rank(system, a.p)


def morphism_from_vec(a: Representation, b: Representation, vec: np.ndarray) -> Morphism:
    off, _ = _hom_layout(a, b)
    blocks = []
    for v in a.quiver.vertices:
        size = b.dim(v) * a.dim(v)
        blocks.append(np.asarray(vec[off[v]:off[v] + size], dtype=np.int64).reshape(b.dim(v), a.dim(v)))
    return Morphism(a, b, tuple(blocks))


def hom_basis(a: Representation, b: Representation) -> np.ndarray:
    """Basis of Hom(a, b) as the columns of a matrix in vec coordinates."""
    system, _, n = hom_system(a, b)
    if n == 0:
        return la.zeros(0, 0)
    return la.nullspace(system, a.p)


# -- projective sums -------------------------------------------------------------

class ProjectiveSum:
    """P(tops[0]) + P(tops[1]) + ... with a labelled basis.

    The basis at vertex v consists of labels ``(j, None)`` for generators with
    top v and ``(j, arrow_id)`` for the arrow elements of summand j landing at v.
    """

    def __init__(self, q: Quiver, tops: list[str], p: int):
        self.quiver = q
        self.tops = list(tops)
        self.p = p
        at: dict[str, list] = {v: [] for v in q.vertices}
        for j, v in enumerate(self.tops):
            at[v].append((j, None))
        for j, v in enumerate(self.tops):
            for a in q.out_arrows[v]:
                at[a.target].append((j, a.id))
        self.labels_at = at
        self.pos = {lab: (v, i) for v, labs in at.items() for i, lab in enumerate(labs)}
        dims = tuple(len(at[v]) for v in q.vertices)
        maps = []
        for a in q.arrows:
            m = la.zeros(dims[q.index[a.target]], dims[q.index[a.source]])
            for i, (j, lab) in enumerate(at[a.source]):
                if lab is None:
                    m[self.pos[(j, a.id)][1], i] = 1
            maps.append(m)
        self.rep = Representation(q, dims, tuple(maps), p)

    def __len__(self) -> int:
        return len(self.tops)

    def global_index(self, label) -> int:
        v, i = self.pos[label]
        return self.rep.offsets[v] + i

    def global_labels(self) -> list:
        out = []
        for v in self.quiver.vertices:
            out += self.labels_at[v]
        return out


def morphism_from_generators(ps: ProjectiveSum, x: Representation, images: list[np.ndarray]) -> Morphism:
    """The map P -> X sending generator j to ``images[j]`` (a vector of X at tops[j])."""
    q = ps.quiver
    blocks = []
    for v in q.vertices:
        blk = la.zeros(x.dim(v), len(ps.labels_at[v]))
        for i, (j, lab) in enumerate(ps.labels_at[v]):
            y = np.asarray(images[j], dtype=np.int64)
            if lab is not None:
                y = la.matmul(x.map(lab), y.reshape(-1, 1), x.p).reshape(-1)
            blk[:, i] = y % x.p
        blocks.append(blk)
    return Morphism(ps.rep, x, tuple(blocks))


# -- kernels and cokernels ----------------------------------------------------------

def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    """Kernel object and its inclusion into ``f.source``."""
    a, p = f.source, f.source.p
    q = a.quiver
    bases = {}
    for v in q.vertices:
        blk = f.block(v)
        if a.dim(v) == 0:
            bases[v] = la.zeros(0, 0)
        elif blk.shape[0] == 0:
            bases[v] = la.identity(a.dim(v))
        else:
            bases[v] = la.nullspace(blk, p)
    dims = tuple(bases[v].shape[1] for v in q.vertices)
    maps = []
    for arr in q.arrows:
        ks, kt = bases[arr.source], bases[arr.target]
        if ks.shape[1] == 0 or kt.shape[1] == 0:
            maps.append(la.zeros(kt.shape[1], ks.shape[1]))
            continue
        img = la.matmul(a.map(arr.id), ks, p)
        maps.append(la.solve(kt, img, p))
    k = Representation(q, dims, tuple(maps), p)
    incl = Morphism(k, a, tuple(bases[v] for v in q.vertices))
    return k, incl


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    """Cokernel object and the projection from ``f.target``."""
    b, p = f.target, f.target.p
    q = b.quiver
    proj, rinv = {}, {}
    for v in q.vertices:
        blk = f.block(v)
        d = b.dim(v)
        if d == 0:
            proj[v] = la.zeros(0, 0)
        elif blk.shape[1] == 0:
            proj[v] = la.identity(d)
        else:
            proj[v] = la.left_annihilator(blk, p)
        rinv[v] = la.right_inverse(proj[v], p) if proj[v].shape[0] else la.zeros(d, 0)
    dims = tuple(proj[v].shape[0] for v in q.vertices)
    maps = []
    for arr in q.arrows:
        s, t = arr.source, arr.target
        if dims[q.index[t]] and dims[q.index[s]]:
            maps.append(la.matmul(la.matmul(proj[t], b.map(arr.id), p), rinv[s], p))
        else:
            maps.append(la.zeros(dims[q.index[t]], dims[q.index[s]]))
    c = Representation(q, dims, tuple(maps), p)
    return c, Morphism(b, c, tuple(proj[v] for v in q.vertices))
