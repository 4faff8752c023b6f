"""A per-quiver cache tying the catalogue of indecomposables to the homological routines."""
from __future__ import annotations

from functools import cached_property

import numpy as np

from qct.errors import QCTError
from qct.modules import StringModule, enumerate_indecomposables, is_injective, is_projective
from qct.oracle import homology as hom
from qct.oracle.representation import Representation, direct_sum, hom_dim, realize, zero_rep
from qct.quiver import Quiver


class DecompositionError(QCTError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class Oracle:
    """Brute-force homological algebra for kQ/J^2 over GF(p).

    Everything is computed from explicit matrices; the closed formulas in
    :mod:`qct.modules` are used only to list the indecomposables and to name
    the summands found by :meth:`decompose`.
    """

    def __init__(self, q: Quiver, p: int = 2, max_resolution: int = hom.DEFAULT_MAX_RESOLUTION):
        if not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        self.quiver = q
        self.p = p
        self.max_resolution = max_resolution
        self._reps: dict[StringModule, Representation] = {}
        self._res: dict[StringModule, hom.Resolution] = {}
        self._ext: dict[tuple[StringModule, StringModule, int], int] = {}

    # -- catalogue ----------------------------------------------------------

    @cached_property
    def catalogue(self) -> list[StringModule]:
        return enumerate_indecomposables(self.quiver)

    def rep(self, m) -> Representation:
        if isinstance(m, Representation):
            return m
        if m not in self._reps:
            self._reps[m] = realize(self.quiver, m, self.p)
        return self._reps[m]

    def sum_rep(self, mods) -> Representation:
        mods = list(mods)
        if not mods:
            return zero_rep(self.quiver, self.p)
        return direct_sum([self.rep(m) for m in mods])

    @cached_property
    def projectives(self) -> set[StringModule]:
        return {m for m in self.catalogue if is_projective(self.quiver, m)}

    @cached_property
    def injectives(self) -> set[StringModule]:
        return {m for m in self.catalogue if is_injective(self.quiver, m)}

    @cached_property
    def hom_matrix(self) -> np.ndarray:
        """hom_matrix[i, j] = dim Hom(catalogue[i], catalogue[j])."""
        cat = self.catalogue
        g = np.zeros((len(cat), len(cat)), dtype=np.int64)
        for i, a in enumerate(cat):
            for j, b in enumerate(cat):
                g[i, j] = hom_dim(self.rep(a), self.rep(b))
        return g

    def hom_dim(self, a, b) -> int:
        return hom_dim(self.rep(a), self.rep(b))

    # -- decomposition ------------------------------------------------------------

    def decompose(self, x: Representation) -> list[StringModule]:
        """Indecomposable summands of ``x`` (with multiplicity), matched by Hom fingerprints."""
        if x.is_zero:
            return []
        cat = self.catalogue
        to_x = np.array([hom_dim(self.rep(z), x) for z in cat], dtype=np.int64)
        from_x = np.array([hom_dim(x, self.rep(z)) for z in cat], dtype=np.int64)
        g = self.hom_matrix
        system = np.concatenate([g, g.T], axis=0)
        rhs = np.concatenate([to_x, from_x])
        sol, *_ = np.linalg.lstsq(system.astype(float), rhs.astype(float), rcond=None)
        mult = np.rint(sol).astype(np.int64)
        if np.any(mult < 0) or not np.array_equal(system @ mult, rhs):
            raise DecompositionError(f"no decomposition of {x} matches its Hom fingerprint")
        out: list[StringModule] = []
        dims = {v: 0 for v in self.quiver.vertices}
        for m, k in zip(cat, mult):
            out += [m] * int(k)
            for v, d in m.dim:
                dims[v] += d * int(k)
        if any(dims[v] != x.dim(v) for v in self.quiver.vertices):
            raise DecompositionError(f"dimension vector mismatch while decomposing {x}")
        return out

    def indecomposable(self, x: Representation) -> StringModule | None:
        """The single summand of ``x``, None for zero; raises if ``x`` decomposes."""
        parts = self.decompose(x)
        if not parts:
            return None
        if len(parts) != 1:
            raise DecompositionError(f"expected an indecomposable, got {[m.label for m in parts]}")
        return parts[0]

    # -- resolutions and Ext ---------------------------------------------------------

    def resolution(self, m) -> hom.Resolution:
        if isinstance(m, Representation):
            return hom.Resolution(m, self.max_resolution)
        if m not in self._res:
            self._res[m] = hom.Resolution(self.rep(m), self.max_resolution)
        return self._res[m]

    def ext_dim(self, a, b, i: int) -> int:
        key = (a, b, i) if isinstance(a, StringModule) and isinstance(b, StringModule) else None
        if key is not None and key in self._ext:
            return self._ext[key]
        val = hom.ext_dim_from_resolution(self.resolution(a), self.rep(b), i)
        if key is not None:
            self._ext[key] = val
        return val

    def ext_simple(self, a, v: str, i: int) -> int:
        """Second Ext oracle: multiplicity of P(v) in the i-th resolution term."""
        return hom.ext_dim_simple(self.resolution(a), v, i)

    # -- syzygies and translates -------------------------------------------------------

    def syzygy(self, m) -> list[StringModule]:
        return self.decompose(hom.syzygy_rep(self.rep(m)))

    def cosyzygy(self, m) -> list[StringModule]:
        return self.decompose(hom.cosyzygy_rep(self.rep(m)))

    def tau(self, m) -> list[StringModule]:
        return self.decompose(hom.tau(self.rep(m), self.max_resolution))

    def tau_inverse(self, m) -> list[StringModule]:
        return self.decompose(hom.tau_inverse(self.rep(m), self.max_resolution))

    def tau_n_inverse(self, m, n: int) -> list[StringModule]:
        return self.decompose(hom.tau_n_inverse_rep(self.rep(m), n))

    def tau_n(self, m, n: int) -> list[StringModule]:
        return self.decompose(hom.tau_n_rep(self.rep(m), n))

    def omega_power(self, m, n: int) -> list[StringModule]:
        """Summands of Omega^n(m), computed by iterated projective covers."""
        x = self.rep(m)
        for _ in range(n):
            x = hom.syzygy_rep(x)
            if x.is_zero:
                break
        return self.decompose(x)
