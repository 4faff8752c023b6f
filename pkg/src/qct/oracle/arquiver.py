"""The Auslander-Reiten quiver from irreducible maps rad / rad^2."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from qct import linalg as la
from qct.modules import StringModule
from qct.oracle.core import Oracle
from qct.oracle.representation import Morphism, hom_basis, morphism_from_vec
from qct.quiver import Quiver


@dataclass
class ARQuiver:
    nodes: list[StringModule]
    arrows: list[tuple[StringModule, StringModule, int]]
    tau_pairs: list[tuple[StringModule, StringModule]]  # (X, tau X)

    @property
    def edge_count(self) -> int:
        return sum(k for _, _, k in self.arrows)

    def into(self, x: StringModule) -> Counter:
        return Counter({a: k for a, b, k in self.arrows if b == x})

    def out_of(self, x: StringModule) -> Counter:
        return Counter({b: k for a, b, k in self.arrows if a == x})

    def mesh_failures(self) -> list[StringModule]:
        """Non-projective X whose incoming arrows differ from the outgoing arrows of tau X."""
        return [x for x, tx in self.tau_pairs if self.into(x) != self.out_of(tx)]

    def to_json(self) -> dict:
        return {
            "nodes": [m.label for m in self.nodes],
            "arrows": [{"from": a.label, "to": b.label, "multiplicity": k} for a, b, k in self.arrows],
            "tau": [{"module": x.label, "tau": t.label} for x, t in self.tau_pairs],
        }

    def to_dot(self) -> str:
        ids = {m: f"m{i}" for i, m in enumerate(self.nodes)}
        lines = ["digraph ar_quiver {", "  rankdir=LR;"]
        for m in self.nodes:
            lines.append(f'  {ids[m]} [label="{m.label}"];')
        for a, b, k in self.arrows:
            for _ in range(k):
                lines.append(f"  {ids[a]} -> {ids[b]};")
        for x, t in self.tau_pairs:
            lines.append(f"  {ids[x]} -> {ids[t]} [style=dashed, constraint=false, arrowhead=none];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _rad_end_basis(orc: Oracle, x: StringModule, basis: np.ndarray) -> np.ndarray:
    """Non-invertible part of End(X): each basis map minus its residue scalar."""
    rep = orc.rep(x)
    p = orc.p
    ident_vec = np.concatenate([la.identity(d).reshape(-1) for d in rep.dims])
    cols = []
    for c in range(basis.shape[1]):
        vec = basis[:, c]
        for lam in range(p):
            shifted = (vec - lam * ident_vec) % p
            if not morphism_from_vec(rep, rep, shifted).is_iso():
                cols.append(shifted)
                break
        else:  # pragma: no cover - End(X) is local
            raise AssertionError(f"endomorphism ring of {x.label} is not local")
    if not cols:
        return la.zeros(basis.shape[0], 0)
    return la.column_space(np.stack(cols, axis=1), p)


def ar_quiver(q: Quiver, field: int = 2, oracle: Oracle | None = None) -> ARQuiver:
    orc = oracle or Oracle(q, field)
    cat = orc.catalogue
    p = orc.p
    rad: dict[tuple[StringModule, StringModule], list[Morphism]] = {}
    for x in cat:
        for y in cat:
            if orc.hom_matrix[cat.index(x), cat.index(y)] == 0:
                continue
            basis = hom_basis(orc.rep(x), orc.rep(y))
            if x == y:
                basis = _rad_end_basis(orc, x, basis)
            if basis.shape[1]:
                rad[(x, y)] = [morphism_from_vec(orc.rep(x), orc.rep(y), basis[:, c]) for c in range(basis.shape[1])]
    arrows = []
    for x in cat:
        for y in cat:
            first = rad.get((x, y))
            if not first:
                continue
            composites = []
            for z in cat:
                fs, gs = rad.get((x, z)), rad.get((z, y))
                if not fs or not gs:
                    continue
                for f in fs:
                    for g in gs:
                        composites.append(f.then(g).vec())
            r2 = la.rank(np.stack(composites, axis=1) % p, p) if composites else 0
            k = len(first) - r2
            if k:
                arrows.append((x, y, k))
    tau_pairs = []
    for x in cat:
        if x in orc.projectives:
            continue
        tx = orc.tau(x)
        if len(tx) != 1:  # pragma: no cover
            raise AssertionError(f"tau of {x.label} is not indecomposable")
        tau_pairs.append((x, tx[0]))
    return ARQuiver(list(cat), arrows, tau_pairs)
