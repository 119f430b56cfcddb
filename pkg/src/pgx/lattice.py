"""Complete subgroup lattices and the counts s_k, c_k, delta_k."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import numpy as np

from .group_core import (
    ORDER_CAP,
    GroupError,
    GroupTable,
    OrderCapError,
    SubgroupMask,
    bits_from_bool,
    closure_bool,
    group_profile,
    is_normal,
    normalizer_bool,
    quotient,
    subgroup_table,
)

__all__ = [
    "SubgroupMask",
    "SubgroupLattice",
    "enumerate_subgroups",
    "enumerate_subgroups_by_closure",
    "delta_total",
    "count_sections",
    "normal_subgroups_of_order",
    "lattice_to_dict",
    "lattice_from_dict",
]


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    group: GroupTable
    by_exponent: tuple[tuple[SubgroupMask, ...], ...]

    @property
    def complete(self) -> bool:
        return len(self.by_exponent) == self.group.exponent_n + 1

    @property
    def counts_s(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.by_exponent)

    @property
    def counts_c(self) -> tuple[int, ...]:
        return tuple(sum(1 for H in layer if H.is_cyclic) for layer in self.by_exponent)

    @property
    def counts_delta(self) -> tuple[int, ...]:
        return tuple(s - c for s, c in zip(self.counts_s, self.counts_c))

    def s(self, k: int) -> int:
        return self.counts_s[k] if 0 <= k < len(self.by_exponent) else 0

    def c(self, k: int) -> int:
        return self.counts_c[k] if 0 <= k < len(self.by_exponent) else 0

    def delta(self, k: int) -> int:
        return self.s(k) - self.c(k)

    @property
    def total_s(self) -> int:
        return sum(self.counts_s)

    @property
    def total_c(self) -> int:
        return sum(self.counts_c)

    def masks(self) -> list[SubgroupMask]:
        return [H for layer in self.by_exponent for H in layer]

    def mask_set(self) -> set[int]:
        return {H.bits for H in self.masks()}


def _finish(G: GroupTable, layers: list[list[np.ndarray]]) -> SubgroupLattice:
    out = []
    for layer in layers:
        masks = [G.mask(arr) for arr in layer]
        masks.sort(key=lambda H: H.bits)
        out.append(tuple(masks))
    return SubgroupLattice(G, tuple(out))


def enumerate_subgroups(G: GroupTable, max_exponent: int | None = None, cap: int = ORDER_CAP) -> SubgroupLattice:
    """Every subgroup of G, layer by layer.

    Each subgroup K of order p^(k+1) has a normal subgroup H of index p, so
    K = <H, g> for any g in K outside H; such g normalizes H and has g^p in H,
    and then K is the union of the cosets H g^i.  Extending each layer by
    exactly those elements reaches every subgroup.  ``max_exponent`` stops
    after that layer (the lattice is then marked incomplete).
    """
    if G.order > cap:
        raise OrderCapError(f"order {G.order} exceeds the cap {cap}")
    top = G.exponent_n if max_exponent is None else min(G.exponent_n, max_exponent)
    t = G.table
    powp = G.pth_powers
    p = G.prime
    ident = np.zeros(G.order, dtype=bool)
    ident[0] = True
    layers: list[list[np.ndarray]] = [[ident]]
    for _ in range(top):
        seen: dict[bytes, np.ndarray] = {}
        for H in layers[-1]:
            h = np.flatnonzero(H)
            cand = H[powp] & ~H
            if not G.is_abelian:
                cand &= normalizer_bool(G, arr=H)
            while True:
                rest = np.flatnonzero(cand)
                if rest.size == 0:
                    break
                g = int(rest[0])
                gp = [0]
                for _ in range(p - 1):
                    gp.append(int(t[gp[-1], g]))
                K = np.zeros(G.order, dtype=bool)
                K[t[h[:, None], np.array(gp)[None, :]].ravel()] = True
                cand &= ~K
                key = np.packbits(K).tobytes()
                if key not in seen:
                    seen[key] = K
        layers.append(list(seen.values()))
    return _finish(G, layers)


def enumerate_subgroups_by_closure(G: GroupTable) -> SubgroupLattice:
    """Closure fixpoint: start from all cyclic subgroups, adjoin one element at
    a time, deduplicate.  Quadratic in the number of subgroups; small groups."""
    seen: dict[int, np.ndarray] = {}
    work: list[np.ndarray] = []
    for x in range(G.order):
        K = closure_bool(G, [x])
        b = bits_from_bool(K)
        if b not in seen:
            seen[b] = K
            work.append(K)
    while work:
        H = work.pop()
        for g in np.flatnonzero(~H):
            K = closure_bool(G, [int(g)], start=H)
            b = bits_from_bool(K)
            if b not in seen:
                seen[b] = K
                work.append(K)
    layers: list[list[np.ndarray]] = [[] for _ in range(G.exponent_n + 1)]
    for K in seen.values():
        layers[_exp(int(K.sum()), G.prime)].append(K)
    return _finish(G, layers)


def _exp(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def delta_total(L: SubgroupLattice) -> int:
    return sum(L.counts_delta)


def normal_subgroups_of_order(G: GroupTable, k: int, lattice: SubgroupLattice | None = None) -> list[SubgroupMask]:
    if lattice is None:
        lattice = enumerate_subgroups(G, max_exponent=k)
    if k < 0 or k >= len(lattice.by_exponent):
        return []
    return [H for H in lattice.by_exponent[k] if G.is_abelian or is_normal(G, H)]


def frattini_of_subgroup(G: GroupTable, H: SubgroupMask) -> int:
    """Bits of Phi(H) = <[H, H], H^p>, computed inside G."""
    h = np.array(H.elements())
    t, inv = G.table, G.inverses
    comm = t[t[inv[h][:, None], inv[h][None, :]], t[np.ix_(h, h)]].ravel()
    gens = np.union1d(comm, G.pth_powers[h])
    return bits_from_bool(closure_bool(G, gens))


def count_sections(
    G: GroupTable,
    alpha: int,
    beta: int,
    lattice: SubgroupLattice | None = None,
    method: str = "frattini",
) -> int:
    """Number of pairs H1 <| H2 <= G with |H1| = 2^beta and H2/H1 elementary
    abelian of order 2^alpha.

    ``method="frattini"`` uses that H2/H1 is elementary abelian exactly when
    Phi(H2) <= H1 (normality then comes for free).  ``method="quotient"``
    builds every quotient table and profiles it; slow, kept as a cross-check.
    """
    if G.prime != 2:
        raise GroupError("sections are counted for 2-groups only")
    if alpha < 0 or beta < 0:
        return 0
    if lattice is None:
        lattice = enumerate_subgroups(G, max_exponent=alpha + beta)
    if alpha + beta >= len(lattice.by_exponent):
        return 0
    tops = lattice.by_exponent[alpha + beta]
    bottoms = lattice.by_exponent[beta]
    total = 0
    if method == "frattini":
        for H2 in tops:
            phi = frattini_of_subgroup(G, H2)
            hb = H2.bits
            total += sum(1 for H1 in bottoms if H1.bits & ~hb == 0 and phi & ~H1.bits == 0)
        return total
    if method != "quotient":
        raise ValueError(f"unknown method {method!r}")
    for H2 in tops:
        S, h = subgroup_table(G, H2)
        for H1 in bottoms:
            if not H1.issubset(H2):
                continue
            inner = S.mask(np.searchsorted(h, H1.elements()))
            if not is_normal(S, inner):
                continue
            prof = group_profile(quotient(S, inner, validate=False))
            total += prof.is_elementary_abelian or alpha == 0
    return total


# -- JSON ---------------------------------------------------------------------


def lattice_to_dict(L: SubgroupLattice, spec: str | None = None) -> dict[str, Any]:
    G = L.group
    subs = []
    for i, H in enumerate(L.masks()):
        subs.append(
            {
                "id": i,
                "order": H.order,
                "cyclic": bool(H.is_cyclic),
                "normal": bool(G.is_abelian or is_normal(G, H)),
                "elements": list(H.elements()),
            }
        )
    return {
        "group": {
            "spec": spec if spec is not None else G.label,
            "order": G.order,
            "prime": G.prime,
            "exponent": int(G.orders.max()),
        },
        "subgroups": subs,
        "counts": {
            "s": [str(v) for v in L.counts_s],
            "c": [str(v) for v in L.counts_c],
            "delta": [str(v) for v in L.counts_delta],
        },
    }


def lattice_from_dict(data: dict[str, Any], G: GroupTable) -> SubgroupLattice:
    """Rebuild a lattice from its export, checking it belongs to G."""
    g = data["group"]
    if (g["order"], g["prime"], g["exponent"]) != (G.order, G.prime, int(G.orders.max())):
        raise GroupError("lattice export does not match the group")
    layers: list[list[SubgroupMask]] = [[] for _ in range(len(data["counts"]["s"]))]
    for rec in data["subgroups"]:
        H = G.mask(rec["elements"])
        if H.order != rec["order"] or H.is_cyclic != rec["cyclic"]:
            raise GroupError(f"subgroup record {rec['id']} is inconsistent with the group")
        layers[_exp(H.order, G.prime)].append(H)
    L = SubgroupLattice(G, tuple(tuple(sorted(layer, key=lambda H: H.bits)) for layer in layers))
    if [str(v) for v in L.counts_s] != data["counts"]["s"]:
        raise GroupError("lattice export counts do not match its subgroups")
    return L


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"
