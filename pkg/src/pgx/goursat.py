"""Subgroups of a direct product from Goursat quintuples, and the delta_2
count for A x C_2^m obtained from them."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constructors import build_abelian, direct_product
from .gaussian import gauss_binomial
from .group_core import (
    ORDER_CAP,
    GroupError,
    GroupTable,
    OrderCapError,
    SubgroupMask,
    bits_from_elements,
    find_isomorphisms,
    is_normal,
    quotient_with_map,
    subgroup_table,
)
from .lattice import SubgroupLattice, enumerate_subgroups


@dataclass(frozen=True)
class QuintupleRecord:
    A1: SubgroupMask
    A2: SubgroupMask
    B1: SubgroupMask
    B2: SubgroupMask
    phi: tuple[int, ...]
    realized: SubgroupMask


@dataclass(frozen=True, eq=False)
class _Section:
    top: SubgroupMask
    bottom: SubgroupMask
    quotient: GroupTable
    members: np.ndarray  # elements of top, as indices of the ambient group
    coset: np.ndarray  # coset index of each member


def _sections(G: GroupTable, L: SubgroupLattice) -> list[_Section]:
    out = []
    for top in L.masks():
        S, members = subgroup_table(G, top)
        for bottom in L.masks():
            if bottom.order > top.order or not bottom.issubset(top):
                continue
            inner = S.mask(np.searchsorted(members, bottom.elements()))
            # normality relative to the top subgroup, not to G
            if not is_normal(S, inner):
                continue
            Q, coset = quotient_with_map(S, inner, validate=False)
            out.append(_Section(top, bottom, Q, members, coset))
    return out


def goursat_enumerate(A: GroupTable, B: GroupTable, cap: int = ORDER_CAP) -> list[QuintupleRecord]:
    """One record per subgroup of A x B, sorted by realized mask.

    Elements of A x B are numbered a*|B| + b, as in ``direct_product``.
    """
    if A.order * B.order > cap:
        raise OrderCapError(f"|A||B| = {A.order * B.order} exceeds the cap {cap}")
    P = direct_product(A, B, cap)
    secs_a = _sections(A, enumerate_subgroups(A))
    secs_b = _sections(B, enumerate_subgroups(B))
    by_order: dict[int, list[_Section]] = {}
    for s in secs_b:
        by_order.setdefault(s.quotient.order, []).append(s)
    iso_memo: dict[tuple[bytes, bytes], list[list[int]]] = {}
    nb = B.order
    records = []
    for sa in secs_a:
        for sb in by_order.get(sa.quotient.order, ()):
            key = (sa.quotient.table.tobytes(), sb.quotient.table.tobytes())
            if key not in iso_memo:
                iso_memo[key] = find_isomorphisms(sa.quotient, sb.quotient)
            for phi in iso_memo[key]:
                target = np.asarray(phi)[sa.coset]
                ia, ib = np.nonzero(target[:, None] == sb.coset[None, :])
                realized = P.mask(sa.members[ia] * nb + sb.members[ib])
                records.append(QuintupleRecord(sa.bottom, sa.top, sb.bottom, sb.top, tuple(phi), realized))
    records.sort(key=lambda r: r.realized.bits)
    return records


def realize(A: GroupTable, B: GroupTable, rec: QuintupleRecord) -> int:
    """Bits of {(a, b) in A2 x B2 : phi(a A1) = b B1}, straight from the definition."""
    nb = B.order
    a_cosets = _coset_labels(A, rec.A2, rec.A1)
    b_cosets = _coset_labels(B, rec.B2, rec.B1)
    a_order = sorted(set(a_cosets.values()))
    b_order = sorted(set(b_cosets.values()))
    out = []
    for a, ca in a_cosets.items():
        for b, cb in b_cosets.items():
            if b_order[rec.phi[a_order.index(ca)]] == cb:
                out.append(a * nb + b)
    return bits_from_elements(out)


def _coset_labels(G: GroupTable, top: SubgroupMask, bottom: SubgroupMask) -> dict[int, int]:
    bot = bottom.elements()
    return {x: min(G.mul(x, n) for n in bot) for x in top.elements()}


# -- delta_2 of A x C_2^m -----------------------------------------------------


class CountMode(Enum):
    CORRECTED = "Corrected"
    PAPER_DISPLAYED = "PaperDisplayed"


def delta2_product_count(
    A: GroupTable,
    m: int,
    mode: CountMode = CountMode.CORRECTED,
    lattice: SubgroupLattice | None = None,
) -> int:
    """delta_2(A x C_2^m) from s_1(A) and delta_2(A).

    Splitting Klein four subgroups H of A x C_2^m by the projection A2 of H to A:
      A2 = 1        H lies in C_2^m:                       [m,2]
      A2 = C_2      B1 of order 2, B2 = B1 or one of the 2^(m-1) - 1
                    order-4 subgroups above it:             s_1(A) 2^(m-1) [m,1]
      A2 = C_2^2    A1 = A2: 1 way; |A1| = 2: 3 choices of A1 and 2^m - 1 of
                    B2; A1 = 1: [m,2] choices of B2 and 6 isomorphisms.
    ``PAPER_DISPLAYED`` evaluates the variant total whose last factor is
    (2^m - 1) + [m,2]; it disagrees with the lattice and is kept only to
    report the difference.
    """
    if A.prime != 2:
        raise GroupError("delta_2 product formula is for 2-groups")
    if m < 0:
        raise GroupError("m must be non-negative")
    if lattice is None:
        lattice = enumerate_subgroups(A, max_exponent=2)
    s1, d2 = lattice.s(1), lattice.delta(2)
    g1, g2 = gauss_binomial(m, 1, 2), gauss_binomial(m, 2, 2)
    middle = s1 * 2 ** (m - 1) * g1 if m >= 1 else 0
    if mode is CountMode.CORRECTED:
        return g2 + middle + d2 * (1 + 3 * (2**m - 1) + 6 * g2)
    return g2 + middle + d2 * ((2**m - 1) + g2)


def delta2_of_product(A: GroupTable, m: int) -> int:
    """delta_2(A x C_2^m) by brute-force enumeration up to order 4."""
    P = A if m == 0 else direct_product(A, build_abelian(2, [1] * m))
    return enumerate_subgroups(P, max_exponent=2).delta(2)
