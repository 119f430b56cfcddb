"""Builders for the catalog of p-groups: cyclic, abelian, the 2-group
families, the two non-abelian groups of order p^3, and products."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Callable, Hashable, Sequence

import numpy as np

from .group_core import (
    ORDER_CAP,
    GroupError,
    GroupTable,
    OrderCapError,
    center,
    derived_and_frattini,
    generated_subgroup,
    is_prime,
    quotient,
)


class AmbiguousCenterError(GroupError):
    code = "E_AMBIGUOUS_CENTER"


class Family(Enum):
    DIHEDRAL = "D"
    QUATERNION = "Q"
    SEMIDIHEDRAL = "SD"
    MODULAR = "Mod"


class Special(Enum):
    EXTRASPECIAL = "Extraspecial"
    ALMOST_EXTRASPECIAL = "AlmostExtraspecial"
    GENERALIZED_EXTRASPECIAL = "GeneralizedExtraspecial"
    NONE = "None"


class ExtraspecialKind(Enum):
    PLUS = "Plus"
    MINUS = "Minus"
    ALMOST = "Almost"


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")


def _check_cap(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapError(f"order {order} exceeds the cap {cap}")


def build_cyclic(p: int, k: int, cap: int = ORDER_CAP) -> GroupTable:
    _check_prime(p)
    if k < 1:
        raise GroupError("cyclic group needs k >= 1")
    n = p**k
    _check_cap(n, cap)
    ar = np.arange(n)
    return GroupTable.from_table((ar[:, None] + ar[None, :]) % n, label=f"C{n}", cap=cap)


def build_abelian(p: int, partition: Sequence[int], cap: int = ORDER_CAP) -> GroupTable:
    if not partition:
        raise GroupError("empty partition")
    if any(e < 1 for e in partition) or list(partition) != sorted(partition, reverse=True):
        raise GroupError(f"partition {list(partition)} must be positive and non-increasing")
    _check_cap(p ** sum(partition), cap)
    factors = [build_cyclic(p, e, cap) for e in partition]
    G = reduce(lambda a, b: direct_product(a, b, cap), factors)
    return G.relabel(f"Ab({p};{','.join(map(str, partition))})")


def build_2group_family(family: Family, order: int, cap: int = ORDER_CAP) -> GroupTable:
    """Pairs (i mod 2^(k-1), j mod 2) stored at index j*2^(k-1) + i."""
    k = order.bit_length() - 1
    if order < 1 or 1 << k != order:
        raise GroupError(f"{order} is not a power of 2")
    min_k = 3 if family in (Family.DIHEDRAL, Family.QUATERNION) else 4
    if k < min_k:
        raise GroupError(f"{family.value}{order} needs order at least {2**min_k}")
    _check_cap(order, cap)
    h = order // 2
    t = {
        Family.DIHEDRAL: h - 1,
        Family.QUATERNION: h - 1,
        Family.SEMIDIHEDRAL: h // 2 - 1,
        Family.MODULAR: h // 2 + 1,
    }[family]
    twist = h // 2 if family is Family.QUATERNION else 0
    i = np.arange(order) % h
    j = np.arange(order) // h
    tj = np.where(j == 1, t, 1)
    ii = (i[:, None] + i[None, :] * tj[:, None]) % h
    ii = (ii + twist * (j[:, None] & j[None, :])) % h
    jj = (j[:, None] + j[None, :]) % 2
    return GroupTable.from_table(jj * h + ii, label=f"{family.value}{order}", cap=cap)


def build_p3_nonabelian(p: int, exponent_type: str) -> GroupTable:
    """Heisenberg group (exponent ``"p"``) or the modular group (``"p2"``)."""
    _check_prime(p)
    if p == 2:
        raise GroupError("the order-p^3 constructions here are for odd p")
    n = p**3
    x = np.arange(n)
    if exponent_type == "p":
        # (a, b, c)(a', b', c') = (a+a', b+b', c+c'+ab')
        a, b, c = x // (p * p), x // p % p, x % p
        na = (a[:, None] + a[None, :]) % p
        nb = (b[:, None] + b[None, :]) % p
        nc = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
        return GroupTable.from_table(na * p * p + nb * p + nc, label=f"Heis({p})")
    if exponent_type == "p2":
        # (i, j)(i', j') = (i + i'(1+p)^j, j+j')
        q = p * p
        i, j = x % q, x // q
        tw = np.array([pow(1 + p, int(e), q) for e in j])
        ni = (i[:, None] + i[None, :] * tw[:, None]) % q
        nj = (j[:, None] + j[None, :]) % p
        return GroupTable.from_table(nj * q + ni, label=f"Mp3({p})")
    raise GroupError(f"exponent_type must be 'p' or 'p2', got {exponent_type!r}")


def direct_product(A: GroupTable, B: GroupTable, cap: int = ORDER_CAP) -> GroupTable:
    """(a, b) is stored at index a*|B| + b."""
    if A.prime != B.prime:
        raise GroupError(f"mixed primes {A.prime} and {B.prime}")
    _check_cap(A.order * B.order, cap)
    nb = B.order
    t = A.table[:, None, :, None] * nb + B.table[None, :, None, :]
    n = A.order * nb
    return GroupTable.from_table(t.reshape(n, n), label=f"{A.label} x {B.label}", prime=A.prime, cap=cap)


def amalgamation_element(G: GroupTable) -> int:
    """Generator of the canonical order-p central subgroup used for amalgamation."""
    Z = center(G)
    if Z.order != G.prime and not Z.is_cyclic:
        raise AmbiguousCenterError(
            f"{AmbiguousCenterError.code}: center of {G.label} is non-cyclic of order {Z.order}"
        )
    els = [z for z in Z.elements() if G.orders[z] == G.prime]
    return min(els)


def central_product(A: GroupTable, B: GroupTable, cap: int = ORDER_CAP) -> GroupTable:
    """A x B modulo the anti-diagonal of the canonical order-p central subgroups."""
    if A.prime != B.prime:
        raise GroupError(f"mixed primes {A.prime} and {B.prime}")
    _check_cap(A.order * B.order // A.prime, cap)
    za, zb = amalgamation_element(A), amalgamation_element(B)
    AB = direct_product(A, B, cap=cap * A.prime)
    zb_inv = int(B.inverses[zb])
    N = generated_subgroup(AB, [za * B.order + zb_inv])
    return quotient(AB, N).relabel(f"{A.label} * {B.label}")


# -- semidirect products ------------------------------------------------------


def extend_homomorphism(
    G: GroupTable,
    gens: Sequence[int],
    images: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
) -> dict[int, Hashable] | None:
    """Extend generator images to a homomorphism on G, or None if impossible.

    Raises if the generators do not generate G.
    """
    f: dict[int, Hashable] = {0: identity}
    queue = [0]
    rows = G.rows
    for a in queue:
        for x, y in zip(gens, images):
            c, d = rows[a][x], mul(f[a], y)
            if c not in f:
                f[c] = d
                queue.append(c)
            elif f[c] != d:
                return None
    if len(f) != G.order:
        raise GroupError("given elements do not generate the group")
    return f


@dataclass(frozen=True)
class SemidirectAction:
    """B acting on A: ``images[i][j]`` is where the i-th generator of B
    sends the j-th generator of A."""

    acted_generators: tuple[int, ...]
    acting_generators: tuple[int, ...]
    images: tuple[tuple[int, ...], ...]


def _automorphism(A: GroupTable, gens: Sequence[int], images: Sequence[int]) -> tuple[int, ...]:
    rows = A.rows
    f = extend_homomorphism(A, gens, images, lambda u, v: rows[u][v], 0)
    if f is None:
        raise GroupError(f"generator images {list(images)} do not define an endomorphism of {A.label}")
    perm = tuple(f[a] for a in range(A.order))
    if len(set(perm)) != A.order:
        raise GroupError(f"generator images {list(images)} do not define an automorphism of {A.label}")
    return perm


def semidirect_product(A: GroupTable, B: GroupTable, action: SemidirectAction, cap: int = ORDER_CAP) -> GroupTable:
    """(a, b)(a', b') = (a * action(b)(a'), b b'), stored at index a*|B| + b."""
    if A.prime != B.prime:
        raise GroupError(f"mixed primes {A.prime} and {B.prime}")
    _check_cap(A.order * B.order, cap)
    if len(action.images) != len(action.acting_generators):
        raise GroupError("one image list is needed per acting generator")
    autos = [_automorphism(A, action.acted_generators, im) for im in action.images]
    ident = tuple(range(A.order))
    compose = lambda s, t: tuple(s[i] for i in t)  # noqa: E731
    phi = extend_homomorphism(B, action.acting_generators, autos, compose, ident)
    if phi is None:
        raise GroupError("action does not respect the relations of the acting group")
    act = np.array([phi[b] for b in range(B.order)])
    nb = B.order
    t = A.table[np.arange(A.order)[:, None, None, None], act[None, :, :, None]] * nb + B.table[None, :, None, :]
    n = A.order * nb
    return GroupTable.from_table(t.reshape(n, n), label=f"({A.label}):({B.label})", prime=A.prime, cap=cap)


# -- extraspecial groups ------------------------------------------------------


def build_extraspecial(kind: ExtraspecialKind, r: int, cap: int = ORDER_CAP) -> GroupTable:
    if r < 1:
        raise GroupError("r must be positive")
    order = 2 ** (2 * r + 2 if kind is ExtraspecialKind.ALMOST else 2 * r + 1)
    _check_cap(order, cap)
    D8 = build_2group_family(Family.DIHEDRAL, 8)
    if kind is ExtraspecialKind.MINUS:
        parts = [build_2group_family(Family.QUATERNION, 8)] + [D8] * (r - 1)
    else:
        parts = [D8] * r
    if kind is ExtraspecialKind.ALMOST:
        parts.append(build_cyclic(2, 2))
    G = reduce(lambda a, b: central_product(a, b, cap), parts)
    name = {ExtraspecialKind.PLUS: "ESp", ExtraspecialKind.MINUS: "ESm", ExtraspecialKind.ALMOST: "AES"}[kind]
    return G.relabel(f"{name}({r})")


def classify_special(G: GroupTable) -> Special:
    """Extraspecial > almost extraspecial > generalized extraspecial.

    Almost extraspecial is read as: G' = Phi(G) of order 2 and Z(G) cyclic of
    order 4.
    """
    if G.prime != 2:
        raise GroupError("classification is defined for 2-groups only")
    Z = center(G)
    D, Phi = derived_and_frattini(G)
    if D != Phi or D.order != 2:
        return Special.NONE
    if Z == D:
        return Special.EXTRASPECIAL
    if Z.order == 4 and Z.is_cyclic:
        return Special.ALMOST_EXTRASPECIAL
    if D.issubset(Z):
        return Special.GENERALIZED_EXTRASPECIAL
    return Special.NONE
