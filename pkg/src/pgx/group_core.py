"""Finite p-groups stored as explicit multiplication tables.

Elements are the integers ``0 .. order-1`` and element ``0`` is always the
identity.  Subgroups are :class:`SubgroupMask` bit vectors over those indices.
Every algorithm here is an exhaustive scan of the table; nothing is clever
about asymptotics, everything is meant to be certain at desk scale.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

ORDER_CAP = 2048
FULL_ASSOCIATIVITY_LIMIT = 256
SAMPLED_TRIPLES = 10_000


class GroupError(ValueError):
    """Invalid group data or an operation whose preconditions fail."""


class OrderCapError(GroupError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(n: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``n == p**k``; raise if n is not a prime power.

    ``n == 1`` is reported as ``(1, 0)``; callers that need a prime supply one.
    """
    if n < 1:
        raise GroupError(f"{n} is not a positive integer")
    if n == 1:
        return 1, 0
    p = 2
    while n % p:
        p += 1
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise GroupError(f"{n} is not a prime power")
    return p, k


# -- subgroup masks -----------------------------------------------------------


@dataclass(frozen=True)
class SubgroupMask:
    """A subset of group elements stored as a Python int bit vector.

    Equality and hashing use ``bits`` only; the cached flags ride along.
    """

    bits: int
    order: int
    is_cyclic: bool | None = field(default=None, compare=False)
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def elements(self) -> tuple[int, ...]:
        out = []
        b = self.bits
        i = 0
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return tuple(out)

    def as_bool(self, n: int) -> np.ndarray:
        raw = self.bits.to_bytes((n + 7) // 8, "little")
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)

    def issubset(self, other: SubgroupMask) -> bool:
        return self.bits & ~other.bits == 0


def bits_from_bool(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def bits_from_elements(elements: Iterable[int]) -> int:
    b = 0
    for x in elements:
        b |= 1 << int(x)
    return b


# -- the table ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    prime: int
    exponent_n: int
    table: np.ndarray
    inverses: np.ndarray
    label: str = "G"

    identity = 0

    @classmethod
    def from_table(
        cls,
        table,
        label: str = "G",
        prime: int | None = None,
        validate: bool = True,
        cap: int = ORDER_CAP,
    ) -> GroupTable:
        """Wrap a Cayley table, checking the group axioms.

        ``prime`` is only needed for the trivial group, whose order says nothing
        about p.
        """
        t = np.array(table, dtype=np.int32)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        n = t.shape[0]
        if n > cap:
            raise OrderCapError(f"order {n} exceeds the cap {cap}")
        p, k = prime_power(n)
        if n == 1:
            if prime is None:
                raise GroupError("the trivial group needs an explicit prime")
            p = prime
        elif prime is not None and prime != p:
            raise GroupError(f"order {n} is not a power of {prime}")
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise GroupError("element 0 must be the identity")
        rows, cols = np.nonzero(t == 0)
        if len(rows) != n or not np.array_equal(np.sort(rows), ar):
            raise GroupError("not every element has a unique inverse")
        inv = np.empty(n, dtype=np.int32)
        inv[rows] = cols
        if not np.array_equal(t[inv, ar], np.zeros(n)):
            raise GroupError("left and right inverses disagree")
        if validate:
            check_associative(t)
        t.setflags(write=False)
        inv.setflags(write=False)
        return cls(order=n, prime=p, exponent_n=k, table=t, inverses=inv, label=label)

    def relabel(self, label: str) -> GroupTable:
        return GroupTable(self.order, self.prime, self.exponent_n, self.table, self.inverses, label)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def power(self, x: int, k: int) -> int:
        y = 0
        for _ in range(k):
            y = int(self.table[y, x])
        return y

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        ar = np.arange(n)
        out = np.zeros(n, dtype=np.int64)
        out[0] = 1
        cur = ar.copy()
        k = 1
        while (out == 0).any():
            cur = self.table[cur, ar]
            k += 1
            out[(cur == 0) & (out == 0)] = k
        out.setflags(write=False)
        return out

    @cached_property
    def pth_powers(self) -> np.ndarray:
        ar = np.arange(self.order)
        cur = ar.copy()
        for _ in range(self.prime - 1):
            cur = self.table[cur, ar]
        cur.setflags(write=False)
        return cur

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def centralizer_sizes(self) -> np.ndarray:
        return (self.table == self.table.T).sum(axis=1)

    @cached_property
    def census(self) -> dict[int, int]:
        return dict(sorted(Counter(int(o) for o in self.orders).items()))

    def mask(self, elements: Iterable[int] | np.ndarray) -> SubgroupMask:
        """Mask for a set of elements already known to form a subgroup."""
        if isinstance(elements, np.ndarray) and elements.dtype == bool:
            arr = elements
        else:
            arr = np.zeros(self.order, dtype=bool)
            arr[np.fromiter(elements, dtype=np.int64)] = True
        idx = np.flatnonzero(arr)
        o = int(idx.size)
        top = int(self.orders[idx].max())
        gens = (int(idx[np.argmax(self.orders[idx])]),) if top == o else ()
        return SubgroupMask(bits_from_bool(arr), o, top == o, gens)

    def __repr__(self) -> str:
        return f"GroupTable({self.label!r}, order={self.order})"


def check_associative(t: np.ndarray, seed: int = 0) -> None:
    n = t.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            # (a b) c  vs  a (b c) for all b, c
            if not np.array_equal(t[t[a]], t[a][t]):
                raise GroupError("table is not associative")
        return
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
    if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
        raise GroupError("table is not associative (sampled)")


# -- element level ------------------------------------------------------------


@dataclass(frozen=True)
class GroupProfile:
    is_abelian: bool
    is_cyclic: bool
    is_elementary_abelian: bool
    exponent: int
    exponent_m: int
    order_census: dict[int, int]


def element_order(G: GroupTable, x: int) -> int:
    if not 0 <= x < G.order:
        raise IndexError(f"element {x} out of range for order {G.order}")
    return int(G.orders[x])


def group_profile(G: GroupTable) -> GroupProfile:
    exponent = int(G.orders.max())
    _, m = prime_power(exponent)
    return GroupProfile(
        is_abelian=G.is_abelian,
        is_cyclic=exponent == G.order,
        is_elementary_abelian=G.is_abelian and exponent <= G.prime,
        exponent=exponent,
        exponent_m=m,
        order_census=G.census,
    )


# -- subgroups ----------------------------------------------------------------


def closure_bool(G: GroupTable, generators: Iterable[int], start: np.ndarray | None = None) -> np.ndarray:
    """Subgroup generated by ``generators`` together with the set ``start``."""
    gens = np.unique(np.fromiter(generators, dtype=np.int64))
    mask = np.zeros(G.order, dtype=bool) if start is None else start.copy()
    mask[0] = True
    mask[gens] = True
    if gens.size == 0:
        gens = np.flatnonzero(mask)
    else:
        gens = np.union1d(gens, np.flatnonzero(mask))
    frontier = np.flatnonzero(mask)
    t = G.table
    while frontier.size:
        prods = np.unique(t[np.ix_(frontier, gens)])
        fresh = prods[~mask[prods]]
        mask[fresh] = True
        frontier = fresh
    return mask


def generated_subgroup(G: GroupTable, generators: Iterable[int]) -> SubgroupMask:
    return G.mask(closure_bool(G, generators))


def is_subgroup(G: GroupTable, H: SubgroupMask) -> bool:
    if 0 not in H:
        return False
    h = np.array(H.elements())
    arr = H.as_bool(G.order)
    return bool(arr[G.table[np.ix_(h, h)]].all())


def center(G: GroupTable) -> SubgroupMask:
    t = G.table
    return G.mask((t == t.T).all(axis=1))


def commutators(G: GroupTable) -> np.ndarray:
    t, inv = G.table, G.inverses
    # [x, y] = x^-1 y^-1 x y
    return np.unique(t[t[inv[:, None], inv[None, :]], t])


def derived_and_frattini(G: GroupTable) -> tuple[SubgroupMask, SubgroupMask]:
    comm = commutators(G)
    derived = closure_bool(G, comm)
    phi = closure_bool(G, G.pth_powers, start=derived)
    return G.mask(derived), G.mask(phi)


def is_normal(G: GroupTable, H: SubgroupMask) -> bool:
    if not is_subgroup(G, H):
        raise GroupError("mask is not a subgroup")
    return bool(normalizer_bool(G, H).all())


def normalizer_bool(G: GroupTable, H: SubgroupMask | None = None, arr: np.ndarray | None = None) -> np.ndarray:
    """Boolean vector of the elements g with g H g^-1 = H."""
    if arr is None:
        arr = H.as_bool(G.order)
    h = np.flatnonzero(arr)
    t = G.table
    conj = t[t[:, h], G.inverses[:, None]]
    return arr[conj].all(axis=1)


def quotient(G: GroupTable, N: SubgroupMask, validate: bool = True) -> GroupTable:
    """Coset group G/N; cosets are numbered by their smallest member."""
    Q, _ = quotient_with_map(G, N, validate=validate)
    return Q


def quotient_with_map(G: GroupTable, N: SubgroupMask, validate: bool = True) -> tuple[GroupTable, np.ndarray]:
    """Like :func:`quotient`, also returning the element -> coset index map."""
    if not is_normal(G, N):
        raise GroupError("cannot form a quotient by a non-normal subgroup")
    t = G.table
    nel = np.array(N.elements())
    labels = t[:, nel].min(axis=1)
    reps = np.unique(labels)
    coset = np.searchsorted(reps, labels)
    qt = coset[t[np.ix_(reps, reps)]]
    Q = GroupTable.from_table(qt, label=f"({G.label})/N{N.order}", prime=G.prime, validate=validate)
    return Q, coset


def subgroup_table(G: GroupTable, H: SubgroupMask, validate: bool = False) -> tuple[GroupTable, np.ndarray]:
    """Table of H on its own, plus the sorted G-indices of its elements.

    Element 0 of G is the smallest member of H, so identity-first is kept.
    """
    h = np.array(H.elements())
    sub = np.searchsorted(h, G.table[np.ix_(h, h)])
    S = GroupTable.from_table(sub, label=f"<{H.order}>", prime=G.prime, validate=validate)
    return S, h


# -- isomorphisms -------------------------------------------------------------


def minimal_generating_set(G: GroupTable) -> list[int]:
    """Generators whose images form a basis of G/Phi(G), largest orders first."""
    _, phi = derived_and_frattini(G)
    span = phi.as_bool(G.order)
    gens: list[int] = []
    for x in sorted(range(G.order), key=lambda x: (-int(G.orders[x]), x)):
        if not span[x]:
            gens.append(x)
            span = closure_bool(G, [x], start=span)
    return gens


def _fingerprint(G: GroupTable) -> tuple:
    return (G.order, G.prime, tuple(G.census.items()), tuple(sorted(Counter(zip(G.orders.tolist(), G.centralizer_sizes.tolist())).items())))


def find_isomorphisms(A: GroupTable, B: GroupTable, first_only: bool = False) -> list[list[int]]:
    """All isomorphisms A -> B as image lists ``f[a]``.

    Backtracks over images of a minimal generating set of A.  Each partial
    assignment is closed over the subgroup its generators span, which checks
    f(a x) = f(a) f(x) there; at full depth that makes f a homomorphism.
    """
    if _fingerprint(A) != _fingerprint(B):
        return []
    n = A.order
    if n == 1:
        return [[0]]
    gens = minimal_generating_set(A)
    key_b = list(zip(B.orders.tolist(), B.centralizer_sizes.tolist()))
    cands = [
        [y for y in range(n) if key_b[y] == (int(A.orders[g]), int(A.centralizer_sizes[g]))] for g in gens
    ]
    ta, tb = A.rows, B.rows
    found: list[list[int]] = []

    def extend(f: list[int], used: list[bool], level: int) -> bool:
        queue = [a for a in range(n) if f[a] >= 0]
        active = gens[: level + 1]
        images = [f[g] for g in active]
        i = 0
        while i < len(queue):
            a = queue[i]
            i += 1
            ra, rb = ta[a], tb[f[a]]
            for x, y in zip(active, images):
                c, d = ra[x], rb[y]
                fc = f[c]
                if fc < 0:
                    if used[d]:
                        return False
                    f[c] = d
                    used[d] = True
                    queue.append(c)
                elif fc != d:
                    return False
        return True

    def search(level: int, f: list[int], used: list[bool]) -> bool:
        if level == len(gens):
            found.append(f)
            return first_only
        g = gens[level]
        for y in cands[level]:
            if used[y]:
                continue
            f2, used2 = f.copy(), used.copy()
            f2[g] = y
            used2[y] = True
            if extend(f2, used2, level) and search(level + 1, f2, used2):
                return True
        return False

    f0 = [-1] * n
    f0[0] = 0
    used0 = [False] * n
    used0[0] = True
    search(0, f0, used0)
    return found


def is_homomorphism(A: GroupTable, B: GroupTable, f: Sequence[int]) -> bool:
    fa = np.asarray(f)
    return bool(np.array_equal(fa[A.table], B.table[fa[:, None], fa[None, :]]))


def are_isomorphic(A: GroupTable, B: GroupTable) -> bool:
    return bool(find_isomorphisms(A, B, first_only=True))
