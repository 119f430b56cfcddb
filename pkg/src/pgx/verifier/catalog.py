"""The catalog of constructible p-groups the checks quantify over."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..constructors import Special, classify_special
from ..group_core import find_isomorphisms, group_profile
from ..spec_language import build_group, canonical


@dataclass(frozen=True)
class CatalogEntry:
    spec: str
    prime: int
    n: int
    tags: frozenset[str]


def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples, largest parts first."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(n, largest)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def abelian_spec(p: int, partition: tuple[int, ...]) -> str:
    parts = []
    i = 0
    while i < len(partition):
        j = i
        while j < len(partition) and partition[j] == partition[i]:
            j += 1
        run = j - i
        parts.append(f"C{p ** partition[i]}" + (f"^{run}" if run > 1 else ""))
        i = j
    return " x ".join(parts)


ORDER_16 = [
    "C16", "C8 x C2", "C4^2", "C4 x C2^2", "C2^4",
    "D16", "Q16", "SD16", "Mod16",
    "D8 x C2", "Q8 x C2", "D8 * C4", "C4:C4", "(C4 x C2):C2",
]  # fmt: skip

_NONABELIAN_2 = {
    3: ["D8", "Q8"],
    4: ORDER_16[5:],
    5: [
        "D32", "Q32", "SD32", "Mod32",
        "D16 x C2", "Q16 x C2", "SD16 x C2", "Mod16 x C2",
        "D8 x C4", "Q8 x C4", "D8 x C2^2", "Q8 x C2^2",
        "(D8 * C4) x C2", "C4:C4 x C2", "(C4 x C2):C2 x C2",
        "ESp(2)", "ESm(2)",
    ],
    6: [
        "D64", "Q64", "SD64", "Mod64",
        "D8 x C2^3", "Q8 x C2^3", "D8 x C4 x C2", "(D8 * C4) x C2^2",
        "D8 x D8", "D8 x Q8", "Q8 x Q8",
        "ESp(2) x C2", "ESm(2) x C2", "AES(2)",
    ],
    7: ["D8 x C2^4", "ESp(2) x C2^2", "AES(2) x C2", "D128"],
}  # fmt: skip

_NONABELIAN_3 = {
    3: ["Heis(3)", "Mp3(3)"],
    4: ["Heis(3) x C3", "Mp3(3) x C3", "C27:C3", "C9:C9", "(C3^3):C3", "(C9 x C3):C3"],
    5: [
        "Heis(3) x C3^2", "Heis(3) x C9", "Mp3(3) x C3^2", "Mp3(3) x C9",
        "C27:C3 x C3", "C9:C9 x C3", "(C3^3):C3 x C3", "(C9 x C3):C3 x C3",
        "Heis(3) * Heis(3)", "Heis(3) * Mp3(3)",
    ],
}  # fmt: skip

_NONABELIAN_5 = {3: ["Heis(5)", "Mp3(5)"], 4: ["Heis(5) x C5"]}

_MAX_N = {2: 7, 3: 5, 5: 4}


def _specs() -> list[tuple[int, int, str]]:
    out = []
    for p, extra in ((2, _NONABELIAN_2), (3, _NONABELIAN_3), (5, _NONABELIAN_5)):
        for n in range(1, _MAX_N[p] + 1):
            for part in partitions(n):
                out.append((p, n, abelian_spec(p, part)))
            for s in extra.get(n, []):
                out.append((p, n, canonical(s)))
    return out


def _tags(spec: str, p: int, n: int) -> frozenset[str]:
    G = build_group(spec)
    prof = group_profile(G)
    tags = {f"p{p}"}
    if p > 2:
        tags.add("odd-p")
    if prof.is_abelian:
        tags.add("abelian")
    if prof.is_cyclic:
        tags.add("cyclic")
    if prof.is_elementary_abelian:
        tags.add("elementary-abelian")
    if p == 2 and n == 4:
        tags.add("order-16-complete")
    if p == 2 and n >= 3:
        cls = classify_special(G)
        if cls is Special.EXTRASPECIAL:
            tags.add("extraspecial")
        elif cls is Special.ALMOST_EXTRASPECIAL:
            tags.add("almost-extraspecial")
        elif cls is Special.GENERALIZED_EXTRASPECIAL:
            tags.add("generalized-extraspecial")
    return frozenset(tags)


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    return tuple(CatalogEntry(s, p, n, _tags(s, p, n)) for p, n, s in _specs())


def select(p: int | None = None, min_n: int = 1, max_n: int | None = None, tag: str | None = None) -> list[CatalogEntry]:
    return [
        e
        for e in catalog()
        if (p is None or e.prime == p)
        and e.n >= min_n
        and (max_n is None or e.n <= max_n)
        and (tag is None or tag in e.tags)
    ]


def order16_completeness() -> tuple[bool, list[tuple[str, str]]]:
    """True when the 14 order-16 entries are pairwise non-isomorphic; also
    returns any isomorphic pairs found."""
    groups = [build_group(s) for s in ORDER_16]
    clashes = [
        (A.label, B.label) for A, B in combinations(groups, 2) if find_isomorphisms(A, B, first_only=True)
    ]
    return len(groups) == 14 and not clashes, clashes
