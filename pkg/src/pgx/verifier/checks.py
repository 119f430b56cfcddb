"""Registered checks: each one a quantified assertion over the catalog."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable

from ..constructors import ExtraspecialKind, Special, build_abelian, build_extraspecial, classify_special, direct_product
from ..gaussian import elementary_abelian_delta_bound, gauss_binomial
from ..goursat import CountMode, delta2_of_product, delta2_product_count, goursat_enumerate
from ..group_core import GroupTable, _fingerprint, are_isomorphic, group_profile, quotient
from ..lattice import count_sections, enumerate_subgroups, normal_subgroups_of_order
from ..spec_language import build_group, canonical
from .catalog import ORDER_16, abelian_spec, order16_completeness, partitions, select
from .store import LatticeStore


class UnknownCheckError(KeyError):
    pass


@dataclass
class Row:
    spec: str
    quantity: str
    lhs: str
    rhs: str
    equal: bool
    ok: bool
    note: str = ""


@dataclass
class CheckReport:
    check_id: str
    status: str
    domain: str
    parameters: dict[str, Any]
    rows: list[Row]
    witnesses: list[str]
    notes: list[str] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "Fail" else 0

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d = {
            "check_id": self.check_id,
            "status": self.status,
            "domain": self.domain,
            "parameters": self.parameters,
            "rows": [asdict(r) for r in self.rows],
            "witnesses": self.witnesses,
            "notes": self.notes,
            "extra": self.extra,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


@dataclass
class Params:
    p: int | None = None
    min_n: int | None = None
    max_n: int | None = None
    experimental_p2: bool = False
    pairs: list[tuple[str, str]] | None = None


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    defaults: dict[str, Any]
    run: Callable[[LatticeStore, Params], tuple[str, list[Row], list[str], dict[str, Any]]]


REGISTRY: dict[str, Check] = {}


def register(check_id: str, description: str, **defaults):
    def deco(fn):
        REGISTRY[check_id] = Check(check_id, description, defaults, fn)
        return fn

    return deco


def _vec(xs) -> str:
    return ",".join(str(x) for x in xs)


def _le(spec: str, quantity: str, lhs, rhs, note: str = "") -> Row:
    return Row(spec, quantity, str(lhs), str(rhs), lhs == rhs, lhs <= rhs, note)


def _primes(params: Params, default: tuple[int, ...]) -> tuple[int, ...]:
    return (params.p,) if params.p is not None else default


def _max_n(params: Params, default: int) -> int:
    return params.max_n if params.max_n is not None else default


def _min_n(params: Params, default: int) -> int:
    return params.min_n if params.min_n is not None else default


def _power_spec(base: str, p: int, k: int) -> str:
    if k == 0:
        return canonical(base)
    return canonical(f"{base} x C{p}^{k}")


def _domain(ps, lo, hi, what="catalog entries") -> str:
    return (
        f"{what} with p in {{{', '.join(map(str, ps))}}} and {lo} <= n <= {hi}; catalog-quantified "
        "(isomorphism-complete for abelian types, for p^n <= 16 at p = 2 and for n <= 3)"
    )


# -- bounds on delta -----------------------------------------------------------


@register("thm1.1", "delta(G) <= sum_{k>=2} [n,k]_p, equality iff G is elementary abelian", p=None, max_n=5)
def _thm11(store: LatticeStore, params: Params):
    ps, hi = _primes(params, (2, 3)), _max_n(params, 5)
    lo = _min_n(params, 1)
    rows = []
    for p in ps:
        for e in select(p, lo, hi):
            d = sum(store.lattice(e.spec).counts_delta)
            bound = elementary_abelian_delta_bound(e.n, p)
            elem = "elementary-abelian" in e.tags
            r = _le(e.spec, "delta vs sum_k [n,k]_p", d, bound)
            r.ok = d <= bound and (d == bound) == elem
            rows.append(r)
    return _domain(ps, lo, hi), rows, [], {}


@register("thm1.2", "delta(G) <= delta(Heis(p) x C_p^(n-3)) for odd p, G not elementary abelian", p=3, max_n=5)
def _thm12(store: LatticeStore, params: Params):
    ps, hi = _primes(params, (3,)), _max_n(params, 5)
    lo = max(3, _min_n(params, 3))
    rows, notes = [], []
    for p in ps:
        if p == 2:
            notes.append("p = 2 skipped: the statement is for odd p")
            continue
        for e in select(p, lo, hi):
            if "elementary-abelian" in e.tags:
                continue
            ref = _power_spec(f"Heis({p})", p, e.n - 3)
            rows.append(_le(e.spec, f"delta vs delta({ref})", _delta(store, e.spec), _delta(store, ref)))
    return _domain(ps, lo, hi, "non-elementary-abelian catalog entries"), rows, notes, {}


@register("thm1.3", "delta(G) <= delta(D8 x C2^(n-3)) for 2-groups G not elementary abelian", max_n=5)
def _thm13(store: LatticeStore, params: Params):
    hi, lo = _max_n(params, 5), max(3, _min_n(params, 3))
    rows = []
    for e in select(2, lo, hi):
        if "elementary-abelian" in e.tags:
            continue
        ref = _power_spec("D8", 2, e.n - 3)
        rows.append(_le(e.spec, f"delta vs delta({ref})", _delta(store, e.spec), _delta(store, ref)))
    if lo <= 4 <= hi:
        complete, clashes = order16_completeness()
        rows.append(
            Row(
                "order 16",
                "pairwise non-isomorphic catalog types",
                str(len(ORDER_16) - len(clashes)),
                "14",
                complete,
                complete,
                "; ".join(f"{a} ~ {b}" for a, b in clashes),
            )
        )
    return _domain((2,), lo, hi, "non-elementary-abelian catalog entries"), rows, [], {}


def _delta(store: LatticeStore, spec: str) -> int:
    return sum(store.lattice(spec).counts_delta)


@register(
    "prop3.1",
    "delta(G) <= (p^(n-m+1) - p^n)/(p^m - p^(m-1)) + s(G) - s_1(G) - 1, exp(G) = p^m, odd p",
    p=3,
    max_n=5,
)
def _prop31(store: LatticeStore, params: Params):
    ps, hi, lo = _primes(params, (3,)), _max_n(params, 5), _min_n(params, 1)
    rows, notes = [], []
    assert_it = True
    for p in ps:
        if p == 2:
            if not params.experimental_p2:
                notes.append("p = 2 skipped: the statement is for odd p (use --experimental-p2 to evaluate)")
                continue
            assert_it = False
            notes.append("p = 2 evaluated without asserting (experimental)")
        for e in select(p, lo, hi):
            L = store.lattice(e.spec)
            m = group_profile(L.group).exponent_m
            n = e.n
            bound = Fraction(p ** (n - m + 1) - p**n, p**m - p ** (m - 1)) + L.total_s - L.s(1) - 1
            d = sum(L.counts_delta)
            rows.append(_le(e.spec, f"delta vs exponent bound (m = {m})", d, bound))
    status = None if assert_it else "Skipped"
    return _domain(ps, lo, hi), rows, notes, {"status": status} if status else {}


class _QuotientProducts:
    """delta_k of Q x C_p^r, memoized per isomorphism class of Q."""

    def __init__(self):
        self.by_table: dict[tuple[int, bytes], int] = {}
        self.classes: list[GroupTable] = []
        self.counts: dict[tuple[int, int], tuple[int, ...]] = {}

    def _class(self, Q: GroupTable) -> int:
        key = (Q.prime, Q.table.tobytes())  # the trivial table is the same for every p
        if key in self.by_table:
            return self.by_table[key]
        fp = _fingerprint(Q)
        for i, R in enumerate(self.classes):
            if R.prime == Q.prime and _fingerprint(R) == fp and are_isomorphic(Q, R):
                self.by_table[key] = i
                return i
        self.classes.append(Q)
        self.by_table[key] = len(self.classes) - 1
        return len(self.classes) - 1

    def deltas(self, Q: GroupTable, r: int) -> tuple[int, ...]:
        i = self._class(Q)
        if (i, r) not in self.counts:
            P = direct_product(self.classes[i], build_abelian(Q.prime, [1] * r))
            self.counts[(i, r)] = enumerate_subgroups(P).counts_delta
        return self.counts[(i, r)]


def _quotient_rows(store: LatticeStore, params: Params, all_orders: bool) -> tuple[str, list[Row]]:
    ps = _primes(params, (2, 3))
    rows = []
    cache = _QuotientProducts()
    los, his = [], []
    for p in ps:
        hi = _max_n(params, max(k for k in range(1, 8) if p**k <= 64))
        lo = _min_n(params, 1)
        los.append(lo)
        his.append(hi)
        for e in select(p, lo, hi):
            L = store.lattice(e.spec)
            G = L.group
            dG = L.counts_delta
            for r in range(1, e.n + 1) if all_orders else (1,):
                for N in normal_subgroups_of_order(G, r, L):
                    Q = quotient(G, N)
                    dP = cache.deltas(Q, r)
                    ok = all(a <= b for a, b in zip(dG, dP))
                    rows.append(
                        Row(
                            e.spec,
                            f"delta_k vs delta_k(G/N x C{p}^{r}), N = {{{_vec(N.elements())}}}",
                            _vec(dG),
                            _vec(dP),
                            tuple(dG) == tuple(dP),
                            ok,
                        )
                    )
    return _domain(ps, min(los), max(his), "catalog entries of order <= 64"), rows


@register("prop3.2", "delta_k(G) <= delta_k(G/N x C_p) for every normal N of order p", p=None, max_n=None)
def _prop32(store: LatticeStore, params: Params):
    domain, rows = _quotient_rows(store, params, all_orders=False)
    return domain, rows, [], {}


@register("thm3.3", "delta_k(G) <= delta_k(G/M x C_p^r) for every normal M of order p^r", p=None, max_n=None)
def _thm33(store: LatticeStore, params: Params):
    domain, rows = _quotient_rows(store, params, all_orders=True)
    return domain, rows, [], {}


@register(
    "thm3.4",
    "abelian 2-groups satisfy delta(G) <= delta(D8 x C2^(n-3)); closed forms for delta_2",
    max_n=7,
)
def _thm34(store: LatticeStore, params: Params):
    hi, lo = _max_n(params, 7), max(3, _min_n(params, 3))
    rows = []
    for n in range(lo, hi + 1):
        ref = _power_spec("D8", 2, n - 3)
        for part in partitions(n):
            if part[0] == 1:
                continue
            spec = canonical(abelian_spec(2, part))
            rows.append(_le(spec, f"delta vs delta({ref})", _delta(store, spec), _delta(store, ref)))
        c4 = _power_spec("C4", 2, n - 2)
        d2 = store.lattice(c4, max_exponent=2).delta(2)
        want = gauss_binomial(n - 1, 2, 2)
        rows.append(Row(c4, "delta_2 vs [n-1,2]_2", str(d2), str(want), d2 == want, d2 == want))
        d2 = store.lattice(ref, max_exponent=2).delta(2)
        want = 2 * gauss_binomial(n - 1, 2, 2) - gauss_binomial(n - 2, 2, 2)
        rows.append(Row(ref, "delta_2 vs 2[n-1,2]_2 - [n-2,2]_2", str(d2), str(want), d2 == want, d2 == want))
    return f"every abelian 2-group of order 2^n, {lo} <= n <= {hi} (isomorphism-complete)", rows, [], {}


# -- subgroup counts, structure, sections --------------------------------------


@register("lem2.2", "a non-cyclic group has s_m(G) >= 2 for every 1 < m < n", p=None, max_n=5)
def _lem22(store: LatticeStore, params: Params):
    ps, hi, lo = _primes(params, (2, 3)), _max_n(params, 5), max(3, _min_n(params, 3))
    rows = []
    for p in ps:
        for e in select(p, lo, hi):
            if "cyclic" in e.tags:
                continue
            L = store.lattice(e.spec)
            least = min(L.s(m) for m in range(2, e.n))
            rows.append(Row(e.spec, "min s_m over 1 < m < n", str(least), "2", least == 2, least >= 2))
    return _domain(ps, lo, hi, "non-cyclic catalog entries"), rows, [], {}


@register(
    "lem2.3",
    "s_1 <= [n,1]_p (equality iff exp = p); s_k <= [n,k]_p for 1<k<n (equality iff elementary abelian)",
    p=None,
    max_n=5,
)
def _lem23(store: LatticeStore, params: Params):
    ps, hi, lo = _primes(params, (2, 3)), _max_n(params, 5), _min_n(params, 1)
    rows = []
    for p in ps:
        for e in select(p, lo, hi):
            L = store.lattice(e.spec)
            prof = group_profile(L.group)
            r = _le(e.spec, "s_1 vs [n,1]_p", L.s(1), gauss_binomial(e.n, 1, p))
            r.ok = r.ok and r.equal == (prof.exponent == p)
            rows.append(r)
            for k in range(2, e.n):
                r = _le(e.spec, f"s_{k} vs [n,{k}]_p", L.s(k), gauss_binomial(e.n, k, p))
                r.ok = r.ok and r.equal == prof.is_elementary_abelian
                rows.append(r)
    return _domain(ps, lo, hi), rows, [], {}


@register(
    "lem2.4",
    "s_k(G) <= s_k(Heis(p) x C_p^(n-3)) for odd p, strict for 2 <= k <= n-2 unless G is that group",
    p=3,
    max_n=5,
)
def _lem24(store: LatticeStore, params: Params):
    ps, hi, lo = _primes(params, (3,)), _max_n(params, 5), max(3, _min_n(params, 3))
    rows, notes = [], []
    for p in ps:
        if p == 2:
            notes.append("p = 2 skipped: the statement is for odd p")
            continue
        for e in select(p, lo, hi):
            if "elementary-abelian" in e.tags:
                continue
            ref = _power_spec(f"Heis({p})", p, e.n - 3)
            L, R = store.lattice(e.spec), store.lattice(ref)
            same = None
            for k in range(1, e.n + 1):
                r = _le(e.spec, f"s_{k} vs s_{k}({ref})", L.s(k), R.s(k))
                if 2 <= k <= e.n - 2 and r.equal:
                    if same is None:
                        same = are_isomorphic(L.group, R.group)
                    r.ok = same
                    r.note = "G is isomorphic to the reference group" if same else "equality where strictness is claimed"
                rows.append(r)
    return _domain(ps, lo, hi, "non-elementary-abelian catalog entries"), rows, notes, {}


@register("lem2.5", "s_k(G) <= s_k(D8 x C2^(n-3)) for 2-groups G not elementary abelian", max_n=6)
def _lem25(store: LatticeStore, params: Params):
    hi, lo = _max_n(params, 6), max(3, _min_n(params, 3))
    rows = []
    for e in select(2, lo, hi):
        if "elementary-abelian" in e.tags:
            continue
        ref = _power_spec("D8", 2, e.n - 3)
        L, R = store.lattice(e.spec), store.lattice(ref)
        for k in range(e.n + 1):
            rows.append(_le(e.spec, f"s_{k} vs s_{k}({ref})", L.s(k), R.s(k)))
    return _domain((2,), lo, hi, "non-elementary-abelian catalog entries"), rows, [], {}


_STRUCT_NAMES = {ExtraspecialKind.PLUS: "ESp", ExtraspecialKind.MINUS: "ESm", ExtraspecialKind.ALMOST: "AES"}


@register("lem2.6", "structure of extraspecial, almost and generalized extraspecial 2-groups", max_n=6)
def _lem26(store: LatticeStore, params: Params):
    hi = _max_n(params, 6)
    rows = []
    for r in (1, 2):
        for kind, want in (
            (ExtraspecialKind.PLUS, Special.EXTRASPECIAL),
            (ExtraspecialKind.MINUS, Special.EXTRASPECIAL),
            (ExtraspecialKind.ALMOST, Special.ALMOST_EXTRASPECIAL),
        ):
            G = build_extraspecial(kind, r)
            got = classify_special(G)
            order = 2 ** (2 * r + 2 if kind is ExtraspecialKind.ALMOST else 2 * r + 1)
            rows.append(Row(G.label, "classification", got.value, want.value, got is want, got is want))
            rows.append(Row(G.label, "order", str(G.order), str(order), G.order == order, G.order == order))
        plus, minus = build_extraspecial(ExtraspecialKind.PLUS, r), build_extraspecial(ExtraspecialKind.MINUS, r)
        iso = are_isomorphic(plus, minus)
        rows.append(Row(f"{plus.label} vs {minus.label}", "isomorphic", str(iso), "False", not iso, not iso))
    # every catalog entry with one of the three structures has the stated form
    for e in select(2, 3, hi):
        G = build_group(e.spec)
        cls = classify_special(G)
        if cls is Special.NONE:
            continue
        forms = _structure_forms(e.n, cls)
        match = next((f for f in forms if are_isomorphic(G, build_group(f))), None)
        rows.append(Row(e.spec, f"{cls.value} normal form", str(match), " | ".join(forms), match is not None, match is not None))
    return f"ESp(r), ESm(r), AES(r) for r in {{1, 2}}; p = 2 catalog entries with n <= {hi}", rows, [], {}


def _structure_forms(n: int, cls: Special) -> list[str]:
    out = []
    for r in range(1, n):
        if cls is Special.EXTRASPECIAL and 2 * r + 1 == n:
            out += [f"ESp({r})", f"ESm({r})"]
        if cls is Special.ALMOST_EXTRASPECIAL and 2 * r + 2 == n:
            out.append(f"AES({r})")
        if cls is Special.GENERALIZED_EXTRASPECIAL:
            for base, size in ((f"ESp({r})", 2 * r + 1), (f"ESm({r})", 2 * r + 1), (f"AES({r})", 2 * r + 2)):
                if size <= n:
                    out.append(_power_spec(base, 2, n - size))
    return out


_SPECIAL_SMALL = ["ESp(1)", "ESm(1)", "AES(1)", "ESp(2)", "ESm(2)", "AES(2)"]


@register(
    "lem2.7",
    "|S_{a,b}(G)| <= |S_{a,b}(D8 x C2^(n-3))| for (almost) extraspecial G, all a, b",
    max_n=6,
)
def _lem27(store: LatticeStore, params: Params):
    hi = _max_n(params, 6)
    rows = []
    for spec in _SPECIAL_SMALL:
        G = build_group(spec)
        n = G.exponent_n
        if n > hi:
            continue
        ref = _power_spec("D8", 2, n - 3)
        L, R = store.lattice(spec), store.lattice(ref)
        for alpha in range(n + 1):
            for beta in range(n + 1 - alpha):
                a = count_sections(G, alpha, beta, L)
                b = count_sections(R.group, alpha, beta, R)
                rows.append(_le(spec, f"|S_{alpha},{beta}| vs {ref}", a, b))
    return f"(almost) extraspecial groups {', '.join(_SPECIAL_SMALL)} with n <= {hi}", rows, [], {}


@register("lem2.8", "delta_2(G) <= delta_2(D8 x C2^(n-3)) for (almost) extraspecial G", max_n=8)
def _lem28(store: LatticeStore, params: Params):
    hi = _max_n(params, 8)
    rows = []
    for kind in ExtraspecialKind:
        for r in range(1, 4):
            spec = f"{_STRUCT_NAMES[kind]}({r})"
            G = build_group(spec)
            n = G.exponent_n
            if n > hi:
                continue
            ref = _power_spec("D8", 2, n - 3)
            L = store.lattice(spec, max_exponent=2)
            d2 = L.delta(2)
            rows.append(_le(spec, f"delta_2 vs delta_2({ref})", d2, store.lattice(ref, max_exponent=2).delta(2)))
            sec = count_sections(G, 2, 0, L)
            rows.append(Row(spec, "delta_2 vs |S_2,0|", str(d2), str(sec), d2 == sec, d2 == sec))
    return f"ESp(r), ESm(r), AES(r) for r <= 3 with n <= {hi}", rows, [], {}


GOURSAT_PAIRS = [
    ("D8", "C2^2"), ("Q8", "C4"), ("C2", "C2"), ("C2^2", "C2"), ("C4", "C2"),
    ("D8", "C2"), ("Q8", "C2"), ("C4 x C2", "C4"), ("D8", "C4"), ("C2^3", "C2^2"),
    ("D8", "D8"), ("Q8", "D8"), ("C3", "C3"), ("C9", "C3"), ("Heis(3)", "C3"),
    ("C2^4", "C2^3"),
]  # fmt: skip


@register("lem2.9", "Goursat quintuples realize exactly the subgroups of A x B")
def _lem29(store: LatticeStore, params: Params):
    pairs = params.pairs or GOURSAT_PAIRS
    rows = []
    for a, b in pairs:
        A, B = build_group(a), build_group(b)
        recs = goursat_enumerate(A, B)
        realized = [r.realized.bits for r in recs]
        lattice = enumerate_subgroups(direct_product(A, B)).mask_set()
        law = all(r.realized.order == r.A1.order * r.B2.order == r.A2.order * r.B1.order for r in recs)
        ok = len(set(realized)) == len(realized) and set(realized) == lattice and law
        rows.append(Row(f"{A.label} ; {B.label}", "quintuples vs subgroups of A x B", str(len(realized)), str(len(lattice)), ok, ok))
    return f"{len(pairs)} pairs (A, B)", rows, [], {}


@register("census", "|G| = 1 + sum_k (p^k - p^(k-1)) c_k(G)", p=None, max_n=None)
def _census(store: LatticeStore, params: Params):
    ps = _primes(params, (2, 3, 5))
    hi = _max_n(params, 7)
    lo = _min_n(params, 1)
    rows = []
    for p in ps:
        for e in select(p, lo, hi):
            L = store.lattice(e.spec)
            total = 1 + sum((p**k - p ** (k - 1)) * L.c(k) for k in range(1, e.n + 1))
            rows.append(Row(e.spec, "|G| vs 1 + sum (p^k - p^(k-1)) c_k", str(p**e.n), str(total), p**e.n == total, p**e.n == total))
    return _domain(ps, lo, hi), rows, [], {}


DELTA2_GROUPS = ["C2^2", "C4", "D8", "Q8", "C4 x C2", "D8 * C4", "ESp(2)"]


@register(
    "delta2-formula",
    "delta_2(A x C2^m) from s_1(A), delta_2(A); corrected count vs brute force, displayed count discrepancies",
    max_n=4,
)
def _delta2(store: LatticeStore, params: Params):
    max_m = _max_n(params, 4)
    rows, discrepancies = [], []
    stats = {}
    for spec in DELTA2_GROUPS:
        A = build_group(spec)
        L = store.lattice(spec, max_exponent=2)
        stats[A.label] = (L.s(1), L.delta(2), L)
        for m in range(max_m + 1):
            corrected = delta2_product_count(A, m, CountMode.CORRECTED, L)
            printed = delta2_product_count(A, m, CountMode.PAPER_DISPLAYED, L)
            truth = delta2_of_product(A, m)
            rows.append(Row(A.label, f"delta_2(A x C2^{m}) corrected vs brute force", str(corrected), str(truth), corrected == truth, corrected == truth))
            if printed != truth:
                discrepancies.append(
                    {"spec": A.label, "m": m, "paper_displayed": str(printed), "true": str(truth), "difference": str(truth - printed)}
                )
    for (a, (s1a, d2a, La)), (b, (s1b, d2b, Lb)) in combinations(stats.items(), 2):
        for lo_, hi_, Llo, Lhi in ((a, b, La, Lb), (b, a, Lb, La)):
            s_lo, d_lo = stats[lo_][0], stats[lo_][1]
            s_hi, d_hi = stats[hi_][0], stats[hi_][1]
            if s_lo <= s_hi and d_lo <= d_hi:
                for m in range(max_m + 1):
                    x = delta2_product_count(Llo.group, m, lattice=Llo)
                    y = delta2_product_count(Lhi.group, m, lattice=Lhi)
                    rows.append(_le(f"{lo_} ; {hi_}", f"monotone transfer at m = {m}", x, y))
    notes = [
        "the displayed total drops the 3 choices of A1 of order 2, the 6 isomorphisms C2^2 -> C2^2 "
        "and the A1 = A2 term; both totals are monotone in s_1(A) and delta_2(A)"
    ]
    return f"A in {{{', '.join(DELTA2_GROUPS)}}}, 0 <= m <= {max_m}", rows, notes, {"discrepancies": discrepancies}


# -- entry points -------------------------------------------------------------


def list_checks() -> list[tuple[str, str, dict[str, Any]]]:
    return [(c.check_id, c.description, dict(c.defaults)) for c in REGISTRY.values()]


def run_check(
    check_id: str,
    p: int | None = None,
    max_n: int | None = None,
    min_n: int | None = None,
    experimental_p2: bool = False,
    pairs: list[tuple[str, str]] | None = None,
    store: LatticeStore | None = None,
) -> CheckReport:
    if check_id not in REGISTRY:
        raise UnknownCheckError(check_id)
    check = REGISTRY[check_id]
    params = Params(p, min_n, max_n, experimental_p2, pairs)
    store = store or LatticeStore()
    start = time.perf_counter()
    domain, rows, notes, extra = check.run(store, params)
    forced = extra.pop("status", None)
    witnesses = list(dict.fromkeys(r.spec for r in rows if not r.ok))
    if forced:
        status, witnesses = forced, []
    elif not rows:
        status = "Skipped"
    else:
        status = "Fail" if witnesses else "Pass"
    parameters = {
        "p": p,
        "min_n": min_n,
        "max_n": max_n,
        "experimental_p2": experimental_p2,
        "pairs": [list(x) for x in pairs] if pairs else None,
    }
    return CheckReport(check_id, status, domain, parameters, rows, witnesses, notes, extra, time.perf_counter() - start)
