from __future__ import annotations

import json

import pytest

from pgx.group_core import are_isomorphic, group_profile
from pgx.spec_language import build_group
from pgx.verifier.catalog import ORDER_16, catalog, order16_completeness, partitions, select
from pgx.verifier.checks import UnknownCheckError, list_checks, run_check
from pgx.verifier.store import LatticeStore


def test_catalog_specs_build_and_tags_match():
    for e in catalog():
        G = build_group(e.spec)
        prof = group_profile(G)
        assert G.order == e.prime**e.n
        assert ("abelian" in e.tags) == prof.is_abelian
        assert ("elementary-abelian" in e.tags) == prof.is_elementary_abelian
        assert ("cyclic" in e.tags) == prof.is_cyclic


def test_catalog_covers_every_abelian_type():
    for p, top in ((2, 7), (3, 5), (5, 4)):
        for n in range(1, top + 1):
            abelian = [e for e in select(p, n, n) if "abelian" in e.tags]
            assert len(abelian) == sum(1 for _ in partitions(n))


def test_order_16_is_complete():
    ok, clashes = order16_completeness()
    assert ok and clashes == [] and len(ORDER_16) == 14


def test_no_duplicate_specs():
    specs = [e.spec for e in catalog()]
    assert len(specs) == len(set(specs))


def test_registry():
    checks = list_checks()
    assert len(checks) >= 16
    assert len({c[0] for c in checks}) == len(checks)
    with pytest.raises(UnknownCheckError):
        run_check("no-such-check")


def test_thm11_equality_rows_are_elementary_abelian(store):
    r = run_check("thm1.1", p=2, max_n=5, store=store)
    assert r.status == "Pass"
    eq = {row.spec for row in r.rows if row.equal}
    assert eq == {e.spec for e in select(2, 1, 5, "elementary-abelian")}


def test_thm34_row_for_d8_x_c2(store):
    r = run_check("thm3.4", min_n=4, max_n=4, store=store)
    assert r.status == "Pass"
    row = next(x for x in r.rows if x.spec == "D8 x C2" and x.quantity.startswith("delta_2"))
    assert (row.lhs, row.rhs) == ("13", "13")


def test_lem29_pair(store):
    r = run_check("lem2.9", pairs=[("D8", "C2^2")], store=store)
    assert r.status == "Pass" and r.rows[0].lhs == r.rows[0].rhs == "158"


def test_prop32_rows_are_thm33_rows_at_r1(store):
    a = run_check("prop3.2", max_n=4, store=store)
    b = run_check("thm3.3", max_n=4, store=store)
    assert a.status == b.status == "Pass"
    r1 = [row for row in b.rows if "C2^1" in row.quantity or "C3^1" in row.quantity]
    assert [vars(x) for x in a.rows] == [vars(x) for x in r1]


@pytest.mark.parametrize("check_id", ["thm1.1", "lem2.3", "lem2.6", "delta2-formula"])
def test_checks_are_idempotent(store, check_id):
    a = run_check(check_id, max_n=4 if check_id != "delta2-formula" else 2, store=store)
    b = run_check(check_id, max_n=4 if check_id != "delta2-formula" else 2, store=store)
    assert json.dumps(a.to_dict(timing=False)) == json.dumps(b.to_dict(timing=False))


def test_status_matches_witnesses(store):
    for check_id, _, _ in list_checks():
        if check_id in ("thm3.3", "prop3.2", "census", "thm3.4", "lem2.9"):
            continue  # exercised elsewhere
        r = run_check(check_id, max_n=4, store=store)
        assert (r.status == "Fail") == bool(r.witnesses)


def test_prop31_counterexample(store):
    """The exponent-weighted bound fails for C3 wr C3 and its product with C3."""
    r = run_check("prop3.1", store=store)
    assert r.status == "Fail"
    assert r.witnesses == ["(C3^3):C3", "(C3^3):C3 x C3"]
    row = next(x for x in r.rows if x.spec == "(C3^3):C3")
    assert (row.lhs, row.rhs) == ("21", "18")
    wreath = build_group("(C3^3):C3")
    assert group_profile(wreath).exponent == 9 and not are_isomorphic(wreath, build_group("Heis(3) x C3"))


def test_prop31_holds_at_p5(store):
    assert run_check("prop3.1", p=5, store=store).status == "Pass"


def test_prop31_p2_is_experimental(store):
    r = run_check("prop3.1", p=2, max_n=4, store=store)
    assert r.status == "Skipped" and r.rows == []
    r = run_check("prop3.1", p=2, max_n=4, experimental_p2=True, store=store)
    assert r.status == "Skipped" and r.rows and r.witnesses == []


def test_disk_cache_is_reused(tmp_path):
    first = LatticeStore(tmp_path)
    L = first.lattice("D8 x C2")
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    second = LatticeStore(tmp_path)
    assert second.lattice("D8 x C2").mask_set() == L.mask_set()
    assert second.disk_hits == 1


def test_cache_ignores_corrupt_entries(tmp_path):
    LatticeStore(tmp_path).lattice("Q8")
    (path,) = tmp_path.glob("*.json")
    path.write_text("{not json", encoding="utf-8")
    fresh = LatticeStore(tmp_path)
    assert fresh.lattice("Q8").total_s == 6 and fresh.disk_hits == 0


def test_cache_is_keyed_by_engine_version(tmp_path, monkeypatch):
    import pgx.verifier.store as store_mod

    LatticeStore(tmp_path).lattice("Q8")
    monkeypatch.setattr(store_mod, "ENGINE_VERSION", "0.0.0-other")
    other = LatticeStore(tmp_path)
    other.lattice("Q8")
    assert other.disk_hits == 0 and len(list(tmp_path.glob("*.json"))) == 2
