"""Plain-data helpers behind the count, lattice and goursat subcommands."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from ..goursat import goursat_enumerate
from ..lattice import SubgroupLattice, lattice_to_dict
from ..spec_language import build_group, canonical
from .store import LatticeStore, write_atomic


def export_lattice(spec: str, path: str | Path, store: LatticeStore | None = None) -> dict[str, Any]:
    """Write the lattice export of ``spec`` to ``path`` and return it."""
    spec = canonical(spec)
    L = (store or LatticeStore()).lattice(spec)
    data = lattice_to_dict(L, spec)
    write_atomic(Path(path), json.dumps(data, ensure_ascii=False) + "\n")
    return data


def counts_object(spec: str, L: SubgroupLattice) -> dict[str, Any]:
    return {
        "spec": spec,
        "order": L.group.order,
        "s": [str(v) for v in L.counts_s],
        "c": [str(v) for v in L.counts_c],
        "delta": [str(v) for v in L.counts_delta],
        "totals": {"s": str(L.total_s), "c": str(L.total_c), "delta": str(sum(L.counts_delta))},
    }


def count_command(spec: str, store: LatticeStore | None = None) -> tuple[dict[str, Any], str]:
    """Counts of ``spec`` as a JSON-ready object and as a printed table."""
    spec = canonical(spec)
    L = (store or LatticeStore()).lattice(spec)
    obj = counts_object(spec, L)
    lines = [f"{spec}  (order {L.group.order})", f"{'k':>3} {'s_k':>8} {'c_k':>8} {'delta_k':>8}"]
    for k, (s, c, d) in enumerate(zip(L.counts_s, L.counts_c, L.counts_delta)):
        lines.append(f"{k:>3} {s:>8} {c:>8} {d:>8}")
    t = obj["totals"]
    lines.append(f"total s = {t['s']}, c = {t['c']}, delta = {t['delta']}")
    return obj, "\n".join(lines)


def goursat_command(spec_a: str, spec_b: str) -> dict[str, Any]:
    A, B = build_group(spec_a), build_group(spec_b)
    recs = goursat_enumerate(A, B)
    return {
        "A": A.label,
        "B": B.label,
        "count": str(len(recs)),
        "quintuples": [
            {
                "A1": list(r.A1.elements()),
                "A2": list(r.A2.elements()),
                "B1": list(r.B1.elements()),
                "B2": list(r.B2.elements()),
                "phi": list(r.phi),
                "order": r.realized.order,
            }
            for r in recs
        ],
    }
