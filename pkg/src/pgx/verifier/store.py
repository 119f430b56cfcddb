"""Lattice store: in-memory memo plus an optional on-disk cache.

Disk entries are lattice exports keyed by a hash of the engine version and
the canonical spec string, so a new engine version never reads old files.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .. import __version__
from ..group_core import GroupError, GroupTable
from ..lattice import SubgroupLattice, enumerate_subgroups, lattice_from_dict, lattice_to_dict
from ..spec_language import build_group, canonical

log = logging.getLogger(__name__)

ENGINE_VERSION = __version__


def write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class LatticeStore:
    def __init__(self, cache_dir: str | os.PathLike | None = None):
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        if self.cache_dir is not None:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._memo: dict[tuple[str, int | None], SubgroupLattice] = {}
        self.disk_hits = 0

    def group(self, spec: str) -> GroupTable:
        return build_group(canonical(spec))

    def _path(self, spec: str) -> Path:
        assert self.cache_dir is not None
        digest = hashlib.sha256(f"{ENGINE_VERSION}\0{spec}".encode()).hexdigest()[:32]
        return self.cache_dir / f"{digest}.json"

    def lattice(self, spec: str, max_exponent: int | None = None) -> SubgroupLattice:
        """Lattice of the group named by ``spec``; partial when ``max_exponent`` is set."""
        spec = canonical(spec)
        G = build_group(spec)
        if max_exponent is not None and max_exponent >= G.exponent_n:
            max_exponent = None
        full = self._memo.get((spec, None))
        if full is not None:
            if max_exponent is None:
                return full
            return SubgroupLattice(G, full.by_exponent[: max_exponent + 1])
        key = (spec, max_exponent)
        if key in self._memo:
            return self._memo[key]
        L = self._load(spec, G) if max_exponent is None else None
        if L is None:
            L = enumerate_subgroups(G, max_exponent=max_exponent)
            if max_exponent is None:
                self._save(spec, L)
        self._memo[key] = L
        return L

    def _load(self, spec: str, G: GroupTable) -> SubgroupLattice | None:
        if self.cache_dir is None:
            return None
        path = self._path(spec)
        if not path.exists():
            return None
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            if data["group"]["spec"] != spec:
                return None
            L = lattice_from_dict(data, G)
        except (OSError, ValueError, KeyError, GroupError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        self.disk_hits += 1
        return L

    def _save(self, spec: str, L: SubgroupLattice) -> None:
        if self.cache_dir is None:
            return
        write_atomic(self._path(spec), json.dumps(lattice_to_dict(L, spec)) + "\n")
