"""Command-line workbench: build the geometry, run verification suites, and
export artifacts in diffable text formats.

Commands: ``build``, ``verify <target>``, ``export <kind> <path>``.
Exit codes: 0 all pass, 1 verification failure, 2 input/environment error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from importlib import resources
from pathlib import Path

import numpy as np

from . import groupcore, incidence, kernels, subgeometries, tower, valuations
from . import octagon as octmod
from .errors import Malformed, MissingCache, NearoctError
from .incidence import Geometry
from .subgeometries import Suboctagon, ThinTarget

VERIFY_TARGETS = (
    "near-octagon",
    "suborbits",
    "quads",
    "hexagon",
    "suboctagons",
    "tower",
    "valuations",
    "all",
)

EXPORT_KINDS = (
    "octagon",
    "hexagon",
    "gprime",
    "suboctagons",
    "valuations",
    "g24-graph",
    "suzuki-graph",
    "level2-graph",
    "level1-graph",
    "level0-graph",
    "suborbit-report",
    "valuation-report",
)

_ENV = {
    "generators": "NEAROCT_GENERATORS",
    "cache_dir": "NEAROCT_CACHE_DIR",
    "threads": "NEAROCT_THREADS",
    "budget": "NEAROCT_BUDGET",
    "seed": "NEAROCT_SEED",
}


def default_generator_path() -> Path:
    return Path(resources.files("nearoct.data") / "g24_2_generators.txt")


def _sha256(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class Workbench:
    """Lazily builds every object of the pipeline, reusing text caches in
    the cache directory when they match the current generator file."""

    def __init__(self, generators=None, cache_dir=None, threads=None,
                 budget=None, seed=None):
        self.generators_path = Path(generators or default_generator_path())
        if not self.generators_path.is_file():
            raise Malformed(f"generator file not found: {self.generators_path}")
        self.cache_dir = Path(cache_dir or "nearoct-cache")
        self.budget = int(budget) if budget else 50_000_000
        self.seed = int(seed) if seed else 0
        self.threads = int(threads) if threads else None
        if self.threads and kernels.using_numba():
            try:
                import numba

                numba.set_num_threads(self.threads)
            except ValueError:
                pass
        self._memo = {}
        self.timings = {}

    # -- caching helpers ---------------------------------------------------

    def _cache_ok(self) -> bool:
        stamp = self.cache_dir / "cache-key.txt"
        return stamp.is_file() and stamp.read_text().strip() == _sha256(
            self.generators_path
        )

    def _write_stamp(self):
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        (self.cache_dir / "cache-key.txt").write_text(
            _sha256(self.generators_path) + "\n"
        )

    def _get(self, key, builder):
        if key not in self._memo:
            start = time.perf_counter()
            self._memo[key] = builder()
            self.timings[key] = round(time.perf_counter() - start, 3)
        return self._memo[key]

    # -- group layer -------------------------------------------------------

    @property
    def gens(self):
        return self._get(
            "gens", lambda: groupcore.load_generator_file(self.generators_path)
        )

    @property
    def cls(self):
        def build():
            x = groupcore.find_central_involution(self.gens, seed=self.seed)
            return groupcore.conjugation_orbit(x, self.gens)

        return self._get("class", build)

    @property
    def actions(self):
        return self._get(
            "actions", lambda: groupcore.class_action(self.cls, self.gens)
        )

    @property
    def orbitals(self):
        return self._get(
            "orbitals",
            lambda: groupcore.pair_orbitals(self.cls, self.gens, self.actions),
        )

    # -- geometry layer ----------------------------------------------------

    @property
    def octagon(self):
        return self._get(
            "octagon",
            lambda: octmod.build_octagon(
                self.cls, self.gens, self.orbitals, self.actions
            ),
        )

    @property
    def dm(self):
        return self._get(
            "distances", lambda: incidence.distances(self.octagon.geometry)
        )

    @property
    def diagram(self):
        return self._get(
            "diagram", lambda: octmod.suborbit_diagram(self.octagon, self.dm)
        )

    @property
    def quads(self):
        return self._get(
            "quads", lambda: octmod.enumerate_quads(self.octagon, self.dm)
        )

    @property
    def hexagon(self):
        def build():
            hexagon, report = octmod.build_spread_hexagon(self.octagon, self.quads)
            if not report:
                raise NearoctError(f"spread hexagon axioms failed: {report}")
            return hexagon

        return self._get("hexagon", build)

    @property
    def hexagon_dm(self):
        return self._get(
            "hexagon_distances",
            lambda: incidence.distances(self.hexagon.geometry),
        )

    # -- suboctagon layer --------------------------------------------------

    @property
    def hjs(self):
        def build():
            path = self.cache_dir / "suboctagons.txt"
            if self._cache_ok() and path.is_file():
                rows = _load_rows(path, subgeometries.HJ_POINTS)
                geom = self.octagon.geometry
                return [
                    Suboctagon(r, "regular", incidence.induced_subgeometry(geom, r))
                    for r in rows
                ]
            subs = subgeometries.enumerate_hj_suboctagons(
                self.octagon, self.dm, quads=self.quads
            )
            self._write_stamp()
            _save_rows(path, [s.points for s in subs])
            return subs

        return self._get("suboctagons", build)

    @property
    def gh41(self):
        def build():
            path = self.cache_dir / "gh41.txt"
            if self._cache_ok() and path.is_file():
                rows = _load_rows(path, 105)
                hexgeom = self.hexagon.geometry
                return Suboctagon(
                    rows[0], "thin",
                    incidence.induced_subgeometry(hexgeom, rows[0]),
                )
            found = subgeometries.search_thin_subgeometry(
                self.hexagon.geometry, ThinTarget(4, 6), budget=self.budget
            )
            self._write_stamp()
            _save_rows(path, [found[0].points])
            return found[0]

        return self._get("gh41", build)

    @property
    def gprime(self):
        return self._get(
            "gprime",
            lambda: subgeometries.build_gprime(
                self.octagon, self.dm, self.quads, self.hexagon, self.gh41
            ),
        )

    @property
    def go280(self):
        """The 280 thin suboctagons of the first regular suboctagon, in
        ambient point indices."""

        def build():
            path = self.cache_dir / "go280.txt"
            hj0 = self.hjs[0]
            if self._cache_ok() and path.is_file():
                rows = _load_rows(path, 45)
            else:
                found = subgeometries.search_thin_subgeometry(
                    hj0.induced, ThinTarget(2, 8),
                    exhaustive=True, budget=self.budget,
                )
                rows = sorted(
                    (np.sort(hj0.points[s.points]) for s in found),
                    key=lambda a: tuple(map(int, a)),
                )
                self._write_stamp()
                _save_rows(path, rows)
            geom = self.octagon.geometry
            return [
                Suboctagon(r, "thin", incidence.induced_subgeometry(geom, r))
                for r in rows
            ]

        return self._get("go280", build)

    @property
    def go56(self):
        return self._get(
            "go56",
            lambda: subgeometries.gprime_go21_suboctagons(
                self.octagon, self.gprime, self.hjs
            ),
        )

    # -- tower layer -------------------------------------------------------

    @property
    def g24_graph(self):
        def build():
            graph, report = tower.g2_4_graph(self.octagon.geometry, self.hjs)
            if not report:
                raise NearoctError(f"416-vertex graph is not srg: {report}")
            return graph, report

        return self._get("g24_graph", build)

    @property
    def suzuki(self):
        def build():
            graph, report = tower.suzuki_graph(
                self.octagon, self.hjs, self.g24_graph[0], self.hexagon
            )
            if not report:
                raise NearoctError(f"1782-vertex graph is not srg: {report}")
            return graph, report

        return self._get("suzuki", build)

    # -- valuation layer ---------------------------------------------------

    @property
    def valuations(self):
        def build():
            path = self.cache_dir / "valuations.txt"
            geom = self.hjs[0].induced
            if self._cache_ok() and path.is_file():
                return _load_valuations(path)
            vals = valuations.enumerate_valuations(geom)
            self._write_stamp()
            _save_valuations(path, vals)
            return vals

        return self._get("valuations", build)

    @property
    def descent(self):
        """Graphs at levels 2, 1, 0 of the descending intersection chain."""

        def build():
            geom = self.octagon.geometry
            fam3 = [s.points for s in self.hjs]
            g2, rep2, fam2 = tower.descend_graph(
                2, geom, fam3, self.g24_graph[0].adjacency
            )
            g1, rep1, fam1 = tower.descend_graph(1, geom, fam2, g2.adjacency)
            g0, rep0, _ = tower.descend_graph(0, geom, fam1, g1.adjacency)
            for rep in (rep2, rep1, rep0):
                if not rep:
                    raise NearoctError(f"descending chain check failed: {rep}")
            return {2: g2, 1: g1, 0: g0}

        return self._get("descent", build)

    @property
    def valuation_geometry(self):
        return self._get(
            "valuation_geometry",
            lambda: valuations.build_valuation_geometry(
                self.hjs[0].induced, self.valuations
            ),
        )


# ---------------------------------------------------------------------------
# text cache formats


def _save_rows(path: Path, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        for row in rows:
            fh.write(" ".join(str(int(p)) for p in row) + "\n")


def _load_rows(path: Path, width: int) -> np.ndarray:
    rows = []
    with open(path) as fh:
        for line in fh:
            if line.strip():
                rows.append([int(t) for t in line.split()])
    if not rows or any(len(r) != width for r in rows):
        raise MissingCache(f"{path} is malformed; delete the cache directory")
    return np.asarray(rows, dtype=np.int32)


def _save_valuations(path: Path, vals):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        for f in vals:
            fh.write(valuations.classify_valuation(f)
                     + " " + "".join(str(int(v)) for v in f) + "\n")


def _load_valuations(path: Path) -> np.ndarray:
    rows = []
    with open(path) as fh:
        for line in fh:
            if line.strip():
                _, digits = line.split()
                rows.append([int(c) for c in digits])
    arr = np.asarray(rows, dtype=np.int8)
    if arr.shape != (valuations.N_VALUATIONS, subgeometries.HJ_POINTS):
        raise MissingCache(f"{path} is malformed; delete the cache directory")
    return arr


# ---------------------------------------------------------------------------
# verification suites; each returns a dict of named verdicts


def _verdict(report) -> str:
    return "pass" if report else f"FAIL ({report.notes or report.witness})"


def verify_near_octagon(wb: Workbench) -> dict:
    oct_ = wb.octagon
    rep = incidence.check_near_polygon(oct_.geometry, wb.dm)
    out = {
        "points": oct_.geometry.n_points,
        "lines": oct_.geometry.n_lines,
        "near_polygon": _verdict(rep),
    }
    out.update(rep.parameters)
    ok = bool(rep) and rep.parameters == {"diameter": 4, "s": 2, "t": 10}
    out["verdict"] = "pass" if ok else "FAIL"
    return out


def verify_suborbits(wb: Workbench) -> dict:
    diagram = wb.diagram
    partition = octmod.spread_suborbit_partition_check(wb.octagon, diagram)
    sizes = diagram.suborbit_sizes  # label -> size
    commuting = sizes["O1a"] + sizes["O1b"] + sizes["O2a"]
    ok = bool(partition) and commuting == 62 and sorted(
        sizes.values()
    ) == [1, 2, 20, 40, 320, 640, 1024, 2048]
    return {
        "suborbit_sizes": dict(sorted(sizes.items())),
        "commuting_partners": commuting,
        "spread_partition": _verdict(partition),
        "line_counts": {k: dict(v) for k, v in diagram.line_counts.items()},
        "verdict": "pass" if ok else "FAIL",
    }


def verify_quads(wb: Workbench) -> dict:
    quads = wb.quads
    structure = octmod.quad_structure_checks(wb.octagon, quads)
    environment = octmod.quad_environment_checks(wb.octagon, wb.dm, quads)
    nonspread = octmod.nonspread_line_quad_check(wb.octagon, quads)
    ok = quads.n_quads == 1365 and structure and environment and nonspread
    return {
        "quads": quads.n_quads,
        "structure": _verdict(structure),
        "environment": _verdict(environment),
        "nonspread_lines": _verdict(nonspread),
        "verdict": "pass" if ok else "FAIL",
    }


def verify_hexagon(wb: Workbench) -> dict:
    hexagon = wb.hexagon  # construction already enforces the GH axioms
    drg = incidence.check_distance_regular(
        hexagon.geometry.adjacency_matrix()
    )
    array_ok = drg.parameters.get("intersection_array") == (
        (20, 16, 16), (1, 1, 5),
    )
    law = octmod.spread_distance_check(wb.octagon, wb.dm, hexagon)
    ok = bool(drg) and array_ok and bool(law)
    return {
        "points": hexagon.geometry.n_points,
        "lines": hexagon.geometry.n_lines,
        "intersection_array": drg.parameters.get("intersection_array"),
        "distance_law": _verdict(law),
        "verdict": "pass" if ok else "FAIL",
    }


def verify_suboctagons(wb: Workbench) -> dict:
    hjs = wb.hjs
    sample = hjs[0]
    checks = {
        "count": len(hjs),
        "projection_census": _verdict(
            subgeometries.projection_census(sample, wb.dm)
        ),
        "trace_injectivity": _verdict(
            subgeometries.trace_injectivity_check(sample, wb.dm)
        ),
        "internal_distances": _verdict(
            subgeometries.internal_distance_orbit_check(wb.octagon, sample, wb.dm)
        ),
        "quad_lines": _verdict(
            subgeometries.quad_line_checks(wb.octagon, wb.quads, sample)
        ),
        "dual_embedding": _verdict(
            subgeometries.dual_embedding_check(wb.octagon, wb.quads, sample)
        ),
    }
    gprime = wb.gprime
    checks["gprime_points"] = len(gprime.points)
    checks["gprime_lines"] = gprime.induced.n_lines
    checks["gprime_go21"] = len(wb.go56)
    ok = (
        len(hjs) == 416
        and all(v == "pass" for k, v in checks.items()
                if isinstance(v, str))
        and checks["gprime_points"] == 315
        and checks["gprime_lines"] == 525
        and checks["gprime_go21"] == 56
    )
    checks["verdict"] = "pass" if ok else "FAIL"
    return checks


def verify_tower(wb: Workbench) -> dict:
    g24, g24_rep = wb.g24_graph
    _, suz_rep = wb.suzuki
    geom = wb.octagon.geometry
    fam3 = [s.points for s in wb.hjs]
    g2, rep2, fam2 = tower.descend_graph(2, geom, fam3, g24.adjacency)
    g1, rep1, fam1 = tower.descend_graph(1, geom, fam2, g2.adjacency)
    _, rep0, _ = tower.descend_graph(0, geom, fam1, g1.adjacency)
    _, bonus = tower.bonus_srgs(
        geom, wb.go280, wb.go56, wb.gprime, wb.octagon, wb.hexagon
    )

    def srg_tuple(rep):
        p = rep.parameters
        return (p.get("v"), p.get("k"), p.get("lambda"), p.get("mu"))

    out = {
        "srg_416": srg_tuple(g24_rep),
        "srg_1782": srg_tuple(suz_rep),
        "srg_100": srg_tuple(rep2),
        "srg_36": srg_tuple(rep1),
        "level0": rep0.parameters,
        "srg_280": srg_tuple(bonus["280"]),
        "srg_56": srg_tuple(bonus["56"]),
        "srg_162": srg_tuple(bonus["162"]),
    }
    ok = (
        out["srg_416"] == (416, 100, 36, 20)
        and out["srg_1782"] == (1782, 416, 100, 96)
        and out["srg_100"] == (100, 36, 14, 12)
        and out["srg_36"] == (36, 14, 4, 6)
        and bool(rep0)
        and out["srg_280"] == (280, 36, 8, 4)
        and out["srg_56"] == (56, 10, 0, 2)
        and out["srg_162"] == (162, 56, 10, 24)
    )
    out["verdict"] = "pass" if ok else "FAIL"
    return out


def verify_valuations(wb: Workbench) -> dict:
    geom = wb.hjs[0].induced
    vals = wb.valuations
    census = valuations.valuation_census(geom, vals)
    vg = wb.valuation_geometry
    table = valuations.line_table_census(vg)
    part, _ = valuations.ambient_part(vg)
    part_rep = incidence.check_near_polygon(part, incidence.distances(part))
    iso = valuations.induced_isomorphism_check(
        wb.octagon.geometry, wb.dm, wb.hjs[0].points, vg
    )
    star = valuations.star_product_line_check(
        wb.octagon.geometry, wb.dm, wb.hjs[0].points
    )
    ok = (
        len(vals) == valuations.N_VALUATIONS
        and census and table and iso and star
        and bool(part_rep)
        and part_rep.parameters == {"diameter": 4, "s": 2, "t": 10}
    )
    return {
        "count": len(vals),
        "census": _verdict(census),
        "line_table": _verdict(table),
        "abc_part": f"{part.n_points} points, {part.n_lines} lines",
        "abc_part_near_octagon": _verdict(part_rep),
        "induced_isomorphism": _verdict(iso),
        "star_product_lines": _verdict(star),
        "verdict": "pass" if ok else "FAIL",
    }


def suborbit_report(wb: Workbench) -> str:
    """Orbit-class sizes and per-point line counts as a diffable report."""
    diagram = wb.diagram
    lines = [f"suborbit diagram at base point {diagram.base}"]
    for label in sorted(diagram.suborbit_sizes):
        lines.append(f"{label} size {diagram.suborbit_sizes[label]}")
        for pattern, count in sorted(diagram.line_counts[label].items()):
            lines.append(f"  lines {'-'.join(pattern)}: {count} per point")
    return "\n".join(lines) + "\n"


def valuation_report(wb: Workbench) -> str:
    """Value-class and line-pattern censuses as a diffable report."""
    vg = wb.valuation_geometry
    out = [f"valuations {len(vg.valuations)}"]
    out.append("value classes")
    for t in sorted(valuations.VALUE_TABLE):
        rows = vg.valuations[vg.types == t]
        f = rows[0]
        dist = np.bincount(f, minlength=5)[:5]
        out.append(
            f"  {t}: count {len(rows)} max {int(f.max())} "
            f"zeros {int((f == 0).sum())} "
            f"distribution {' '.join(str(int(v)) for v in dist)}"
        )
    out.append(f"lines {vg.geometry.n_lines}")
    out.append("line patterns")
    census = {}
    for t in vg.line_types:
        census[t] = census.get(t, 0) + 1
    for t in sorted(census):
        out.append(f"  {t}: {census[t]}")
    out.append("lines per point by class")
    indptr, line_ids = vg.geometry.lines_of_point()
    for t in sorted(valuations.LINE_TABLE):
        p = int(np.flatnonzero(vg.types == t)[0])
        mine = vg.line_types[line_ids[indptr[p]:indptr[p + 1]]]
        pattern = {}
        for name in mine:
            pattern[name] = pattern.get(name, 0) + 1
        row = " ".join(f"{name}={count}"
                       for name, count in sorted(pattern.items()))
        out.append(f"  {t}: {row}")
    return "\n".join(out) + "\n"


VERIFIERS = {
    "near-octagon": verify_near_octagon,
    "suborbits": verify_suborbits,
    "quads": verify_quads,
    "hexagon": verify_hexagon,
    "suboctagons": verify_suboctagons,
    "tower": verify_tower,
    "valuations": verify_valuations,
}


# ---------------------------------------------------------------------------
# commands


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    return value


def _manifest(wb: Workbench, command: str, results: dict) -> dict:
    return {
        "command": command,
        "generator_file": str(wb.generators_path),
        "generator_digest": _sha256(wb.generators_path),
        "kernel_path": "numba" if kernels.using_numba() else "numpy",
        "results": _jsonable(results),
        "timings_seconds": dict(sorted(wb.timings.items())),
    }


def _write_manifest(wb: Workbench, manifest: dict, name: str):
    wb.cache_dir.mkdir(parents=True, exist_ok=True)
    path = wb.cache_dir / f"manifest-{name}.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def cmd_build(wb: Workbench) -> int:
    oct_ = wb.octagon
    quads = wb.quads
    wb.hexagon
    wb._write_stamp()
    incidence.save_geometry(oct_.geometry, wb.cache_dir / "octagon.geom")
    _save_rows(wb.cache_dir / "octagon-spread.txt",
               [oct_.spread_line_ids])
    _save_rows(wb.cache_dir / "quads.txt", quads.quads)
    incidence.save_geometry(wb.hexagon.geometry, wb.cache_dir / "hexagon.geom")
    _save_rows(wb.cache_dir / "hexagon-spread-ids.txt",
               [wb.hexagon.spread_line_ids])
    summary = (
        f"points={oct_.geometry.n_points} lines={oct_.geometry.n_lines} "
        f"spread={int(oct_.spread_flags.sum())} quads={quads.n_quads}"
    )
    print(summary)
    manifest = _manifest(wb, "build", {"summary": summary})
    path = _write_manifest(wb, manifest, "build")
    print(f"manifest: {path}")
    return 0


def cmd_verify(wb: Workbench, target: str) -> int:
    targets = list(VERIFIERS) if target == "all" else [target]
    results = {}
    failed = False
    for name in targets:
        outcome = VERIFIERS[name](wb)
        results[name] = outcome
        print(f"{name}: {outcome['verdict']}")
        for key, value in outcome.items():
            if key != "verdict":
                print(f"  {key}: {value}")
        failed = failed or outcome["verdict"] != "pass"
    manifest = _manifest(wb, f"verify {target}", results)
    path = _write_manifest(wb, manifest, f"verify-{target}")
    print(f"manifest: {path}")
    return 1 if failed else 0


def cmd_export(wb: Workbench, kind: str, path: str) -> int:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    if kind == "octagon":
        incidence.save_geometry(wb.octagon.geometry, out)
    elif kind == "hexagon":
        incidence.save_geometry(wb.hexagon.geometry, out)
    elif kind == "gprime":
        incidence.save_geometry(wb.gprime.induced, out)
    elif kind == "suboctagons":
        _save_rows(out, [s.points for s in wb.hjs])
    elif kind == "valuations":
        _save_valuations(out, wb.valuations)
    elif kind == "g24-graph":
        tower.save_graph(wb.g24_graph[0], out)
    elif kind == "suzuki-graph":
        tower.save_graph(wb.suzuki[0], out)
    elif kind in ("level2-graph", "level1-graph", "level0-graph"):
        tower.save_graph(wb.descent[int(kind[5])], out)
    elif kind == "suborbit-report":
        out.write_text(suborbit_report(wb))
    elif kind == "valuation-report":
        out.write_text(valuation_report(wb))
    else:  # pragma: no cover - argparse restricts choices
        raise Malformed(f"unknown export kind {kind}")
    print(f"wrote {out}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nearoct",
        description="Build and verify the 4095-point near octagon and its "
        "subgeometries, tower graphs, and valuations.",
    )
    parser.add_argument("--generators", default=os.environ.get(_ENV["generators"]),
                        help="path to the permutation generator file")
    parser.add_argument("--cache-dir", default=os.environ.get(_ENV["cache_dir"]),
                        help="directory for text caches and manifests")
    parser.add_argument("--threads", type=int,
                        default=os.environ.get(_ENV["threads"]),
                        help="kernel thread count")
    parser.add_argument("--budget", type=int,
                        default=os.environ.get(_ENV["budget"]),
                        help="node budget for backtracking searches")
    parser.add_argument("--seed", type=int,
                        default=os.environ.get(_ENV["seed"]),
                        help="seed for the generator-word stream")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", help="build the core geometry and write caches")
    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("target", choices=VERIFY_TARGETS)
    export = sub.add_parser("export", help="write an artifact as text")
    export.add_argument("kind", choices=EXPORT_KINDS)
    export.add_argument("path")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        wb = Workbench(
            generators=args.generators,
            cache_dir=args.cache_dir,
            threads=args.threads,
            budget=args.budget,
            seed=args.seed,
        )
        if args.command == "build":
            return cmd_build(wb)
        if args.command == "verify":
            return cmd_verify(wb, args.target)
        return cmd_export(wb, args.kind, args.path)
    except (Malformed, MissingCache, FileNotFoundError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NearoctError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
