"""Valuations of the 315-point regular suboctagon and their geometry.

A valuation assigns a natural number to every point such that some point gets
0 and every line carries values {m, m+1, m+1}.  There are 7119 of them in
five classes A-E; the triples {f1, f2, f1*f2} of the star product form a
partial linear space whose A/B/C part is isomorphic to the full 4095-point
geometry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import incidence, kernels
from .errors import (
    ClassificationFailure,
    CountMismatch,
    NotAValuation,
    NotNeighboring,
    TableMismatch,
)
from .incidence import AxiomReport, Geometry

N_VALUATIONS = 7119

#: class -> (count, max value, zero count, value distribution)
VALUE_TABLE = {
    "A": (315, 4, 1, (1, 10, 80, 160, 64)),
    "B": (630, 3, 1, (1, 10, 112, 192, 0)),
    "C": (3150, 3, 1, (1, 26, 128, 160, 0)),
    "D": (1008, 2, 5, (5, 110, 200, 0, 0)),
    "E": (2016, 2, 25, (25, 130, 160, 0, 0)),
}

#: point class -> {line pattern: lines of that pattern through the point}
LINE_TABLE = {
    "A": {"AAA": 5, "ABB": 1, "ACC": 5},
    "B": {"ABB": 1, "BBB": 5, "BBC": 10},
    "C": {"ACC": 1, "BBC": 1, "CCC": 9, "CDD": 4},
    "D": {"CDD": 25, "DDD": 6, "DEE": 1},
    "E": {"DEE": 1, "EEE": 6},
}

AMBIENT_POINT_TYPES = ("A", "B", "C")
AMBIENT_LINE_TYPES = ("AAA", "ABB", "ACC", "BBC", "CCC")


def is_valuation(geom: Geometry, f) -> bool:
    f = np.asarray(f)
    if f.min() < 0 or not (f == 0).any():
        return False
    vals = np.sort(f[geom.lines], axis=1)
    return bool(
        ((vals[:, 1] == vals[:, 0] + 1) & (vals[:, 2] == vals[:, 0] + 1)).all()
    )


def classify_valuation(f) -> str:
    f = np.asarray(f)
    distribution = tuple(np.bincount(f, minlength=5)[:5].tolist())
    for name, (_, _, _, expected) in VALUE_TABLE.items():
        if distribution == expected:
            return name
    raise ClassificationFailure(f"unknown value distribution {distribution}")


def _closing_order(geom: Geometry, anchor: int) -> np.ndarray:
    """A point order for the backtracking search in which nearly every new
    point completes a line whose two other points are already placed, so its
    value is forced up to at most two choices."""
    n = geom.n_points
    indptr, line_ids = geom.lines_of_point()
    degs = np.diff(indptr)
    lp = np.full((n, int(degs.max())), geom.n_lines, dtype=np.int32)
    for v in range(n):
        lp[v, : degs[v]] = line_ids[indptr[v] : indptr[v + 1]]
    per_line = np.zeros(geom.n_lines + 1, dtype=np.int32)  # +1: padding slot
    assigned = np.zeros(n, dtype=bool)
    order = np.empty(n, dtype=np.int32)
    order[0] = anchor
    assigned[anchor] = True
    np.add.at(per_line, lp[anchor], 1)
    per_line[geom.n_lines] = 0
    for step in range(1, n):
        counts = per_line[lp]
        score = ((counts == 2).sum(axis=1) << 8) + (counts == 1).sum(axis=1)
        score[assigned] = -1
        best = int(score.argmax())
        order[step] = best
        assigned[best] = True
        np.add.at(per_line, lp[best], 1)
        per_line[geom.n_lines] = 0
    return order


def enumerate_valuations(geom: Geometry, dm=None) -> np.ndarray:
    """All valuations, canonically ordered: grouped by their least point of
    value zero (the search anchor), then by discovery order of a fixed DFS.
    """
    if dm is None:
        dm = incidence.distances(geom)
    n = geom.n_points
    indptr, line_ids = geom.lines_of_point()
    found = []
    for anchor in range(n):
        order = _closing_order(geom, anchor)
        vmin = np.zeros(n, dtype=np.int8)
        vmin[:anchor] = 1  # the anchor must be the least zero
        vmax = np.minimum(dm.dist[anchor], dm.diameter).astype(np.int8)
        sols = kernels.valuation_search(
            order, indptr, line_ids, geom.lines, vmin, vmax
        )
        found.append(sols)
    out = np.concatenate(found, axis=0)
    if len(out) != N_VALUATIONS:
        raise CountMismatch(f"{len(out)} valuations, expected {N_VALUATIONS}")
    return out


def valuation_census(geom: Geometry, valuations) -> AxiomReport:
    """Class sizes, maxima, zero counts and value distributions against the
    reference table; every enumerated map must satisfy the axioms."""
    types = []
    for f in valuations:
        if not is_valuation(geom, f):
            raise NotAValuation("enumerated map fails the valuation axioms")
        t = classify_valuation(f)
        _, max_value, zeros, _ = VALUE_TABLE[t]
        if int(f.max()) != max_value or int((f == 0).sum()) != zeros:
            raise TableMismatch(f"type {t} signature broken")
        types.append(t)
    counts = {t: types.count(t) for t in VALUE_TABLE}
    expected = {t: row[0] for t, row in VALUE_TABLE.items()}
    if counts != expected:
        return AxiomReport(False, parameters={"counts": counts})
    return AxiomReport(True, parameters={"counts": counts})


# ---------------------------------------------------------------------------
# neighboring relation and star product


def neighboring_epsilon(f1, f2):
    """The shift that witnesses the neighboring relation, or None.

    For distinct neighboring maps the shift is unique; equal maps admit all
    three shifts and we return 0 by convention.
    """
    diff = np.asarray(f1, dtype=np.int16) - np.asarray(f2, dtype=np.int16)
    lo, hi = int(diff.min()), int(diff.max())
    options = [e for e in (-1, 0, 1) if -1 - lo <= e <= 1 - hi]
    if not options:
        return None
    if lo == hi == 0:
        return 0
    if len(options) != 1:
        raise NotNeighboring(f"ambiguous shift {options} for distinct maps")
    return options[0]


def star_product(f1, f2) -> np.ndarray:
    f1 = np.asarray(f1, dtype=np.int16)
    f2 = np.asarray(f2, dtype=np.int16)
    eps = neighboring_epsilon(f1, f2)
    if eps is None:
        raise NotNeighboring("maps are not neighboring")
    g = f2 - eps
    raw = np.where(f1 == g, f1 - 1, np.maximum(f1, g))
    m = int(raw.min())
    if m not in (-1, 0, 1):
        raise NotAValuation(f"star product minimum {m} out of range")
    return (raw - m).astype(np.int8)


# ---------------------------------------------------------------------------
# the geometry of valuations


@dataclass
class ValuationGeometry:
    geometry: Geometry  # 7119 points, three-point lines
    valuations: np.ndarray  # (7119, 315)
    types: np.ndarray  # per point, "A".."E"
    line_types: np.ndarray  # per line, e.g. "BBC"


def build_valuation_geometry(geom: Geometry, valuations) -> ValuationGeometry:
    """Lines are the triples {f1, f2, f1*f2} over distinct neighboring pairs."""
    V = np.ascontiguousarray(valuations, dtype=np.int8)
    index = {V[i].tobytes(): i for i in range(len(V))}
    pairs = kernels.neighboring_pairs(V)
    lines = set()
    for i, j in pairs:
        f3 = star_product(V[i], V[j])
        k = index.get(f3.tobytes())
        if k is None:
            raise NotAValuation("star product is not an enumerated valuation")
        if k == i or k == j:
            continue
        lines.add(tuple(sorted((int(i), int(j), int(k)))))
    line_arr = np.array(sorted(lines), dtype=np.int32)
    vg = Geometry(len(V), line_arr)
    types = np.array([classify_valuation(f) for f in V])
    line_types = np.array(["".join(sorted(types[l])) for l in line_arr])
    return ValuationGeometry(vg, V, types, line_types)


def line_table_census(vg: ValuationGeometry) -> AxiomReport:
    """Per point class, the number of lines of each pattern must be constant
    and match the reference table."""
    indptr, line_ids = vg.geometry.lines_of_point()
    for p in range(vg.geometry.n_points):
        mine = vg.line_types[line_ids[indptr[p] : indptr[p + 1]]]
        pattern = {}
        for t in mine:
            pattern[t] = pattern.get(t, 0) + 1
        if pattern != LINE_TABLE[vg.types[p]]:
            return AxiomReport(
                False, witness=p,
                notes=f"type {vg.types[p]} point sees {pattern}",
            )
    census = {}
    for t in vg.line_types:
        census[t] = census.get(t, 0) + 1
    return AxiomReport(True, parameters={"line_census": dict(sorted(census.items()))})


def ambient_part(vg: ValuationGeometry) -> tuple:
    """The subgeometry on the A/B/C valuations with the five admissible line
    patterns; returns (geometry, selected point ids)."""
    keep = np.flatnonzero(np.isin(vg.types, AMBIENT_POINT_TYPES))
    newid = np.full(vg.geometry.n_points, -1, dtype=np.int32)
    newid[keep] = np.arange(len(keep), dtype=np.int32)
    mask = np.isin(vg.line_types, AMBIENT_LINE_TYPES)
    lines = newid[vg.geometry.lines[mask]]
    if (lines < 0).any():
        raise ClassificationFailure("admissible line leaves the A/B/C part")
    return Geometry(len(keep), lines, labels=keep), keep


# ---------------------------------------------------------------------------
# induced valuations and the isomorphism with the ambient geometry


def induced_valuation(dm, sub_points, x) -> np.ndarray:
    vals = dm.dist[x][np.asarray(sub_points)]
    return (vals - vals.min()).astype(np.int8)


def induced_isomorphism_check(
    geom: Geometry, dm, sub_points, vg: ValuationGeometry
) -> AxiomReport:
    """The map sending each ambient point to the valuation it induces on the
    315-point suboctagon is a bijection onto the A/B/C valuations carrying
    lines to lines; this exhibits the ambient geometry inside the valuation
    geometry."""
    index = {vg.valuations[i].tobytes(): i for i in range(len(vg.valuations))}
    images = np.empty(geom.n_points, dtype=np.int32)
    for x in range(geom.n_points):
        f = induced_valuation(dm, sub_points, x)
        i = index.get(f.tobytes())
        if i is None:
            return AxiomReport(False, witness=x, notes="induced map not a valuation")
        images[x] = i
    if len(set(images.tolist())) != geom.n_points:
        return AxiomReport(False, notes="induced valuations not distinct")
    type_counts = {}
    for t in vg.types[images]:
        type_counts[t] = type_counts.get(t, 0) + 1
    if type_counts != {"A": 315, "B": 630, "C": 3150}:
        return AxiomReport(False, parameters={"type_counts": type_counts})
    in_sub = np.zeros(geom.n_points, dtype=bool)
    in_sub[np.asarray(sub_points)] = True
    if not ((vg.types[images] == "A") == in_sub).all():
        return AxiomReport(False, notes="type A image does not match membership")
    vlines = {tuple(sorted(map(int, l))) for l in vg.geometry.lines}
    image_lines = set()
    for line in geom.lines:
        tri = tuple(sorted(int(images[p]) for p in line))
        if len(set(tri)) != 3 or tri not in vlines:
            return AxiomReport(False, witness=tuple(map(int, line)),
                               notes="line image is not a valuation line")
        pattern = "".join(sorted(vg.types[list(tri)]))
        if pattern not in AMBIENT_LINE_TYPES:
            return AxiomReport(False, notes=f"line image has pattern {pattern}")
        image_lines.add(tri)
    expected = int(np.isin(vg.line_types, AMBIENT_LINE_TYPES).sum())
    if len(image_lines) != geom.n_lines or len(image_lines) != expected:
        return AxiomReport(False, notes="line image not bijective")
    return AxiomReport(
        True,
        parameters={"points": geom.n_points, "lines": len(image_lines)},
    )


def star_product_line_check(geom: Geometry, dm, sub_points) -> AxiomReport:
    """On every ambient line {x,y,z}, the induced valuations satisfy
    f_x * f_y = f_z."""
    F = np.stack([
        induced_valuation(dm, sub_points, x) for x in range(geom.n_points)
    ])
    for line in geom.lines:
        x, y, z = (int(p) for p in line)
        if not np.array_equal(star_product(F[x], F[y]), F[z]):
            return AxiomReport(False, witness=(x, y, z))
    return AxiomReport(True, parameters={"lines_checked": geom.n_lines})
