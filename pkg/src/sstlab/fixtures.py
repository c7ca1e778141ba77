"""Frozen verification fixtures.

The seven-point counterexample: a near-convex bowl whose middle path
vertex is dented inward.  Its six-edge path blocks every non-crossing
spanning tree of diameter at most 3 yet misses one of diameter 4, and
it is neither a star nor a comb.  Coordinates were produced by the
seeded parametric search in scripts/derive_fig7.py and frozen here;
every property is re-checked by the oracle in the verification
scenario, so the freeze is a convenience, not a trust assumption.

The counterexample scales: either end edge of the path can be extended
into a longer convex polygonal arc.  fig7_enlarged grows the fixture
one hull vertex at a time and re-verifies each output with the oracle.
"""

from __future__ import annotations

from .enumeration import Family, blocks
from .classify import classify
from .constructions import central_edge_obstruction
from .graph import Config, EdgeSet, boundary_edges, is_noncrossing
from .instances import Instance
from .geometry import Point

FIG7_POINTS: tuple[tuple[int, int], ...] = (
    (0, 80),
    (20, 20),
    (70, 0),
    (100, 3),
    (130, 0),
    (180, 20),
    (200, 80),
)

#: The path a0-a1-...-a6 under test.
FIG7_PATH: tuple[tuple[int, int], ...] = tuple((i, i + 1) for i in range(6))

#: The canonically smallest diameter-4 tree avoiding the path, as the
#: blocking oracle reports it.
FIG7_T4_WITNESS: tuple[tuple[int, int], ...] = (
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (1, 3),
    (2, 4),
)


def fig7_instance() -> Instance:
    points = tuple(Point(x, y) for x, y in FIG7_POINTS)
    n = len(points)
    return Instance(
        points=points,
        edge_sets={
            "B": EdgeSet.from_pairs(n, FIG7_PATH),
            "T": EdgeSet.from_pairs(n, FIG7_T4_WITNESS),
        },
        name="fig7",
    )


def verify_counterexample(config: Config, path: EdgeSet) -> EdgeSet:
    """Oracle check that a path over all vertices is a diameter-3
    blocker missing some diameter-4 tree; returns that witness tree.

    Raises ValueError describing the first failed property.  Used both
    by the verification scenario and by the enlargement generator.
    """
    n = config.n
    if len(path) != n - 1:
        raise ValueError("path must have n-1 edges")
    if not is_noncrossing(config, path):
        raise ValueError("path crosses itself")
    bd = boundary_edges(config)
    first, last = (0, 1), (n - 2, n - 1)
    if first not in path or first not in bd:
        raise ValueError("first path edge is not a boundary edge of the hull")
    if last not in path or last not in bd:
        raise ValueError("last path edge is not a boundary edge of the hull")
    outcome = classify(config, path)
    if outcome.is_star or outcome.is_comb:
        raise ValueError("path classifies as star or comb")
    for i in range(n):
        for j in range(i + 3, n):
            if central_edge_obstruction(config, path, i, j) is None:
                raise ValueError(f"no central-edge obstruction for ({i},{j})")
    if not blocks(config, path, Family.trees_diam_at_most(3)).blocks:
        raise ValueError("path does not block diameter-3 trees")
    report = blocks(config, path, Family.trees_diam_at_most(4))
    if report.blocks:
        raise ValueError("path blocks diameter-4 trees as well")
    assert report.witness is not None
    return report.witness


#: Candidate extension points per added arc vertex, tried in order; the
#: first whose enlarged instance passes verify_counterexample wins.
_START_EXTENSIONS: tuple[tuple[int, int], ...] = (
    (-20, 150),
    (-25, 150),
    (-20, 160),
    (-30, 170),
    (-45, 230),
    (-40, 200),
)
_END_EXTENSIONS: tuple[tuple[int, int], ...] = (
    (220, 150),
    (225, 150),
    (220, 160),
    (230, 170),
    (245, 230),
    (240, 200),
)


def fig7_enlarged(extra_start: int = 1, extra_end: int = 1) -> Instance:
    """The counterexample with its end edges replaced by longer convex
    arcs; every intermediate enlargement is re-verified by the oracle.

    Enlargement is capped by the enumeration size guard (n <= 10).
    """
    if extra_start < 0 or extra_end < 0:
        raise ValueError("extension counts must be nonnegative")
    pts = [Point(x, y) for x, y in FIG7_POINTS]

    def grow(candidates, prepend: bool) -> None:
        for cand in candidates:
            trial = ([Point(*cand)] + pts) if prepend else (pts + [Point(*cand)])
            try:
                config = Config.from_points(trial)
                path = EdgeSet.from_pairs(
                    config.n, [(i, i + 1) for i in range(config.n - 1)]
                )
                verify_counterexample(config, path)
            except ValueError:
                continue
            pts[:] = trial
            return
        raise ValueError("no candidate extension point verified")

    used_start = 0
    used_end = 0
    for step in range(max(extra_start, extra_end)):
        if used_start < extra_start:
            grow(_START_EXTENSIONS[step:], prepend=True)
            used_start += 1
        if used_end < extra_end:
            grow(_END_EXTENSIONS[step:], prepend=False)
            used_end += 1

    n = len(pts)
    config = Config.from_points(pts)
    path = EdgeSet.from_pairs(n, [(i, i + 1) for i in range(n - 1)])
    witness = verify_counterexample(config, path)
    return Instance(
        points=tuple(pts),
        edge_sets={"B": path, "T": witness},
        name=f"fig7-enlarged-{extra_start}-{extra_end}",
    )
