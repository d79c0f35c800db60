"""Bundled worked example: a wheel graph, its split, and golden data.

The graph is a 4-cycle (edges 1..4) with a hub C joined to every rim
vertex (spokes 5, 6, x, y).  Its cycle matroid, split at X = {x, y}
with marked element e = y, is the running example behind the ``check``
and ``demo-fig2`` commands and the acceptance suite.

The golden lists below are transcribed verbatim from the source example
data this package reproduces.  Three entries are provably impossible:

* closure of {1,4,6,x}: listed as {1,4,6,x,a}, but 1 and 6 span 5
  (the companion golden {1,6,a} -> {1,5,6,a} shows it), so any closure
  containing {1,6} contains 5;
* closure of {4,5,x,gamma}: listed without 3, yet the companion golden
  {4,5,gamma} -> {3,4,5,gamma} plus monotonicity of closure forces 3;
* the split flat {3,4,5,a,x,y}: gamma = y XOR a by construction, so a
  set containing both y and a can only be closed if it contains gamma.

They are kept verbatim so the cross-check machinery reports them rather
than hiding them.
"""

from __future__ import annotations

from .graphs import LabeledGraph, LineSplitSpec, incidence_matrix
from .matroid import BinaryMatroid
from .splitting import SplitContext

WHEEL_EDGES: tuple[tuple[str, str, str], ...] = (
    ("1", "TL", "BL"),
    ("2", "BL", "BR"),
    ("3", "TR", "BR"),
    ("4", "TL", "TR"),
    ("5", "TL", "C"),
    ("6", "BL", "C"),
    ("x", "C", "TR"),
    ("y", "C", "BR"),
)


def showcase_graph() -> LabeledGraph:
    """The rim-plus-hub wheel graph on five vertices and eight edges."""
    return LabeledGraph.from_edges(WHEEL_EDGES)


def showcase_matroid(**kwargs) -> BinaryMatroid:
    """Cycle matroid of the wheel graph (rank 4 on eight elements)."""
    return BinaryMatroid(incidence_matrix(showcase_graph()), **kwargs)


def showcase_context(**kwargs) -> SplitContext:
    """Split of the wheel's cycle matroid at X = {x, y}, e = y."""
    return SplitContext(
        base=showcase_matroid(**kwargs),
        x_set=frozenset({"x", "y"}),
        e="y",
    )


def showcase_split_spec() -> LineSplitSpec:
    """Graph-level split of the hub matching the matroid-level split.

    X = {anchor} + left side = {y, x}, so the anchor y and the spoke x
    stay on the first replacement vertex and the spokes 5, 6 move to
    the second one.
    """
    return LineSplitSpec(
        split_vertex="C",
        anchor_edge="y",
        left_edges=frozenset({"x"}),
        right_edges=frozenset({"5", "6"}),
    )


#: The eleven golden closure queries on the split of the wheel:
#: (query A', expected closure).  The {1,6,gamma} query appears in the
#: source listing without gamma, but its stated closure contains gamma,
#: which forces gamma into the query.
CLOSURE_GOLDENS: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...] = (
    (("4", "5"), ("4", "5")),
    (("1", "5"), ("1", "5", "6")),
    (("1", "4", "6", "x"), ("1", "4", "6", "x", "a")),
    (("1", "6", "a"), ("1", "5", "6", "a")),
    (("2", "6"), ("2", "6", "gamma")),
    (("4", "5", "gamma"), ("3", "4", "5", "gamma")),
    (("1", "6", "gamma"), ("1", "2", "5", "6", "gamma")),
    (("a", "gamma"), ("y", "a", "gamma")),
    (("2", "6", "a"), ("2", "6", "y", "a", "gamma")),
    (("4", "5", "x", "gamma"), ("4", "5", "x", "y", "a", "gamma")),
    (("2", "6", "y"), ("2", "6", "y", "a", "gamma")),
)

#: The 32 listed flats of the wheel's cycle matroid.
BASE_FLATS_LISTED: tuple[tuple[str, ...], ...] = (
    ("1",),
    ("2",),
    ("3",),
    ("4",),
    ("5",),
    ("6",),
    ("x",),
    ("y",),
    ("1", "4"),
    ("1", "3"),
    ("1", "x"),
    ("1", "y"),
    ("1", "2"),
    ("2", "3"),
    ("2", "4"),
    ("2", "5"),
    ("2", "x"),
    ("3", "4"),
    ("3", "5"),
    ("3", "6"),
    ("4", "6"),
    ("4", "y"),
    ("1", "5", "6"),
    ("x", "y", "3"),
    ("2", "6", "y"),
    ("1", "2", "3", "4"),
    ("4", "5", "x"),
    ("1", "2", "5", "6", "y"),
    ("3", "4", "5", "x", "y"),
    ("1", "4", "5", "6", "x"),
    ("2", "3", "6", "x", "y"),
    ("1", "2", "3", "4", "5", "6", "x", "y"),
)

#: The 50 listed flats of the split matroid.
SPLIT_FLATS_LISTED: tuple[tuple[str, ...], ...] = (
    ("1",),
    ("2",),
    ("3",),
    ("4",),
    ("5",),
    ("6",),
    ("x",),
    ("y",),
    ("a",),
    ("gamma",),
    ("1", "4"),
    ("1", "3"),
    ("1", "x"),
    ("1", "y"),
    ("1", "2"),
    ("2", "3"),
    ("2", "4"),
    ("2", "5"),
    ("2", "x"),
    ("3", "4"),
    ("3", "5"),
    ("3", "6"),
    ("4", "6"),
    ("4", "y"),
    ("1", "a"),
    ("2", "a"),
    ("3", "a"),
    ("4", "a"),
    ("5", "a"),
    ("6", "a"),
    ("x", "a"),
    ("1", "gamma"),
    ("3", "gamma"),
    ("4", "gamma"),
    ("5", "gamma"),
    ("x", "gamma"),
    ("1", "5", "6"),
    ("x", "y", "3"),
    ("a", "y", "gamma"),
    ("2", "6", "gamma"),
    ("1", "2", "3", "4"),
    ("4", "5", "a", "x"),
    ("1", "2", "5", "6", "gamma"),
    ("3", "a", "x", "y", "gamma"),
    ("2", "6", "a", "y", "gamma"),
    ("3", "4", "5", "a", "x", "y"),
    ("1", "4", "5", "6", "a", "x"),
    ("1", "2", "5", "6", "a", "y", "gamma"),
    ("2", "3", "6", "a", "x", "y", "gamma"),
    ("1", "2", "3", "4", "5", "6", "x", "y", "a", "gamma"),
)
