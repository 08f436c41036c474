"""Built-in graphs and frozen expected values used by the test battery.

The expected binomial lists are stored as text and parsed on demand, so the
battery compares algebra objects rather than strings.
"""

from .graphs import Graph


def k2():
    return Graph((), [(1, 2)])


def path(n):
    """Path on vertices 1..n."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def star(n):
    """Star on n vertices: center 1, leaves 2..n."""
    if n < 2:
        raise ValueError("star needs at least two vertices")
    return Graph((), [(1, k) for k in range(2, n + 1)])


def cycle(k):
    """Cycle on vertices 1..k."""
    if k < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph((), [(i, i + 1) for i in range(1, k)] + [(1, k)])


def triangle():
    return cycle(3)


def triangle_pendant():
    """Triangle with a pendant edge at vertex 1."""
    return Graph((), [(1, 2), (2, 3), (1, 3), (1, 4)])


def five_vertex_example():
    """The 5-vertex, 6-edge bipartite running example."""
    return Graph((), [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (3, 5)])


def pendant_cycle():
    """4-cycle with two pendant edges hanging at vertex 1."""
    return Graph((), [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (1, 6)])


def decorated_six_cycle():
    """12-vertex graph: a 6-cycle with trees hanging off vertices 1, 2, 3."""
    return Graph((), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6),
                      (1, 7), (1, 8), (2, 9), (3, 10), (10, 11), (10, 12)])


def theta_graph():
    """Two vertices joined by three internally disjoint paths of length 2."""
    return Graph((), [(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)])


def k23():
    """Complete bipartite graph on parts {1, 2} and {3, 4, 5}."""
    return Graph((), [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])


def fixture_battery():
    """Named graphs the cross-cutting checks iterate over."""
    fixtures = {"k2": k2(), "triangle": triangle(),
                "triangle-pendant": triangle_pendant(),
                "five-vertex-example": five_vertex_example(),
                "pendant-cycle": pendant_cycle(),
                "decorated-six-cycle": decorated_six_cycle(),
                "theta": theta_graph(), "k23": k23(),
                "cycle-4": cycle(4), "cycle-6": cycle(6)}
    for n in range(2, 8):
        fixtures["path-%d" % n] = path(n)
    for n in range(3, 9):
        fixtures["star-%d" % n] = star(n)
    return fixtures


# Configuration of the five-vertex example: column name and vector over the
# eleven coordinates (five vertex coordinates, then one per edge).
EXAMPLE_CONFIGURATION = (
    ("x12", (1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0)),
    ("x21", (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0)),
    ("x23", (0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0)),
    ("x32", (0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0)),
    ("x34", (0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0)),
    ("x43", (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0)),
    ("x14", (1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0)),
    ("x41", (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0)),
    ("x15", (1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0)),
    ("x51", (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0)),
    ("x35", (0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1)),
    ("x53", (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1)),
    ("x11", (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    ("x22", (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    ("x33", (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0)),
    ("x44", (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0)),
    ("x55", (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0)),
)


# The 36 circuits of the five-vertex example (= its universal basis).
EXAMPLE_CIRCUITS = (
    "x11*x22 - x12*x21",
    "x22*x33 - x23*x32",
    "x33*x44 - x34*x43",
    "x11*x44 - x14*x41",
    "x11*x55 - x15*x51",
    "x33*x55 - x35*x53",
    "x44*x35*x53 - x55*x34*x43",
    "x11*x35*x53 - x33*x15*x51",
    "x44*x15*x51 - x55*x14*x41",
    "x22*x15*x51 - x55*x12*x21",
    "x33*x14*x41 - x11*x34*x43",
    "x22*x14*x41 - x44*x12*x21",
    "x22*x34*x43 - x44*x23*x32",
    "x11*x23*x32 - x33*x12*x21",
    "x22*x35*x53 - x55*x23*x32",
    "x14*x41*x35*x53 - x34*x43*x15*x51",
    "x14*x41*x35*x53 - x33*x44*x15*x51",
    "x14*x41*x35*x53 - x11*x55*x34*x43",
    "x11*x44*x35*x53 - x34*x43*x15*x51",
    "x12*x21*x35*x53 - x23*x32*x15*x51",
    "x11*x22*x35*x53 - x23*x32*x15*x51",
    "x12*x21*x35*x53 - x22*x33*x15*x51",
    "x12*x21*x35*x53 - x11*x55*x23*x32",
    "x34*x43*x15*x51 - x33*x55*x14*x41",
    "x23*x32*x15*x51 - x33*x55*x12*x21",
    "x23*x32*x14*x41 - x12*x21*x34*x43",
    "x23*x32*x14*x41 - x11*x22*x34*x43",
    "x22*x33*x14*x41 - x12*x21*x34*x43",
    "x23*x32*x14*x41 - x33*x44*x12*x21",
    "x12*x21*x34*x43 - x11*x44*x23*x32",
    "x22*x14*x41*x35*x53 - x44*x23*x32*x15*x51",
    "x22*x14*x41*x35*x53 - x55*x12*x21*x34*x43",
    "x44*x12*x21*x35*x53 - x55*x23*x32*x14*x41",
    "x44*x12*x21*x35*x53 - x22*x34*x43*x15*x51",
    "x22*x34*x43*x15*x51 - x55*x23*x32*x14*x41",
    "x44*x23*x32*x15*x51 - x55*x12*x21*x34*x43",
)


# Graver basis of the incidence configuration of the prism over the
# triangle-with-pendant graph: 16 elements.
PRISM_GRAVER = (
    "x11*x22 - x12*x21",
    "x22*x33 - x23*x32",
    "x11*x33 - x13*x31",
    "x11*x44 - x14*x41",
    "x33*x14*x41 - x44*x13*x31",
    "x22*x14*x41 - x44*x12*x21",
    "x22*x13*x31 - x11*x23*x32",
    "x22*x13*x31 - x33*x12*x21",
    "x11*x23*x32 - x33*x12*x21",
    "x23*x32*x14*x41 - x22*x44*x13*x31",
    "x23*x32*x14*x41 - x33*x44*x12*x21",
    "x33^2*x12*x21 - x23*x32*x13*x31",
    "x11^2*x23*x32 - x12*x21*x13*x31",
    "x22^2*x13*x31 - x12*x21*x23*x32",
    "x11*x23*x32*x14*x41 - x44*x12*x21*x13*x31",
    "x12*x21*x13*x31*x44^2 - x23*x32*x14^2*x41^2",
)

# The degree-5 Graver element above that is primitive but not a circuit.
PRISM_GRAVER_WITNESS = "x11*x23*x32*x14*x41 - x44*x12*x21*x13*x31"


# Universal basis of the star on 4 vertices: 6 elements.
STAR4_UGB = (
    "x11*x22 - x12*x21",
    "x11*x33 - x13*x31",
    "x11*x44 - x14*x41",
    "x12*x21*x33 - x22*x13*x31",
    "x12*x21*x44 - x22*x14*x41",
    "x13*x31*x44 - x33*x14*x41",
)


# Universal basis of the path on 5 vertices: 10 elements, degrees 2..5.
PATH5_UGB = (
    "x11*x22 - x12*x21",
    "x22*x33 - x23*x32",
    "x33*x44 - x34*x43",
    "x44*x55 - x45*x54",
    "x12*x21*x33 - x11*x23*x32",
    "x23*x32*x44 - x22*x34*x43",
    "x34*x43*x55 - x33*x45*x54",
    "x12*x21*x34*x43 - x11*x23*x32*x44",
    "x23*x32*x45*x54 - x22*x34*x43*x55",
    "x12*x21*x34*x43*x55 - x11*x23*x32*x45*x54",
)


# Universal basis of the triangle: its three quadrics, the three hexagon
# binomials of the prism, and the three doubled-rung walk binomials.
TRIANGLE_UGB = (
    "x11*x22 - x12*x21",
    "x22*x33 - x23*x32",
    "x11*x33 - x13*x31",
    "x12*x21*x33 - x11*x23*x32",
    "x22*x13*x31 - x11*x23*x32",
    "x22*x13*x31 - x12*x21*x33",
    "x12*x21*x13*x31 - x11^2*x23*x32",
    "x12*x21*x23*x32 - x22^2*x13*x31",
    "x13*x31*x23*x32 - x33^2*x12*x21",
)
