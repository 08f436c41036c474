"""Circuits, Graver bases, walk binomials and universal Groebner bases.

The universal Groebner basis U(P_G) sits between the circuits and the
Graver basis of the configuration A_G. For the graph classes that admit a
host graph H, even closed walks of H pin U(P_G) exactly; everything else
gets honest sandwich bounds.
"""

from .binomials import (Binomial, Monomial, TermOrder, binomial_from_vector,
                        binomial_vector, toric_gb, var_sort_key)
from .constructions import build_H, prism
from .encoding import adegree, build_AG, edge_variables, VectorConfiguration
from .graphs import ClosedWalk, classify, components, enumerate_cycles, \
    is_bipartite
from .intmat import IntVector, matrix_circuits


class BasisReport:
    """Elements of a basis plus its status: exact, or a sandwich bound.

    For a sandwich the `elements` field repeats the certified lower bound
    and `lower`/`upper` carry both bounds; exact reports leave them None.
    """

    __slots__ = ("elements", "status", "lower", "upper")

    def __init__(self, elements, status, lower=None, upper=None):
        if status not in ("exact", "sandwich"):
            raise ValueError("status must be exact or sandwich")
        if status == "sandwich" and (lower is None or upper is None):
            raise ValueError("sandwich reports need lower and upper bounds")
        self.elements = tuple(elements)
        self.status = status
        self.lower = None if lower is None else tuple(lower)
        self.upper = None if upper is None else tuple(upper)

    @property
    def count(self):
        return len(self.elements)

    @property
    def max_degree(self):
        return max((b.degree for b in self.elements), default=0)

    def as_dict(self):
        out = {
            "status": self.status,
            "count": self.count,
            "max_degree": self.max_degree,
            "elements": [str(b) for b in self.elements],
        }
        if self.status == "sandwich":
            out["lower_count"] = len(self.lower)
            out["upper_count"] = len(self.upper)
        return out

    def __repr__(self):
        return "BasisReport(%s, %d elements)" % (self.status, self.count)


def _config_key(cfg):
    return (cfg.matrix.entries, cfg.matrix.column_names)


_circuit_memo = {}

_graver_memo = {}


def circuits(cfg):
    """Circuit binomials of a configuration: minimal-support kernel vectors."""
    key = _config_key(cfg)
    if key not in _circuit_memo:
        vecs = matrix_circuits(cfg.matrix)
        _circuit_memo[key] = tuple(binomial_from_vector(v.entries,
                                                        cfg.variables)
                                   for v in vecs)
    return list(_circuit_memo[key])


def graver(cfg):
    """Graver basis of a configuration via its Lawrence lifting.

    The lifted configuration [[A, 0], [I, I]] has the property that any
    reduced Groebner basis of its toric ideal consists of the elements
    x^(u+) z^(u-) - x^(u-) z^(u+) with u running over the Graver basis of A,
    so one Groebner computation followed by projection to the x-variables
    yields the full Graver basis.
    """
    key = _config_key(cfg)
    if key in _graver_memo:
        return list(_graver_memo[key])
    mat = cfg.matrix
    xvars = cfg.variables
    zvars = []
    for k in range(1, mat.cols + 1):
        name = "z_%d" % k
        while name in xvars:
            name += "_"
        zvars.append(name)
    cols = []
    for k, x in enumerate(xvars):
        vec = [mat.entries[r][k] for r in range(mat.rows)]
        vec.extend(1 if t == k else 0 for t in range(mat.cols))
        cols.append((x, IntVector(vec)))
    for k, z in enumerate(zvars):
        vec = [0] * mat.rows
        vec.extend(1 if t == k else 0 for t in range(mat.cols))
        cols.append((z, IntVector(vec)))
    lifted = VectorConfiguration(cols)
    ranking = sorted(xvars, key=var_sort_key) + zvars
    order = TermOrder("degrevlex", ranking)
    xset = set(xvars)
    seen = {}
    for g in toric_gb(lifted, order):
        plus = Monomial((v, e) for v, e in g.plus.items if v in xset)
        minus = Monomial((v, e) for v, e in g.minus.items if v in xset)
        b = Binomial(plus, minus)
        seen.setdefault(b, b)
    out = sorted(seen, key=lambda b: _vector_sort_key(b, xvars))
    _graver_memo[key] = tuple(out)
    return list(out)


def _vector_sort_key(b, variables):
    vec = binomial_vector(b, variables)
    support = tuple(k for k, e in enumerate(vec) if e)
    return (len(support), support, tuple(vec))


def is_primitive(b, cfg):
    """Whether no other homogeneous binomial divides b sidewise.

    Equivalent to membership in the Graver basis. The binomial must be
    homogeneous for the configuration, else its exponent vector is not even
    a kernel element and the question is ill-posed.
    """
    if adegree(b.plus, cfg) != adegree(b.minus, cfg):
        raise ValueError("binomial is not homogeneous for the configuration")
    return b in set(graver(cfg))


def walk_binomial(w, h):
    """Binomial of an even closed walk: alternating edge products.

    Edges at even positions of the walk multiply into one side, odd
    positions into the other; edges traversed twice contribute squares.
    """
    if w.length % 2:
        raise ValueError("walk binomial needs an even closed walk")
    varmap = edge_variables(h)
    evens, odds = [], []
    for k, e in enumerate(w.edge_sequence):
        if e not in varmap:
            raise ValueError("walk edge %s is not in the host graph" % (e,))
        (evens if k % 2 == 0 else odds).append((varmap[e], 1))
    return Binomial(Monomial(evens), Monomial(odds))


def _rotate_cycle(c, start):
    """Vertex sequence of a cycle rotated to `start`, smaller second vertex."""
    vs = c.vertices
    k = vs.index(start)
    rot = vs[k:] + vs[:k]
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def _connecting_paths(g, set1, set2):
    """Simple paths from set1 to set2 with all interior vertices outside both."""
    paths = []
    blocked = set1 | set2

    def walk(path):
        for w in sorted(g.neighbors(path[-1])):
            if w in set2:
                paths.append(path + [w])
            elif w not in blocked and w not in path:
                walk(path + [w])

    for a in sorted(set1):
        walk([a])
    return paths


def graph_circuits(h):
    """Circuits of the toric ideal of a connected host graph's incidence.

    Three walk shapes: even cycles; two odd cycles meeting in exactly one
    vertex; and two vertex-disjoint odd cycles joined by a simple path
    (every such path, traversed there and back, its edges squared).
    """
    host = getattr(h, "graph", h)
    if len(components(host)) != 1:
        raise ValueError("circuit walks need a connected host graph")
    walks = list(enumerate_cycles(host, "even"))
    odd = enumerate_cycles(host, "odd")
    for a in range(len(odd)):
        for b in range(a + 1, len(odd)):
            c1, c2 = odd[a], odd[b]
            s1, s2 = set(c1.vertices), set(c2.vertices)
            common = s1 & s2
            if len(common) == 1:
                v = common.pop()
                rot1 = _rotate_cycle(c1, v)
                rot2 = _rotate_cycle(c2, v)
                walks.append(ClosedWalk(rot1 + rot2))
            elif not common:
                for path in _connecting_paths(host, s1, s2):
                    rot1 = _rotate_cycle(c1, path[0])
                    rot2 = _rotate_cycle(c2, path[-1])
                    vs = (list(rot1) + [path[0]] + path[1:] + list(rot2[1:])
                          + [path[-1]] + list(reversed(path))[1:-1])
                    walks.append(ClosedWalk(vs))
    out = []
    seen = set()
    for w in walks:
        b = walk_binomial(w, host)
        if b not in seen:
            seen.add(b)
            out.append(b)
    out.sort(key=lambda b: (b.degree, str(b)))
    return out


def ugb(g):
    """Universal Groebner basis of P_G, exact where the host theory applies.

    Components contribute independently (their variables are disjoint):
    trees via the even cycles of their prism; bipartite unicyclic components
    via the even cycles of their host graph; a lone odd cycle via the
    circuit walks of its prism; any other bipartite component via the
    circuits of A_G (every initial ideal is squarefree there and the
    universal basis collapses onto the circuits). What remains (non-bipartite
    with extra structure) is only sandwiched: circuits below, Graver above,
    and the report says so rather than guessing.
    """
    elements = []
    lower = []
    upper = []
    exact = True
    for record in classify(g).per_component:
        comp = record.graph
        if record.kind == "tree":
            host = prism(comp)
            els = [walk_binomial(w, host)
                   for w in enumerate_cycles(host.graph, "even")]
        elif record.kind == "unicyclic-even":
            host = build_H(comp)
            els = [walk_binomial(w, host)
                   for w in enumerate_cycles(host.graph, "even")]
        elif record.kind == "unicyclic-odd" and comp.n == record.cycle.length:
            els = graph_circuits(prism(comp))
        elif record.bipartite:
            els = circuits(build_AG(comp))
        else:
            lo = circuits(build_AG(comp))
            up = graver(build_AG(comp))
            exact = False
            elements.extend(lo)
            lower.extend(lo)
            upper.extend(up)
            continue
        elements.extend(els)
        lower.extend(els)
        upper.extend(els)
    if exact:
        return BasisReport(elements, "exact")
    return BasisReport(elements, "sandwich", lower, upper)


def degree_stats(report, g):
    """Count/degree summary of a basis report against the bipartite bound."""
    out = {"count": report.count, "max_degree": report.max_degree}
    if is_bipartite(g):
        bound = (g.m + g.n + 1) // 2
        out["bipartite_bound"] = bound
        out["bound_respected"] = report.max_degree <= bound
    return out
