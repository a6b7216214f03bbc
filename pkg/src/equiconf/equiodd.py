"""Torus-equivariant cohomology of Conf_l(R^(2n+1)) as a graph calculus.

Elements are Q[q_1..q_n]-combinations of simple graphs on l labeled vertices;
an edge {i,j} is the class y_ij of degree 2n, antisymmetric in its indices.
Normal form: every vertex is the larger endpoint of at most one edge. The two
rewrite rules are the double-edge rule (drop both copies, multiply by
p_n = (q_1...q_n)^2) and, for a repeated maximum i < k < j,

    y_ij y_kj = y_ik y_kj - y_ik y_ij + p_n * (residual graph).

Weyl elements act on the q-coefficients through their signed permutation and
scale each edge by eta * (product of eps); graphs themselves are fixed. That
sign is +1 on the special orthogonal subgroup and -1 on the residual central
reflection, matching the two-pole geometry of the 2-point Borel construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from math import comb

from . import confring
from .charclasses import GroupSpec, WeylElement, torus_ring, weyl_action, weyl_group
from .errors import InputError
from .exactalg import Matrix, Polynomial, poly_from_json, rat


def qring(n):
    return torus_ring(n)


def q_top(n):
    """q_1 ... q_n."""
    ring = qring(n)
    out = ring.one()
    for g in ring.gens():
        out = out * g
    return out


def p_top(n):
    """p_n = (q_1 ... q_n)^2, the image of the top Pontryagin class."""
    t = q_top(n)
    return t * t


def normalize_edge(ell, i, j):
    """Canonical (edge, sign) for y_ij; y_ji = -y_ij."""
    if not (1 <= i <= ell and 1 <= j <= ell) or i == j:
        raise InputError(f"edge index out of range: ({i}, {j}) with {ell} points")
    return ((i, j), 1) if i < j else ((j, i), -1)


def reduce_graph(ell, n, edges, coeff, rng=None):
    """Normal-form terms of a single multigraph with a polynomial coefficient.

    Returns {admissible edge tuple: Polynomial}. With `rng`, redexes are
    picked at random to exercise confluence.
    """
    pn = p_top(n)
    out = {}
    stack = [(tuple(sorted(edges, key=confring.edge_key)), coeff)]
    while stack:
        word, c = stack.pop()
        if c.is_zero():
            continue
        redexes = [t for t in range(len(word) - 1) if word[t][1] == word[t + 1][1]]
        if not redexes:
            prev = out.get(word)
            total = c if prev is None else prev + c
            if total.is_zero():
                out.pop(word, None)
            else:
                out[word] = total
            continue
        t = redexes[0] if rng is None else rng.choice(redexes)
        (i, j), (k, _) = word[t], word[t + 1]
        head, tail = word[:t], word[t + 2:]
        if i == k:
            # double edge: remove both, multiply by p_n
            stack.append((head + tail, c * pn))
            continue
        stack.append((tuple(sorted(head + ((i, k), (k, j)) + tail,
                                   key=confring.edge_key)), c))
        stack.append((tuple(sorted(head + ((i, k), (i, j)) + tail,
                                   key=confring.edge_key)), -c))
        stack.append((head + tail, c * pn))
    return out


@dataclass(frozen=True)
class GraphMonomial:
    """An admissible graph together with a monomial in the q variables."""

    points: int
    halfdim: int
    edges: tuple
    q_exps: tuple

    def degree(self):
        return 2 * self.halfdim * len(self.edges) + 2 * sum(self.q_exps)

    def as_element(self):
        ring = qring(self.halfdim)
        return EquiElement(self.points, self.halfdim,
                           {self.edges: ring.monomial(self.q_exps)})


class EquiElement:
    """Normal-form element of the torus-equivariant configuration ring."""

    __slots__ = ("points", "halfdim", "terms")

    def __init__(self, points, halfdim, terms):
        if points < 0:
            raise InputError("negative point count")
        if halfdim < 1:
            raise InputError("halfdim must be at least 1")
        self.points = points
        self.halfdim = halfdim
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def _check(self, other):
        if (self.points, self.halfdim) != (other.points, other.halfdim):
            raise InputError("elements from different equivariant rings")

    def __eq__(self, other):
        return isinstance(other, EquiElement) and self.points == other.points \
            and self.halfdim == other.halfdim and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            total = out.get(e)
            total = c if total is None else total + c
            if total.is_zero():
                out.pop(e, None)
            else:
                out[e] = total
        return EquiElement(self.points, self.halfdim, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return EquiElement(self.points, self.halfdim,
                           {e: -c for e, c in self.terms.items()})

    def scale(self, c):
        c = rat(c)
        return EquiElement(self.points, self.halfdim,
                           {e: p.scale(c) for e, p in self.terms.items()})

    def scale_poly(self, poly):
        return EquiElement(self.points, self.halfdim,
                           {e: p * poly for e, p in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, EquiElement):
            return self.scale(other)
        self._check(other)
        ell, n = self.points, self.halfdim
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                for e, c in reduce_graph(ell, n, e1 + e2, c1 * c2).items():
                    total = out.get(e)
                    total = c if total is None else total + c
                    if total.is_zero():
                        out.pop(e, None)
                    else:
                        out[e] = total
        return EquiElement(ell, n, out)

    __rmul__ = __mul__

    def homogeneous_part(self, d):
        out = {}
        for e, c in self.terms.items():
            part = c.homogeneous_part(d - 2 * self.halfdim * len(e))
            if not part.is_zero():
                out[e] = part
        return EquiElement(self.points, self.halfdim, out)

    def degree(self):
        degs = set()
        for e, c in self.terms.items():
            for exps in c.terms:
                degs.add(2 * self.halfdim * len(e) + c.monomial_degree(exps))
        if not degs:
            return -1
        if len(degs) > 1:
            raise InputError("inhomogeneous element has no single degree")
        return degs.pop()

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (len(t[0]), tuple(confring.edge_key(e) for e in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for edges, c in self.sorted_terms():
            mono = "*".join(f"y{i}{j}" if i < 10 and j < 10 else f"y{i}_{j}"
                            for i, j in edges)
            coeff = str(c)
            if not mono:
                parts.append(f"({coeff})" if ("+" in coeff or " - " in coeff) else coeff)
            elif coeff == "1":
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return {"points": self.points, "halfdim": self.halfdim,
                "terms": [{"coeff": c.to_json(), "edges": [list(e) for e in edges]}
                          for edges, c in self.sorted_terms()]}

    def to_dot(self):
        """One DOT graph per monomial; the coefficient is the graph label."""
        blocks = []
        for t, (edges, c) in enumerate(self.sorted_terms()):
            lines = [f"graph term{t} {{", f'  label="{c}";']
            for v in range(1, self.points + 1):
                lines.append(f"  {v};")
            for i, j in edges:
                lines.append(f"  {i} -- {j};")
            lines.append("}")
            blocks.append("\n".join(lines))
        return "\n".join(blocks) if blocks else "graph zero {\n}"


def element_from_json(data):
    try:
        ell, n = int(data["points"]), int(data["halfdim"])
        ring = qring(n)
        out = EquiElement(ell, n, {})
        for t in data["terms"]:
            coeff = poly_from_json(t["coeff"], ring)
            edges = []
            sign = 1
            for pair in t["edges"]:
                e, s = normalize_edge(ell, int(pair[0]), int(pair[1]))
                edges.append(e)
                sign *= s
            out = out + EquiElement(
                ell, n, reduce_graph(ell, n, edges, coeff.scale(sign)))
        return out
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed equivariant element: {exc}") from exc


def unit(ell, n):
    return EquiElement(ell, n, {(): qring(n).one()})


def zero(ell, n):
    return EquiElement(ell, n, {})


def generator(ell, n, i, j):
    edge, sign = normalize_edge(ell, i, j)
    return EquiElement(ell, n, {(edge,): qring(n).const(sign)})


def graph_product(a: EquiElement, b: EquiElement):
    return a * b


def torus_basis(ell, n, degree):
    """All (admissible graph, q-monomial) pairs of the given total degree."""
    if ell < 0 or n < 1 or degree < 0:
        raise InputError("need ell >= 0, n >= 1, degree >= 0")
    ring = qring(n)
    out = []
    m = 0
    while 2 * n * m <= degree and m <= max(ell - 1, 0):
        rest = degree - 2 * n * m
        graphs = confring.basis(ell, 2 * n + 1, 2 * n * m)
        qexps = ring.exponents_of_degree(rest)
        for g in graphs:
            for e in qexps:
                out.append(GraphMonomial(ell, n, g.edges, e))
        m += 1
    return out


def torus_dimension(ell, n, degree):
    return len(torus_basis(ell, n, degree))


def leray_hirsch_dimension(ell, n, degree):
    """Coefficient of t^degree in prod_j (1 + j t^(2n)) / (1 - t^2)^n."""
    if degree < 0:
        return 0
    num = [0] * (degree + 1)
    num[0] = 1
    for j in range(1, ell):
        nxt = list(num)
        for d in range(degree + 1 - 2 * n):
            nxt[d + 2 * n] += j * num[d]
        num = nxt
    total = 0
    for d in range(0, degree + 1, 2):
        m = (degree - d) // 2
        if (degree - d) % 2 == 0:
            total += num[d] * comb(m + n - 1, n - 1)
    return total


def weyl_action_equi(w: WeylElement, a: EquiElement):
    """Signed permutation on coefficients; each edge scales by eta * prod(eps)."""
    if len(w.sigma) != a.halfdim:
        raise InputError("Weyl element rank does not match the torus rank")
    edge_sign = w.eta * w.eps_product()
    out = {}
    for edges, c in a.terms.items():
        poly = weyl_action(w, c)
        if edge_sign == -1 and len(edges) % 2 == 1:
            poly = -poly
        out[edges] = poly
    return EquiElement(a.points, a.halfdim, out)


def element_coordinates(a: EquiElement, basis):
    """Coordinates of a homogeneous element in a torus_basis list."""
    index = {(m.edges, m.q_exps): t for t, m in enumerate(basis)}
    vec = [Q(0)] * len(basis)
    for edges, poly in a.terms.items():
        for exps, c in poly.terms.items():
            key = (edges, exps)
            if key not in index:
                raise InputError("element does not lie in the given degree")
            vec[index[key]] = c
    return vec


def element_from_coordinates(ell, n, basis, vec):
    ring = qring(n)
    out = {}
    for m, c in zip(basis, vec):
        if c == 0:
            continue
        prev = out.get(m.edges, ring.zero())
        out[m.edges] = prev + ring.monomial(m.q_exps, c)
    return EquiElement(ell, n, out)


def fixed_point_basis(spec: GroupSpec, ell, degree, convention="standard"):
    """Echelonized basis of the Weyl-fixed subspace in one degree."""
    if spec.family not in ("so_odd", "o_odd"):
        raise InputError("fixed points are computed for so_odd or o_odd only")
    n = spec.rank
    basis = torus_basis(ell, n, degree)
    if not basis:
        return []
    group = weyl_group(spec, convention)
    rows = []
    for mono in basis:
        elem = mono.as_element()
        total = zero(ell, n)
        for w in group:
            total = total + weyl_action_equi(w, elem)
        total = total.scale(Q(1, len(group)))
        if total.is_zero():
            continue
        rows.append(element_coordinates(total, basis))
    if not rows:
        return []
    red, pivots = Matrix(rows).rref()
    return [element_from_coordinates(ell, n, basis, red.rows[r])
            for r in range(len(pivots))]


def fixed_point_dimension(spec: GroupSpec, ell, degree, convention="standard"):
    return len(fixed_point_basis(spec, ell, degree, convention))


def nonequivariant_restriction(a: EquiElement):
    """Ring map sending each q_u to zero and y_ij to 2 x_ij."""
    ell, n = a.points, a.halfdim
    zero_exps = (0,) * n
    terms = {}
    for edges, c in a.terms.items():
        const = c.coefficient(zero_exps)
        if const != 0:
            terms[edges] = const * Q(2) ** len(edges)
    return confring.ConfElement(ell, 2 * n + 1, terms)


def projection_pullback(i, j, a: EquiElement, ell):
    """Pullback along the projection keeping points i < j of 1..ell."""
    if not (1 <= i < j <= ell):
        raise InputError("need 1 <= i < j <= ell")
    if a.points != 2:
        raise InputError("projection pullback expects a 2-point element")
    out = {}
    for edges, c in a.terms.items():
        key = tuple((i, j) for _ in edges)  # at most one edge on 2 points
        out[key] = out.get(key, qring(a.halfdim).zero()) + c
    return EquiElement(ell, a.halfdim, out)


def section_pullback(i, j, a: EquiElement):
    """Pullback along the section of the projection onto points {i, j} of 1..3.

    The section adds the forgotten third point far away; both edges into it
    map to q_1...q_n, and the retained edge maps to the 2-point generator.
    """
    if a.points != 3:
        raise InputError("section pullback expects a 3-point element")
    if not (1 <= i < j <= 3):
        raise InputError("need 1 <= i < j <= 3")
    n = a.halfdim
    top = q_top(n)
    kept = (i, j)
    out = EquiElement(2, n, {})
    for edges, c in a.terms.items():
        key = []
        coeff = c
        for e in edges:
            if e == kept:
                key.append((1, 2))
            else:
                coeff = coeff * top
        out = out + EquiElement(2, n, reduce_graph(2, n, key, coeff))
    return out


def label_action_equi(sigma, a: EquiElement):
    """Relabel vertices by sigma; edges are antisymmetric, then renormalize."""
    ell = a.points
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, ell + 1)):
        raise InputError("not a permutation of the point labels")
    out = EquiElement(ell, a.halfdim, {})
    for edges, c in a.terms.items():
        word = []
        sign = 1
        for i, j in edges:
            e, s = normalize_edge(ell, sigma[i - 1], sigma[j - 1])
            word.append(e)
            sign *= s
        out = out + EquiElement(ell, a.halfdim,
                                reduce_graph(ell, a.halfdim, word, c.scale(sign)))
    return out


def modified_arnold(ell, n, i, j, k):
    """y_ij y_jk - y_jk y_ik - y_ik y_ij + p_n, which must reduce to zero."""
    yij = generator(ell, n, i, j)
    yjk = generator(ell, n, j, k)
    yik = generator(ell, n, i, k)
    pn = unit(ell, n).scale_poly(p_top(n))
    return yij * yjk - yjk * yik - yik * yij + pn
