"""Cohomology rings of configuration spaces of R^n.

Generators x_ij (1 <= i < j <= k) of degree n-1, with x_ji = (-1)^n x_ij,
x_ij^2 = 0, and the three-term relation on every triple of points. Normal
form: products of generators whose edges have pairwise distinct larger
endpoints, edges sorted ascending by (max, min). A repeated maximum (i,j),(k,j)
with i < k rewrites, in canonical sorted words, to

    x_ij x_kj  =  x_ik x_kj - x_ik x_ij

which holds for both parities of n once Koszul signs are tracked by the sort.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations, product as iter_product

from .errors import InputError
from .exactalg import PolyRing, rat, rat_str

Edge = tuple  # (i, j) with i < j


def edge_key(e):
    return (e[1], e[0])


def normalize_generator(k, i, j, n):
    """Canonical (edge, sign) for a raw generator x_ij, any index order."""
    if not (1 <= i <= k and 1 <= j <= k) or i == j:
        raise InputError(f"generator index out of range: ({i}, {j}) with {k} points")
    if i < j:
        return (i, j), 1
    return (j, i), 1 if n % 2 == 0 else -1


def koszul_sort(edges, n):
    """Sort edges by (max, min); returns (sign, tuple). Sign is Koszul."""
    edges = list(edges)
    sign = 1
    odd_degree = n % 2 == 0  # generators have degree n-1
    for i in range(1, len(edges)):
        j = i
        while j > 0 and edge_key(edges[j - 1]) > edge_key(edges[j]):
            edges[j - 1], edges[j] = edges[j], edges[j - 1]
            if odd_degree:
                sign = -sign
            j -= 1
    return sign, tuple(edges)


def reduce_word(k, n, word, coeff=Q(1), rng=None):
    """Normal-form terms of a single word of canonical edges.

    Returns a dict mapping admissible sorted edge tuples to coefficients.
    When `rng` is given, the redex processed at each step is chosen at
    random instead of leftmost; the result must not depend on this choice
    (confluence), which the verification suites exercise.
    """
    out = {}
    stack = [(tuple(word), rat(coeff))]
    while stack:
        edges, c = stack.pop()
        sign, edges = koszul_sort(edges, n)
        c *= sign
        redexes = []
        dead = False
        for t in range(len(edges) - 1):
            a, b = edges[t], edges[t + 1]
            if a == b:
                dead = True  # x^2 = 0
                break
            if a[1] == b[1]:
                redexes.append(t)
        if dead:
            continue
        if not redexes:
            v = out.get(edges, Q(0)) + c
            if v == 0:
                out.pop(edges, None)
            else:
                out[edges] = v
            continue
        t = redexes[0] if rng is None else rng.choice(redexes)
        (i, j), (kk, j2) = edges[t], edges[t + 1]
        head, tail = edges[:t], edges[t + 2:]
        # x_ij x_kj = x_ik x_kj - x_ik x_ij  (i < k < j)
        stack.append((head + ((i, kk), (kk, j)) + tail, c))
        stack.append((head + ((i, kk), (i, j)) + tail, -c))
    return out


@dataclass(frozen=True)
class EdgeMonomial:
    """A signed admissible monomial in the x_ij generators."""

    points: int
    dim: int
    edges: tuple
    sign: int = 1

    def degree(self):
        return (self.dim - 1) * len(self.edges)

    def as_element(self):
        return ConfElement(self.points, self.dim, {self.edges: Q(self.sign)})


class ConfElement:
    """Q-linear combination of admissible edge monomials for Conf_k(R^n)."""

    __slots__ = ("points", "dim", "terms")

    def __init__(self, points, dim, terms):
        if points < 0:
            raise InputError("negative point count")
        if dim < 2:
            raise InputError("ambient dimension must be at least 2")
        self.points = points
        self.dim = dim
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def _check(self, other):
        if (self.points, self.dim) != (other.points, other.dim):
            raise InputError("elements from different configuration rings")

    def __eq__(self, other):
        return isinstance(other, ConfElement) and self.points == other.points \
            and self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.points, self.dim, tuple(sorted(self.terms.items()))))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Q(0)) + c
            if v == 0:
                out.pop(e, None)
            else:
                out[e] = v
        return ConfElement(self.points, self.dim, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ConfElement(self.points, self.dim,
                           {e: -c for e, c in self.terms.items()})

    def scale(self, c):
        c = rat(c)
        return ConfElement(self.points, self.dim,
                           {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, ConfElement):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                for e, c in reduce_word(self.points, self.dim, e1 + e2, c1 * c2).items():
                    v = out.get(e, Q(0)) + c
                    if v == 0:
                        out.pop(e, None)
                    else:
                        out[e] = v
        return ConfElement(self.points, self.dim, out)

    __rmul__ = __mul__

    def degree(self):
        """Degree when homogeneous; -1 for zero."""
        degs = {(self.dim - 1) * len(e) for e in self.terms}
        if not degs:
            return -1
        if len(degs) > 1:
            raise InputError("inhomogeneous element has no single degree")
        return degs.pop()

    def homogeneous_part(self, d):
        return ConfElement(self.points, self.dim,
                           {e: c for e, c in self.terms.items()
                            if (self.dim - 1) * len(e) == d})

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (len(t[0]), tuple(edge_key(e) for e in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for edges, c in self.sorted_terms():
            mono = "*".join(f"x{i}{j}" if i < 10 and j < 10 else f"x{i}_{j}"
                            for i, j in edges)
            if not mono:
                parts.append(rat_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{rat_str(c)}*{mono}")
        s = parts[0]
        for p in parts[1:]:
            s += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return s

    __repr__ = __str__

    def to_json(self):
        return {"points": self.points, "dim": self.dim,
                "terms": [{"coeff": rat_str(c), "edges": [list(e) for e in edges]}
                          for edges, c in self.sorted_terms()]}


def element_from_json(data):
    try:
        k, n = int(data["points"]), int(data["dim"])
        terms = {}
        for t in data["terms"]:
            word = []
            for pair in t["edges"]:
                i, j = int(pair[0]), int(pair[1])
                word.append((i, j))
            coeff = rat(t["coeff"])
            for e, c in normal_form(k, n, word, coeff).terms.items():
                terms[e] = terms.get(e, Q(0)) + c
        return ConfElement(k, n, terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed configuration element: {exc}") from exc


def unit(k, n):
    return ConfElement(k, n, {(): Q(1)})


def zero(k, n):
    return ConfElement(k, n, {})


def generator(k, n, i, j):
    edge, sign = normalize_generator(k, i, j, n)
    return ConfElement(k, n, {(edge,): Q(sign)})


def normal_form(k, n, word, coeff=Q(1)):
    """Normal form of a raw product of generators, given as index pairs."""
    if k < 0 or n < 2:
        raise InputError("need k >= 0 and n >= 2")
    sign = 1
    canonical = []
    for i, j in word:
        e, s = normalize_generator(k, i, j, n)
        canonical.append(e)
        sign *= s
    return ConfElement(k, n, reduce_word(k, n, canonical, rat(coeff) * sign))


def product(a: ConfElement, b: ConfElement):
    return a * b


def basis(k, n, degree):
    """Admissible monomials of the given degree, in lexicographic order."""
    if k < 0 or n < 2 or degree < 0:
        raise InputError("need k >= 0, n >= 2, degree >= 0")
    if degree == 0:
        return [EdgeMonomial(k, n, ())]
    if degree % (n - 1) != 0:
        return []
    m = degree // (n - 1)
    if m > max(k - 1, 0):
        return []
    out = []
    for maxima in combinations(range(2, k + 1), m):
        for mins in iter_product(*[range(1, j) for j in maxima]):
            edges = tuple((i, j) for i, j in zip(mins, maxima))
            out.append(EdgeMonomial(k, n, edges))
    out.sort(key=lambda mono: tuple(edge_key(e) for e in mono.edges))
    return out


def basis_keys(k, n, degree):
    return [mono.edges for mono in basis(k, n, degree)]


def dimension(k, n, degree):
    return len(basis(k, n, degree))


def top_degree(k, n):
    return max(k - 1, 0) * (n - 1)


def poincare_polynomial(k, n):
    """Sum over degrees of dim H^d(Conf_k(R^n)) t^d, by basis enumeration."""
    ring = PolyRing([("t", 1)])
    out = ring.zero()
    for d in range(top_degree(k, n) + 1):
        c = dimension(k, n, d)
        if c:
            out = out + ring.monomial((d,), c)
    return out


def poincare_formula(k, n):
    """The closed-form product over j of (1 + j t^(n-1)), for cross-checks."""
    ring = PolyRing([("t", 1)])
    out = ring.one()
    for j in range(1, k):
        out = out * (ring.one() + ring.monomial((n - 1,), j))
    return out


def label_action(sigma, a: ConfElement):
    """Ring automorphism induced by relabeling points by the permutation sigma.

    `sigma` is a tuple/list of images: point i goes to sigma[i-1].
    """
    k = a.points
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, k + 1)):
        raise InputError("not a permutation of the point labels")
    out = {}
    for edges, c in a.terms.items():
        word = []
        sign = 1
        for i, j in edges:
            e, s = normalize_generator(k, sigma[i - 1], sigma[j - 1], a.dim)
            word.append(e)
            sign *= s
        for e, v in reduce_word(k, a.dim, word, c * sign).items():
            w = out.get(e, Q(0)) + v
            if w == 0:
                out.pop(e, None)
            else:
                out[e] = w
    return ConfElement(k, a.dim, out)


def coordinates(a: ConfElement, keys):
    """Coordinate vector of a homogeneous element in the given basis keys."""
    index = {key: t for t, key in enumerate(keys)}
    vec = [Q(0)] * len(keys)
    for e, c in a.terms.items():
        if e not in index:
            raise InputError("element does not lie in the span of the given basis")
        vec[index[e]] = c
    return vec


def arnold_relation(k, n, a, b, c):
    """x_ab x_bc + x_bc x_ca + x_ca x_ab, which must reduce to zero."""
    return (normal_form(k, n, [(a, b), (b, c)])
            + normal_form(k, n, [(b, c), (c, a)])
            + normal_form(k, n, [(c, a), (a, b)]))
