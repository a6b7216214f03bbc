"""The even-dimensional page model: H*(BG) (x) H*(Conf_l(R^2n)) with d_2n.

One differential graded algebra per structure group. The coefficient ring and
the image E of the configuration generators under the differential are:

    torus   Q[q_1..q_n],            E = q_1...q_n
    so      Q[p_1..p_{n-1}, e],     E = e
    u       Q[c_1..c_n],            E = c_n

d_2n is the unique coefficient-linear derivation with d(x_ij) = E; the full
orthogonal group is handled as the fixed subspace of the sign involution
x_ij -> -x_ij, e -> -e on the "so" page (forced by d-equivariance). K denotes
the kernel of the differential restricted to the configuration column; the
equivariant cohomology models are  Q[p_1..p_{n-1}] (x) K  for SO(2n),
Q[p_1..p_{n-1}] (x) K^{C2}  for O(2n) (even word length), and
Q[c_1..c_{n-1}] (x) K  for U(n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from . import confring
from .charclasses import GroupSpec, char_ring, torus_ring, weyl_action, weyl_group
from .errors import CapacityError, InputError
from .exactalg import Matrix, PolyRing, Polynomial, poly_from_json, rat

PAGE_GROUPS = ("torus", "so", "o", "u")


def page_ring(group, n):
    if group == "torus":
        return torus_ring(n)
    if group in ("so", "o"):
        return char_ring(GroupSpec("so_even", n))
    if group == "u":
        return char_ring(GroupSpec("u", n))
    raise InputError(f"unknown page group {group!r}")


def euler_image(group, n):
    """The coefficient E with d(x_ij) = E for the given structure group."""
    ring = page_ring(group, n)
    if group == "torus":
        out = ring.one()
        for g in ring.gens():
            out = out * g
        return out
    if group in ("so", "o"):
        return ring.gen("e")
    return ring.gen(f"c{n}")


class PageElement:
    """Element of the page algebra: coefficient polynomials times x-monomials."""

    __slots__ = ("group", "points", "halfdim", "terms")

    def __init__(self, group, points, halfdim, terms):
        if group not in ("torus", "so", "u"):
            raise InputError("page elements live in the torus, so, or u page")
        if halfdim < 1:
            raise InputError("halfdim must be at least 1")
        self.group = group
        self.points = points
        self.halfdim = halfdim
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    @property
    def ambient(self):
        return 2 * self.halfdim

    def _check(self, other):
        if (self.group, self.points, self.halfdim) != \
                (other.group, other.points, other.halfdim):
            raise InputError("elements from different page algebras")

    def __eq__(self, other):
        return isinstance(other, PageElement) and self.group == other.group \
            and self.points == other.points and self.halfdim == other.halfdim \
            and self.terms == other.terms

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
        return PageElement(self.group, self.points, self.halfdim, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PageElement(self.group, self.points, self.halfdim,
                           {e: -c for e, c in self.terms.items()})

    def scale(self, c):
        c = rat(c)
        return PageElement(self.group, self.points, self.halfdim,
                           {e: p.scale(c) for e, p in self.terms.items()})

    def scale_poly(self, poly):
        return PageElement(self.group, self.points, self.halfdim,
                           {e: p * poly for e, p in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, PageElement):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                coeff = c1 * c2
                for e, s in confring.reduce_word(
                        self.points, self.ambient, e1 + e2).items():
                    total = out.get(e)
                    add = coeff.scale(s)
                    total = add if total is None else total + add
                    if total.is_zero():
                        out.pop(e, None)
                    else:
                        out[e] = total
        return PageElement(self.group, self.points, self.halfdim, out)

    __rmul__ = __mul__

    def degree(self):
        fiber = 2 * self.halfdim - 1
        degs = set()
        for e, c in self.terms.items():
            for exps in c.terms:
                degs.add(fiber * len(e) + c.monomial_degree(exps))
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
            mono = "*".join(f"x{i}{j}" if i < 10 and j < 10 else f"x{i}_{j}"
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
        return {"group": self.group, "points": self.points,
                "halfdim": self.halfdim, "coeff_ring": list(page_ring(self.group, self.halfdim).names),
                "terms": [{"coeff": c.to_json(), "edges": [list(e) for e in edges]}
                          for edges, c in self.sorted_terms()]}


def page_element_from_json(data):
    try:
        group = str(data["group"])
        ell, n = int(data["points"]), int(data["halfdim"])
        ring = page_ring(group, n)
        terms = {}
        for t in data["terms"]:
            coeff = poly_from_json(t["coeff"], ring)
            sign = 1
            edges = []
            for pair in t["edges"]:
                e, s = confring.normalize_generator(ell, int(pair[0]),
                                                    int(pair[1]), 2 * n)
                edges.append(e)
                sign *= s
            for e, s in confring.reduce_word(ell, 2 * n, edges).items():
                add = coeff.scale(s * sign)
                prev = terms.get(e)
                terms[e] = add if prev is None else prev + add
        return PageElement(group, ell, n, terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed page element: {exc}") from exc


def unit(group, ell, n):
    return PageElement(group, ell, n, {(): page_ring(group, n).one()})


def x_generator(group, ell, n, i, j):
    edge, sign = confring.normalize_generator(ell, i, j, 2 * n)
    return PageElement(group, ell, n, {(edge,): page_ring(group, n).const(sign)})


def d2n(a: PageElement):
    """The derivation with d(coefficients) = 0 and d(x_ij) = E, by Leibniz."""
    e_img = euler_image(a.group, a.halfdim)
    out = unit(a.group, a.points, a.halfdim).scale(0)
    terms = {}
    for edges, c in a.terms.items():
        for t in range(len(edges)):
            sign = -1 if t % 2 == 1 else 1
            key = edges[:t] + edges[t + 1:]
            add = (c * e_img).scale(sign)
            prev = terms.get(key)
            total = add if prev is None else prev + add
            if total.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = total
    return PageElement(a.group, a.points, a.halfdim, terms)


# ---------------------------------------------------------------------------
# page bases and the sign involution for the full orthogonal group


def check_capacity(ell, n):
    if ell > 6 or n > 3:
        raise CapacityError("supported bounds are ell <= 6, n <= 3")


def page_basis(group, ell, n, degree):
    """Monomial basis [(edge tuple, coeff exponents)] of the page in a degree.

    For group "o" only the monomials fixed by the sign involution
    (e-exponent + word length even) are kept.
    """
    ring = page_ring(group, n)
    fiber = 2 * n - 1
    out = []
    m = 0
    while fiber * m <= degree and m <= max(ell - 1, 0):
        rest = degree - fiber * m
        graphs = confring.basis_keys(ell, 2 * n, fiber * m)
        for exps in ring.exponents_of_degree(rest):
            if group == "o":
                e_exp = exps[ring.names.index("e")]
                if (e_exp + m) % 2 == 1:
                    continue
            for g in graphs:
                out.append((g, exps))
        m += 1
    return out


def page_dimension(group, ell, n, degree):
    return len(page_basis(group, ell, n, degree))


def element_coordinates(a: PageElement, basis):
    index = {key: t for t, key in enumerate(basis)}
    vec = [Q(0)] * len(basis)
    for edges, poly in a.terms.items():
        for exps, c in poly.terms.items():
            key = (edges, exps)
            if key not in index:
                raise InputError("element does not lie in the given degree")
            vec[index[key]] = c
    return vec


def element_from_coordinates(group, ell, n, basis, vec):
    ring = page_ring("so" if group == "o" else group, n)
    terms = {}
    for (edges, exps), c in zip(basis, vec):
        if c == 0:
            continue
        prev = terms.get(edges, ring.zero())
        terms[edges] = prev + ring.monomial(exps, c)
    return PageElement("so" if group == "o" else group, ell, n, terms)


def differential_matrix(group, ell, n, degree):
    """Matrix of d_2n from the degree slice to the next one."""
    src = page_basis(group, ell, n, degree)
    dst = page_basis(group, ell, n, degree + 1)
    cols = []
    for key in src:
        elem = element_from_coordinates(group, ell, n, [key], [Q(1)])
        img = d2n(elem)
        cols.append(element_coordinates(img, dst))
    return Matrix.from_columns(cols, nrows=len(dst)), len(src), len(dst)


def page_cohomology_dims(group, ell, n, max_degree):
    """Degreewise dimension of H(page, d_2n), computed by kernel/image ranks."""
    check_capacity(ell, n)
    dims = {}
    mats = {}
    for d in range(max_degree + 2):
        mats[d], _, _ = differential_matrix(group, ell, n, d)
    for d in range(max_degree + 1):
        src = page_dimension(group, ell, n, d)
        ker = src - mats[d].rank()
        img = mats[d - 1].rank() if d > 0 else 0
        dims[d] = ker - img
    return dims


# ---------------------------------------------------------------------------
# the configuration-column kernel K and the equivariant models


@dataclass(frozen=True)
class KernelSummary:
    """Degreewise basis of K = ker(d_2n) inside H*(Conf_l(R^2n))."""

    points: int
    halfdim: int
    max_degree: int
    dims: dict
    basis: dict  # degree -> list of ConfElement

    def dims_list(self):
        return [self.dims.get(d, 0) for d in range(self.max_degree + 1)]


def kernel_K(ell, n, max_degree):
    """K is cut out by the edge-removal derivation alone (d(x_ij) = E)."""
    check_capacity(ell, n)
    fiber = 2 * n - 1
    dims = {}
    basis = {}
    for d in range(max_degree + 1):
        if d == 0:
            dims[0] = 1
            basis[0] = [confring.unit(ell, 2 * n)]
            continue
        if d % fiber != 0:
            continue
        m = d // fiber
        src = confring.basis_keys(ell, 2 * n, d)
        if not src:
            continue
        dst = confring.basis_keys(ell, 2 * n, d - fiber)
        dst_index = {k: t for t, k in enumerate(dst)}
        cols = []
        for key in src:
            vec = [Q(0)] * len(dst)
            for t in range(len(key)):
                sign = -1 if t % 2 == 1 else 1
                for kk, c in confring.reduce_word(
                        ell, 2 * n, key[:t] + key[t + 1:], Q(sign)).items():
                    vec[dst_index[kk]] += c
            cols.append(vec)
        mat = Matrix.from_columns(cols, nrows=len(dst))
        kern = mat.kernel_basis()
        if kern:
            dims[d] = len(kern)
            basis[d] = [confring.ConfElement(
                ell, 2 * n, {src[t]: v[t] for t in range(len(src)) if v[t] != 0})
                for v in kern]
    return KernelSummary(ell, n, max_degree, dims, basis)


def kernel_even_part(summary: KernelSummary):
    """K^(C2): the intersection of K with the even word-length degrees."""
    fiber = 2 * summary.halfdim - 1
    dims = {}
    basis = {}
    for d, elems in summary.basis.items():
        if (d // fiber) % 2 == 0:
            dims[d] = summary.dims[d]
            basis[d] = elems
    return KernelSummary(summary.points, summary.halfdim, summary.max_degree,
                         dims, basis)


@dataclass(frozen=True)
class EquivariantModel:
    """Model basis of the even equivariant cohomology, embedded in the page."""

    group: str
    points: int
    halfdim: int
    max_degree: int
    dims: dict
    elements: dict = field(repr=False)  # degree -> list of (label, PageElement)

    def dims_list(self):
        return [self.dims.get(d, 0) for d in range(self.max_degree + 1)]


def model_coefficient_ring(group, n):
    """The subring of coefficients surviving to the answer."""
    if group in ("so", "o"):
        return PolyRing([(f"p{u}", 4 * u) for u in range(1, n)])
    if group == "u":
        return PolyRing([(f"c{u}", 2 * u) for u in range(1, n)])
    raise InputError("models exist for the so, o, and u pages")


def equivariant_cohomology_even(group, ell, n, max_degree):
    """Basis of the equivariant cohomology model, with its page embedding."""
    if group not in ("so", "o", "u"):
        raise InputError("models exist for the so, o, and u pages")
    check_capacity(ell, n)
    if ell <= 1:
        # a point: the differential vanishes and the answer is all of H*(BG)
        page_group = "so" if group == "o" else group
        dims, elements = {}, {}
        for d in range(max_degree + 1):
            items = []
            for key in page_basis(group, ell, n, d):
                elem = element_from_coordinates(group, ell, n, [key], [Q(1)])
                items.append((str(elem), elem))
            if items:
                dims[d] = len(items)
                elements[d] = items
        return EquivariantModel(group, ell, n, max_degree, dims, elements)
    summary = kernel_K(ell, n, max_degree)
    if group == "o":
        summary = kernel_even_part(summary)
    sub = model_coefficient_ring(group, n)
    ring = page_ring(group, n)
    dims = {}
    elements = {}
    page_group = "so" if group == "o" else group
    for d in range(max_degree + 1):
        out = []
        for cd in range(0, d + 1):
            kd = d - cd
            if kd not in summary.dims:
                continue
            for exps in sub.exponents_of_degree(cd):
                coeff_label = str(sub.monomial(exps)) if any(exps) else "1"
                images = {name: ring.gen(name) for name in sub.names}
                coeff = sub.monomial(exps).substitute(ring, images)
                for t, kelem in enumerate(summary.basis[kd]):
                    label = f"{coeff_label} * K{kd}[{t}]"
                    embedded = PageElement(
                        page_group, ell, n,
                        {edges: coeff.scale(c) for edges, c in kelem.terms.items()})
                    out.append((label, embedded))
        if out:
            dims[d] = len(out)
            elements[d] = out
    return EquivariantModel(group, ell, n, max_degree, dims, elements)


@dataclass(frozen=True)
class PageReport:
    """Comparison of page cohomology against the tensor model, degreewise."""

    group: str
    points: int
    halfdim: int
    rows: tuple  # (degree, page dim, model dim)

    @property
    def passed(self):
        return all(a == b for _, a, b in self.rows)

    def to_json(self):
        return {"group": self.group, "points": self.points,
                "halfdim": self.halfdim, "passed": self.passed,
                "rows": [{"degree": d, "page": a, "model": b, "match": a == b}
                         for d, a, b in self.rows]}


def verify_page_cohomology(group, ell, n, max_degree):
    """Two independent routes to the same dimensions; never silently passes."""
    model = equivariant_cohomology_even(group, ell, n, max_degree)
    page = page_cohomology_dims(group, ell, n, max_degree)
    rows = tuple((d, page.get(d, 0), model.dims.get(d, 0))
                 for d in range(max_degree + 1))
    return PageReport(group, ell, n, rows)


# ---------------------------------------------------------------------------
# torus restriction and the Weyl-fixed page for SO(2n)/O(2n)


def as_filtered_complex(group, ell, n, max_degree, xi=None):
    """Package the page dga as a filtered complex, filtered by fiber degree.

    Degrees above max_degree are truncated, so only conclusions below
    max_degree - (2n-1) are safe near the top. With `xi` an automorphism is
    attached acting on a monomial of coefficient degree c and word length w
    by xi^(c + 2n*w), the weight pattern of the motivic-style scaling.
    """
    from .specseq import FilteredComplex

    fiber = 2 * n - 1
    spaces = {}
    bases = {}
    for d in range(max_degree + 1):
        bases[d] = page_basis(group, ell, n, d)
        if bases[d]:
            spaces[d] = len(bases[d])
    dmats = {}
    for d in range(max_degree):
        if spaces.get(d) and spaces.get(d + 1):
            dmats[d], _, _ = differential_matrix(group, ell, n, d)
    top_level = fiber * max(ell - 1, 0)
    filtration = {}
    ring = page_ring(group, n)
    for d, basis in bases.items():
        if not basis:
            continue
        levels = []
        for i in range(top_level + 1):
            cols = []
            for t, (edges, exps) in enumerate(basis):
                if fiber * len(edges) <= i:
                    col = [Q(0)] * len(basis)
                    col[t] = Q(1)
                    cols.append(col)
            levels.append(Matrix.from_columns(cols, nrows=len(basis)))
        filtration[d] = levels
    phi = None
    if xi is not None:
        xi = rat(xi)
        phi = {}
        for d, basis in bases.items():
            if not basis:
                continue
            diag = []
            for t, (edges, exps) in enumerate(basis):
                w = len(edges)
                coeff_deg = d - fiber * w
                row = [Q(0)] * len(basis)
                row[t] = xi ** (coeff_deg + 2 * n * w)
                diag.append(row)
            phi[d] = Matrix(diag)
    return FilteredComplex(spaces, dmats, filtration, phi)


def torus_restriction_even(a: PageElement):
    """Apply the classifying-space restriction to the coefficients."""
    if a.group == "torus":
        return a
    n = a.halfdim
    source = GroupSpec("so_even" if a.group == "so" else "u", n)
    from .charclasses import torus_images
    images = torus_images(source)
    ring = torus_ring(n)
    return PageElement("torus", a.points, n,
                       {e: c.substitute(ring, images) for e, c in a.terms.items()})


def weyl_page_action(w, a: PageElement):
    """Weyl action on the torus page: coefficients twist, x picks up det."""
    if a.group != "torus":
        raise InputError("the Weyl action is computed on the torus page")
    sign = w.eps_product()
    out = {}
    for edges, c in a.terms.items():
        poly = weyl_action(w, c)
        if sign == -1 and len(edges) % 2 == 1:
            poly = -poly
        out[edges] = poly
    return PageElement("torus", a.points, a.halfdim, out)


def weyl_fixed_page_basis(family, ell, n, degree, convention="standard"):
    """Echelonized basis of the W(G(2n))-fixed torus page in one degree."""
    if family not in ("so_even", "o_even"):
        raise InputError("fixed pages are computed for so_even or o_even")
    group = weyl_group(GroupSpec(family, n), convention)
    basis = page_basis("torus", ell, n, degree)
    if not basis:
        return []
    rows = []
    for key in basis:
        elem = element_from_coordinates("torus", ell, n, [key], [Q(1)])
        total = elem.scale(0)
        for w in group:
            total = total + weyl_page_action(w, elem)
        total = total.scale(Q(1, len(group)))
        if total.is_zero():
            continue
        rows.append(element_coordinates(total, basis))
    if not rows:
        return []
    red, pivots = Matrix(rows).rref()
    return [element_from_coordinates("torus", ell, n, basis, red.rows[r])
            for r in range(len(pivots))]


def fixed_page_cohomology_dims(family, ell, n, max_degree, convention="standard"):
    """H(W-fixed torus page, d_2n) dimensions, degree by degree."""
    check_capacity(ell, n)
    fixed = {d: weyl_fixed_page_basis(family, ell, n, d, convention)
             for d in range(max_degree + 2)}
    ranks = {}
    for d in range(max_degree + 1):
        elems = fixed[d]
        if not elems:
            ranks[d] = 0
            continue
        target = page_basis("torus", ell, n, d + 1)
        cols = [element_coordinates(d2n(e), target) for e in elems]
        ranks[d] = Matrix.from_columns(cols, nrows=len(target)).rank()
    dims = {}
    for d in range(max_degree + 1):
        ker = len(fixed[d]) - ranks[d]
        img = ranks[d - 1] if d > 0 else 0
        dims[d] = ker - img
    return dims
