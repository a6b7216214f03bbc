"""Classifying-space cohomology rings, Weyl groups, and their invariants.

Weyl groups are stored as signed permutations (sigma, eps, eta); eta is the
residual reflection of odd orthogonal groups and acts trivially on the torus
variables. Two conventions for the special-orthogonal subgroups are exposed:
"standard" (even number of sign flips; eta = prod eps in the odd case) and
"paper" (an extra sign(sigma) factor in the constraint). Both are index-2
subgroups; "standard" is the default and is the one under which the torus
invariants reproduce the classical rings of Pontryagin/Euler classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from itertools import permutations, product as iter_product

from .errors import CapacityError, InputError
from .exactalg import Matrix, PolyRing, Polynomial, elementary_symmetric

FAMILIES = ("torus", "so_odd", "o_odd", "so_even", "o_even", "u")
RANK_BOUND = 5
CONVENTIONS = ("standard", "paper")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise InputError("rank must be at least 1")

    def to_json(self):
        return {"family": self.family, "rank": self.rank}


def group_from_json(data):
    try:
        return GroupSpec(str(data["family"]), int(data["rank"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed group spec: {exc}") from exc


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation (sigma, eps) with residual reflection sign eta."""

    sigma: tuple
    eps: tuple
    eta: int = 1

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise InputError("sigma is not a permutation")
        if len(self.eps) != n or any(e not in (1, -1) for e in self.eps):
            raise InputError("eps must be a tuple of signs")
        if self.eta not in (1, -1):
            raise InputError("eta must be a sign")

    def __mul__(self, other):
        """Composition so that action(self * other) = action(self) o action(other)."""
        if len(self.sigma) != len(other.sigma):
            raise InputError("rank mismatch")
        sigma = tuple(self.sigma[other.sigma[i] - 1] for i in range(len(self.sigma)))
        eps = tuple(other.eps[i] * self.eps[other.sigma[i] - 1]
                    for i in range(len(self.sigma)))
        return WeylElement(sigma, eps, self.eta * other.eta)

    def sign_of_sigma(self):
        sign = 1
        seen = [False] * len(self.sigma)
        for i in range(len(self.sigma)):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.sigma[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def eps_product(self):
        out = 1
        for e in self.eps:
            out *= e
        return out

    def to_json(self):
        return {"sigma": list(self.sigma), "eps": list(self.eps), "eta": self.eta}


def weyl_identity(rank):
    return WeylElement(tuple(range(1, rank + 1)), (1,) * rank, 1)


@lru_cache(maxsize=None)
def weyl_group(spec: GroupSpec, convention="standard"):
    """Complete element list of the Weyl group of the given family."""
    if convention not in CONVENTIONS:
        raise InputError(f"unknown convention {convention!r}")
    n = spec.rank
    if n > RANK_BOUND:
        raise CapacityError(f"rank {n} exceeds the enumeration bound {RANK_BOUND}")
    if spec.family == "torus":
        return (weyl_identity(n),)
    if spec.family == "u":
        return tuple(WeylElement(sigma, (1,) * n, 1)
                     for sigma in permutations(range(1, n + 1)))
    out = []
    for sigma in permutations(range(1, n + 1)):
        for eps in iter_product((1, -1), repeat=n):
            w = WeylElement(sigma, eps, 1)
            prod_eps = w.eps_product()
            constraint = prod_eps if convention == "standard" \
                else w.sign_of_sigma() * prod_eps
            if spec.family == "o_even":
                out.append(w)
            elif spec.family == "so_even":
                if constraint == 1:
                    out.append(w)
            elif spec.family == "so_odd":
                out.append(WeylElement(sigma, eps, constraint))
            elif spec.family == "o_odd":
                out.append(WeylElement(sigma, eps, 1))
                out.append(WeylElement(sigma, eps, -1))
    return tuple(out)


@lru_cache(maxsize=None)
def torus_ring(n):
    return PolyRing([(f"q{u}", 2) for u in range(1, n + 1)])


@lru_cache(maxsize=None)
def char_ring(spec: GroupSpec):
    """The classifying-space cohomology ring presentation for the family."""
    n = spec.rank
    if spec.family == "torus":
        return torus_ring(n)
    if spec.family in ("so_odd", "o_odd", "o_even"):
        return PolyRing([(f"p{u}", 4 * u) for u in range(1, n + 1)])
    if spec.family == "so_even":
        gens = [(f"p{u}", 4 * u) for u in range(1, n)]
        gens.append(("e", 2 * n))
        return PolyRing(gens)
    if spec.family == "u":
        return PolyRing([(f"c{u}", 2 * u) for u in range(1, n + 1)])
    raise InputError(f"unknown family {spec.family!r}")


def weyl_action(w: WeylElement, f: Polynomial):
    """q_i -> eps_i q_{sigma(i)}, extended as a ring map; eta acts trivially."""
    n = len(w.sigma)
    ring = f.ring
    if ring != torus_ring(n):
        raise InputError("polynomial does not live in the matching torus ring")
    out = {}
    for exps, c in f.terms.items():
        new = [0] * n
        sign = 1
        for i, e in enumerate(exps):
            if e:
                new[w.sigma[i] - 1] += e
                if w.eps[i] == -1 and e % 2 == 1:
                    sign = -sign
        key = tuple(new)
        v = out.get(key, Q(0)) + sign * c
        if v == 0:
            out.pop(key, None)
        else:
            out[key] = v
    return Polynomial(ring, out)


def reynolds(spec: GroupSpec, f: Polynomial, convention="standard"):
    """Group average of f over the Weyl group (exact)."""
    group = weyl_group(spec, convention)
    total = f.ring.zero()
    for w in group:
        total = total + weyl_action(w, f)
    return total.scale(Q(1, len(group)))


def invariant_basis(spec: GroupSpec, degree, convention="standard"):
    """Echelonized basis of the degree-d Weyl invariants of Q[q_1..q_n]."""
    ring = torus_ring(spec.rank)
    exps = ring.exponents_of_degree(degree)
    if not exps:
        return []
    index = {e: t for t, e in enumerate(exps)}
    rows = []
    for e in exps:
        avg = reynolds(spec, ring.monomial(e), convention)
        if avg.is_zero():
            continue
        row = [Q(0)] * len(exps)
        for ee, c in avg.terms.items():
            row[index[ee]] = c
        rows.append(row)
    if not rows:
        return []
    red, pivots = Matrix(rows).rref()
    out = []
    for r in range(len(pivots)):
        terms = {exps[j]: red.rows[r][j] for j in range(len(exps)) if red.rows[r][j] != 0}
        out.append(Polynomial(ring, terms))
    return out


def invariant_dimension(spec: GroupSpec, degree, convention="standard"):
    return len(invariant_basis(spec, degree, convention))


def torus_images(spec: GroupSpec):
    """Images of the characteristic classes under restriction to the torus."""
    n = spec.rank
    qring = torus_ring(n)
    qs = qring.gens()
    images = {}
    if spec.family == "torus":
        return {name: qring.gen(name) for name in qring.names}
    if spec.family in ("so_odd", "o_odd", "o_even"):
        squares = [q * q for q in qs]
        for u in range(1, n + 1):
            images[f"p{u}"] = elementary_symmetric(squares, u)
        return images
    if spec.family == "so_even":
        squares = [q * q for q in qs]
        for u in range(1, n):
            images[f"p{u}"] = elementary_symmetric(squares, u)
        euler = qs[0]
        for q in qs[1:]:
            euler = euler * q
        images["e"] = euler
        return images
    if spec.family == "u":
        for u in range(1, n + 1):
            images[f"c{u}"] = elementary_symmetric(qs, u)
        return images
    raise InputError(f"unknown family {spec.family!r}")


def restriction_map(source: GroupSpec, target: GroupSpec, f: Polynomial):
    """The documented restriction maps between classifying-space rings."""
    if f.ring != char_ring(source):
        raise InputError("polynomial does not live in the source ring")
    if target.family == "torus":
        if target.rank != source.rank:
            raise InputError("torus restriction requires equal rank")
        return f.substitute(torus_ring(source.rank), torus_images(source))
    if source.family == "o_even" and target.family == "so_even" \
            and source.rank == target.rank:
        n = source.rank
        ring = char_ring(target)
        images = {f"p{u}": ring.gen(f"p{u}") for u in range(1, n)}
        images[f"p{n}"] = ring.gen("e") ** 2
        return f.substitute(ring, images)
    if source.family == "so_even" and target.family == "so_odd" \
            and target.rank == source.rank - 1:
        n = source.rank
        ring = char_ring(target)
        images = {f"p{u}": ring.gen(f"p{u}") for u in range(1, n)}
        images["e"] = ring.zero()
        return f.substitute(ring, images)
    raise InputError(
        f"unsupported restriction {source.family}({source.rank}) -> "
        f"{target.family}({target.rank})")
