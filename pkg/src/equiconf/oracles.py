"""Ideal-span oracles: degreewise linear algebra on relation ideals.

These reductions never touch the rewrite engines; they realize each ring as
(free graded-commutative algebra) / (span of relation multiples) degree by
degree and solve linear systems. The verify suites and the test suite use
them to cross-check the normal forms and all dimension counts.
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import combinations, combinations_with_replacement

from .errors import InputError
from .exactalg import Matrix, PolyRing
from . import confring


def all_edges(k):
    return [(i, j) for j in range(2, k + 1) for i in range(1, j)]


# ---------------------------------------------------------------------------
# configuration ring oracle


def free_basis(k, n, m):
    """Word-length-m monomial keys of the free graded-commutative algebra."""
    edges = all_edges(k)
    if n % 2 == 1:
        combos = combinations_with_replacement(edges, m)
    else:
        combos = combinations(edges, m)
    return [tuple(sorted(c, key=confring.edge_key)) for c in combos]


def canonicalize_free(word, n):
    """(sign, key) of a product of canonical edges in the free algebra."""
    sign, edges = confring.koszul_sort(word, n)
    if n % 2 == 0:
        for t in range(len(edges) - 1):
            if edges[t] == edges[t + 1]:
                return 0, None
    return sign, edges


def relation_words(k, n):
    """Relation elements as {key: coeff} dicts in canonical free keys."""
    rels = []
    # the three-term relation, in canonical generators: same shape for both parities
    for a, b, c in combinations(range(1, k + 1), 3):
        rels.append({((a, b), (b, c)): Q(1),
                     ((a, c), (b, c)): Q(-1),
                     ((a, b), (a, c)): Q(-1)})
    if n % 2 == 1:
        for e in all_edges(k):
            rels.append({(e, e): Q(1)})
    return rels


def relation_span_columns(k, n, m, index):
    """Columns spanning the relation ideal in word length m."""
    cols = []
    if m < 2:
        return cols
    for mu in free_basis(k, n, m - 2):
        for rel in relation_words(k, n):
            col = [Q(0)] * len(index)
            nonzero = False
            for word, coeff in rel.items():
                sign, key = canonicalize_free(mu + word, n)
                if sign == 0:
                    continue
                col[index[key]] += coeff * sign
                nonzero = True
            if nonzero:
                cols.append(col)
    return cols


def quotient_dimension(k, n, degree):
    """dim of (free algebra / relation ideal) in the given degree."""
    if degree == 0:
        return 1
    if degree % (n - 1) != 0:
        return 0
    m = degree // (n - 1)
    fb = free_basis(k, n, m)
    if not fb:
        return 0
    index = {key: t for t, key in enumerate(fb)}
    cols = relation_span_columns(k, n, m, index)
    if not cols:
        return len(fb)
    rank = Matrix.from_columns(cols, nrows=len(fb)).rank()
    return len(fb) - rank


def reduce_word(k, n, word):
    """Normal form of a raw generator word, computed by linear algebra only.

    Returns {admissible key: coeff}, expressing the word's class in the
    admissible basis of the quotient by the relation ideal.
    """
    sign0 = 1
    canonical = []
    for i, j in word:
        e, s = confring.normalize_generator(k, i, j, n)
        canonical.append(e)
        sign0 *= s
    m = len(canonical)
    fb = free_basis(k, n, m)
    index = {key: t for t, key in enumerate(fb)}
    target = [Q(0)] * len(fb)
    sgn, key = canonicalize_free(tuple(canonical), n)
    if sgn:
        target[index[key]] = Q(sign0 * sgn)
    admissible = confring.basis_keys(k, n, m * (n - 1))
    adm_cols = []
    for keys in admissible:
        col = [Q(0)] * len(fb)
        col[index[keys]] = Q(1)
        adm_cols.append(col)
    rel_cols = relation_span_columns(k, n, m, index)
    system = Matrix.from_columns(adm_cols + rel_cols, nrows=len(fb))
    sol = system.solve(target)
    if sol is None:
        raise InputError("ideal-span oracle: inconsistent system")
    return {keys: sol[t] for t, keys in enumerate(admissible) if sol[t] != 0}


def oracle_element(k, n, word):
    """reduce_word packaged as a ConfElement for direct comparisons."""
    return confring.ConfElement(k, n, reduce_word(k, n, word))


# ---------------------------------------------------------------------------
# equivariant graph-ring oracle (odd ambient dimension 2n+1)


def graph_free_basis(ell, n, degree):
    """Keys (y_exps, q_exps) of the free ring Q[q][y_e] in a total degree."""
    edges = all_edges(ell)
    qring = PolyRing([(f"q{u}", 2) for u in range(1, n + 1)])
    out = []
    m = 0
    while 2 * n * m <= degree:
        rest = degree - 2 * n * m
        qexps = qring.exponents_of_degree(rest)
        for combo in combinations_with_replacement(range(len(edges)), m):
            yexps = [0] * len(edges)
            for t in combo:
                yexps[t] += 1
            for qe in qexps:
                out.append((tuple(yexps), qe))
        m += 1
    return out


def graph_relations(ell, n):
    """Relation elements as {(y_exps, q_exps): coeff}; all of degree 4n."""
    edges = all_edges(ell)
    eidx = {e: t for t, e in enumerate(edges)}
    nz = len(edges)

    def ymono(*involved):
        v = [0] * nz
        for e in involved:
            v[eidx[e]] += 1
        return tuple(v)

    pn_q = tuple([2] * n)  # (q_1 ... q_n)^2
    q0 = tuple([0] * n)
    rels = []
    for e in edges:
        rels.append({(ymono(e, e), q0): Q(1), (ymono(), pn_q): Q(-1)})
    for a, b, c in combinations(range(1, ell + 1), 3):
        rels.append({(ymono((a, b), (b, c)), q0): Q(1),
                     (ymono((a, c), (b, c)), q0): Q(-1),
                     (ymono((a, b), (a, c)), q0): Q(-1),
                     (ymono(), pn_q): Q(1)})
    return rels


def graph_relation_span(ell, n, degree, index):
    cols = []
    if degree < 4 * n:
        return cols
    multipliers = graph_free_basis(ell, n, degree - 4 * n)
    rels = graph_relations(ell, n)
    for my, mq in multipliers:
        for rel in rels:
            col = [Q(0)] * len(index)
            for (ry, rq), coeff in rel.items():
                key = (tuple(a + b for a, b in zip(my, ry)),
                       tuple(a + b for a, b in zip(mq, rq)))
                col[index[key]] += coeff
            cols.append(col)
    return cols


def graph_quotient_dimension(ell, n, degree):
    if degree % 2 == 1:
        return 0
    fb = graph_free_basis(ell, n, degree)
    if not fb:
        return 0
    index = {key: t for t, key in enumerate(fb)}
    cols = graph_relation_span(ell, n, degree, index)
    if not cols:
        return len(fb)
    rank = Matrix.from_columns(cols, nrows=len(fb)).rank()
    return len(fb) - rank


def graph_reduce(ell, n, factors, admissible):
    """Reduce a product of edge generators against the graph relation ideal.

    `factors` lists edges (i < j); `admissible` lists (graph edge tuple,
    q exponent tuple) pairs forming a basis of the target degree. Returns
    {admissible pair: coeff}.
    """
    edges = all_edges(ell)
    eidx = {e: t for t, e in enumerate(edges)}
    degree = 2 * n * len(factors)
    fb = graph_free_basis(ell, n, degree)
    index = {key: t for t, key in enumerate(fb)}
    yexps = [0] * len(edges)
    for e in factors:
        yexps[eidx[e]] += 1
    q0 = tuple([0] * n)
    target = [Q(0)] * len(fb)
    target[index[(tuple(yexps), q0)]] = Q(1)
    adm_cols = []
    for graph, qexps in admissible:
        col = [Q(0)] * len(fb)
        yv = [0] * len(edges)
        for e in graph:
            yv[eidx[e]] += 1
        col[index[(tuple(yv), tuple(qexps))]] = Q(1)
        adm_cols.append(col)
    rel_cols = graph_relation_span(ell, n, degree, index)
    system = Matrix.from_columns(adm_cols + rel_cols, nrows=len(fb))
    sol = system.solve(target)
    if sol is None:
        raise InputError("graph ideal-span oracle: inconsistent system")
    return {pair: sol[t] for t, pair in enumerate(admissible) if sol[t] != 0}
