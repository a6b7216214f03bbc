import random
from fractions import Fraction as Q

import pytest

from equiconf import confring, oracles
from equiconf.errors import InputError


def test_square_vanishes():
    assert confring.normal_form(2, 3, [(1, 2), (1, 2)]).is_zero()
    assert confring.normal_form(2, 4, [(1, 2), (1, 2)]).is_zero()


def test_generator_symmetry_follows_parity():
    # x_ji = (-1)^n x_ij
    assert confring.normal_form(2, 4, [(2, 1)]) == confring.generator(2, 4, 1, 2)
    assert confring.normal_form(2, 3, [(2, 1)]) == -confring.generator(2, 3, 1, 2)


def test_normal_form_repeated_maximum_matches_oracle():
    # frozen from the ideal-span oracle: x13*x23 -> x12*x23 - x12*x13  (k=3, n=3)
    got = confring.normal_form(3, 3, [(1, 3), (2, 3)])
    expected = (confring.normal_form(3, 3, [(1, 2), (2, 3)])
                - confring.normal_form(3, 3, [(1, 2), (1, 3)]))
    assert got == expected
    assert got == oracles.oracle_element(3, 3, [(1, 3), (2, 3)])


def test_normal_form_is_idempotent():
    rng = random.Random(2)
    for _ in range(30):
        k = rng.randint(2, 5)
        n = rng.randint(2, 5)
        word = [(rng.randint(1, k), rng.randint(1, k)) for _ in range(rng.randint(1, 4))]
        word = [(i, j) for i, j in word if i != j]
        if not word:
            continue
        a = confring.normal_form(k, n, word)
        renorm = confring.zero(k, n)
        for edges, c in a.terms.items():
            renorm = renorm + confring.normal_form(k, n, list(edges), c)
        assert renorm == a


def test_index_out_of_range():
    with pytest.raises(InputError):
        confring.normal_form(3, 3, [(1, 4)])
    with pytest.raises(InputError):
        confring.normal_form(3, 3, [(2, 2)])


def test_basis_small_cases():
    assert [m.edges for m in confring.basis(2, 3, 2)] == [((1, 2),)]
    assert [m.edges for m in confring.basis(3, 3, 4)] == \
        [((1, 2), (1, 3)), ((1, 2), (2, 3))]
    assert confring.basis(3, 3, 3) == []
    assert confring.basis(1, 4, 0)[0].edges == ()
    assert confring.basis(1, 4, 3) == []


def test_poincare_polynomials():
    assert str(confring.poincare_polynomial(2, 5)) == "1 + t^4"
    assert str(confring.poincare_polynomial(3, 3)) == "1 + 3*t^2 + 2*t^4"
    assert str(confring.poincare_polynomial(4, 2)) == "1 + 6*t + 11*t^2 + 6*t^3"


def test_poincare_matches_product_formula():
    for k in range(2, 7):
        for n in range(2, 6):
            assert confring.poincare_polynomial(k, n) == confring.poincare_formula(k, n)


def test_dimensions_match_ideal_span_oracle():
    for k in range(2, 5):
        for n in range(2, 6):
            for d in range(confring.top_degree(k, n) + 2):
                assert confring.dimension(k, n, d) == oracles.quotient_dimension(k, n, d)


def test_product_unit_and_commutativity():
    one = confring.unit(3, 4)
    x12 = confring.generator(3, 4, 1, 2)
    x13 = confring.generator(3, 4, 1, 3)
    assert one * x12 == x12
    # odd-degree generators anticommute (n even)
    assert x12 * x13 == -(x13 * x12)
    y12 = confring.generator(3, 3, 1, 2)
    y13 = confring.generator(3, 3, 1, 3)
    assert y12 * y13 == y13 * y12


def test_product_ring_mismatch():
    with pytest.raises(InputError):
        confring.generator(3, 4, 1, 2) * confring.generator(3, 3, 1, 2)
    with pytest.raises(InputError):
        confring.generator(3, 4, 1, 2) * confring.generator(4, 4, 1, 2)


def test_graded_commutativity_randomized():
    rng = random.Random(9)
    for _ in range(25):
        k = rng.randint(2, 5)
        n = rng.randint(2, 5)
        da = rng.randint(1, 2)
        db = rng.randint(1, 2)

        def rand_elem(length):
            word = []
            for _ in range(length):
                i, j = rng.sample(range(1, k + 1), 2)
                word.append((i, j))
            return confring.normal_form(k, n, word, rng.randint(1, 3))

        a, b = rand_elem(da), rand_elem(db)
        sign = (-1) ** (da * db * (n - 1) * (n - 1))
        assert a * b == (b * a).scale(sign)


def test_arnold_relation_vanishes_all_triples():
    for k in range(3, 6):
        for n in (3, 4):
            for a in range(1, k + 1):
                for b in range(1, k + 1):
                    for c in range(1, k + 1):
                        if len({a, b, c}) == 3:
                            assert confring.arnold_relation(k, n, a, b, c).is_zero()


def test_confluence_random_rewrite_order():
    rng = random.Random(31)
    for k in range(3, 6):
        for n in (3, 4):
            for _ in range(25):
                word = []
                for _ in range(rng.randint(2, 4)):
                    i, j = rng.sample(range(1, k + 1), 2)
                    word.append((i, j))
                canonical = [confring.normalize_generator(k, i, j, n)[0] for i, j in word]
                reference = confring.reduce_word(k, n, canonical)
                shuffled = confring.reduce_word(k, n, canonical, rng=rng)
                assert reference == shuffled


def test_label_action_parity():
    # x_12 -> x_21 = (-1)^n x_12 under the transposition
    swap = (2, 1)
    assert confring.label_action(swap, confring.generator(2, 4, 1, 2)) == \
        confring.generator(2, 4, 1, 2)
    assert confring.label_action(swap, confring.generator(2, 3, 1, 2)) == \
        -confring.generator(2, 3, 1, 2)


def test_label_action_identity_and_composition():
    rng = random.Random(17)
    for _ in range(15):
        k = rng.randint(2, 5)
        n = rng.randint(2, 5)
        word = []
        for _ in range(rng.randint(1, 3)):
            i, j = rng.sample(range(1, k + 1), 2)
            word.append((i, j))
        a = confring.normal_form(k, n, word)
        ident = tuple(range(1, k + 1))
        assert confring.label_action(ident, a) == a
        sigma = list(range(1, k + 1))
        rng.shuffle(sigma)
        tau = list(range(1, k + 1))
        rng.shuffle(tau)
        composed = tuple(sigma[t - 1] for t in tau)
        assert confring.label_action(composed, a) == \
            confring.label_action(tuple(sigma), confring.label_action(tuple(tau), a))


def test_label_action_is_ring_map():
    rng = random.Random(23)
    for _ in range(15):
        k = rng.randint(3, 5)
        n = rng.randint(2, 4)

        def rand_elem():
            i, j = rng.sample(range(1, k + 1), 2)
            u, v = rng.sample(range(1, k + 1), 2)
            return confring.normal_form(k, n, [(i, j), (u, v)], rng.randint(1, 2))

        a, b = rand_elem(), rand_elem()
        sigma = list(range(1, k + 1))
        rng.shuffle(sigma)
        sigma = tuple(sigma)
        assert confring.label_action(sigma, a * b) == \
            confring.label_action(sigma, a) * confring.label_action(sigma, b)


def test_label_action_rejects_non_bijections():
    with pytest.raises(InputError):
        confring.label_action((1, 1), confring.generator(2, 3, 1, 2))


def test_json_round_trip():
    a = confring.normal_form(3, 3, [(1, 3), (2, 3)], Q(3, 2))
    assert confring.element_from_json(a.to_json()) == a
    assert confring.element_from_json(confring.zero(2, 3).to_json()).is_zero()


def test_degenerate_point_counts():
    assert confring.dimension(0, 3, 0) == 1
    assert confring.dimension(1, 3, 0) == 1
    assert str(confring.poincare_polynomial(1, 3)) == "1"
