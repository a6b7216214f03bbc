import random
from fractions import Fraction as Q

import pytest

from equiconf import confring, equieven as ev
from equiconf.errors import CapacityError, InputError
from equiconf.exactalg import Matrix


def test_d_of_generator_is_euler_image():
    x = ev.x_generator("so", 2, 2, 1, 2)
    assert ev.d2n(x) == ev.unit("so", 2, 2).scale_poly(ev.euler_image("so", 2))
    xu = ev.x_generator("u", 2, 2, 1, 2)
    assert ev.d2n(xu) == ev.unit("u", 2, 2).scale_poly(ev.euler_image("u", 2))


def test_d_leibniz_example():
    x12 = ev.x_generator("so", 3, 2, 1, 2)
    x13 = ev.x_generator("so", 3, 2, 1, 3)
    e = ev.euler_image("so", 2)
    expected = x13.scale_poly(e) - x12.scale_poly(e)
    assert ev.d2n(x12 * x13) == expected


def test_d_squared_zero_on_bases():
    for group in ("torus", "so", "u"):
        for ell in (2, 3, 4):
            for degree in range(0, 10):
                for key in ev.page_basis(group, ell, 2, degree):
                    elem = ev.element_from_coordinates(group, ell, 2, [key], [Q(1)])
                    assert ev.d2n(ev.d2n(elem)).is_zero()


def test_d_leibniz_randomized():
    rng = random.Random(8)
    for _ in range(15):
        ell = rng.randint(2, 4)
        group = rng.choice(("torus", "so", "u"))

        def rand_elem(edges_count):
            out = ev.unit(group, ell, 2)
            for _ in range(edges_count):
                i, j = rng.sample(range(1, ell + 1), 2)
                out = out * ev.x_generator(group, ell, 2, i, j)
            if out.is_zero():
                return out
            ring = ev.page_ring(group, 2)
            return out.scale_poly(ring.gen(ring.names[rng.randrange(len(ring.names))]))

        da = rng.randint(1, 2)
        a, b = rand_elem(da), rand_elem(rng.randint(1, 2))
        sign = -1 if (da * (2 * 2 - 1)) % 2 == 1 else 1
        lhs = ev.d2n(a * b)
        rhs = ev.d2n(a) * b + (a * ev.d2n(b)).scale(sign)
        assert lhs == rhs


def test_kernel_examples():
    assert ev.kernel_K(2, 2, 8).dims == {0: 1}
    summary = ev.kernel_K(3, 2, 8)
    assert summary.dims == {0: 1, 3: 2}
    # frozen: the echelonized kernel basis in degree 3
    assert [str(b) for b in summary.basis[3]] == ["x12 - x23", "x13 - x23"]
    # same span as the alternative representatives {x12 - x13, x13 - x23}
    keys = confring.basis_keys(3, 4, 3)
    span = Matrix([confring.coordinates(b, keys) for b in summary.basis[3]])
    alt = Matrix([confring.coordinates(
        confring.generator(3, 4, 1, 2) - confring.generator(3, 4, 1, 3), keys),
        confring.coordinates(
        confring.generator(3, 4, 1, 3) - confring.generator(3, 4, 2, 3), keys)])
    assert span.rref()[0] == alt.rref()[0]
    assert ev.kernel_K(1, 2, 8).dims == {0: 1}


def test_kernel_closed_under_product():
    summary = ev.kernel_K(4, 2, 9)
    elems = [b for d in sorted(summary.basis) for b in summary.basis[d]]
    for a in elems:
        for b in elems:
            prod = a * b
            if prod.is_zero():
                continue
            page = ev.PageElement("so", 4, 2,
                                  {e: ev.page_ring("so", 2).const(c)
                                   for e, c in prod.terms.items()})
            assert ev.d2n(page).is_zero()


def test_so4_and_o4_models_on_two_points():
    m = ev.equivariant_cohomology_even("so", 2, 2, 16)
    assert m.dims_list() == [1 if d % 4 == 0 else 0 for d in range(17)]
    mo = ev.equivariant_cohomology_even("o", 2, 2, 16)
    assert mo.dims_list() == m.dims_list()


def test_u2_model_on_two_points():
    mu = ev.equivariant_cohomology_even("u", 2, 2, 8)
    assert mu.dims_list() == [1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_so4_model_three_points_degree3():
    m = ev.equivariant_cohomology_even("so", 3, 2, 3)
    assert m.dims.get(3, 0) == 2


def test_verify_page_cohomology_matches_models():
    for group in ("so", "o", "u"):
        for ell in (1, 2, 3, 4):
            report = ev.verify_page_cohomology(group, ell, 2, 12)
            assert report.passed, (group, ell, report.rows)


def test_verify_page_cohomology_five_points():
    for group in ("so", "o", "u"):
        assert ev.verify_page_cohomology(group, 5, 2, 12).passed


def test_u_model_filtered_complex_golden():
    # the complex-coordinates collapse pattern: top Chern class kills the
    # configuration generator, leaving Q[c1] as the surviving page
    golden = ev.as_filtered_complex("u", 2, 2, 14, xi=Q(2))
    from equiconf import specseq as ss

    spec = ss.WeightSpec(Q(2), Q(1, 3), 3)
    assert all(ss.purity_check(golden, spec, at_page=p).ok for p in (1, 2, 3, 4))
    e4 = ss.page(golden, 4).total_degree_dims()
    assert [e4.get(n, 0) for n in range(13)] == \
        [1 if n % 2 == 0 else 0 for n in range(13)]


def test_model_embeds_as_subcomplex_with_zero_differential():
    for group in ("so", "o", "u"):
        model = ev.equivariant_cohomology_even(group, 3, 2, 9)
        for d, items in model.elements.items():
            for _, elem in items:
                assert ev.d2n(elem).is_zero()


def test_model_embedding_is_multiplicative():
    rng = random.Random(4)
    model = ev.equivariant_cohomology_even("so", 3, 2, 9)
    flat = [e for d in sorted(model.elements) for _, e in model.elements[d]]
    summary = ev.kernel_K(3, 2, 9)
    ring = ev.page_ring("so", 2)
    p1 = ring.gen("p1")
    for _ in range(10):
        a = rng.choice(flat)
        b = rng.choice(flat)
        # the product of embedded model elements is again coefficient x kernel
        prod = a * b
        assert ev.d2n(prod).is_zero()
    # coefficient-class times kernel-class products agree with page products
    k3 = summary.basis[3][0]
    emb = ev.PageElement("so", 3, 2,
                         {e: ring.const(c) for e, c in k3.terms.items()})
    assert (emb.scale_poly(p1)) * emb == (emb * emb).scale_poly(p1)


def test_torus_page_cohomology_is_quotient_by_euler():
    dims = ev.page_cohomology_dims("torus", 2, 2, 16)
    expected = {d: (1 if d == 0 else (2 if d % 2 == 0 else 0)) for d in range(17)}
    assert dims == expected


def test_torus_restriction_even():
    n = 2
    so = ev.unit("so", 2, n)
    ring = ev.page_ring("so", n)
    tring = ev.page_ring("torus", n)
    q1, q2 = tring.gens()
    e_res = ev.torus_restriction_even(so.scale_poly(ring.gen("e")))
    assert e_res == ev.unit("torus", 2, n).scale_poly(q1 * q2)
    p_res = ev.torus_restriction_even(so.scale_poly(ring.gen("p1")))
    assert p_res == ev.unit("torus", 2, n).scale_poly(q1 * q1 + q2 * q2)
    # restriction intertwines the differentials
    x = ev.x_generator("so", 2, n, 1, 2)
    assert ev.torus_restriction_even(ev.d2n(x)) == ev.d2n(ev.torus_restriction_even(x))


def test_torus_restriction_intertwines_on_bases():
    for ell in (2, 3):
        for degree in range(0, 8):
            for key in ev.page_basis("so", ell, 2, degree):
                elem = ev.element_from_coordinates("so", ell, 2, [key], [Q(1)])
                assert ev.torus_restriction_even(ev.d2n(elem)) == \
                    ev.d2n(ev.torus_restriction_even(elem))


def test_weyl_fixed_page_so4():
    # degree-4 fixed space of the torus page: q1^2 + q2^2 and q1*q2
    fixed = ev.weyl_fixed_page_basis("so_even", 2, 2, 4)
    assert [str(e) for e in fixed] == ["(q2^2 + q1^2)", "q1*q2"]
    # x itself is fixed
    fixed3 = ev.weyl_fixed_page_basis("so_even", 2, 2, 3)
    assert [str(e) for e in fixed3] == ["x12"]
    # O(4): x flips, so degree 3 is empty, and degree 7 is spanned by q1q2*x
    assert ev.weyl_fixed_page_basis("o_even", 2, 2, 3) == []
    fixed7 = ev.weyl_fixed_page_basis("o_even", 2, 2, 7)
    assert [str(e) for e in fixed7] == ["(q1*q2)*x12"]


def test_fixed_page_cohomology_matches_models():
    so_dims = ev.fixed_page_cohomology_dims("so_even", 2, 2, 16)
    o_dims = ev.fixed_page_cohomology_dims("o_even", 2, 2, 16)
    expected = {d: (1 if d % 4 == 0 else 0) for d in range(17)}
    assert so_dims == expected
    assert o_dims == expected


def test_kernel_even_part_equals_involution_fixed_space():
    # two computations of K^(C2): intersect with even word length, versus the
    # fixed space of the sign involution x_ij -> -x_ij acting on K degreewise
    summary = ev.kernel_K(4, 2, 9)
    even = ev.kernel_even_part(summary)
    fiber = 2 * 2 - 1
    for d, elems in summary.basis.items():
        flipped = [confring.ConfElement(
            4, 4, {e: c * ((-1) ** len(e)) for e, c in b.terms.items()})
            for b in elems]
        fixed_count = sum(1 for a, b in zip(elems, flipped) if a == b)
        assert fixed_count == even.dims.get(d, 0), d
        assert ((d // fiber) % 2 == 0) == (fixed_count == len(elems))


def test_even_page_low_rank_models():
    # n = 1: ambient R^2, coefficient rings Q[e] and Q[c1]
    assert ev.kernel_K(3, 1, 4).dims == {0: 1, 1: 2}
    for group in ("so", "o", "u"):
        assert ev.verify_page_cohomology(group, 3, 1, 6).passed


def test_even_page_rank_three_models():
    # n = 3: ambient R^6, x of degree 5, coefficients Q[p1, p2, e] / Q[c1..c3]
    for group in ("so", "o", "u"):
        assert ev.verify_page_cohomology(group, 2, 3, 14).passed
    assert ev.verify_page_cohomology("so", 3, 3, 12).passed


def test_o_parity_page_equals_involution_fixed_space():
    # even (e-exponent + word length) monomial count equals the dimension of
    # the fixed space of the involution x -> -x, e -> -e computed by averaging
    for ell in (2, 3):
        for degree in range(0, 10):
            basis = ev.page_basis("so", ell, 2, degree)
            fixed = 0
            for edges, exps in basis:
                ring = ev.page_ring("so", 2)
                e_exp = exps[ring.names.index("e")]
                if (e_exp + len(edges)) % 2 == 0:
                    fixed += 1
            assert fixed == ev.page_dimension("o", ell, 2, degree)


def test_capacity_errors():
    with pytest.raises(CapacityError):
        ev.kernel_K(7, 2, 4)
    with pytest.raises(CapacityError):
        ev.verify_page_cohomology("so", 2, 4, 4)


def test_page_element_json_round_trip():
    x12 = ev.x_generator("so", 3, 2, 1, 2)
    x13 = ev.x_generator("so", 3, 2, 1, 3)
    elem = (x12 * x13).scale_poly(ev.page_ring("so", 2).gen("p1"))
    again = ev.page_element_from_json(elem.to_json())
    assert again == elem
