import random
from fractions import Fraction as Q

import pytest

from equiconf import specseq as ss
from equiconf import verify
from equiconf.errors import InputError, PurityViolation, WitnessError
from equiconf.exactalg import Matrix, col_space


def two_term(levels_e, levels_f):
    """A^0 = Q e -> A^1 = Q f with the given filtration levels."""
    top = max(levels_e, levels_f) + 1
    filt = {
        0: [Matrix.identity(1) if i >= levels_e else col_space([], dim=1)
            for i in range(top + 1)],
        1: [Matrix.identity(1) if i >= levels_f else col_space([], dim=1)
            for i in range(top + 1)],
    }
    return ss.FilteredComplex({0: 1, 1: 1}, {0: Matrix([[1]])}, filt)


def test_validation_rejects_bad_data():
    with pytest.raises(InputError):
        # d does not preserve the filtration: level(e) = 0 but level(f) = 1
        bad = two_term(0, 1)
    ok = two_term(1, 0)
    assert ok.validate()
    with pytest.raises(InputError):
        ss.FilteredComplex({0: 1, 1: 1},
                           {0: Matrix([[1]]), 1: Matrix([[1]])},
                           {0: [Matrix.identity(1)], 1: [Matrix.identity(1)]})


def test_canonical_filtration_golden_cases():
    # zero differential: tau_i A^n = A^n for n <= i, else 0
    tau = ss.canonical_filtration({0: 1, 2: 1}, {})
    assert tau.W(0, 0).ncols == 1
    assert tau.W(2, 1).ncols == 0
    assert tau.W(2, 2).ncols == 1
    # acyclic complex: tau_0 A^0 = ker d = 0
    tau = ss.canonical_filtration({0: 1, 1: 1}, {0: Matrix([[1]])})
    assert tau.W(0, 0).ncols == 0
    assert tau.W(0, 1).ncols == 1


def test_page_of_trivial_filtration():
    # single-jump filtration: E0 concentrated in one column, E1 = cohomology
    A = ss.FilteredComplex(
        {0: 1, 1: 1}, {0: Matrix([[1]])},
        {0: [Matrix.identity(1)], 1: [Matrix.identity(1)]})
    e0 = ss.page(A, 0)
    assert e0.dims() == {(0, 0): 1, (0, 1): 1}
    assert not ss.page(A, 1).dims()  # acyclic


def test_two_step_filtration_of_acyclic_complex():
    # W_0 = image line in degree 1: nonzero d1 and E2 = 0
    A = two_term(1, 0)
    e1 = ss.page(A, 1)
    assert e1.dims() == {(1, 0): 1, (0, 1): 1}
    d1 = e1.differential(1, 0)
    assert d1.nrows == 1 and d1.ncols == 1 and not d1.is_zero()
    assert not ss.page(A, 2).dims()


def test_pair_dies_exactly_at_its_level_drop():
    A = two_term(3, 1)
    for r in range(0, 3):
        assert sum(ss.page(A, r).dims().values()) == 2
    assert not ss.page(A, 3).dims()


def test_page_dimension_recursion_and_stabilization():
    rng = random.Random(6)
    for _ in range(20):
        A = verify.random_filtered_complex(rng)
        for r in (0, 1, 2):
            pg = ss.page(A, r)
            nxt = ss.page(A, r + 1)
            assert ss.page_cohomology_dims(pg) == nxt.dims()
            for key, mat in pg.differentials.items():
                i, n = key
                nxt_mat = pg.differentials.get((i - pg.r, n + 1))
                if nxt_mat is not None:
                    assert (nxt_mat * mat).is_zero()
        top = A.top_level
        assert ss.page(A, top + 1).dims() == ss.page(A, top + 2).dims()


def test_decalage_zero_differential_is_shift():
    rng = random.Random(9)
    A = verify.random_filtered_complex(rng)
    zero_d = ss.FilteredComplex(A.spaces, {}, A.filtration)
    D = ss.decalage(zero_d)
    for n in zero_d.degrees():
        for i in range(D.top_level + 1):
            assert D.W(n, i) == zero_d.W(n, i - n)


def test_decalage_page_shift_randomized():
    rng = random.Random(14)
    for _ in range(15):
        A = verify.random_filtered_complex(rng, strict=True)
        D = ss.decalage(A)
        D.validate()
        e0d, e1a = ss.page(D, 0), ss.page(A, 1)
        keys = set(e0d.dims()) | {(i + n, n) for (i, n) in e1a.dims()}
        for (i, n) in keys:
            assert e0d.dim(i, n) == e1a.dim(i - n, n)
    for _ in range(15):
        A = verify.random_filtered_complex(rng)
        D = ss.decalage(A)
        e1d, e2a = ss.page(D, 1), ss.page(A, 2)
        keys = set(e1d.dims()) | {(i + n, n) for (i, n) in e2a.dims()}
        for (i, n) in keys:
            assert e1d.dim(i, n) == e2a.dim(i - n, n)


def test_double_decalage_shifts_pages_by_two():
    rng = random.Random(27)
    for _ in range(10):
        A = verify.random_filtered_complex(rng)
        DD = ss.decalage(ss.decalage(A))
        e1dd, e3a = ss.page(DD, 1), ss.page(A, 3)
        keys = set(e1dd.dims()) | {(i + 2 * n, n) for (i, n) in e3a.dims()}
        for (i, n) in keys:
            assert e1dd.dim(i, n) == e3a.dim(i - 2 * n, n)


def test_decalage_same_level_pair_is_only_quasi_iso():
    A = two_term(1, 1)
    D = ss.decalage(A)
    assert sum(ss.page(D, 0).dims().values()) == 2
    assert not ss.page(A, 1).dims()
    assert not ss.page_cohomology_dims(ss.page(D, 0))


def test_weight_spec_validation():
    with pytest.raises(InputError):
        ss.WeightSpec(Q(1), Q(1), 0)
    with pytest.raises(InputError):
        ss.WeightSpec(Q(-1), Q(1), 0)
    with pytest.raises(InputError):
        ss.WeightSpec(Q(4), Q(0), 0)
    spec = ss.WeightSpec(Q(4), Q(1, 3), 3)
    assert spec.weight(3, 1) == Q(2)  # alpha*(i + n r) = (3 + 3)/3


def test_purity_certificate_single_point():
    A = ss.canonical_filtration({0: 1}, {}, {0: Matrix([[1]])})
    result = ss.purity_check(A, ss.WeightSpec(Q(4), Q(1), 0))
    assert result.ok
    assert result.records == (((0, 0), Q(0), 1),)


def test_purity_two_degrees_diagonal():
    xi = Q(4)
    A = ss.canonical_filtration(
        {0: 1, 2: 1}, {}, {0: Matrix([[1]]), 2: Matrix([[xi * xi]])})
    assert ss.purity_check(A, ss.WeightSpec(xi, Q(1), 0)).ok
    # spoiled: phi = 2 xi^2 on H^2
    B = ss.canonical_filtration(
        {0: 1, 2: 1}, {}, {0: Matrix([[1]]), 2: Matrix([[2 * xi * xi]])})
    result = ss.purity_check(B, ss.WeightSpec(xi, Q(1), 0))
    assert not result.ok
    assert result.violation[0] == (-2, 4)
    assert result.violation[1] == "t - 32"


def test_purity_requires_phi():
    A = ss.canonical_filtration({0: 1}, {})
    with pytest.raises(InputError):
        ss.purity_check(A, ss.WeightSpec(Q(4), Q(1), 0))


def test_purity_at_page_bounds():
    A = ss.canonical_filtration({0: 1}, {}, {0: Matrix([[1]])})
    with pytest.raises(InputError):
        ss.purity_check(A, ss.WeightSpec(Q(4), Q(1), 0), at_page=2)


def test_negative_slope_weights():
    rng = random.Random(88)
    xi = Q(3)
    A, _, _ = verify.random_pure_complex(rng, xi, Q(-1))
    assert ss.purity_check(A, ss.WeightSpec(xi, Q(-1), 0)).ok
    witness = ss.formality_witness(A, ss.WeightSpec(xi, Q(-1), 0))
    assert witness.verified


def test_purity_non_integral_weight_requires_vanishing():
    xi = Q(4)
    A = ss.canonical_filtration({1: 1}, {}, {1: Matrix([[xi]])})
    result = ss.purity_check(A, ss.WeightSpec(xi, Q(1, 2), 0))
    assert not result.ok
    assert "non-integral" in result.violation[2]


def test_witness_zero_differential_is_identity():
    A = ss.canonical_filtration({0: 2}, {}, {0: Matrix.identity(2)})
    witness = ss.formality_witness(A, ss.WeightSpec(Q(3), Q(1), 0))
    assert witness.verified
    assert witness.inclusions[0] == Matrix.identity(2)


def test_witness_four_dimensional_example():
    # A^0 = Q^2, A^1 = Q^2, rank-one d; phi has eigenvalue 1 on surviving H^0,
    # xi on surviving H^1, and 7 paired across the acyclic part.
    xi = Q(3)
    d = Matrix([[0, 1], [0, 0]])
    phi = {0: Matrix([[1, 0], [0, 7]]),
           1: Matrix([[7, 0], [0, xi]])}
    A = ss.canonical_filtration({0: 2, 1: 2}, {0: d}, phi)
    witness = ss.formality_witness(A, ss.WeightSpec(xi, Q(1), 0))
    assert witness.verified
    assert witness.inclusions[0].ncols == 1
    assert witness.inclusions[1].ncols == 1
    data = witness.to_json()
    assert data["verified"] is True


def test_witness_refuses_impure_input():
    xi = Q(3)
    A = ss.canonical_filtration({0: 1}, {}, {0: Matrix([[7]])})
    with pytest.raises(PurityViolation):
        ss.formality_witness(A, ss.WeightSpec(xi, Q(1), 0))


def test_witness_jordan_obstruction_is_refused():
    # ker d^1 = A^1 is a Jordan block tying im d to the surviving class; no
    # strict equivariant section exists and the construction must say so.
    xi = Q(3)
    d = Matrix([[0], [1]])  # A^0 = Q -> A^1 = Q^2, image = second coordinate
    phi = {0: Matrix([[xi]]), 1: Matrix([[xi, 0], [1, xi]])}
    A = ss.canonical_filtration({0: 1, 1: 2}, {0: d}, phi)
    assert ss.purity_check(A, ss.WeightSpec(xi, Q(1), 0)).ok
    with pytest.raises(WitnessError):
        ss.formality_witness(A, ss.WeightSpec(xi, Q(1), 0))


def test_witness_randomized_pure_battery():
    rng = random.Random(21)
    xi = Q(3)
    for t in range(20):
        alpha = [Q(1), Q(2), Q(1, 2)][t % 3]
        A, h_dims, _ = verify.random_pure_complex(rng, xi, alpha)
        witness = ss.formality_witness(A, ss.WeightSpec(xi, alpha, 0))
        assert witness.verified
        assert {n: m.ncols for n, m in witness.inclusions.items()} == h_dims


def test_purity_staircase_monotonicity():
    rng = random.Random(33)
    xi = Q(3)
    for _ in range(10):
        r = rng.randint(1, 3)
        A = verify.random_staircase_complex(rng, xi, Q(1), r)
        spec = ss.WeightSpec(xi, Q(1), r)
        for p in range(1, r + 2):
            assert ss.purity_check(A, spec, at_page=p).ok


def test_page_automorphism_commutes_with_page_differential():
    rng = random.Random(55)
    xi = Q(3)
    for _ in range(8):
        r = rng.randint(1, 3)
        A = verify.random_staircase_complex(rng, xi, Q(1), r)
        pg = ss.page(A, r)
        for (i, n), mat in pg.differentials.items():
            tgt = (i - r, n + 1)
            if tgt in pg.spots:
                assert mat * pg.aut(i, n) == pg.aut(*tgt) * mat


def test_witness_with_jordan_block_on_cohomology():
    # phi may be non-semisimple on the surviving cohomology itself; the
    # section solve handles that as long as boundaries are not entangled
    xi = Q(3)
    jordan = Matrix([[xi, 1], [0, xi]])
    A = ss.canonical_filtration({1: 2}, {}, {1: jordan})
    witness = ss.formality_witness(A, ss.WeightSpec(xi, Q(1), 0))
    assert witness.verified
    assert witness.induced[1] == jordan


def test_hom_vanishing_desk_case():
    xi = Q(4)
    assert ss.hom_vanishing(Matrix([[xi]]), Matrix([[xi * xi]])) == (0, 0)
    assert ss.hom_vanishing(Matrix([[xi]]), Matrix([[xi]])) == (1, 1)


def test_filtered_complex_json_round_trip():
    rng = random.Random(2)
    A = verify.random_filtered_complex(rng)
    again = ss.complex_from_json(A.to_json())
    assert again.spaces == A.spaces
    for n in A.degrees():
        assert again.diff(n) == A.diff(n)
        for i in range(A.top_level + 1):
            assert again.W(n, i) == A.W(n, i)
    B, _, _ = verify.random_pure_complex(rng, Q(3), Q(1))
    again = ss.complex_from_json(B.to_json())
    assert again.phi is not None
    for n in B.degrees():
        assert again.aut(n) == B.aut(n)


def test_complex_from_json_without_filtration_uses_canonical():
    data = {"degrees": {"0": 1, "1": 1}, "d": {"0": [["1"]]}}
    A = ss.complex_from_json(data, require_filtration=False)
    assert A.W(0, 0).ncols == 0
