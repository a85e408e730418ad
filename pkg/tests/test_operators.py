"""Generator actions, matrices, commutators, and the bracket relations."""

import json
from fractions import Fraction

import pytest

from gtbasis.operators import (
    GeneratorSpec,
    InternalConsistencyError,
    ModuleVector,
    OperatorMatrix,
    act_diag,
    act_lower,
    act_raise,
    commutator,
    general_element,
    matrix_from_json,
    matrix_market,
    matrix_to_json,
    operator_matrix,
    verify_sln_relations,
)
from gtbasis.patterns import Partition, enumerate_patterns, highest_pattern
from gtbasis.scalars import RadicalScalar
from gtbasis.weights import weight_of

from golden_data import (
    E12_210,
    E23_210,
    F21_210,
    F32_210,
    H11_210,
    H22_210,
    H33_210,
    P110,
    P210,
    TABLE_ORDER_210,
    all_partitions,
    closed_e12,
    closed_e23,
    closed_f21,
    closed_f32,
    closed_h,
    pat,
    rad,
)

P10 = Partition([1, 0])


def expected_vector(partition, table_row):
    return ModuleVector(
        {pat(partition, target): rad(*coeff) for target, coeff in table_row.items()}
    )


def test_e12_table_full():
    for source, row in E12_210.items():
        assert act_raise(1, pat(P210, source)) == expected_vector(P210, row), source


def test_e23_table_full():
    for source, row in E23_210.items():
        assert act_raise(2, pat(P210, source)) == expected_vector(P210, row), source


def test_f21_table_full():
    for source, row in F21_210.items():
        assert act_lower(1, pat(P210, source)) == expected_vector(P210, row), source


def test_f32_table_full():
    for source, row in F32_210.items():
        assert act_lower(2, pat(P210, source)) == expected_vector(P210, row), source


def test_adjointness_forced_second_terms():
    # These two images each carry a term the single-term table rows miss;
    # adjointness with their partner entries forces it.
    image = act_raise(2, pat(P210, "1,0;1"))
    assert image.coeff(pat(P210, "1,1;1")) == rad(1, 2, 6)
    assert image.coeff(pat(P210, "2,0;1")) == rad(1, 2, 2)
    image = act_lower(2, pat(P210, "2,1;1"))
    assert image.coeff(pat(P210, "2,0;1")) == rad(1, 2, 2)
    assert image.coeff(pat(P210, "1,1;1")) == rad(1, 2, 6)


def test_h_tables_full():
    for source in TABLE_ORDER_210:
        xi = pat(P210, source)
        assert act_diag(1, xi) == (H11_210[source], xi)
        assert act_diag(2, xi) == (H22_210[source], xi)
        assert act_diag(3, xi) == (H33_210[source], xi)


def test_act_raise_annihilates_highest():
    for partition in (P10, P110, P210, Partition([2, 1, 1, 0])):
        beta = highest_pattern(partition)
        for k in range(1, partition.n):
            assert act_raise(k, beta).is_zero()


def test_act_lower_kills_lowest():
    assert act_lower(2, pat(P210, "1,0;0")).is_zero()


def test_index_range_checks():
    with pytest.raises(ValueError):
        act_raise(3, pat(P210, "1,0;0"))
    with pytest.raises(ValueError):
        act_lower(0, pat(P210, "1,0;0"))
    with pytest.raises(ValueError):
        act_diag(4, pat(P210, "1,0;0"))


def test_closed_forms_match_general_formula():
    """The n=3 closed forms agree with the general coefficient products."""
    for partition in all_partitions(3, 4):
        m = partition.parts
        for xi in enumerate_patterns(partition):
            p1, p2 = xi.row(2)
            q = xi.row(1)[0]
            cases = [
                (act_raise(1, xi), closed_e12(m, p1, p2, q), lambda t: (t[0], t[1], t[2])),
                (act_raise(2, xi), closed_e23(m, p1, p2, q), None),
                (act_lower(1, xi), closed_f21(m, p1, p2, q), None),
                (act_lower(2, xi), closed_f32(m, p1, p2, q), None),
            ]
            for image, closed, _ in cases:
                expected = ModuleVector(
                    {
                        pat(partition, "%d,%d;%d" % (t[0], t[1], t[2])): coeff
                        for t, coeff in closed
                    }
                )
                assert image == expected, (partition, xi.to_string())
            h = closed_h(m, p1, p2, q)
            for i in (1, 2, 3):
                assert act_diag(i, xi)[0] == h[i - 1]


def test_adjointness_exhaustive():
    """<E_k ξ, η> = <ξ, F_k η> over all n=3 modules with m_1 ≤ 4."""
    for partition in all_partitions(3, 4):
        pats = enumerate_patterns(partition)
        for k in (1, 2):
            raised = {xi: act_raise(k, xi) for xi in pats}
            lowered = {eta: act_lower(k, eta) for eta in pats}
            for xi in pats:
                for eta in pats:
                    assert raised[xi].coeff(eta) == lowered[eta].coeff(xi)


def test_weight_shift_of_actions():
    for partition in all_partitions(3, 4):
        for xi in enumerate_patterns(partition):
            kappa = weight_of(xi).kappa
            for k in (1, 2):
                for target in act_raise(k, xi).support():
                    shifted = list(kappa)
                    shifted[k - 1] += 1
                    shifted[k] -= 1
                    assert list(weight_of(target).kappa) == shifted


def test_coefficients_square_to_positive_rationals():
    for partition in all_partitions(3, 4):
        for xi in enumerate_patterns(partition):
            for k in (1, 2):
                for vec in (act_raise(k, xi), act_lower(k, xi)):
                    for coeff in vec.terms.values():
                        assert not coeff.is_zero()
                        square = coeff * coeff
                        assert square.is_rational()
                        assert square.rational_part > 0


def test_operator_matrix_n2_raise():
    mat = operator_matrix(GeneratorSpec("raise", 1), P10)
    assert mat.dim == 2
    # ascending order is (q=0, q=1); E sends the first to the second.
    assert mat.entries[1][0] == RadicalScalar.one()
    assert sum(1 for _ in mat.nonzeros()) == 1


def test_operator_matrix_n2_cartan():
    mat = operator_matrix(GeneratorSpec("cartan", 1), P10)
    assert [str(mat.entries[i][i]) for i in range(2)] == ["-1", "1"]


def test_operator_matrix_diag3_matches_table():
    mat = operator_matrix(GeneratorSpec("diag", 3), P210)
    pats = enumerate_patterns(P210)
    for i, xi in enumerate(pats):
        expected = H33_210[xi.compact_str()]
        assert mat.entries[i][i] == RadicalScalar.from_rational(expected)
        assert all(mat.entries[i][j].is_zero() for j in range(8) if j != i)


def test_generator_spec_ranges():
    GeneratorSpec("diag", 3).check_range(3)
    with pytest.raises(ValueError):
        GeneratorSpec("raise", 3).check_range(3)
    with pytest.raises(ValueError):
        GeneratorSpec("diag", 4).check_range(3)
    with pytest.raises(ValueError):
        GeneratorSpec("cartan", 3).check_range(3)
    with pytest.raises(ValueError):
        GeneratorSpec("twist", 1)


def test_commutator_examples():
    e = operator_matrix(GeneratorSpec("raise", 1), P10)
    f = operator_matrix(GeneratorSpec("lower", 1), P10)
    h = operator_matrix(GeneratorSpec("cartan", 1), P10)
    assert commutator(e, f) == h
    assert commutator(e, e).is_zero()
    e12 = operator_matrix(GeneratorSpec("raise", 1), P210)
    e23 = operator_matrix(GeneratorSpec("raise", 2), P210)
    e13 = commutator(e12, e23)
    assert not e13.is_zero()
    assert general_element(1, 3, P210) == e13


def test_general_element_examples():
    f = operator_matrix(GeneratorSpec("lower", 1), P10)
    assert general_element(2, 1, P10) == f
    f32 = operator_matrix(GeneratorSpec("lower", 2), P210)
    f21 = operator_matrix(GeneratorSpec("lower", 1), P210)
    assert general_element(3, 1, P210) == commutator(f32, f21)
    with pytest.raises(ValueError):
        general_element(2, 2, P210)


def test_matrix_algebra():
    e = operator_matrix(GeneratorSpec("raise", 1), P210)
    ident = OperatorMatrix.identity(8)
    zero = OperatorMatrix.zero(8)
    assert e @ ident == e
    assert (e - e) == zero
    assert zero.is_zero()
    assert e.trace() == RadicalScalar.zero()


def test_verify_sln_relations_small_cases():
    for parts in ([1, 0], [2, 1, 0], [1, 1, 1, 0]):
        report = verify_sln_relations(Partition(parts))
        assert report.passed, report.failures[:3]
        assert len(report.checks) > 0
        assert report.failures == []


def test_traces_vanish():
    for parts in ([2, 1, 0], [1, 1, 1, 0]):
        partition = Partition(parts)
        n = partition.n
        for i in range(1, n):
            for j in range(1, n + 1):
                if i != j:
                    assert general_element(i, j, partition).trace().is_zero()
            assert operator_matrix(GeneratorSpec("cartan", i), partition).trace().is_zero()


def test_module_vector_arithmetic():
    a = pat(P210, "1,0;0")
    b = pat(P210, "2,0;0")
    v = ModuleVector.unit(a) + ModuleVector.unit(b)
    assert v.coeff(a) == RadicalScalar.one()
    assert v.support() == {a, b}
    cancelled = v + ModuleVector({a: -RadicalScalar.one()})
    assert cancelled.support() == {b}
    assert v.scale(RadicalScalar.zero()).is_zero()


def test_matrix_json_round_trip():
    for spec in (GeneratorSpec("raise", 2), GeneratorSpec("diag", 1)):
        mat = operator_matrix(spec, P210)
        doc = matrix_to_json(mat)
        assert doc["partition"] == [2, 1, 0]
        assert doc["dim"] == 8
        restored = matrix_from_json(json.loads(json.dumps(doc)))
        assert restored == mat


def test_matrix_market_format():
    mat = operator_matrix(GeneratorSpec("raise", 1), P210)
    text = matrix_market(mat)
    lines = text.strip().split("\n")
    assert lines[0] == "%%MatrixMarket matrix coordinate real general"
    assert lines[1] == "% partition 2,1,0 generator E index 1"
    assert lines[2] == "8 8 4"
    assert len(lines) == 7
    coords = [line.split() for line in lines[3:]]
    assert [(c[0], c[1]) for c in coords] == sorted((c[0], c[1]) for c in coords)
    values = sorted(float(c[2]) for c in coords)
    assert values[0] == 1.0 and abs(values[-1] - 2 ** 0.5) < 1e-12


def test_matrix_market_threshold_drops_tiny_entries():
    tiny = RadicalScalar({1: Fraction(1, 10 ** 15)})
    entries = [[tiny, RadicalScalar.zero()], [RadicalScalar.zero(), RadicalScalar.one()]]
    text = matrix_market(OperatorMatrix(entries))
    assert text.strip().split("\n")[1] == "2 2 1"


def test_internal_consistency_error_is_runtime_error():
    assert issubclass(InternalConsistencyError, RuntimeError)
