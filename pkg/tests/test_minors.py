import pytest

from mrlrc.errors import ParameterError, SizeRefusal
from mrlrc.matroid import is_uniform, minor
from mrlrc.minors import (
    MinorWitness,
    oracle_max_uniform,
    oracle_max_uniform_all,
    unrestricted_max_uniform,
    verify_witness,
    witness_eq1,
    witness_eq2,
    witness_eq3,
    witness_eq4,
)
from mrlrc.mr import make_mr, valid_param_triples
from mrlrc.bounds import (
    eq1_size,
    eq2_size,
    eq3_range,
    eq3_size,
    eq4_range,
    eq4_size,
    largest_uniform_size,
)
from mrlrc.subsets import popcount


def test_witness_line_roundtrip():
    w = MinorWitness(0b1001, 0b0110, 3, 9, verified=True, boundary_case=False)
    line = w.to_line()
    assert "k'=3" in line and "n'=9" in line
    back = MinorWitness.from_line(line)
    assert back.contract_flat == 0b1001
    assert back.delete_set == 0b0110
    assert back.target_rank == 3
    assert back.claimed_size == 9
    assert back.verified
    with pytest.raises(ValueError):
        MinorWitness.from_line("nonsense")


def test_eq1_witness_small():
    m = make_mr(8, 4, 3)
    w = witness_eq1(m)
    assert w.verified
    assert w.contract_flat == 0
    assert popcount(w.delete_set) == m.params.g
    assert w.claimed_size == eq1_size(m.params) == 6
    assert w.target_rank == 4


def test_eq2_witness_divisible():
    # r | k: pure whole-block contraction, empty delete set
    m = make_mr(12, 6, 3)
    w = witness_eq2(m)
    assert w.verified
    assert w.delete_set == 0
    assert w.target_rank == 3
    assert w.claimed_size == eq2_size(m.params)


def test_eq2_witness_non_divisible():
    m = make_mr(8, 4, 3)
    w = witness_eq2(m)
    assert w.verified
    assert w.target_rank == 3
    assert w.claimed_size == eq2_size(m.params) == 6
    # partial block: one element contracted, its neighbour deleted
    assert w.contract_flat == 0b0001
    assert w.delete_set == 0b0010


def test_eq3_witness_boundary_case_flagged():
    # h = 2, k' = 2: the strict-inequality formula undercounts here
    m = make_mr(8, 4, 3)
    w = witness_eq3(m, 2)
    assert w.verified
    assert w.boundary_case
    assert w.formula_size == eq3_size(m.params, 2) == 5
    assert w.claimed_size == 6
    assert w.claimed_size >= w.formula_size


def test_eq3_witness_exact_case():
    # h = 5, k' = 2: formula and construction agree
    m = make_mr(12, 4, 3)
    w = witness_eq3(m, 2)
    assert w.verified
    assert not w.boundary_case
    assert w.claimed_size == eq3_size(m.params, 2)


def test_eq3_rejects_bad_rank():
    m = make_mr(8, 4, 3)
    with pytest.raises(ParameterError):
        witness_eq3(m, 1)
    with pytest.raises(ParameterError):
        witness_eq3(m, 3)  # k' must stay below r


def test_eq4_witness():
    m = make_mr(12, 7, 3)
    for kp in eq4_range(m.params):
        w = witness_eq4(m, kp)
        assert w.verified
        assert w.target_rank == kp
        assert w.claimed_size == eq4_size(m.params, kp)


def test_eq4_rejects_bad_rank():
    m = make_mr(12, 7, 3)
    with pytest.raises(ParameterError):
        witness_eq4(m, 3)  # k' = r is the other family
    with pytest.raises(ParameterError):
        witness_eq4(m, 7)  # k' = k is the other family


def test_all_witnesses_all_small_params():
    for n, k, r in valid_param_triples(12):
        m = make_mr(n, k, r)
        p = m.params
        assert witness_eq1(m).verified
        assert witness_eq2(m).verified
        for kp in eq3_range(p):
            w = witness_eq3(m, kp)
            assert w.verified
            if not w.boundary_case:
                assert w.claimed_size == eq3_size(p, kp)
            else:
                assert w.claimed_size >= eq3_size(p, kp)
        for kp in eq4_range(p):
            assert witness_eq4(m, kp).verified


def test_verify_witness_rejects_tampering():
    m = make_mr(8, 4, 3)
    w = witness_eq1(m)
    assert verify_witness(m, w)
    # wrong size
    bad = MinorWitness(w.contract_flat, w.delete_set, w.target_rank, w.claimed_size + 1)
    assert not verify_witness(m, bad)
    # overlap between contract and delete
    bad = MinorWitness(0b0001, 0b0011, w.target_rank, 5)
    assert not verify_witness(m, bad)
    # contract set that is not a flat
    bad = MinorWitness(0b0111, 0, 1, 5)
    assert not verify_witness(m, bad)
    # outside the ground set
    bad = MinorWitness(0, 1 << 9, 4, 7)
    assert not verify_witness(m, bad)


def test_oracle_matches_theorem_8_4_3():
    m = make_mr(8, 4, 3)
    table = oracle_max_uniform_all(m)
    assert table == {2: 6, 3: 6, 4: 6}
    assert max(table.values()) == largest_uniform_size(m.params) == 6


def test_oracle_matches_theorem_12_7_3():
    m = make_mr(12, 7, 3)
    table = oracle_max_uniform_all(m)
    assert max(table.values()) == largest_uniform_size(m.params) == 9


def test_oracle_witnesses_verify():
    m = make_mr(9, 4, 2)
    for kp in range(2, 5):
        size, w = oracle_max_uniform(m, kp)
        assert w is not None
        assert verify_witness(m, w)
        assert popcount(m.ground) - popcount(w.contract_flat) - popcount(w.delete_set) == size


def test_oracle_is_genuine_maximum():
    # every witnessed minor is uniform and no larger uniform minor exists
    m = make_mr(8, 4, 3)
    size, w = oracle_max_uniform(m, 3)
    view = minor(m, w.contract_flat, w.delete_set)
    assert is_uniform(view) == (size, 3)


def test_flat_restriction_loses_nothing():
    # contracting arbitrary sets instead of flats finds nothing bigger
    for n, k, r in valid_param_triples(8):
        m = make_mr(n, k, r)
        for kp in range(2, k + 1):
            restricted, _ = oracle_max_uniform(m, kp)
            assert restricted == unrestricted_max_uniform(m, kp), (n, k, r, kp)


def test_oracle_refusals_and_validation():
    with pytest.raises(SizeRefusal):
        oracle_max_uniform(make_mr(16, 9, 3), 3)
    m = make_mr(8, 4, 3)
    with pytest.raises(ParameterError):
        oracle_max_uniform(m, 1)
    with pytest.raises(ParameterError):
        oracle_max_uniform(m, 5)


def test_constructed_sizes_never_beat_oracle():
    for n, k, r in valid_param_triples(10):
        m = make_mr(n, k, r)
        p = m.params
        checks = [(k, witness_eq1(m)), (r, witness_eq2(m))]
        checks += [(kp, witness_eq3(m, kp)) for kp in eq3_range(p)]
        checks += [(kp, witness_eq4(m, kp)) for kp in eq4_range(p)]
        for kp, w in checks:
            if kp < 2:  # rank-1 targets (r = 1) are below the oracle's range
                continue
            best, _ = oracle_max_uniform(m, kp)
            assert w.claimed_size <= best, (n, k, r, kp)
