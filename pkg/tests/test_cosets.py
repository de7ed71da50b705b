import pytest

from bianchi_klf import cosets
from bianchi_klf.hspace import GMatrix


def test_witness_matrices(field):
    for c in cosets.canonical_c_values(field, 3.0):
        for d in field.coprime_residues_mod(c):
            M = cosets.witness_matrix(field, c, d)
            assert M.det() == field.one
            assert M.c == c and M.d == d


def test_partition_of_enumerated_group(field):
    reps = cosets.double_coset_reps(field, 4.0)
    keys = [cosets.double_coset_key(field, R.witness) for R in reps[1:]]
    assert len(set(keys)) == len(keys)
    table = dict(zip(keys, reps[1:]))
    for M in cosets.enumerate_group(field, 9):
        key = cosets.double_coset_key(field, M)
        if key == cosets.OMEGA_INFINITY:
            assert M.c.is_zero()
            continue
        if abs(complex(M.c)) <= 4.0:
            assert cosets.same_double_coset(field, M, table[key])


def test_counts_per_c(field):
    reps = cosets.double_coset_reps(field, 5.0)
    assert reps[0] == cosets.OMEGA_INFINITY
    for c in cosets.canonical_c_values(field, 5.0):
        n = sum(1 for R in reps[1:] if R.c == c)
        assert n == field.euler_phi(c)


def test_coset_reps_infinity_c_zero(field):
    rows = cosets.coset_reps_infinity(field, 0.0)
    assert len(rows) == field.cusp_index == cosets.unit_multiplicity(field)


def test_non_coprime_row_rejected(gauss):
    with pytest.raises(ValueError):
        cosets.witness_matrix(gauss, gauss(2), gauss(0, 2))
