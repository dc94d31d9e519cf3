import numpy as np
import pytest

from mirrorqm import fock
from mirrorqm.exact import ExactScalar

from oracles import ladder


def as_complex(op):
    return np.array(op.matrix, dtype=object).astype(complex)


@pytest.mark.parametrize("cutoff", [3, 8, 12])
def test_positive_ladder_matches_oracle(cutoff):
    a, a_dag = fock.ladder_pos(cutoff)
    assert np.allclose(as_complex(a), ladder(cutoff))
    assert np.allclose(as_complex(a_dag), ladder(cutoff).conj().T)
    assert a_dag.invalid == {cutoff}


def test_number_operator_exact():
    a, a_dag = fock.ladder_pos(6)
    assert fock.number_op(a, a_dag).spectrum() == [ExactScalar.gaussian(n) for n in range(7)]


def test_canonical_commutator_interior_only():
    a, a_dag = fock.ladder_pos(5)
    c = fock.commutator(a, a_dag)
    one = fock.identity_op(a.tower)
    assert c.valid == [0, 1, 2, 3, 4]
    assert fock.equal_on(c, one, c.valid)
    # the truncated top level is where [a, a_dag] = 1 breaks
    assert not fock.equal_on(c, one, [5])


def test_mirror_ladder_frozen_entries():
    at, at_dag = fock.ladder_neg(3)
    assert at.matrix[1, 2] == ExactScalar.gaussian(0, 1) * ExactScalar.sqrt(2)
    assert at_dag.matrix[2, 1] == ExactScalar.gaussian(0, 1) * ExactScalar.sqrt(2)
    assert at.tower.levels == [0, -1, -2, -3]


def test_mirror_number_and_commutator():
    at, at_dag = fock.ladder_neg(6)
    assert fock.number_op(at, at_dag).spectrum() == [ExactScalar.gaussian(-k) for k in range(7)]
    c = fock.commutator(at, at_dag)
    assert fock.equal_on(c, -fock.identity_op(at.tower), c.valid)
    assert 6 not in c.valid


def test_anticommutator_float():
    a, a_dag = fock.ladder_pos(4, exact=False)
    ac = fock.anticommutator(a, a_dag)
    expect = 2 * ladder(4).conj().T @ ladder(4) + np.eye(5)
    assert np.allclose(ac.matrix[:, :4], expect[:, :4])


def test_tower_validation():
    with pytest.raises(ValueError):
        fock.FockTower("sideways", 3)
    with pytest.raises(ValueError):
        fock.FockTower("positive", 3).index_of(-1)
    assert fock.FockTower("negative", 3).index_of(-2) == 2


def test_mixing_towers_rejected():
    a, _ = fock.ladder_pos(3)
    b, _ = fock.ladder_neg(3)
    with pytest.raises(fock.TowerMismatch):
        a @ b


def test_spectrum_requires_diagonal():
    a, _ = fock.ladder_pos(3)
    with pytest.raises(ValueError):
        a.spectrum()
