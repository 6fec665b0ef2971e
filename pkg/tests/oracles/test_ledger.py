import numpy
import pytest
import scipy.sparse

from reuse_vr.errors import SampleKeyError
from reuse_vr.oracles import COLUMN, ENTRY, ROW, ComponentOracle, LedgerSnapshot, MatrixOracle, SimulatorOracle


class Quadratics:
    """f_i(x) = (x - i)^2 / 2 on the line."""

    n = 3
    dim = 1

    def gradient(self, x):
        return x - 1.0

    def component_gradient(self, index, x):
        return x - float(index)


def test_snapshots_add_and_subtract():
    total = LedgerSnapshot(1, 2, 3) + LedgerSnapshot(4, 5, 6)

    assert total == LedgerSnapshot(5, 7, 9)
    assert total - LedgerSnapshot(5, 7, 9) == LedgerSnapshot()


def test_granted_components_are_charged_once():
    bundle = ComponentOracle(Quadratics())
    gradient = bundle.sample_query(2)
    bundle.sample_query(2)
    bundle.sample_query(0)

    assert gradient(numpy.array([5.0])).tolist() == [3.0]
    assert bundle.snapshot() == LedgerSnapshot(batch = 0, sample = 2, distinct = 2)


def test_batch_queries_are_counted():
    bundle = ComponentOracle(Quadratics())
    bundle.batch_query([0.0])
    bundle.batch_query([1.0])

    assert bundle.snapshot().batch == 2


def test_out_of_range_keys_are_rejected():
    bundle = ComponentOracle(Quadratics())

    with pytest.raises(SampleKeyError):
        bundle.sample_query(3)


def test_charge_counts_every_draw():
    bundle = ComponentOracle(Quadratics())
    bundle.charge('component', [0, 0, 1])

    assert bundle.snapshot() == LedgerSnapshot(batch = 0, sample = 3, distinct = 2)


def test_matrix_oracle_channels():
    matrix = numpy.array([[1.0, 2.0], [3.0, 4.0]])
    bundle = MatrixOracle(matrix)

    assert bundle.sample_query(1, ROW).tolist() == [3.0, 4.0]
    assert bundle.sample_query(0, COLUMN).tolist() == [1.0, 3.0]
    assert bundle.sample_query((1, 0), ENTRY) == 3.0
    assert bundle.rows([1, 1]).tolist() == [[3.0, 4.0], [3.0, 4.0]]

    channels = bundle.channel_snapshots()
    assert channels[ROW] == LedgerSnapshot(batch = 0, sample = 1, distinct = 1)
    assert channels[ENTRY].distinct == 1


def test_matrix_oracle_batch_query():
    bundle = MatrixOracle([[1.0, 2.0], [3.0, 4.0]])
    ax, aty = bundle.batch_query(numpy.array([1.0, 0.0, 0.0, 1.0]))

    assert ax.tolist() == [1.0, 3.0]
    assert aty.tolist() == [3.0, 4.0]


def test_simulator_draws_are_always_charged():
    transitions = scipy.sparse.csr_matrix(numpy.array([[0.0, 1.0], [1.0, 0.0]]))
    bundle = SimulatorOracle(transitions)
    successors = bundle.simulate([0, 0, 1], numpy.random.default_rng(0))

    assert successors.tolist() == [1, 1, 0]
    assert bundle.snapshot() == LedgerSnapshot(batch = 0, sample = 3, distinct = 2)
