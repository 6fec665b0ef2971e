import numpy
import pytest

from reuse_vr.commons import AliasSampler, as_vector, check_finite, project_ball, project_simplex
from reuse_vr.errors import DimensionMismatchError, NonFiniteError, ParameterRangeError


def test_alias_sampler_frequencies():
    sampler = AliasSampler([1.0, 0.0, 3.0])
    draws = sampler.draw(numpy.random.default_rng(0), 20000)

    assert not (draws == 1).any()
    assert (draws == 2).mean() == pytest.approx(0.75, abs = 0.02)


@pytest.mark.parametrize("weights", [[], [0.0, 0.0], [1.0, -1.0], [1.0, numpy.nan]])
def test_alias_sampler_rejects_bad_weights(weights):
    with pytest.raises(ParameterRangeError):
        AliasSampler(weights)


def test_project_simplex_lands_on_the_simplex():
    projected = project_simplex(numpy.array([2.0, -1.0, 0.5]))

    assert projected.sum() == pytest.approx(1.0)
    assert (projected >= 0).all()
    assert projected.tolist() == pytest.approx([1.0, 0.0, 0.0])


def test_project_ball_keeps_inner_points():
    assert project_ball(numpy.array([0.3, 0.4])).tolist() == [0.3, 0.4]


def test_as_vector_checks_the_size():
    assert as_vector(2.0, 'x').tolist() == [2.0]

    with pytest.raises(DimensionMismatchError):
        as_vector([1.0, 2.0], 'x', 3)


def test_check_finite_reports_positions():
    with pytest.raises(NonFiniteError) as error:
        check_finite([1.0, numpy.inf, numpy.nan], 'x')

    assert error.value.positions == [1, 2]
