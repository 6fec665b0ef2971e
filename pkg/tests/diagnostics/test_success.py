import pytest

from reuse_vr import diagnostics
from reuse_vr.errors import ParameterRangeError


def test_clopper_pearson_all_successes():
    assert diagnostics.clopper_pearson_lower(10, 10) == pytest.approx(0.05 ** 0.1)


def test_clopper_pearson_grows_with_successes():
    bounds = [diagnostics.clopper_pearson_lower(k, 20) for k in range(21)]

    assert bounds == sorted(bounds)
    assert bounds[0] == 0.0


@pytest.mark.parametrize('k, n, confidence', [(3, 2, 0.95), (1, 0, 0.95), (1, 2, 1.0)])
def test_clopper_pearson_ranges(k, n, confidence):
    with pytest.raises(ParameterRangeError):
        diagnostics.clopper_pearson_lower(k, n, confidence)


def test_harness_counts_successes():

    def draw(streams):
        return streams.generator('draw').random()

    def below_two(value):
        return value < 2

    report = diagnostics.success_harness(draw, below_two, 10, master_seed = 5)

    assert report.n_success == 10
    assert report.success_rate == 1.0
    assert report.criterion == 'below_two'
    assert report.lower_bound == pytest.approx(0.05 ** 0.1)
    assert len(set(report.outcomes)) == 10


def test_harness_is_reproducible():

    def draw(streams):
        return int(streams.generator('draw').integers(0, 2))

    first = diagnostics.success_harness(draw, bool, 30, master_seed = 2, criterion_id = 'heads')
    second = diagnostics.success_harness(draw, bool, 30, master_seed = 2, criterion_id = 'heads')

    assert first == second
    assert first.outcomes == second.outcomes
    assert first.to_dict()['criterion'] == 'heads'


def test_harness_needs_a_trial():
    with pytest.raises(ParameterRangeError):
        diagnostics.success_harness(lambda streams: 1, bool, 0)
