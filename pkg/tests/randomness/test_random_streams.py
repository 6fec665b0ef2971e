import pytest

from reuse_vr.errors import ParameterRangeError
from reuse_vr.randomness import ADAPTIVE, OBLIVIOUS, RandomStreams


def test_labels_give_independent_streams():
    streams = RandomStreams(11)
    a = streams.generator(OBLIVIOUS).random(5)
    b = streams.generator(ADAPTIVE).random(5)

    assert (a != b).any()


def test_children_are_replayable():
    first = RandomStreams(11).trial(3).generator(OBLIVIOUS).integers(100, size = 4)
    second = RandomStreams(11).trial(3).generator(OBLIVIOUS).integers(100, size = 4)
    other = RandomStreams(11).trial(4).generator(OBLIVIOUS).integers(100, size = 4)

    assert first.tolist() == second.tolist()
    assert first.tolist() != other.tolist()


def test_master_seeds_differ():
    assert RandomStreams(1).generator(OBLIVIOUS).random() != RandomStreams(2).generator(OBLIVIOUS).random()


@pytest.mark.parametrize("seed", [-1, 2 ** 64])
def test_master_seed_range(seed):
    with pytest.raises(ParameterRangeError):
        RandomStreams(seed)
