# Every random draw of a run derives from one master seed through labelled splits.

from .random_streams import ADAPTIVE, NOISE, OBLIVIOUS, TRIAL, RandomStreams  # noqa: F401
