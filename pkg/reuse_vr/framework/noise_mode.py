import enum


class NoiseMode(str, enum.Enum):
    CONTINUOUS = 'continuous'
    GRID = 'grid'
