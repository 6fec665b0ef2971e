class ShiftWarning(UserWarning):
    """
    Emitted when a shift-and-invert shift is too close to the estimated top eigenvalue.
    """
    pass
