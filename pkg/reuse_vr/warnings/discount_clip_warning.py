class DiscountClipWarning(UserWarning):
    """
    Emitted when a suggested sub-problem discount falls outside (0, γ] and is clipped.
    """
    pass
