class SampleKeyError(IndexError):
    """Raised when a sample query uses a key outside the problem's index set."""

    def __init__(self, channel: str, key, bound) -> None:
        self.channel = channel
        self.key = key
        super().__init__(f"Sample key {key} is out of range for channel '{channel}' (valid: {bound}).")
