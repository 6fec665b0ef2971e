class MissingOracleError(ValueError):
    """Raised when a probe needs the reference solution of a contract that has none."""

    def __init__(self, contract_name: str) -> None:
        super().__init__(f"Sub-solver '{contract_name}' declares no reference target, so it cannot be probed.")
