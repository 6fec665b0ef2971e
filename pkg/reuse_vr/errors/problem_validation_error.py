import os

import dpath.util


class ProblemValidationError(ValueError):
    """
    Raised when a problem file parses but violates its format rules.

    Every violation is stored under its location, so that one error reports them all:

        >>> error = ProblemValidationError([(['transitions', 3, 'probs'], 'sums to 0.99')])
        >>> error.errors
        {'transitions': {'3': {'probs': 'sums to 0.99'}}}
    """

    def __init__(self, violations) -> None:
        self.errors = {}
        self.violations = list(violations)

        for path, message in self.violations:
            dpath_path = '/'.join(str(item) for item in path)
            message = str(message).strip(os.linesep).replace(os.linesep, ' ')
            dpath.util.new(self.errors, dpath_path, message)

        super().__init__(str(self.errors))

    def __str__(self):
        return str(self.errors)
