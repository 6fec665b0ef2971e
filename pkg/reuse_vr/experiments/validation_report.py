from __future__ import annotations

import dataclasses
import typing


@dataclasses.dataclass(frozen = True)
class ValidationReport:
    """Outcome of checking one problem file; ``errors`` maps locations to messages."""

    path: str
    kind: str
    errors: dict = dataclasses.field(default_factory = dict)
    summary: typing.Dict[str, typing.Any] = dataclasses.field(default_factory = dict)

    @property
    def valid(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {'path': self.path, 'kind': self.kind, 'valid': self.valid, 'errors': self.errors, 'summary': self.summary}
