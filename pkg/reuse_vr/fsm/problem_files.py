from __future__ import annotations

import json
import os
import typing

import numpy

from reuse_vr.errors import ProblemParsingError, ProblemValidationError

from .. import fsm


def load_fsm_problem(
        matrix_path: str,
        labels_path: str,
        metadata_path: typing.Optional[str] = None,
        ) -> typing.Tuple[fsm.FsmProblem, dict]:
    """
    Read rows a_i from a CSV matrix, labels from a CSV column and ``{mu_hint, link, lambda, l2}``
    from optional JSON metadata. Returns the problem and the metadata.
    """
    metadata: dict = {}

    if metadata_path is not None:
        try:
            with open(metadata_path) as file:
                metadata = json.load(file)
        except (OSError, json.JSONDecodeError) as error:
            raise ProblemParsingError(error, metadata_path, error.__traceback__)

    try:
        features = numpy.loadtxt(matrix_path, delimiter = ',', ndmin = 2)
        labels = numpy.loadtxt(labels_path, delimiter = ',', ndmin = 1)
    except (OSError, ValueError) as error:
        raise ProblemParsingError(error, matrix_path, error.__traceback__)

    violations = []
    name = os.path.basename(matrix_path)

    if not numpy.isfinite(features).all():
        rows = sorted(set(numpy.argwhere(~numpy.isfinite(features))[:, 0].tolist()))
        violations.append(([name, 'rows'], f"non-finite entries in rows {rows}"))

    if len(labels) != features.shape[0]:
        violations.append(([os.path.basename(labels_path), 'length'], f"{len(labels)} labels for {features.shape[0]} rows"))

    link = metadata.get('link', 'squared')

    if link not in {item.value for item in fsm.Link}:
        violations.append((['metadata', 'link'], f"unknown link '{link}'"))

    if violations:
        raise ProblemValidationError(violations)

    problem = fsm.FsmProblem(
        features = features,
        labels = labels,
        link = link,
        l2 = float(metadata.get('l2', 0.0)),
        mu = metadata.get('mu_hint'),
        )

    return problem, metadata
