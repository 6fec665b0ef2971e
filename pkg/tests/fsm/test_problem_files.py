import json

import numpy
import pytest

from reuse_vr import fsm
from reuse_vr.errors import DimensionMismatchError, ParameterRangeError, ProblemParsingError, ProblemValidationError


@pytest.fixture
def files(tmp_path):
    matrix = tmp_path / 'matrix.csv'
    labels = tmp_path / 'labels.csv'
    metadata = tmp_path / 'metadata.json'
    matrix.write_text("1,0\n0,1\n1,1\n")
    labels.write_text("1\n-1\n1\n")
    metadata.write_text(json.dumps({'link': 'logistic', 'l2': 0.5}))
    return str(matrix), str(labels), str(metadata)


def test_load(files):
    problem, metadata = fsm.load_fsm_problem(*files)

    assert problem.n == 3
    assert problem.dim == 2
    assert problem.link is fsm.Link.LOGISTIC
    assert problem.mu == 0.5
    assert metadata['l2'] == 0.5


def test_label_count_mismatch(files, tmp_path):
    matrix, _, _ = files
    labels = tmp_path / 'short.csv'
    labels.write_text("1\n2\n")

    with pytest.raises(ProblemValidationError) as error:
        fsm.load_fsm_problem(matrix, str(labels))

    assert 'short.csv' in error.value.violations[0][0]


def test_unknown_link(files, tmp_path):
    matrix, labels, _ = files
    metadata = tmp_path / 'bad.json'
    metadata.write_text(json.dumps({'link': 'hinge'}))

    with pytest.raises(ProblemValidationError) as error:
        fsm.load_fsm_problem(matrix, labels, str(metadata))

    assert error.value.violations[0][0] == ['metadata', 'link']


def test_unreadable_metadata(files, tmp_path):
    matrix, labels, _ = files
    metadata = tmp_path / 'broken.json'
    metadata.write_text("{")

    with pytest.raises(ProblemParsingError):
        fsm.load_fsm_problem(matrix, labels, str(metadata))


def test_problem_rejects_flat_average():
    with pytest.raises(ParameterRangeError):
        fsm.FsmProblem(features = [[1.0, 0.0], [2.0, 0.0]], labels = [0.0, 1.0])


def test_problem_rejects_label_shape():
    with pytest.raises(DimensionMismatchError):
        fsm.FsmProblem(features = [[1.0], [2.0]], labels = [0.0, 1.0, 2.0])


def test_gradient_is_the_component_average(files):
    problem, _ = fsm.load_fsm_problem(*files)
    x = numpy.array([0.3, -0.2])
    average = numpy.mean([problem.component_gradient(i, x) for i in range(problem.n)], axis = 0)

    assert problem.gradient(x) == pytest.approx(average)
    assert problem.component(0).gradient(x) == pytest.approx(problem.component_gradient(0, x))
