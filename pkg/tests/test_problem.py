import json

import pytest

from helpers import FIXTURES, M
from pontrel.errors import InputError, ParseError, ValidationError
from pontrel.exact import as_scalar
from pontrel.nevanlinna import HOLOMORPHIC, ReferencePoint
from pontrel.problem import load_problem, parse_problem, serialize_problem

EX41 = {"space": {"dim": 1, "J": [["1"]]}, "A": [["0"]], "gamma": [["1"]],
        "form": "holomorphic_at_infinity"}


def doc(**overrides):
    d = {
        "space": {"dim": 3, "J": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "-1"]]},
        "A": [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "-1"]],
        "gamma": [["1/2", "-1"], ["1", "0"], ["0", "-1"]],
    }
    d.update(overrides)
    return json.dumps(d, indent=2)


def test_example_fixtures_parse():
    pf = load_problem(FIXTURES / "ex41.krf")
    assert pf.dim == 1 and pf.A == M([[0]]) and pf.gamma == M([[1]])
    pf = load_problem(FIXTURES / "ex42.krf")
    assert pf.gamma == M([["1/2", -1], [1, 0], [0, -1]])
    assert pf.form == HOLOMORPHIC
    assert pf.representation().space.kappa == 2


def test_decimals_and_integers_accepted():
    pf = parse_problem(doc(gamma=[["0.5", -1], [1, 0], [0, "-1"]]))
    assert pf.gamma[0, 0] == as_scalar("1/2")


def test_floats_rejected_with_location():
    with pytest.raises(ParseError) as exc:
        parse_problem(doc(gamma=[[0.5, "-1"], ["1", "0"], ["0", "-1"]]))
    assert "gamma[0][0]" in str(exc.value)
    assert exc.value.line is not None


def test_bad_scalar_located():
    text = doc(gamma=[["1/2", "-1"], ["1", "zz"], ["0", "-1"]])
    with pytest.raises(ParseError) as exc:
        parse_problem(text)
    err = exc.value
    line = text.splitlines()[err.line - 1]
    assert line[err.column - 1:].startswith('"zz"')
    assert str(err).startswith(f"line {err.line}, column {err.column}:")


def test_malformed_json_located():
    with pytest.raises(ParseError) as exc:
        parse_problem('{\n  "space": {"J": [["1"]]},\n  "A": [["0"]] oops\n}')
    assert exc.value.line == 3


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"space": {"J": [["1", "0"], ["0", "2"]]}}, "J not a symmetry"),
        ({"space": {"J": [["0", "1"], ["0", "0"]]}}, "J not a symmetry"),
        ({"space": {"dim": 4, "J": [["1"]]}}, "space.dim"),
        ({"A": [["1", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]]}, "self-adjoint"),
        ({"gamma": [["1"], ["0"]]}, "rows"),
        ({"extra": 1}, "unknown keys"),
        ({"form": "mystery"}, "unknown form"),
        ({"gamma": [["1", "0"], ["1"], ["0", "1"]]}, "row 1"),
    ],
)
def test_validation_errors(overrides, message):
    with pytest.raises(ValidationError, match=message):
        parse_problem(doc(**overrides))


def test_missing_key():
    d = dict(EX41)
    del d["gamma"]
    with pytest.raises(ValidationError, match="gamma"):
        parse_problem(json.dumps(d))


def test_missing_file():
    with pytest.raises(InputError):
        load_problem(FIXTURES / "does_not_exist.krf")


def test_graph_form_of_A():
    pf = parse_problem(doc(A={"graph": [[["1", "0", "0"], ["0", "0", "0"]],
                                        [["0", "1", "0"], ["1", "0", "0"]],
                                        [["0", "0", "1"], ["0", "0", "-1"]]]}))
    assert pf.representation().A_matrix == M([[0, 1, 0], [0, 0, 0], [0, 0, -1]])


def test_reference_point_form():
    text = json.dumps({
        "space": {"dim": 1, "J": [["1"]]},
        "A": {"graph": [[["0"], ["1"]]]},
        "gamma": [["1"]],
        "form": {"reference_point": {"w": "i", "Q_w": [["i"]]}},
    })
    pf = parse_problem(text)
    assert isinstance(pf.form, ReferencePoint)
    assert pf.form.w == as_scalar("i")


@pytest.mark.parametrize("name", ["ex41", "ex42", "singular_derivative", "non_simple"])
def test_round_trip_fixtures(name):
    pf = load_problem(FIXTURES / f"{name}.krf")
    text = serialize_problem(pf)
    again = parse_problem(text)
    assert again == pf
    assert serialize_problem(again) == text


def test_round_trip_reference_form_and_samples():
    text = json.dumps({
        "space": {"dim": 1, "J": [["1"]]},
        "A": {"graph": [[["0"], ["1"]]]},
        "gamma": [["1"]],
        "form": {"reference_point": {"w": "2i", "Q_w": [["2i"]]}},
        "samples": ["i", "1-1/2i", "0.25"],
    })
    pf = parse_problem(text)
    assert parse_problem(serialize_problem(pf)) == pf
    assert [str(z) for z in pf.samples] == ["i", "1-1/2i", "1/4"]
