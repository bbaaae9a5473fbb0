"""Problem files (``.krf``): a JSON document describing ``(J, A, G)``.

::

    {
      "space": {"dim": 3, "J": [["0", "1", "0"], ...]},
      "A": [["0", "1", "0"], ...],          # or {"graph": [[f, f'], ...]}
      "gamma": [["1/2", "-1"], ...],
      "form": "holomorphic_at_infinity",     # or {"reference_point": {"w": "i", "Q_w": [[...]]}}
      "samples": ["i", "1+i", ...],          # optional
      "expected": {...}                      # optional, used by ``verify``
    }

Scalars are strings in the grammar ``RATIONAL | RATIONAL SIGN RATIONAL "i" |
RATIONAL "i"`` with ``RATIONAL := ["-"] DIGITS ["/" DIGITS]``; decimals such
as ``"0.5"`` are accepted and normalized, plain JSON integers are accepted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import InputError, ParseError, ValidationError
from .exact import ComplexRational, Matrix, as_scalar
from .nevanlinna import HOLOMORPHIC, NevRepresentation, ReferencePoint
from .relation import LinearRelation
from .space import PontryaginSpace

KEYS = ("space", "A", "gamma", "form", "samples", "expected")


@dataclass
class ProblemFile:
    J: Matrix
    gamma: Matrix
    A: Matrix | None = None
    A_graph: list | None = None
    form: str | ReferencePoint = HOLOMORPHIC
    samples: list[ComplexRational] | None = None
    expected: dict | None = None
    _rep: NevRepresentation | None = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return self.J.rows

    def representation(self) -> NevRepresentation:
        if self._rep is None:
            try:
                space = PontryaginSpace(self.J)
                if self.A is not None:
                    if self.A.shape != (self.dim, self.dim):
                        raise ValidationError(f"A has shape {self.A.shape}, expected {self.dim}x{self.dim}")
                    a = LinearRelation.from_matrix(space, self.A)
                else:
                    a = LinearRelation.from_pairs(space, self.A_graph)
                self._rep = NevRepresentation(space, a, self.gamma, self.form)
            except ValidationError:
                raise
            except InputError as exc:
                raise ValidationError(str(exc)) from exc
        return self._rep


class _Reader:
    def __init__(self, text: str):
        self.text = text

    def locate(self, raw) -> tuple[int | None, int | None]:
        needle = json.dumps(raw)
        pos = self.text.find(needle)
        if pos < 0:
            return None, None
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def scalar(self, raw, path: str) -> ComplexRational:
        if isinstance(raw, bool) or not isinstance(raw, (str, int)):
            line, col = self.locate(raw)
            raise ParseError(f"{path}: expected a scalar string, got {raw!r}", line, col)
        try:
            return as_scalar(raw)
        except ParseError:
            line, col = self.locate(raw)
            raise ParseError(f"{path}: not an exact complex rational: {raw!r}", line, col) from None

    def matrix(self, raw, path: str) -> Matrix:
        if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
            raise ParseError(f"{path}: expected a non-empty array of rows")
        width = len(raw[0])
        for i, r in enumerate(raw):
            if len(r) != width:
                raise ValidationError(f"{path}: row {i} has {len(r)} entries, expected {width}")
        return Matrix(
            [[self.scalar(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(raw)]
        )

    def vector(self, raw, path: str) -> list[ComplexRational]:
        if not isinstance(raw, list):
            raise ParseError(f"{path}: expected an array")
        return [self.scalar(x, f"{path}[{i}]") for i, x in enumerate(raw)]

    def pairs(self, raw, path: str, n: int) -> list:
        if not isinstance(raw, list):
            raise ParseError(f"{path}: expected an array of [f, f'] pairs")
        out = []
        for k, pair in enumerate(raw):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{path}[{k}]: expected a pair [f, f']")
            f = self.vector(pair[0], f"{path}[{k}][0]")
            g = self.vector(pair[1], f"{path}[{k}][1]")
            if len(f) != n or len(g) != n:
                raise ValidationError(f"{path}[{k}]: vectors must have length {n}")
            out.append((f, g))
        return out


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate a problem file; every scalar is read exactly."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1, 1)
    unknown = sorted(set(doc) - set(KEYS))
    if unknown:
        raise ValidationError(f"unknown keys: {', '.join(unknown)}")
    for key in ("space", "A", "gamma"):
        if key not in doc:
            raise ValidationError(f"missing key {key!r}")
    rd = _Reader(text)

    space = doc["space"]
    if not isinstance(space, dict) or "J" not in space:
        raise ValidationError("space must be an object with a 'J' matrix")
    J = rd.matrix(space["J"], "space.J")
    if "dim" in space and space["dim"] != J.rows:
        raise ValidationError(f"space.dim = {space['dim']} but J is {J.rows}x{J.cols}")
    if not J.is_square():
        raise ValidationError("J not a symmetry: J is not square")
    n = J.rows

    A = A_graph = None
    if isinstance(doc["A"], dict):
        if set(doc["A"]) != {"graph"}:
            raise ValidationError("A must be a matrix or {'graph': [[f, f'], ...]}")
        A_graph = rd.pairs(doc["A"]["graph"], "A.graph", n)
    else:
        A = rd.matrix(doc["A"], "A")
    gamma = rd.matrix(doc["gamma"], "gamma")

    form: str | ReferencePoint = HOLOMORPHIC
    raw_form = doc.get("form", HOLOMORPHIC)
    if isinstance(raw_form, dict) and set(raw_form) == {"reference_point"}:
        rp = raw_form["reference_point"]
        if not isinstance(rp, dict) or set(rp) != {"w", "Q_w"}:
            raise ValidationError("reference_point needs exactly 'w' and 'Q_w'")
        form = ReferencePoint(rd.scalar(rp["w"], "form.reference_point.w"),
                              rd.matrix(rp["Q_w"], "form.reference_point.Q_w"))
    elif raw_form != HOLOMORPHIC:
        raise ValidationError(f"unknown form {raw_form!r}")

    samples = None
    if doc.get("samples") is not None:
        samples = rd.vector(doc["samples"], "samples")
    expected = doc.get("expected")
    if expected is not None and not isinstance(expected, dict):
        raise ValidationError("expected must be an object")

    pf = ProblemFile(J, gamma, A, A_graph, form, samples, expected)
    pf.representation()
    return pf


def load_problem(path) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return m.to_strings()


def serialize_problem(pf: ProblemFile) -> str:
    doc: dict[str, Any] = {"space": {"dim": pf.dim, "J": matrix_to_json(pf.J)}}
    if pf.A is not None:
        doc["A"] = matrix_to_json(pf.A)
    else:
        doc["A"] = {"graph": [[[str(x) for x in f], [str(x) for x in g]] for f, g in pf.A_graph]}
    doc["gamma"] = matrix_to_json(pf.gamma)
    if isinstance(pf.form, ReferencePoint):
        doc["form"] = {"reference_point": {"w": str(pf.form.w), "Q_w": matrix_to_json(pf.form.Q_w)}}
    else:
        doc["form"] = pf.form
    if pf.samples is not None:
        doc["samples"] = [str(z) for z in pf.samples]
    if pf.expected is not None:
        doc["expected"] = pf.expected
    return json.dumps(doc, indent=2) + "\n"
