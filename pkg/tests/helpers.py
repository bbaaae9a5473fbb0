from pathlib import Path

from pontrel.exact import Matrix, as_scalar
from pontrel.nevanlinna import NevRepresentation

FIXTURES = Path(__file__).resolve().parent.parent / "examples"


def M(rows):
    return Matrix([[as_scalar(x) for x in r] for r in rows])


def col(*xs):
    return M([[x] for x in xs])


EX42_J = M([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
EX42_A = M([[0, 1, 0], [0, 0, 0], [0, 0, -1]])
EX42_G = M([["1/2", -1], [1, 0], [0, -1]])


def ex42_rep():
    return NevRepresentation.holomorphic(EX42_J, EX42_A, EX42_G)


def ex41_rep():
    return NevRepresentation.holomorphic(M([[1]]), M([[0]]), M([[1]]))
