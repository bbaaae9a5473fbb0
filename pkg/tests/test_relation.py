import pytest

from helpers import EX42_A, EX42_J, M, col
from pontrel.errors import DimensionMismatch, DomainNotDecomposable, NoSolution, NotInResolventSet
from pontrel.exact import Matrix, Subspace
from pontrel.relation import (
    EIGENVALUE,
    NEITHER,
    RESOLVENT_POINT,
    LinearRelation,
    OperatorAsRelation,
    adjoint,
    defect_relation,
    defect_subspace,
    relation_matrix_blocks,
    resolvent_matrix,
    spectrum_point_check,
)
from pontrel.space import PontryaginSpace

K3 = PontryaginSpace(EX42_J)
K2 = PontryaginSpace.definite(2)


def A42():
    return LinearRelation.from_matrix(K3, EX42_A)


def test_operator_graph():
    a = A42()
    assert a.dim == 3
    assert a.is_operator()
    assert a.to_matrix() == EX42_A
    assert a.mul_part().dim == 0
    assert a.ker() == Subspace.span(3, [[1, 0, 0]])
    assert a.range() == Subspace.span(3, [[1, 0, 0], [0, 0, 1]])
    assert a.image_of(col(1, 2, 3)) == col(2, 0, -3)


def test_multivalued_parts():
    t = LinearRelation.from_pairs(K2, [([1, 0], [2, 0]), ([0, 0], [0, 1])])
    assert not t.is_single_valued()
    assert t.mul_part() == Subspace.span(2, [[0, 1]])
    assert t.domain() == Subspace.span(2, [[1, 0]])
    parts = t.parts()
    assert parts.mul_part == t.mul_part()
    assert t.infinite_part() == LinearRelation.multivalued(K2, t.mul_part())
    with pytest.raises(NoSolution):
        t.to_matrix()


def test_inverse_and_scale_and_shift():
    a = A42()
    assert a.inverse().inverse() == a
    assert a.inverse().mul_part() == a.ker()
    assert a.scale(2).to_matrix() == EX42_A * 2
    assert a.shift(1).to_matrix() == EX42_A.shift(1)
    assert a.scale(0) == LinearRelation.from_matrix(K3, Matrix.zeros(3, 3))


def test_sums_and_intersection():
    a = LinearRelation.from_matrix(K2, M([[1, 0], [0, 2]]))
    b = LinearRelation.from_matrix(K2, M([[0, 1], [1, 0]]))
    assert a.operator_sum(b).to_matrix() == M([[1, 1], [1, 2]])
    assert a.componentwise_sum(b) == LinearRelation.full(K2)
    assert a.intersection(b) == LinearRelation.zero(K2)
    assert a.is_direct_sum_with(b)
    z = LinearRelation.zero(K2)
    # {(0, 0)} contributes only the multivalued part of the other summand
    assert a.operator_sum(z) == LinearRelation.zero(K2)
    m = LinearRelation.multivalued(K2, Subspace.span(2, [[1, 1]]))
    assert m.operator_sum(z) == m
    with pytest.raises(DimensionMismatch):
        a.componentwise_sum(LinearRelation.zero(K3))


def test_operator_sum_with_restricted_domain():
    d = Subspace.span(2, [[1, 0]])
    a = LinearRelation.from_matrix(K2, M([[1, 0], [0, 1]]), d)
    b = LinearRelation.from_matrix(K2, M([[0, 0], [0, 3]]))
    s = a.operator_sum(b)
    assert s.domain() == d
    assert s.contains_pair([1, 0], [1, 0])


def test_adjoint_of_example_operator():
    a = A42()
    assert adjoint(a) == a
    assert a.is_self_adjoint()
    assert adjoint(LinearRelation.zero(K3)) == LinearRelation.full(K3)
    assert adjoint(LinearRelation.full(K3)) == LinearRelation.zero(K3)


def test_adjoint_defining_identity():
    t = LinearRelation.from_pairs(K3, [([1, 0, 0], [0, 1, 0]), ([0, 0, 1], [0, 0, 0])])
    tp = adjoint(t)
    assert tp.dim == 6 - t.dim
    J = EX42_J
    for f, g in t.pairs():
        for k, h in tp.pairs():
            # [k, g] = [h, f]
            gk = (col(*g).H @ J @ col(*k))[0, 0]
            fh = (col(*f).H @ J @ col(*h))[0, 0]
            assert gk == fh


def test_symmetric_not_self_adjoint():
    # restriction of a self-adjoint operator to a subspace is symmetric
    s = LinearRelation.from_matrix(K3, EX42_A, Subspace.span(3, [[-1, 2, 2]]))
    assert s.is_symmetric()
    assert not s.is_self_adjoint()
    assert s < adjoint(s)


def test_spectrum_points():
    a = A42()
    assert spectrum_point_check(a, 0) == EIGENVALUE
    assert spectrum_point_check(a, -1) == EIGENVALUE
    assert spectrum_point_check(a, 1) == RESOLVENT_POINT
    assert spectrum_point_check(a, "i") == RESOLVENT_POINT
    # a multivalued relation with too small a range
    t = LinearRelation.from_pairs(K2, [([0, 0], [1, 0])])
    assert spectrum_point_check(t, 5) == NEITHER


def test_resolvent_matrix():
    a = A42()
    assert resolvent_matrix(a, 1) == M([[-1, -1, 0], [0, -1, 0], [0, 0, "-1/2"]])
    with pytest.raises(NotInResolventSet):
        resolvent_matrix(a, 0)


def test_resolvent_of_multivalued_relation():
    # {0} x C has resolvent (T - z)^{-1} = 0
    t = LinearRelation.multivalued(PontryaginSpace.definite(1), Subspace.full(1))
    assert resolvent_matrix(t, 3) == M([[0]])


def test_defect_subspace():
    a = A42()
    assert defect_subspace(a, -1) == Subspace.span(3, [[0, 0, 1]])
    d = defect_relation(a, -1)
    assert d.contains_pair([0, 0, 1], [0, 0, -1])
    assert defect_subspace(a, 1).dim == 0


def test_relation_matrix_blocks_reassemble():
    P = M([["3/4", "1/8", "1/4"], ["1/2", "3/4", "-1/2"], ["1/2", "-1/4", "1/2"]])
    rm = relation_matrix_blocks(A42(), P)
    assert rm.reassemble() == A42()
    eye = Matrix.identity(3)
    k1 = Subspace.from_matrix(eye - P)
    assert rm[1, 1] == LinearRelation.from_matrix(K3, (eye - P) @ EX42_A, k1)


def test_relation_matrix_domain_hypothesis():
    s = LinearRelation.from_matrix(K2, Matrix.identity(2), Subspace.span(2, [[1, 1]]))
    with pytest.raises(DomainNotDecomposable):
        relation_matrix_blocks(s, M([[1, 0], [0, 0]]))


def test_operator_as_relation():
    d = Subspace.span(3, [[-1, 2, 2]])
    op = OperatorAsRelation(K3, EX42_A, d)
    assert op.apply(col(-1, 2, 2)) == col(2, 0, -2)
    with pytest.raises(NoSolution):
        op.apply(col(1, 0, 0))
    assert op.relation().dim == 1
