import pytest

import oracles
from helpers import EX42_A, EX42_G, EX42_J, M, ex41_rep, ex42_rep
from pontrel.errors import (
    DegenerateSamplePair,
    NotInResolventSet,
    ValidationError,
    WrongForm,
)
from pontrel.exact import Matrix, Subspace, as_scalar
from pontrel.nevanlinna import (
    DEFAULT_SAMPLES,
    NevRepresentation,
    ReferencePoint,
    SampleSet,
    controllability_matrix,
    default_samples,
    eval_Q,
    gamma_field,
    gamma_field_plus,
    minimality_check,
    negative_squares_lower_bound,
    nevanlinna_kernel,
    q_prime_infinity,
    regularity_witness,
    strictness_check,
)
from pontrel.relation import LinearRelation
from pontrel.space import PontryaginSpace

POINTS = ["i", "1+i", "2", "-3", "1/2-2i", "5i", "7"]


@pytest.mark.parametrize("z", POINTS)
def test_eval_Q_matches_closed_form(z):
    z = as_scalar(z)
    assert eval_Q(ex42_rep(), z) == oracles.ex42_Q(z)
    assert eval_Q(ex41_rep(), z) == oracles.ex41_Q(z)


def test_eval_Q_outside_resolvent_set():
    with pytest.raises(NotInResolventSet):
        eval_Q(ex42_rep(), 0)
    with pytest.raises(NotInResolventSet):
        eval_Q(ex42_rep(), -1)


def test_gamma_field():
    rep = ex42_rep()
    z = as_scalar("2i")
    gz = gamma_field(rep, z)
    assert (EX42_A.shift(z)) @ gz == EX42_G
    # Q(z) - Q(w)* = (z - conj w) G_w^+ G_z
    w = as_scalar("1-i")
    lhs = eval_Q(rep, z) - eval_Q(rep, w).H
    assert lhs == gamma_field_plus(rep, w) @ gz * (z - w.conjugate())


def test_symmetry_of_Q():
    rep = ex42_rep()
    for z in POINTS:
        z = as_scalar(z)
        assert eval_Q(rep, z.conjugate()) == eval_Q(rep, z).H


def test_q_prime_infinity():
    qp = q_prime_infinity(ex42_rep())
    assert qp.matrix == M([[-1, 1], [1, 1]])
    assert qp.invertible
    assert q_prime_infinity(ex41_rep()).matrix == M([[-1]])
    # z Q(z) approaches Q'(oo): the difference is O(1/z)
    rep = ex42_rep()
    big = as_scalar(10**6)
    diff = eval_Q(rep, big) * big - qp.matrix
    assert all(abs(complex(x)) < 1e-5 for row in diff.tolist() for x in row)


def test_minimality_and_strictness():
    rep = ex42_rep()
    assert minimality_check(rep).minimal
    assert strictness_check(rep)
    assert controllability_matrix(EX42_A, EX42_G).rank() == 3
    nonmin = NevRepresentation.holomorphic(
        M([[1, 0], [0, 1]]), M([[1, 0], [0, 2]]), M([[1], [0]])
    )
    r = minimality_check(nonmin)
    assert not r.minimal and r.reached.dim == 1
    not_strict = NevRepresentation.holomorphic(M([[1]]), M([[0]]), M([[1, 0]]))
    assert not strictness_check(not_strict)


def test_sample_set_filters_spectrum():
    s = SampleSet.for_relation(ex42_rep().A, ["0", "1", "-1", "i", "1"], minimum=4)
    assert as_scalar(0) in s.skipped and as_scalar(-1) in s.skipped
    assert len(s) == 4
    assert len(set(s.points)) == 4
    d = default_samples(ex42_rep())
    assert len(d) == len(DEFAULT_SAMPLES)


def test_regularity():
    r = regularity_witness(ex42_rep(), default_samples(ex42_rep()))
    assert r.regular and r.witness == as_scalar("i")
    assert r.verdict == "regular"
    zero_fn = NevRepresentation.holomorphic(M([[1]]), M([[0]]), M([[0]]))
    r = regularity_witness(zero_fn, ["i", "2"])
    assert not r.regular and r.verdict == "undetermined on samples"


def test_nevanlinna_kernel_conjugate_pair_limit():
    rep = ex42_rep()
    w = as_scalar("1+i")
    k = nevanlinna_kernel(rep, w.conjugate(), w)
    assert k == gamma_field_plus(rep, w) @ gamma_field(rep, w.conjugate())
    # the kernel is Hermitian on the diagonal
    z = as_scalar("2i")
    assert nevanlinna_kernel(rep, z, z).is_hermitian()


def test_negative_squares_lower_bound():
    assert negative_squares_lower_bound(ex42_rep(), default_samples(ex42_rep())) == 2
    assert negative_squares_lower_bound(ex41_rep(), default_samples(ex41_rep())) == 0
    with pytest.raises(DegenerateSamplePair):
        negative_squares_lower_bound(ex42_rep(), ["i", "i"])


def test_validation():
    k = PontryaginSpace(EX42_J)
    not_sa = LinearRelation.from_matrix(k, M([[1, 1, 0], [0, 0, 0], [0, 0, 0]]))
    with pytest.raises(ValidationError):
        NevRepresentation(k, not_sa, EX42_G)
    with pytest.raises(ValidationError):
        NevRepresentation(k, LinearRelation.from_matrix(k, EX42_A), M([[1], [0]]))
    # holomorphic form needs an operator
    mv = LinearRelation.multivalued(PontryaginSpace.definite(1), Subspace.full(1))
    with pytest.raises(ValidationError):
        NevRepresentation(mv.space, mv, M([[1]]))


def test_reference_point_form_for_multivalued_relation():
    # -Q^{-1}(z) = z for Q = -1/z is represented by {0} x C at w = i
    space = PontryaginSpace.definite(1)
    a_hat = LinearRelation.multivalued(space, Subspace.full(1))
    w = as_scalar("i")
    rep = NevRepresentation(space, a_hat, M([[1]]), ReferencePoint(w, M([["i"]])))
    for z in ("2", "3i", "-1+i"):
        assert eval_Q(rep, z) == M([[z]])
    with pytest.raises(WrongForm):
        q_prime_infinity(rep)
    assert minimality_check(rep).minimal
    with pytest.raises(ValidationError):
        NevRepresentation(
            PontryaginSpace(EX42_J), LinearRelation.from_matrix(PontryaginSpace(EX42_J), EX42_A),
            EX42_G, ReferencePoint(as_scalar(0), Matrix.zeros(2, 2)),
        )
