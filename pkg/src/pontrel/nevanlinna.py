"""Operator representations of generalized Nevanlinna functions.

Two forms are supported:

* holomorphic at infinity: ``Q(z) = G^+ (A - z)^{-1} G`` with ``A`` a
  J-self-adjoint matrix on ``K`` and ``G: H -> K``;
* reference point ``w``: ``Q(z) = Q(w)* + (z - conj w) G_w^+ (I + (z - w)(A - z)^{-1}) G_w``
  with ``A`` a self-adjoint relation (possibly multivalued).

Statements quantified over all of ``rho(A)`` are checked on an explicit
:class:`SampleSet` instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateSamplePair, NotInResolventSet, ValidationError, WrongForm
from .exact import ComplexRational, Matrix, Subspace, as_scalar, hermitian_inertia, kernel
from .relation import LinearRelation, in_resolvent_set, resolvent_matrix
from .space import ParameterSpace, PontryaginSpace, j_adjoint

HOLOMORPHIC = "holomorphic_at_infinity"

DEFAULT_SAMPLES = ("i", "1+i", "2i", "1", "2", "-2", "3", "1-i", "3i")


@dataclass(frozen=True)
class ReferencePoint:
    w: ComplexRational
    Q_w: Matrix


@dataclass(frozen=True)
class NevRepresentation:
    space: PontryaginSpace
    A: LinearRelation
    gamma: Matrix
    form: str | ReferencePoint = HOLOMORPHIC

    def __post_init__(self):
        n = self.space.dim
        if self.A.space != self.space:
            raise ValidationError("A does not act in the given space")
        if self.gamma.rows != n:
            raise ValidationError(f"gamma has {self.gamma.rows} rows, expected {n}")
        if not self.A.is_self_adjoint():
            raise ValidationError("A is not self-adjoint (A != A^+)")
        if self.form == HOLOMORPHIC:
            if not self.A.is_operator():
                raise ValidationError(
                    "holomorphic-at-infinity form needs A to be an everywhere-defined operator"
                )
        elif isinstance(self.form, ReferencePoint):
            if self.form.Q_w.shape != (self.m, self.m):
                raise ValidationError("Q_w has the wrong size")
            if not in_resolvent_set(self.A, self.form.w):
                raise ValidationError(f"reference point {self.form.w} is not in rho(A)")
        else:
            raise ValidationError(f"unknown representation form {self.form!r}")

    @classmethod
    def holomorphic(cls, J: Matrix, A: Matrix, gamma: Matrix) -> "NevRepresentation":
        space = PontryaginSpace(J)
        return cls(space, LinearRelation.from_matrix(space, A), gamma)

    @property
    def m(self) -> int:
        return self.gamma.cols

    @property
    def parameter(self) -> ParameterSpace:
        return ParameterSpace(self.m)

    @property
    def is_holomorphic(self) -> bool:
        return self.form == HOLOMORPHIC

    @property
    def A_matrix(self) -> Matrix:
        return self.A.to_matrix()

    @property
    def gamma_plus(self) -> Matrix:
        return j_adjoint(self.gamma, codomain=self.space)

    def in_resolvent_set(self, z) -> bool:
        return in_resolvent_set(self.A, z)


def _resolvent(rep: NevRepresentation, z) -> Matrix:
    return resolvent_matrix(rep.A, z)


def eval_Q(rep: NevRepresentation, z) -> Matrix:
    z = as_scalar(z)
    R = _resolvent(rep, z)
    if rep.is_holomorphic:
        return rep.gamma_plus @ R @ rep.gamma
    w, q_w = rep.form.w, rep.form.Q_w
    g = rep.gamma
    inner = Matrix.identity(rep.space.dim) + R * (z - w)
    return q_w.H + rep.gamma_plus @ inner @ g * (z - w.conjugate())


def gamma_field(rep: NevRepresentation, z) -> Matrix:
    """``G_z``: ``(A - z)^{-1} G`` or ``(I + (z - w)(A - z)^{-1}) G_w``."""
    z = as_scalar(z)
    R = _resolvent(rep, z)
    if rep.is_holomorphic:
        return R @ rep.gamma
    w = rep.form.w
    return (Matrix.identity(rep.space.dim) + R * (z - w)) @ rep.gamma


def gamma_field_plus(rep: NevRepresentation, z) -> Matrix:
    return j_adjoint(gamma_field(rep, z), codomain=rep.space)


@dataclass(frozen=True)
class QPrime:
    matrix: Matrix
    invertible: bool


def q_prime_infinity(rep: NevRepresentation) -> QPrime:
    """``Q'(oo) = lim z Q(z) = -G^+ G``."""
    if not rep.is_holomorphic:
        raise WrongForm("Q'(oo) is only available for the holomorphic-at-infinity form")
    q = -(rep.gamma_plus @ rep.gamma)
    return QPrime(q, q.is_invertible())


# ---------------------------------------------------------------------------
# sample sets


@dataclass(frozen=True)
class SampleSet:
    points: tuple[ComplexRational, ...]
    skipped: tuple[ComplexRational, ...] = ()

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    @classmethod
    def for_relation(
        cls, A: LinearRelation, points: Iterable | None = None, minimum: int | None = None
    ) -> "SampleSet":
        """Keep the points of ``rho(A)``; extend with 4, 5, ... up to ``minimum`` points."""
        raw = [as_scalar(p) for p in (DEFAULT_SAMPLES if points is None else points)]
        kept, skipped = [], []
        for p in raw:
            if p in kept:
                continue
            (kept if in_resolvent_set(A, p) else skipped).append(p)
        if minimum is not None:
            k = 4
            while len(kept) < minimum:
                p = as_scalar(k)
                if p not in kept and in_resolvent_set(A, p):
                    kept.append(p)
                k += 1
        return cls(tuple(kept), tuple(skipped))


def default_samples(rep: NevRepresentation, points: Iterable | None = None) -> SampleSet:
    return SampleSet.for_relation(rep.A, points, minimum=rep.space.dim + 1)


def _require_resolvent(rep: NevRepresentation, samples: Iterable) -> list[ComplexRational]:
    pts = [as_scalar(z) for z in samples]
    for z in pts:
        if not rep.in_resolvent_set(z):
            raise NotInResolventSet(f"sample {z} is not in rho(A)")
    return pts


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class MinimalityResult:
    minimal: bool
    reached: Subspace


def minimality_check(rep: NevRepresentation, samples: Iterable | None = None) -> MinimalityResult:
    """Is ``K`` spanned by the ``G_z h``?

    Holomorphic form: the Krylov span of ``G, AG, ..., A^{n-1} G``, which is
    the span of all ``(A - z)^{-1} G h`` by the resolvent expansion.
    Reference form: the span of ``G_z H`` over at least ``n + 1`` samples.
    """
    n = rep.space.dim
    if rep.is_holomorphic:
        A = rep.A_matrix
        blocks = [rep.gamma]
        for _ in range(n - 1):
            blocks.append(A @ blocks[-1])
        reached = Subspace.from_matrix(Matrix.hstack(*blocks))
    else:
        pts = default_samples(rep, samples)
        reached = Subspace.from_matrix(Matrix.hstack(*(gamma_field(rep, z) for z in pts)))
    return MinimalityResult(reached.dim == n, reached)


def controllability_matrix(A: Matrix, gamma: Matrix) -> Matrix:
    blocks = [gamma]
    for _ in range(A.rows - 1):
        blocks.append(A @ blocks[-1])
    return Matrix.hstack(*blocks)


def strictness_check(rep: NevRepresentation) -> bool:
    """``ker G_w = {0}``; for the holomorphic form ``ker G_w = ker G``."""
    return kernel(rep.gamma).dim == 0


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    witness: ComplexRational | None

    @property
    def verdict(self) -> str:
        return "regular" if self.regular else "undetermined on samples"


def regularity_witness(rep: NevRepresentation, samples: Iterable) -> RegularityResult:
    """First sample with ``Q(z)`` invertible.  Sound but not complete."""
    for z in _require_resolvent(rep, samples):
        if eval_Q(rep, z).is_invertible():
            return RegularityResult(True, z)
    return RegularityResult(False, None)


def nevanlinna_kernel(rep: NevRepresentation, z, w) -> Matrix:
    """``N_Q(z, w) = (Q(z) - Q(w)*) / (z - conj w)``.

    At ``z = conj w`` the quotient is replaced by its limit ``G_w^+ G_z``.
    """
    z, w = as_scalar(z), as_scalar(w)
    d = z - w.conjugate()
    if not d:
        return gamma_field_plus(rep, w) @ gamma_field(rep, z)
    return (eval_Q(rep, z) - eval_Q(rep, w).H) * (1 / d)


def negative_squares_lower_bound(rep: NevRepresentation, samples: Sequence) -> int:
    """Negative index of the block Gram matrix ``[N_Q(z_i, z_j)]``."""
    pts = _require_resolvent(rep, samples)
    if len(set(pts)) != len(pts):
        raise DegenerateSamplePair("sample points must be pairwise distinct")
    if not pts:
        return 0
    q = {z: eval_Q(rep, z) for z in pts}
    rows = []
    for zi in pts:
        row = []
        for zj in pts:
            d = zi - zj.conjugate()
            if d:
                row.append((q[zi] - q[zj].H) * (1 / d))
            else:
                row.append(gamma_field_plus(rep, zj) @ gamma_field(rep, zi))
        rows.append(Matrix.hstack(*row))
    gram = Matrix.vstack(*rows)
    return hermitian_inertia(gram)[1]
