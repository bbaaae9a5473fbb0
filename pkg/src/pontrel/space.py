"""Finite-dimensional Pontryagin spaces ``(C^n, [x, y] = y* J x)``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, ValidationError
from .exact import ComplexRational, Matrix, Subspace, _as_column_matrix, hermitian_inertia, kernel


@dataclass(frozen=True)
class PontryaginSpace:
    """``C^n`` with the indefinite product induced by a fundamental symmetry ``J``.

    ``J`` must satisfy ``J = J*`` and ``J^2 = I`` exactly.  The negative index
    ``kappa`` is the number of negative eigenvalues of ``J``.
    """

    J: Matrix
    inertia: tuple[int, int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        J = self.J
        if not J.is_square():
            raise ValidationError("J not a symmetry: J is not square")
        if J != J.H:
            raise ValidationError("J not a symmetry: J != J*")
        if J @ J != Matrix.identity(J.rows):
            raise ValidationError("J not a symmetry: J^2 != I")
        object.__setattr__(self, "inertia", hermitian_inertia(J))

    @classmethod
    def definite(cls, n: int) -> "PontryaginSpace":
        return cls(Matrix.identity(n))

    @property
    def dim(self) -> int:
        return self.J.rows

    @property
    def kappa(self) -> int:
        return self.inertia[1]

    def product(self, x, y) -> ComplexRational:
        return indefinite_product(self, x, y)

    def gram(self, basis: Matrix) -> Matrix:
        """``basis* J basis``."""
        return basis.H @ self.J @ basis


@dataclass(frozen=True)
class ParameterSpace:
    """The Hilbert space ``H = C^m`` with the standard product."""

    dim: int

    @property
    def J(self) -> Matrix:
        return Matrix.identity(self.dim)


def indefinite_product(space: PontryaginSpace, x, y) -> ComplexRational:
    """``[x, y] = y* J x``; linear in ``x``, conjugate-linear in ``y``."""
    x = _as_column_matrix(x, space.dim)
    y = _as_column_matrix(y, space.dim)
    return (y.H @ space.J @ x)[0, 0]


def _symmetry(space) -> Matrix:
    return space.J


def j_adjoint(m: Matrix, domain=None, codomain=None) -> Matrix:
    """Adjoint of ``m: domain -> codomain`` with respect to both indefinite products.

    ``[m x, y]_codomain = [x, m^+ y]_domain``, i.e. ``m^+ = J_dom m* J_cod``
    (using ``J^{-1} = J``).  Either space may be omitted when it is the
    standard Hilbert space of the right size; a single space is used for both
    sides when ``m`` is square and only ``domain`` is given.
    """
    if domain is not None and codomain is None and m.is_square():
        codomain = domain
    j_dom = _symmetry(domain) if domain is not None else Matrix.identity(m.cols)
    j_cod = _symmetry(codomain) if codomain is not None else Matrix.identity(m.rows)
    if j_dom.rows != m.cols or j_cod.rows != m.rows:
        raise DimensionMismatch(f"map of shape {m.shape} does not fit the given spaces")
    return j_dom @ m.H @ j_cod


def ortho_companion(space: PontryaginSpace, s: Subspace) -> Subspace:
    """``{y : [x, y] = 0 for all x in s}``; may intersect ``s`` when ``s`` is degenerate."""
    if s.ambient_dim != space.dim:
        raise DimensionMismatch("subspace is not in this space")
    if s.dim == 0:
        return Subspace.full(space.dim)
    # [x, y] = y* J x = 0 for all basis x  <=>  (J B)* y = 0
    return kernel((space.J @ s.basis).H)


def is_nondegenerate(space: PontryaginSpace, s: Subspace) -> bool:
    if s.dim == 0:
        return True
    return space.gram(s.basis).is_invertible()


def is_orthogonal(space: PontryaginSpace, a: Subspace, b: Subspace) -> bool:
    if a.dim == 0 or b.dim == 0:
        return True
    return (b.basis.H @ space.J @ a.basis).is_zero()
