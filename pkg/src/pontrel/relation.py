"""Linear relations in a Pontryagin space.

A relation ``T`` in ``K = C^n`` is a subspace of ``K x K``, stored as a
canonical :class:`Subspace` of ``C^(2n)`` whose first ``n`` coordinates are
the input ``f`` and last ``n`` the output ``f'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, DomainNotDecomposable, NoSolution, NotInResolventSet
from .exact import ComplexRational, Matrix, Subspace, _as_column_matrix, as_scalar, kernel, solve
from .space import PontryaginSpace


@dataclass(frozen=True)
class RelationParts:
    domain: Subspace
    range: Subspace
    ker: Subspace
    mul_part: Subspace


@dataclass(frozen=True)
class LinearRelation:
    space: PontryaginSpace
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != 2 * self.space.dim:
            raise DimensionMismatch(
                f"graph lives in C^{self.graph.ambient_dim}, expected C^{2 * self.space.dim}"
            )

    # construction -----------------------------------------------------

    @classmethod
    def from_basis(cls, space: PontryaginSpace, basis: Matrix) -> "LinearRelation":
        return cls(space, Subspace.from_matrix(basis))

    @classmethod
    def from_pairs(cls, space: PontryaginSpace, pairs: Sequence) -> "LinearRelation":
        """Span of ``{f, f'}`` pairs."""
        vecs = [list(f) + list(g) for f, g in pairs]
        return cls(space, Subspace.span(2 * space.dim, vecs))

    @classmethod
    def from_matrix(cls, space: PontryaginSpace, m: Matrix, domain: Subspace | None = None):
        """Graph ``{(f, m f) : f in domain}`` (domain defaults to all of ``K``)."""
        n = space.dim
        if m.shape != (n, n):
            raise DimensionMismatch(f"operator of shape {m.shape} in a space of dimension {n}")
        d = Matrix.identity(n) if domain is None else domain.basis
        if d.cols == 0:
            return cls.zero(space)
        return cls.from_basis(space, Matrix.vstack(d, m @ d))

    @classmethod
    def zero(cls, space: PontryaginSpace) -> "LinearRelation":
        return cls(space, Subspace.zero(2 * space.dim))

    @classmethod
    def full(cls, space: PontryaginSpace) -> "LinearRelation":
        return cls(space, Subspace.full(2 * space.dim))

    @classmethod
    def multivalued(cls, space: PontryaginSpace, values: Subspace) -> "LinearRelation":
        """``{0} x values``."""
        n = space.dim
        if values.dim == 0:
            return cls.zero(space)
        return cls.from_basis(space, Matrix.vstack(Matrix.zeros(n, values.dim), values.basis))

    @classmethod
    def product(cls, space: PontryaginSpace, left: Subspace, right: Subspace) -> "LinearRelation":
        """``left x right``."""
        n = space.dim
        cols = [list(v) + [0] * n for v in left.vectors()]
        cols += [[0] * n + list(v) for v in right.vectors()]
        return cls(space, Subspace.span(2 * n, cols))

    # basic views ------------------------------------------------------

    @property
    def n(self) -> int:
        return self.space.dim

    @property
    def dim(self) -> int:
        return self.graph.dim

    def _top(self) -> Matrix:
        return self.graph.basis.top(self.n)

    def _bottom(self) -> Matrix:
        return self.graph.basis.bottom(self.n)

    def _with_basis(self, basis: Matrix) -> "LinearRelation":
        return LinearRelation.from_basis(self.space, basis)

    def _check(self, other: "LinearRelation"):
        if other.space != self.space:
            raise DimensionMismatch("relations live in different spaces")

    def __eq__(self, other):
        if not isinstance(other, LinearRelation):
            return NotImplemented
        return self.space == other.space and self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    def __repr__(self):
        pairs = [
            ([str(x) for x in v[: self.n]], [str(x) for x in v[self.n :]])
            for v in self.graph.vectors()
        ]
        return f"LinearRelation(n={self.n}, dim={self.dim}, pairs={pairs})"

    def pairs(self) -> list[tuple[tuple, tuple]]:
        return [(v[: self.n], v[self.n :]) for v in self.graph.vectors()]

    def contains_pair(self, f, g) -> bool:
        return self.graph.contains(list(f) + list(g))

    def __le__(self, other: "LinearRelation") -> bool:
        self._check(other)
        return other.graph.contains(self.graph)

    def __lt__(self, other: "LinearRelation") -> bool:
        return self <= other and self.dim < other.dim

    # parts ------------------------------------------------------------

    def domain(self) -> Subspace:
        return Subspace.from_matrix(self._top()) if self.dim else Subspace.zero(self.n)

    def range(self) -> Subspace:
        return Subspace.from_matrix(self._bottom()) if self.dim else Subspace.zero(self.n)

    def ker(self) -> Subspace:
        """``{f : {f, 0} in T}``."""
        if not self.dim:
            return Subspace.zero(self.n)
        c = kernel(self._bottom())
        return c.image(self._top())

    def mul_part(self) -> Subspace:
        """``T(0) = {g : {0, g} in T}``."""
        if not self.dim:
            return Subspace.zero(self.n)
        c = kernel(self._top())
        return c.image(self._bottom())

    def parts(self) -> RelationParts:
        return RelationParts(self.domain(), self.range(), self.ker(), self.mul_part())

    def infinite_part(self) -> "LinearRelation":
        """``T_oo = {{0, g} in T}``, i.e. ``{0} x T(0)``."""
        return LinearRelation.multivalued(self.space, self.mul_part())

    def is_single_valued(self) -> bool:
        return self.mul_part().dim == 0

    def is_operator(self) -> bool:
        """Single-valued and defined on all of ``K``."""
        return self.is_single_valued() and self.dim == self.n

    def image_of(self, f) -> Matrix:
        """One representative ``g`` with ``{f, g} in T``."""
        f = _as_column_matrix(f, self.n)
        if not self.dim:
            if f.is_zero():
                return Matrix.zeros(self.n, 1)
            raise NoSolution("vector is not in the domain")
        c = solve(self._top(), f)
        return self._bottom() @ c

    def to_matrix(self) -> Matrix:
        """Matrix of an everywhere-defined single-valued relation."""
        if not self.is_operator():
            raise NoSolution("relation is not an everywhere-defined operator")
        return self._bottom() @ self._top().inverse()

    # algebra ----------------------------------------------------------

    def inverse(self) -> "LinearRelation":
        if not self.dim:
            return self
        return self._with_basis(Matrix.vstack(self._bottom(), self._top()))

    def scale(self, z) -> "LinearRelation":
        """``z T = {{f, z g}}``."""
        if not self.dim:
            return self
        return self._with_basis(Matrix.vstack(self._top(), self._bottom() * as_scalar(z)))

    def shift(self, z) -> "LinearRelation":
        """``T - z = {{f, g - z f}}``."""
        if not self.dim:
            return self
        z = as_scalar(z)
        return self._with_basis(Matrix.vstack(self._top(), self._bottom() - self._top() * z))

    def operator_sum(self, other: "LinearRelation") -> "LinearRelation":
        """``S + T = {{f, g + k} : {f, g} in S, {f, k} in T}``."""
        self._check(other)
        if not other.dim:
            return self.infinite_part()
        if not self.dim:
            return other.infinite_part()
        k = kernel(Matrix.hstack(self._top(), -other._top()))
        if not k.dim:
            return LinearRelation.zero(self.space)
        a = k.basis.top(self.dim)
        b = k.basis.bottom(other.dim)
        return self._with_basis(
            Matrix.vstack(self._top() @ a, self._bottom() @ a + other._bottom() @ b)
        )

    def componentwise_sum(self, other: "LinearRelation") -> "LinearRelation":
        """``S +^ T``: span of both graphs."""
        self._check(other)
        return LinearRelation(self.space, self.graph + other.graph)

    def intersection(self, other: "LinearRelation") -> "LinearRelation":
        self._check(other)
        return LinearRelation(self.space, self.graph.intersect(other.graph))

    def is_direct_sum_with(self, other: "LinearRelation") -> bool:
        return self.intersection(other).dim == 0

    def adjoint(self) -> "LinearRelation":
        return adjoint(self)

    def is_symmetric(self) -> bool:
        return self <= self.adjoint()

    def is_self_adjoint(self) -> bool:
        return self == self.adjoint()


@dataclass(frozen=True)
class OperatorAsRelation:
    """A matrix restricted to a domain subspace, ``{(f, m f) : f in domain}``."""

    space: PontryaginSpace
    matrix: Matrix
    domain: Subspace

    def relation(self) -> LinearRelation:
        return LinearRelation.from_matrix(self.space, self.matrix, self.domain)

    def apply(self, f) -> Matrix:
        f = _as_column_matrix(f, self.space.dim)
        if not self.domain.contains(f):
            raise NoSolution("vector is not in the domain")
        return self.matrix @ f


def adjoint(t: LinearRelation) -> LinearRelation:
    """``T^+ = {{k, h} : [k, g] = [h, f] for all {f, g} in T}``.

    Computed as the kernel of ``(k, h) -> G* J k - F* J h`` where ``F``, ``G``
    are the top and bottom halves of a graph basis.
    """
    n = t.n
    if not t.dim:
        return LinearRelation.full(t.space)
    J = t.space.J
    constraint = Matrix.hstack(t._bottom().H @ J, -(t._top().H @ J))
    return LinearRelation(t.space, kernel(constraint))


# ---------------------------------------------------------------------------
# spectral data


EIGENVALUE = "eigenvalue"
RESOLVENT_POINT = "resolvent_point"
NEITHER = "neither"


def spectrum_point_check(t: LinearRelation, z) -> str:
    shifted = t.shift(z)
    if shifted.ker().dim:
        return EIGENVALUE
    if shifted.range().dim == t.n:
        return RESOLVENT_POINT
    return NEITHER


def in_resolvent_set(t: LinearRelation, z) -> bool:
    return spectrum_point_check(t, z) == RESOLVENT_POINT


def resolvent_matrix(t: LinearRelation, z) -> Matrix:
    """Matrix of ``(T - z)^{-1}``; ``T`` may be multivalued."""
    z = as_scalar(z)
    inv = t.shift(z).inverse()
    if not inv.is_operator():
        raise NotInResolventSet(f"{z} is not in the resolvent set")
    return inv.to_matrix()


def defect_subspace(t: LinearRelation, z) -> Subspace:
    """``ker(T - z) = {f : {f, z f} in T}``."""
    return t.shift(z).ker()


def defect_relation(t: LinearRelation, z) -> LinearRelation:
    """``R^_z(T) = {{f, z f} in T}``."""
    z = as_scalar(z)
    r = defect_subspace(t, z)
    if not r.dim:
        return LinearRelation.zero(t.space)
    return LinearRelation.from_basis(t.space, Matrix.vstack(r.basis, r.basis * z))


# ---------------------------------------------------------------------------
# relation matrices


@dataclass(frozen=True)
class RelationMatrix:
    """Blocks ``T_i^j`` of a relation relative to ``K = K_1 [+] K_2``.

    ``K_1 = (I - P) K`` and ``K_2 = P K``; ``blocks[(i, j)]`` maps ``K_i``
    into ``K_j``.
    """

    relation: LinearRelation
    projection: Matrix
    blocks: dict

    def __getitem__(self, key) -> LinearRelation:
        return self.blocks[key]

    def reassemble(self) -> LinearRelation:
        """``(T_1^1 + T_1^2) +^ (T_2^1 + T_2^2)``."""
        b = self.blocks
        first = b[1, 1].operator_sum(b[1, 2])
        second = b[2, 1].operator_sum(b[2, 2])
        return first.componentwise_sum(second)


def relation_matrix_blocks(t: LinearRelation, p: Matrix) -> RelationMatrix:
    n = t.n
    if p.shape != (n, n):
        raise DimensionMismatch("projection has the wrong size")
    eye = Matrix.identity(n)
    e = {1: eye - p, 2: p}
    dom = t.domain()
    for i in (1, 2):
        if not dom.image(e[i]).is_subspace_of(dom):
            raise DomainNotDecomposable(f"E_{i} D(T) is not contained in D(T)")
    blocks = {}
    for i in (1, 2):
        k_i = Subspace.from_matrix(e[i])
        # pairs of T whose first component lies in K_i
        restricted = t.graph.intersect(
            LinearRelation.product(t.space, k_i, Subspace.full(n)).graph
        )
        for j in (1, 2):
            if not restricted.dim:
                blocks[i, j] = LinearRelation.zero(t.space)
                continue
            b = restricted.basis
            blocks[i, j] = LinearRelation.from_basis(
                t.space, Matrix.vstack(b.top(n), e[j] @ b.bottom(n))
            )
    return RelationMatrix(t, p, blocks)
