"""From a representation ``(J, A, G)`` with invertible ``Q'(oo)`` to the
symmetric operator ``S``, its adjoint, and a boundary triple whose Weyl
function is ``Q``.

Each stage computes its object and certifies the identities it is supposed
to satisfy, where possible along two independent routes (for example ``S``
as ``A`` intersected with ``A_hat`` and as the restriction of ``A``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .certificates import CertificateTable
from .errors import (
    DegenerateTrace,
    DerivativeNotInvertible,
    HypothesesNotMet,
    NoSolution,
    NotInResolventSet,
    SingularQ,
)
from .exact import ComplexRational, Matrix, Subspace, as_scalar, kernel, solve
from .nevanlinna import (
    NevRepresentation,
    ReferencePoint,
    SampleSet,
    default_samples,
    eval_Q,
    gamma_field,
    gamma_field_plus,
    q_prime_infinity,
)
from .relation import (
    LinearRelation,
    OperatorAsRelation,
    adjoint,
    defect_relation,
    defect_subspace,
    in_resolvent_set,
    relation_matrix_blocks,
    resolvent_matrix,
)
from .space import ParameterSpace, is_nondegenerate, is_orthogonal, j_adjoint


# ---------------------------------------------------------------------------
# projection onto G(H)


@dataclass(frozen=True)
class ProjectionData:
    P: Matrix
    complement_basis: Subspace
    range_basis: Subspace
    gamma_plus_gamma: Matrix
    gamma_plus_gamma_inv: Matrix
    certificates: CertificateTable = field(compare=False)

    @property
    def I_minus_P(self) -> Matrix:
        return Matrix.identity(self.P.rows) - self.P


def projection_P(rep: NevRepresentation) -> ProjectionData:
    """``P = G (G^+ G)^{-1} G^+``, with its projection properties certified."""
    qp = q_prime_infinity(rep)
    if not qp.invertible:
        raise DerivativeNotInvertible("G^+ G is singular, so Q'(oo) is not invertible")
    space = rep.space
    G, Gp = rep.gamma, rep.gamma_plus
    gpg = Gp @ G
    gpg_inv = gpg.inverse()
    P = G @ gpg_inv @ Gp
    eye = Matrix.identity(space.dim)
    complement = kernel(Gp)
    rng = Subspace.from_matrix(G)

    c = CertificateTable()
    c.check("P_idempotent", P @ P == P)
    c.check("P_J_self_adjoint", j_adjoint(P, space) == P)
    c.check("P_range_is_gamma_H", Subspace.from_matrix(P) == rng)
    c.check("ker_gamma_plus_is_I_minus_P_K", Subspace.from_matrix(eye - P) == complement)
    c.check("PK_nondegenerate", is_nondegenerate(space, rng))
    c.check("I_minus_P_K_nondegenerate", is_nondegenerate(space, complement))
    c.check("decomposition_orthogonal", is_orthogonal(space, complement, rng))
    c.check(
        "decomposition_direct",
        complement.intersect(rng).dim == 0 and (complement + rng).dim == space.dim,
    )
    return ProjectionData(P, complement, rng, gpg, gpg_inv, c)


def r_hat(rep: NevRepresentation, pd: ProjectionData) -> LinearRelation:
    """``{0} x PK``."""
    return LinearRelation.multivalued(rep.space, pd.range_basis)


# ---------------------------------------------------------------------------
# A_hat, S, A_tilde


@dataclass(frozen=True)
class InverseRepresentation:
    rep: NevRepresentation
    A_hat: LinearRelation
    certificates: CertificateTable = field(compare=False)

    def gamma_hat_at(self, w) -> Matrix:
        """``-G_w Q(w)^{-1}``, the field representing ``-Q^{-1}`` at reference ``w``."""
        w = as_scalar(w)
        _require_both_resolvents(self.rep, self.A_hat, w)
        q = eval_Q(self.rep, w)
        if not q.is_invertible():
            raise SingularQ(f"Q({w}) is singular")
        return -(gamma_field(self.rep, w) @ q.inverse())

    def inverse_function_rep(self, w) -> NevRepresentation:
        """``-Q^{-1}`` in reference-point form at ``w``, represented by ``A_hat``."""
        w = as_scalar(w)
        g_hat = self.gamma_hat_at(w)
        q_hat_w = -(eval_Q(self.rep, w).inverse())
        return NevRepresentation(self.rep.space, self.A_hat, g_hat, ReferencePoint(w, q_hat_w))


def _require_both_resolvents(rep, a_hat, z):
    if not rep.in_resolvent_set(z):
        raise NotInResolventSet(f"{z} is not in rho(A)")
    if not in_resolvent_set(a_hat, z):
        raise NotInResolventSet(f"{z} is not in rho(A_hat)")


def inverse_representation(rep: NevRepresentation, pd: ProjectionData) -> InverseRepresentation:
    """``A_hat = {(x, A x + p) : x in (I-P)K, p in PK}``."""
    space = rep.space
    A = rep.A_matrix
    restricted = LinearRelation.from_matrix(space, A, pd.complement_basis)
    a_hat = restricted.componentwise_sum(r_hat(rep, pd))
    c = CertificateTable()
    c.check("A_hat_self_adjoint", a_hat.is_self_adjoint())
    c.check("A_hat_mul_part_is_PK", a_hat.mul_part() == pd.range_basis)
    c.check("A_hat_domain_is_I_minus_P_K", a_hat.domain() == pd.complement_basis)
    return InverseRepresentation(rep, a_hat, c)


@dataclass(frozen=True)
class SymmetricRestriction:
    S: OperatorAsRelation
    A_tilde: OperatorAsRelation
    certificates: CertificateTable = field(compare=False)


def symmetric_restriction(
    rep: NevRepresentation, pd: ProjectionData, a_hat: LinearRelation | None = None
) -> SymmetricRestriction:
    """``S = A`` restricted to ``(I-P)K``, checked against ``A`` intersected with ``A_hat``."""
    space = rep.space
    A = rep.A_matrix
    if a_hat is None:
        a_hat = inverse_representation(rep, pd).A_hat
    S = OperatorAsRelation(space, A, pd.complement_basis)
    A_tilde = OperatorAsRelation(space, pd.I_minus_P @ A @ pd.I_minus_P, pd.complement_basis)
    s_rel = S.relation()
    c = CertificateTable()
    c.check("S_equals_A_cap_A_hat", rep.A.intersection(a_hat) == s_rel)
    c.check("S_is_operator", s_rel.is_single_valued())
    c.check("S_symmetric", s_rel.is_symmetric())
    c.check(
        "A_tilde_maps_into_I_minus_P_K",
        A_tilde.relation().range().is_subspace_of(pd.complement_basis),
    )
    c.trivial("S_closed_and_bounded", "finite dimension")
    return SymmetricRestriction(S, A_tilde, c)


# ---------------------------------------------------------------------------
# S^+ and block forms


@dataclass(frozen=True)
class AdjointResult:
    S_plus: LinearRelation
    certificates: CertificateTable = field(compare=False)


def adjoint_of_S(
    rep: NevRepresentation,
    pd: ProjectionData,
    s: OperatorAsRelation,
    a_hat: LinearRelation | None = None,
) -> AdjointResult:
    """``S^+`` three ways: the adjoint of ``S``, ``A +^ A_hat``, ``A (+) ({0} x PK)``."""
    space = rep.space
    if a_hat is None:
        a_hat = inverse_representation(rep, pd).A_hat
    rh = r_hat(rep, pd)
    by_adjoint = adjoint(s.relation())
    by_sum = rep.A.componentwise_sum(a_hat)
    by_direct = rep.A.componentwise_sum(rh)
    c = CertificateTable()
    c.check("S_plus_equals_A_plus_A_hat", by_adjoint == by_sum)
    c.check("S_plus_equals_A_direct_R_hat", by_adjoint == by_direct)
    c.check("A_R_hat_sum_direct", rep.A.is_direct_sum_with(rh))
    c.check("S_S_plus_dimension_count", s.relation().dim + by_adjoint.dim == 2 * space.dim)

    A = rep.A_matrix
    eye = Matrix.identity(space.dim)
    k1, k2 = pd.complement_basis, pd.range_basis
    blocks = relation_matrix_blocks(by_adjoint, pd.P)
    expected = {
        (1, 1): LinearRelation.from_matrix(space, (eye - pd.P) @ A, k1),
        (2, 1): LinearRelation.from_matrix(space, (eye - pd.P) @ A, k2),
        (1, 2): LinearRelation.product(space, k1, k2),
        (2, 2): LinearRelation.product(space, k2, k2),
    }
    c.check(
        "S_plus_block_form",
        all(blocks[key] == rel for key, rel in expected.items()),
    )
    c.check("S_plus_block_reassembly", blocks.reassemble() == by_adjoint)
    return AdjointResult(by_adjoint, c)


def representing_block_checks(
    rep: NevRepresentation, pd: ProjectionData, a_hat: LinearRelation, a_tilde: OperatorAsRelation
) -> CertificateTable:
    """Relation matrices of ``A`` and ``A_hat`` relative to ``(I-P)K [+] PK``.

    The literal off-diagonal block of ``A_hat`` from ``(I-P)K`` to ``PK`` is
    ``(I-P)K x PK``: it is the image of ``A_hat(0) = PK`` and carries no
    single-valued part, which is what the zero entry of the diagonal matrix
    form of ``A_hat`` expresses.
    """
    space = rep.space
    A = rep.A_matrix
    eye = Matrix.identity(space.dim)
    P, Q = pd.P, eye - pd.P
    k1, k2 = pd.complement_basis, pd.range_basis
    rh = r_hat(rep, pd)
    c = CertificateTable()

    a_blocks = relation_matrix_blocks(rep.A, P)
    expected_a = {
        (1, 1): a_tilde.relation(),
        (2, 1): LinearRelation.from_matrix(space, Q @ A, k2),
        (1, 2): LinearRelation.from_matrix(space, P @ A, k1),
        (2, 2): LinearRelation.from_matrix(space, P @ A, k2),
    }
    c.check("A_block_form", all(a_blocks[k] == v for k, v in expected_a.items()))
    c.check("A_block_reassembly", a_blocks.reassemble() == rep.A)
    a_k1 = LinearRelation.from_matrix(space, A, k1)
    a_k2 = LinearRelation.from_matrix(space, A, k2)
    c.check(
        "A_restrictions_direct_sum",
        a_k1.is_direct_sum_with(a_k2) and a_k1.componentwise_sum(a_k2) == rep.A,
    )

    restricted = LinearRelation.from_matrix(space, A, k1)
    c.check(
        "A_hat_equals_A_restricted_direct_R_hat",
        restricted.is_direct_sum_with(rh) and restricted.componentwise_sum(rh) == a_hat,
    )
    at = a_tilde.relation()
    c.check(
        "A_hat_equals_A_tilde_orth_R_hat",
        at.is_direct_sum_with(rh)
        and at.componentwise_sum(rh) == a_hat
        and at.graph.is_subspace_of(LinearRelation.product(space, k1, k1).graph)
        and rh.graph.is_subspace_of(LinearRelation.product(space, k2, k2).graph),
    )
    h_blocks = relation_matrix_blocks(a_hat, P)
    zero = LinearRelation.zero(space)
    c.check("A_hat_block_11_is_A_tilde", h_blocks[1, 1] == at)
    c.check("A_hat_block_22_is_R_hat", h_blocks[2, 2] == rh)
    c.check("A_hat_block_21_zero", h_blocks[2, 1] == zero)
    b12 = h_blocks[1, 2]
    c.check(
        "A_hat_block_12_no_operator_part",
        b12 == LinearRelation.product(space, b12.domain(), b12.mul_part())
        and b12.mul_part() == Subspace.from_matrix(P @ a_hat.mul_part().basis),
    )
    c.check("A_hat_block_reassembly", h_blocks.reassemble() == a_hat)
    return c


# ---------------------------------------------------------------------------
# resolvent identities


def krein_resolvent_check(
    rep: NevRepresentation,
    pd: ProjectionData,
    samples: Iterable,
    a_hat: LinearRelation | None = None,
    triple: "BoundaryTriple | None" = None,
) -> CertificateTable:
    """``(A_hat - z)^{-1} = (A - z)^{-1} - G_z Q(z)^{-1} G_{conj z}^+`` at every sample.

    Also checks the same identity written with ``G_hat_z = -G_z Q(z)^{-1}``,
    that the boundary triple maps ``A_hat`` onto ``H x {0}`` (parameter
    ``theta = 0``), and that ``A_hat`` with ``G_hat_w`` reproduces ``-Q^{-1}``.
    """
    inv = inverse_representation(rep, pd) if a_hat is None else InverseRepresentation(
        rep, a_hat, CertificateTable()
    )
    a_hat = inv.A_hat
    pts = [as_scalar(z) for z in samples]
    c = CertificateTable()
    for z in pts:
        _require_both_resolvents(rep, a_hat, z)
        q = eval_Q(rep, z)
        if not q.is_invertible():
            raise SingularQ(f"Q({z}) is singular")
    for z in pts:
        q_inv = eval_Q(rep, z).inverse()
        lhs = resolvent_matrix(a_hat, z)
        ra = resolvent_matrix(rep.A, z)
        g_z = gamma_field(rep, z)
        g_zbar_plus = gamma_field_plus(rep, z.conjugate())
        c.check(f"krein_resolvent[z={z}]", lhs == ra - g_z @ q_inv @ g_zbar_plus)
        c.check(f"krein_resolvent_gamma_hat[z={z}]", lhs == ra + inv.gamma_hat_at(z) @ g_zbar_plus)
    if pts:
        w = pts[0]
        q_hat_rep = inv.inverse_function_rep(w)
        c.check(
            f"inverse_function_represented_by_A_hat[w={w}]",
            all(eval_Q(q_hat_rep, z) == -(eval_Q(rep, z).inverse()) for z in pts),
        )
    if triple is None and rep.is_holomorphic:
        s_plus = rep.A.componentwise_sum(a_hat)
        triple = canonical_boundary_triple(rep, pd, s_plus)
    if triple is not None:
        theta = triple.boundary_image(a_hat)
        m = rep.m
        h_times_zero = Subspace.span(
            2 * m, [[1 if k == j else 0 for k in range(2 * m)] for j in range(m)]
        )
        c.check("krein_parameter_theta_zero", theta == h_times_zero)
    return c


@dataclass(frozen=True)
class InclusionResult:
    defect: LinearRelation
    inclusion: bool
    direct: bool
    equality: bool
    a_equals_b: bool
    certificates: CertificateTable = field(compare=False)

    @property
    def strict(self) -> bool:
        return self.inclusion and not self.equality


def resolvent_defect_inclusion_check(a: LinearRelation, b: LinearRelation, z) -> InclusionResult:
    """``a`` is contained in ``b (+) R^_z(a +^ b)``, with equality exactly when ``a == b``."""
    z = as_scalar(z)
    if not in_resolvent_set(b, z):
        raise NotInResolventSet(f"{z} is not in rho(B)")
    d = defect_relation(a.componentwise_sum(b), z)
    total = b.componentwise_sum(d)
    inclusion = a <= total
    direct = b.is_direct_sum_with(d)
    equality = a == total
    a_eq_b = a == b
    c = CertificateTable()
    c.check(f"inclusion[z={z}]", inclusion)
    c.check(f"inclusion_sum_direct[z={z}]", direct)
    c.check(f"inclusion_equality_iff_equal[z={z}]", equality == a_eq_b)
    c.trivial("B_closed", "finite dimension")
    return InclusionResult(d, inclusion, direct, equality, a_eq_b, c)


# ---------------------------------------------------------------------------
# defect subspaces and simplicity


@dataclass(frozen=True)
class DefectResult:
    defects: dict
    reached: Subspace
    simple: bool
    certificates: CertificateTable = field(compare=False)


def defect_and_simplicity(
    rep: NevRepresentation,
    pd: ProjectionData,
    s_plus: LinearRelation,
    samples: Iterable,
    a_tilde: OperatorAsRelation | None = None,
) -> DefectResult:
    """Defect subspaces ``ker(S^+ - z)`` and whether they span ``K``.

    Where ``A_tilde - z`` is invertible on ``(I-P)K`` each defect subspace is
    compared with ``{x_P - (A_tilde - z)^{-1} (I-P) A x_P : x_P in PK}``.
    """
    space = rep.space
    n = space.dim
    A = rep.A_matrix
    q_mat = Matrix.identity(n) - pd.P
    if a_tilde is None:
        a_tilde = symmetric_restriction(rep, pd).A_tilde
    at = a_tilde.relation()
    c = CertificateTable()
    defects = {}
    reached = Subspace.zero(n)
    pts = [as_scalar(z) for z in samples]
    for z in pts:
        if not rep.in_resolvent_set(z):
            raise NotInResolventSet(f"{z} is not in rho(A)")
        r = defect_subspace(s_plus, z)
        defects[z] = r
        reached = reached + r
        c.check(f"defect_dimension[z={z}]", r.dim == rep.m)
        shifted_inv = at.shift(z).inverse()
        if at.shift(z).ker().dim:
            c.not_applicable(f"defect_parametrization[z={z}]", "z is an eigenvalue of A_tilde")
            continue
        vecs = []
        for xp in pd.range_basis.vectors():
            xp_m = Matrix.from_columns([xp])
            y = shifted_inv.image_of(q_mat @ A @ xp_m)
            vecs.append(list((xp_m - y).col(0)))
        c.check(f"defect_parametrization[z={z}]", Subspace.span(n, vecs) == r)
    simple = reached.dim == n
    c.check("simplicity_defect_span_is_K", simple, f"{len(pts)} samples, reached dim {reached.dim}")
    return DefectResult(defects, reached, simple, c)


# ---------------------------------------------------------------------------
# boundary triples


@dataclass(frozen=True)
class BoundaryTriple:
    """``(H, G0, G1)`` on ``S^+``; ``gamma0``/``gamma1`` act on canonical graph-basis coordinates."""

    parameter: ParameterSpace
    S_plus: LinearRelation
    gamma0: Matrix
    gamma1: Matrix
    certificates: CertificateTable = field(compare=False)

    def _coords(self, f, g) -> Matrix:
        return self.S_plus.graph.coordinates(list(f) + list(g))

    def apply0(self, f, g) -> Matrix:
        return self.gamma0 @ self._coords(f, g)

    def apply1(self, f, g) -> Matrix:
        return self.gamma1 @ self._coords(f, g)

    def kernel0(self) -> LinearRelation:
        return self._kernel_of(self.gamma0)

    def kernel1(self) -> LinearRelation:
        return self._kernel_of(self.gamma1)

    def _kernel_of(self, g: Matrix) -> LinearRelation:
        k = kernel(g)
        space = self.S_plus.space
        if not k.dim:
            return LinearRelation.zero(space)
        return LinearRelation.from_basis(space, self.S_plus.graph.basis @ k.basis)

    def boundary_image(self, t: LinearRelation) -> Subspace:
        """``{(G0 f^, G1 f^) : f^ in t}`` as a subspace of ``H x H``."""
        m = self.parameter.dim
        if not t.dim:
            return Subspace.zero(2 * m)
        coords = solve(self.S_plus.graph.basis, t.graph.basis)
        return Subspace.from_matrix(Matrix.vstack(self.gamma0 @ coords, self.gamma1 @ coords))


def canonical_boundary_triple(
    rep: NevRepresentation, pd: ProjectionData, s_plus: LinearRelation
) -> BoundaryTriple:
    """``G0{f, f'} = h`` and ``G1{f, f'} = -G^+ f`` where ``f' = A f + G h``.

    The decomposition is unique because ``S^+ = A (+) ({0} x G(H))`` and ``G``
    is injective.  Green's identity, ``ker G0 = A``, ``ker G1 = A_hat`` and
    surjectivity are certified rather than assumed.
    """
    if not rep.is_holomorphic:
        raise HypothesesNotMet("the canonical triple needs the holomorphic-at-infinity form")
    if not q_prime_infinity(rep).invertible:
        raise HypothesesNotMet("Q'(oo) is not invertible")
    space = rep.space
    n, m = space.dim, rep.m
    A, G, Gp = rep.A_matrix, rep.gamma, rep.gamma_plus
    basis = s_plus.graph.basis
    F, Fp = basis.top(n), basis.bottom(n)
    try:
        g0 = solve(G, Fp - A @ F)
    except NoSolution as exc:
        raise HypothesesNotMet("S^+ is not A (+) ({0} x G(H))") from exc
    g1 = -(Gp @ F)

    c = CertificateTable()
    J = space.J
    d = basis.cols
    # [f', g] - [f, g'] = g* J f' - g'* J f, collected for all basis pairs (rows g, cols f)
    lhs = F.H @ J @ Fp - Fp.H @ J @ F
    rhs = g0.H @ g1 - g1.H @ g0
    c.check("green_identity", lhs == rhs, f"{d * d} basis pairs")
    a_hat = inverse_representation(rep, pd).A_hat
    bt = BoundaryTriple(ParameterSpace(m), s_plus, g0, g1, c)
    c.check("ker_gamma0_is_A", bt.kernel0() == rep.A)
    c.check("ker_gamma1_is_A_hat", bt.kernel1() == a_hat)
    c.check("boundary_map_surjective", Matrix.vstack(g0, g1).rank() == 2 * m)
    return bt


@dataclass(frozen=True)
class WeylValue:
    M: Matrix
    gamma: Matrix


def weyl_function_of_triple(bt: BoundaryTriple, z) -> WeylValue:
    """``M(z) = G1 (G0 restricted to R^_z)^{-1}`` and the gamma field ``z -> f_z``."""
    z = as_scalar(z)
    if not in_resolvent_set(bt.kernel0(), z):
        raise NotInResolventSet(f"{z} is not in rho(ker G0)")
    d = defect_relation(bt.S_plus, z)
    n = bt.S_plus.n
    m = bt.parameter.dim
    if d.dim != m:
        raise DegenerateTrace(f"defect space at {z} has dimension {d.dim}, expected {m}")
    coords = solve(bt.S_plus.graph.basis, d.graph.basis)
    g0 = bt.gamma0 @ coords
    if not g0.is_invertible():
        raise DegenerateTrace(f"G0 restricted to the defect space at {z} is singular")
    g0_inv = g0.inverse()
    return WeylValue(bt.gamma1 @ coords @ g0_inv, d.graph.basis.top(n) @ g0_inv)


# ---------------------------------------------------------------------------
# regular extensions


def regular_extension_check(
    s: LinearRelation,
    candidates: Mapping[str, LinearRelation] | Sequence[LinearRelation],
    r_hat_rel: LinearRelation,
    a_hat: LinearRelation | None = None,
) -> CertificateTable:
    """Each candidate is a proper extension of ``s`` inside ``s^+``.

    Closedness of ``candidate +^ R_hat`` is automatic in finite dimension.
    """
    if not isinstance(candidates, Mapping):
        candidates = {f"candidate{i}": t for i, t in enumerate(candidates)}
    s_plus = adjoint(s)
    c = CertificateTable()
    for name, t in candidates.items():
        c.check(f"proper_extension[{name}]", s < t and t <= s_plus)
        t.componentwise_sum(r_hat_rel)
        c.trivial(f"sum_with_R_hat_closed[{name}]", "finite dimension")
    if a_hat is not None:
        c.check("A_hat_absorbs_R_hat", a_hat.componentwise_sum(r_hat_rel) == a_hat)
    return c


# ---------------------------------------------------------------------------
# full pipeline


@dataclass
class WeylPipelineResult:
    rep: NevRepresentation
    samples: SampleSet
    projection: ProjectionData
    A_hat: LinearRelation
    S: OperatorAsRelation
    A_tilde: OperatorAsRelation
    S_plus: LinearRelation
    R_hat: LinearRelation
    triple: BoundaryTriple
    defects: DefectResult
    weyl_values: dict
    certificates: CertificateTable

    @property
    def P(self) -> Matrix:
        return self.projection.P


def run_pipeline(rep: NevRepresentation, samples: SampleSet | Iterable | None = None):
    """Every stage in order, with one merged certificate table."""
    if not isinstance(samples, SampleSet):
        samples = default_samples(rep, samples)
    pd = projection_P(rep)
    table = CertificateTable().extend(pd.certificates)
    inv = inverse_representation(rep, pd)
    table.extend(inv.certificates)
    sr = symmetric_restriction(rep, pd, inv.A_hat)
    table.extend(sr.certificates)
    table.extend(representing_block_checks(rep, pd, inv.A_hat, sr.A_tilde))
    adj = adjoint_of_S(rep, pd, sr.S, inv.A_hat)
    table.extend(adj.certificates)
    s_plus = adj.S_plus
    rh = r_hat(rep, pd)

    triple = canonical_boundary_triple(rep, pd, s_plus)
    table.extend(triple.certificates)

    krein_pts = [
        z for z in samples
        if in_resolvent_set(inv.A_hat, z) and eval_Q(rep, z).is_invertible()
    ]
    table.extend(krein_resolvent_check(rep, pd, krein_pts, inv.A_hat, triple))

    defects = defect_and_simplicity(rep, pd, s_plus, samples, sr.A_tilde)
    table.extend(defects.certificates)

    weyl_values = {}
    for z in samples:
        wv = weyl_function_of_triple(triple, z)
        weyl_values[z] = wv
        table.check(f"weyl_function_equals_Q[z={z}]", wv.M == eval_Q(rep, z))
        table.check(
            f"gamma_field_matches[z={z}]", wv.gamma == -gamma_field(rep, z)
        )

    s_rel = sr.S.relation()
    table.extend(
        regular_extension_check(
            s_rel, {"A": rep.A, "A_hat": inv.A_hat, "S_plus": s_plus}, rh, inv.A_hat
        )
    )
    if krein_pts:
        table.extend(resolvent_defect_inclusion_check(rep.A, inv.A_hat, krein_pts[0]).certificates)
    return WeylPipelineResult(
        rep, samples, pd, inv.A_hat, sr.S, sr.A_tilde, s_plus, rh, triple, defects,
        weyl_values, table,
    )
