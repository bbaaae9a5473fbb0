"""Analysis reports: staged runs over a problem file, JSON and text output.

Every value in a report is an exact string, so ``Report.from_json(r.to_json())``
reproduces ``r`` exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InputError, NotInResolventSet, PontrelError, PreconditionError
from .exact import Matrix, Subspace, as_scalar
from .nevanlinna import (
    default_samples,
    eval_Q,
    gamma_field,
    minimality_check,
    negative_squares_lower_bound,
    q_prime_infinity,
    regularity_witness,
    strictness_check,
)
from .problem import ProblemFile
from .relation import LinearRelation, in_resolvent_set, resolvent_matrix
from .weyl import (
    adjoint_of_S,
    canonical_boundary_triple,
    inverse_representation,
    projection_P,
    run_pipeline,
    symmetric_restriction,
    weyl_function_of_triple,
)

EXIT_OK = 0
EXIT_CERTIFICATE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def mat(m: Matrix) -> list[list[str]]:
    return m.to_strings()


def sub(s: Subspace) -> list[list[str]]:
    return [[str(x) for x in v] for v in s.vectors()]


def rel(r: LinearRelation) -> list[list[list[str]]]:
    return [[[str(x) for x in f], [str(x) for x in g]] for f, g in r.pairs()]


@dataclass
class Report:
    data: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(json.loads(text))

    @property
    def error(self) -> dict | None:
        return self.data.get("error")

    @property
    def certificates(self) -> list[dict]:
        return self.data.get("certificates", [])

    @property
    def exit_code(self) -> int:
        if self.error:
            return EXIT_PRECONDITION
        if any(c["status"] == "fail" for c in self.certificates):
            return EXIT_CERTIFICATE
        return EXIT_OK

    def to_text(self) -> str:
        d = self.data
        lines = [f"dim K = {d['dim']}, dim H = {d['m']}, form = {d['form']}"]
        for key in ("kappa", "minimal", "strict", "simple", "negative_squares_lower_bound"):
            if key in d:
                lines.append(f"{key}: {_fmt(d[key])}")
        if "regular" in d:
            r = d["regular"]
            w = f" (witness z = {r['witness']})" if r["witness"] is not None else ""
            lines.append(f"regular: {r['verdict']}{w}")
        for key in ("q_prime_infinity", "P", "A_tilde"):
            if key in d:
                lines.append(f"{key}:")
                lines.extend("  " + "  ".join(f"{x:>8}" for x in row) for row in d[key])
        for key in ("complement", "range"):
            if key in d:
                lines.append(f"{key}: span{{{', '.join('(' + ', '.join(v) + ')' for v in d[key])}}}")
        for key in ("S", "A_hat", "S_plus"):
            if key in d:
                pairs = ", ".join(
                    "{(" + ", ".join(f) + "), (" + ", ".join(g) + ")}" for f, g in d[key]
                )
                lines.append(f"{key}: span{{{pairs}}}")
        if self.certificates:
            lines.append("certificates:")
            for c in self.certificates:
                lines.append(f"  {c['status']:<20} {c['name']}")
        if self.error:
            e = self.error
            lines.append(f"stopped at stage {e['stage']}: {e['type']}: {e['message']}")
        passed = sum(c["status"] != "fail" for c in self.certificates)
        lines.append(f"{passed}/{len(self.certificates)} certificates ok, exit {self.exit_code}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


@dataclass
class Analysis:
    """A report plus the exact objects behind it."""

    report: Report
    rep: object = None
    samples: object = None
    pipeline: object = None
    q_values: dict = field(default_factory=dict)


def _analyze(pf: ProblemFile) -> Analysis:
    rep = pf.representation()
    d: dict = {"dim": rep.space.dim, "m": rep.m, "form": "holomorphic_at_infinity"}
    if not rep.is_holomorphic:
        d["form"] = f"reference_point(w={rep.form.w})"
    an = Analysis(Report(d), rep)
    stage = "kappa"
    try:
        p, neg, z0 = rep.space.inertia
        d["inertia"] = [p, neg, z0]
        d["kappa"] = neg

        stage = "minimality"
        mr = minimality_check(rep, pf.samples)
        d["minimal"] = mr.minimal
        d["reached_dim"] = mr.reached.dim

        stage = "strictness"
        d["strict"] = strictness_check(rep)

        stage = "samples"
        samples = default_samples(rep, pf.samples)
        an.samples = samples
        d["samples"] = [str(z) for z in samples]
        d["skipped_samples"] = [str(z) for z in samples.skipped]

        stage = "evaluations"
        an.q_values = {z: eval_Q(rep, z) for z in samples}
        d["Q"] = {str(z): mat(q) for z, q in an.q_values.items()}

        stage = "regularity"
        rw = regularity_witness(rep, samples)
        d["regular_witness"] = None if rw.witness is None else str(rw.witness)
        d["regular"] = {
            "regular": rw.regular,
            "verdict": rw.verdict,
            "witness": None if rw.witness is None else str(rw.witness),
        }

        stage = "negative_squares"
        d["negative_squares_lower_bound"] = negative_squares_lower_bound(rep, samples)

        stage = "q_prime_infinity"
        qp = q_prime_infinity(rep)
        d["q_prime_infinity"] = mat(qp.matrix)
        d["q_prime_infinity_invertible"] = qp.invertible

        stage = "projection"
        projection_P(rep)

        stage = "pipeline"
        res = run_pipeline(rep, samples)
        an.pipeline = res
        pd = res.projection
        d["gamma_plus_gamma"] = mat(pd.gamma_plus_gamma)
        d["gamma_plus_gamma_inv"] = mat(pd.gamma_plus_gamma_inv)
        d["P"] = mat(pd.P)
        d["I_minus_P"] = mat(pd.I_minus_P)
        d["complement"] = sub(pd.complement_basis)
        d["range"] = sub(pd.range_basis)
        d["S"] = rel(res.S.relation())
        d["A_tilde"] = mat(res.A_tilde.matrix)
        d["A_hat"] = rel(res.A_hat)
        d["S_plus"] = rel(res.S_plus)
        d["R_hat"] = rel(res.R_hat)
        d["simple"] = res.defects.simple
        d["boundary_triple"] = {
            "graph_basis": rel(res.S_plus),
            "gamma0": mat(res.triple.gamma0),
            "gamma1": mat(res.triple.gamma1),
        }
        d["M"] = {str(z): mat(w.M) for z, w in res.weyl_values.items()}
        d["certificates"] = [
            {"name": c.name, "status": c.status, "detail": c.detail} for c in res.certificates
        ]
    except PreconditionError as exc:
        d["error"] = {"stage": stage, "type": type(exc).__name__, "message": str(exc)}
    return an


def run_analyze(pf: ProblemFile) -> Report:
    """Run every stage in order; a precondition failure stops the run and is recorded."""
    return _analyze(pf).report


def run_eval(pf: ProblemFile, z) -> dict:
    """Point evaluations at ``z``: ``Q(z)``, ``G_z``, resolvents and, when available, ``M(z)``."""
    rep = pf.representation()
    try:
        z = as_scalar(z)
    except PontrelError as exc:
        raise InputError(f"bad evaluation point: {exc}") from None
    if not rep.in_resolvent_set(z):
        raise NotInResolventSet(f"{z} is not in rho(A)")
    out = {
        "z": str(z),
        "Q": mat(eval_Q(rep, z)),
        "gamma_z": mat(gamma_field(rep, z)),
        "resolvent_A": mat(resolvent_matrix(rep.A, z)),
    }
    if rep.is_holomorphic and q_prime_infinity(rep).invertible:
        pd = projection_P(rep)
        a_hat = inverse_representation(rep, pd).A_hat
        if in_resolvent_set(a_hat, z):
            out["resolvent_A_hat"] = mat(resolvent_matrix(a_hat, z))
        sr = symmetric_restriction(rep, pd, a_hat)
        s_plus = adjoint_of_S(rep, pd, sr.S, a_hat).S_plus
        triple = canonical_boundary_triple(rep, pd, s_plus)
        wv = weyl_function_of_triple(triple, z)
        out["M"] = mat(wv.M)
        out["triple_gamma_z"] = mat(wv.gamma)
    return out


# ---------------------------------------------------------------------------
# verification against an expected block

MATRIX_KEYS = (
    "q_prime_infinity", "gamma_plus_gamma", "gamma_plus_gamma_inv", "P", "I_minus_P", "A_tilde",
)
SUBSPACE_KEYS = ("complement", "range")
RELATION_KEYS = ("S", "A_hat", "S_plus", "R_hat")
VALUE_KEYS = ("kappa", "minimal", "strict", "simple", "negative_squares_lower_bound")


@dataclass
class VerifyResult:
    report: Report
    diffs: list[str]

    @property
    def exit_code(self) -> int:
        code = self.report.exit_code
        if code:
            return code
        return EXIT_CERTIFICATE if self.diffs else EXIT_OK


def _show_span(vectors) -> str:
    return "span{" + ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in vectors) + "}"


def _compare_matrix(key, expected, got: Matrix, diffs):
    exp = Matrix([[as_scalar(x) for x in row] for row in expected])
    if exp.shape != got.shape:
        diffs.append(f"{key}: expected shape {exp.shape[0]}x{exp.shape[1]}, got {got.rows}x{got.cols}")
        return
    for i in range(got.rows):
        for j in range(got.cols):
            if exp[i, j] != got[i, j]:
                diffs.append(f"{key}[{i}][{j}]: expected {exp[i, j]}, got {got[i, j]}")


def run_verify(pf: ProblemFile) -> VerifyResult:
    """Compare the ``expected`` block against a fresh analysis.

    Matrices are compared entrywise; subspaces and relations up to choice of
    basis.
    """
    an = _analyze(pf)
    d = an.report.data
    expected = pf.expected or {}
    diffs: list[str] = []
    known = set(MATRIX_KEYS + SUBSPACE_KEYS + RELATION_KEYS + VALUE_KEYS + ("Q",))
    for key in sorted(set(expected) - known):
        diffs.append(f"{key}: unknown expected key")
    res = an.pipeline
    rep = an.rep
    n = rep.space.dim
    try:
        for key in VALUE_KEYS:
            if key not in expected:
                continue
            if key not in d:
                diffs.append(f"{key}: not computed")
            elif expected[key] != d[key]:
                diffs.append(f"{key}: expected {_fmt(expected[key])}, got {_fmt(d[key])}")
        if "Q" in expected:
            for zs in sorted(expected["Q"]):
                z = as_scalar(zs)
                if not rep.in_resolvent_set(z):
                    diffs.append(f"Q({z}): {z} is not in rho(A)")
                    continue
                _compare_matrix(f"Q({z})", expected["Q"][zs], eval_Q(rep, z), diffs)
        needs_pipeline = [k for k in MATRIX_KEYS + SUBSPACE_KEYS + RELATION_KEYS if k in expected]
        if needs_pipeline and res is None:
            if "q_prime_infinity" in expected and "q_prime_infinity" in d:
                _compare_matrix(
                    "q_prime_infinity", expected["q_prime_infinity"],
                    q_prime_infinity(rep).matrix, diffs,
                )
                needs_pipeline.remove("q_prime_infinity")
            for key in needs_pipeline:
                diffs.append(f"{key}: not computed")
        elif res is not None:
            pd = res.projection
            got_m = {
                "q_prime_infinity": -pd.gamma_plus_gamma,
                "gamma_plus_gamma": pd.gamma_plus_gamma,
                "gamma_plus_gamma_inv": pd.gamma_plus_gamma_inv,
                "P": pd.P,
                "I_minus_P": pd.I_minus_P,
                "A_tilde": res.A_tilde.matrix,
            }
            for key in MATRIX_KEYS:
                if key in expected:
                    _compare_matrix(key, expected[key], got_m[key], diffs)
            got_s = {"complement": pd.complement_basis, "range": pd.range_basis}
            for key in SUBSPACE_KEYS:
                if key in expected:
                    exp = Subspace.span(n, [[as_scalar(x) for x in v] for v in expected[key]])
                    if exp != got_s[key]:
                        diffs.append(
                            f"{key}: expected {_show_span(exp.vectors())}, "
                            f"got {_show_span(got_s[key].vectors())}"
                        )
            got_r = {
                "S": res.S.relation(), "A_hat": res.A_hat, "S_plus": res.S_plus, "R_hat": res.R_hat,
            }
            for key in RELATION_KEYS:
                if key in expected:
                    pairs = [
                        ([as_scalar(x) for x in f], [as_scalar(x) for x in g])
                        for f, g in expected[key]
                    ]
                    exp = LinearRelation.from_pairs(rep.space, pairs)
                    if exp != got_r[key]:
                        diffs.append(
                            f"{key}: expected graph {_show_span(exp.graph.vectors())} "
                            f"(dim {exp.dim}), got {_show_span(got_r[key].graph.vectors())} "
                            f"(dim {got_r[key].dim})"
                        )
    except (TypeError, ValueError, AttributeError, IndexError) as exc:
        raise InputError(f"malformed expected block: {exc}") from None
    return VerifyResult(an.report, diffs)
