"""Composite structures: KN/KdN triples, compatibility, hierarchies,
r-matrices, invariant bilinear forms, and the Rota-Baxter <-> r-matrix
conversions.

Dual-space conventions: covectors are coordinate vectors in the dual basis,
the pairing is the standard dot product, the dual of a linear map is its
transpose, and the coadjoint action of x is -ad(x)^T. A bivector is stored
as the antisymmetric matrix of its induced map from covectors to vectors.

A bilinear form is stored as its Gram matrix M on the algebra basis,
M[i][j] = B(e_i, e_j). The induced map from covectors to vectors is then
the inverse matrix, and ad-invariance of the form, ad(x)^T M + M ad(x) = 0,
is equivalent to that map intertwining the coadjoint and adjoint actions.

Every composite check reruns its hypotheses and raises PreconditionFailure
when one fails: its verdict is only defined under those hypotheses, and a
failed hypothesis must never be conflated with a failed condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    PreconditionFailure,
    ShapeError,
    StructureCheckError,
)
from .lie import BracketLike, ad_action
from .linalg import (
    Matrix,
    Vector,
    invert,
    is_invertible,
    mat_mul,
    mat_pow,
    nullspace_vector,
)
from .operators import (
    deform_bracket_by_s,
    is_dual_nijenhuis_pair,
    is_kupershmidt,
    is_nijenhuis,
    is_nijenhuis_pair,
    is_rota_baxter,
    sub_adjacent_bracket,
)
from .report import CheckReport, Witness, report_from_witnesses
from .reps import Representation, adjoint_rep, coadjoint_rep


@dataclass(frozen=True)
class StructureVerdict:
    """Outcome of a composite structure check plus the derived objects
    (certificates) that were compared to reach it."""

    kind: str
    report: CheckReport
    certificates: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_json(self):
        return {
            "kind": self.kind,
            **self.report.to_json(),
            "certificates": {
                name: obj.to_json() for name, obj in self.certificates.items()
            },
        }


@dataclass(frozen=True)
class Bivector:
    """Antisymmetric matrix of the induced map from covectors to vectors."""

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise ShapeError("bivector matrix must be square")
        if not self.matrix.is_antisymmetric():
            raise ShapeError("bivector matrix must be antisymmetric")


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric Gram matrix M[i][j] = B(e_i, e_j) of a form on the algebra."""

    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise ShapeError("bilinear form matrix must be square")
        if not self.matrix.is_symmetric():
            raise ShapeError("bilinear form matrix must be symmetric")

    def sharp(self) -> Matrix:
        """Matrix of the induced map from covectors to vectors (the inverse
        Gram matrix); only defined for nondegenerate forms."""
        return invert(self.matrix)


# ---------------------------------------------------------------------------
# Kupershmidt-(dual-)Nijenhuis triples
# ---------------------------------------------------------------------------


def _kn_conditions(
    g: BracketLike,
    rho: Representation,
    t_op: Matrix,
    s_op: Matrix,
    n_op: Matrix,
    pair_report: CheckReport,
    kind: str,
) -> StructureVerdict:
    witnesses = list(pair_report.witnesses)
    nt = mat_mul(n_op, t_op)
    ts = mat_mul(t_op, s_op)
    twist = nt - ts
    if not twist.is_zero():
        witnesses.append(Witness("twist", (), twist))
    via_nt = sub_adjacent_bracket(g, rho, nt)
    deformed = deform_bracket_by_s(sub_adjacent_bracket(g, rho, t_op), s_op)
    m = rho.module_dim
    for i in range(m):
        for j in range(i + 1, m):
            defect = via_nt.basis_bracket(i, j) - deformed.basis_bracket(i, j)
            if not defect.is_zero():
                witnesses.append(Witness("bracket_match", (i, j), defect))
    report = report_from_witnesses(witnesses, checked=kind)
    return StructureVerdict(
        kind=kind,
        report=report,
        certificates={"via_nt": via_nt, "deformed_by_s": deformed},
    )


def is_kn_structure(
    g: BracketLike, rho: Representation, t_op: Matrix, s_op: Matrix, n_op: Matrix
) -> StructureVerdict:
    """T Kupershmidt (hypothesis), (N,S) Nijenhuis pair, NT = TS, and the
    NT-induced bracket equals the S-deformation of the T-induced one."""
    kup = is_kupershmidt(g, rho, t_op)
    if not kup.ok:
        raise PreconditionFailure("kupershmidt", kup)
    pair = is_nijenhuis_pair(g, rho, n_op, s_op)
    return _kn_conditions(g, rho, t_op, s_op, n_op, pair, "kn")


def is_kdn_structure(
    g: BracketLike, rho: Representation, t_op: Matrix, s_op: Matrix, n_op: Matrix
) -> StructureVerdict:
    """Same two compatibility conditions with (N,S) a dual-Nijenhuis pair."""
    kup = is_kupershmidt(g, rho, t_op)
    if not kup.ok:
        raise PreconditionFailure("kupershmidt", kup)
    pair = is_dual_nijenhuis_pair(g, rho, n_op, s_op)
    return _kn_conditions(g, rho, t_op, s_op, n_op, pair, "kdn")


# ---------------------------------------------------------------------------
# Compatible Kupershmidt operators
# ---------------------------------------------------------------------------

_COMBO_SAMPLES = ((1, 1), (1, -1), (2, 3))


def compatible_via_combos(
    g: BracketLike,
    rho: Representation,
    t1: Matrix,
    t2: Matrix,
    samples=_COMBO_SAMPLES,
) -> bool:
    """Definitional route: k1 T1 + k2 T2 stays Kupershmidt on the samples.

    Given both operators are Kupershmidt, agreement on any sample set with
    k1 k2 != 0 is equivalent to the bilinear compatibility identity.
    """
    return all(
        is_kupershmidt(g, rho, t1.scale(k1) + t2.scale(k2), check_rho=False).ok
        for k1, k2 in samples
    )


def are_compatible_kupershmidt(
    g: BracketLike, rho: Representation, t1: Matrix, t2: Matrix
) -> CheckReport:
    """[T1u,T2v] + [T2u,T1v] = T1(rho(T2u)v - rho(T2v)u) + T2(rho(T1u)v - rho(T1v)u).

    Both operators must individually be Kupershmidt; the verdict is
    cross-checked against scalar combinations staying Kupershmidt.
    """
    for name, t in (("kupershmidt_t1", t1), ("kupershmidt_t2", t2)):
        kup = is_kupershmidt(g, rho, t)
        if not kup.ok:
            raise PreconditionFailure(name, kup)
    m = rho.module_dim
    witnesses = []
    for i in range(m):
        for j in range(i + 1, m):
            u, v = Vector.basis(m, i), Vector.basis(m, j)
            t1u, t1v, t2u, t2v = t1 @ u, t1 @ v, t2 @ u, t2 @ v
            lhs = g(t1u, t2v) + g(t2u, t1v)
            rhs = (
                t1 @ (rho.act(t2u) @ v - (rho.act(t2v) @ u))
            ) + (t2 @ (rho.act(t1u) @ v - (rho.act(t1v) @ u)))
            defect = lhs - rhs
            if not defect.is_zero():
                witnesses.append(Witness("compatibility", (i, j), defect))
    report = report_from_witnesses(witnesses, checked="compatible_kupershmidt")
    if report.ok != compatible_via_combos(g, rho, t1, t2):
        raise StructureCheckError(
            "compatibility identity disagrees with the scalar-combination test"
        )
    return report


def nijenhuis_from_kupershmidt_pair(
    g: BracketLike, rho: Representation, t1: Matrix, t2: Matrix
) -> Matrix:
    """N = T1 T2^{-1} for compatible Kupershmidt operators, T2 invertible."""
    if not (t2.is_square() and is_invertible(t2)):
        raise PreconditionFailure("t2_invertible")
    compat = are_compatible_kupershmidt(g, rho, t1, t2)
    if not compat.ok:
        raise PreconditionFailure("compatible", compat)
    n_op = mat_mul(t1, invert(t2))
    verdict = is_nijenhuis(g, n_op)
    if not verdict.ok:
        raise StructureCheckError("derived operator failed the Nijenhuis check")
    return n_op


def check_nt_kupershmidt_condition(
    g: BracketLike, rho: Representation, t_op: Matrix, n_op: Matrix
) -> CheckReport:
    """N([NTu,Tv] + [Tu,NTv]) = N(T(rho(NTu)v - rho(NTv)u) + NT(rho(Tu)v - rho(Tv)u)).

    Holds iff NT is again Kupershmidt (for T Kupershmidt, N Nijenhuis).
    """
    kup = is_kupershmidt(g, rho, t_op)
    if not kup.ok:
        raise PreconditionFailure("kupershmidt", kup)
    nij = is_nijenhuis(g, n_op)
    if not nij.ok:
        raise PreconditionFailure("nijenhuis", nij)
    nt = mat_mul(n_op, t_op)
    m = rho.module_dim
    witnesses = []
    for i in range(m):
        for j in range(i + 1, m):
            u, v = Vector.basis(m, i), Vector.basis(m, j)
            tu, tv, ntu, ntv = t_op @ u, t_op @ v, nt @ u, nt @ v
            lhs = n_op @ (g(ntu, tv) + g(tu, ntv))
            inner = (
                t_op @ (rho.act(ntu) @ v - (rho.act(ntv) @ u))
            ) + (nt @ (rho.act(tu) @ v - (rho.act(tv) @ u)))
            defect = lhs - (n_op @ inner)
            if not defect.is_zero():
                witnesses.append(Witness("nt_condition", (i, j), defect))
    return report_from_witnesses(witnesses, checked="nt_kupershmidt_condition")


# ---------------------------------------------------------------------------
# Hierarchies
# ---------------------------------------------------------------------------


def hierarchy(
    g: BracketLike,
    rho: Representation,
    t_op: Matrix,
    s_op: Matrix,
    n_op: Matrix,
    k_max: int,
) -> list[Matrix]:
    """The operator family T_k = N^k T (= T S^k), k = 0..k_max.

    Requires the triple to be a KN or KdN structure. Every derived claim is
    verified before returning: each power identity N^k T = T S^k, each T_k
    being Kupershmidt, pairwise compatibility, the sub-adjacent bracket of
    T_k agreeing with the S^k-deformation of the T bracket, and the twisted
    morphism identity T_k [u,v]_{S^(k+i)} = [T_k u, T_k v]_{N^i} for
    k + i <= k_max.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    kn = is_kn_structure(g, rho, t_op, s_op, n_op)
    if not kn.report.ok:
        kdn = is_kdn_structure(g, rho, t_op, s_op, n_op)
        if not kdn.report.ok:
            raise PreconditionFailure("kn_or_kdn", kn.report.merge(kdn.report))

    n_pows = [mat_pow(n_op, k) for k in range(k_max + 1)]
    s_pows = [mat_pow(s_op, k) for k in range(k_max + 1)]
    ops = [mat_mul(n_pows[k], t_op) for k in range(k_max + 1)]
    for k, op in enumerate(ops):
        if op != mat_mul(t_op, s_pows[k]):
            raise StructureCheckError(f"N^{k} T != T S^{k}")
        if not is_kupershmidt(g, rho, op, check_rho=False).ok:
            raise StructureCheckError(f"T_{k} is not a Kupershmidt operator")
    for a in range(k_max + 1):
        for b in range(a + 1, k_max + 1):
            if not are_compatible_kupershmidt(g, rho, ops[a], ops[b]).ok:
                raise StructureCheckError(f"T_{a} and T_{b} are not compatible")

    m = rho.module_dim
    base_bracket = sub_adjacent_bracket(g, rho, t_op)
    for k in range(k_max + 1):
        own = sub_adjacent_bracket(g, rho, ops[k])
        if own != deform_bracket_by_s(base_bracket, s_pows[k]):
            raise StructureCheckError(
                f"bracket of T_{k} differs from the S^{k}-deformed bracket"
            )
    for k in range(k_max + 1):
        for i in range(k_max + 1 - k):
            twisted = deform_bracket_by_s(base_bracket, s_pows[k + i])
            for a in range(m):
                for b in range(a + 1, m):
                    u, v = Vector.basis(m, a), Vector.basis(m, b)
                    lhs = ops[k] @ twisted.basis_bracket(a, b)
                    tku, tkv = ops[k] @ u, ops[k] @ v
                    rhs = (
                        g(n_pows[i] @ tku, tkv)
                        + g(tku, n_pows[i] @ tkv)
                        - (n_pows[i] @ g(tku, tkv))
                    )
                    if lhs != rhs:
                        raise StructureCheckError(
                            f"morphism identity fails at k={k}, i={i}, pair ({a},{b})"
                        )
    return ops


def kdn_from_compatible(
    g: BracketLike, rho: Representation, t_op: Matrix, t1_op: Matrix
) -> tuple[StructureVerdict, StructureVerdict]:
    """From compatible Kupershmidt T (invertible) and T1, the triples
    (T, T^{-1}T1, T1 T^{-1}) and (T1, T^{-1}T1, T1 T^{-1}) are both KdN."""
    if not (t_op.is_square() and is_invertible(t_op)):
        raise PreconditionFailure("t_invertible")
    compat = are_compatible_kupershmidt(g, rho, t_op, t1_op)
    if not compat.ok:
        raise PreconditionFailure("compatible", compat)
    t_inv = invert(t_op)
    s_op = mat_mul(t_inv, t1_op)
    n_op = mat_mul(t1_op, t_inv)
    first = is_kdn_structure(g, rho, t_op, s_op, n_op)
    second = is_kdn_structure(g, rho, t1_op, s_op, n_op)
    return first, second


# ---------------------------------------------------------------------------
# r-matrices and bilinear forms
# ---------------------------------------------------------------------------


def _coadjoint_action(g: BracketLike, x: Vector) -> Matrix:
    return -ad_action(g, x).transpose()


def is_r_matrix(g: BracketLike, pi: Bivector) -> CheckReport:
    """Operator form of the classical Yang-Baxter equation on dual basis pairs:
    [pa, pb] = p(coad_{pa} b - coad_{pb} a) where p is the induced map."""
    p = pi.matrix
    if p.nrows != g.dim:
        raise ShapeError(f"bivector of size {p.nrows} on algebra of dim {g.dim}")
    n = g.dim
    witnesses = []
    for i in range(n):
        for j in range(i + 1, n):
            alpha, beta = Vector.basis(n, i), Vector.basis(n, j)
            pa, pb = p @ alpha, p @ beta
            lhs = g(pa, pb)
            rhs = p @ (
                _coadjoint_action(g, pa) @ beta - (_coadjoint_action(g, pb) @ alpha)
            )
            defect = lhs - rhs
            if not defect.is_zero():
                witnesses.append(Witness("yang_baxter", (i, j), defect))
    return report_from_witnesses(witnesses, checked="r_matrix")


def is_r_matrix_nijenhuis(
    g: BracketLike, pi: Bivector, n_op: Matrix
) -> StructureVerdict:
    """r-matrix pi and Nijenhuis N with N p = p N^T and the N p-induced
    bracket on covectors equal to the N^T-deformed p-induced bracket."""
    rm = is_r_matrix(g, pi)
    if not rm.ok:
        raise PreconditionFailure("r_matrix", rm)
    nij = is_nijenhuis(g, n_op)
    if not nij.ok:
        raise PreconditionFailure("nijenhuis", nij)
    p = pi.matrix
    coad = coadjoint_rep(g)
    witnesses = []
    twist = mat_mul(n_op, p) - mat_mul(p, n_op.transpose())
    if not twist.is_zero():
        witnesses.append(Witness("twist", (), twist))
    via_np = sub_adjacent_bracket(g, coad, mat_mul(n_op, p))
    deformed = deform_bracket_by_s(
        sub_adjacent_bracket(g, coad, p), n_op.transpose()
    )
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            defect = via_np.basis_bracket(i, j) - deformed.basis_bracket(i, j)
            if not defect.is_zero():
                witnesses.append(Witness("bracket_match", (i, j), defect))
    report = report_from_witnesses(witnesses, checked="rmn")
    return StructureVerdict(
        "rmn", report, {"via_np": via_np, "deformed_by_nstar": deformed}
    )


def is_rbn_structure(
    g: BracketLike, r_op: Matrix, n_op: Matrix
) -> StructureVerdict:
    """Rota-Baxter R and Nijenhuis N with NR = RN and the NR-induced
    bracket equal to the N-deformed R-induced bracket."""
    rb = is_rota_baxter(g, r_op)
    if not rb.ok:
        raise PreconditionFailure("rota_baxter", rb)
    nij = is_nijenhuis(g, n_op)
    if not nij.ok:
        raise PreconditionFailure("nijenhuis", nij)
    ad = adjoint_rep(g)
    witnesses = []
    twist = mat_mul(n_op, r_op) - mat_mul(r_op, n_op)
    if not twist.is_zero():
        witnesses.append(Witness("twist", (), twist))
    via_nr = sub_adjacent_bracket(g, ad, mat_mul(n_op, r_op))
    deformed = deform_bracket_by_s(sub_adjacent_bracket(g, ad, r_op), n_op)
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            defect = via_nr.basis_bracket(i, j) - deformed.basis_bracket(i, j)
            if not defect.is_zero():
                witnesses.append(Witness("bracket_match", (i, j), defect))
    report = report_from_witnesses(witnesses, checked="rbn")
    return StructureVerdict(
        "rbn", report, {"via_nr": via_nr, "deformed_by_n": deformed}
    )


def check_bilinear_form(g: BracketLike, form: BilinearForm) -> CheckReport:
    """Nondegeneracy and ad-invariance of a symmetric form.

    Invariance is checked as ad(e_i)^T M + M ad(e_i) = 0; for invertible M
    this is exactly the inverse matrix intertwining coad and ad.
    """
    m = form.matrix
    if m.nrows != g.dim:
        raise ShapeError(f"form of size {m.nrows} on algebra of dim {g.dim}")
    witnesses = []
    kernel = nullspace_vector(m)
    if kernel is not None:
        witnesses.append(Witness("nondegenerate", (), kernel))
    for i in range(g.dim):
        ad_i = ad_action(g, Vector.basis(g.dim, i))
        defect = mat_mul(ad_i.transpose(), m) + mat_mul(m, ad_i)
        if not defect.is_zero():
            witnesses.append(Witness("ad_invariance", (i,), defect))
    return report_from_witnesses(witnesses, checked="bilinear_form")


def is_skew_endomorphism(
    g: BracketLike, r_op: Matrix, form: BilinearForm
) -> CheckReport:
    """R composed with the induced covector-to-vector map is antisymmetric;
    equivalently B(Rx, y) = -B(x, Ry)."""
    valid = check_bilinear_form(g, form)
    if not valid.ok:
        raise PreconditionFailure("bilinear_form", valid)
    composed = mat_mul(r_op, form.sharp())
    defect = composed + composed.transpose()
    witnesses = [] if defect.is_zero() else [Witness("skew", (), defect)]
    return report_from_witnesses(witnesses, checked="skew_endomorphism")


def _require_form_compatible(form: BilinearForm, n_op: Matrix) -> None:
    sharp = form.sharp()
    if mat_mul(sharp, n_op.transpose()) != mat_mul(n_op, sharp):
        raise PreconditionFailure("form_nijenhuis_compatible")


def rbn_to_rmn(
    g: BracketLike, r_op: Matrix, n_op: Matrix, form: BilinearForm
) -> tuple[Bivector, Matrix]:
    """Transport a Rota-Baxter-Nijenhuis pair along an invariant form.

    Hypotheses, each rerun and reported distinctly: the form is valid, R is
    a skew endomorphism of it, the form is compatible with N, and (R, N) is
    an RBN structure. The output bivector is R composed with the induced
    map, and the resulting pair is reverified as an r-matrix-Nijenhuis
    structure before returning.
    """
    skew = is_skew_endomorphism(g, r_op, form)  # validates the form first
    if not skew.ok:
        raise PreconditionFailure("skew_endomorphism", skew)
    _require_form_compatible(form, n_op)
    rbn = is_rbn_structure(g, r_op, n_op)
    if not rbn.report.ok:
        raise PreconditionFailure("rbn", rbn.report)
    pi = Bivector(mat_mul(r_op, form.sharp()))
    rmn = is_r_matrix_nijenhuis(g, pi, n_op)
    if not rmn.report.ok:
        raise StructureCheckError("converted pair failed the r-matrix-Nijenhuis check")
    return pi, n_op


def rmn_to_rbn(
    g: BracketLike, pi: Bivector, n_op: Matrix, form: BilinearForm
) -> tuple[Matrix, Matrix]:
    """Inverse transport: R is the bivector's induced map composed with the
    Gram matrix. Exact inverse of rbn_to_rmn, so round trips are identities."""
    valid = check_bilinear_form(g, form)
    if not valid.ok:
        raise PreconditionFailure("bilinear_form", valid)
    _require_form_compatible(form, n_op)
    rmn = is_r_matrix_nijenhuis(g, pi, n_op)
    if not rmn.report.ok:
        raise PreconditionFailure("rmn", rmn.report)
    r_op = mat_mul(pi.matrix, form.matrix)
    skew = is_skew_endomorphism(g, r_op, form)
    if not skew.ok:
        raise StructureCheckError("converted operator is not a skew endomorphism")
    rbn = is_rbn_structure(g, r_op, n_op)
    if not rbn.report.ok:
        raise StructureCheckError("converted pair failed the Rota-Baxter-Nijenhuis check")
    return r_op, n_op
