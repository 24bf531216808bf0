"""Single-operator and operator-pair predicates.

All identities here are multilinear, so checking them on basis tuples is
complete; every predicate quantifies over basis indices only and returns a
CheckReport listing each violating tuple with its exact defect.

Conventions for the matrix arguments:
  N : n x n endomorphism of the algebra
  S : m x m endomorphism of the module
  T : n x m linear map from the module into the algebra
"""

from __future__ import annotations

from .errors import ShapeError
from .lie import Bracket, BracketLike, semidirect_product
from .linalg import Matrix, Vector, block_diag, mat_mul
from .report import CheckReport, Witness, report_from_witnesses
from .reps import Representation, check_representation, dual_representation


def _require_endo(g: BracketLike, op: Matrix, name: str) -> None:
    if op.shape != (g.dim, g.dim):
        raise ShapeError(f"{name} has shape {op.shape}, expected ({g.dim},{g.dim})")


def _require_module_map(rho: Representation, t_op: Matrix) -> None:
    n, m = rho.algebra.dim, rho.module_dim
    if t_op.shape != (n, m):
        raise ShapeError(f"T has shape {t_op.shape}, expected ({n},{m})")


# ---------------------------------------------------------------------------
# Nijenhuis / Rota-Baxter / Kupershmidt
# ---------------------------------------------------------------------------


def nijenhuis_defect(g: BracketLike, n_op: Matrix, x: Vector, y: Vector) -> Vector:
    """[Nx,Ny] - N([Nx,y] + [x,Ny] - N[x,y]); zero for all x,y iff N is Nijenhuis."""
    _require_endo(g, n_op, "N")
    nx, ny = n_op @ x, n_op @ y
    return g(nx, ny) - (n_op @ (g(nx, y) + g(x, ny) - (n_op @ g(x, y))))


def is_nijenhuis(g: BracketLike, n_op: Matrix) -> CheckReport:
    _require_endo(g, n_op, "N")
    witnesses = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            d = nijenhuis_defect(g, n_op, Vector.basis(g.dim, i), Vector.basis(g.dim, j))
            if not d.is_zero():
                witnesses.append(Witness("torsion", (i, j), d))
    return report_from_witnesses(witnesses, checked="nijenhuis")


def is_rota_baxter(g: BracketLike, r_op: Matrix) -> CheckReport:
    """[Rx,Ry] = R([Rx,y] + [x,Ry]) on basis pairs (weight zero)."""
    _require_endo(g, r_op, "R")
    witnesses = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            x, y = Vector.basis(g.dim, i), Vector.basis(g.dim, j)
            rx, ry = r_op @ x, r_op @ y
            d = g(rx, ry) - (r_op @ (g(rx, y) + g(x, ry)))
            if not d.is_zero():
                witnesses.append(Witness("rota_baxter", (i, j), d))
    return report_from_witnesses(witnesses, checked="rota_baxter")


def kupershmidt_defect(
    g: BracketLike, rho: Representation, t_op: Matrix, u: Vector, v: Vector
) -> Vector:
    """[Tu,Tv] - T(rho(Tu)v - rho(Tv)u) evaluated in g."""
    _require_module_map(rho, t_op)
    if g.dim != rho.algebra.dim:
        raise ShapeError(f"bracket dim {g.dim} != algebra dim {rho.algebra.dim}")
    tu, tv = t_op @ u, t_op @ v
    return g(tu, tv) - (t_op @ (rho.act(tu) @ v - (rho.act(tv) @ u)))


def is_kupershmidt(
    g: BracketLike,
    rho: Representation,
    t_op: Matrix,
    check_rho: bool = True,
) -> CheckReport:
    """Kupershmidt (O-operator) identity on module basis pairs.

    g may differ from rho.algebra's own product (a deformed bracket, say);
    check_rho then validates rho against g, not against rho.algebra.
    """
    _require_module_map(rho, t_op)
    if check_rho:
        rep = check_representation(rho, bracket=g)
        if not rep.ok:
            return CheckReport(False, rep.witnesses, checked="kupershmidt")
    witnesses = []
    m = rho.module_dim
    for i in range(m):
        for j in range(i + 1, m):
            d = kupershmidt_defect(g, rho, t_op, Vector.basis(m, i), Vector.basis(m, j))
            if not d.is_zero():
                witnesses.append(Witness("kupershmidt", (i, j), d))
    return report_from_witnesses(witnesses, checked="kupershmidt")


# ---------------------------------------------------------------------------
# Pairs (N, S)
# ---------------------------------------------------------------------------


def _pair_shapes(rho: Representation, n_op: Matrix, s_op: Matrix) -> None:
    n, m = rho.algebra.dim, rho.module_dim
    if n_op.shape != (n, n):
        raise ShapeError(f"N has shape {n_op.shape}, expected ({n},{n})")
    if s_op.shape != (m, m):
        raise ShapeError(f"S has shape {s_op.shape}, expected ({m},{m})")


def is_nijenhuis_pair(
    g: BracketLike, rho: Representation, n_op: Matrix, s_op: Matrix
) -> CheckReport:
    """N Nijenhuis and rho(Nx)S = S rho(Nx) + S rho(x) S - S^2 rho(x) per basis x."""
    _pair_shapes(rho, n_op, s_op)
    witnesses = list(is_nijenhuis(g, n_op).witnesses)
    s2 = mat_mul(s_op, s_op)
    for i in range(g.dim):
        rnx = rho.act(n_op.column(i))
        rx = rho.matrices[i]
        defect = (
            mat_mul(rnx, s_op)
            - mat_mul(s_op, rnx)
            - mat_mul(s_op, mat_mul(rx, s_op))
            + mat_mul(s2, rx)
        )
        if not defect.is_zero():
            witnesses.append(Witness("pair", (i,), defect))
    return report_from_witnesses(witnesses, checked="nijenhuis_pair")


def is_dual_nijenhuis_pair(
    g: BracketLike, rho: Representation, n_op: Matrix, s_op: Matrix
) -> CheckReport:
    """N Nijenhuis and rho(Nx)S = S rho(Nx) + rho(x) S^2 - S rho(x) S per basis x."""
    _pair_shapes(rho, n_op, s_op)
    witnesses = list(is_nijenhuis(g, n_op).witnesses)
    s2 = mat_mul(s_op, s_op)
    for i in range(g.dim):
        rnx = rho.act(n_op.column(i))
        rx = rho.matrices[i]
        defect = (
            mat_mul(rnx, s_op)
            - mat_mul(s_op, rnx)
            - mat_mul(rx, s2)
            + mat_mul(s_op, mat_mul(rx, s_op))
        )
        if not defect.is_zero():
            witnesses.append(Witness("dual_pair", (i,), defect))
    return report_from_witnesses(witnesses, checked="dual_nijenhuis_pair")


def is_perfect_pair(
    g: BracketLike, rho: Representation, n_op: Matrix, s_op: Matrix
) -> CheckReport:
    """Nijenhuis pair with S^2 rho(x) + rho(x) S^2 = 2 S rho(x) S per basis x."""
    base = is_nijenhuis_pair(g, rho, n_op, s_op)
    witnesses = list(base.witnesses)
    s2 = mat_mul(s_op, s_op)
    for i in range(g.dim):
        rx = rho.matrices[i]
        defect = (
            mat_mul(s2, rx)
            + mat_mul(rx, s2)
            - mat_mul(s_op, mat_mul(rx, s_op)).scale(2)
        )
        if not defect.is_zero():
            witnesses.append(Witness("perfect", (i,), defect))
    return report_from_witnesses(witnesses, checked="perfect_pair")


def _perfect_identity_holds(rho: Representation, s_op: Matrix) -> bool:
    s2 = mat_mul(s_op, s_op)
    return all(
        (
            mat_mul(s2, rx)
            + mat_mul(rx, s2)
            - mat_mul(s_op, mat_mul(rx, s_op)).scale(2)
        ).is_zero()
        for rx in rho.matrices
    )


def nijenhuis_pair_semidirect_test(
    g, rho: Representation, n_op: Matrix, s_op: Matrix
) -> CheckReport:
    """Pair test via the semidirect product: N (+) S must be Nijenhuis there.

    An independent route to is_nijenhuis_pair. When the pair is perfect,
    N (+) S-transpose is additionally tested on the dual semidirect product.
    """
    _pair_shapes(rho, n_op, s_op)
    big = semidirect_product(g, rho)
    report = is_nijenhuis(big, block_diag(n_op, s_op))
    report = CheckReport(report.ok, report.witnesses, checked="pair_semidirect")
    if report.ok and _perfect_identity_holds(rho, s_op):
        dual_big = semidirect_product(g, dual_representation(rho))
        dual_rep = is_nijenhuis(dual_big, block_diag(n_op, s_op.transpose()))
        report = report.merge(dual_rep, checked="pair_semidirect")
    return report


# ---------------------------------------------------------------------------
# Pre-Lie product and derived brackets on the module
# ---------------------------------------------------------------------------


class PreLieProduct:
    """Bilinear product on the module, stored on all ordered basis pairs."""

    def __init__(self, dim: int, table: list[list[Vector]]):
        if len(table) != dim or any(len(row) != dim for row in table):
            raise ShapeError("pre-Lie table must be dim x dim")
        self.dim = dim
        self.table = tuple(tuple(row) for row in table)

    def basis_product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def __call__(self, u: Vector, v: Vector) -> Vector:
        if u.dim != self.dim or v.dim != self.dim:
            raise ShapeError("vector dims do not match product dim")
        out = Vector.zero(self.dim)
        for i, cu in enumerate(u.coords):
            if not cu:
                continue
            for j, cv in enumerate(v.coords):
                if cv:
                    out = out + self.table[i][j].scale(cu * cv)
        return out

    def commutator_bracket(self) -> Bracket:
        return Bracket.from_function(
            self.dim, lambda i, j: self.table[i][j] - self.table[j][i]
        )


def pre_lie_product(g: BracketLike, rho: Representation, t_op: Matrix) -> PreLieProduct:
    """u * v = rho(Tu) v; genuinely pre-Lie whenever T is Kupershmidt."""
    _require_module_map(rho, t_op)
    m = rho.module_dim
    table = []
    for i in range(m):
        act = rho.act(t_op.column(i))
        table.append([act.column(j) for j in range(m)])
    return PreLieProduct(m, table)


def check_pre_lie(p: PreLieProduct) -> CheckReport:
    """Associator (u*v)*w - u*(v*w) symmetric in u, v on basis triples."""
    witnesses = []
    m = p.dim
    basis = [Vector.basis(m, i) for i in range(m)]

    def assoc(a, b, c):
        return p(p(a, b), c) - p(a, p(b, c))

    for i in range(m):
        for j in range(i + 1, m):
            for k in range(m):
                defect = assoc(basis[i], basis[j], basis[k]) - assoc(
                    basis[j], basis[i], basis[k]
                )
                if not defect.is_zero():
                    witnesses.append(Witness("associator", (i, j, k), defect))
    return report_from_witnesses(witnesses, checked="pre_lie")


def pre_lie_nijenhuis(p: PreLieProduct, s_op: Matrix) -> CheckReport:
    """S(u)*S(v) = S(S(u)*v + u*S(v) - S(u*v)) on all ordered basis pairs.

    The pre-Lie sharpening of the Nijenhuis condition; the product is not
    antisymmetric, so both orders of each pair are checked.
    """
    if s_op.shape != (p.dim, p.dim):
        raise ShapeError(f"S has shape {s_op.shape}, expected ({p.dim},{p.dim})")
    witnesses = []
    basis = [Vector.basis(p.dim, i) for i in range(p.dim)]
    for i in range(p.dim):
        su = s_op @ basis[i]
        for j in range(p.dim):
            sv = s_op @ basis[j]
            lhs = p(su, sv)
            rhs = s_op @ (p(su, basis[j]) + p(basis[i], sv) - (s_op @ p(basis[i], basis[j])))
            defect = lhs - rhs
            if not defect.is_zero():
                witnesses.append(Witness("pre_lie_torsion", (i, j), defect))
    return report_from_witnesses(witnesses, checked="pre_lie_nijenhuis")


def sub_adjacent_bracket(g: BracketLike, rho: Representation, t_op: Matrix) -> Bracket:
    """[u,v]^T = rho(Tu)v - rho(Tv)u on the module.

    The commutator of the pre-Lie product; a Lie bracket whenever T is a
    Kupershmidt operator, in which case T is a morphism onto its image.
    """
    _require_module_map(rho, t_op)
    if g.dim != rho.algebra.dim:
        raise ShapeError(f"bracket dim {g.dim} != algebra dim {rho.algebra.dim}")
    m = rho.module_dim

    def entry(i: int, j: int) -> Vector:
        u, v = Vector.basis(m, i), Vector.basis(m, j)
        return rho.act(t_op.column(i)) @ v - (rho.act(t_op.column(j)) @ u)

    return Bracket.from_function(m, entry)


def deform_bracket_by_s(b: Bracket, s_op: Matrix) -> Bracket:
    """[u,v]_S = [Su,v] + [u,Sv] - S[u,v]; Jacobi not implied in general."""
    if s_op.shape != (b.dim, b.dim):
        raise ShapeError(f"S has shape {s_op.shape}, expected ({b.dim},{b.dim})")

    def entry(i: int, j: int) -> Vector:
        u, v = Vector.basis(b.dim, i), Vector.basis(b.dim, j)
        return b(s_op @ u, v) + b(u, s_op @ v) - (s_op @ b(u, v))

    return Bracket.from_function(b.dim, entry)


def bracket_from_rep(rep: Representation, t_op: Matrix) -> Bracket:
    """{u,v} = rep(Tu)v - rep(Tv)u for any action family (candidates allowed)."""
    return sub_adjacent_bracket(rep.algebra, rep, t_op)
