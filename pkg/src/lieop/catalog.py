"""Built-in exemplar algebras, representations, and verified operators.

Catalog data is compiled in, never read from disk, and every structure an
entry asserts is re-verified when the entry is first loaded; a failing
assertion aborts with the witness rather than serving stale ground truth.

grid_search is the exhaustive oracle: it enumerates every operator whose
entries come from a finite scalar set and filters by the defining
predicate, refusing (rather than truncating) when the candidate count
exceeds the cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import GridCapExceeded, LieopError, StructureCheckError
from .lie import LieAlgebra
from .linalg import Matrix, Scalar, rational
from .operators import (
    is_dual_nijenhuis_pair,
    is_kupershmidt,
    is_nijenhuis,
    is_nijenhuis_pair,
    is_rota_baxter,
)
from .reps import Representation, adjoint_rep, check_representation, coadjoint_rep
from .structures import (
    BilinearForm,
    Bivector,
    are_compatible_kupershmidt,
    check_bilinear_form,
    is_kdn_structure,
    is_kn_structure,
    is_r_matrix,
    is_r_matrix_nijenhuis,
    is_rbn_structure,
)

GRID_CAP = 10_000_000


@dataclass(frozen=True)
class CatalogOperator:
    """An operator bundle together with the structure kind it satisfies,
    relative to one of the entry's named representations."""

    name: str
    kind: str
    rep: str
    matrices: dict[str, Matrix]
    provenance: str


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    representations: dict[str, Representation]
    operators: tuple[CatalogOperator, ...]
    bilinear_form: Optional[BilinearForm] = None
    provenance: str = ""


def _verify_operator(entry: CatalogEntry, op: CatalogOperator) -> None:
    g = entry.algebra
    rho = entry.representations.get(op.rep)
    m = op.matrices
    if op.kind == "nijenhuis":
        report = is_nijenhuis(g, m["N"])
    elif op.kind == "rota_baxter":
        report = is_rota_baxter(g, m["R"])
    elif op.kind == "kupershmidt":
        report = is_kupershmidt(g, rho, m["T"])
    elif op.kind == "nijenhuis_pair":
        report = is_nijenhuis_pair(g, rho, m["N"], m["S"])
    elif op.kind == "dual_nijenhuis_pair":
        report = is_dual_nijenhuis_pair(g, rho, m["N"], m["S"])
    elif op.kind == "kn_structure":
        report = is_kn_structure(g, rho, m["T"], m["S"], m["N"]).report
    elif op.kind == "kdn_structure":
        report = is_kdn_structure(g, rho, m["T"], m["S"], m["N"]).report
    elif op.kind == "compatible_pair":
        report = are_compatible_kupershmidt(g, rho, m["T"], m["T2"])
    elif op.kind == "r_matrix":
        report = is_r_matrix(g, Bivector(m["pi_sharp"]))
    elif op.kind == "rmn_structure":
        report = is_r_matrix_nijenhuis(g, Bivector(m["pi_sharp"]), m["N"]).report
    elif op.kind == "rbn_structure":
        report = is_rbn_structure(g, m["R"], m["N"]).report
    else:
        raise LieopError(f"unknown catalog kind {op.kind!r}")
    if not report.ok:
        raise StructureCheckError(
            f"catalog assertion {entry.name}/{op.name} ({op.kind}) failed: "
            f"{[w.to_json() for w in report.witnesses]}"
        )


def _verify_entry(entry: CatalogEntry) -> CatalogEntry:
    for name, rho in entry.representations.items():
        rep = check_representation(rho)
        if not rep.ok:
            raise StructureCheckError(
                f"catalog representation {entry.name}/{name} is invalid"
            )
    if entry.bilinear_form is not None:
        form = check_bilinear_form(entry.algebra, entry.bilinear_form)
        if not form.ok:
            raise StructureCheckError(
                f"catalog bilinear form of {entry.name} is invalid"
            )
    for op in entry.operators:
        _verify_operator(entry, op)
    return entry


def _mat(rows) -> Matrix:
    return Matrix(rows)


def _abelian(n: int) -> CatalogEntry:
    g = LieAlgebra(n, {})
    ops = []
    if n >= 2:
        # Unipotent S = N with T = Id: an invertible-T structure that is
        # simultaneously KN and KdN since every bracket vanishes.
        jordan = Matrix(
            [[1 if j == i or j == i + 1 else 0 for j in range(n)] for i in range(n)]
        )
        ops = [
            CatalogOperator(
                name="kn_invertible",
                kind="kn_structure",
                rep="adjoint",
                matrices={"T": Matrix.identity(n), "S": jordan, "N": jordan},
                provenance="direct: all brackets vanish, so every condition is 0 = 0",
            ),
            CatalogOperator(
                name="kdn_invertible",
                kind="kdn_structure",
                rep="adjoint",
                matrices={"T": Matrix.identity(n), "S": jordan, "N": jordan},
                provenance="direct: all brackets vanish",
            ),
        ]
    return CatalogEntry(
        name=f"abelian_{n}",
        algebra=g,
        representations={"adjoint": adjoint_rep(g), "coadjoint": coadjoint_rep(g)},
        operators=tuple(ops),
        provenance="zero bracket in every basis pair",
    )


def _aff1() -> CatalogEntry:
    g = LieAlgebra.from_structure(2, {(0, 1): {1: 1}})
    d10 = Matrix.diagonal([1, 0])
    ops = (
        CatalogOperator(
            name="rb_diag",
            kind="rota_baxter",
            rep="adjoint",
            matrices={"R": d10},
            provenance="exhaustive grid over entries in {-1,0,1}",
        ),
        CatalogOperator(
            name="nij_diag",
            kind="nijenhuis",
            rep="adjoint",
            matrices={"N": Matrix.diagonal([2, 5])},
            provenance="diagonal operators: torsion at (e1,e2) cancels termwise",
        ),
        CatalogOperator(
            name="pair_diag",
            kind="nijenhuis_pair",
            rep="adjoint",
            matrices={"N": d10, "S": d10},
            provenance="hand expansion of the pair identity at both basis vectors",
        ),
        CatalogOperator(
            name="kn_diag",
            kind="kn_structure",
            rep="adjoint",
            matrices={"T": d10, "S": d10, "N": d10},
            provenance="hand expansion; T = N = S share the single projection",
        ),
        CatalogOperator(
            name="rmatrix_symplectic",
            kind="r_matrix",
            rep="coadjoint",
            matrices={"pi_sharp": Matrix([[0, 1], [-1, 0]])},
            provenance="dim 2: the cubic Yang-Baxter obstruction vanishes identically",
        ),
        CatalogOperator(
            name="kdn_coadjoint",
            kind="kdn_structure",
            rep="coadjoint",
            matrices={
                "T": Matrix([[0, 1], [-1, 0]]),
                "S": Matrix.identity(2).scale(2),
                "N": Matrix.identity(2).scale(2),
            },
            provenance="derived from the compatible pair (T, 2T) with T invertible",
        ),
        CatalogOperator(
            name="compatible_scaled",
            kind="compatible_pair",
            rep="coadjoint",
            matrices={
                "T": Matrix([[0, 1], [-1, 0]]),
                "T2": Matrix([[0, 2], [-2, 0]]),
            },
            provenance="bilinearity: scalar multiples are always compatible",
        ),
    )
    return CatalogEntry(
        name="aff1",
        algebra=g,
        representations={"adjoint": adjoint_rep(g), "coadjoint": coadjoint_rep(g)},
        operators=ops,
        provenance="[e1,e2] = e2",
    )


def _heis3() -> CatalogEntry:
    g = LieAlgebra.from_structure(3, {(0, 1): {2: 1}})
    ops = (
        CatalogOperator(
            name="rb_shift",
            kind="rota_baxter",
            rep="adjoint",
            matrices={"R": Matrix([[0, 0, 0], [0, 0, 0], [0, 0, 1]])},
            provenance="image is the center, so both sides of the identity vanish",
        ),
        CatalogOperator(
            name="pair_diag",
            kind="nijenhuis_pair",
            rep="adjoint",
            matrices={
                "N": Matrix.diagonal([0, 1, 0]),
                "S": Matrix.diagonal([0, 2, 0]),
            },
            provenance="diagonal family: each condition factors into scalar products",
        ),
        CatalogOperator(
            name="kn_diag",
            kind="kn_structure",
            rep="adjoint",
            matrices={
                "T": Matrix.diagonal([0, 0, 1]),
                "S": Matrix.diagonal([1, 2, 1]),
                "N": Matrix.diagonal([1, 0, 1]),
            },
            provenance="diagonal family: center-valued T kills every derived bracket",
        ),
    )
    return CatalogEntry(
        name="heis3",
        algebra=g,
        representations={"adjoint": adjoint_rep(g), "coadjoint": coadjoint_rep(g)},
        operators=ops,
        provenance="[e1,e2] = e3, center spanned by e3",
    )


def _sl2() -> CatalogEntry:
    g = LieAlgebra.from_structure(
        3,
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        basis_names=("h", "e", "f"),
    )
    killing = BilinearForm(Matrix([[8, 0, 0], [0, 0, 4], [0, 4, 0]]))
    r_skew = Matrix([[0, 1, 0], [0, 0, 0], [-2, 0, 0]])
    pi = Matrix(
        [
            ["0", "0", "1/4"],
            ["0", "0", "0"],
            ["-1/4", "0", "0"],
        ]
    )
    ops = (
        CatalogOperator(
            name="rb_skew",
            kind="rota_baxter",
            rep="adjoint",
            matrices={"R": r_skew},
            provenance="exhaustive grid over skew endomorphisms with entries in {-2..2}",
        ),
        CatalogOperator(
            name="rbn_identity",
            kind="rbn_structure",
            rep="adjoint",
            matrices={"R": r_skew, "N": Matrix.identity(3)},
            provenance="N = Id makes both compatibility conditions tautological",
        ),
        CatalogOperator(
            name="rmatrix_standard",
            kind="r_matrix",
            rep="coadjoint",
            matrices={"pi_sharp": pi},
            provenance="image of rb_skew under the inverse trace-form Gram matrix",
        ),
        CatalogOperator(
            name="rmn_identity",
            kind="rmn_structure",
            rep="coadjoint",
            matrices={"pi_sharp": pi, "N": Matrix.identity(3)},
            provenance="transported from rbn_identity along the trace form",
        ),
    )
    return CatalogEntry(
        name="sl2",
        algebra=g,
        representations={"adjoint": adjoint_rep(g), "coadjoint": coadjoint_rep(g)},
        operators=ops,
        bilinear_form=killing,
        provenance="[h,e] = 2e, [h,f] = -2f, [e,f] = h; trace form of the adjoint",
    )


_BUILDERS = {
    "abelian_1": lambda: _abelian(1),
    "abelian_2": lambda: _abelian(2),
    "abelian_3": lambda: _abelian(3),
    "aff1": _aff1,
    "heis3": _heis3,
    "sl2": _sl2,
}


def list_catalog() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def get_entry(name: str) -> CatalogEntry:
    if name not in _BUILDERS:
        raise KeyError(f"unknown catalog entry {name!r}")
    return _verify_entry(_BUILDERS[name]())


# ---------------------------------------------------------------------------
# Exhaustive grid search
# ---------------------------------------------------------------------------

SEARCH_KINDS = (
    "nijenhuis",
    "rota_baxter",
    "kupershmidt",
    "nijenhuis_pair",
    "kn_structure",
    "r_matrix",
    "compatible_pair",
)


def _as_matrix(values: Sequence, nrows: int, ncols: int) -> Matrix:
    return Matrix(
        [values[r * ncols : (r + 1) * ncols] for r in range(nrows)]
    )


def grid_search(
    g: LieAlgebra,
    rho: Optional[Representation],
    kind: str,
    entry_set: Sequence[Scalar],
    cap: int = GRID_CAP,
) -> list:
    """All operators over the entry set satisfying the kind's predicate.

    Enumeration is lexicographic over the sorted scalar set, so results are
    deterministic. Raises GridCapExceeded instead of truncating: partial
    output would silently destroy the oracle's exhaustiveness.
    """
    if kind not in SEARCH_KINDS:
        raise LieopError(f"unknown search kind {kind!r}")
    values = sorted({rational(v) for v in entry_set})
    n = g.dim
    needs_rho = kind in ("kupershmidt", "nijenhuis_pair", "kn_structure", "compatible_pair")
    if needs_rho:
        if rho is None:
            raise LieopError(f"search kind {kind!r} requires a representation")
        m = rho.module_dim
        rep_ok = check_representation(rho)
        if not rep_ok.ok:
            raise LieopError("search representation is invalid")

    if kind == "nijenhuis":
        slots = n * n
    elif kind == "rota_baxter":
        slots = n * n
    elif kind == "kupershmidt":
        slots = n * m
    elif kind == "nijenhuis_pair":
        slots = n * n + m * m
    elif kind == "kn_structure":
        slots = n * m + m * m + n * n
    elif kind == "r_matrix":
        slots = n * (n - 1) // 2
    else:  # compatible_pair
        slots = 2 * n * m

    count = len(values) ** slots
    if count > cap:
        raise GridCapExceeded(f"{count} candidates exceed the cap of {cap}")

    found = []
    for combo in itertools.product(values, repeat=slots):
        if kind == "nijenhuis":
            cand = _as_matrix(combo, n, n)
            if is_nijenhuis(g, cand).ok:
                found.append(cand)
        elif kind == "rota_baxter":
            cand = _as_matrix(combo, n, n)
            if is_rota_baxter(g, cand).ok:
                found.append(cand)
        elif kind == "kupershmidt":
            cand = _as_matrix(combo, n, m)
            if is_kupershmidt(g, rho, cand, check_rho=False).ok:
                found.append(cand)
        elif kind == "nijenhuis_pair":
            n_op = _as_matrix(combo[: n * n], n, n)
            s_op = _as_matrix(combo[n * n :], m, m)
            if is_nijenhuis_pair(g, rho, n_op, s_op).ok:
                found.append((n_op, s_op))
        elif kind == "kn_structure":
            t_op = _as_matrix(combo[: n * m], n, m)
            s_op = _as_matrix(combo[n * m : n * m + m * m], m, m)
            n_op = _as_matrix(combo[n * m + m * m :], n, n)
            if not is_kupershmidt(g, rho, t_op, check_rho=False).ok:
                continue
            if is_kn_structure(g, rho, t_op, s_op, n_op).ok:
                found.append((t_op, s_op, n_op))
        elif kind == "r_matrix":
            rows = [[0] * n for _ in range(n)]
            it = iter(combo)
            for i in range(n):
                for j in range(i + 1, n):
                    c = next(it)
                    rows[i][j] = c
                    rows[j][i] = -c
            cand = Bivector(Matrix(rows))
            if is_r_matrix(g, cand).ok:
                found.append(cand)
        else:  # compatible_pair
            t1 = _as_matrix(combo[: n * m], n, m)
            t2 = _as_matrix(combo[n * m :], n, m)
            if not is_kupershmidt(g, rho, t1, check_rho=False).ok:
                continue
            if not is_kupershmidt(g, rho, t2, check_rho=False).ok:
                continue
            if are_compatible_kupershmidt(g, rho, t1, t2).ok:
                found.append((t1, t2))
    return found
