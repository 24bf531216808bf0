"""Fixture documents for the CLI contract tests.

Built from catalog exports where possible, with handcrafted passing,
failing, and malformed variants. Every CLI test (and the acceptance
criterion that drives it) reads from this one set.
"""

from __future__ import annotations

import json
from pathlib import Path

from lieop import Matrix, trivial_deformation_from_pair
from lieop.catalog import get_entry
from lieop.cli import main
from lieop.documents import document_dict, serialize


def _export(root: Path, name: str, entry: str, bundle: str) -> Path:
    path = root / f"{name}.json"
    code = main(["catalog", "export", entry, "--bundle", bundle, "--output", str(path), "--quiet"])
    assert code == 0, f"export of {entry}/{bundle} failed"
    return path


def _write(root: Path, name: str, payload) -> Path:
    path = root / f"{name}.json"
    text = payload if isinstance(payload, str) else serialize(payload)
    path.write_text(text, encoding="utf-8")
    return path


def write_fixtures(root: Path) -> dict[str, Path]:
    docs: dict[str, Path] = {}
    docs["aff1_kn"] = _export(root, "aff1_kn", "aff1", "kn_diag")
    docs["aff1_nij"] = _export(root, "aff1_nij", "aff1", "nij_diag")
    docs["aff1_rmatrix"] = _export(root, "aff1_rmatrix", "aff1", "rmatrix_symplectic")
    docs["aff1_kdn"] = _export(root, "aff1_kdn", "aff1", "kdn_coadjoint")
    docs["heis3_kn"] = _export(root, "heis3_kn", "heis3", "kn_diag")
    docs["abelian_kn"] = _export(root, "abelian_kn", "abelian_2", "kn_invertible")
    docs["sl2_rbn"] = _export(root, "sl2_rbn", "sl2", "rbn_identity")

    base = json.loads(docs["aff1_kn"].read_text())

    bad_rbn = dict(base)
    bad_rbn["operators"] = {
        "R": Matrix.identity(2).to_json(),
        "N": Matrix.identity(2).to_json(),
    }
    docs["aff1_bad_rbn"] = _write(root, "aff1_bad_rbn", bad_rbn)

    bad_pair = dict(base)
    bad_pair["operators"] = {
        "N": Matrix.identity(2).to_json(),
        "S": Matrix([[0, 1], [0, 0]]).to_json(),
    }
    docs["aff1_bad_pair"] = _write(root, "aff1_bad_pair", bad_pair)

    bad_kn = dict(base)
    bad_kn["operators"] = {
        "T": Matrix.diagonal([1, 0]).to_json(),
        "S": Matrix.zeros(2, 2).to_json(),
        "N": Matrix.identity(2).to_json(),
    }
    docs["aff1_bad_kn"] = _write(root, "aff1_bad_kn", bad_kn)

    aff1 = get_entry("aff1")
    p = Matrix.diagonal([1, 0])
    pair = trivial_deformation_from_pair(
        aff1.algebra, aff1.representations["adjoint"], p, p
    )
    with_deformation = document_dict(
        algebra=aff1.algebra,
        representation=aff1.representations["adjoint"],
        operators={"N": p, "S": p},
        deformation=pair,
    )
    docs["aff1_deformation"] = _write(root, "aff1_deformation", with_deformation)

    docs["broken_jacobi"] = _write(
        root,
        "broken_jacobi",
        {
            "algebra": {
                "dim": 3,
                "basis": ["e1", "e2", "e3"],
                "brackets": [
                    {"i": 0, "j": 1, "value": {"2": "1"}},
                    {"i": 0, "j": 2, "value": {"0": "1"}},
                ],
            }
        },
    )

    docs["broken_rep"] = _write(
        root,
        "broken_rep",
        {
            "algebra": {
                "dim": 2,
                "basis": ["e1", "e2"],
                "brackets": [{"i": 0, "j": 1, "value": {"1": "1"}}],
            },
            "representation": {
                "module_dim": 2,
                "matrices": [
                    Matrix.identity(2).to_json(),
                    Matrix.identity(2).to_json(),
                ],
            },
        },
    )

    docs["malformed_rational"] = _write(
        root,
        "malformed_rational",
        json.dumps(
            {
                "algebra": {
                    "dim": 2,
                    "basis": ["e1", "e2"],
                    "brackets": [{"i": 0, "j": 1, "value": {"1": "1/0"}}],
                }
            }
        ),
    )
    return docs
