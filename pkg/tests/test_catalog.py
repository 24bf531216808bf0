import itertools
import pytest

from lieop import (
    GridCapExceeded,
    LieopError,
    Matrix,
    check_jacobi,
    is_rota_baxter,
)
from lieop.catalog import get_entry, grid_search, list_catalog

from conftest import GRID


class TestEntries:
    def test_listing_is_stable(self):
        assert list_catalog() == [
            "abelian_1",
            "abelian_2",
            "abelian_3",
            "aff1",
            "heis3",
            "sl2",
        ]

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            get_entry("so3")

    def test_every_entry_reverifies_on_load(self):
        # get_entry raises if any asserted structure fails its predicate
        for name in list_catalog():
            entry = get_entry(name)
            assert check_jacobi(entry.algebra).ok

    def test_expected_exemplars_present(self):
        aff1 = get_entry("aff1")
        rb = next(op for op in aff1.operators if op.name == "rb_diag")
        assert rb.matrices["R"] == Matrix.diagonal([1, 0])
        sl2 = get_entry("sl2")
        assert sl2.bilinear_form.matrix == Matrix([[8, 0, 0], [0, 0, 4], [0, 4, 0]])

    def test_abelian_dims(self):
        for n in (1, 2, 3):
            assert get_entry(f"abelian_{n}").algebra.dim == n


class TestGridSearch:
    def test_nijenhuis_on_abelian_is_everything(self, abelian2):
        found = grid_search(abelian2.algebra, None, "nijenhuis", (0, 1))
        assert len(found) == 16

    def test_rota_baxter_matches_brute_force(self, aff1):
        found = grid_search(aff1.algebra, None, "rota_baxter", GRID)
        brute = [
            m
            for m in (
                Matrix([combo[:2], combo[2:]])
                for combo in itertools.product(GRID, repeat=4)
            )
            if is_rota_baxter(aff1.algebra, m).ok
        ]
        assert found == brute
        for expected in (Matrix.diagonal([1, 0]), Matrix.diagonal([-1, 0]), Matrix.zeros(2, 2)):
            assert expected in found

    def test_deterministic_order_and_repeatability(self, aff1):
        a = grid_search(aff1.algebra, None, "rota_baxter", (1, 0, -1))
        b = grid_search(aff1.algebra, None, "rota_baxter", (-1, 1, 0))
        assert a == b  # entry set order is canonicalized

    def test_kupershmidt_equals_rota_baxter_for_adjoint(self, aff1):
        ad = aff1.representations["adjoint"]
        kup = grid_search(aff1.algebra, ad, "kupershmidt", GRID)
        rb = grid_search(aff1.algebra, None, "rota_baxter", GRID)
        assert kup == rb

    def test_pair_search_returns_tuples(self, aff1):
        ad = aff1.representations["adjoint"]
        pairs = grid_search(aff1.algebra, ad, "nijenhuis_pair", (0, 1))
        assert pairs
        n_op, s_op = pairs[0]
        assert n_op.shape == (2, 2) and s_op.shape == (2, 2)

    def test_kn_search_members_reverify(self, aff1):
        from lieop import is_kn_structure

        ad = aff1.representations["adjoint"]
        triples = grid_search(aff1.algebra, ad, "kn_structure", (0, 1))
        assert triples
        for t_op, s_op, n_op in triples[:5]:
            assert is_kn_structure(aff1.algebra, ad, t_op, s_op, n_op).ok

    def test_r_matrix_search(self, aff1):
        found = grid_search(aff1.algebra, None, "r_matrix", (0, 1))
        assert len(found) == 2  # both antisymmetric candidates qualify in dim 2

    def test_cap_is_an_error_not_truncation(self, sl2):
        with pytest.raises(GridCapExceeded):
            grid_search(sl2.algebra, None, "nijenhuis", GRID, cap=100)

    def test_unknown_kind(self, aff1):
        with pytest.raises(LieopError):
            grid_search(aff1.algebra, None, "derivation", GRID)

    def test_missing_representation(self, aff1):
        with pytest.raises(LieopError):
            grid_search(aff1.algebra, None, "kupershmidt", GRID)

    def test_scalar_closure_of_rota_baxter_set(self, aff1):
        # the defining identity is quadratic-homogeneous, so the found set
        # is closed under the scalars that keep entries inside the grid
        found = grid_search(aff1.algebra, None, "rota_baxter", GRID)
        for m in found:
            assert m.scale(-1) in found
