"""
Tests for LieAlgebra tables and the base algebras.
"""

import pytest


class TestLieAlgebra:
    """Tests for the structure-constant table."""

    def test_o5_dimensions(self, o5):
        """o(5) over GF(3) is 10-dimensional in the Chevalley basis."""
        from app.models.algebra import basis_labels
        assert o5.dim == 10
        assert o5.basis == basis_labels(2, 4)
        assert o5.p == 3

    def test_o5_is_lie(self, o5):
        """The golden table is alternating and satisfies Jacobi."""
        assert o5.is_alternating()
        assert o5.jacobi_violations() == []

    def test_chevalley_brackets(self, o5):
        """[x1, y1] = h1 and [x1, x2] = x3."""
        h1 = o5.unit(o5.index("h1"))
        x3 = o5.unit(o5.index("x3"))
        x1, y1, x2 = (o5.unit(o5.index(s)) for s in ("x1", "y1", "x2"))
        assert (o5.bracket(x1, y1) == h1).all()
        assert (o5.bracket(x1, x2) == x3).all()
        assert (o5.bracket(x1, x1) == 0).all()

    def test_unknown_label(self, o5):
        """Unknown basis labels raise DomainError."""
        from app.exceptions import DomainError
        with pytest.raises(DomainError):
            o5.index("z7")

    def test_json_round_trip(self, o5):
        """An algebra survives JSON export and import."""
        from app.models.algebra import LieAlgebra
        assert LieAlgebra.from_json(o5.to_json()) == o5

    def test_extension_of_scalars(self, o5):
        """Extending to GF(9) keeps the Jacobi identity."""
        from app.models.fields import field_of_order
        K = field_of_order(9)
        big = o5.over(K)
        assert big.field is K
        assert big.jacobi_violations() == []

    def test_cannot_change_characteristic(self, o5):
        """Scalars only extend within one characteristic."""
        from app.exceptions import DomainError
        from app.models.fields import get_field
        with pytest.raises(DomainError):
            o5.over(get_field(2))

    def test_format_vector(self, o5):
        """Vectors render as sums of labels."""
        v = o5.element({"h1": 1, "x2": 2})
        assert o5.format_vector(v) == "h1 + 2*x2"

    def test_jacobi_violation_reported(self):
        """A non-Lie table reports its failing triples."""
        from app.models.algebra import LieAlgebra
        from app.models.fields import get_field
        K = get_field(3)
        T = K.Zeros((3, 3, 3))
        # [a, b] = a, [b, c] = b, [a, c] = 0
        T[0, 1, 0], T[1, 0, 0] = 1, 2
        T[1, 2, 1], T[2, 1, 1] = 1, 2
        L = LieAlgebra(["a", "b", "c"], T)
        assert L.is_alternating()
        assert len(L.jacobi_violations()) == 1


class TestBuilders:
    """Tests for the golden base algebras and the matrix oracle."""

    def test_golden_matches_oracle_p3(self, store):
        """The frozen o(5) table equals the matrix realization."""
        from app.services.builders import cross_check
        assert cross_check(3, store) == []

    def test_golden_matches_oracle_p2(self, store):
        """The frozen o^(1)(5) table equals the matrix realization."""
        from app.services.builders import cross_check
        assert cross_check(2, store) == []

    def test_full_o5_p2(self):
        """o(5) over GF(2) is 15-dimensional."""
        from app.services.builders import build_o5_p2_full
        L = build_o5_p2_full()
        assert L.dim == 15
        assert L.jacobi_violations() == []

    def test_matrices_preserve_form(self):
        """Every Chevalley matrix preserves the antidiagonal form."""
        from app.services.orthogonal import chevalley_matrices, preserves_form
        for p in (2, 3):
            assert all(preserves_form(X, p) for X in chevalley_matrices(p).values())

    def test_unknown_characteristic(self):
        """Only p = 2 and p = 3 have base algebras."""
        from app.exceptions import DomainError
        from app.services.builders import build_base
        with pytest.raises(DomainError):
            build_base(5)
