"""
Tests for finite fields and parameter polynomials.
"""

import pytest


class TestFields:
    """Tests for field construction and element helpers."""

    def test_split_order(self):
        """Orders split into characteristic and degree."""
        from app.models.fields import split_order
        assert split_order(9) == (3, 2)
        assert split_order(64) == (2, 6)
        assert split_order(3) == (3, 1)

    def test_split_order_rejects_composites(self):
        """Non prime powers are rejected."""
        from app.exceptions import DomainError
        from app.models.fields import split_order
        with pytest.raises(DomainError):
            split_order(6)

    def test_unsupported_extension(self):
        """Only the tabulated extensions are available."""
        from app.exceptions import DomainError
        from app.models.fields import get_field
        with pytest.raises(DomainError):
            get_field(5, 2)

    def test_field_of_order(self):
        """GF(9) has characteristic 3 and degree 2."""
        from app.models.fields import field_of_order
        K = field_of_order(9)
        assert K.order == 9
        assert K.characteristic == 3
        assert K.degree == 2

    def test_fixed_modulus_gf4(self):
        """In GF(4) the generator w satisfies w^2 = w + 1."""
        from app.models.fields import field_of_order
        K = field_of_order(4)
        w = K(2)
        assert w ** 2 == w + K(1)

    def test_coerce_reads_integers_mod_p(self):
        """-1 is read as p - 1 times the unit."""
        from app.models.fields import coerce, get_field
        K = get_field(3)
        assert coerce(K, -1) == K(2)
        assert coerce(K, 7) == K(1)

    def test_coerce_rejects_foreign_elements(self):
        """Elements of another field are not silently converted."""
        from app.exceptions import DomainError
        from app.models.fields import coerce, field_of_order, get_field
        with pytest.raises(DomainError):
            coerce(get_field(3), field_of_order(9)(4))

    def test_json_value_of_extension_element(self):
        """Extension elements serialize as coefficient vectors."""
        from app.models.fields import field_of_order, from_json_value, to_json_value
        K = field_of_order(9)
        assert to_json_value(K(5)) == [2, 1]
        assert from_json_value(K, [2, 1]) == K(5)

    def test_pth_root_gf9(self):
        """pth_root inverts Frobenius on GF(9)."""
        from app.models.fields import field_of_order, pth_root
        K = field_of_order(9)
        for c in K.elements:
            assert pth_root(c) ** 3 == c

    def test_pth_root_gf4(self):
        """pth_root inverts Frobenius on GF(4)."""
        from app.models.fields import field_of_order, pth_root
        K = field_of_order(4)
        for c in K.elements:
            assert pth_root(c) ** 2 == c

    def test_lucas_binom(self):
        """Binomials mod p by digits."""
        from app.models.fields import lucas_binom
        assert lucas_binom(2, 1, 3) == 2
        assert lucas_binom(3, 1, 3) == 0
        assert lucas_binom(4, 2, 3) == 0
        assert lucas_binom(4, 1, 3) == 1
        assert lucas_binom(1, 2, 3) == 0


class TestParamPoly:
    """Tests for ParamPoly."""

    def test_frobenius(self):
        """(t1 + t2)^3 = t1^3 + t2^3 in characteristic 3."""
        from app.models.polys import ParamPoly
        t1, t2 = ParamPoly.variables(3, 2)
        assert (t1 + t2) ** 3 == t1 ** 3 + t2 ** 3

    def test_integer_arithmetic(self):
        """Integers act as constants."""
        from app.models.polys import ParamPoly
        (t,) = ParamPoly.variables(3, 1)
        poly = 2 - t
        assert poly.coefficient((0,)) == 2
        assert poly.coefficient((1,)) == 2
        assert (t - t).is_zero()
        assert poly.degree() == 1
        assert ParamPoly.zero(3, 1).degree() == -1

    def test_specialize_integers(self):
        """Integer tuples evaluate mod p."""
        from app.models.polys import ParamPoly
        t1, t2 = ParamPoly.variables(3, 2)
        assert (t1 * t2 + 2).specialize([1, 2]) == 1

    def test_specialize_field_elements(self):
        """Field tuples evaluate in the field."""
        from app.models.fields import field_of_order
        from app.models.polys import ParamPoly
        K = field_of_order(9)
        t1, t2 = ParamPoly.variables(3, 2)
        value = (t1 ** 2 + t2).specialize([K(3), K(0)])
        assert value == K(3) ** 2

    def test_specialize_wrong_length(self):
        """A parameter tuple of the wrong length is rejected."""
        from app.exceptions import ParameterMismatchError
        from app.models.polys import ParamPoly
        t1, _ = ParamPoly.variables(3, 2)
        with pytest.raises(ParameterMismatchError):
            t1.specialize([1])

    def test_mismatched_rings(self):
        """Polynomials in different numbers of parameters do not mix."""
        from app.exceptions import ParameterMismatchError
        from app.models.polys import ParamPoly
        with pytest.raises(ParameterMismatchError):
            ParamPoly.variable(3, 2, 0) + ParamPoly.variable(3, 3, 0)

    def test_repr(self):
        """Zero renders as 0; monomials as t1^2*t3."""
        from app.models.polys import ParamPoly, monomial_str
        assert repr(ParamPoly.zero(3, 2)) == "0"
        assert monomial_str((2, 0, 1)) == "t1^2*t3"
        assert monomial_str((0, 0)) == "1"
