"""
Tests for the divided-power algebra and the contact bracket.
"""

import pytest


@pytest.fixture
def space():
    from app.models.divided_powers import get_space
    from app.models.fields import get_field
    return get_space(get_field(3), (1, 1, 1))


class TestDividedPowers:
    """Tests for O(3; (1,1,1)) over GF(3)."""

    def test_dimension(self, space):
        """p^3 monomials."""
        assert space.dim == 27
        assert space.bounds == (3, 3, 3)

    def test_product(self, space):
        """x * x = 2 x^(2) and x * x^(2) = 0."""
        x = space.monomial((1, 0, 0))
        assert x * x == space.monomial((2, 0, 0), 2)
        assert (x * space.monomial((2, 0, 0))).is_zero()

    def test_mixed_product(self, space):
        """Distinct generators multiply without binomials."""
        assert space.monomial((1, 0, 0)) * space.monomial((0, 2, 1)) == space.monomial((1, 2, 1))

    def test_derivative(self, space):
        """d_x x^(2) = x."""
        assert space.monomial((2, 0, 0)).derivative("x") == space.monomial((1, 0, 0))
        assert space.monomial((0, 0, 1)).derivative("x").is_zero()

    def test_overflow(self, space):
        """Exponents beyond the bounds are rejected."""
        from app.exceptions import DividedPowerOverflowError
        with pytest.raises(DividedPowerOverflowError):
            space.monomial((3, 0, 0))

    def test_bad_shearing_vector(self):
        """N needs three positive entries."""
        from app.exceptions import DomainError
        from app.models.divided_powers import DividedPowerSpace
        from app.models.fields import get_field
        with pytest.raises(DomainError):
            DividedPowerSpace(get_field(3), (1, 0, 1))

    def test_degrees(self, space):
        """deg x = deg y = 1, deg t = 2."""
        f = space.monomial((1, 1, 0)) + space.monomial((0, 0, 2))
        assert f.degrees() == {2, 4}

    def test_repr(self, space):
        """Monomials render with divided-power exponents."""
        assert repr(space.monomial((2, 0, 1), 2)) == "2*x^(2)t^(1)"
        assert repr(space.zero()) == "0"

    def test_characteristic_two(self):
        """x * x = 0 over GF(2)."""
        from app.models.divided_powers import get_space
        from app.models.fields import get_field
        S = get_space(get_field(2))
        x = S.monomial((1, 0, 0))
        assert (x * x).is_zero()


class TestContactBracket:
    """Tests for contact_bracket()."""

    def test_x_y(self, space):
        """[x, y] = 1."""
        from app.models.divided_powers import contact_bracket
        x, y = space.monomial((1, 0, 0)), space.monomial((0, 1, 0))
        assert contact_bracket(x, y) == space.monomial((0, 0, 0))

    def test_delta_of_one(self, space):
        """Delta(1) = 2 and [1, t] = 2."""
        from app.models.divided_powers import contact_bracket
        one, t = space.monomial((0, 0, 0)), space.monomial((0, 0, 1))
        assert one.delta() == one.scale(2)
        assert contact_bracket(one, t) == one.scale(2)

    def test_t_acts_by_degree(self, space):
        """[t, f] = (deg f - 2) f on homogeneous f."""
        from app.models.divided_powers import contact_bracket
        t = space.monomial((0, 0, 1))
        f = space.monomial((1, 2, 0))
        assert contact_bracket(t, f) == f

    def test_antisymmetry(self, space):
        """[f, g] = -[g, f] on random elements."""
        import numpy as np
        from app.models.divided_powers import contact_bracket
        rng = np.random.default_rng(0)
        f, g = space.random(rng), space.random(rng)
        assert contact_bracket(f, g) == -contact_bracket(g, f)

    def test_different_spaces(self, space):
        """Elements of different spaces do not mix."""
        from app.exceptions import DomainError
        from app.models.divided_powers import contact_bracket, get_space
        from app.models.fields import get_field
        other = get_space(get_field(3, 2)).monomial((1, 0, 0))
        with pytest.raises(DomainError):
            contact_bracket(space.monomial((1, 0, 0)), other)
