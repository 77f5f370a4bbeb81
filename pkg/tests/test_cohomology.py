"""
Tests for the Chevalley-Eilenberg complex.
"""

import numpy as np
import pytest

P3_COCYCLES = ["c6", "c3", "c0", "c_m3", "c_m6"]
P2_COCYCLES = ["c4", "c2", "c_m2", "c_m4"]


class TestCochainComplex:
    """Tests for CochainComplex."""

    def test_matrix_shapes(self, o5_complex):
        """d_1: C^1 -> C^2 and d_2: C^2 -> C^3 have the expected sizes."""
        assert o5_complex.dim(2) == 450
        assert o5_complex.matrix(1).shape == (450, 100)
        assert o5_complex.matrix(2).shape == (1200, 450)

    def test_d_squared_is_zero(self, o5_complex):
        """d_2 d_1 = 0."""
        product = o5_complex.matrix(2) @ o5_complex.matrix(1)
        assert not np.any(product)

    def test_h2_p3(self, o5_complex):
        """dim H^2(o5; o5) = 5 over GF(3)."""
        assert o5_complex.h_dim(2) == 5

    def test_h2_p2(self, store):
        """dim H^2(o51; o51) = 4 over GF(2)."""
        from app.services.cohomology import CochainComplex
        assert CochainComplex(store.algebra("o51-p2")).h_dim(2) == 4

    def test_differential_of_x1(self, o5, o5_complex, store):
        """d(x1)(g) = [x1, g] matches the golden anchor."""
        from app.models.cochain import Cochain
        x1 = Cochain(o5.basis, 3, 0)
        x1.add_term(o5.index("x1"), [], 1)
        assert o5_complex.differential(x1) == store.cochain("o5-p3", "d_x1")

    def test_trivial_differential(self, o5, store):
        """d(y3*)(u, v) = y3*([u, v]) matches the golden anchor."""
        from app.models.cochain import TRIVIAL, Cochain
        from app.services.cohomology import trivial_differential
        phi = Cochain(o5.basis, 3, 1, TRIVIAL)
        phi.add_term(0, [o5.index("y3")], 1)
        assert trivial_differential(o5, phi) == store.cochain("o5-p3", "d_y3_star")

    def test_golden_cocycles_are_closed(self, o5_complex, store):
        """The five transcribed cocycles are closed."""
        for name in P3_COCYCLES:
            assert o5_complex.is_cocycle(store.cochain("o5-p3", name)), name

    def test_cocycles_span_h2(self, o5_complex, store):
        """The five cocycles are independent in H^2."""
        cocycles = [store.cochain("o5-p3", name) for name in P3_COCYCLES]
        assert o5_complex.class_rank(cocycles) == 5

    def test_p2_cocycles_span_h2(self, store):
        """The four cocycles over GF(2) are independent in H^2."""
        from app.services.cohomology import CochainComplex
        complex_ = CochainComplex(store.algebra("o51-p2"))
        cocycles = [store.cochain("o51-p2", name) for name in P2_COCYCLES]
        assert complex_.class_rank(cocycles) == 4

    def test_solve_coboundary(self, o5_complex, store):
        """d(alpha_0_6) is a coboundary and the solution maps onto it."""
        target = store.cochain("o5-p3", "d_alpha_0_6")
        solution, cert = o5_complex.solve_coboundary(target)
        assert cert.feasible
        assert o5_complex.differential(solution) == target

    def test_cocycle_is_not_coboundary(self, o5_complex, store):
        """c6 is not exact and the certificate carries a witness."""
        solution, cert = o5_complex.solve_coboundary(store.cochain("o5-p3", "c6"))
        assert solution is None
        assert not cert.feasible
        assert cert.witness is not None

    def test_cohomologous(self, o5_complex, store):
        """A cocycle is cohomologous to itself plus a coboundary."""
        c6 = store.cochain("o5-p3", "c6")
        exact = o5_complex.differential(_one_cochain(store))
        assert o5_complex.cohomologous(c6, c6 + exact)
        assert not o5_complex.cohomologous(c6, store.cochain("o5-p3", "c3"))

    def test_cohomologous_needs_cocycles(self, o5_complex, store):
        """Non-closed inputs raise NotACocycleError."""
        from app.exceptions import NotACocycleError
        alpha = store.cochain("o5-p3", "alpha_0_6")
        with pytest.raises(NotACocycleError):
            o5_complex.cohomologous(alpha, alpha)

    def test_extension_field_rejected(self, o5):
        """Complexes are built over prime fields only."""
        from app.exceptions import DomainError
        from app.models.fields import get_field
        from app.services.cohomology import CochainComplex
        with pytest.raises(DomainError):
            CochainComplex(o5.over(get_field(3, 2)))

    def test_foreign_cochain_rejected(self, o5_complex, store):
        """Cochains of another algebra do not belong to the complex."""
        from app.exceptions import DomainError
        with pytest.raises(DomainError):
            o5_complex.differential(store.cochain("o51-p2", "c4"))


def _one_cochain(store):
    """y1 (x) x3*, an arbitrary 1-cochain of o(5)."""
    from app.models.cochain import Cochain
    L = store.algebra("o5-p3")
    c = Cochain(L.basis, 3, 1)
    c.add_term(L.index("y1"), [L.index("x3")], 1)
    return c
