"""
Tests for the contact realization of L(eps, delta, rho).
"""

import numpy as np
import pytest


class TestContactRealization:
    """Tests for build_L and its checks."""

    def test_jacobi(self):
        """L(eps, delta, rho) satisfies Jacobi over GF(3)."""
        from app.models.fields import get_field
        from app.services.contact import build_L
        K = get_field(3)
        for eps, delta, rho in ((1, 0, 0), (2, 0, 0), (2, 1, 2), (1, 1, 1), (2, 2, 0)):
            L = build_L(K(eps), K(delta), K(rho))
            assert L.jacobi_violations() == []
            assert L.is_alternating()

    def test_zero_epsilon(self):
        """eps = 0 is outside the family."""
        from app.exceptions import DomainError
        from app.models.fields import get_field
        from app.services.contact import build_L
        with pytest.raises(DomainError, match="epsilon must be nonzero"):
            build_L(get_field(3)(0))

    def test_unknown_reading(self):
        """Only the add and replace readings exist."""
        from app.exceptions import DomainError
        from app.models.fields import get_field
        from app.services.contact import build_L
        with pytest.raises(DomainError):
            build_L(get_field(3)(1), reading="merge")

    @pytest.mark.parametrize("order", [3, 9])
    def test_chevalley_relations(self, order):
        """The Chevalley relations hold for every nonzero eps."""
        from app.models.fields import field_of_order
        from app.services.contact import chevalley_relations_check
        K = field_of_order(order)
        for eps in K.elements[1:]:
            report = chevalley_relations_check(eps)
            assert len(report) == 6
            assert all(row["holds"] for row in report), report

    def test_degrees(self):
        """Every generating function is homogeneous of its Lie degree."""
        from app.models.fields import get_field
        from app.services.contact import degree_report
        rows = degree_report(get_field(3)(2))
        assert len(rows) == 10
        assert all(row["homogeneous"] for row in rows)

    def test_grading(self):
        """Brackets add degrees."""
        from app.models.fields import get_field
        from app.services.contact import build_L
        from app.services.structure import check_grading
        K = get_field(3)
        assert check_grading(build_L(K(2))) == []

    def test_lowest_bracket(self):
        """[E-a, E-a-b] = E-2a-b."""
        from app.models.fields import get_field
        from app.services.contact import build_L
        L = build_L(get_field(3)(1))
        value = L.bracket(L.unit(L.index("E-a")), L.unit(L.index("E-a-b")))
        assert np.all(value == L.unit(L.index("E-2a-b")))

    def test_kk_variant(self):
        """With H_alpha = t + xy, [H_alpha, E_alpha] = 2 E_alpha."""
        from app.models.fields import get_field
        from app.services.contact import build_L
        L = build_L(get_field(3)(1), kk_variant=True)
        value = L.bracket(L.unit(L.index("Ha")), L.unit(L.index("Ea")))
        assert np.all(value == L.field(2) * L.unit(L.index("Ea")))

    def test_readings_coincide(self):
        """The contact values vanish on the overridden pairs, so both readings give a Lie algebra."""
        from app.models.fields import get_field
        from app.services.contact import croc1_readings
        K = get_field(3)
        result = croc1_readings(K(2), K(1), K(1))
        assert len(result["contact_values"]) == 6
        assert all(value == "0" for value in result["contact_values"].values())
        assert result["readings_coincide"]
        assert result["jacobi"] == {"add": True, "replace": True}

    @pytest.mark.parametrize("reading", ["add", "replace"])
    def test_overridden_pairs_antisymmetric(self, reading):
        """Every overridden bracket is stored with its negative in the transposed slot."""
        from app.models.fields import field_of_order
        from app.services.contact import LABELS, OVERRIDES, build_L
        K = field_of_order(9)
        L = build_L(K(2), K(1), K(2), reading=reading)
        for a, b, *_ in OVERRIDES:
            i, j = LABELS.index(a), LABELS.index(b)
            assert np.all(L.table[j, i] == -L.table[i, j]), (a, b)
        assert L.is_alternating()
        value = L.bracket(L.unit(L.index("E-a-b")), L.unit(L.index("E-2a-b")))
        assert np.all(value == -L.unit(L.index("Eb")))

    @pytest.mark.parametrize("eps", [1, 2])
    @pytest.mark.parametrize("a, b, target", [
        ("Eb", "Ea", "Ea+b"),
        ("Ea", "Ea+b", "E2a+b"),
        ("E-a", "E-a-b", "E-2a-b"),
        ("E-b", "E-a", "E-a-b"),
    ])
    def test_defining_brackets(self, eps, a, b, target):
        """The divided-power reading of the generating functions reproduces the root brackets."""
        from app.models.fields import get_field
        from app.services.contact import build_L
        L = build_L(get_field(3)(eps))
        value = L.bracket(L.unit(L.index(a)), L.unit(L.index(b)))
        assert np.all(value == L.unit(L.index(target)))

    def test_parameter_sweep(self):
        """Sampled L(eps, delta, rho) over GF(9) are alternating and satisfy Jacobi."""
        from app.models.fields import field_of_order
        from app.services.contact import parameter_sweep
        result = parameter_sweep(field_of_order(9), count=8, seed=1)
        assert result["points"] == 8
        assert all(row["eps"] != 0 for row in result["rows"])
        assert result["all_hold"], result["rows"]

    def test_override_values(self):
        """delta lands on E_b at (E-2a-b, E-a-b)."""
        from app.models.fields import get_field
        from app.services.contact import LABELS, ContactRealization
        K = get_field(3)
        values = ContactRealization(K(1)).override_values(K(2), K(0))
        v = values[("E-2a-b", "E-a-b")]
        assert v[LABELS.index("Eb")] == 2
        assert not np.any(values[("E-2a-b", "E-a")])

    def test_jacobi_sample(self):
        """The contact bracket is a Lie bracket on sampled triples."""
        from app.models.fields import get_field
        from app.services.contact import contact_jacobi_sample
        result = contact_jacobi_sample(get_field(3), count=20, seed=0)
        assert result == {"triples": 20, "antisymmetry_failures": 0, "jacobi_failures": 0}

    def test_bracket_table(self):
        """A header row plus one row per basis vector."""
        from app.models.fields import get_field
        from app.services.contact import bracket_table, build_L
        rows = bracket_table(build_L(get_field(3)(1)))
        assert len(rows) == 11
        assert rows[0][1:] == ["Hb", "Ha", "Eb", "Ea", "Ea+b", "E2a+b", "E-b", "E-a", "E-a-b", "E-2a-b"]

    def test_fingerprint_table(self):
        """One row per nonzero eps."""
        from app.models.fields import get_field
        from app.services.contact import leps_fingerprint_table
        rows = leps_fingerprint_table(get_field(3), limit=0)
        assert [row["eps"] for row in rows] == [1, 2]
        assert all(row["fingerprint"]["dimension"] == 10 for row in rows)
