"""
Tests for statement certificates.
"""

import json

import pytest


class TestCertificates:
    """Tests for StatementVerifier and Certificate."""

    def test_claim2_certificate(self):
        """The cocycle statement verifies with its operations listed."""
        from app.services.certificates import VERIFIED, StatementVerifier
        cert = StatementVerifier().verify("claim2", p=3)
        assert cert.verdict == VERIFIED
        assert cert.verified
        assert "solve_coboundary" in cert.operations
        assert cert.evidence["L_z"] == 2
        assert cert.metadata["p"] == 3
        assert set(cert.input_checksums) == {"algebras.json", "cochains.json", "families.json"}

    def test_deterministic(self):
        """Re-running a statement reproduces the certificate byte for byte."""
        from app.services.certificates import StatementVerifier
        first = StatementVerifier().verify("claim2", p=2).dumps()
        second = StatementVerifier().verify("claim2", p=2).dumps()
        assert first == second

    def test_write(self):
        """Certificates land in the configured directory."""
        import os
        from app.config import Config
        from app.services.certificates import StatementVerifier
        cert = StatementVerifier().verify("claim2", p=2)
        path = cert.write()
        assert os.path.dirname(path) == Config.CERTIFICATES_DIR
        with open(path) as f:
            data = json.load(f)
        assert data["statement"] == "claim2"
        assert data["verdict"] == "verified"

    def test_unknown_statement(self):
        """Unknown ids raise DomainError."""
        from app.exceptions import DomainError
        from app.services.certificates import StatementVerifier
        with pytest.raises(DomainError):
            StatementVerifier().verify("thm2")

    def test_h2_p2(self):
        """dim H^2 = 4 with the four cocycles independent."""
        from app.services.certificates import StatementVerifier
        cert = StatementVerifier().verify("h2-p2")
        assert cert.verified
        assert cert.evidence["dim"] == 4
        assert cert.evidence["class_rank"] == 4
        assert cert.evidence["oracle_mismatches"] == []

    def test_claim1_p2(self):
        """The deformation is trivial over GF(2) and GF(4)."""
        from app.services.certificates import StatementVerifier
        cert = StatementVerifier().verify("claim1", p=2)
        assert cert.verified
        assert set(cert.evidence["tables"]) == {"2", "4"}

    def test_thm3(self):
        """The four-parameter family satisfies Jacobi with closed linear terms."""
        from app.services.certificates import StatementVerifier
        cert = StatementVerifier().verify("thm3")
        assert cert.verified
        assert cert.evidence["jacobi_residual"] == []

    def test_toolchain_metadata(self):
        """Metadata records versions and the field."""
        from app.models.fields import get_field
        from app.services.certificates import toolchain_metadata
        meta = toolchain_metadata(3, get_field(3, 2))
        assert meta["package_version"] == "1.0.0"
        assert meta["field"]["order"] == 9
        assert toolchain_metadata()["field"] is None

    def test_contact(self):
        """The contact realization verifies, including the sampled (eps, delta, rho)."""
        from app.services.certificates import StatementVerifier
        cert = StatementVerifier().verify("contact")
        assert cert.verified
        assert cert.evidence["parameter_sweep"]["points"] == 30
        assert cert.evidence["parameter_sweep"]["all_hold"]
        assert cert.evidence["readings"]["jacobi"] == {"add": True, "replace": True}

    def test_contact_refuted_by_broken_table(self, monkeypatch):
        """A structure tensor that is not alternating refutes the contact statement."""
        from app.services.certificates import REFUTED, StatementVerifier
        from app.services.contact import LABELS, ContactRealization
        original = ContactRealization.contact_values

        def broken(self):
            T = original(self)
            T[LABELS.index("Ea"), LABELS.index("Eb"), LABELS.index("Ea+b")] += self.field(1)
            return T

        monkeypatch.setattr(ContactRealization, "contact_values", broken)
        cert = StatementVerifier().verify("contact")
        assert cert.verdict == REFUTED
        assert not cert.evidence["parameter_sweep"]["all_hold"]
