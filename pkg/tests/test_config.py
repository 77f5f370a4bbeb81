"""
Tests for configuration defaults and validation.
"""


class TestConfig:
    """Tests for Config."""

    def test_default_fields(self):
        """--field defaults to the prime field."""
        from app.config import Config
        assert Config.default_field(3) == 3
        assert Config.default_field(2) == 2
        assert Config.default_field(5) == 5

    def test_validate_shipped_configuration(self):
        """The repository's golden directory passes validation."""
        from app.config import Config
        assert Config.validate() == []

    def test_validate_reports_problems(self, monkeypatch, tmp_path):
        """Missing golden data and bad counts are reported."""
        from app.config import Config
        monkeypatch.setattr(Config, 'GOLDEN_DIR', str(tmp_path / 'missing'))
        monkeypatch.setattr(Config, 'SAMPLE_COUNT', 0)
        monkeypatch.setattr(Config, 'MC_MAX_DEGREE', 1)
        errors = Config.validate()
        assert len(errors) == 3
        assert any("GOLDEN_DIR" in e for e in errors)

    def test_missing_manifest(self, monkeypatch, tmp_path):
        """A golden directory without SHA256SUMS is reported."""
        from app.config import Config
        monkeypatch.setattr(Config, 'GOLDEN_DIR', str(tmp_path))
        assert Config.validate() == ["golden checksum manifest SHA256SUMS is missing"]

    def test_ensure_directories(self):
        """The certificate directory is created on demand."""
        import os
        from app.config import Config
        Config.ensure_directories()
        assert os.path.isdir(Config.CERTIFICATES_DIR)
