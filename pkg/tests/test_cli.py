"""
Tests for the verify_deforms command-line tool.
"""

import json


class TestCli:
    """Tests for verify_deforms.main."""

    def test_no_command(self, capsys):
        """Without a command the help is printed and the exit code is 2."""
        from verify_deforms import main
        assert main([]) == 2
        assert "usage" in capsys.readouterr().out

    def test_build(self, capsys):
        """build writes the structure constants as JSON."""
        from verify_deforms import main
        assert main(["build", "o5-p3"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["name"] == "o5-p3"
        assert len(data["basis"]) == 10

    def test_build_to_file(self, tmp_path):
        """--out writes the table to a file."""
        from verify_deforms import main
        out = tmp_path / "cyc.json"
        assert main(["build", "cyc", "--p", "3", "--a", "1", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["basis"] == ["e0", "e1", "e2", "f"]

    def test_zero_epsilon(self, capsys):
        """eps = 0 exits with 2 and explains why."""
        from verify_deforms import main
        assert main(["build", "contact-L", "--eps", "0"]) == 2
        assert "epsilon must be nonzero" in capsys.readouterr().err

    def test_verify_writes_certificate(self, tmp_path, capsys):
        """verify exits with 0 for a verified statement."""
        from verify_deforms import main
        assert main(["verify", "claim2", "--p", "3", "--out", str(tmp_path)]) == 0
        assert (tmp_path / "claim2.json").exists()
        assert "verified" in capsys.readouterr().out

    def test_h2(self, capsys):
        """h2 prints the cohomology dimensions."""
        from verify_deforms import main
        assert main(["h2", "--p", "2"]) == 0
        assert "dim H^2 = 4" in capsys.readouterr().out

    def test_massey(self, capsys):
        """massey prints the bracket of two golden cochains."""
        from verify_deforms import main
        assert main(["massey", "c0", "c6"]) == 0
        assert "[[c0, c6]]" in capsys.readouterr().out

    def test_unknown_cochain(self, capsys):
        """Golden lookups that fail exit with 2."""
        from verify_deforms import main
        assert main(["massey", "c0", "c9"]) == 2
        assert "c9" in capsys.readouterr().err

    def test_counterexample(self):
        """Claim 1 over GF(4) and Claim 2 at p = 2."""
        from verify_deforms import main
        assert main(["counterexample", "--p", "2", "--field", "4"]) == 0

    def test_field_mismatch(self, capsys):
        """GF(4) is rejected for p = 3."""
        from verify_deforms import main
        assert main(["counterexample", "--p", "3", "--field", "4"]) == 2
        assert "characteristic 3" in capsys.readouterr().err

    def test_unwritable_output(self, tmp_path, capsys):
        """An output path that cannot be created exits with 2."""
        from verify_deforms import main
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        out = blocker / "o5.json"
        assert main(["build", "o5-p3", "--out", str(out)]) == 2
        assert "❌" in capsys.readouterr().err
