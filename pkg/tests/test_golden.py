"""
Tests for the checksummed golden data store.
"""

import shutil

import pytest


def _copy_golden(tmp_path):
    from app.config import Config
    target = tmp_path / "golden"
    shutil.copytree(Config.GOLDEN_DIR, target)
    return target


class TestGoldenStore:
    """Tests for GoldenStore."""

    def test_manifest_lists_golden_files(self, store):
        """The manifest covers the three golden files."""
        assert set(store.manifest()) == {"algebras.json", "cochains.json", "families.json"}

    def test_files_match_manifest(self, store):
        """Shipped files match their digests."""
        for name in store.manifest():
            store.verify_file(name)

    def test_checksums(self, store):
        """checksums() agrees with the manifest."""
        assert store.checksums() == store.manifest()

    def test_tampered_file_is_rejected(self, tmp_path):
        """A modified golden file fails before it is parsed."""
        from app.exceptions import GoldenDataError
        from app.services.golden import GoldenStore

        golden = _copy_golden(tmp_path)
        path = golden / "algebras.json"
        path.write_text(path.read_text() + "\n")
        with pytest.raises(GoldenDataError, match="checksum mismatch"):
            GoldenStore(str(golden)).algebra("o5-p3")

    def test_unverified_store_reads_tampered_file(self, tmp_path):
        """verify=False skips the manifest."""
        from app.services.golden import GoldenStore

        golden = _copy_golden(tmp_path)
        path = golden / "algebras.json"
        path.write_text(path.read_text() + "\n")
        assert GoldenStore(str(golden), verify=False).algebra("o5-p3").dim == 10

    def test_missing_manifest(self, tmp_path):
        """A store without SHA256SUMS refuses to load."""
        from app.exceptions import GoldenDataError
        from app.services.golden import GoldenStore

        golden = _copy_golden(tmp_path)
        (golden / "SHA256SUMS").unlink()
        with pytest.raises(GoldenDataError, match="missing"):
            GoldenStore(str(golden)).cochain("o5-p3", "c6")

    def test_unknown_names(self, store):
        """Unknown algebras, cochains and families raise GoldenDataError."""
        from app.exceptions import GoldenDataError
        with pytest.raises(GoldenDataError):
            store.algebra("o7-p5")
        with pytest.raises(GoldenDataError):
            store.cochain("o5-p3", "c9")
        with pytest.raises(GoldenDataError):
            store.family_spec("thm2")

    def test_cochain_is_cached_and_named(self, store):
        """Parsed cochains keep their golden name."""
        c6 = store.cochain("o5-p3", "c6")
        assert c6 is store.cochain("o5-p3", "c6")
        assert c6.name == "c6"
        assert c6.q == 2
        assert len(c6) == 3

    def test_derived_cochain(self, store):
        """c_m4 is c4 with x and y exchanged."""
        c4 = store.cochain("o51-p2", "c4")
        c_m4 = store.cochain("o51-p2", "c_m4")
        L = store.algebra("o51-p2")
        index = {label: i for i, label in enumerate(L.basis)}
        assert (index["h1"], (index["x2"], index["x4"])) in c_m4.terms
        assert len(c_m4) == len(c4)

    def test_swap_permutation(self):
        """swap_xy exchanges x_i and y_i and fixes h_i."""
        from app.services.golden import swap_xy_permutation
        basis = ["h1", "h2", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"]
        assert swap_xy_permutation(basis) == [0, 1, 6, 7, 8, 9, 2, 3, 4, 5]
