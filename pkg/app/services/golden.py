"""Golden data store.

Structure constants, transcribed cochains and family tables live as JSON
files under Config.GOLDEN_DIR next to a SHA256SUMS manifest. Every file
is checked against the manifest before it is parsed.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Dict, Optional

from app.config import Config
from app.exceptions import GoldenDataError
from app.models.algebra import LieAlgebra
from app.models.cochain import ADJOINT, Cochain, parse_cochain

logger = logging.getLogger(__name__)

MANIFEST = "SHA256SUMS"
ALGEBRAS_FILE = "algebras.json"
COCHAINS_FILE = "cochains.json"
FAMILIES_FILE = "families.json"


def sha256_file(path: Path) -> str:
    """Hex SHA-256 digest of a file."""
    digest = hashlib.sha256()
    with open(path, 'rb') as f:
        for block in iter(lambda: f.read(65536), b''):
            digest.update(block)
    return digest.hexdigest()


def swap_xy_permutation(basis) -> list:
    """Index permutation exchanging x_i and y_i, fixing h_i."""
    index = {label: i for i, label in enumerate(basis)}
    perm = []
    for label in basis:
        if label[0] in "xy":
            other = ("y" if label[0] == "x" else "x") + label[1:]
            perm.append(index[other])
        else:
            perm.append(index[label])
    return perm


_TRANSFORMS = {"swap_xy": swap_xy_permutation}


class GoldenStore:
    """Checksummed access to the frozen golden tables."""

    def __init__(self, golden_dir: Optional[str] = None, verify: bool = True):
        """
        Initialize the store.

        Args:
            golden_dir: Directory holding the JSON files and SHA256SUMS
            verify: Check every file against the manifest before reading
        """
        self.golden_dir = Path(golden_dir or Config.GOLDEN_DIR)
        self.verify = verify
        self._json: Dict[str, dict] = {}
        self._algebras: Dict[str, LieAlgebra] = {}
        self._cochains: Dict[tuple, Cochain] = {}
        self._manifest: Optional[Dict[str, str]] = None

    # ------------------------------------------------------------------
    # Files
    # ------------------------------------------------------------------
    def manifest(self) -> Dict[str, str]:
        """Expected digests keyed by file name."""
        if self._manifest is None:
            path = self.golden_dir / MANIFEST
            if not path.exists():
                raise GoldenDataError(f"checksum manifest {path} is missing")
            entries = {}
            for line in path.read_text().splitlines():
                if not line.strip():
                    continue
                digest, name = line.split(maxsplit=1)
                entries[name.strip().lstrip('*')] = digest
            self._manifest = entries
        return self._manifest

    def checksum(self, filename: str) -> str:
        path = self.golden_dir / filename
        if not path.exists():
            raise GoldenDataError(f"golden file {path} is missing")
        return sha256_file(path)

    def verify_file(self, filename: str):
        """Raise GoldenDataError unless the file matches its manifest entry."""
        expected = self.manifest().get(filename)
        if expected is None:
            raise GoldenDataError(f"{filename} has no entry in {MANIFEST}")
        actual = self.checksum(filename)
        if actual != expected:
            raise GoldenDataError(f"checksum mismatch for {filename}: "
                                  f"expected {expected[:12]}..., got {actual[:12]}...")

    def checksums(self) -> Dict[str, str]:
        """Digests of all golden files, as recorded in certificates."""
        return {name: self.checksum(name) for name in (ALGEBRAS_FILE, COCHAINS_FILE, FAMILIES_FILE)}

    def load_json(self, filename: str) -> dict:
        if filename not in self._json:
            if self.verify:
                self.verify_file(filename)
            path = self.golden_dir / filename
            if not path.exists():
                raise GoldenDataError(f"golden file {path} is missing")
            try:
                with open(path, 'r') as f:
                    self._json[filename] = json.load(f)
            except json.JSONDecodeError as exc:
                raise GoldenDataError(f"{filename} is not valid JSON: {exc}")
            logger.debug("Loaded golden file %s", filename)
        return self._json[filename]

    # ------------------------------------------------------------------
    # Algebras and cochains
    # ------------------------------------------------------------------
    def algebra(self, key: str) -> LieAlgebra:
        """The frozen algebra table stored under key ("o5-p3", "o51-p2")."""
        if key not in self._algebras:
            data = self.load_json(ALGEBRAS_FILE)
            if key not in data:
                raise GoldenDataError(f"no golden algebra named {key!r}")
            self._algebras[key] = LieAlgebra.from_json(data[key])
        return self._algebras[key]

    def cochain_names(self, algebra_key: str) -> list:
        return sorted(self.load_json(COCHAINS_FILE).get(algebra_key, {}))

    def cochain(self, algebra_key: str, name: str) -> Cochain:
        """
        Parse a transcribed cochain.

        Entries either hold a formula or point at another entry through
        "derived_from" and a named transform.
        """
        cache_key = (algebra_key, name)
        if cache_key in self._cochains:
            return self._cochains[cache_key]

        entries = self.load_json(COCHAINS_FILE).get(algebra_key)
        if entries is None or name not in entries:
            raise GoldenDataError(f"no golden cochain {name!r} for {algebra_key}")
        entry = entries[name]
        L = self.algebra(algebra_key)

        if "derived_from" in entry:
            transform = _TRANSFORMS.get(entry.get("transform"))
            if transform is None:
                raise GoldenDataError(f"{name}: unknown transform {entry.get('transform')!r}")
            source = self.cochain(algebra_key, entry["derived_from"])
            cochain = source.permute(transform(L.basis))
        else:
            cochain = parse_cochain(entry["formula"], L.basis, L.p,
                                    module=entry.get("module", ADJOINT),
                                    q=entry.get("q"), name=name)
        cochain.name = name
        self._cochains[cache_key] = cochain
        return cochain

    def family_spec(self, name: str) -> dict:
        families = self.load_json(FAMILIES_FILE)
        if name not in families:
            raise GoldenDataError(f"no golden family named {name!r}")
        return families[name]


_default_store: Optional[GoldenStore] = None


def get_store() -> GoldenStore:
    """Process-wide store over Config.GOLDEN_DIR."""
    global _default_store
    if _default_store is None or _default_store.golden_dir != Path(Config.GOLDEN_DIR):
        _default_store = GoldenStore()
    return _default_store
