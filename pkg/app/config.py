"""
Configuration management for the o(5) deformation toolkit.
Loads settings from environment variables with sensible defaults.
"""

import os
from dotenv import load_dotenv

# Load .env file if present
load_dotenv()


class Config:
    """Toolkit configuration from environment variables."""

    # ==========================================================================
    # Fields
    # ==========================================================================
    # Field order used by the CLI when --field is omitted
    DEFAULT_P3_FIELD = int(os.getenv('DEFAULT_P3_FIELD', 3))
    DEFAULT_P2_FIELD = int(os.getenv('DEFAULT_P2_FIELD', 2))

    # ==========================================================================
    # Verification
    # ==========================================================================
    SAMPLE_SEED = int(os.getenv('SAMPLE_SEED', 0))
    SAMPLE_COUNT = int(os.getenv('SAMPLE_COUNT', 20))
    MC_MAX_DEGREE = int(os.getenv('MC_MAX_DEGREE', 6))

    # ==========================================================================
    # Fingerprints
    # ==========================================================================
    # Largest q^n for which invariants enumerated over all vectors are computed
    FINGERPRINT_ENUMERATION_LIMIT = int(os.getenv('FINGERPRINT_ENUMERATION_LIMIT', 59049))

    # ==========================================================================
    # Logging
    # ==========================================================================
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

    # ==========================================================================
    # Paths
    # ==========================================================================
    BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    DATA_DIR = os.path.join(BASE_DIR, 'data')

    GOLDEN_DIR = os.getenv('GOLDEN_DIR', os.path.join(DATA_DIR, 'golden'))
    CERTIFICATES_DIR = os.getenv('CERTIFICATES_DIR', os.path.join(DATA_DIR, 'certificates'))

    @classmethod
    def default_field(cls, p: int) -> int:
        """Field order used for characteristic p when none is given."""
        if p == 3:
            return cls.DEFAULT_P3_FIELD
        if p == 2:
            return cls.DEFAULT_P2_FIELD
        return p

    @classmethod
    def validate(cls) -> list:
        """
        Validate configuration.

        Returns:
            List of validation error messages (empty if valid)
        """
        errors = []

        if not os.path.isdir(cls.GOLDEN_DIR):
            errors.append(f"GOLDEN_DIR {cls.GOLDEN_DIR} does not exist")
        elif not os.path.exists(os.path.join(cls.GOLDEN_DIR, 'SHA256SUMS')):
            errors.append("golden checksum manifest SHA256SUMS is missing")

        if cls.SAMPLE_COUNT <= 0:
            errors.append("SAMPLE_COUNT must be positive")

        if cls.MC_MAX_DEGREE < 2:
            errors.append("MC_MAX_DEGREE must be at least 2")

        return errors

    @classmethod
    def ensure_directories(cls):
        """Create required directories if they don't exist."""
        os.makedirs(cls.CERTIFICATES_DIR, exist_ok=True)
