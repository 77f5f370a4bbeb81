"""
Services package for the deformation toolkit.
Contains linear algebra, cohomology, Maurer-Cartan integration, the contact
realization, the counterexample and certificate emission.
"""

from app.services.linalg import PreparedSolver
from app.services.golden import GoldenStore
from app.services.cohomology import CochainComplex
from app.services.massey import MaurerCartanIntegrator
from app.services.contact import ContactRealization
from app.services.families import FamilyRegistry
from app.services.certificates import Certificate, StatementVerifier

__all__ = [
    'PreparedSolver',
    'GoldenStore',
    'CochainComplex',
    'MaurerCartanIntegrator',
    'ContactRealization',
    'FamilyRegistry',
    'Certificate',
    'StatementVerifier'
]
