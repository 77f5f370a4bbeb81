"""
Models package for the deformation toolkit.
Contains fields, algebras, cochains, divided powers and deformation families.
"""

from app.models.polys import ParamPoly
from app.models.algebra import LieAlgebra
from app.models.cochain import Cochain, parse_cochain
from app.models.divided_powers import DividedPowerSpace, DividedPowerElement
from app.models.family import DeformationFamily

__all__ = [
    'ParamPoly',
    'LieAlgebra',
    'Cochain',
    'parse_cochain',
    'DividedPowerSpace',
    'DividedPowerElement',
    'DeformationFamily'
]
