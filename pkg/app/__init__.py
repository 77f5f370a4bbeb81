"""
o5-deformations - deformations of the orthogonal Lie algebra o(5) in
characteristics 3 and 2, verified by exact computation over finite fields.
"""

__version__ = "1.0.0"
