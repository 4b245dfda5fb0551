"""
pencil-lab - numerical experiments with hyperbolic pencils P(z) - tQ(z).

Secular-equation roots with interlacing brackets, the arrowhead determinant
representation, trace-of-exponential identities, exponential-convexity
checks and monodromy of the root branches around critical values.
"""

__version__ = '0.1.0'
