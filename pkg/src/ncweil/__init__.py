"""Exact symbolic kernel for twist-deformed equivariant cohomology models.

Subpackages/modules:

* ``scalars``    -- Gaussian-rational coefficients, truncated theta-series
* ``liealg``     -- structure constants, quadratic forms, algebra presets
* ``pbw``        -- normal-form arithmetic in super enveloping algebras
* ``tensorsq``   -- graded tensor powers of those algebras
* ``hopf``       -- coproducts, antipodes, abelian twists, braidings
* ``gda``        -- weight-graded differential algebras and star products
* ``weil``       -- the three Weil algebras and their generator calculus
* ``complexes``  -- Weil/BRST/Cartan complexes, window solvers, ranks
* ``cli``        -- command-line entry point (``ncweil``)
"""

__version__ = "0.1.0"

from .scalars import BACKEND as scalar_backend  # noqa: F401
