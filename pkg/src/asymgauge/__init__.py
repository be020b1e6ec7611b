"""Exact computations with polyhedral asymmetric norms.

The unit ball of an asymmetric norm may be unbounded; its recession cone is the
zero cone ``theta``.  This package evaluates gauges, symmetrizations, the
canonical 1-bounded norm, right-boundedness and equivalence constants, all in
rational arithmetic, and reproduces a few analytic (non-polyhedral) examples.
"""

from .asymnorm import (
    AsymNorm,
    analyze,
    canonical_qp,
    equivalent,
    gauge,
    right_bounded,
    strongly_compact,
    symmetrize,
)
from .kernel import Rat, lp_solve, rat
from .polyhedra import HPoly, PCone, VPoly, dd_convert

__version__ = "0.1.0"

__all__ = [
    "AsymNorm",
    "HPoly",
    "PCone",
    "Rat",
    "VPoly",
    "analyze",
    "canonical_qp",
    "dd_convert",
    "equivalent",
    "gauge",
    "lp_solve",
    "rat",
    "right_bounded",
    "strongly_compact",
    "symmetrize",
]
