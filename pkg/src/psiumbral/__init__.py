"""Exact psi-extended umbral calculus over the field Q(q)."""

from .errors import PsiUmbralError
from .opalg import Indicator
from .poly import BiPoly, Poly
from .psi import PsiSequence, classical, custom, load_custom, parse_psi, q_natural, r_deformed
from .scalar import Q, Scalar
from .sequences import PolySeq

__version__ = "0.1.0"
