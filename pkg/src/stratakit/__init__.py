"""Components, parities and bubbling for strata of k-differentials."""

from .strata_core import Signature, Stratum, parse_orders, validate_stratum

__all__ = ["Signature", "Stratum", "parse_orders", "validate_stratum"]
__version__ = "0.1.0"
