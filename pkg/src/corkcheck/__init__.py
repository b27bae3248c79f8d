"""Exact verification of Alexander-polynomial and homology facts about twisted cork families."""

from .laurent import LaurentPoly, doteq, parse, to_text
from .alexander import delta_closed, alex_of_cf, conway_normalize
from .twobridge import TwoBridgeFraction, EvenContinuedFraction, classify, family_cf
from .constellation import sw_product, recover_tuple, verify_injectivity
from .homology import ChainComplex, homology_of, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "doteq",
    "parse",
    "to_text",
    "delta_closed",
    "alex_of_cf",
    "conway_normalize",
    "TwoBridgeFraction",
    "EvenContinuedFraction",
    "classify",
    "family_cf",
    "sw_product",
    "recover_tuple",
    "verify_injectivity",
    "ChainComplex",
    "homology_of",
    "smith_normal_form",
]
