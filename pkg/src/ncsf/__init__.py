"""Exact multiparameter bases of noncommutative symmetric functions."""

from .compositions import Composition, compositions_of, conjugate, omega_complement, refines
from .polyring import MPoly, RatFunc, parse_poly
from .report import Report

__all__ = [
    "Composition",
    "MPoly",
    "RatFunc",
    "Report",
    "compositions_of",
    "conjugate",
    "omega_complement",
    "parse_poly",
    "refines",
]
