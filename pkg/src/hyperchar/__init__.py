"""Exact and p-adic computation of finite-field hypergeometric functions."""

from .exact_arith import CycloNum
from .finite_field import FieldCtx, make_field
from .gfunc import G, GParams, g_function
from .greene import GreeneParams, greene_F
from .identities import SweepGrid, sweep
from .padic import PadicScalar, padic_gamma
from .report import Report
from .varieties import CurveInstance, count_points

__version__ = "0.1.0"

__all__ = [
    "CycloNum", "FieldCtx", "make_field", "G", "GParams", "g_function", "GreeneParams", "greene_F",
    "SweepGrid", "sweep", "PadicScalar", "padic_gamma", "Report", "CurveInstance", "count_points",
]
