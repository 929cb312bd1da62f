from concatprover.realexpr.nodes import (RealExpr, Integer, Alpha, Sqrt, Log, Log10, Abs, Neg, Add, Sub, Mul, Div,
                                         Pow, as_expr, rational, log, log10, sqrt, ALPHA, SQRT5, BETA, LOG_ALPHA,
                                         LN10)
from concatprover.realexpr.interval import Interval, distance_enclosure, mpf_to_fraction, fraction_to_mpf
from concatprover.realexpr.evaluate import (Ordering, IndeterminateAtPrecision, eval, compare, certify_le,
                                            certified_eval, nearest_integer_distance)
from concatprover.realexpr.parse import parse, ParseError

__all__ = ["RealExpr", "Integer", "Alpha", "Sqrt", "Log", "Log10", "Abs", "Neg", "Add", "Sub", "Mul", "Div", "Pow",
           "as_expr", "rational", "log", "log10", "sqrt", "ALPHA", "SQRT5", "BETA", "LOG_ALPHA", "LN10",
           "Interval", "distance_enclosure", "mpf_to_fraction", "fraction_to_mpf",
           "Ordering", "IndeterminateAtPrecision", "eval", "compare", "certify_le", "certified_eval",
           "nearest_integer_distance", "parse", "ParseError"]
