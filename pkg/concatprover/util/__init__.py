from concatprover.util.log import configure_logging, progress
from concatprover.util.numeric import decimal_floor, decimal_ceil, round_up_significant, fraction_to_str, parse_fraction

__all__ = ["configure_logging", "progress", "decimal_floor", "decimal_ceil", "round_up_significant",
           "fraction_to_str", "parse_fraction"]
