from concatprover.linforms import Equation
from concatprover.search.records import SolutionRecord, Yes, No, is_fibonacci, values, records_to_table
from concatprover.search.scan import WINDOW, search_range, close_gap

__all__ = ["Equation", "SolutionRecord", "Yes", "No", "is_fibonacci", "values", "records_to_table", "WINDOW",
           "search_range", "close_gap"]
