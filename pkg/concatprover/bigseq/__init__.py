from concatprover.bigseq.sequences import SeqKind, SeqValue, SequenceTable, FIBONACCI, LUCAS, fib, lucas, table
from concatprover.bigseq.digits import DigitCount, digit_count, digit_bounds_lucas, digit_bounds_fib
from concatprover.bigseq.periodic import pisano_period, fibonacci_residues, residue_class_excludes

__all__ = ["SeqKind", "SeqValue", "SequenceTable", "FIBONACCI", "LUCAS", "fib", "lucas", "table",
           "DigitCount", "digit_count", "digit_bounds_lucas", "digit_bounds_fib",
           "pisano_period", "fibonacci_residues", "residue_class_excludes"]
