from concatprover.linforms.quadratic import QuadraticNumber, GOLDEN, ROOT5, mahler_measure, exact_height
from concatprover.linforms.heights import (AlgebraicExpr, Rat, SeqTerm, Sum, Difference, Product, Quotient, Power,
                                           ALPHA, SQRT5, HeightBound, as_algebraic, height)
from concatprover.linforms.matveev import (Equation, LinearForm, LinearFormInstance, FIB_LUCAS_TWO_TERM,
                                           FIB_LUCAS_THREE_TERM, LUCAS_FIB_TWO_TERM, LUCAS_FIB_THREE_TERM,
                                           LINEAR_FORMS, linear_form, lambda_instance, replay_witness,
                                           verify_instance, matveev_constant, matveev_exponent,
                                           matveev_coefficient, additive_term, CoefficientCheck, check_coefficient,
                                           exp_exact)
from concatprover.linforms.bounds import (BoundInequality, SolvedBound, solve_bound, propagate_bound, satisfies,
                                          certifies)

__all__ = ["QuadraticNumber", "GOLDEN", "ROOT5", "mahler_measure", "exact_height",
           "AlgebraicExpr", "Rat", "SeqTerm", "Sum", "Difference", "Product", "Quotient", "Power", "ALPHA", "SQRT5",
           "HeightBound", "as_algebraic", "height",
           "Equation", "LinearForm", "LinearFormInstance", "FIB_LUCAS_TWO_TERM", "FIB_LUCAS_THREE_TERM",
           "LUCAS_FIB_TWO_TERM", "LUCAS_FIB_THREE_TERM", "LINEAR_FORMS", "linear_form", "lambda_instance",
           "replay_witness", "verify_instance", "matveev_constant", "matveev_exponent", "matveev_coefficient",
           "additive_term", "CoefficientCheck", "check_coefficient", "exp_exact",
           "BoundInequality", "SolvedBound", "solve_bound", "propagate_bound", "satisfies", "certifies"]
