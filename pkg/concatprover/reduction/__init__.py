from concatprover.reduction.lemma import (ReductionProblem, ReductionOutcome, Reduced, EpsilonNonpositive, Excluded,
                                          epsilon_enclosure, publish_epsilon, w_bound, exclude_by_congruence, reduce)
from concatprover.reduction.sweep import SweepRow, SweepResult, sweep

__all__ = ["ReductionProblem", "ReductionOutcome", "Reduced", "EpsilonNonpositive", "Excluded", "epsilon_enclosure",
           "publish_epsilon", "w_bound", "exclude_by_congruence", "reduce", "SweepRow", "SweepResult", "sweep"]
