import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class ProverConfig:
    """Precision and runtime settings shared by the certified operations.

    Attributes:
        start_bits: first rung of the precision ladder.
        precision_cap: last rung of the precision ladder. Reaching it raises
            :class:`PrecisionExhausted <concatprover.PrecisionExhausted>`.
        sweep_start_margin: bits added to ``q.bit_length()`` when a reduction evaluates ``mu*q``.
        progress: show tqdm progress bars in long loops.
        retry_convergents: further convergents tried by ``reduce`` when epsilon is not positive.
        epsilon_digits: significant digits kept when epsilon lower bounds are published.
        workers: processes used by reduction sweeps. 0 reduces every point in-process.
        sweep_chunk: grid points sent to a worker at a time.
    """
    start_bits: int = 128
    precision_cap: int = 1_048_576
    sweep_start_margin: int = 64
    progress: bool = True
    retry_convergents: int = 5
    epsilon_digits: int = 12
    workers: int = 0
    sweep_chunk: int = 256

    def __post_init__(self):
        if self.start_bits < 16:
            raise ValueError("start_bits must be at least 16.")
        if self.precision_cap < self.start_bits:
            raise ValueError("precision_cap must not be smaller than start_bits.")
        if self.retry_convergents < 0:
            raise ValueError("retry_convergents must be non-negative.")
        if self.epsilon_digits < 1:
            raise ValueError("epsilon_digits must be positive.")
        if self.workers < 0:
            raise ValueError("workers must be non-negative.")
        if self.sweep_chunk < 1:
            raise ValueError("sweep_chunk must be positive.")

    @classmethod
    def default(cls):
        return _DEFAULT

    def with_overrides(self, **kwargs):
        names = {f.name for f in dataclasses.fields(self)}
        unknown = set(kwargs) - names
        if unknown:
            raise ValueError("Unknown configuration keys: " + ", ".join(sorted(unknown)))
        return dataclasses.replace(self, **kwargs)

    def ladder(self, start=None, cap=None):
        """Precision rungs from ``start`` (default ``start_bits``) doubling up to ``cap``."""
        cap = self.precision_cap if cap is None else cap
        bits = min(self.start_bits if start is None else start, cap)
        while True:
            yield bits
            if bits >= cap:
                return
            bits = min(2 * bits, cap)


_DEFAULT = ProverConfig()


def resolve(config):
    return _DEFAULT if config is None else config
