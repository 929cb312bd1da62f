import numpy as np
import mpmath

from concatprover import ProverConfig

QUIET = ProverConfig(progress=False)


def fib_matrix(n):
    """F_n from the power of [[1, 1], [1, 0]]."""
    def mul(a, b):
        return ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
                (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))

    result, base = ((1, 0), (0, 1)), ((1, 1), (1, 0))
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result[0][1]


def random_indices(size, high, seed=0):
    np.random.seed(seed)
    return np.random.randint(0, high, size=size).tolist()


def mp_tau(dps=80):
    with mpmath.workdps(dps):
        return mpmath.log(10) / mpmath.log((1 + mpmath.sqrt(5)) / 2)


def mp_cfrac(x, terms, dps=200):
    """Continued fraction quotients of an mpmath value at ``dps`` digits."""
    out = []
    with mpmath.workdps(dps):
        for _ in range(terms):
            a = int(mpmath.floor(x))
            out.append(a)
            x = 1 / (x - a)
    return out
