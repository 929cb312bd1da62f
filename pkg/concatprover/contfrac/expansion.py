import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from concatprover.config import resolve
from concatprover.exceptions import PrecisionExhausted
from concatprover.realexpr import as_expr, eval, IndeterminateAtPrecision

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContinuedFraction:
    """Certified prefix of the continued fraction of ``target``.

    ``quotients[j]`` is the partial quotient with index ``index_base + j``. With the default ``index_base=1``
    a target in ``(0, 1)`` starts with ``a_1 = 0``. ``index_base=0`` gives the classical ``[a_0; a_1, ...]``
    numbering. ``convergents[j]`` is ``(p, q)`` for the same index.
    """
    target: object
    quotients: tuple
    convergents: tuple
    index_base: int = 1
    precision_bits: int = 0

    def __len__(self):
        return len(self.quotients)

    @property
    def first_index(self):
        return self.index_base

    @property
    def last_index(self):
        return self.index_base + len(self.quotients) - 1

    def _position(self, index):
        pos = index - self.index_base
        if not 0 <= pos < len(self.quotients):
            raise IndexError("Index %d outside the computed range [%d, %d]." % (index, self.first_index,
                                                                                self.last_index))
        return pos

    def quotient(self, index):
        return self.quotients[self._position(index)]

    def convergent(self, index):
        return self.convergents[self._position(index)]

    def p(self, index):
        return self.convergent(index)[0]

    def q(self, index):
        return self.convergent(index)[1]

    def indices(self):
        return range(self.first_index, self.last_index + 1)

    def truncate(self, terms):
        if terms >= len(self.quotients):
            return self
        return ContinuedFraction(self.target, self.quotients[:terms], self.convergents[:terms], self.index_base,
                                 self.precision_bits)

    def value(self, index=None):
        """Exact value of the finite continued fraction up to ``index`` (default: all terms)."""
        last = self._position(self.last_index if index is None else index)
        x = Fraction(self.quotients[last])
        for a in reversed(self.quotients[:last]):
            x = a + 1 / x
        return x

    def with_base(self, index_base):
        return ContinuedFraction(self.target, self.quotients, self.convergents, index_base, self.precision_bits)


def convergents_of(quotients):
    """``(p_i, q_i)`` from the standard recurrence with seeds ``p_-1 = 1, p_-2 = 0, q_-1 = 0, q_-2 = 1``."""
    p2, p1, q2, q1 = 0, 1, 1, 0
    out = []
    for a in quotients:
        p, q = a * p1 + p2, a * q1 + q2
        out.append((p, q))
        p2, p1, q2, q1 = p1, p, q1, q
    return tuple(out)


def _certified_quotients(lo, hi, terms):
    """Partial quotients shared by every real in ``[lo, hi]``.

    A quotient ``a`` is committed only when both complete quotients lie strictly inside ``(a, a+1)``.
    """
    out = []
    x, y = lo, hi
    while len(out) < terms:
        a = floor(x)
        if floor(y) != a or x == a or y == a:
            break
        out.append(a)
        x, y = 1 / (y - a), 1 / (x - a)
    return out


def _expand_uncached(target, terms, config):
    config = resolve(config)
    prefix = []
    bits = config.start_bits
    for bits in config.ladder(start=max(config.start_bits, 8 * terms)):
        try:
            iv = eval(target, bits)
        except IndeterminateAtPrecision:
            continue
        quotients = _certified_quotients(iv.lower, iv.upper, terms)
        if len(quotients) > len(prefix):
            prefix = quotients
        if len(quotients) >= terms:
            return tuple(quotients), bits
        if iv.is_point:
            # Exact rational target, the expansion is finite.
            break
        logger.debug("expand: %d of %d quotients certified at %d bits", len(quotients), terms, bits)
    partial = ContinuedFraction(target, tuple(prefix), convergents_of(prefix), 1, bits)
    raise PrecisionExhausted("Only %d of %d partial quotients of %s could be certified." % (len(prefix), terms,
                                                                                             target),
                             bits=bits, partial=partial)


_CACHE = {}
_CACHE_LOCK = threading.Lock()


def expand(target, terms, index_base=1, config=None):
    """Certified continued fraction of ``target`` with ``terms`` partial quotients.

    Expansions are cached per target. A longer cached expansion is truncated.

    Raises:
        PrecisionExhausted: a quotient could not be certified at the precision cap. ``partial`` holds the
            certified prefix as a :class:`ContinuedFraction`.
    """
    if terms < 1:
        raise ValueError("terms must be positive, got %d." % terms)
    if index_base not in (0, 1):
        raise ValueError("index_base must be 0 or 1, got %r." % (index_base,))
    target = as_expr(target)

    with _CACHE_LOCK:
        cached = _CACHE.get(target)
    if cached is None or len(cached) < terms:
        try:
            quotients, bits = _expand_uncached(target, terms, config)
        except PrecisionExhausted as e:
            e.partial = e.partial.with_base(index_base)
            raise
        cached = ContinuedFraction(target, quotients, convergents_of(quotients), 1, bits)
        with _CACHE_LOCK:
            current = _CACHE.get(target)
            if current is None or len(current) < len(cached):
                _CACHE[target] = cached
        logger.debug("expand: %s certified to %d terms at %d bits", target, terms, bits)
    return cached.truncate(terms).with_base(index_base)


def extend(cf, terms, config=None):
    """``cf`` expanded to at least ``terms`` quotients, keeping its index base."""
    if len(cf) >= terms:
        return cf
    return expand(cf.target, terms, cf.index_base, config)
