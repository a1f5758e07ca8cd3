"""Multidegrees of the iterated Kapranov embedding via the asymmetric string equation.

A composition is a tuple of nonnegative ints ``(k_1, ..., k_n)`` with sum
``n``.  Positions are 1-based throughout; the lettered label ``c`` is the int
``0`` (see :mod:`lazytour.trees`), which doubles as the "no zero part"
sentinel of :func:`rightmost_zero`.
"""

from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from .trees import C


class InvalidCompositionError(ValueError):
    pass


def validate_composition(k):
    k = tuple(k)
    if any(type(x) is not int or x < 0 for x in k):
        raise InvalidCompositionError(f"parts must be nonnegative ints: {k}")
    if sum(k) != len(k):
        raise InvalidCompositionError(
            f"parts of {k} sum to {sum(k)}, expected the length {len(k)}")
    return k


def parse_composition(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return validate_composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise InvalidCompositionError(str(exc)) from None


def format_composition(k, sep=","):
    return sep.join(str(x) for x in k)


def compositions(n):
    """All weak compositions of n into n parts, lexicographically."""
    # stars and bars: bar positions among n + (n - 1) slots
    if n == 0:
        yield ()
        return
    slots = 2 * n - 1
    for bars in combinations(range(slots), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(slots - prev - 1)
        yield tuple(parts)


def rightmost_zero(k):
    """Largest position holding a zero, or ``C`` (= 0) when there is none."""
    for pos in range(len(k), 0, -1):
        if k[pos - 1] == 0:
            return pos
    return C


def ktilde(k, j):
    """Decrement ``k_j`` then delete the rightmost zero of the result."""
    k = validate_composition(k)
    i = rightmost_zero(k)
    if not (i < j <= len(k)):
        raise ValueError(f"need {i} < j <= {len(k)}, got j={j}")
    parts = list(k)
    parts[j - 1] -= 1
    del parts[rightmost_zero(parts) - 1]
    return tuple(parts)


def _multidegree(k):
    if not k:
        return 1
    i = rightmost_zero(k)
    return sum(_cached(ktilde(k, j)) for j in range(i + 1, len(k) + 1))


_cached = lru_cache(maxsize=None)(_multidegree)


def set_cache_size(maxsize):
    """Rebuild the memo table with at most ``maxsize`` entries (None = unbounded)."""
    global _cached
    _cached = lru_cache(maxsize=maxsize)(_multidegree)


def multidegree(k):
    """deg_k of the embedding: the asymmetric multinomial coefficient of k."""
    return _cached(validate_composition(k))


def multidegree_table(n):
    return {k: multidegree(k) for k in compositions(n)}


def double_factorial(m):
    return prod(range(m, 0, -2))


def total_degree(n):
    if n < 1:
        raise ValueError("n must be positive")
    return sum(multidegree(k) for k in compositions(n))


def multinomial(k):
    return factorial(sum(k)) // prod(factorial(x) for x in k)


def is_support(k):
    """True iff multidegree(k) > 0.

    The test is the reverse-Catalan condition: every suffix of ``k`` sums to
    at least its length.  Strict inequality would exclude (1, 1, ..., 1).
    """
    k = validate_composition(k)
    tail = 0
    for length, x in enumerate(reversed(k), 1):
        tail += x
        if tail < length:
            return False
    return True
