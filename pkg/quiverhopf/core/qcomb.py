# quiverhopf/core/qcomb.py
import logging
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Optional, Sequence, Tuple

from quiverhopf import config
from quiverhopf.core.scalar import Scalar
from quiverhopf.exceptions import BoundExceededError, PreconditionError

# Configure logger
logger = logging.getLogger(__name__)

GAUSS = "gauss"
SYMMETRIC = "symmetric"
CONVENTIONS = (GAUSS, SYMMETRIC)


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"Unknown q-integer convention: {convention}. Valid values: 'gauss', 'symmetric'")


def evaluate_polynomial(coefficients: Sequence[int], q: Scalar) -> Scalar:
    """Evaluates sum(c_k q**k) by Horner's rule; coefficients are lowest degree first."""
    result = Scalar.zero()
    for c in reversed(coefficients):
        result = result * q + c
    return result


def q_integer(n: int, q: Scalar, convention: str = GAUSS) -> Scalar:
    """
    The q-integer in either convention, computed in polynomial (Laurent) form.

    gauss:     (n)_q = 1 + q + ... + q**(n-1)
    symmetric: [n]_q = q**(n-1) + q**(n-3) + ... + q**(1-n)

    Args:
        n (int): Nonnegative integer.
        q (Scalar): The parameter.
        convention (str): 'gauss' or 'symmetric'.

    Returns:
        Scalar: The q-integer.
    """
    _check_convention(convention)
    if n < 0:
        raise ValueError(f"q-integers are defined for n >= 0, got {n}")
    q = Scalar.coerce(q)
    if convention == GAUSS:
        return evaluate_polynomial([1] * n, q)
    if n == 0:
        return Scalar.zero()
    # [n]_q = q**(1-n) * (n)_{q**2}
    return q ** (1 - n) * evaluate_polynomial([1] * n, q * q)


def q_factorial(n: int, q: Scalar, convention: str = GAUSS) -> Scalar:
    """Product of the q-integers 1..n; the empty product is 1."""
    _check_convention(convention)
    if n < 0:
        raise ValueError(f"q-factorials are defined for n >= 0, got {n}")
    result = Scalar.one()
    for i in range(1, n + 1):
        result = result * q_integer(i, q, convention)
    return result


@lru_cache(maxsize=None)
def gaussian_binomial_coefficients(n: int, i: int) -> Tuple[int, ...]:
    """
    Integer coefficients (lowest degree first) of the Gaussian binomial (n i)_q,
    built with the q-Pascal recurrence (n i) = (n-1 i-1) + q**i (n-1 i).
    """
    if not 0 <= i <= n:
        raise ValueError(f"q-binomial index out of range: i = {i}, n = {n}")
    if i == 0 or i == n:
        return (1,)
    lower = gaussian_binomial_coefficients(n - 1, i - 1)
    upper = gaussian_binomial_coefficients(n - 1, i)
    size = i * (n - i) + 1
    coefficients = [0] * size
    for k, c in enumerate(lower):
        coefficients[k] += c
    for k, c in enumerate(upper):
        coefficients[k + i] += c
    return tuple(coefficients)


def q_binomial(n: int, i: int, q: Scalar, convention: str = GAUSS) -> Scalar:
    """
    The Gaussian (or symmetric) q-binomial coefficient.

    Evaluation goes through the polynomial recurrence, so roots of unity are safe
    even where the factorial quotient would be 0/0.

    Raises:
        ValueError: If i is outside 0..n.
    """
    _check_convention(convention)
    coefficients = gaussian_binomial_coefficients(n, i)
    q = Scalar.coerce(q)
    if convention == GAUSS:
        return evaluate_polynomial(coefficients, q)
    # [n i]_q = q**(-i(n-i)) (n i)_{q**2}
    return q ** (-i * (n - i)) * evaluate_polynomial(coefficients, q * q)


def inversion_count(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j]; perm is a permutation of 1..n."""
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise PreconditionError(f"{tuple(perm)} is not a permutation of 1..{len(perm)}")
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


@lru_cache(maxsize=None)
def _histogram(m: int) -> Tuple[int, ...]:
    counts = [0] * (comb(m, 2) + 1)
    for perm in permutations(range(1, m + 1)):
        counts[inversion_count(perm)] += 1
    logger.debug(f"Inversion histogram of S_{m}: {counts}")
    return tuple(counts)


def inversion_histogram(m: int, bound: Optional[int] = None) -> Tuple[int, ...]:
    """
    Counts the permutations of S_m by number of inversions, by full enumeration.

    Returns:
        Tuple[int, ...]: counts[k] = |{sigma : tau(sigma) = k}|.

    Raises:
        BoundExceededError: If m exceeds the permutation bound.
    """
    bound = config.PERMUTATION_BOUND if bound is None else bound
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if m > bound:
        logger.error(f"Permutation enumeration refused for m = {m}")
        raise BoundExceededError("m", m, bound)
    return _histogram(m)


def s_m_polynomial(m: int, q: Scalar, bound: Optional[int] = None) -> Scalar:
    """S_m(q): the sum of q**tau(sigma) over all permutations sigma of S_m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return evaluate_polynomial(inversion_histogram(m, bound), Scalar.coerce(q))
