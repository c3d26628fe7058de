"""Product formulas for tableau counts and the coefficients of the
pair-splitting identities.

Every formula is evaluated as a :class:`FactoredRatio` and converted to an
integer at the end, so a wrong (non-integral) evaluation fails loudly
instead of rounding.
"""

from __future__ import annotations

from .arith import FactoredRatio, binomial, factorial_ratio
from .shapes import (
    Partition,
    PartitionLike,
    StrictPartition,
    coerce_partition,
    coerce_strict,
    complement_in_rectangle,
    complement_in_staircase,
    partitions_in_box,
    staircase,
    strict_partitions_in_staircase,
    union,
)


class PartTooSmall(ValueError):
    """A prefix partition part does not clear the required threshold."""


def frobenius_young_ratio(lam: PartitionLike) -> FactoredRatio:
    """Count of standard tableaux of an ordinary shape, in factored form.

    ``|lam|! / prod((lam_i + m - i)!) * prod_{i<j}(lam_i - lam_j - i + j)``
    over the ``m`` parts of ``lam``; stable under trailing zeros.
    """
    lam = coerce_partition(lam)
    parts = lam.parts
    m = len(parts)
    ratio = factorial_ratio([lam.size], [parts[i] + m - i - 1 for i in range(m)])
    for i in range(m):
        for j in range(i + 1, m):
            ratio = ratio.times(parts[i] - parts[j] + j - i)
    return ratio


def frobenius_young(lam: PartitionLike) -> int:
    return frobenius_young_ratio(lam).to_integer()


def schur_ratio(lam: PartitionLike) -> FactoredRatio:
    """Count of standard tableaux of a shifted shape, in factored form.

    ``|lam|! / prod(lam_i!) * prod_{i<j}(lam_i - lam_j)/(lam_i + lam_j)``.
    """
    lam = coerce_strict(lam)
    parts = lam.parts
    ratio = factorial_ratio([lam.size], list(parts))
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            ratio = ratio.times(parts[i] - parts[j]).over(parts[i] + parts[j])
    return ratio


def schur_count(lam: PartitionLike) -> int:
    return schur_ratio(lam).to_integer()


def staircase_ratio(m: int) -> FactoredRatio:
    """Tableau count of the full shifted staircase with parts m..1.

    ``M! * prod_{i<m} i!/(2i+1)!`` where ``M = m(m+1)/2``.
    """
    if m < 0:
        raise ValueError(f"staircase order must be nonnegative: {m}")
    big = m * (m + 1) // 2
    return factorial_ratio(
        [big] + list(range(m)), [2 * i + 1 for i in range(m)]
    )


def staircase_count(m: int) -> int:
    return staircase_ratio(m).to_integer()


def rectangle_ratio(m: int, n: int) -> FactoredRatio:
    """Tableau count of the full ``m x n`` rectangle.

    ``(mn)! * F_m * F_n / F_{m+n}`` with ``F_k = 0! 1! ... (k-1)!``.
    """
    if m < 0 or n < 0:
        raise ValueError(f"rectangle sides must be nonnegative: {m}x{n}")
    return factorial_ratio(
        [m * n] + list(range(m)) + list(range(n)), list(range(m + n))
    )


def rectangle_count(m: int, n: int) -> int:
    return rectangle_ratio(m, n).to_integer()


def coeff_c(mu: PartitionLike, m: int, t: int) -> FactoredRatio:
    """Rational coefficient linking shifted pair products over a staircase.

    For strict ``mu`` with every part above ``m`` and any strict ``lam``
    contained in the order-``m`` staircase with ``|lam| = t``::

        g(mu | lam) * g(mu | lam_c) = coeff_c(mu, m, t) * g(lam) * g(lam_c)

    where ``|`` is part union, ``lam_c`` the staircase complement, and
    ``g`` the shifted tableau count.
    """
    mu = coerce_strict(mu)
    if mu.parts and mu.parts[-1] <= m:
        raise PartTooSmall(f"every part of {mu} must exceed {m}")
    big = m * (m + 1) // 2
    if not 0 <= t <= big:
        raise ValueError(f"need 0 <= t <= {big}, got {t}")
    u = mu.size
    return (
        schur_ratio(union(mu, staircase(m)))
        * schur_ratio(mu)
        / schur_ratio(staircase(m))
        * factorial_ratio([big, u + t, u + big - t], [u + big, u, t, big - t])
    )


def coeff_d(mu: PartitionLike, k: int, m: int, n: int, t: int) -> FactoredRatio:
    """Rational coefficient linking ordinary pair products over a rectangle.

    For ``mu`` with at most ``k`` parts and any ``lam`` inside the
    ``m x n`` box with ``|lam| = t``::

        f((mu + n^k) | lam) * f((mu + m^k) | lam_c)
            = coeff_d(mu, k, m, n, t) * f(lam) * f(lam_c)

    with ``lam_c`` the box complement and ``f`` the ordinary tableau count.
    """
    mu = coerce_partition(mu)
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if len(mu.parts) > k:
        raise ValueError(f"{mu} has more than {k} parts")
    cells = m * n
    if not 0 <= t <= cells:
        raise ValueError(f"need 0 <= t <= {cells}, got {t}")
    u = mu.size
    return (
        frobenius_young_ratio(mu + Partition((m + n,) * k))
        * frobenius_young_ratio(mu)
        * factorial_ratio(
            [u + n * k + t, u + m * k + cells - t],
            [u + (m + n) * k, u, t, cells - t],
        )
    )


def sum_identity_shifted(m: int, t: int) -> int:
    """Sum of ``g(lam) * g(lam_c)`` over strict ``lam`` in the staircase
    of order ``m`` with ``|lam| = t``.

    Equals the full staircase count for every ``t``; computed directly here
    so the equality stays a theorem to test, not an assumption.
    """
    big = m * (m + 1) // 2
    if not 0 <= t <= big:
        raise ValueError(f"need 0 <= t <= {big}, got {t}")
    total = 0
    for lam in strict_partitions_in_staircase(m, size=t):
        total += schur_count(lam) * schur_count(complement_in_staircase(lam, m))
    return total


def sum_identity_rect(m: int, n: int, t: int) -> int:
    """Sum of ``f(lam) * f(lam_c)`` over ``lam`` in the ``m x n`` box with
    ``|lam| = t``; equals the full rectangle count for every ``t``.
    """
    cells = m * n
    if not 0 <= t <= cells:
        raise ValueError(f"need 0 <= t <= {cells}, got {t}")
    total = 0
    for lam in partitions_in_box(m, n, size=t):
        total += frobenius_young(lam) * frobenius_young(
            complement_in_rectangle(lam, m, n)
        )
    return total


def binomial_convolution_lhs(t1: int, t2: int, upper: int) -> int:
    """``sum_i C(t1 + i, t1) * C(t2 + upper - i, t2)`` for ``i = 0..upper``.

    Closed form: ``C(t1 + t2 + upper + 1, t1 + t2 + 1)``; the closed form is
    what the identity tests compare against.
    """
    return sum(
        binomial(t1 + i, t1) * binomial(t2 + upper - i, t2)
        for i in range(upper + 1)
    )
