import math


def binom_int(k: int, t: int) -> int:
    """
    Generalized binomial k(k-1)…(k-t+1)/t! for any integer k and t >= 0.

    For negative k this is (-1)^t·C(t-k-1, t), which turns x^k·a = Σ C(k,t)δᵗ(a)x^(k-t)
    into the alternating expansion of x⁻¹a.
    """
    if t < 0:
        raise ValueError(f"lower index must be nonnegative, got {t}")
    if k >= 0:
        return math.comb(k, t)
    return (-1) ** t * math.comb(t - k - 1, t)
