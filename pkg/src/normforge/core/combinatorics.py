"""
組合せ計算カーネル

多倍長整数の二項係数、区間恒等式の両辺評価、
階乗のスターリング評価を提供します。浮動小数点は factorial_bounds のみで使用します。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import DomainError, NumericRangeError

# 個数は Python の int（多倍長）、比は既約分数で扱う
BigCount = int
ExactRatio = Fraction


@dataclass(frozen=True)
class IdentityCheck:
    """恒等式の両辺と一致判定"""
    lhs: BigCount
    rhs: BigCount

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "equal": self.holds}


def count_sub(a: BigCount, b: BigCount) -> BigCount:
    """非負整数の減算（負になる場合は DomainError）"""
    if b > a:
        raise DomainError(f"非負整数の減算でアンダーフローしました: {a} - {b}")
    return a - b


def binomial(n: int, k: int) -> BigCount:
    """二項係数 C(n,k)。k > n のときは 0"""
    if n < 0 or k < 0:
        raise DomainError(f"二項係数の引数は非負整数です: C({n},{k})")
    return math.comb(n, k)


def verify_identity_A(k: int, a: int, b: int) -> IdentityCheck:
    """
    交代和の恒等式
    Σ_{i=1..k} (-1)^{i-1} C(k-1,i-1) C(a-i,b) = C(a-k, b-k+1)
    """
    if min(k, a, b) < 1 or not (k - 1 <= b <= a - k):
        raise DomainError(f"前提条件 k-1 <= b <= a-k を満たしません: k={k}, a={a}, b={b}")
    lhs = sum(
        (-1) ** (i - 1) * binomial(k - 1, i - 1) * binomial(a - i, b)
        for i in range(1, k + 1)
    )
    return IdentityCheck(lhs=lhs, rhs=binomial(a - k, b - k + 1))


def verify_identity_B(k: int, a: int, b: int) -> IdentityCheck:
    """
    累積和の恒等式
    Σ_{i=1..k} (-1)^{i-1} C(k,i) C(a-i,b) = Σ_{i=1..k} C(a-i, b-i+1)
    """
    if min(k, a, b) < 1 or not (k - 1 <= b and b + k <= a):
        raise DomainError(f"前提条件 k-1 <= b, b+k <= a を満たしません: k={k}, a={a}, b={b}")
    lhs = sum(
        (-1) ** (i - 1) * binomial(k, i) * binomial(a - i, b)
        for i in range(1, k + 1)
    )
    rhs = sum(binomial(a - i, b - i + 1) for i in range(1, k + 1))
    return IdentityCheck(lhs=lhs, rhs=rhs)


def partial_count(N: int, n: int) -> Tuple[BigCount, BigCount]:
    """N 上の n 値部分関数の個数を二通りに数える: (Σ C(N,i) n^i, (n+1)^N)"""
    if N < 1 or n < 1:
        raise DomainError(f"N と n は正の整数です: N={N}, n={n}")
    by_domain = sum(binomial(N, i) * n ** i for i in range(N + 1))
    return by_domain, (n + 1) ** N


def pascal_holds(c: int, d: int) -> bool:
    """C(c,d) + C(c,d+1) = C(c+1,d+1)"""
    return binomial(c, d) + binomial(c, d + 1) == binomial(c + 1, d + 1)


def verify_complement_sum(G: int, H: int, k: int) -> IdentityCheck:
    """C(G,H) - C(G-k,H-k) = Σ_{i=1..k} C(G-i, H-i+1)（0 <= k <= H <= G）"""
    if not (0 <= k <= H <= G):
        raise DomainError(f"前提条件 0 <= k <= H <= G を満たしません: G={G}, H={H}, k={k}")
    lhs = binomial(G, H) - binomial(G - k, H - k)
    rhs = sum(binomial(G - i, H - i + 1) for i in range(1, k + 1))
    return IdentityCheck(lhs=lhs, rhs=rhs)


def factorial_bounds(m: int) -> Tuple[float, float]:
    """
    スターリング型の階乗評価

    (√(2π)·m^{m+1/2}·e^{-m}, e·m^{m+1/2}·e^{-m}) を返します。
    対数空間で評価し、float の範囲を超える場合は NumericRangeError。
    """
    if m < 1:
        raise DomainError(f"m は正の整数です: m={m}")
    log_core = (m + 0.5) * math.log(m) - m
    try:
        lower = math.exp(0.5 * math.log(2 * math.pi) + log_core)
        upper = math.exp(1.0 + log_core)
    except OverflowError as e:
        raise NumericRangeError(f"階乗評価が float の範囲を超えました: m={m}") from e
    return lower, upper


def sandwiches_factorial(m: int, rel_tol: float = 1e-9) -> bool:
    """lower <= m! <= upper を相対誤差 rel_tol で判定"""
    lower, upper = factorial_bounds(m)
    exact = math.factorial(m)
    return lower <= exact * (1 + rel_tol) and exact <= upper * (1 + rel_tol)
