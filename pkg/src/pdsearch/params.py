"""Parameter quadruples (n, k, lam, mu) and strongly-regular feasibility screening."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import List, Union


@dataclass(frozen=True)
class Params:
    """The shared parameter quadruple of a partial difference set and its Cayley graph.

    n is the group order, k the set size and graph degree, lam the number of
    common neighbours of adjacent vertices, mu of non-adjacent ones.
    """

    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        for name in ("n", "k", "lam", "mu"):
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.n < 2:
            raise ValueError(f"group order must be >= 2, got {self.n}")
        if not 1 <= self.k < self.n:
            raise ValueError(f"set size must satisfy 1 <= k < n, got k={self.k}, n={self.n}")
        if not 0 <= self.lam < self.k:
            raise ValueError(f"lam must satisfy 0 <= lam < k, got lam={self.lam}, k={self.k}")
        if not 0 <= self.mu <= self.k:
            raise ValueError(f"mu must satisfy 0 <= mu <= k, got mu={self.mu}, k={self.k}")

    def complement(self) -> "Params":
        """Parameters of the complementary set G minus the identity and D."""
        n, k, lam, mu = self.n, self.k, self.lam, self.mu
        return Params(n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lam)


@dataclass(frozen=True)
class FeasibleParams:
    """A quadruple that passed screening, with its eigenvalue multiplicities."""

    params: Params
    m_plus: int
    m_minus: int
    conference: bool


def check_feasible(params: Params) -> Union[FeasibleParams, str]:
    """Screen a quadruple against the arithmetic conditions a primitive
    strongly regular graph must satisfy: connectivity of the graph and its
    complement, the counting identity, and integral nonnegative eigenvalue
    multiplicities, with the conference case handled separately.

    Returns FeasibleParams on success, otherwise a string naming the first
    violated condition.  All arithmetic is exact integer arithmetic.
    """
    n, k, lam, mu = params.n, params.k, params.lam, params.mu
    if k > n - 2:
        return f"k must be <= n-2 for a non-complete graph, got k={k}, n={n}"
    if mu < 1:
        return f"mu must be >= 1 for a connected graph, got mu={mu}"
    if n - 2 * k + lam < 1:
        return (f"complement graph is disconnected: its mu would be "
                f"n-2k+lam = {n - 2 * k + lam}")
    if n - 2 - 2 * k + mu < 0:
        return (f"two non-adjacent vertices cover 2k-mu = {2 * k - mu} "
                f"neighbours but only {n - 2} other vertices exist")
    lhs = k * (k - lam - 1)
    rhs = (n - k - 1) * mu
    if lhs != rhs:
        return f"counting identity fails: k(k-lam-1)={lhs} but (n-k-1)mu={rhs}"

    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = isqrt(disc)
    conference = lam - mu == -1 and 2 * k == n - 1
    if root * root == disc and root > 0:
        num = 2 * k + (n - 1) * (lam - mu)
        if num % root == 0:
            q = num // root
            if (n - 1 - q) % 2 == 0:
                m_plus = (n - 1 - q) // 2
                m_minus = (n - 1 + q) // 2
                if m_plus >= 0 and m_minus >= 0:
                    return FeasibleParams(params, m_plus, m_minus, conference)
    if conference and n % 4 == 1:
        half = (n - 1) // 2
        return FeasibleParams(params, half, half, True)
    return "eigenvalue multiplicities are not nonnegative integers"


def enumerate_feasible(n: int, primitive_only: bool = False) -> List[FeasibleParams]:
    """All screened quadruples for a group of order n, ordered by (k, lam, mu).

    The full list is closed under complementation; primitive_only restricts
    it to k <= (n-1)/2.
    """
    found: List[FeasibleParams] = []
    if n < 5:
        return found
    k_max = (n - 1) // 2 if primitive_only else n - 2
    for k in range(1, k_max + 1):
        rest = n - k - 1
        for lam in range(0, k):
            num = k * (k - lam - 1)
            if num % rest:
                continue
            mu = num // rest
            if not 1 <= mu <= k:
                continue
            result = check_feasible(Params(n, k, lam, mu))
            if isinstance(result, FeasibleParams):
                found.append(result)
    return found
