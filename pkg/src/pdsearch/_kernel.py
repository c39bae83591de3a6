"""Compiled inner loops for the hill climb.

The mutating evaluation below and the pure helpers in state.py must agree
exactly; the test suite compares them proposal by proposal.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(inline="always")
def _touch(coeff, members, identity, kp, lam, mu, g, step):
    # one elementary coefficient update at g; returns the squared-deviation change
    if g == identity:
        t = kp
    elif members[g]:
        t = lam
    else:
        t = mu
    d0 = coeff[g] - t
    coeff[g] += step
    d1 = d0 + step
    return d1 * d1 - d0 * d0


@njit(inline="always")
def _retarget(coeff, identity, kp, g, t_old, t_new):
    # target change at g with coeff held fixed
    if g == identity:
        return 0
    c = coeff[g]
    d0 = c - t_old
    d1 = c - t_new
    return d1 * d1 - d0 * d0


@njit(cache=True)
def _swap_eval(mul, coeff, members, roster, skip, rem, add, identity, kp, lam, mu):
    """Mutate coeff and members from the set holding rem to the set holding add.

    The shared core is every roster slot except skip; roster itself is not
    written, so calling again with rem and add exchanged reverts exactly.
    Returns the error change.
    """
    k = roster.shape[0]
    delta = np.int64(0)
    for j in range(k):
        if j == skip:
            continue
        s = roster[j]
        delta += _touch(coeff, members, identity, kp, lam, mu, mul[rem, s], -1)
        delta += _touch(coeff, members, identity, kp, lam, mu, mul[s, rem], -1)
    delta += _touch(coeff, members, identity, kp, lam, mu, mul[rem, rem], -1)

    delta += _retarget(coeff, identity, kp, rem, lam, mu)
    delta += _retarget(coeff, identity, kp, add, mu, lam)
    members[rem] = False
    members[add] = True

    delta += _touch(coeff, members, identity, kp, lam, mu, mul[add, add], 1)
    for j in range(k):
        if j == skip:
            continue
        s = roster[j]
        delta += _touch(coeff, members, identity, kp, lam, mu, mul[add, s], 1)
        delta += _touch(coeff, members, identity, kp, lam, mu, mul[s, add], 1)
    return delta


@njit(cache=True)
def climb_random(mul, identity, kp, lam, mu, roster, members, coeff, error, alpha, rng):
    """First-improvement climb with uniform random proposals.

    Draw order is one slot index then one non-identity element per proposal;
    invalid proposals still consume a draw pair and count toward alpha.
    """
    n = mul.shape[0]
    k = roster.shape[0]
    fails = np.int64(0)
    proposals = np.int64(0)
    moves = np.int64(0)
    while error != 0 and fails < alpha:
        u = rng.integers(0, k)
        v = rng.integers(0, n - 1)
        in_ = v + 1 if v >= identity else v
        proposals += 1
        if members[in_]:
            fails += 1
            continue
        out = roster[u]
        delta = _swap_eval(mul, coeff, members, roster, u, out, in_,
                           identity, kp, lam, mu)
        if delta < 0:
            roster[u] = in_
            error += delta
            moves += 1
            fails = 0
        else:
            _swap_eval(mul, coeff, members, roster, u, in_, out,
                       identity, kp, lam, mu)
            fails += 1
    return error, proposals, moves


@njit(cache=True)
def climb_sweep(mul, identity, kp, lam, mu, roster, members, coeff, error, alpha):
    """First-improvement climb cycling through all k*(n-1) swaps in fixed order.

    With alpha >= k*(n-1), exhaustion certifies a local minimum: every swap
    was tried against the final set without finding an improvement.
    """
    n = mul.shape[0]
    k = roster.shape[0]
    cycle = k * (n - 1)
    fails = np.int64(0)
    proposals = np.int64(0)
    moves = np.int64(0)
    c = 0
    while error != 0 and fails < alpha:
        u = c // (n - 1)
        v = c % (n - 1)
        c += 1
        if c == cycle:
            c = 0
        in_ = v + 1 if v >= identity else v
        proposals += 1
        if members[in_]:
            fails += 1
            continue
        out = roster[u]
        delta = _swap_eval(mul, coeff, members, roster, u, out, in_,
                           identity, kp, lam, mu)
        if delta < 0:
            roster[u] = in_
            error += delta
            moves += 1
            fails = 0
        else:
            _swap_eval(mul, coeff, members, roster, u, in_, out,
                       identity, kp, lam, mu)
            fails += 1
    return error, proposals, moves
