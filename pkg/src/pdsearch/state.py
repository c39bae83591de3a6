"""Incremental evaluation of candidate sets through group-ring coefficients.

For a subset D of size k, coeff[g] counts the ordered pairs (d1, d2) in DxD
with d1 * d2 = g, the diagonal pairs included.  A regular partial difference
set is exactly a subset whose coefficient vector matches the target vector:
k at the identity, lam on members, mu elsewhere.  The identity target k is
what forces inverse closure, since coeff[identity] counts the members whose
inverse is also a member.  The squared deviation between the two vectors is
the error the hill climb drives to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import GroupTable
from .params import Params


@dataclass
class SearchState:
    """Mutable per-trial state: one subset plus cached coefficients and error.

    members is a boolean mask over the n elements, roster the k member
    indices in slot order.  Only apply_swap may mutate a state.
    """

    group: GroupTable
    params: Params
    members: np.ndarray
    roster: np.ndarray
    coeff: np.ndarray
    error: int

    def subset(self) -> tuple:
        """The current set as a sorted tuple of plain ints."""
        return tuple(sorted(int(g) for g in self.roster))


def target(state: SearchState, g: int) -> int:
    """The coefficient a partial difference set would put on element g."""
    if g == state.group.identity:
        return state.params.k
    return state.params.lam if state.members[g] else state.params.mu


def _target_vector(group: GroupTable, params: Params, members: np.ndarray) -> np.ndarray:
    t = np.where(members, params.lam, params.mu).astype(np.int64)
    t[group.identity] = params.k
    return t


def init_state(group: GroupTable, params: Params, subset) -> SearchState:
    """Build a state from scratch in O(k^2 + n).

    subset must hold exactly k distinct non-identity element indices.
    """
    if group.n != params.n:
        raise ValueError(f"group order {group.n} does not match params.n {params.n}")
    roster = np.fromiter((int(g) for g in subset), dtype=np.int64)
    if roster.size != params.k:
        raise ValueError(f"subset must hold exactly k={params.k} elements, got {roster.size}")
    if np.unique(roster).size != roster.size:
        raise ValueError("subset holds duplicate elements")
    if roster.min() < 0 or roster.max() >= group.n:
        raise ValueError(f"subset element outside 0..{group.n - 1}")
    if (roster == group.identity).any():
        raise ValueError("the identity element cannot be a member")

    members = np.zeros(group.n, dtype=bool)
    members[roster] = True
    prods = group.mul[np.ix_(roster, roster)]
    coeff = np.bincount(prods.ravel(), minlength=group.n).astype(np.int64)
    diffs = coeff - _target_vector(group, params, members)
    return SearchState(group, params, members, roster, coeff,
                       int((diffs * diffs).sum()))


def _check_swap(state: SearchState, out: int, in_: int) -> None:
    n = state.group.n
    if not 0 <= out < n or not 0 <= in_ < n:
        raise ValueError(f"swap pair ({out}, {in_}) outside 0..{n - 1}")
    if not state.members[out]:
        raise ValueError(f"swap-out element {out} is not in the subset")
    if in_ == state.group.identity:
        raise ValueError("cannot swap in the identity element")
    if state.members[in_]:
        raise ValueError(f"swap-in element {in_} is already in the subset")


def _swap_effects(state: SearchState, out: int, in_: int):
    """Coefficient increments for replacing out by in_: 4k+4 signed touches.

    The first 2k touches add the pairs of in_ against the old roster, the
    next 2k remove the pairs of out.  Four corrections then fix the pairs
    inside {out, in_}: (in_, in_) is missing, (out, out) was removed twice,
    and the two mixed pairs were added but belong to neither set.
    """
    mul = state.group.mul
    roster = state.roster
    k = roster.size
    idx = np.concatenate([
        mul[in_, roster], mul[roster, in_],
        mul[out, roster], mul[roster, out],
        np.array([mul[in_, in_], mul[out, out],
                  mul[in_, out], mul[out, in_]], dtype=np.int64),
    ])
    w = np.empty(idx.size, dtype=np.int64)
    w[:2 * k] = 1
    w[2 * k:4 * k] = -1
    w[4 * k:] = (1, 1, -1, -1)
    return idx, w


def _swap_delta_from_effects(state: SearchState, out: int, in_: int,
                             idx: np.ndarray, w: np.ndarray) -> int:
    pos = np.concatenate([idx, np.array([out, in_], dtype=np.int64)])
    upd = np.concatenate([w, np.zeros(2, dtype=np.int64)])
    uniq, inverse = np.unique(pos, return_inverse=True)
    dc = np.zeros(uniq.size, dtype=np.int64)
    np.add.at(dc, inverse, upd)

    lam, mu = state.params.lam, state.params.mu
    before = np.where(state.members[uniq], lam, mu).astype(np.int64)
    before[uniq == state.group.identity] = state.params.k
    after = before.copy()
    after[uniq == out] = mu
    after[uniq == in_] = lam
    after[uniq == state.group.identity] = state.params.k

    c0 = state.coeff[uniq]
    d0 = c0 - before
    d1 = c0 + dc - after
    return int((d1 * d1).sum() - (d0 * d0).sum())


def swap_delta(state: SearchState, out: int, in_: int) -> int:
    """Error change from replacing out by in_, in O(k) without mutating state."""
    _check_swap(state, out, in_)
    idx, w = _swap_effects(state, out, in_)
    return _swap_delta_from_effects(state, out, in_, idx, w)


def apply_swap(state: SearchState, out: int, in_: int) -> SearchState:
    """Commit the swap in O(k), updating coefficients, error and membership."""
    _check_swap(state, out, in_)
    idx, w = _swap_effects(state, out, in_)
    delta = _swap_delta_from_effects(state, out, in_, idx, w)
    np.add.at(state.coeff, idx, w)
    state.members[out] = False
    state.members[in_] = True
    slot = int(np.nonzero(state.roster == out)[0][0])
    state.roster[slot] = in_
    state.error += delta
    return state
