"""Hill-climb trials over k-subsets, restart schedules and parallel execution.

Each trial is a pure function of (group, params, config, trial_index): the
trial seed is base_seed + trial_index, so any execution order, worker count
or stop mode reproduces identical per-trial results.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from . import _kernel
from .groups import GroupTable
from .params import Params
from .state import SearchState, init_state

STOP_FIRST = "first-hit"
STOP_ALL = "collect-all"
PROPOSE_RANDOM = "random"
PROPOSE_SWEEP = "sweep"

CONVERGED_ZERO = "zero-error"
CONVERGED_ALPHA = "alpha-exhaustion"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for a batch of trials.

    alpha is the number of consecutive non-improving proposals that ends a
    trial; None means the default (n-1)*k.  Invalid proposals count.
    """

    alpha: Optional[int] = None
    max_trials: int = 1000
    base_seed: int = 0
    stop_mode: str = STOP_FIRST
    worker_count: int = 1
    proposal_mode: str = PROPOSE_RANDOM

    def __post_init__(self):
        if self.alpha is not None and self.alpha < 1:
            raise ValueError(f"alpha must be >= 1, got {self.alpha}")
        if self.max_trials < 0:
            raise ValueError(f"max_trials must be >= 0, got {self.max_trials}")
        if self.base_seed < 0:
            raise ValueError(f"base_seed must be >= 0, got {self.base_seed}")
        if self.stop_mode not in (STOP_FIRST, STOP_ALL):
            raise ValueError(f"unknown stop_mode {self.stop_mode!r}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")
        if self.proposal_mode not in (PROPOSE_RANDOM, PROPOSE_SWEEP):
            raise ValueError(f"unknown proposal_mode {self.proposal_mode!r}")


@dataclass(frozen=True)
class TrialResult:
    """Outcome of one seeded trial; final_set is sorted and 0-indexed."""

    trial_index: int
    seed: int
    final_error: int
    final_set: tuple
    proposals_made: int
    improving_moves: int
    converged_by: str

    @property
    def hit(self) -> bool:
        return self.final_error == 0


@dataclass(frozen=True)
class SearchSummary:
    """Aggregate outcome of run_search."""

    trials_used: int
    hit_count: int
    wall_time_s: float


class Proposal(NamedTuple):
    out: int
    in_: int
    valid: bool


def default_alpha(group: GroupTable, params: Params) -> int:
    """The recommended convergence threshold: one full neighbourhood, (n-1)*k."""
    return (group.n - 1) * params.k


def propose_swap(state: SearchState, rng: np.random.Generator) -> Proposal:
    """Draw one candidate swap: a uniform roster slot out, a uniform
    non-identity element in.  A proposal whose in-element is already a
    member is flagged invalid rather than raised."""
    u = int(rng.integers(0, state.params.k))
    v = int(rng.integers(0, state.group.n - 1))
    in_ = v + 1 if v >= state.group.identity else v
    out = int(state.roster[u])
    return Proposal(out, in_, not bool(state.members[in_]))


def random_subset(group: GroupTable, params: Params, rng: np.random.Generator) -> np.ndarray:
    """A uniform k-subset of the non-identity elements."""
    return rng.choice(group.nonidentity(), size=params.k, replace=False)


def hill_climb(state: SearchState, alpha: int,
               rng: Optional[np.random.Generator] = None,
               proposal_mode: str = PROPOSE_RANDOM) -> Tuple[int, int]:
    """Climb a state in place until zero error or alpha consecutive
    non-improving proposals; returns (proposals_made, improving_moves).

    Only strictly improving swaps are taken.  Sweep mode needs no rng and
    tries every swap in a fixed cycle, so exhaustion with
    alpha >= (n-1)*k certifies a local minimum.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    g = state.group
    p = state.params
    if proposal_mode == PROPOSE_SWEEP:
        error, proposals, moves = _kernel.climb_sweep(
            g.mul, g.identity, p.k, p.lam, p.mu,
            state.roster, state.members, state.coeff, state.error, alpha)
    elif proposal_mode == PROPOSE_RANDOM:
        if rng is None:
            raise ValueError("random proposal mode needs an rng")
        error, proposals, moves = _kernel.climb_random(
            g.mul, g.identity, p.k, p.lam, p.mu,
            state.roster, state.members, state.coeff, state.error, alpha, rng)
    else:
        raise ValueError(f"unknown proposal_mode {proposal_mode!r}")
    state.error = int(error)
    return int(proposals), int(moves)


def run_trial(group: GroupTable, params: Params, config: SearchConfig,
              trial_index: int) -> TrialResult:
    """One seeded climb from a fresh uniform starting subset."""
    seed = config.base_seed + trial_index
    rng = np.random.default_rng(seed)
    state = init_state(group, params, random_subset(group, params, rng))
    alpha = config.alpha if config.alpha is not None else default_alpha(group, params)
    proposals, moves = hill_climb(state, alpha, rng=rng,
                                  proposal_mode=config.proposal_mode)
    return TrialResult(
        trial_index=trial_index,
        seed=seed,
        final_error=state.error,
        final_set=state.subset(),
        proposals_made=proposals,
        improving_moves=moves,
        converged_by=CONVERGED_ZERO if state.error == 0 else CONVERGED_ALPHA,
    )


_worker_group: Optional[GroupTable] = None
_worker_params: Optional[Params] = None
_worker_config: Optional[SearchConfig] = None


def _worker_init(group: GroupTable, params: Params, config: SearchConfig) -> None:
    global _worker_group, _worker_params, _worker_config
    _worker_group = group
    _worker_params = params
    _worker_config = config


def _worker_trial(trial_index: int) -> TrialResult:
    return run_trial(_worker_group, _worker_params, _worker_config, trial_index)


def _run_serial(group, params, config) -> List[TrialResult]:
    results = []
    for t in range(config.max_trials):
        result = run_trial(group, params, config, t)
        results.append(result)
        if result.hit and config.stop_mode == STOP_FIRST:
            break
    return results


def _run_parallel(group, params, config) -> List[TrialResult]:
    # Sliding window of single-trial futures: at most worker_count trials are
    # ever in flight, which bounds the overshoot after a first-hit stop.
    results = []
    hit_seen = False
    next_trial = 0
    with ProcessPoolExecutor(max_workers=config.worker_count,
                             initializer=_worker_init,
                             initargs=(group, params, config)) as pool:
        pending = set()
        while next_trial < config.max_trials and len(pending) < config.worker_count:
            pending.add(pool.submit(_worker_trial, next_trial))
            next_trial += 1
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                result = fut.result()
                results.append(result)
                if result.hit:
                    hit_seen = True
            stop = hit_seen and config.stop_mode == STOP_FIRST
            while not stop and next_trial < config.max_trials and len(pending) < config.worker_count:
                pending.add(pool.submit(_worker_trial, next_trial))
                next_trial += 1
    results.sort(key=lambda r: r.trial_index)
    return results


def run_search(group: GroupTable, params: Params,
               config: SearchConfig) -> Tuple[List[TrialResult], SearchSummary]:
    """Run up to max_trials independent trials, serially or across processes.

    In first-hit mode the batch stops once a zero-error trial is seen;
    trials already in flight still complete and are reported.  In
    collect-all mode every trial runs and the result list is identical for
    every worker count.
    """
    if group.n != params.n:
        raise ValueError(f"group order {group.n} does not match params.n {params.n}")
    start = time.perf_counter()
    if config.worker_count == 1 or config.max_trials <= 1:
        results = _run_serial(group, params, config)
    else:
        results = _run_parallel(group, params, config)
    wall = time.perf_counter() - start
    hit_count = sum(1 for r in results if r.hit)
    return results, SearchSummary(trials_used=len(results), hit_count=hit_count,
                                  wall_time_s=wall)


def schedule_preset(n: int, k: int, srg_known: bool = True) -> Optional[List[int]]:
    """Trial budgets per restart pass for a group of order n, or None when
    no preset covers the request.

    Above order 144 the presets target orders where strong regularity of
    the parameters is still unsettled, so srg_known=True disables them.
    """
    if n < 2:
        raise ValueError(f"group order must be >= 2, got {n}")
    if n < 144:
        return [5 * n * n]
    if n == 144:
        if k < 34:
            return [n * n]
        return [n * n, 2 * n * n, 2 * n * n]
    if srg_known:
        return None
    if 145 <= n < 162:
        return [2 * n * n]
    if 162 <= n < 186:
        return [2 * n * n, 2 * n * n]
    if 186 <= n < 239 and n not in (216, 217):
        return [2 * n * n]
    return None
