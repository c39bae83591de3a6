"""
Hill climbing for a partial difference set
==========================================

"""

from pdsearch import (Params, SearchConfig, cyclic_group, default_alpha,
                      run_search)

# the quadratic residues of Z13 form a (13, 6, 2, 3) PDS; random-restart
# hill climbing rediscovers such a set from scratch
group = cyclic_group(13)
params = Params(13, 6, 2, 3)

print("give-up threshold alpha =", default_alpha(group, params),
      "consecutive failed proposals")

config = SearchConfig(max_trials=500, base_seed=0, stop_mode="collect-all")
results, summary = run_search(group, params, config)

print(f"trials: {summary.trials_used}, hits: {summary.hit_count}")
for r in results[:5]:
    print(f"  trial {r.trial_index}: seed {r.seed}, final error "
          f"{r.final_error:3d}, {r.improving_moves} moves, "
          f"{r.proposals_made} proposals, ended by {r.converged_by}")

hits = [r for r in results if r.hit]
print("first hit:", hits[0].final_set, "on trial", hits[0].trial_index)

# every trial is reproducible alone: seed = base_seed + trial_index
replay = SearchConfig(max_trials=1, base_seed=hits[0].seed)
again, _ = run_search(group, params, replay)
print("replayed from its seed:", again[0].final_set)

# the sweep proposal mode cycles every possible swap deterministically;
# when it exhausts alpha the final set is certifiably a local minimum
sweep = SearchConfig(max_trials=20, base_seed=0, stop_mode="collect-all",
                     proposal_mode="sweep")
results, summary = run_search(group, params, sweep)
stuck = [r for r in results if r.converged_by == "alpha-exhaustion"]
print(f"\nsweep mode: {summary.hit_count} hits, {len(stuck)} certified "
      f"local minima out of {summary.trials_used} trials")
