"""
Parallel restarts with deterministic records
============================================

"""

import time

from pdsearch import (Params, SearchConfig, elementary_abelian, make_certificate,
                      run_search)

# (64, 18, 2, 6) in the elementary abelian group of order 64 is an easy
# recall target: nearly every restart budget finds it quickly
group = elementary_abelian(2, 6)
params = Params(64, 18, 2, 6)

t0 = time.perf_counter()
serial = SearchConfig(max_trials=200, base_seed=0, stop_mode="collect-all",
                      worker_count=1)
results_1, summary_1 = run_search(group, params, serial)
t1 = time.perf_counter() - t0

t0 = time.perf_counter()
parallel = SearchConfig(max_trials=200, base_seed=0, stop_mode="collect-all",
                        worker_count=4)
results_4, summary_4 = run_search(group, params, parallel)
t4 = time.perf_counter() - t0

print(f"serial:   {summary_1.hit_count} hits in {t1:.2f}s")
print(f"4 workers: {summary_4.hit_count} hits in {t4:.2f}s")

# trial i always runs from seed base_seed + i, so the result list does
# not depend on how trials were scheduled across processes
print("identical results:", results_1 == results_4)

# first-hit mode stops the trial stream early instead of draining it
first = SearchConfig(max_trials=10000, base_seed=0, worker_count=4)
results, summary = run_search(group, params, first)
hit = next(r for r in results if r.hit)
print(f"\nfirst-hit mode used {summary.trials_used} of 10000 trials")

cert = make_certificate(group, params, hit.final_set)
print("hit verifies independently:", cert.passed)
print("as 1-indexed elements:", cert.emitted_1indexed)
