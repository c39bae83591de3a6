"""
Anatomy of the squared-coefficient error function
=================================================

"""

import numpy as np

from pdsearch import (Params, apply_swap, cyclic_group, init_state, swap_delta,
                      target)

# D = {1, 2} in the cyclic group of order 5, aiming for (5, 2, 0, 1).
# the coefficient vector counts ordered products d1 * d2 over D x D,
# the target is k at the identity, lambda on members, mu elsewhere
group = cyclic_group(5)
params = Params(5, 2, 0, 1)
state = init_state(group, params, [1, 2])

print("coefficients:", state.coeff)
print("targets:     ", [target(state, g) for g in range(5)])
print("error:", state.error)

# {1, 2} is not inverse-closed, and the identity coefficient shows it:
# no pair multiplies to 0, but the target there is k = 2.  inverse
# closure is never checked separately, the identity term enforces it

# pricing a swap is O(k), not a recomputation
delta = swap_delta(state, out=2, in_=4)
print("\nswap 2 -> 4 is priced at", delta)

apply_swap(state, out=2, in_=4)
print("after the swap: subset", state.subset(), "error", state.error)

# {1, 4} is the pentagon connection set, a regular PDS, so error 0.
# the reverse swap undoes everything
rev = swap_delta(state, out=4, in_=2)
print("reverse swap priced at", rev)

# deltas always agree with recomputation; spot check 200 random swaps
rng = np.random.default_rng(0)
group13 = cyclic_group(13)
params13 = Params(13, 6, 2, 3)
agree = 0
for _ in range(200):
    subset = rng.choice(np.arange(1, 13), size=6, replace=False)
    st = init_state(group13, params13, subset)
    out = int(rng.choice(subset))
    in_ = int(rng.choice([g for g in range(1, 13) if g not in subset]))
    swapped = [g for g in subset if g != out] + [in_]
    full = init_state(group13, params13, swapped).error - st.error
    agree += (swap_delta(st, out, in_) == full)
print("\nincremental vs full recompute agreement: %d/200" % agree)
