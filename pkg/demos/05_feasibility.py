"""
Parameter feasibility screening and enumeration
===============================================

"""

from pdsearch import Params, check_feasible, enumerate_feasible

# the screen applies counting, connectivity, and eigenvalue-multiplicity
# integrality conditions; failures come back as a reason string
for tup in [(13, 6, 2, 3), (13, 6, 2, 4), (16, 6, 2, 2), (6, 3, 0, 3),
            (144, 52, 16, 20), (144, 52, 16, 21)]:
    outcome = check_feasible(Params(*tup))
    if isinstance(outcome, str):
        print(f"{tup}: rejected, {outcome}")
    else:
        kind = "conference" if outcome.conference else "integral"
        print(f"{tup}: feasible ({kind}), multiplicities "
              f"m+ = {outcome.m_plus}, m- = {outcome.m_minus}")

# everything an order admits, in one call
print("\nall feasible parameter sets at order 16:")
for fp in enumerate_feasible(16):
    p = fp.params
    print(f"  ({p.n}, {p.k}, {p.lam}, {p.mu})")

# the screen is closed under complementation, so rows pair up:
# (16,5,0,2) with (16,10,6,6) and (16,6,2,2) with (16,9,4,6)
rows = {(fp.params.k, fp.params.lam, fp.params.mu)
        for fp in enumerate_feasible(16)}
comps = {(c.k, c.lam, c.mu)
         for c in (fp.params.complement() for fp in enumerate_feasible(16))}
print("closed under complement:", rows == comps)

print("\nfeasible at order 144 with k <= 52:")
for fp in enumerate_feasible(144):
    if fp.params.k <= 52:
        p = fp.params
        print(f"  ({p.n}, {p.k}, {p.lam}, {p.mu})")
