"""
Independent certification of search results
===========================================

"""

from pdsearch import (Params, certificate_json, complement_pds, cyclic_group,
                      make_certificate, verify_pds)

group = cyclic_group(13)
params = Params(13, 6, 2, 3)
residues = [1, 3, 4, 9, 10, 12]

# the verifier recounts every difference from the definition; it shares
# no code with the search's incremental arithmetic
cert = make_certificate(group, params, residues)
print(certificate_json(cert))

# failures come with one witness per violated axiom
report = verify_pds(cyclic_group(5), Params(5, 2, 0, 1), [1, 2])
print("for D = {1, 2} in cyclic(5):")
for failure in report.failures:
    print("  -", failure)

# wrong parameters are caught by the counting itself
report = verify_pds(group, Params(13, 6, 3, 3), residues)
print("\nfor the residues with lambda misdeclared as 3:")
print("  -", report.failures[0])

# a verified set and its complement stand or fall together
comp, cparams = complement_pds(group, params, residues)
print("\ncomplement:", comp)
print("complement parameters:", (cparams.n, cparams.k, cparams.lam, cparams.mu))
print("complement verifies:", verify_pds(group, cparams, comp).ok)
