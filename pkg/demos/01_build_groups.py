"""
Building and validating group multiplication tables
====================================================

"""

from pdsearch import (cyclic_group, dihedral_group, direct_product,
                      elementary_abelian, parse_table, serialize_table,
                      validate_table)

# four constructors cover the groups used throughout
z12 = cyclic_group(12)
d6 = dihedral_group(6)
z4z4 = direct_product(cyclic_group(4), cyclic_group(4))
ea64 = elementary_abelian(2, 6)

for g in (z12, d6, z4z4, ea64):
    print(f"{g.label}: order {g.n}, identity at index {g.identity}")

# dihedral groups are the first noncommutative case: rf != fr
r, f = 1, d6.n // 2
print("r*f =", d6.mul[r, f], " f*r =", d6.mul[f, r])

# every table is validated structurally; a corrupted one reports witnesses
text = serialize_table(cyclic_group(4))
print("\nserialized cyclic(4):")
print(text)

broken = text.replace("3 4 1 2", "3 3 1 2", 1)
try:
    parse_table(broken)
except Exception as exc:
    print("corrupted table rejected:", exc.report.failures[0])

# the parser does not assume the identity comes first
relabeled = "3\n2 1 3\n1 2 3\n3 3 2\n"   # not a group, fails fast
try:
    parse_table(relabeled)
except Exception as exc:
    print("non-group rejected:", exc.report.failures[0])

# round trip: parse(serialize(g)) reproduces the table
again = parse_table(serialize_table(z4z4))
print("\nround trip equal:", (again.mul == z4z4.mul).all())
print("validation clean:", validate_table(z4z4).ok)
