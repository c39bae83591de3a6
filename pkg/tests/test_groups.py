import numpy as np
import pytest

from pdsearch.groups import (
    GroupTable,
    TableFormatError,
    TableStructureError,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian,
    parse_table,
    serialize_table,
    validate_table,
)


def test_cyclic_trivial_group():
    g = cyclic_group(1)
    assert g.n == 1
    assert g.identity == 0
    assert g.mul.tolist() == [[0]]


def test_cyclic_four_products_and_inverses():
    g = cyclic_group(4)
    assert g.mul[1, 3] == 0
    assert g.inv[1] == 3
    assert g.inv[0] == 0


def test_cyclic_rejects_order_zero():
    with pytest.raises(ValueError):
        cyclic_group(0)


def test_cyclic_13_validates():
    report = validate_table(cyclic_group(13))
    assert report.ok
    assert report.failures == []


def test_dihedral_noncommutative_witness():
    g = dihedral_group(4)
    assert g.mul[1, 4] != g.mul[4, 1]


def test_dihedral_3_validates():
    g = dihedral_group(3)
    assert g.n == 6
    assert validate_table(g).ok


def test_dihedral_5_validates():
    assert validate_table(dihedral_group(5)).ok


def test_dihedral_reflections_self_inverse():
    m = 6
    g = dihedral_group(m)
    for r in range(m, 2 * m):
        assert g.inv[r] == r


def test_dihedral_rejects_small_order():
    with pytest.raises(ValueError):
        dihedral_group(2)


def test_klein_four_group_self_inverse():
    g = direct_product(cyclic_group(2), cyclic_group(2))
    assert g.n == 4
    assert (g.inv == np.arange(4)).all()
    assert validate_table(g).ok


def test_product_encoding():
    g = direct_product(cyclic_group(4), cyclic_group(4))
    assert g.n == 16
    # (1,0) * (0,1) = (1,1): indices 4, 1, 5
    assert g.mul[4, 1] == 5
    assert g.identity == 0


def test_elementary_abelian_64_validates():
    g = elementary_abelian(2, 6)
    assert g.n == 64
    assert validate_table(g).ok
    assert (g.inv == np.arange(64)).all()


def test_inverse_is_involution():
    for g in (cyclic_group(9), dihedral_group(5),
              direct_product(cyclic_group(3), cyclic_group(4))):
        assert (g.inv[g.inv] == np.arange(g.n)).all()


def test_nonidentity_skips_identity():
    g = cyclic_group(5)
    assert g.nonidentity().tolist() == [1, 2, 3, 4]


def test_validate_reports_latin_violation():
    base = cyclic_group(4)
    mul = base.mul.copy()
    mul[1, 2] = mul[1, 1]
    broken = GroupTable(n=4, mul=mul, identity=0, inv=base.inv, label="broken")
    report = validate_table(broken)
    assert not report.ok
    assert any("row 1" in f or "column" in f for f in report.failures)


def test_validate_reports_associativity_witness():
    base = cyclic_group(4)
    mul = base.mul.copy()
    mul[0, 0] = 1
    broken = GroupTable(n=4, mul=mul, identity=0, inv=base.inv, label="broken")
    report = validate_table(broken)
    assert not report.ok
    assert any("associativity" in f for f in report.failures)


def test_validate_reports_bad_inverse():
    base = cyclic_group(5)
    inv = base.inv.copy()
    inv[2] = 2
    broken = GroupTable(n=5, mul=base.mul, identity=0, inv=inv, label="broken")
    report = validate_table(broken)
    assert any("inverse" in f for f in report.failures)


def test_serialize_parse_round_trip():
    for g in (cyclic_group(4), dihedral_group(4),
              direct_product(cyclic_group(2), cyclic_group(6))):
        text = serialize_table(g)
        back = parse_table(text, label=g.label)
        assert back.n == g.n
        assert (back.mul == g.mul).all()
        assert (back.inv == g.inv).all()
        assert back.identity == g.identity
        assert serialize_table(back) == text


def test_parse_ignores_blanks_and_comments():
    text = serialize_table(cyclic_group(3))
    decorated = "# a cyclic table\n\n" + text.replace("\n", "  # trailing\n", 1) + "\n\n"
    g = parse_table(decorated)
    assert g.n == 3
    assert (g.mul == cyclic_group(3).mul).all()


def test_parse_detects_nonpositional_identity():
    # relabel cyclic(5) so the identity lands at index 2
    base = cyclic_group(5)
    perm = (np.arange(5) + 2) % 5
    mul = np.empty_like(base.mul)
    for a in range(5):
        for b in range(5):
            mul[perm[a], perm[b]] = perm[base.mul[a, b]]
    text = "5\n" + "\n".join(" ".join(str(v + 1) for v in row) for row in mul) + "\n"
    g = parse_table(text)
    assert g.identity == 2
    assert validate_table(g).ok


def test_parse_format_errors():
    with pytest.raises(TableFormatError):
        parse_table("")
    with pytest.raises(TableFormatError):
        parse_table("2\n1 2\n")  # missing a row
    with pytest.raises(TableFormatError):
        parse_table("2\n1 2\n2 x\n")
    with pytest.raises(TableFormatError):
        parse_table("2\n1 2 1\n2 1\n")  # row too long
    with pytest.raises(TableFormatError):
        parse_table("2\n1 3\n2 1\n")  # entry out of 1..n


def test_parse_structure_error_on_repeated_entry():
    lines = serialize_table(cyclic_group(4)).splitlines()
    row = lines[2].split()
    row[1] = row[0]
    lines[2] = " ".join(row)
    with pytest.raises(TableStructureError):
        parse_table("\n".join(lines) + "\n")


def test_parse_structure_error_without_identity():
    # constant rows: no identity element exists
    with pytest.raises(TableStructureError):
        parse_table("2\n2 2\n1 1\n")


def test_parse_accepts_bytes():
    g = parse_table(serialize_table(cyclic_group(3)).encode())
    assert g.n == 3


def test_tables_are_read_only():
    g = cyclic_group(5)
    with pytest.raises(ValueError):
        g.mul[0, 0] = 1
