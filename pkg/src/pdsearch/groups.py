"""Finite groups as explicit multiplication tables.

Elements are the integers 0..n-1 internally; the table file format on disk
is 1-indexed and conversion happens only at parse/serialize time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

MAX_ORDER = 4096
ASSOC_CHECK_LIMIT = 512


class GroupTableError(ValueError):
    """Base class for table parsing and validation errors."""


class TableFormatError(GroupTableError):
    """Raised when table text does not match the file format."""


class TableStructureError(GroupTableError):
    """Raised when a well-formed table fails the group axioms."""

    def __init__(self, message: str, report: Optional["ValidationReport"] = None):
        super().__init__(message)
        self.report = report


@dataclass
class ValidationReport:
    """Outcome of validate_table; each failure string embeds a witness."""

    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group of order n given by its full multiplication table.

    mul[a, b] is the index of the product a*b.  The arrays are marked
    read-only so a table can be shared freely across search trials.
    """

    n: int
    mul: np.ndarray
    identity: int
    inv: np.ndarray
    label: str = "group"

    def __post_init__(self):
        mul = np.ascontiguousarray(np.asarray(self.mul, dtype=np.int64))
        inv = np.ascontiguousarray(np.asarray(self.inv, dtype=np.int64))
        if mul.shape != (self.n, self.n):
            raise ValueError(f"mul must have shape ({self.n}, {self.n}), got {mul.shape}")
        if inv.shape != (self.n,):
            raise ValueError(f"inv must have shape ({self.n},), got {inv.shape}")
        if not 0 <= self.identity < self.n:
            raise ValueError(f"identity index {self.identity} out of range for order {self.n}")
        mul.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)

    def nonidentity(self) -> np.ndarray:
        """All element indices except the identity, ascending."""
        return np.delete(np.arange(self.n, dtype=np.int64), self.identity)


def cyclic_group(m: int) -> GroupTable:
    """The cyclic group of order m, written additively."""
    if m < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {m}")
    if m > MAX_ORDER:
        raise ValueError(f"order {m} exceeds supported maximum {MAX_ORDER}")
    i = np.arange(m, dtype=np.int64)
    mul = (i[:, None] + i[None, :]) % m
    return GroupTable(n=m, mul=mul, identity=0, inv=(m - i) % m, label=f"cyclic({m})")


def dihedral_group(m: int) -> GroupTable:
    """The dihedral group of order 2m.

    Indices 0..m-1 are the rotations r^i, indices m..2m-1 are the
    reflections r^i f, with f r = r^-1 f.
    """
    if m < 3:
        raise ValueError(f"dihedral group needs m >= 3, got {m}")
    if 2 * m > MAX_ORDER:
        raise ValueError(f"order {2 * m} exceeds supported maximum {MAX_ORDER}")
    n = 2 * m
    i = np.arange(m, dtype=np.int64)
    s = (i[:, None] + i[None, :]) % m
    d = (i[:, None] - i[None, :]) % m
    mul = np.empty((n, n), dtype=np.int64)
    mul[:m, :m] = s
    mul[:m, m:] = s + m
    mul[m:, :m] = d + m
    mul[m:, m:] = d
    inv = np.concatenate([(m - i) % m, m + i])
    return GroupTable(n=n, mul=mul, identity=0, inv=inv, label=f"dihedral({m})")


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Direct product of two groups; the pair (x, y) is encoded as x*b.n + y."""
    n = a.n * b.n
    if n > MAX_ORDER:
        raise ValueError(f"product order {n} exceeds supported maximum {MAX_ORDER}")
    mul = (a.mul[:, None, :, None] * b.n + b.mul[None, :, None, :]).reshape(n, n)
    inv = (a.inv[:, None] * b.n + b.inv[None, :]).reshape(n)
    identity = a.identity * b.n + b.identity
    label = f"{a.label}x{b.label}"
    return GroupTable(n=n, mul=mul, identity=identity, inv=inv, label=label)


def elementary_abelian(p: int, e: int) -> GroupTable:
    """The elementary abelian group of order p**e (e-fold product of cyclic(p))."""
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    g = cyclic_group(p)
    for _ in range(e - 1):
        g = direct_product(g, cyclic_group(p))
    return GroupTable(n=g.n, mul=g.mul, identity=g.identity, inv=g.inv,
                      label=f"elementary_abelian({p}^{e})")


def _associativity_witness(mul: np.ndarray):
    """First (a, b, c) with (ab)c != a(bc), or None.  Checked in row blocks
    to keep the O(n^3) comparison inside a fixed memory budget."""
    n = mul.shape[0]
    block = max(1, (1 << 22) // max(n * n, 1))
    for a0 in range(0, n, block):
        rows = mul[a0:a0 + block]
        left = mul[rows]            # left[i, b, c] = (a b) c
        right = rows[:, mul]        # right[i, b, c] = a (b c)
        bad = left != right
        if bad.any():
            i, b, c = np.argwhere(bad)[0]
            return (a0 + int(i), int(b), int(c))
    return None


def validate_table(table: GroupTable, check_associativity: bool = True) -> ValidationReport:
    """Check the group axioms on an explicit table.

    Associativity is the O(n^3) part; the flag can disable it only above
    ASSOC_CHECK_LIMIT, below that the check always runs.
    """
    n = table.n
    mul = table.mul
    report = ValidationReport()
    idx = np.arange(n, dtype=np.int64)

    if mul.min() < 0 or mul.max() >= n:
        report.failures.append(
            f"table entries must lie in 0..{n - 1}, found {int(mul.min())}..{int(mul.max())}")
        return report

    row_ok = (np.sort(mul, axis=1) == idx).all(axis=1)
    if not row_ok.all():
        g = int(np.nonzero(~row_ok)[0][0])
        report.failures.append(f"row {g} is not a permutation of 0..{n - 1}")
    col_ok = (np.sort(mul, axis=0) == idx[:, None]).all(axis=0)
    if not col_ok.all():
        g = int(np.nonzero(~col_ok)[0][0])
        report.failures.append(f"column {g} is not a permutation of 0..{n - 1}")

    e = table.identity
    if not (mul[e] == idx).all():
        g = int(np.nonzero(mul[e] != idx)[0][0])
        report.failures.append(f"identity fails on the left: {e}*{g} = {int(mul[e, g])}")
    if not (mul[:, e] == idx).all():
        g = int(np.nonzero(mul[:, e] != idx)[0][0])
        report.failures.append(f"identity fails on the right: {g}*{e} = {int(mul[g, e])}")

    if table.inv.min() < 0 or table.inv.max() >= n:
        report.failures.append("inverse map has entries outside 0..n-1")
    else:
        left = mul[idx, table.inv] == e
        right = mul[table.inv, idx] == e
        bad = ~(left & right)
        if bad.any():
            g = int(np.nonzero(bad)[0][0])
            report.failures.append(
                f"element {g} has wrong inverse {int(table.inv[g])}")

    if check_associativity or n <= ASSOC_CHECK_LIMIT:
        witness = _associativity_witness(mul)
        if witness is not None:
            a, b, c = witness
            report.failures.append(
                f"associativity fails at (a, b, c) = ({a}, {b}, {c})")
    return report


def parse_table(text, label: str = "parsed") -> GroupTable:
    """Parse the 1-indexed multiplication table format.

    Line 1 holds n; the next n lines hold n space-separated products each.
    Blank lines are skipped and anything after a '#' is a comment.  The
    parsed table is validated before being returned.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append(line.split())

    if not rows:
        raise TableFormatError("empty table file")
    if len(rows[0]) != 1:
        raise TableFormatError(f"first line must hold a single order, got {rows[0]!r}")
    try:
        n = int(rows[0][0])
    except ValueError:
        raise TableFormatError(f"order is not an integer: {rows[0][0]!r}") from None
    if n < 1:
        raise TableFormatError(f"order must be >= 1, got {n}")
    if n > MAX_ORDER:
        raise TableFormatError(f"order {n} exceeds supported maximum {MAX_ORDER}")
    if len(rows) - 1 != n:
        raise TableFormatError(f"expected {n} table rows, found {len(rows) - 1}")

    mul = np.empty((n, n), dtype=np.int64)
    for r, tokens in enumerate(rows[1:]):
        if len(tokens) != n:
            raise TableFormatError(f"row {r + 1} has {len(tokens)} entries, expected {n}")
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise TableFormatError(f"row {r + 1} holds a non-integer entry") from None
        for v in values:
            if not 1 <= v <= n:
                raise TableFormatError(
                    f"row {r + 1} entry {v} outside the 1-indexed range 1..{n}")
        mul[r] = values
    mul -= 1

    idx = np.arange(n, dtype=np.int64)
    is_id = (mul == idx[None, :]).all(axis=1) & (mul == idx[:, None]).all(axis=0)
    candidates = np.nonzero(is_id)[0]
    if candidates.size == 0:
        raise TableStructureError("table has no identity element")
    identity = int(candidates[0])

    hits = mul == identity
    if not (hits.sum(axis=1) >= 1).all():
        g = int(np.nonzero(hits.sum(axis=1) == 0)[0][0])
        raise TableStructureError(f"element {g} has no right inverse")
    inv = np.argmax(hits, axis=1).astype(np.int64)
    if not (mul[inv, idx] == identity).all():
        g = int(np.nonzero(mul[inv, idx] != identity)[0][0])
        raise TableStructureError(f"element {g} has no two-sided inverse")

    table = GroupTable(n=n, mul=mul, identity=identity, inv=inv, label=label)
    report = validate_table(table)
    if not report.ok:
        raise TableStructureError(
            "table fails group validation: " + "; ".join(report.failures), report)
    return table


def serialize_table(table: GroupTable) -> str:
    """Render a group in the 1-indexed table format; inverse of parse_table."""
    lines = [str(table.n)]
    for row in table.mul + 1:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"
