"""Independent brute-force certification of partial difference sets and
their Cayley graphs.

Nothing here touches the incremental coefficient machinery: differences are
counted pairwise from the definition and strong regularity is confirmed by
direct neighbourhood counting, so a passing certificate is evidence the
search result is real and not an artifact of the search's own arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Tuple

import numpy as np

from .groups import GroupTable
from .params import Params


@dataclass
class CheckReport:
    """Outcome of one verification routine; failures carry witnesses."""

    ok: bool
    failures: List[str]


def _as_element_set(group: GroupTable, d: Iterable) -> List[int]:
    elems = sorted({int(g) for g in d})
    if elems and (elems[0] < 0 or elems[-1] >= group.n):
        raise ValueError(f"element indices must lie in 0..{group.n - 1}")
    return elems


def verify_pds(group: GroupTable, params: Params, d: Iterable) -> CheckReport:
    """Check the regular-PDS axioms by exhaustive difference counting.

    Counts the ordered differences d1 * d2^-1 over all pairs with d1 != d2
    and compares against lam on members and mu elsewhere.  Every violated
    axiom is reported with one witness.  Cost O(k^2 + n).
    """
    elems = _as_element_set(group, d)
    failures: List[str] = []
    member = [False] * group.n
    for g in elems:
        member[g] = True

    if len(elems) != params.k:
        failures.append(f"wrong cardinality: |D| = {len(elems)}, expected k = {params.k}")
    if member[group.identity]:
        failures.append(f"identity element {group.identity} is in D")
    inv = group.inv
    for g in elems:
        if not member[inv[g]]:
            failures.append(
                f"not inverse-closed: {g} is in D but its inverse {int(inv[g])} is not")
            break

    counts = [0] * group.n
    mul = group.mul
    for d1 in elems:
        for d2 in elems:
            if d1 != d2:
                counts[mul[d1, inv[d2]]] += 1
    for g in range(group.n):
        if g == group.identity:
            continue
        expected = params.lam if member[g] else params.mu
        if counts[g] != expected:
            failures.append(
                f"difference count at element {g}: got {counts[g]}, expected {expected}")
            break
    return CheckReport(ok=not failures, failures=failures)


def build_cayley_graph(group: GroupTable, d: Iterable) -> np.ndarray:
    """Boolean adjacency matrix with g ~ h iff g * h^-1 is in the connection set.

    The set must exclude the identity (loop-free) and be inverse-closed
    (undirected); violations raise rather than produce a directed graph.
    """
    elems = _as_element_set(group, d)
    flags = np.zeros(group.n, dtype=bool)
    flags[elems] = True
    if flags[group.identity]:
        raise ValueError(f"identity element {group.identity} in the connection set")
    bad = flags & ~flags[group.inv]
    if bad.any():
        g = int(np.nonzero(bad)[0][0])
        raise ValueError(
            f"connection set is not inverse-closed: contains {g} "
            f"but not {int(group.inv[g])}")
    return flags[group.mul[:, group.inv]]


def verify_srg(adjacency: np.ndarray, params: Params) -> CheckReport:
    """Confirm strong regularity by direct neighbourhood counting.

    Checks the structural preconditions (square, symmetric, loop-free),
    degree k at every vertex, then the common-neighbour count of every
    vertex pair by intersecting sorted neighbour lists.  Quadratic on
    purpose: this is the trusted oracle and stays simple.
    """
    adj = np.asarray(adjacency, dtype=bool)
    n = params.n
    if adj.shape != (n, n):
        return CheckReport(False, [f"adjacency shape {adj.shape} does not match n = {n}"])
    failures: List[str] = []
    if (adj != adj.T).any():
        g, h = np.argwhere(adj != adj.T)[0]
        failures.append(f"not symmetric at pair ({int(g)}, {int(h)})")
    if adj.diagonal().any():
        g = int(np.nonzero(adj.diagonal())[0][0])
        failures.append(f"loop at vertex {g}")
    if failures:
        return CheckReport(False, failures)

    neighbours = [np.nonzero(adj[v])[0] for v in range(n)]
    for v in range(n):
        if neighbours[v].size != params.k:
            failures.append(
                f"vertex {v} has degree {neighbours[v].size}, expected k = {params.k}")
            break
    for g in range(n):
        row = neighbours[g]
        for h in range(g + 1, n):
            common = np.intersect1d(row, neighbours[h], assume_unique=True).size
            expected = params.lam if adj[g, h] else params.mu
            if common != expected:
                kind = "adjacent" if adj[g, h] else "non-adjacent"
                failures.append(
                    f"{kind} pair ({g}, {h}) has {common} common neighbours, "
                    f"expected {expected}")
                return CheckReport(False, failures)
    return CheckReport(ok=not failures, failures=failures)


def complement_pds(group: GroupTable, params: Params, d: Iterable) -> Tuple[tuple, Params]:
    """The complementary set G minus the identity and D, with its parameters.

    The input must itself verify; the output satisfies the same property
    with the complemented parameters.
    """
    report = verify_pds(group, params, d)
    if not report.ok:
        raise ValueError("input set is not a verified PDS: " + "; ".join(report.failures))
    inside = set(_as_element_set(group, d))
    comp = tuple(g for g in range(group.n)
                 if g != group.identity and g not in inside)
    return comp, params.complement()


@dataclass(frozen=True)
class Certificate:
    """Bundled outcome of both independent checks on one candidate set."""

    group_label: str
    params: Params
    pds: tuple
    pds_check: CheckReport
    srg_check: CheckReport

    @property
    def emitted_1indexed(self) -> tuple:
        """The set in the 1-indexed convention used by all persisted output."""
        return tuple(g + 1 for g in self.pds)

    @property
    def passed(self) -> bool:
        return self.pds_check.ok and self.srg_check.ok

    def to_json_dict(self) -> dict:
        return {
            "group_label": self.group_label,
            "n": self.params.n,
            "k": self.params.k,
            "lambda": self.params.lam,
            "mu": self.params.mu,
            "pds_1indexed": list(self.emitted_1indexed),
            "pds_pass": self.pds_check.ok,
            "srg_pass": self.srg_check.ok,
        }


def make_certificate(group: GroupTable, params: Params, d: Iterable) -> Certificate:
    """Run both checks on a candidate set and bundle the outcome.

    The Cayley graph is only well-defined for identity-free inverse-closed
    sets; when the set fails that, the graph check fails with the reason
    instead of raising.
    """
    elems = tuple(_as_element_set(group, d))
    pds_check = verify_pds(group, params, elems)
    try:
        adjacency = build_cayley_graph(group, elems)
    except ValueError as exc:
        srg_check = CheckReport(False, [f"Cayley graph undefined: {exc}"])
    else:
        srg_check = verify_srg(adjacency, params)
    return Certificate(group.label, params, elems, pds_check, srg_check)


def certificate_json(cert: Certificate) -> str:
    """Canonical one-document JSON form of a certificate."""
    return json.dumps(cert.to_json_dict(), indent=2, sort_keys=True) + "\n"
