"""Acceptance gate: one test per numbered criterion, each printing a PASS,
FAIL, or WAIVED line so a `pytest -s` run reads as a checklist.
"""

import functools
import json
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from pdsearch.cli import main
from pdsearch.groups import (
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian,
    parse_table,
)
from pdsearch.params import Params
from pdsearch.search import STOP_ALL, SearchConfig, run_search
from pdsearch.state import apply_swap, init_state, swap_delta
from pdsearch.verify import complement_pds, make_certificate, verify_pds

FIXTURES = Path(__file__).parent / "fixtures"
README = Path(__file__).parent.parent / "README.md"

EA64_SPEC = ("product:cyclic:2xproduct:cyclic:2xproduct:cyclic:2x"
             "product:cyclic:2xproduct:cyclic:2xcyclic:2")


def criterion(number, name):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except pytest.skip.Exception:
                print(f"criterion {number} ({name}): WAIVED")
                raise
            except BaseException:
                print(f"criterion {number} ({name}): FAIL")
                raise
            print(f"criterion {number} ({name}): PASS")
        return wrapper
    return decorate


@criterion(1, "oracle equivalence")
def test_error_zero_iff_brute_force_verifies():
    cases = [
        (cyclic_group(5), 2),
        (cyclic_group(7), 3),
        (direct_product(cyclic_group(4), cyclic_group(2)), 3),
    ]
    for group, k in cases:
        candidates = list(range(group.n))
        candidates.remove(group.identity)
        for subset in combinations(candidates, k):
            for lam in range(k):
                for mu in range(k + 1):
                    params = Params(group.n, k, lam, mu)
                    state = init_state(group, params, subset)
                    verified = verify_pds(group, params, subset).ok
                    assert (state.error == 0) == verified, (
                        group.label, subset, lam, mu)


@criterion(2, "incremental correctness")
def test_swap_delta_matches_full_recompute():
    pool = [
        cyclic_group(7),
        cyclic_group(23),
        cyclic_group(64),
        dihedral_group(9),
        dihedral_group(32),
        direct_product(cyclic_group(4), cyclic_group(4)),
        direct_product(cyclic_group(5), dihedral_group(3)),
        elementary_abelian(2, 6),
        elementary_abelian(3, 3),
    ]
    rng = np.random.default_rng(20260819)
    for _ in range(10000):
        group = pool[rng.integers(len(pool))]
        k = int(rng.integers(2, min(16, group.n - 1)))
        params = Params(group.n, k,
                        int(rng.integers(0, k)), int(rng.integers(0, k + 1)))
        nonidentity = [g for g in range(group.n) if g != group.identity]
        subset = list(rng.choice(nonidentity, size=k, replace=False))
        state = init_state(group, params, subset)
        out = int(subset[rng.integers(k)])
        outside = [g for g in nonidentity if g not in set(subset)]
        in_ = int(outside[rng.integers(len(outside))])
        delta = swap_delta(state, out, in_)
        swapped = [g for g in subset if g != out] + [in_]
        assert state.error + delta == init_state(group, params, swapped).error


def _cli_search_finds_verified_hit(group_arg, k, lam, mu, trials, tmp_path):
    out_file = tmp_path / "record.json"
    code = main(["search", group_arg, str(k), str(lam), str(mu),
                 "--max-trials", str(trials), "--out", str(out_file)])
    assert code == 0
    record = json.loads(out_file.read_text())
    assert record["hit_count"] >= 1
    for hit in record["hits"]:
        cert = hit["certificate"]
        assert cert["pds_pass"] and cert["srg_pass"]


@criterion(3, "quadratic-residue recovery in Z13")
def test_search_recovers_pds_in_z13(tmp_path):
    _cli_search_finds_verified_hit("cyclic:13", 6, 2, 3, 1000, tmp_path)


@criterion(4, "rook's graph recovery in Z4xZ4")
def test_search_recovers_pds_in_z4z4(tmp_path):
    _cli_search_finds_verified_hit("product:cyclic:4xcyclic:4", 6, 2, 2, 1000,
                                   tmp_path)


@criterion(5, "recall on the order-64 elementary abelian group")
def test_search_recovers_pds_in_ea64(tmp_path):
    _cli_search_finds_verified_hit(EA64_SPEC, 18, 2, 6, 10000, tmp_path)


@criterion(6, "library table certification")
def test_certify_known_sets_against_exported_tables(capsys):
    records = sorted((FIXTURES / "known_sets").glob("*.json"))
    assert records, "fixture records are part of the repository"
    available = []
    for record_path in records:
        record = json.loads(record_path.read_text())
        table_path = FIXTURES / "group_tables" / record["table_file"]
        if table_path.is_file():
            available.append((record, table_path))
    if not available:
        pytest.skip("no exported group tables present; certification waived")
    for record, table_path in available:
        code = main(["verify", str(table_path),
                     str(record["k"]), str(record["lambda"]), str(record["mu"]),
                     "--set", ",".join(map(str, record["pds_1indexed"]))])
        capsys.readouterr()
        assert code == 0, record["group_label"]


@criterion(7, "complement closure")
def test_complements_of_verified_sets_verify():
    rook = [1, 2, 3, 4, 8, 12]
    z4z4 = direct_product(cyclic_group(4), cyclic_group(4))
    corpus = [
        (cyclic_group(5), Params(5, 2, 0, 1), (1, 4)),
        (cyclic_group(13), Params(13, 6, 2, 3), (1, 3, 4, 9, 10, 12)),
        (z4z4, Params(16, 6, 2, 2), tuple(rook)),
        (z4z4, Params(16, 9, 4, 6),
         tuple(g for g in range(1, 16) if g not in rook)),
        (direct_product(cyclic_group(4), cyclic_group(2)), Params(8, 3, 2, 0),
         (2, 4, 6)),
        (dihedral_group(4), Params(8, 3, 2, 0), (2, 4, 6)),
    ]
    group = elementary_abelian(2, 6)
    params = Params(64, 18, 2, 6)
    results, summary = run_search(group, params, SearchConfig(max_trials=100))
    assert summary.hit_count >= 1
    corpus.append((group, params, next(r.final_set for r in results if r.hit)))

    for group, params, d in corpus:
        assert verify_pds(group, params, d).ok
        comp, cparams = complement_pds(group, params, d)
        assert verify_pds(group, cparams, comp).ok
        back, bparams = complement_pds(group, cparams, comp)
        assert back == tuple(sorted(d)) and bparams == params


@criterion(8, "run-record determinism across worker counts")
def test_collect_all_records_byte_identical(tmp_path):
    args = ["search", "cyclic:13", "6", "2", "3", "--max-trials", "60",
            "--stop", "all", "--seed", "7"]
    one = tmp_path / "one.json"
    two = tmp_path / "two.json"
    assert main(args + ["--workers", "1", "--out", str(one)]) == 0
    assert main(args + ["--workers", "2", "--out", str(two)]) == 0
    assert one.read_bytes() == two.read_bytes()
    assert json.loads(one.read_text())["hit_count"] >= 1

    group, params = cyclic_group(13), Params(13, 6, 2, 3)
    serial = SearchConfig(max_trials=60, base_seed=7, stop_mode=STOP_ALL,
                          worker_count=1)
    parallel = SearchConfig(max_trials=60, base_seed=7, stop_mode=STOP_ALL,
                            worker_count=2)
    assert run_search(group, params, serial)[0] == run_search(group, params, parallel)[0]


@criterion(9, "stretch benchmarks documented, not run")
def test_readme_marks_large_runs_as_stretch():
    text = README.read_text()
    assert "(512,70,6,10)" in text
    assert "111100" in text
    assert "62" in text and "1254" in text
    assert "stretch" in text.lower()
