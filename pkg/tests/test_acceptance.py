"""Acceptance criteria, one test each; every test logs a PASS/FAIL line."""
import json
import subprocess
import sys
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES, FIXTURE_DIR
from lattika import classes as C
from lattika.core import is_modular, modularity_witness
from lattika.elements import essentials, pseudocomplements, summand_elements
from lattika.enumerate import enumerate_lattices, enumerate_up_to
from lattika.fixtures import FIXTURES
from lattika.harness.registry import ALWAYS
from lattika.harness.runner import run_suite
from lattika.io import Corpus
import oracles


@contextmanager
def criterion(number: int, text: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"[{number}] FAIL  {text}")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"[{number}] PASS  {text} ({time.perf_counter() - start:.1f}s)")
    print(ACCEPTANCE_LINES[-1])


def cli(*argv) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "lattika", *argv], capture_output=True, text=True)


def test_1_enumeration_counts():
    with criterion(1, "lattice counts n=1..7 are 1,1,1,2,5,15,53 and match the labeled-poset oracle"):
        expected = [1, 1, 1, 2, 5, 15, 53]
        for n, count in zip(range(1, 8), expected):
            got = {oracles.oracle_key(n, oracles.normalized_leq(L)) for L in enumerate_lattices(n)}
            assert len(got) == count
            assert got == oracles.lattice_classes(n)


def test_2_pseudocomplement_oracles():
    with criterion(2, "P(a) by maximality equals both characterizations on modular n<=7"):
        checked = 0
        for L in enumerate_up_to(7, is_modular):
            R = oracles.from_package(L)
            for a in L.elements:
                P = pseudocomplements(L, a)
                assert P == oracles.pseudocomplements(R, a)
                assert P == oracles.pc_via_closed(R, a)
                assert P == oracles.pc_via_upper(R, a)
                checked += 1
        assert checked > 0


def test_3_theorem_suite_n6():
    with criterion(3, "R1-R47 report zero always-holds violations over n<=6 (8 jobs, < 60s)"):
        start = time.perf_counter()
        report = run_suite(enumerate_up_to(6), "all", jobs=8)
        elapsed = time.perf_counter() - start
        faults = {c.id: c.violations[:1] for c in report.checks if c.expected == ALWAYS and c.violations}
        assert faults == {}
        ids = {c.id for c in report.checks}
        assert {f"R{i}" for i in range(1, 48)} <= ids
        by_id = {c.id: c for c in report.checks}
        # modularity-free checks see every lattice, the rest only modular ones
        assert by_id["R5"].scope_count == by_id["R37"].scope_count == 25
        assert by_id["R1"].scope_count == 17
        assert elapsed < 60


def test_4_r35_n7():
    with criterion(4, "R35 (extending iff type-1 S-extending) holds on every modular n<=7"):
        corpus = Corpus("modular n<=7", enumerate_up_to(7, is_modular).lattices)
        (res,) = run_suite(corpus, {"R35"}).checks
        assert res.scope_count == res.tested == 33
        assert res.violations == []


def test_5_fixture_goldens():
    with criterion(5, "fixture goldens: N5 witness (r,p,q), P(a) in M3, D(N5), E(M3), udim(M3)"):
        N5, M3 = FIXTURES["N5"](), FIXTURES["M3"]()
        assert not is_modular(N5)
        assert tuple(N5.name(x) for x in modularity_witness(N5)) == ("r", "p", "q")
        assert {M3.name(x) for x in pseudocomplements(M3, M3.index("a"))} == {"b", "c"}
        assert {N5.name(x) for x in summand_elements(N5)} == {"0", "p", "q", "r", "1"}
        assert {M3.name(x) for x in essentials(M3)} == {"1"}
        assert C.uniform_dimension(M3) == 2


def test_6_report_determinism():
    with criterion(6, "verify --enumerate 6 --checks all --json is byte-identical across runs and --jobs"):
        args = ["verify", "--enumerate", "6", "--checks", "all", "--json"]
        runs = [cli(*args), cli(*args), cli(*args, "--jobs", "4")]
        assert all(r.returncode == 0 for r in runs)
        assert runs[0].stdout == runs[1].stdout == runs[2].stdout
        assert json.loads(runs[0].stdout)["corpus"] == "enumerated n<=6"


def test_7_miner_reproducible():
    with criterion(7, "finite strictness searches give reproducible witness-or-exhaustion at n<=6"):
        searches = [
            ("not modular", "not dsubc"),
            ("modular and wtype1(all)", "not type1(all)"),
            ("modular and extending", "not qc"),
            ("modular and type1(simple)", "not type2(simple)"),
        ]
        for hyp, neg in searches:
            first = cli("mine", "--hyp", hyp, "--not-concl", neg, "--max-n", "6", "--json")
            second = cli("mine", "--hyp", hyp, "--not-concl", neg, "--max-n", "6", "--json")
            assert first.returncode in (0, 1) and first.returncode == second.returncode
            assert first.stdout == second.stdout
            data = json.loads(first.stdout)
            assert ("witness" in data) != ("exhausted" in data)
        assert (FIXTURE_DIR.parent.parent / "README.md").read_text().count("not reproduced") >= 1
