from hypothesis import given
from hypothesis import strategies as st

from conftest import lattices, modular_lattices
from lattika import classes as C
from lattika import extending as ext
from lattika.core import is_modular
import oracles

CLASSES = [C.ALL, C.SIMPLE, C.UNIFORM, C.ZERO, C.EssentialHull(C.SIMPLE), C.Sum((C.SIMPLE, C.UNIFORM))]


def test_extending_examples(B2, M3, C3):
    for L in (B2, M3, C3):
        assert ext.is_extending(L)
        assert ext.is_quasi_continuous(L)
        assert ext.is_type1_extending(L, C.ALL)
    assert ext.is_type2_extending(C3, C.ALL)


def test_n5_type2_all(N5):
    # p closes to r, q and r are summands
    assert ext.is_type2_extending(N5, C.ALL)


def test_zero_class_is_vacuous(fixture_name):
    from lattika.fixtures import FIXTURES

    L = FIXTURES[fixture_name]()
    for fn in (
        ext.is_type1_extending, ext.is_type2_extending, ext.satisfies_Q,
        ext.satisfies_C1, ext.satisfies_C3,
    ):
        assert fn(L, C.ZERO)


def test_c1_c3_examples(B2, M3):
    assert ext.satisfies_C1(B2, C.ALL) and ext.satisfies_C3(B2, C.ALL)
    assert ext.satisfies_C3(M3, C.ALL)


def test_indecomposable_examples(C3, B2, M3):
    assert ext.is_indecomposable(C3)
    assert not ext.is_indecomposable(B2) and not ext.is_indecomposable(M3)


def test_satisfies_q_on_n5_matches_pairwise_definition(N5):
    R = oracles.from_package(N5)
    expected = all(
        _splits(R, a, b)
        for a in R.els if a == R.bottom or C.member(C.SIMPLE, N5.initial(a))
        for b in R.els if R.meet(a, b) == R.bottom
    )
    assert ext.satisfies_Q(N5, C.SIMPLE).holds == expected


def test_verdict_rendering(N5):
    v = ext.PropertyVerdict("x", False, {"a": N5.index("p")})
    assert v.describe(N5) == "false, witness (p)"
    assert v.to_dict(N5) == {"property": "x", "holds": False, "witness": {"a": "p"}}


# -- witnesses re-validate against raw definitions -------------------------------------


def _splits(R, a, b):
    return any(
        R.join(c, d) == R.top and R.meet(c, d) == R.bottom and R.le(a, c) and R.le(b, d)
        for c in R.els for d in R.els
    )


def _essential_closures(R, a):
    Cl = oracles.closed(R)
    return {c for c in Cl if R.le(a, c) and oracles.essential_in(R, a, R.bottom, c)}


@given(lattices(), st.sampled_from(CLASSES))
def test_false_verdicts_carry_genuine_witnesses(L, X):
    R = oracles.from_package(L)
    D = oracles.summands(R)
    in_x = lambda a: C.member(X, L.initial(a))  # noqa: E731

    v = ext.is_type1_extending(L, X)
    if not v:
        a, b = v.witness["a"], v.witness["b"]
        assert in_x(a) and b in oracles.pseudocomplements(R, a) and b not in D
    v = ext.is_weak_type1_extending(L, X)
    if not v:
        a = v.witness["a"]
        assert in_x(a) and not oracles.pseudocomplements(R, a) & D
    v = ext.is_type2_extending(L, X)
    if not v:
        a, c = v.witness["a"], v.witness["c"]
        assert in_x(a) and c in _essential_closures(R, a) and c not in D
    v = ext.satisfies_Q(L, X)
    if not v:
        a, b = v.witness["a"], v.witness["b"]
        assert in_x(a) and R.meet(a, b) == R.bottom and not _splits(R, a, b)
    v = ext.satisfies_C3(L, X)
    if not v:
        a, b = v.witness["a"], v.witness["b"]
        assert in_x(a) and {a, b} <= D and R.meet(a, b) == R.bottom and R.join(a, b) not in D
    v = ext.is_extending(L)
    if not v:
        a = v.witness["a"]
        assert not any(R.le(a, d) and oracles.essential_in(R, a, R.bottom, d) for d in D)


@given(lattices(), st.sampled_from(CLASSES))
def test_strong_forms_imply_weak_forms(L, X):
    if ext.is_type1_extending(L, X):
        assert ext.is_weak_type1_extending(L, X)
    if ext.is_type2_extending(L, X):
        assert ext.is_weak_type2_extending(L, X)
    assert ext.is_x_quasi_continuous(L, X).holds == (
        ext.satisfies_C1(L, X).holds and ext.satisfies_C3(L, X).holds
    )


@given(lattices())
def test_q_all_is_quasi_continuity(L):
    assert ext.satisfies_Q(L, C.ALL).holds == ext.is_quasi_continuous(L).holds


@given(lattices(), st.sampled_from(CLASSES), st.sampled_from(CLASSES))
def test_weak_type1_monotone_under_inclusion(L, X, Y):
    if C.included_locally(X, Y, L) and ext.is_weak_type1_extending(L, Y):
        assert ext.is_weak_type1_extending(L, X)


@given(modular_lattices(), st.sampled_from(CLASSES))
def test_modular_equivalences(L, X):
    assert is_modular(L)
    e = ext.is_extending(L).holds
    assert e == ext.is_type1_extending(L, C.ALL).holds == ext.is_type2_extending(L, C.ALL).holds
    assert ext.is_weak_type2_extending(L, C.ALL).holds == e
    if ext.is_type2_extending(L, X):
        assert ext.is_weak_type1_extending(L, X)
