import json
from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL, lattices
from lattika import classes as C
from lattika.core import canonical_key, chain, independent
from lattika.elements import essentials
from lattika.io import serialize_lattice

BUILTINS = [C.ALL, C.SIMPLE, C.UNIFORM, C.UDIM, C.COMPACT, C.FLEN, C.ZERO]
COMPOSED = [
    C.EssentialHull(C.SIMPLE),
    C.DirectSumPower(C.SIMPLE),
    C.Sum((C.SIMPLE, C.UNIFORM)),
    C.Product((C.SIMPLE, C.SIMPLE)),
    C.Power(C.UNIFORM, 2),
]


def names(L, xs):
    return {L.name(x) for x in xs}


def test_member_examples(C2, B2, C3):
    assert C.member(C.SIMPLE, C2)
    assert C.member(C.Sum((C.SIMPLE, C.SIMPLE)), B2)
    assert C.member(C.EssentialHull(C.SIMPLE), C3)
    assert not C.member(C.SIMPLE, C3)


def test_x_intervals_examples(M3, N5):
    # the trivial interval 0/0 belongs to every class
    assert names(M3, C.x_intervals(C.SIMPLE, M3)) == {"0", "a", "b", "c"}
    assert C.x_intervals(C.ALL, N5) == frozenset(N5.elements)
    assert names(N5, C.x_intervals(C.UNIFORM, N5)) == {"0", "p", "q", "r"}


def test_uniform_dimension_examples(M3, B2):
    assert all(C.uniform_dimension(chain(k)) == 1 for k in range(2, 6))
    assert C.uniform_dimension(M3) == 2 and C.uniform_dimension(B2) == 2


def test_power_is_product_of_copies(M3):
    assert C.member(C.Power(C.SIMPLE, 2), M3)
    for L in SMALL:
        for X in (C.SIMPLE, C.UNIFORM):
            assert C.member(C.Power(X, 2), L) == C.member(C.Product((X, X)), L)
            assert C.member(C.Power(X, 3), L) == C.member(C.Product((X, X, X)), L)


def test_user_set_from_file_and_directory(tmp_path, M3, N5):
    (tmp_path / "one.json").write_text(serialize_lattice(M3))
    X = C.load_user_set(tmp_path / "one.json")
    assert C.member(X, M3) and not C.member(X, N5)
    (tmp_path / "many.json").write_text(json.dumps([json.loads(serialize_lattice(N5))]))
    assert C.member(C.load_user_set(tmp_path / "many.json"), N5)
    assert C.load_user_set(tmp_path).keys == {canonical_key(M3)}


# -- properties ---------------------------------------------------------------------------


@given(lattices(), st.sampled_from(BUILTINS + COMPOSED), st.data())
def test_membership_is_isomorphism_invariant(L, X, data):
    from lattika.core import relabel

    perm = data.draw(st.permutations(range(L.n)))
    assert C.member(X, L) == C.member(X, relabel(L, perm))


def test_trivial_lattice_in_every_class():
    one = chain(1)
    for X in BUILTINS + COMPOSED:
        assert C.member(X, one)


@given(lattices())
def test_finite_scale_collapse(L):
    assert C.member(C.UDIM, L) and C.member(C.COMPACT, L) and C.member(C.FLEN, L)
    assert C.member(C.UNIFORM, L) == (C.uniform_dimension(L) <= 1)


@given(lattices(), st.sampled_from(BUILTINS + COMPOSED))
def test_class_inside_its_essential_hull(L, X):
    if C.member(X, L):
        assert C.member(C.EssentialHull(X), L)


def _naive_sum(children, L):
    """Some independent tuple (zeros allowed) joining to 1 with each a_i/0 in X_i."""
    z = L.bottom
    for tup in product(L.elements, repeat=len(children)):
        nonzero = [a for a in tup if a != z]
        if nonzero and not independent(L, nonzero):
            continue
        if L.join_all(tup) == L.top and all(C.member(X, L.initial(a)) for X, a in zip(children, tup)):
            return True
    return False


def _naive_product(children, L):
    """Some chain 0 = a_0 <= ... <= a_k = 1 with a_i/a_(i-1) in X_i."""
    for tup in product(L.elements, repeat=len(children) - 1):
        chain_ = [L.bottom, *tup, L.top]
        if all(L.leq(x, y) for x, y in zip(chain_, chain_[1:])) and all(
            C.member(X, L.interval(x, y)[0]) for X, x, y in zip(children, chain_, chain_[1:])
        ):
            return True
    return False


def _naive_hull(X, L):
    return any(C.member(X, L.initial(a)) for a in essentials(L))


def test_combinators_match_naive_definitions():
    pairs = [(C.SIMPLE, C.SIMPLE), (C.SIMPLE, C.UNIFORM), (C.UNIFORM, C.UNIFORM)]
    for L in SMALL:
        for kids in pairs:
            assert C.member(C.Sum(kids), L) == _naive_sum(kids, L)
            assert C.member(C.Product(kids), L) == _naive_product(kids, L)
        for X in (C.SIMPLE, C.UNIFORM):
            assert C.member(C.EssentialHull(X), L) == _naive_hull(X, L)
            k = max(1, C.uniform_dimension(L))
            assert C.member(C.DirectSumPower(X), L) == _naive_sum((X,) * k, L)


def test_combinators_are_monotone():
    X, Y = C.SIMPLE, C.UNIFORM
    for L in SMALL:
        if not C.included_locally(X, Y, L):
            continue
        for wrap in (C.EssentialHull, lambda Z: C.Sum((Z, C.SIMPLE)), lambda Z: C.Product((Z, C.ALL))):
            assert C.x_intervals(wrap(X), L) <= C.x_intervals(wrap(Y), L)


def test_local_class_properties(M3, N5):
    assert C.closed_under_initial_locally(C.ALL, N5)
    assert C.closed_under_initial_locally(C.UNIFORM, N5)
    assert C.closed_under_quotients_locally(C.SIMPLE, M3)
    only_m3 = C.UserSet(frozenset({canonical_key(M3)}), "m3")
    assert not C.closed_under_initial_locally(only_m3, M3)
    assert C.essentially_closed_locally(C.ALL, M3)
    assert C.included_locally(C.SIMPLE, C.UNIFORM, M3)
