"""Registered statements R1..R47 as executable checks.

A check has a *scope* (which lattices its standing hypotheses admit, e.g.
modular), an optional *hypothesis* over the lattice and its class bindings
(class-level conditions such as "closed under initial intervals", sampled
on the intervals of the lattice at hand) and a *conclusion* that returns
``None`` when the statement holds or a witness dict when it fails.

Finite lattices are complete, compactly generated and upper continuous, so
"idiom" and "modular upper continuous" scopes reduce to modularity.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .. import classes as C
from .. import extending as ext
from ..core import Lattice, is_modular
from ..elements import (
    closed_elements,
    closed_in,
    complements,
    essential_closures,
    essentials,
    is_atom,
    is_essential_in,
    leq_e,
    pseudocomplements,
    relative_pseudocomplements,
    summand_elements,
)

ALWAYS = "always-holds"
EXPLORATORY = "exploratory"


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    scope_name: str
    scope: Callable[[Lattice], bool]
    conclusion: Callable[..., dict | None]
    arity: int = 0
    hypothesis: Callable[..., bool] | None = None
    expected: str = ALWAYS
    degenerate: str | None = None

    def bindings(self, classes: list) -> list[tuple]:
        if self.arity == 0:
            return [()]
        return list(product(classes, repeat=self.arity))


def any_lattice(L: Lattice) -> bool:
    return True


def modular(L: Lattice) -> bool:
    return is_modular(L)


def modular_indecomposable(L: Lattice) -> bool:
    return is_modular(L) and ext.is_indecomposable(L)


REGISTRY: dict[str, TheoremCheck] = {}


def register(id, description, scope=modular, arity=0, hypothesis=None, expected=ALWAYS, degenerate=None):
    scope_name = {any_lattice: "any", modular: "modular", modular_indecomposable: "modular+indecomposable"}[scope]

    def deco(fn):
        REGISTRY[id] = TheoremCheck(
            id, description, scope_name, scope, fn, arity, hypothesis, expected, degenerate
        )
        return fn

    return deco


def _first(gen):
    return next(gen, None)


def _iff(**named) -> dict | None:
    """Witness when the named truth values disagree."""
    return None if len(set(named.values())) <= 1 else dict(named)


def _implies(premise: bool, conclusion: bool, **named) -> dict | None:
    return dict(named) if premise and not conclusion else None


t1 = lambda L, X: ext.is_type1_extending(L, X).holds  # noqa: E731
t2 = lambda L, X: ext.is_type2_extending(L, X).holds  # noqa: E731
wt1 = lambda L, X: ext.is_weak_type1_extending(L, X).holds  # noqa: E731
wt2 = lambda L, X: ext.is_weak_type2_extending(L, X).holds  # noqa: E731
Q = lambda L, X: ext.satisfies_Q(L, X).holds  # noqa: E731


def _pairs(L):
    return product(L.elements, repeat=2)


def _triples(L):
    return product(L.elements, repeat=3)


# -- essential and closed elements ----------------------------------------------


@register("R1", "a^b=0 and (a v b)^c=0 imply a^(b v c)=0")
def r1(L):
    z = L.bottom
    return _first(
        {"a": a, "b": b, "c": c}
        for a, b, c in _triples(L)
        if L.meet(a, b) == z and L.meet(L.join(a, b), c) == z and L.meet(a, L.join(b, c)) != z
    )


@register("R2", "b in P(a) iff b in C(L), a^b=0 and a v b essential")
def r2(L):
    Cl, E = closed_elements(L), essentials(L)
    return _first(
        {"a": a, "b": b}
        for a, b in _pairs(L)
        if (b in pseudocomplements(L, a))
        != (b in Cl and L.meet(a, b) == L.bottom and L.join(a, b) in E)
    )


@register("R3", "b in P(a) iff a^b=0 and a v b essential in 1/b")
def r3(L):
    return _first(
        {"a": a, "b": b}
        for a, b in _pairs(L)
        if (b in pseudocomplements(L, a))
        != (L.meet(a, b) == L.bottom and is_essential_in(L, L.join(a, b), b, L.top))
    )


@register("R4", "every element has an essential closure")
def r4(L):
    return _first({"a": a} for a in L.elements if not essential_closures(L, a))


@register("R5", "a <=e c implies a^b <=e c^b", scope=any_lattice)
def r5(L):
    return _first(
        {"a": a, "b": b, "c": c}
        for a, b, c in _triples(L)
        if leq_e(L, a, c) and not leq_e(L, L.meet(a, b), L.meet(c, b))
    )


@register("R6", "a <=e c and c^b=0 imply a v b <=e c v b")
def r6(L):
    return _first(
        {"a": a, "b": b, "c": c}
        for a, b, c in _triples(L)
        if leq_e(L, a, c) and L.meet(c, b) == L.bottom and not leq_e(L, L.join(a, b), L.join(c, b))
    )


@register("R7", "a^b <=e b implies a <=e a v b")
def r7(L):
    return _first(
        {"a": a, "b": b}
        for a, b in _pairs(L)
        if leq_e(L, L.meet(a, b), b) and not leq_e(L, a, L.join(a, b))
    )


@register("R8", "D(L) is contained in C(L)")
def r8(L):
    bad = sorted(summand_elements(L) - closed_elements(L))
    return {"d": bad[0]} if bad else None


@register("R9", "b in P(a), c in P(b), a <= c imply a <=e c")
def r9(L):
    return _first(
        {"a": a, "b": b, "c": c}
        for a in L.elements
        for b in sorted(pseudocomplements(L, a))
        for c in sorted(pseudocomplements(L, b))
        if L.leq(a, c) and not leq_e(L, a, c)
    )


# -- type-1 / type-2 extending ---------------------------------------------------


@register("R10", "extending iff type-1 all-extending iff type-2 all-extending")
def r10(L):
    return _iff(
        extending=ext.is_extending(L).holds, type1_all=t1(L, C.ALL), type2_all=t2(L, C.ALL)
    )


@register("R11", "type-2 X-extending implies weakly type-1 X-extending", arity=1)
def r11(L, X):
    return _implies(t2(L, X), wt1(L, X), type2=True, wtype1=False)


@register(
    "R12",
    "X in Y: weakly type-1 Y-extending implies weakly type-1 X-extending",
    scope=any_lattice,
    arity=2,
    hypothesis=lambda L, X, Y: C.included_locally(X, Y, L),
)
def r12(L, X, Y):
    return _implies(wt1(L, Y), wt1(L, X), wtype1_Y=True, wtype1_X=False)


@register("R13", "weakly type-1 X-extending iff weakly type-1 X^e-extending", arity=1)
def r13(L, X):
    return _iff(wtype1_X=wt1(L, X), wtype1_Xe=wt1(L, C.EssentialHull(X)))


@register("R14", "type-2 X^e-extending iff weakly type-2 X^e-extending", arity=1)
def r14(L, X):
    Xe = C.EssentialHull(X)
    return _iff(type2_Xe=t2(L, Xe), wtype2_Xe=wt2(L, Xe))


@register("R15", "type-1 X^e-extending iff type-1 X-extending", arity=1)
def r15(L, X):
    return _iff(type1_Xe=t1(L, C.EssentialHull(X)), type1_X=t1(L, X))


@register("R16", "type-2 X-extending iff weakly type-2 X^e-extending", arity=1)
def r16(L, X):
    return _iff(type2_X=t2(L, X), wtype2_Xe=wt2(L, C.EssentialHull(X)))


@register("R17", "weakly type-2 all-extending iff extending")
def r17(L):
    return _iff(wtype2_all=wt2(L, C.ALL), extending=ext.is_extending(L).holds)


def _atom_plus_uniform(L):
    return any(
        is_atom(L, s) and C.is_uniform(L.initial(u))
        for s in L.elements
        for u in sorted(complements(L, s))
    )


@register(
    "R18",
    "1 = s (+) u with s an atom and u uniform implies weakly type-1 all-extending",
    hypothesis=lambda L: _atom_plus_uniform(L),
)
def r18(L):
    return ext.is_weak_type1_extending(L, C.ALL).witness


@register("R19", "a in C(L) and b in C(a/0) imply b in C(L)")
def r19(L):
    Cl = closed_elements(L)
    return _first(
        {"a": a, "b": b} for a in sorted(Cl) for b in sorted(closed_in(L, a)) if b not in Cl
    )


@register("R20", "given 1 = a (+) b and c,d <= a: d rel. pseudocomplement of c in a/0 iff d v b in P(c)")
def r20(L):
    for a in L.elements:
        for b in sorted(complements(L, a)):
            for c in L.below(a):
                rel = relative_pseudocomplements(L, c, a)
                for d in L.below(a):
                    if (d in rel) != (L.join(d, b) in pseudocomplements(L, c)):
                        return {"a": a, "b": b, "c": c, "d": d}
    return None


def _heredity(L, X, elems, prop, var):
    """prop(L) iff prop(e/0) for every e in elems; witness is the first failing e."""
    whole = prop(L, X)
    failing = _first(e for e in sorted(elems) if not prop(L.initial(e), X))
    if whole == (failing is None):
        return None
    return {var: failing, "L": whole} if failing is not None else {"L": whole, "parts": True}


def _type1_heredity(L, X, elems):
    return _heredity(L, X, elems, t1, "a")


@register("R21", "type-1 X-extending iff a/0 is type-1 X-extending for every a in D(L)", arity=1)
def r21(L, X):
    return _type1_heredity(L, X, summand_elements(L))


@register(
    "R21x",
    "type-1 X-extending iff a/0 is type-1 X-extending for every a (literal form)",
    arity=1,
    expected=EXPLORATORY,
)
def r21x(L, X):
    return _type1_heredity(L, X, L.elements)


@register("R22", "type-2 X-extending iff c/0 is type-2 X-extending for every c in C(L)", arity=1)
def r22(L, X):
    return _heredity(L, X, closed_elements(L), t2, "c")


@register("R23", "c in C(L), a > c, a in E(L) imply a in E(1/c)")
def r23(L):
    E = essentials(L)
    return _first(
        {"c": c, "a": a}
        for c in sorted(closed_elements(L))
        for a in sorted(E)
        if L.lt(c, a) and not is_essential_in(L, a, c, L.top)
    )


def _closed_with_x_quotient_are_summands(L, X, quotient_ok) -> dict | None:
    D = summand_elements(L)
    for a in sorted(closed_elements(L)):
        if a in D:
            continue
        if quotient_ok(a):
            return {"a": a}
    return None


@register(
    "R24",
    "X closed under initial intervals: type-1 X-extending iff every closed a with some "
    "c in E(1/a), c/a in X, is a summand",
    arity=1,
    hypothesis=lambda L, X: C.closed_under_initial_locally(X, L),
)
def r24(L, X):
    def quotient_ok(a):
        return any(
            is_essential_in(L, c, a, L.top) and C.member(X, L.interval(a, c)[0])
            for c in L.above(a)
        )

    rhs = _closed_with_x_quotient_are_summands(L, X, quotient_ok)
    return _iff(type1_X=t1(L, X), criterion=rhs is None)


@register(
    "R25",
    "type-1 U-extending iff every closed a with 1/a of finite uniform dimension is a summand",
    degenerate="finite uniform dimension holds for every finite lattice",
)
def r25(L):
    rhs = _closed_with_x_quotient_are_summands(
        L, C.UDIM, lambda a: C.member(C.UDIM, L.interval(a, L.top)[0])
    )
    return _iff(type1_U=t1(L, C.UDIM), criterion=rhs is None)


@register(
    "R26",
    "indecomposable: uniform iff type-1 G-extending iff type-2 G-extending",
    scope=modular_indecomposable,
    degenerate="compactly generated and compact class G hold for every finite lattice",
)
def r26(L):
    return _iff(uniform=C.is_uniform(L), type1_G=t1(L, C.COMPACT), type2_G=t2(L, C.COMPACT))


# -- direct sums of classes ---------------------------------------------------------


@register("R27", "type-1 (X1 (+) X2)-extending iff type-1 X1- and X2-extending", arity=2)
def r27(L, X, Y):
    return _iff(type1_sum=t1(L, C.Sum((X, Y))), type1_each=t1(L, X) and t1(L, Y))


@register("R28", "type-2 (X1 (+) X2)-extending iff type-2 X1- and X2-extending", arity=2)
def r28(L, X, Y):
    return _iff(type2_sum=t2(L, C.Sum((X, Y))), type2_each=t2(L, X) and t2(L, Y))


@register("R29", "type-1 (type-2) X-extending iff type-1 (type-2) X^(+)-extending", arity=1)
def r29(L, X):
    Xs = C.DirectSumPower(X)
    return _iff(type1_X=t1(L, X), type1_Xsum=t1(L, Xs)) or _iff(
        type2_X=t2(L, X), type2_Xsum=t2(L, Xs)
    )


@register(
    "R30",
    "type-1 (type-2) U-extending iff type-1 (type-2) U1-extending",
    degenerate="U (finite uniform dimension) is every finite lattice",
)
def r30(L):
    return _iff(type1_U=t1(L, C.UDIM), type1_U1=t1(L, C.UNIFORM)) or _iff(
        type2_U=t2(L, C.UDIM), type2_U1=t2(L, C.UNIFORM)
    )


def _on_summands(L, pred):
    return pred(L) and all(pred(L.initial(d)) for d in summand_elements(L))


@register(
    "R31",
    "L and all its summands weakly type-1 U1-extending imply the same for U",
    hypothesis=lambda L: _on_summands(L, lambda K: wt1(K, C.UNIFORM)),
)
def r31(L):
    for d in [L.top] + sorted(summand_elements(L)):
        if not wt1(L.initial(d), C.UDIM):
            return {"d": d}
    return None


# -- products of classes -------------------------------------------------------------


@register(
    "R32",
    "X2 closed under initial intervals or quotients: type-2 X1X2-extending iff "
    "type-2 X1- and X2-extending",
    arity=2,
    hypothesis=lambda L, X, Y: C.closed_under_initial_locally(Y, L)
    or C.closed_under_quotients_locally(Y, L),
)
def r32(L, X, Y):
    return _iff(type2_prod=t2(L, C.Product((X, Y))), type2_each=t2(L, X) and t2(L, Y))


@register(
    "R33",
    "X2 closed under initial intervals: type-1 X1X2-extending iff type-1 X1- and X2-extending",
    arity=2,
    hypothesis=lambda L, X, Y: C.closed_under_initial_locally(Y, L),
)
def r33(L, X, Y):
    return _iff(type1_prod=t1(L, C.Product((X, Y))), type1_each=t1(L, X) and t1(L, Y))


@register(
    "R34",
    "type-2 L_f-extending iff type-2 S-extending",
    degenerate="finite length holds for every finite lattice",
)
def r34(L):
    return _iff(type2_flen=t2(L, C.FLEN), type2_simple=t2(L, C.SIMPLE))


@register("R35", "finite modular: extending iff type-1 S-extending")
def r35(L):
    return _iff(extending=ext.is_extending(L).holds, type1_simple=t1(L, C.SIMPLE))


# -- quasi-continuity -----------------------------------------------------------------


def _summand_sums_closed(L):
    D = summand_elements(L)
    return all(L.join(a, b) in D for a in D for b in D if L.meet(a, b) == L.bottom)


@register("R36", "(every a essential in a summand) and (D closed under disjoint joins) iff quasi-continuous")
def r36(L):
    cond1 = ext.is_extending(L).holds
    cond2 = _summand_sums_closed(L)
    return _iff(conditions=cond1 and cond2, quasi_continuous=ext.is_quasi_continuous(L).holds)


@register("R37", "quasi-continuous iff Q(all)", scope=any_lattice)
def r37(L):
    return _iff(quasi_continuous=ext.is_quasi_continuous(L).holds, Q_all=Q(L, C.ALL))


@register("R38", "Q(X) and a in D(L) imply a/0 satisfies Q(X)", arity=1)
def r38(L, X):
    if not Q(L, X):
        return None
    return _first({"a": a} for a in sorted(summand_elements(L)) if not Q(L.initial(a), X))


def _summand_above_each_x_interval(L, X, need_b_each: bool):
    for a in sorted(C.x_intervals(X, L)):
        found = []
        for b in sorted(pseudocomplements(L, a)):
            ok = any(leq_e(L, a, a2) for a2 in complements(L, b))
            found.append(ok)
            if need_b_each and not ok:
                return {"a": a, "b": b}
        if not need_b_each and not any(found):
            return {"a": a}
    return None


@register(
    "R39",
    "Q(X), a/0 in X, b in P(a) imply 1 = a' (+) b with a <=e a'",
    arity=1,
    hypothesis=lambda L, X: Q(L, X),
)
def r39(L, X):
    return _summand_above_each_x_interval(L, X, need_b_each=True)


@register(
    "R39c",
    "every X-interval a/0 has b in P(a) and a' with 1 = a' (+) b, a <=e a' (literal form, no Q(X) assumed)",
    arity=1,
    expected=EXPLORATORY,
)
def r39c(L, X):
    return _summand_above_each_x_interval(L, X, need_b_each=False)


@register("R40", "(C3)_X iff disjoint a,b in D with a/0 in X have 1 = a (+) b' with b <= b'", arity=1)
def r40(L, X):
    D = summand_elements(L)
    xs = C.x_intervals(X, L)
    rhs = all(
        any(L.leq(b, b2) for b2 in complements(L, a))
        for a in D & xs
        for b in D
        if L.meet(a, b) == L.bottom
    )
    return _iff(C3=ext.satisfies_C3(L, X).holds, criterion=rhs)


@register("R41", "Q(X) implies type-1 X-extending and (C1)_X", arity=1)
def r41(L, X):
    return _implies(
        Q(L, X),
        t1(L, X) and ext.satisfies_C1(L, X).holds,
        Q=True,
        type1_and_C1=False,
    )


@register("R42", "Q(X) implies X-quasi-continuous", arity=1)
def r42(L, X):
    return _implies(Q(L, X), ext.is_x_quasi_continuous(L, X).holds, Q=True, xqc=False)


@register(
    "R43",
    "X = X^e: Q(X) iff (X-quasi-continuous and type-1) iff (type-1, type-2 and (C3)_X)",
    arity=1,
    hypothesis=lambda L, X: C.essentially_closed_locally(X, L),
)
def r43(L, X):
    ty1 = t1(L, X)
    return _iff(
        Q=Q(L, X),
        xqc_and_type1=ext.is_x_quasi_continuous(L, X).holds and ty1,
        type1_type2_C3=ty1 and t2(L, X) and ext.satisfies_C3(L, X).holds,
    )


@register(
    "R44",
    "X in Y: Q(Y) implies Q(X)",
    scope=any_lattice,
    arity=2,
    hypothesis=lambda L, X, Y: C.included_locally(X, Y, L),
)
def r44(L, X, Y):
    return _implies(Q(L, Y), Q(L, X), Q_Y=True, Q_X=False)


@register("R45", "Q(X1 (+) X2) iff Q(X1) and Q(X2)", arity=2)
def r45(L, X, Y):
    return _iff(Q_sum=Q(L, C.Sum((X, Y))), Q_each=Q(L, X) and Q(L, Y))


@register("R46", "Q(X) iff Q(X^(+))", arity=1)
def r46(L, X):
    return _iff(Q_X=Q(L, X), Q_Xsum=Q(L, C.DirectSumPower(X)))


@register("R47", "X = X1 (+) X2: Q(X^e) iff Q(X1^e) and Q(X2^e)", arity=2)
def r47(L, X, Y):
    E = C.EssentialHull
    return _iff(Q_Xe=Q(L, E(C.Sum((X, Y)))), Q_each=Q(L, E(X)) and Q(L, E(Y)))


DEFAULT_BINDINGS = (
    C.ALL,
    C.SIMPLE,
    C.UNIFORM,
    C.EssentialHull(C.SIMPLE),
    C.Sum((C.SIMPLE, C.UNIFORM)),
)


def check_ids() -> list[str]:
    """Registry ids in numeric order (R21x after R21)."""

    def key(cid):
        digits = "".join(ch for ch in cid[1:] if ch.isdigit())
        return (int(digits), cid)

    return sorted(REGISTRY, key=key)

