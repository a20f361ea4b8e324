"""Monoid/comonoid checkers against independent structure-constant oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathkit.algebra import (
    ComoduleData, ComonoidData, ModuleData, MonoidData, check_comodule,
    check_comonoid, check_comonoid_morphism, check_module, check_monoid,
    check_monoid_morphism,
)
from wreathkit.errors import DimensionMismatch, KindMismatch
from wreathkit.exactlin import UNIT, FreeModule, identity, lin, tensor_map

from . import oracles


def monoid_from_tables(tab) -> MonoidData:
    n = tab["dim"]
    b = FreeModule(n)
    return MonoidData(b, lin(FreeModule(n * n), b, oracles.mul_matrix(tab)),
                      lin(UNIT, b, oracles.unit_matrix(tab)))


def comonoid_from_tables(tab) -> ComonoidData:
    n = tab["dim"]
    b = FreeModule(n)
    return ComonoidData(b, lin(b, FreeModule(n * n),
                               oracles.comul_matrix(tab)),
                        lin(b, UNIT, oracles.counit_matrix(tab)))


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_cyclic_group_algebra_laws(n):
    tab = oracles.cyclic_tables(n)
    assert check_monoid(monoid_from_tables(tab)).passed
    assert check_comonoid(comonoid_from_tables(tab)).passed


@pytest.mark.parametrize("d", (1, 2, 3))
def test_square_zero_extension_laws(d):
    tab = oracles.kplusl_tables(d)
    assert check_monoid(monoid_from_tables(tab)).passed
    assert check_comonoid(comonoid_from_tables(tab)).passed


def test_failure_report_is_precise():
    tab = oracles.cyclic_tables(2)
    mon = monoid_from_tables(tab)
    broken = MonoidData(mon.carrier, mon.mul,
                        lin(UNIT, mon.carrier, [[1], [1]]))
    out = check_monoid(broken)
    assert not out.passed
    assert [a.name for a in out.failing()] == ["(mon-unit-l)",
                                               "(mon-unit-r)"]
    assert out.axiom("(mon-assoc)").passed


def test_signed_mul_is_still_a_monoid():
    # dim-2 algebra with e1*e1 = e0 is the order-2 group algebra in
    # disguise; both the checker and the oracle must call it a monoid
    tab = {
        "dim": 2,
        "mul": {(0, 0): {0: Fraction(1)}, (0, 1): {1: Fraction(1)},
                (1, 0): {1: Fraction(1)}, (1, 1): {0: Fraction(1)}},
        "unit": {0: Fraction(1)},
    }
    assert oracles.mul_assoc_holds(tab)
    assert oracles.unit_left_holds(tab) and oracles.unit_right_holds(tab)
    assert check_monoid(monoid_from_tables({**tab, "dim": 2})).passed


def test_regular_module_and_comodule():
    tab = oracles.cyclic_tables(3)
    mon = monoid_from_tables(tab)
    com = comonoid_from_tables(tab)
    m = ModuleData("bi", mon, mon.carrier, left=mon.mul, right=mon.mul)
    assert check_module(m).passed
    c = ComoduleData("bi", com, com.carrier, left=com.comul, right=com.comul)
    assert check_comodule(c).passed


def test_module_kind_validation():
    tab = oracles.cyclic_tables(2)
    mon = monoid_from_tables(tab)
    with pytest.raises(KindMismatch):
        check_module(ModuleData("middle", mon, mon.carrier, left=mon.mul))
    with pytest.raises(DimensionMismatch):
        check_module(ModuleData("left", mon, mon.carrier))
    out = check_module(ModuleData("left", mon, mon.carrier, left=mon.mul))
    assert [a.name for a in out.axioms] == ["(lmod-unit)", "(lmod-assoc)"]


def test_morphism_checks():
    t2, t4 = oracles.cyclic_tables(2), oracles.cyclic_tables(4)
    m2, m4 = monoid_from_tables(t2), monoid_from_tables(t4)
    c2, c4 = comonoid_from_tables(t2), comonoid_from_tables(t4)
    # the group map sending the generator of C2 to the square in C4
    f = lin(m2.carrier, m4.carrier, [[1, 0], [0, 0], [0, 1], [0, 0]])
    assert check_monoid_morphism(f, m2, m4).passed
    g = lin(m4.carrier, m2.carrier,
            [[1, 0, 1, 0], [0, 1, 0, 1]])  # reduction mod 2
    assert check_monoid_morphism(g, m4, m2).passed
    assert check_comonoid_morphism(g, c4, c2).passed
    bad = lin(m2.carrier, m4.carrier, [[1, 0], [0, 1], [0, 0], [0, 0]])
    out = check_monoid_morphism(bad, m2, m4)
    assert not out.passed and not out.axiom("(mor-mul)").passed


# ---- oracle-agreement fuzz: verdicts must match axiom by axiom ----

coeffs = st.integers(-2, 2).map(Fraction)


@st.composite
def random_monoid_tables(draw):
    n = draw(st.integers(1, 3))
    mul = {}
    for i in range(n):
        for j in range(n):
            col = draw(st.lists(coeffs, min_size=n, max_size=n))
            mul[i, j] = {k: c for k, c in enumerate(col) if c}
    unit_col = draw(st.lists(coeffs, min_size=n, max_size=n))
    return {"dim": n, "mul": mul,
            "unit": {k: c for k, c in enumerate(unit_col) if c}}


@st.composite
def random_comonoid_tables(draw):
    n = draw(st.integers(1, 3))
    comul = {}
    for i in range(n):
        col = draw(st.lists(coeffs, min_size=n * n, max_size=n * n))
        comul[i] = {(k // n, k % n): c for k, c in enumerate(col) if c}
    counit = draw(st.lists(coeffs, min_size=n, max_size=n))
    return {"dim": n, "comul": comul,
            "counit": {k: c for k, c in enumerate(counit) if c}}


@settings(max_examples=60, deadline=None)
@given(random_monoid_tables())
def test_monoid_checker_agrees_with_oracle(tab):
    out = check_monoid(monoid_from_tables(tab))
    assert out.axiom("(mon-unit-l)").passed == oracles.unit_left_holds(tab)
    assert out.axiom("(mon-unit-r)").passed == oracles.unit_right_holds(tab)
    assert out.axiom("(mon-assoc)").passed == oracles.mul_assoc_holds(tab)


@settings(max_examples=60, deadline=None)
@given(random_comonoid_tables())
def test_comonoid_checker_agrees_with_oracle(tab):
    out = check_comonoid(comonoid_from_tables(tab))
    assert out.axiom("(com-counit-l)").passed == \
        oracles.counit_left_holds(tab)
    assert out.axiom("(com-counit-r)").passed == \
        oracles.counit_right_holds(tab)
    assert out.axiom("(com-coassoc)").passed == oracles.coassoc_holds(tab)
