"""Entwining cells: axioms, morphisms, products, converter round-trips."""

import pytest

from wreathkit.algebra import check_comodule, check_module
from wreathkit.entwine import (
    EmCell, EmMorphism, action_from_entwining, check_em_morphism,
    check_em_object, coaction_from_entwining, em_identity,
    em_morphism_identity, em_tensor, em_vertical, entwining_from_action,
    entwining_from_coaction,
)
from wreathkit.errors import KindMismatch, PreconditionFailed
from wreathkit.exactlin import (
    FreeModule, compose, identity, lin, swap_map, tensor_map, tensor_obj,
)
from wreathkit.zoo import build_demo

KP = build_demo("kplusl", 2)
C2 = build_demo("flip-c2")
C3 = build_demo("flip-c3")


def corpus_cells():
    """One cell of every kind, plus the non-flip square-zero cell."""
    x = FreeModule(3, "X")
    mon, com = C2.core["monoid"], C2.core["comonoid"]
    mon3, com3 = C3.core["monoid"], C3.core["comonoid"]
    b2, b3 = mon.carrier, mon3.carrier
    return [
        EmCell("rc", KP.core["comonoid"], KP.core["monoid"].carrier,
               KP.core["hbar"]),
        EmCell("rc", com, x, swap_map(b2, x)),
        EmCell("lc", com3, x, swap_map(x, b3)),
        EmCell("ra", mon, x, swap_map(b2, x)),
        EmCell("la", mon3, x, swap_map(x, b3)),
    ]


@pytest.mark.parametrize("cell", corpus_cells(),
                         ids=lambda c: f"{c.kind}-{c.carrier.dim}")
def test_corpus_cells_pass(cell):
    out = check_em_object(cell)
    assert out.passed and out.law == f"em:{cell.kind}"


def test_cell_kind_validation():
    mon, com = C2.core["monoid"], C2.core["comonoid"]
    b = mon.carrier
    with pytest.raises(KindMismatch):
        EmCell("rc", mon, b, swap_map(b, b))
    with pytest.raises(KindMismatch):
        EmCell("la", com, b, swap_map(b, b))
    with pytest.raises(KindMismatch):
        EmCell("xx", mon, b, swap_map(b, b))


def test_broken_cell_fails_named_axiom():
    com = C2.core["comonoid"]
    b = com.carrier
    x = FreeModule(2, "X")
    bad = EmCell("rc", com, x,
                 lin(tensor_obj(b, x), tensor_obj(x, b),
                     [[1, 0, 0, 0], [0, 0, 1, 0],
                      [0, 1, 0, 0], [0, 0, 0, 2]]))
    out = check_em_object(bad)
    assert not out.passed
    assert any(a.name == "(1-cell′)" for a in out.failing())


@pytest.mark.parametrize("cell", corpus_cells(),
                         ids=lambda c: f"{c.kind}-{c.carrier.dim}")
def test_identity_morphism_passes(cell):
    assert check_em_morphism(em_morphism_identity(cell)).passed


def test_morphism_mixed_kind_rejected():
    cells = corpus_cells()
    rc, lc = cells[1], cells[2]
    with pytest.raises(KindMismatch):
        check_em_morphism(EmMorphism(rc, lc, rc.cell))


@pytest.mark.parametrize("cell", corpus_cells(),
                         ids=lambda c: f"{c.kind}-{c.carrier.dim}")
def test_identity_cell_absorbs_in_tensor(cell):
    e = em_identity(cell.kind, cell.base)
    assert em_tensor(e, cell).cell == cell.cell
    assert em_tensor(cell, e).cell == cell.cell
    assert em_tensor(e, cell).carrier == cell.carrier


def test_tensor_of_flips_is_flip():
    com = C2.core["comonoid"]
    b = com.carrier
    x, y = FreeModule(2, "X"), FreeModule(3, "Y")
    cx = EmCell("rc", com, x, swap_map(b, x))
    cy = EmCell("rc", com, y, swap_map(b, y))
    both = em_tensor(cx, cy)
    assert both.cell == swap_map(b, tensor_obj(x, y))
    assert check_em_object(both).passed


def flip_morphism(kind, base, g):
    """base⊗g (or g⊗base) is a morphism between flip cells."""
    b = base.carrier
    idb = identity(b)
    x, x2 = g.dom, g.cod
    if kind in ("rc", "la"):
        dom = EmCell(kind, base, x, swap_map(b, x) if kind == "rc"
                     else swap_map(x, b))
        cod = EmCell(kind, base, x2, swap_map(b, x2) if kind == "rc"
                     else swap_map(x2, b))
        return EmMorphism(dom, cod, tensor_map(idb, g))
    dom = EmCell(kind, base, x, swap_map(x, b) if kind == "lc"
                 else swap_map(b, x))
    cod = EmCell(kind, base, x2, swap_map(x2, b) if kind == "lc"
                 else swap_map(b, x2))
    return EmMorphism(dom, cod, tensor_map(g, idb))


@pytest.mark.parametrize("kind", ("rc", "lc", "ra", "la"))
def test_vertical_product_of_flip_morphisms(kind):
    base = (C2.core["comonoid"] if kind in ("rc", "lc")
            else C2.core["monoid"])
    g1 = lin(FreeModule(2), FreeModule(2), [[1, 1], [0, 1]])
    g2 = lin(FreeModule(2), FreeModule(2), [[2, 0], [1, 1]])
    f = flip_morphism(kind, base, g1)
    g = flip_morphism(kind, base, g2)
    assert check_em_morphism(f).passed and check_em_morphism(g).passed
    prod = em_vertical(f, g)
    assert check_em_morphism(prod).passed
    assert prod.dom.cell == em_tensor(f.dom, g.dom).cell


@pytest.mark.parametrize("cell", corpus_cells(),
                         ids=lambda c: f"{c.kind}-{c.carrier.dim}")
def test_vertical_of_identities_is_identity(cell):
    i = em_morphism_identity(cell)
    prod = em_vertical(i, i)
    assert prod.map == em_morphism_identity(em_tensor(cell, cell)).map


def test_vertical_rejects_non_morphisms():
    com = C2.core["comonoid"]
    b = com.carrier
    x = FreeModule(2, "X")
    cell = EmCell("rc", com, x, swap_map(b, x))
    junk = lin(tensor_obj(b, x), tensor_obj(b, x),
               [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    bad = EmMorphism(cell, cell, junk)
    with pytest.raises(PreconditionFailed) as exc:
        em_vertical(bad, em_morphism_identity(cell))
    assert exc.value.axiom == "(vert-forms)"


@pytest.mark.parametrize("cell", [c for c in corpus_cells()
                                  if c.kind in ("rc", "lc")],
                         ids=lambda c: f"{c.kind}-{c.carrier.dim}")
def test_coaction_round_trip(cell):
    comod = coaction_from_entwining(cell)
    assert check_comodule(comod).passed
    coaction = comod.right if cell.kind == "rc" else comod.left
    back = entwining_from_coaction(cell.base, cell.carrier, coaction,
                                   cell.kind)
    assert back.cell == cell.cell
    again = coaction_from_entwining(back)
    assert again.left == comod.left and again.right == comod.right


@pytest.mark.parametrize("cell", [c for c in corpus_cells()
                                  if c.kind in ("ra", "la")],
                         ids=lambda c: f"{c.kind}-{c.carrier.dim}")
def test_action_round_trip(cell):
    mod = action_from_entwining(cell)
    assert check_module(mod).passed
    action = mod.left if cell.kind == "ra" else mod.right
    back = entwining_from_action(cell.base, cell.carrier, action, cell.kind)
    assert back.cell == cell.cell
    again = action_from_entwining(back)
    assert again.left == mod.left and again.right == mod.right


def test_converters_reject_wrong_kind():
    cells = corpus_cells()
    ra = next(c for c in cells if c.kind == "ra")
    rc = next(c for c in cells if c.kind == "rc")
    with pytest.raises(KindMismatch):
        coaction_from_entwining(ra)
    with pytest.raises(KindMismatch):
        action_from_entwining(rc)
