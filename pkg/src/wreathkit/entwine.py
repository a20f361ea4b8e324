"""Entwining cells and their 2-categorical calculus.

Four kinds of cell, one generic checker driven by a direction table:

  rc: base comonoid C, cell x: C⊗X -> X⊗C   (right comodule side)
  lc: base comonoid C, cell p: P⊗C -> C⊗P   (left comodule side)
  ra: base monoid  A, cell u: A⊗U -> U⊗A   (right module side)
  la: base monoid  A, cell m: M⊗A -> A⊗M   (left module side)

Each kind carries: the two cell axioms, the morphism conditions, horizontal
tensor of cells, the two displayed forms of the vertical product of morphisms
(computed both ways and required to agree), the identity cell, and the
(co)action converters that recast a cell as a bi(co)module on C⊗X and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

from .algebra import (
    ComoduleData, ComonoidData, ModuleData, MonoidData, _ax, _expect,
    check_comonoid, check_monoid, prefixed,
)
from .errors import KindMismatch, PreconditionFailed
from .exactlin import KMOD, CheckOutcome

EM_KINDS = ("rc", "lc", "ra", "la")
_COMONOID_KINDS = ("rc", "lc")


@dataclass(frozen=True)
class EmCell:
    """A cell (carrier, map) over a base monoid or comonoid."""

    kind: str
    base: Union[MonoidData, ComonoidData]
    carrier: Any
    cell: Any

    def __post_init__(self):
        if self.kind not in EM_KINDS:
            raise KindMismatch(f"unknown cell kind {self.kind!r}")
        want_comonoid = self.kind in _COMONOID_KINDS
        if want_comonoid and not isinstance(self.base, ComonoidData):
            raise KindMismatch(f"kind {self.kind} needs a comonoid base")
        if not want_comonoid and not isinstance(self.base, MonoidData):
            raise KindMismatch(f"kind {self.kind} needs a monoid base")


@dataclass(frozen=True)
class EmMorphism:
    """A morphism of cells; the map lives on the base-augmented carriers.

    rc: map C⊗X -> C⊗X'   lc: map P⊗C -> P'⊗C
    ra: map U⊗A -> U'⊗A   la: map A⊗M -> A⊗M'
    """

    dom: EmCell
    cod: EmCell
    map: Any


def _cell_shape(ctx, c: EmCell):
    """(domain, codomain) of the cell map for the given kind."""
    b, x = c.base.carrier, c.carrier
    if c.kind == "rc":
        return ctx.tensor(b, x), ctx.tensor(x, b)
    if c.kind == "lc":
        return ctx.tensor(x, b), ctx.tensor(b, x)
    if c.kind == "ra":
        return ctx.tensor(b, x), ctx.tensor(x, b)
    return ctx.tensor(x, b), ctx.tensor(b, x)


def _morphism_shape(ctx, kind: str, base, x, x2):
    """(domain, codomain) of a morphism map from carrier x to carrier x2."""
    b = base.carrier
    if kind == "rc":
        return ctx.tensor(b, x), ctx.tensor(b, x2)
    if kind == "lc":
        return ctx.tensor(x, b), ctx.tensor(x2, b)
    if kind == "ra":
        return ctx.tensor(x, b), ctx.tensor(x2, b)
    return ctx.tensor(b, x), ctx.tensor(b, x2)


def check_em_object(c: EmCell, ctx=KMOD) -> CheckOutcome:
    """Base laws plus the two cell axioms of the given kind."""
    dom, cod = _cell_shape(ctx, c)
    _expect(ctx, c.cell, dom, cod, f"{c.kind} cell")
    if c.kind in _COMONOID_KINDS:
        pre = prefixed(check_comonoid(c.base, ctx), "pre:")
    else:
        pre = prefixed(check_monoid(c.base, ctx), "pre:")
    b, x = c.base.carrier, c.carrier
    idb, idx = ctx.identity(b), ctx.identity(x)
    t, comp = ctx.tensor_map, ctx.compose
    if c.kind == "rc":
        dl, e = c.base.comul, c.base.counit
        axioms = (
            _ax(ctx, "(1-cell)", "(X⊗Δ)∘𝔵", "(𝔵⊗C)∘(C⊗𝔵)∘(Δ⊗X)",
                comp(t(idx, dl), c.cell),
                comp(t(c.cell, idb), t(idb, c.cell), t(dl, idx))),
            _ax(ctx, "(1-cell′)", "(X⊗ε)∘𝔵", "ε⊗X",
                comp(t(idx, e), c.cell), t(e, idx)),
        )
    elif c.kind == "lc":
        dl, e = c.base.comul, c.base.counit
        axioms = (
            _ax(ctx, "(l1-cell)", "(Δ⊗P)∘𝔭", "(C⊗𝔭)∘(𝔭⊗C)∘(P⊗Δ)",
                comp(t(dl, idx), c.cell),
                comp(t(idb, c.cell), t(c.cell, idb), t(idx, dl))),
            _ax(ctx, "(l1-cell′)", "(ε⊗P)∘𝔭", "P⊗ε",
                comp(t(e, idx), c.cell), t(idx, e)),
        )
    elif c.kind == "ra":
        mu, eta = c.base.mul, c.base.unit
        axioms = (
            _ax(ctx, "(RA1-cell)", "𝔲∘(μ⊗U)", "(U⊗μ)∘(𝔲⊗A)∘(A⊗𝔲)",
                comp(c.cell, t(mu, idx)),
                comp(t(idx, mu), t(c.cell, idb), t(idb, c.cell))),
            _ax(ctx, "(RA1-cell′)", "𝔲∘(η⊗U)", "U⊗η",
                comp(c.cell, t(eta, idx)), t(idx, eta)),
        )
    else:
        mu, eta = c.base.mul, c.base.unit
        axioms = (
            _ax(ctx, "(LA1-cell)", "𝔪∘(M⊗μ)", "(μ⊗M)∘(A⊗𝔪)∘(𝔪⊗A)",
                comp(c.cell, t(idx, mu)),
                comp(t(mu, idx), t(idb, c.cell), t(c.cell, idb))),
            _ax(ctx, "(LA1-cell′)", "𝔪∘(M⊗η)", "η⊗M",
                comp(c.cell, t(idx, eta)), t(eta, idx)),
        )
    return CheckOutcome(f"em:{c.kind}", pre + axioms)


def _require_same_setting(c1: EmCell, c2: EmCell) -> None:
    if c1.kind != c2.kind:
        raise KindMismatch(f"mixed cell kinds {c1.kind} and {c2.kind}")
    if c1.base != c2.base:
        raise KindMismatch("cells live over different bases")


def check_em_morphism(m: EmMorphism, ctx=KMOD) -> CheckOutcome:
    """The two morphism conditions of the cells' kind."""
    _require_same_setting(m.dom, m.cod)
    kind, base = m.dom.kind, m.dom.base
    dom_shape = _morphism_shape(ctx, kind, base, m.dom.carrier, m.cod.carrier)
    _expect(ctx, m.map, dom_shape[0], dom_shape[1], f"{kind} morphism")
    b = base.carrier
    x, x2 = m.dom.carrier, m.cod.carrier
    cell, cell2 = m.dom.cell, m.cod.cell
    idb = ctx.identity(b)
    idx, idx2 = ctx.identity(x), ctx.identity(x2)
    t, comp = ctx.tensor_map, ctx.compose
    f = m.map
    if kind == "rc":
        dl = base.comul
        axioms = (
            _ax(ctx, "(RC2-cell)", "(Δ⊗X′)∘α", "(C⊗α)∘(Δ⊗X)",
                comp(t(dl, idx2), f), comp(t(idb, f), t(dl, idx))),
            _ax(ctx, "(RC2-cell′)", "(C⊗𝔵′)∘(Δ⊗X′)∘α", "(α⊗C)∘(C⊗𝔵)∘(Δ⊗X)",
                comp(t(idb, cell2), t(dl, idx2), f),
                comp(t(f, idb), t(idb, cell), t(dl, idx))),
        )
    elif kind == "lc":
        dl = base.comul
        axioms = (
            _ax(ctx, "(LC2-cell)", "(P′⊗Δ)∘γ", "(γ⊗C)∘(P⊗Δ)",
                comp(t(idx2, dl), f), comp(t(f, idb), t(idx, dl))),
            _ax(ctx, "(LC2-cell′)", "(𝔭′⊗C)∘(P′⊗Δ)∘γ", "(C⊗γ)∘(𝔭⊗C)∘(P⊗Δ)",
                comp(t(cell2, idb), t(idx2, dl), f),
                comp(t(idb, f), t(cell, idb), t(idx, dl))),
        )
    elif kind == "ra":
        mu = base.mul
        axioms = (
            _ax(ctx, "(RA2-cell)", "ν∘(U⊗μ)", "(U′⊗μ)∘(ν⊗A)",
                comp(f, t(idx, mu)), comp(t(idx2, mu), t(f, idb))),
            _ax(ctx, "(RA2-cell′)", "ν∘(U⊗μ)∘(𝔲⊗A)", "(U′⊗μ)∘(𝔲′⊗A)∘(A⊗ν)",
                comp(f, t(idx, mu), t(cell, idb)),
                comp(t(idx2, mu), t(cell2, idb), t(idb, f))),
        )
    else:
        mu = base.mul
        axioms = (
            _ax(ctx, "(LA2-cell)", "θ∘(μ⊗M)", "(μ⊗M′)∘(A⊗θ)",
                comp(f, t(mu, idx)), comp(t(mu, idx2), t(idb, f))),
            _ax(ctx, "(LA2-cell′)", "θ∘(μ⊗M)∘(A⊗𝔪)", "(μ⊗M′)∘(A⊗𝔪′)∘(θ⊗A)",
                comp(f, t(mu, idx), t(idb, cell)),
                comp(t(mu, idx2), t(idb, cell2), t(f, idb))),
        )
    return CheckOutcome(f"em-morphism:{kind}", axioms)


def em_identity(kind: str, base, ctx=KMOD) -> EmCell:
    """The identity cell on the unit carrier; its map is id on the base."""
    cell = ctx.identity(base.carrier)
    return EmCell(kind, base, ctx.unit(), cell)


def em_tensor(c1: EmCell, c2: EmCell, ctx=KMOD) -> EmCell:
    """Horizontal product of two cells over the same base."""
    _require_same_setting(c1, c2)
    t, comp = ctx.tensor_map, ctx.compose
    x, y = c1.carrier, c2.carrier
    idx, idy = ctx.identity(x), ctx.identity(y)
    if c1.kind in ("rc", "ra"):
        cell = comp(t(idx, c2.cell), t(c1.cell, idy))
    else:
        cell = comp(t(c1.cell, idy), t(idx, c2.cell))
    return EmCell(c1.kind, c1.base, ctx.tensor(x, y), cell)


def em_vertical(f: EmMorphism, g: EmMorphism, ctx=KMOD) -> EmMorphism:
    """Product of morphisms alongside em_tensor.

    The composite has two displayed forms; both are computed and must agree,
    otherwise the inputs were not cell morphisms to begin with.
    """
    _require_same_setting(f.dom, g.dom)
    _require_same_setting(f.cod, g.cod)
    kind, base = f.dom.kind, f.dom.base
    b = base.carrier
    idb = ctx.identity(b)
    t, comp = ctx.tensor_map, ctx.compose
    x, y = f.dom.carrier, g.dom.carrier
    x2, y2 = f.cod.carrier, g.cod.carrier
    idx, idy = ctx.identity(x), ctx.identity(y)
    idx2, idy2 = ctx.identity(x2), ctx.identity(y2)
    if kind == "rc":
        dl, e = base.comul, base.counit
        long = comp(t(idb, idx2, e, idy2), t(idb, idx2, g.map),
                    t(idb, f.cod.cell, idy), t(idb, f.map, idy),
                    t(dl, idx, idy))
        short = comp(t(idb, idx2, e, idy2), t(f.map, g.map),
                     t(idb, f.dom.cell, idy), t(dl, idx, idy))
    elif kind == "lc":
        dl, e = base.comul, base.counit
        long = comp(t(idx2, e, idy2, idb), t(f.map, idy2, idb),
                    t(idx, g.cod.cell, idb), t(idx, g.map, idb),
                    t(idx, idy, dl))
        short = comp(t(idx2, e, idy2, idb), t(f.map, g.map),
                     t(idx, g.dom.cell, idb), t(idx, idy, dl))
    elif kind == "ra":
        mu, eta = base.mul, base.unit
        long = comp(t(idx2, idy2, mu), t(idx2, g.map, idb),
                    t(idx2, g.dom.cell, idb), t(f.map, idy, idb),
                    t(idx, eta, idy, idb))
        short = comp(t(idx2, idy2, mu), t(idx2, g.cod.cell, idb),
                     t(f.map, g.map), t(idx, eta, idy, idb))
    else:
        mu, eta = base.mul, base.unit
        long = comp(t(mu, idx2, idy2), t(idb, f.map, idy2),
                    t(idb, f.dom.cell, idy2), t(idb, idx, g.map),
                    t(idb, idx, eta, idy))
        short = comp(t(mu, idx2, idy2), t(idb, f.cod.cell, idy2),
                     t(f.map, g.map), t(idb, idx, eta, idy))
    agree = _ax(ctx, "(vert-forms)", "long form", "short form", long, short)
    if not agree.passed:
        raise PreconditionFailed(
            "(vert-forms)",
            "the two forms of the vertical product disagree; "
            "the inputs are not cell morphisms")
    return EmMorphism(em_tensor(f.dom, g.dom, ctx),
                      em_tensor(f.cod, g.cod, ctx), long)


def em_morphism_identity(c: EmCell, ctx=KMOD) -> EmMorphism:
    """The identity morphism on a cell."""
    dom, _cod = _morphism_shape(ctx, c.kind, c.base, c.carrier, c.carrier)
    return EmMorphism(c, c, ctx.identity(dom))


def coaction_from_entwining(c: EmCell, ctx=KMOD) -> ComoduleData:
    """The bicomodule on the augmented carrier induced by an rc or lc cell."""
    if c.kind not in _COMONOID_KINDS:
        raise KindMismatch(f"coaction_from_entwining needs rc or lc, got {c.kind}")
    base = c.base
    b, x = base.carrier, c.carrier
    idb, idx = ctx.identity(b), ctx.identity(x)
    t, comp = ctx.tensor_map, ctx.compose
    if c.kind == "rc":
        carrier = ctx.tensor(b, x)
        left = t(base.comul, idx)
        right = comp(t(idb, c.cell), t(base.comul, idx))
    else:
        carrier = ctx.tensor(x, b)
        right = t(idx, base.comul)
        left = comp(t(c.cell, idb), t(idx, base.comul))
    return ComoduleData("bi", base, carrier, left=left, right=right)


def entwining_from_coaction(base: ComonoidData, carrier, coaction,
                            kind: str = "rc", ctx=KMOD) -> EmCell:
    """Recover the cell from the non-canonical coaction on C⊗X (or X⊗C)."""
    b, x = base.carrier, carrier
    idb, idx = ctx.identity(b), ctx.identity(x)
    t, comp = ctx.tensor_map, ctx.compose
    if kind == "rc":
        # coaction: C⊗X -> (C⊗X)⊗C
        cell = comp(t(base.counit, idx, idb), coaction)
    elif kind == "lc":
        # coaction: X⊗C -> C⊗(X⊗C)
        cell = comp(t(idb, idx, base.counit), coaction)
    else:
        raise KindMismatch(f"entwining_from_coaction needs rc or lc, got {kind}")
    return EmCell(kind, base, carrier, cell)


def action_from_entwining(c: EmCell, ctx=KMOD) -> ModuleData:
    """The bimodule on the augmented carrier induced by an ra or la cell."""
    if c.kind not in ("ra", "la"):
        raise KindMismatch(f"action_from_entwining needs ra or la, got {c.kind}")
    base = c.base
    b, x = base.carrier, c.carrier
    idb, idx = ctx.identity(b), ctx.identity(x)
    t, comp = ctx.tensor_map, ctx.compose
    if c.kind == "ra":
        carrier = ctx.tensor(x, b)
        right = t(idx, base.mul)
        left = comp(t(idx, base.mul), t(c.cell, idb))
    else:
        carrier = ctx.tensor(b, x)
        left = t(base.mul, idx)
        right = comp(t(base.mul, idx), t(idb, c.cell))
    return ModuleData("bi", base, carrier, left=left, right=right)


def entwining_from_action(base: MonoidData, carrier, action,
                          kind: str = "ra", ctx=KMOD) -> EmCell:
    """Recover the cell from the non-canonical action on U⊗A (or A⊗M)."""
    b, x = base.carrier, carrier
    idb, idx = ctx.identity(b), ctx.identity(x)
    t, comp = ctx.tensor_map, ctx.compose
    if kind == "ra":
        # action: A⊗(U⊗A) -> U⊗A
        cell = comp(action, t(idb, idx, base.unit))
    elif kind == "la":
        # action: (A⊗M)⊗A -> A⊗M
        cell = comp(action, t(base.unit, idx, idb))
    else:
        raise KindMismatch(f"entwining_from_action needs ra or la, got {kind}")
    return EmCell(kind, base, carrier, cell)
