"""Cowreaths, wreaths, distributive laws and universal morphisms.

A cowreath is a comonoid C together with an rc cell (R, r) and two cell
morphisms xi: C⊗R -> C (to the identity cell) and delta: C⊗R -> C⊗R⊗R (to the
cell tensored with itself) satisfying three diagrams; its product is a
comonoid on C⊗R.  A wreath is the dual package over a monoid with an ra cell,
producing a monoid on T⊗A.  Distributive laws are the special cells whose
xi/delta (zeta/nu) come from a second comonoid (monoid) structure on the cell
carrier, and the universal morphism builders realize the couniversal and
universal properties of the two products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import (
    ComonoidData, MonoidData, _ax, _expect, check_comonoid,
    check_comonoid_morphism, check_monoid, check_monoid_morphism, prefixed,
)
from .entwine import (
    EmCell, EmMorphism, check_em_morphism, check_em_object, em_identity,
    em_tensor,
)
from .errors import HypothesisFailed, KindMismatch, PreconditionFailed
from .exactlin import KMOD, AxiomReport, CheckOutcome


@dataclass(frozen=True)
class CowreathData:
    """(C; (R, r); xi: C⊗R -> C; delta: C⊗R -> C⊗R⊗R), cell kind rc."""

    cell: EmCell
    xi: Any
    delta: Any

    def __post_init__(self):
        if self.cell.kind != "rc":
            raise KindMismatch("a cowreath needs an rc cell")

    @property
    def base(self) -> ComonoidData:
        return self.cell.base


@dataclass(frozen=True)
class WreathData:
    """(A; (T, t); zeta: A -> T⊗A; nu: T⊗T⊗A -> T⊗A), cell kind ra."""

    cell: EmCell
    zeta: Any
    nu: Any

    def __post_init__(self):
        if self.cell.kind != "ra":
            raise KindMismatch("a wreath needs an ra cell")

    @property
    def base(self) -> MonoidData:
        return self.cell.base


def check_cowreath(d: CowreathData, ctx=KMOD) -> CheckOutcome:
    """Cell axioms, xi/delta cell-morphism conditions, three diagrams."""
    cell = d.cell
    base = d.base
    c, r = base.carrier, cell.carrier
    idr = ctx.identity(r)
    t, comp = ctx.tensor_map, ctx.compose
    axioms: list[AxiomReport] = list(prefixed(check_em_object(cell, ctx), "pre:"))
    ident = em_identity("rc", base, ctx)
    paired = em_tensor(cell, cell, ctx)
    axioms += prefixed(
        check_em_morphism(EmMorphism(cell, ident, d.xi), ctx), "ξ")
    axioms += prefixed(
        check_em_morphism(EmMorphism(cell, paired, d.delta), ctx), "δ")
    axioms.append(_ax(ctx, "(cw-1)", "(ξ⊗R)∘δ", "id",
                      comp(t(d.xi, idr), d.delta),
                      ctx.identity(ctx.tensor(c, r))))
    axioms.append(_ax(ctx, "(cw-2)", "(R⊗ξ)∘(𝔯⊗R)∘δ", "𝔯",
                      comp(t(idr, d.xi), t(cell.cell, idr), d.delta),
                      cell.cell))
    axioms.append(_ax(ctx, "(cw-3)", "(𝔯⊗R⊗R)∘(δ⊗R)∘δ", "(R⊗δ)∘(𝔯⊗R)∘δ",
                      comp(t(cell.cell, idr, idr), t(d.delta, idr), d.delta),
                      comp(t(idr, d.delta), t(cell.cell, idr), d.delta)))
    return CheckOutcome("cowreath", tuple(axioms))


def cowreath_product(d: CowreathData, ctx=KMOD) -> ComonoidData:
    """The comonoid on C⊗R induced by a cowreath."""
    outcome = check_cowreath(d, ctx)
    if not outcome.passed:
        raise PreconditionFailed(outcome.failing()[0].name,
                                 "cowreath axioms fail")
    cell = d.cell
    base = d.base
    c, r = base.carrier, cell.carrier
    idc, idr = ctx.identity(c), ctx.identity(r)
    t, comp = ctx.tensor_map, ctx.compose
    comul = comp(t(idc, cell.cell, idr), t(idc, d.delta), t(base.comul, idr))
    counit = comp(base.counit, d.xi)
    product = ComonoidData(ctx.tensor(c, r), comul, counit)
    post = check_comonoid(product, ctx)
    if not post.passed:
        raise PreconditionFailed(post.failing()[0].name,
                                 "cowreath product failed its own laws")
    # xi is a comonoid morphism from the product down to the base
    mor = check_comonoid_morphism(d.xi, product, base, ctx)
    if not mor.passed:
        raise PreconditionFailed(mor.failing()[0].name,
                                 "xi is not a comonoid morphism to the base")
    return product


def check_wreath(d: WreathData, ctx=KMOD) -> CheckOutcome:
    """Cell axioms, zeta/nu cell-morphism conditions, three diagrams."""
    cell = d.cell
    base = d.base
    a, w = base.carrier, cell.carrier
    idw = ctx.identity(w)
    t, comp = ctx.tensor_map, ctx.compose
    axioms: list[AxiomReport] = list(prefixed(check_em_object(cell, ctx), "pre:"))
    ident = em_identity("ra", base, ctx)
    paired = em_tensor(cell, cell, ctx)
    axioms += prefixed(
        check_em_morphism(EmMorphism(ident, cell, d.zeta), ctx), "ζ")
    axioms += prefixed(
        check_em_morphism(EmMorphism(paired, cell, d.nu), ctx), "ν")
    axioms.append(_ax(ctx, "(wr-1)", "ν∘(T⊗ζ)", "id",
                      comp(d.nu, t(idw, d.zeta)),
                      ctx.identity(ctx.tensor(w, a))))
    axioms.append(_ax(ctx, "(wr-2)", "ν∘(T⊗𝔱)∘(ζ⊗T)", "𝔱",
                      comp(d.nu, t(idw, cell.cell), t(d.zeta, idw)),
                      cell.cell))
    axioms.append(_ax(ctx, "(wr-3)", "ν∘(T⊗𝔱)∘(ν⊗T)", "ν∘(T⊗ν)∘(T⊗T⊗𝔱)",
                      comp(d.nu, t(idw, cell.cell), t(d.nu, idw)),
                      comp(d.nu, t(idw, d.nu), t(idw, idw, cell.cell))))
    return CheckOutcome("wreath", tuple(axioms))


def wreath_product(d: WreathData, ctx=KMOD) -> MonoidData:
    """The monoid on T⊗A induced by a wreath."""
    outcome = check_wreath(d, ctx)
    if not outcome.passed:
        raise PreconditionFailed(outcome.failing()[0].name,
                                 "wreath axioms fail")
    cell = d.cell
    base = d.base
    a, w = base.carrier, cell.carrier
    ida, idw = ctx.identity(a), ctx.identity(w)
    t, comp = ctx.tensor_map, ctx.compose
    mul = comp(t(idw, base.mul), t(d.nu, ida), t(idw, cell.cell, ida))
    unit = comp(d.zeta, base.unit)
    product = MonoidData(ctx.tensor(w, a), mul, unit)
    post = check_monoid(product, ctx)
    if not post.passed:
        raise PreconditionFailed(post.failing()[0].name,
                                 "wreath product failed its own laws")
    # zeta is a monoid morphism from the base into the product
    mor = check_monoid_morphism(d.zeta, base, product, ctx)
    if not mor.passed:
        raise PreconditionFailed(mor.failing()[0].name,
                                 "zeta is not a monoid morphism from the base")
    return product


def check_comonoid_dl(source: ComonoidData, target: ComonoidData, law,
                      ctx=KMOD) -> CheckOutcome:
    """Distributive law of comonoids, law: C⊗R -> R⊗C with C = source."""
    c, r = source.carrier, target.carrier
    _expect(ctx, law, ctx.tensor(c, r), ctx.tensor(r, c), "comonoid law")
    idc, idr = ctx.identity(c), ctx.identity(r)
    t, comp = ctx.tensor_map, ctx.compose
    axioms = list(prefixed(check_comonoid(source, ctx), "pre-C:"))
    axioms += prefixed(check_comonoid(target, ctx), "pre-R:")
    axioms += (
        _ax(ctx, "(CDL-1)", "(R⊗Δ)∘𝔯", "(𝔯⊗C)∘(C⊗𝔯)∘(Δ⊗R)",
            comp(t(idr, source.comul), law),
            comp(t(law, idc), t(idc, law), t(source.comul, idr))),
        _ax(ctx, "(CDL-2)", "(R⊗ε)∘𝔯", "ε⊗R",
            comp(t(idr, source.counit), law), t(source.counit, idr)),
        _ax(ctx, "(CDL-3)", "(Δ′⊗C)∘𝔯", "(R⊗𝔯)∘(𝔯⊗R)∘(C⊗Δ′)",
            comp(t(target.comul, idc), law),
            comp(t(idr, law), t(law, idr), t(idc, target.comul))),
        _ax(ctx, "(CDL-4)", "(ε′⊗C)∘𝔯", "C⊗ε′",
            comp(t(target.counit, idc), law), t(idc, target.counit)),
    )
    return CheckOutcome("cdl", tuple(axioms))


def check_monoid_dl(source: MonoidData, target: MonoidData, law,
                    ctx=KMOD) -> CheckOutcome:
    """Distributive law of monoids, law: A⊗T -> T⊗A with A = source."""
    a, w = source.carrier, target.carrier
    _expect(ctx, law, ctx.tensor(a, w), ctx.tensor(w, a), "monoid law")
    ida, idw = ctx.identity(a), ctx.identity(w)
    t, comp = ctx.tensor_map, ctx.compose
    axioms = list(prefixed(check_monoid(source, ctx), "pre-A:"))
    axioms += prefixed(check_monoid(target, ctx), "pre-T:")
    axioms += (
        _ax(ctx, "(ADL-1)", "𝔱∘(μ⊗T)", "(T⊗μ)∘(𝔱⊗A)∘(A⊗𝔱)",
            comp(law, t(source.mul, idw)),
            comp(t(idw, source.mul), t(law, ida), t(ida, law))),
        _ax(ctx, "(ADL-2)", "𝔱∘(η⊗T)", "T⊗η",
            comp(law, t(source.unit, idw)), t(idw, source.unit)),
        _ax(ctx, "(ADL-3)", "𝔱∘(A⊗μ′)", "(μ′⊗A)∘(T⊗𝔱)∘(𝔱⊗T)",
            comp(law, t(ida, target.mul)),
            comp(t(target.mul, ida), t(idw, law), t(law, idw))),
        _ax(ctx, "(ADL-4)", "𝔱∘(A⊗η′)", "η′⊗A",
            comp(law, t(ida, target.unit)), t(target.unit, ida)),
    )
    return CheckOutcome("mdl", tuple(axioms))


def dl_to_cowreath(source: ComonoidData, target: ComonoidData, law,
                   ctx=KMOD) -> CowreathData:
    """Package a comonoid distributive law as a cowreath."""
    outcome = check_comonoid_dl(source, target, law, ctx)
    if not outcome.passed:
        raise PreconditionFailed(outcome.failing()[0].name,
                                 "comonoid distributive law fails")
    idc = ctx.identity(source.carrier)
    cell = EmCell("rc", source, target.carrier, law)
    xi = ctx.tensor_map(idc, target.counit)
    delta = ctx.tensor_map(idc, target.comul)
    return CowreathData(cell, xi, delta)


def dl_to_wreath(source: MonoidData, target: MonoidData, law,
                 ctx=KMOD) -> WreathData:
    """Package a monoid distributive law as a wreath."""
    outcome = check_monoid_dl(source, target, law, ctx)
    if not outcome.passed:
        raise PreconditionFailed(outcome.failing()[0].name,
                                 "monoid distributive law fails")
    ida = ctx.identity(source.carrier)
    cell = EmCell("ra", source, target.carrier, law)
    zeta = ctx.tensor_map(target.unit, ida)
    nu = ctx.tensor_map(target.mul, ida)
    return WreathData(cell, zeta, nu)


def _require(outcome_or_axiom, name: str) -> None:
    if isinstance(outcome_or_axiom, CheckOutcome):
        if not outcome_or_axiom.passed:
            raise HypothesisFailed(name)
    elif not outcome_or_axiom.passed:
        raise HypothesisFailed(name)


def universal_cowreath_morphism(d: CowreathData, cone: ComonoidData,
                                alpha, beta, ctx=KMOD):
    """The comonoid morphism gamma: D -> C⊗R induced by alpha and beta.

    alpha: D -> C must be a comonoid morphism; beta: D -> R must satisfy the
    three compatibility hypotheses (Hy-1), (Hy-2), (Hy-3).  The result
    satisfies xi∘gamma = alpha and (ε⊗R)∘gamma = beta and is a comonoid
    morphism into the cowreath product; all three are re-verified on exit.
    """
    base = d.base
    c, r = base.carrier, d.cell.carrier
    dd = cone.carrier
    _expect(ctx, alpha, dd, c, "alpha")
    _expect(ctx, beta, dd, r, "beta")
    idc, idr = ctx.identity(c), ctx.identity(r)
    t, comp = ctx.tensor_map, ctx.compose
    _require(check_comonoid_morphism(alpha, cone, base, ctx),
             "alpha-comonoid-morphism")
    _require(_ax(ctx, "(Hy-1)", "ξ∘(C⊗β)", "C⊗ε′",
                 comp(d.xi, t(idc, beta)), t(idc, cone.counit)), "Hy-1")
    _require(_ax(ctx, "(Hy-2)", "δ∘(C⊗β)", "(C⊗β⊗β)∘(C⊗Δ′)",
                 comp(d.delta, t(idc, beta)),
                 comp(t(idc, beta, beta), t(idc, cone.comul))), "Hy-2")
    _require(_ax(ctx, "(Hy-3)", "𝔯∘(α⊗β)∘Δ′", "(β⊗α)∘Δ′",
                 comp(d.cell.cell, t(alpha, beta), cone.comul),
                 comp(t(beta, alpha), cone.comul)), "Hy-3")
    gamma = comp(t(alpha, beta), cone.comul)
    product = cowreath_product(d, ctx)
    post = (
        _ax(ctx, "(post-alpha)", "ξ∘γ", "α", comp(d.xi, gamma), alpha),
        _ax(ctx, "(post-beta)", "(ε⊗R)∘γ", "β",
            comp(t(base.counit, idr), gamma), beta),
    )
    for a in post:
        if not a.passed:
            raise PreconditionFailed(a.name, "gamma postcondition failed")
    mor = check_comonoid_morphism(gamma, cone, product, ctx)
    if not mor.passed:
        raise PreconditionFailed(mor.failing()[0].name,
                                 "gamma is not a comonoid morphism")
    return gamma


def universal_wreath_morphism(d: WreathData, target: MonoidData,
                              phi, psi, ctx=KMOD):
    """The monoid morphism Phi: T⊗A -> L induced by phi and psi.

    phi: A -> L must be a monoid morphism; psi: T -> L must satisfy (Hy-1A),
    (Hy-2A), (Hy-3A).  The result satisfies Phi∘zeta = phi and
    Phi∘(T⊗η) = psi and is a monoid morphism from the wreath product.
    """
    base = d.base
    a, w = base.carrier, d.cell.carrier
    ll = target.carrier
    _expect(ctx, phi, a, ll, "phi")
    _expect(ctx, psi, w, ll, "psi")
    ida, idw = ctx.identity(a), ctx.identity(w)
    t, comp = ctx.tensor_map, ctx.compose
    _require(check_monoid_morphism(phi, base, target, ctx),
             "phi-monoid-morphism")
    _require(_ax(ctx, "(Hy-1A)", "(ψ⊗A)∘ζ", "η′⊗A",
                 comp(t(psi, ida), d.zeta), t(target.unit, ida)), "Hy-1A")
    _require(_ax(ctx, "(Hy-2A)", "(ψ⊗A)∘ν", "(μ′⊗A)∘(ψ⊗ψ⊗A)",
                 comp(t(psi, ida), d.nu),
                 comp(t(target.mul, ida), t(psi, psi, ida))), "Hy-2A")
    _require(_ax(ctx, "(Hy-3A)", "μ′∘(φ⊗ψ)", "μ′∘(ψ⊗φ)∘𝔱",
                 comp(target.mul, t(phi, psi)),
                 comp(target.mul, t(psi, phi), d.cell.cell)), "Hy-3A")
    big_phi = comp(target.mul, t(psi, phi))
    product = wreath_product(d, ctx)
    post = (
        _ax(ctx, "(post-phi)", "Φ∘ζ", "φ", comp(big_phi, d.zeta), phi),
        _ax(ctx, "(post-psi)", "Φ∘(T⊗η)", "ψ",
            comp(big_phi, t(idw, base.unit)), psi),
    )
    for ax in post:
        if not ax.passed:
            raise PreconditionFailed(ax.name, "Phi postcondition failed")
    mor = check_monoid_morphism(big_phi, product, target, ctx)
    if not mor.passed:
        raise PreconditionFailed(mor.failing()[0].name,
                                 "Phi is not a monoid morphism")
    return big_phi
