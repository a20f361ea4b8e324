"""Monoid, comonoid, morphism and (co)module law checkers.

Every checker is written against a strict monoidal context (KMOD or a
BimodContext) so the same axiom code runs over plain rational modules and over
bimodule tensor words.  Checkers return a CheckOutcome listing each axiom with
the exact coordinates where the two sides disagree; builders raise instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .errors import DimensionMismatch, KindMismatch
from .exactlin import KMOD, AxiomReport, CheckOutcome, equality_axiom


@dataclass(frozen=True)
class MonoidData:
    """A monoid (A, mul: A⊗A -> A, unit: I -> A) in a monoidal context."""

    carrier: Any
    mul: Any
    unit: Any


@dataclass(frozen=True)
class ComonoidData:
    """A comonoid (C, comul: C -> C⊗C, counit: C -> I)."""

    carrier: Any
    comul: Any
    counit: Any


@dataclass(frozen=True)
class ModuleData:
    """A left, right or two-sided module over a monoid."""

    kind: str  # "left" | "right" | "bi"
    base: MonoidData
    carrier: Any
    left: Optional[Any] = None   # A⊗M -> M
    right: Optional[Any] = None  # M⊗A -> M


@dataclass(frozen=True)
class ComoduleData:
    """A left, right or two-sided comodule over a comonoid."""

    kind: str  # "left" | "right" | "bi"
    base: ComonoidData
    carrier: Any
    left: Optional[Any] = None   # X -> C⊗X
    right: Optional[Any] = None  # X -> X⊗C


def _ax(ctx, name: str, lhs_str: str, rhs_str: str, f, g) -> AxiomReport:
    return equality_axiom(name, lhs_str, rhs_str, ctx.to_lin(f), ctx.to_lin(g))


def _expect(ctx, f, dom, cod, what: str) -> None:
    if f.dom != dom or f.cod != cod:
        raise DimensionMismatch(
            f"{what}: expected a map of shape "
            f"{ctx.obj_dim(dom)} -> {ctx.obj_dim(cod)}, got "
            f"{ctx.obj_dim(f.dom)} -> {ctx.obj_dim(f.cod)}")


def check_monoid(m: MonoidData, ctx=KMOD) -> CheckOutcome:
    """Unit and associativity laws."""
    a = m.carrier
    _expect(ctx, m.mul, ctx.tensor(a, a), a, "mul")
    _expect(ctx, m.unit, ctx.unit(), a, "unit")
    ida = ctx.identity(a)
    axioms = (
        _ax(ctx, "(mon-unit-l)", "μ∘(η⊗A)", "id",
            ctx.compose(m.mul, ctx.tensor_map(m.unit, ida)), ida),
        _ax(ctx, "(mon-unit-r)", "μ∘(A⊗η)", "id",
            ctx.compose(m.mul, ctx.tensor_map(ida, m.unit)), ida),
        _ax(ctx, "(mon-assoc)", "μ∘(μ⊗A)", "μ∘(A⊗μ)",
            ctx.compose(m.mul, ctx.tensor_map(m.mul, ida)),
            ctx.compose(m.mul, ctx.tensor_map(ida, m.mul))),
    )
    return CheckOutcome("monoid", axioms)


def check_comonoid(c: ComonoidData, ctx=KMOD) -> CheckOutcome:
    """Counit and coassociativity laws."""
    x = c.carrier
    _expect(ctx, c.comul, x, ctx.tensor(x, x), "comul")
    _expect(ctx, c.counit, x, ctx.unit(), "counit")
    idx = ctx.identity(x)
    axioms = (
        _ax(ctx, "(com-counit-l)", "(ε⊗C)∘Δ", "id",
            ctx.compose(ctx.tensor_map(c.counit, idx), c.comul), idx),
        _ax(ctx, "(com-counit-r)", "(C⊗ε)∘Δ", "id",
            ctx.compose(ctx.tensor_map(idx, c.counit), c.comul), idx),
        _ax(ctx, "(com-coassoc)", "(Δ⊗C)∘Δ", "(C⊗Δ)∘Δ",
            ctx.compose(ctx.tensor_map(c.comul, idx), c.comul),
            ctx.compose(ctx.tensor_map(idx, c.comul), c.comul)),
    )
    return CheckOutcome("comonoid", axioms)


def check_monoid_morphism(f, source: MonoidData, target: MonoidData,
                          ctx=KMOD) -> CheckOutcome:
    """f respects multiplication and unit."""
    _expect(ctx, f, source.carrier, target.carrier, "morphism")
    axioms = (
        _ax(ctx, "(mor-mul)", "f∘μ", "μ′∘(f⊗f)",
            ctx.compose(f, source.mul),
            ctx.compose(target.mul, ctx.tensor_map(f, f))),
        _ax(ctx, "(mor-unit)", "f∘η", "η′",
            ctx.compose(f, source.unit), target.unit),
    )
    return CheckOutcome("monoid-morphism", axioms)


def check_comonoid_morphism(f, source: ComonoidData, target: ComonoidData,
                            ctx=KMOD) -> CheckOutcome:
    """f respects comultiplication and counit."""
    _expect(ctx, f, source.carrier, target.carrier, "morphism")
    axioms = (
        _ax(ctx, "(mor-comul)", "Δ′∘f", "(f⊗f)∘Δ",
            ctx.compose(target.comul, f),
            ctx.compose(ctx.tensor_map(f, f), source.comul)),
        _ax(ctx, "(mor-counit)", "ε′∘f", "ε",
            ctx.compose(target.counit, f), source.counit),
    )
    return CheckOutcome("comonoid-morphism", axioms)


def check_module(m: ModuleData, ctx=KMOD) -> CheckOutcome:
    """Module laws for the declared sides plus commutation for bimodules."""
    if m.kind not in ("left", "right", "bi"):
        raise KindMismatch(f"unknown module kind {m.kind!r}")
    a, x = m.base.carrier, m.carrier
    ida, idx = ctx.identity(a), ctx.identity(x)
    axioms: list[AxiomReport] = []
    if m.kind in ("left", "bi"):
        if m.left is None:
            raise DimensionMismatch("left action missing")
        _expect(ctx, m.left, ctx.tensor(a, x), x, "left action")
        axioms.append(_ax(ctx, "(lmod-unit)", "l∘(η⊗M)", "id",
                          ctx.compose(m.left, ctx.tensor_map(m.base.unit, idx)),
                          idx))
        axioms.append(_ax(ctx, "(lmod-assoc)", "l∘(μ⊗M)", "l∘(A⊗l)",
                          ctx.compose(m.left, ctx.tensor_map(m.base.mul, idx)),
                          ctx.compose(m.left, ctx.tensor_map(ida, m.left))))
    if m.kind in ("right", "bi"):
        if m.right is None:
            raise DimensionMismatch("right action missing")
        _expect(ctx, m.right, ctx.tensor(x, a), x, "right action")
        axioms.append(_ax(ctx, "(rmod-unit)", "r∘(M⊗η)", "id",
                          ctx.compose(m.right, ctx.tensor_map(idx, m.base.unit)),
                          idx))
        axioms.append(_ax(ctx, "(rmod-assoc)", "r∘(r⊗A)", "r∘(M⊗μ)",
                          ctx.compose(m.right, ctx.tensor_map(m.right, ida)),
                          ctx.compose(m.right, ctx.tensor_map(idx, m.base.mul))))
    if m.kind == "bi":
        axioms.append(_ax(ctx, "(bimod-comm)", "r∘(l⊗A)", "l∘(A⊗r)",
                          ctx.compose(m.right, ctx.tensor_map(m.left, ida)),
                          ctx.compose(m.left, ctx.tensor_map(ida, m.right))))
    return CheckOutcome("module", tuple(axioms))


def check_comodule(c: ComoduleData, ctx=KMOD) -> CheckOutcome:
    """Comodule laws for the declared sides plus commutation for bicomodules."""
    if c.kind not in ("left", "right", "bi"):
        raise KindMismatch(f"unknown comodule kind {c.kind!r}")
    b, x = c.base.carrier, c.carrier
    idb, idx = ctx.identity(b), ctx.identity(x)
    axioms: list[AxiomReport] = []
    if c.kind in ("left", "bi"):
        if c.left is None:
            raise DimensionMismatch("left coaction missing")
        _expect(ctx, c.left, x, ctx.tensor(b, x), "left coaction")
        axioms.append(_ax(ctx, "(lcom-counit)", "(ε⊗X)∘λ", "id",
                          ctx.compose(ctx.tensor_map(c.base.counit, idx), c.left),
                          idx))
        axioms.append(_ax(ctx, "(lcom-coassoc)", "(Δ⊗X)∘λ", "(C⊗λ)∘λ",
                          ctx.compose(ctx.tensor_map(c.base.comul, idx), c.left),
                          ctx.compose(ctx.tensor_map(idb, c.left), c.left)))
    if c.kind in ("right", "bi"):
        if c.right is None:
            raise DimensionMismatch("right coaction missing")
        _expect(ctx, c.right, x, ctx.tensor(x, b), "right coaction")
        axioms.append(_ax(ctx, "(rcom-counit)", "(X⊗ε)∘ρ", "id",
                          ctx.compose(ctx.tensor_map(idx, c.base.counit), c.right),
                          idx))
        axioms.append(_ax(ctx, "(rcom-coassoc)", "(ρ⊗C)∘ρ", "(X⊗Δ)∘ρ",
                          ctx.compose(ctx.tensor_map(c.right, idb), c.right),
                          ctx.compose(ctx.tensor_map(idx, c.base.comul), c.right)))
    if c.kind == "bi":
        axioms.append(_ax(ctx, "(bicom-comm)", "(λ⊗C)∘ρ", "(C⊗ρ)∘λ",
                          ctx.compose(ctx.tensor_map(c.left, idb), c.right),
                          ctx.compose(ctx.tensor_map(idb, c.right), c.left)))
    return CheckOutcome("comodule", tuple(axioms))


def trivial_monoid(ctx=KMOD) -> MonoidData:
    """The monoid structure on the unit object."""
    i = ctx.identity(ctx.unit())
    return MonoidData(ctx.unit(), i, i)


def trivial_comonoid(ctx=KMOD) -> ComonoidData:
    """The comonoid structure on the unit object."""
    i = ctx.identity(ctx.unit())
    return ComonoidData(ctx.unit(), i, i)


def prefixed(outcome: CheckOutcome, prefix: str) -> tuple[AxiomReport, ...]:
    """Relabel an outcome's axioms for inclusion in a larger report."""
    return tuple(
        AxiomReport(f"{prefix}{a.name}", a.lhs, a.rhs, a.residuals)
        for a in outcome.axioms)
