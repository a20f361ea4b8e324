"""Built-in example structures, emitted as structure files plus core objects.

kplusl(n): the square-zero extension of the ground field by an n-dimensional
space L, with the double distributive law that is not the flip.  Its basis is
e0 (the unit) and e1..en spanning L, with e_i e_j = 0 inside L, Δ primitive
on L, and ħ acting as the flip except for a sign on L⊗L.  The file also
carries the plain flip `tau`, which satisfies all eight distributive-law
identities but fails the bimonoid compatibility at exactly one identity.

flip-c<n>: the group algebra of the cyclic group of order n with the flip;
the bimonoid check is then the classical bialgebra condition set.

tensor-flip-pair: two copies of the order-2 group algebra with the flip as a
monoid and comonoid distributive law, plus every derived wreath/cowreath
datum, so each law and construct has a file-level instance.

trivial-ring-{q,qxq,upper3}: base rings for the bimodule backend with the
canonical compatible coring structure on C = R.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import ComonoidData, MonoidData
from .bimonoid import DoubleDL
from .errors import UnknownDemo
from .exactlin import (
    UNIT, FreeModule, LinMap, compose, identity, lin, lin_from_cols,
    swap_map, tensor_map, tensor_obj,
)
from .structfile import BaseRingModel, MorphismModel, StructureFile
from .wreathcore import (
    cowreath_product, dl_to_cowreath, dl_to_wreath, wreath_product,
)


@dataclass(frozen=True)
class ZooBuild:
    """A demo: the structure file payload plus the in-memory structures."""

    file: StructureFile
    core: dict[str, Any]


def _rows(f: LinMap) -> list[list[str]]:
    return [[str(x) for x in row] for row in f.rows]


def _morph(dom: list[str], cod: list[str], f: LinMap) -> MorphismModel:
    return MorphismModel(dom=dom, cod=cod, matrix=_rows(f))


def build_kplusl(dim_l: int = 1) -> ZooBuild:
    """The square-zero extension k + L with its non-flip compatible ħ."""
    if dim_l < 1:
        raise UnknownDemo("kplusl needs dim_l >= 1")
    d = dim_l + 1
    b = FreeModule(d, "B")
    bb = tensor_obj(b, b)

    mul_cols = []
    for i in range(d):
        for j in range(d):
            col = [0] * d
            if i == 0:
                col[j] = 1
            elif j == 0:
                col[i] = 1
            mul_cols.append(col)
    mu = lin_from_cols(bb, b, mul_cols)
    eta = lin_from_cols(UNIT, b, [[1] + [0] * dim_l])

    comul_cols = []
    for i in range(d):
        col = [0] * (d * d)
        if i == 0:
            col[0] = 1
        else:
            col[i * d] = 1
            col[i] = 1
        comul_cols.append(col)
    delta = lin_from_cols(b, bb, comul_cols)
    eps = lin(b, UNIT, [[1] + [0] * dim_l])

    hbar_cols = []
    for i in range(d):
        for j in range(d):
            col = [0] * (d * d)
            if i == 0 and j == 0:
                col[0] = 1
            elif i == 0:
                col[j * d] = 1
            elif j == 0:
                col[i] = 1
            else:
                col[i * d + j] = -1
            hbar_cols.append(col)
    hbar = lin_from_cols(bb, bb, hbar_cols)
    tau = swap_map(b, b)

    mon = MonoidData(b, mu, eta)
    com = ComonoidData(b, delta, eps)
    mon_block = {"carrier": ["B"], "mul": "mu", "unit": "eta"}
    com_block = {"carrier": ["B"], "comul": "delta", "counit": "eps"}
    ddl_block = {"carrier": ["B"], "mul": "mu", "unit": "eta",
                 "comul": "delta", "counit": "eps", "map": "hbar"}
    sf = StructureFile(
        backend="kmod",
        objects={"B": d},
        morphisms={
            "mu": _morph(["B", "B"], ["B"], mu),
            "eta": _morph([], ["B"], eta),
            "delta": _morph(["B"], ["B", "B"], delta),
            "eps": _morph(["B"], [], eps),
            "hbar": _morph(["B", "B"], ["B", "B"], hbar),
            "tau": _morph(["B", "B"], ["B", "B"], tau),
        },
        roles={
            "monoid": mon_block,
            "comonoid": com_block,
            "ddl": ddl_block,
            "bimonoid": dict(ddl_block),
            "em": {"kind": "rc", "base": com_block, "carrier": ["B"],
                   "cell": "hbar"},
        },
    )
    return ZooBuild(sf, {
        "monoid": mon, "comonoid": com,
        "ddl": DoubleDL(mon, com, hbar),
        "flip_ddl": DoubleDL(mon, com, tau),
        "hbar": hbar, "tau": tau,
    })


def build_flip_bialgebra(n: int) -> ZooBuild:
    """The cyclic group algebra with the flip as candidate ħ."""
    if n < 1:
        raise UnknownDemo("flip-c<n> needs n >= 1")
    b = FreeModule(n, "B")
    bb = tensor_obj(b, b)
    mul_cols = []
    for i in range(n):
        for j in range(n):
            col = [0] * n
            col[(i + j) % n] = 1
            mul_cols.append(col)
    mu = lin_from_cols(bb, b, mul_cols)
    eta = lin_from_cols(UNIT, b, [[1] + [0] * (n - 1)])
    comul_cols = []
    for i in range(n):
        col = [0] * (n * n)
        col[i * n + i] = 1
        comul_cols.append(col)
    delta = lin_from_cols(b, bb, comul_cols)
    eps = lin(b, UNIT, [[1] * n])
    tau = swap_map(b, b)

    mon = MonoidData(b, mu, eta)
    com = ComonoidData(b, delta, eps)
    mon_block = {"carrier": ["B"], "mul": "mu", "unit": "eta"}
    com_block = {"carrier": ["B"], "comul": "delta", "counit": "eps"}
    ddl_block = {"carrier": ["B"], "mul": "mu", "unit": "eta",
                 "comul": "delta", "counit": "eps", "map": "tau"}
    em_block = (
        {"kind": "la", "base": mon_block, "carrier": ["B"], "cell": "tau"}
        if n % 2 == 0 else
        {"kind": "lc", "base": com_block, "carrier": ["B"], "cell": "tau"})
    sf = StructureFile(
        backend="kmod",
        objects={"B": n},
        morphisms={
            "mu": _morph(["B", "B"], ["B"], mu),
            "eta": _morph([], ["B"], eta),
            "delta": _morph(["B"], ["B", "B"], delta),
            "eps": _morph(["B"], [], eps),
            "tau": _morph(["B", "B"], ["B", "B"], tau),
        },
        roles={
            "monoid": mon_block,
            "comonoid": com_block,
            "ddl": ddl_block,
            "bimonoid": dict(ddl_block),
            "em": em_block,
        },
    )
    return ZooBuild(sf, {
        "monoid": mon, "comonoid": com,
        "ddl": DoubleDL(mon, com, tau),
        "tau": tau,
    })


def _c2_tables() -> tuple[LinMap, LinMap, LinMap, LinMap, FreeModule]:
    b = FreeModule(2)
    bb = tensor_obj(b, b)
    mu = lin_from_cols(bb, b, [[1, 0], [0, 1], [0, 1], [1, 0]])
    eta = lin_from_cols(UNIT, b, [[1, 0]])
    delta = lin_from_cols(b, bb, [[1, 0, 0, 0], [0, 0, 0, 1]])
    eps = lin(b, UNIT, [[1, 1]])
    return mu, eta, delta, eps, b


def build_tensor_flip_pair() -> ZooBuild:
    """Two order-2 group algebras with the flip distributive law both ways.

    Ships the derived wreath, cowreath, both products, the induced
    bi(co)module of the cells, and the universal-morphism data that
    reconstructs the identity on each product.
    """
    mu, eta, delta, eps, a = _c2_tables()
    t_obj = FreeModule(2, "T")
    mon_a = MonoidData(a, mu, eta)
    mon_t = MonoidData(t_obj, mu, eta)
    com_a = ComonoidData(a, delta, eps)
    com_t = ComonoidData(t_obj, delta, eps)
    flip = swap_map(a, t_obj)
    ida, idt = identity(a), identity(t_obj)

    wreath = dl_to_wreath(mon_a, mon_t, flip)
    wr_prod = wreath_product(wreath)
    cowreath = dl_to_cowreath(com_a, com_t, flip)
    cw_prod = cowreath_product(cowreath)
    psi_t = tensor_map(idt, eta)
    eps_r = tensor_map(eps, idt)
    act_l = compose(tensor_map(idt, mu), tensor_map(flip, ida))
    act_r = tensor_map(idt, mu)
    coact_l = tensor_map(delta, idt)
    coact_r = compose(tensor_map(ida, flip), tensor_map(delta, idt))

    mon_a_block = {"carrier": ["A"], "mul": "mul_a", "unit": "unit_a"}
    mon_t_block = {"carrier": ["T"], "mul": "mul_t", "unit": "unit_t"}
    com_a_block = {"carrier": ["A"], "comul": "comul_a", "counit": "counit_a"}
    com_t_block = {"carrier": ["T"], "comul": "comul_t", "counit": "counit_t"}
    sf = StructureFile(
        backend="kmod",
        objects={"A": 2, "T": 2},
        morphisms={
            "mul_a": _morph(["A", "A"], ["A"], mu),
            "unit_a": _morph([], ["A"], eta),
            "comul_a": _morph(["A"], ["A", "A"], delta),
            "counit_a": _morph(["A"], [], eps),
            "mul_t": _morph(["T", "T"], ["T"], mu),
            "unit_t": _morph([], ["T"], eta),
            "comul_t": _morph(["T"], ["T", "T"], delta),
            "counit_t": _morph(["T"], [], eps),
            "flip": _morph(["A", "T"], ["T", "A"], flip),
            "zeta": _morph(["A"], ["T", "A"], wreath.zeta),
            "nu": _morph(["T", "T", "A"], ["T", "A"], wreath.nu),
            "wr_mul": _morph(["T", "A", "T", "A"], ["T", "A"], wr_prod.mul),
            "wr_unit": _morph([], ["T", "A"], wr_prod.unit),
            "xi": _morph(["A", "T"], ["A"], cowreath.xi),
            "delta_cw": _morph(["A", "T"], ["A", "T", "T"], cowreath.delta),
            "cw_comul": _morph(["A", "T"], ["A", "T", "A", "T"],
                               cw_prod.comul),
            "cw_counit": _morph(["A", "T"], [], cw_prod.counit),
            "psi_t": _morph(["T"], ["T", "A"], psi_t),
            "eps_r": _morph(["A", "T"], ["T"], eps_r),
            "act_l": _morph(["A", "T", "A"], ["T", "A"], act_l),
            "act_r": _morph(["T", "A", "A"], ["T", "A"], act_r),
            "coact_l": _morph(["A", "T"], ["A", "A", "T"], coact_l),
            "coact_r": _morph(["A", "T"], ["A", "T", "A"], coact_r),
        },
        roles={
            "monoid": mon_a_block,
            "comonoid": com_a_block,
            "mdl": {"source": mon_a_block, "target": mon_t_block,
                    "map": "flip"},
            "cdl": {"source": com_a_block, "target": com_t_block,
                    "map": "flip"},
            "em": {"kind": "ra", "base": mon_a_block, "carrier": ["T"],
                   "cell": "flip"},
            "wreath": {"base": mon_a_block, "carrier": ["T"], "cell": "flip",
                       "zeta": "zeta", "nu": "nu"},
            "cowreath": {"base": com_a_block, "carrier": ["T"],
                         "cell": "flip", "xi": "xi", "delta": "delta_cw"},
            "module": {"kind": "bi", "monoid": mon_a_block,
                       "carrier": ["T", "A"], "left": "act_l",
                       "right": "act_r"},
            "comodule": {"kind": "bi", "comonoid": com_a_block,
                         "carrier": ["A", "T"], "left": "coact_l",
                         "right": "coact_r"},
            "universal_wreath": {
                "target": {"carrier": ["T", "A"], "mul": "wr_mul",
                           "unit": "wr_unit"},
                "phi": "zeta", "psi": "psi_t"},
            "universal_cowreath": {
                "cone": {"carrier": ["A", "T"], "comul": "cw_comul",
                         "counit": "cw_counit"},
                "alpha": "xi", "beta": "eps_r"},
        },
    )
    return ZooBuild(sf, {
        "mon_a": mon_a, "mon_t": mon_t, "com_a": com_a, "com_t": com_t,
        "flip": flip, "wreath": wreath, "wreath_product": wr_prod,
        "cowreath": cowreath, "cowreath_product": cw_prod,
        "psi_t": psi_t, "eps_r": eps_r,
    })


_RING_TABLES = {
    "q": {
        "dim": 1,
        "mul": [[1]],
        "unit": [[1]],
    },
    "qxq": {
        "dim": 2,
        "mul": [[1, 0, 0, 0], [0, 0, 0, 1]],
        "unit": [[1], [1]],
    },
    # basis E11, E12, E22 of upper triangular 2x2 matrices
    "upper3": {
        "dim": 3,
        "mul": [[1, 0, 0, 0, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 0, 0, 0, 0, 1]],
        "unit": [[1], [0], [1]],
    },
}


def ring_table(which: str) -> dict:
    if which not in _RING_TABLES:
        raise UnknownDemo(f"no base ring named {which!r}")
    return _RING_TABLES[which]


def build_trivial_ring(which: str) -> ZooBuild:
    """C = R with the canonical coring structure and identity ħ lift."""
    tab = ring_table(which)
    d = tab["dim"]
    r = FreeModule(d, "R")
    mul = lin(FreeModule(d * d), r, tab["mul"])
    unit = lin(UNIT, r, tab["unit"])
    idr = identity(r)
    comul = tensor_map(idr, unit)  # c |-> c (x) 1, a lift of the canonical iso
    hbar = identity(FreeModule(d * d))
    sf = StructureFile(
        backend="rbimod",
        base_ring=BaseRingModel(dim=d, mul=[[str(x) for x in row]
                                            for row in mul.rows],
                                unit=[[str(x) for x in row]
                                      for row in unit.rows]),
        objects={"C": d},
        morphisms={
            "cmul": _morph(["C", "C"], ["C"], mul),
            "iota": _morph([], ["C"], idr),
            "comul": _morph(["C"], ["C", "C"], comul),
            "counit": _morph(["C"], [], idr),
            "hbar": _morph(["C", "C"], ["C", "C"], hbar),
        },
        roles={
            "coring": {"carrier": ["C"], "mul": "cmul", "iota": "iota",
                       "comul": "comul", "counit": "counit", "map": "hbar"},
        },
    )
    return ZooBuild(sf, {"mul": mul, "unit": unit, "comul": comul,
                         "hbar": hbar})


DEMO_NAMES = ("flip-c2", "flip-c3", "kplusl", "tensor-flip-pair",
              "trivial-ring-q", "trivial-ring-qxq", "trivial-ring-upper3")


def build_demo(name: str, dim_l: int = 1) -> ZooBuild:
    """Build a demo by CLI name; flip-c<n> accepts any n >= 1."""
    if name == "kplusl":
        return build_kplusl(dim_l)
    if name == "tensor-flip-pair":
        return build_tensor_flip_pair()
    if name.startswith("flip-c"):
        suffix = name[len("flip-c"):]
        if suffix.isdigit() and int(suffix) >= 1:
            return build_flip_bialgebra(int(suffix))
        raise UnknownDemo(f"bad cyclic order in {name!r}")
    if name.startswith("trivial-ring-"):
        return build_trivial_ring(name[len("trivial-ring-"):])
    raise UnknownDemo(f"unknown demo {name!r}")
