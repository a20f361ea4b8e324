"""Command line interface: check, build, demo, report.

Exit codes: 0 the law holds (or the build/demo succeeded), 1 a law or
precondition fails mathematically, 2 the input is malformed (bad JSON, bad
rational, unknown names, missing roles, dimension mismatches).  Timing goes
to stderr so stdout stays byte-identical for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
import time

from .algebra import (
    ComoduleData, ComonoidData, ModuleData, MonoidData, check_comodule,
    check_comonoid, check_module, check_monoid,
)
from .bimonoid import (
    CoringCompatData, DoubleDL, check_bimonoid, check_coring_compat,
    check_double_dl, induced_structures,
)
from .entwine import EM_KINDS, EmCell, check_em_object
from .errors import (
    DimensionMismatch, HypothesisFailed, KindMismatch, MissingRole,
    NotBalanced, PreconditionFailed, SchemaError, UnknownDemo, WreathkitError,
)
from .exactlin import CheckOutcome, FreeModule
from .report import (
    check_report, dumps, multi_report, render_multi_text, render_outcome_text,
)
from .structfile import (
    StructureFile, base_ring, emit, get_role, linmap, parse_file, role_dict,
    role_str, word_dim,
)
from .wreathcore import (
    CowreathData, WreathData, check_comonoid_dl, check_cowreath,
    check_monoid_dl, check_wreath, cowreath_product, dl_to_cowreath,
    dl_to_wreath, universal_cowreath_morphism, universal_wreath_morphism,
    wreath_product,
)
from .zoo import DEMO_NAMES, build_demo

LAW_NAMES = ("monoid", "comonoid", "module", "comodule",
             "em:rc", "em:lc", "em:ra", "em:la",
             "cdl", "mdl", "cowreath", "wreath", "ddl", "bimonoid",
             "coring-compat")

CONSTRUCT_NAMES = ("cowreath-product", "wreath-product", "induced-monoid",
                   "induced-comonoid", "universal-cowreath",
                   "universal-wreath")

# role keys picked up by `report`, in the order their laws are listed above
_ROLE_TO_LAW = {
    "monoid": "monoid", "comonoid": "comonoid", "module": "module",
    "comodule": "comodule", "em": "em", "cdl": "cdl", "mdl": "mdl",
    "cowreath": "cowreath", "wreath": "wreath", "ddl": "ddl",
    "bimonoid": "bimonoid", "coring": "coring-compat",
}


def _carrier(sf: StructureFile, block: dict, path: str) -> FreeModule:
    word = block.get("carrier")
    if not isinstance(word, list) or not all(isinstance(w, str) for w in word):
        raise SchemaError(f"role {path}.carrier must be a list of object names")
    return FreeModule(word_dim(sf, word), "(x)".join(word))


def _carrier_word(block: dict, path: str) -> list[str]:
    word = block.get("carrier")
    if not isinstance(word, list) or not all(isinstance(w, str) for w in word):
        raise SchemaError(f"role {path}.carrier must be a list of object names")
    return word


def _monoid(sf: StructureFile, block: dict, path: str) -> MonoidData:
    return MonoidData(_carrier(sf, block, path),
                      linmap(sf, role_str(block, "mul", path)),
                      linmap(sf, role_str(block, "unit", path)))


def _comonoid(sf: StructureFile, block: dict, path: str) -> ComonoidData:
    return ComonoidData(_carrier(sf, block, path),
                        linmap(sf, role_str(block, "comul", path)),
                        linmap(sf, role_str(block, "counit", path)))


def _need_kmod(sf: StructureFile, law: str) -> None:
    if sf.backend != "kmod":
        raise SchemaError(f"law {law} runs on backend kmod; this file "
                          f"declares {sf.backend} (only coring-compat reads "
                          f"rbimod files)")


def _em_cell_from(sf: StructureFile, block: dict, path: str,
                  kind: str) -> EmCell:
    base_block = role_dict(block, "base", path)
    if kind in ("rc", "lc"):
        base = _comonoid(sf, base_block, f"{path}.base")
    else:
        base = _monoid(sf, base_block, f"{path}.base")
    carrier = _carrier(sf, block, path)
    cell = linmap(sf, role_str(block, "cell", path))
    return EmCell(kind, base, carrier, cell)


def _law_em(sf: StructureFile, law: str) -> CheckOutcome:
    kind = law.split(":", 1)[1]
    block = get_role(sf, "em")
    declared = block.get("kind")
    if declared != kind:
        raise KindMismatch(f"file binds an em cell of kind {declared!r}, "
                           f"law {law} wants {kind!r}")
    return check_em_object(_em_cell_from(sf, block, "em", kind))


def _law_module(sf: StructureFile) -> CheckOutcome:
    block = get_role(sf, "module")
    kind = block.get("kind")
    if kind not in ("left", "right", "bi"):
        raise SchemaError("role module.kind must be left, right or bi")
    mon = _monoid(sf, role_dict(block, "monoid", "module"), "module.monoid")
    data = ModuleData(
        kind, mon, _carrier(sf, block, "module"),
        left=(linmap(sf, role_str(block, "left", "module"))
              if kind in ("left", "bi") else None),
        right=(linmap(sf, role_str(block, "right", "module"))
               if kind in ("right", "bi") else None))
    return check_module(data)


def _law_comodule(sf: StructureFile) -> CheckOutcome:
    block = get_role(sf, "comodule")
    kind = block.get("kind")
    if kind not in ("left", "right", "bi"):
        raise SchemaError("role comodule.kind must be left, right or bi")
    com = _comonoid(sf, role_dict(block, "comonoid", "comodule"),
                    "comodule.comonoid")
    data = ComoduleData(
        kind, com, _carrier(sf, block, "comodule"),
        left=(linmap(sf, role_str(block, "left", "comodule"))
              if kind in ("left", "bi") else None),
        right=(linmap(sf, role_str(block, "right", "comodule"))
               if kind in ("right", "bi") else None))
    return check_comodule(data)


def _cowreath_data(sf: StructureFile) -> CowreathData:
    block = get_role(sf, "cowreath")
    base = _comonoid(sf, role_dict(block, "base", "cowreath"), "cowreath.base")
    cell = EmCell("rc", base, _carrier(sf, block, "cowreath"),
                  linmap(sf, role_str(block, "cell", "cowreath")))
    return CowreathData(cell, linmap(sf, role_str(block, "xi", "cowreath")),
                        linmap(sf, role_str(block, "delta", "cowreath")))


def _wreath_data(sf: StructureFile) -> WreathData:
    block = get_role(sf, "wreath")
    base = _monoid(sf, role_dict(block, "base", "wreath"), "wreath.base")
    cell = EmCell("ra", base, _carrier(sf, block, "wreath"),
                  linmap(sf, role_str(block, "cell", "wreath")))
    return WreathData(cell, linmap(sf, role_str(block, "zeta", "wreath")),
                      linmap(sf, role_str(block, "nu", "wreath")))


def _ddl_data(sf: StructureFile, role: str) -> DoubleDL:
    block = get_role(sf, role)
    mon = MonoidData(_carrier(sf, block, role),
                     linmap(sf, role_str(block, "mul", role)),
                     linmap(sf, role_str(block, "unit", role)))
    com = ComonoidData(_carrier(sf, block, role),
                       linmap(sf, role_str(block, "comul", role)),
                       linmap(sf, role_str(block, "counit", role)))
    return DoubleDL(mon, com, linmap(sf, role_str(block, "map", role)))


def _coring_data(sf: StructureFile) -> CoringCompatData:
    if sf.backend != "rbimod":
        raise SchemaError("law coring-compat needs backend rbimod")
    block = get_role(sf, "coring")
    return CoringCompatData(
        base_ring(sf),
        linmap(sf, role_str(block, "mul", "coring")),
        linmap(sf, role_str(block, "iota", "coring")),
        linmap(sf, role_str(block, "comul", "coring")),
        linmap(sf, role_str(block, "counit", "coring")),
        linmap(sf, role_str(block, "map", "coring")))


def run_check(sf: StructureFile, law: str) -> CheckOutcome:
    """Run one law check against the roles bound in a structure file."""
    if law == "coring-compat":
        return check_coring_compat(_coring_data(sf))
    _need_kmod(sf, law)
    if law == "monoid":
        return check_monoid(_monoid(sf, get_role(sf, "monoid"), "monoid"))
    if law == "comonoid":
        return check_comonoid(_comonoid(sf, get_role(sf, "comonoid"),
                                        "comonoid"))
    if law == "module":
        return _law_module(sf)
    if law == "comodule":
        return _law_comodule(sf)
    if law.startswith("em:"):
        if law not in LAW_NAMES:
            raise SchemaError(f"unknown law {law!r}")
        return _law_em(sf, law)
    if law == "cdl":
        block = get_role(sf, "cdl")
        return check_comonoid_dl(
            _comonoid(sf, role_dict(block, "source", "cdl"), "cdl.source"),
            _comonoid(sf, role_dict(block, "target", "cdl"), "cdl.target"),
            linmap(sf, role_str(block, "map", "cdl")))
    if law == "mdl":
        block = get_role(sf, "mdl")
        return check_monoid_dl(
            _monoid(sf, role_dict(block, "source", "mdl"), "mdl.source"),
            _monoid(sf, role_dict(block, "target", "mdl"), "mdl.target"),
            linmap(sf, role_str(block, "map", "mdl")))
    if law == "cowreath":
        return check_cowreath(_cowreath_data(sf))
    if law == "wreath":
        return check_wreath(_wreath_data(sf))
    if law == "ddl":
        return check_double_dl(_ddl_data(sf, "ddl"))
    if law == "bimonoid":
        return check_bimonoid(_ddl_data(sf, "bimonoid"))
    raise SchemaError(f"unknown law {law!r}")


def run_report(sf: StructureFile) -> dict[str, CheckOutcome]:
    """Run every law a file binds roles for, in the canonical law order."""
    outcomes: dict[str, CheckOutcome] = {}
    for key in sorted(sf.roles):
        if key not in _ROLE_TO_LAW:
            continue  # construct inputs like universal_* are not laws
        if key == "em":
            block = get_role(sf, "em")
            kind = block.get("kind")
            if kind not in EM_KINDS:
                raise SchemaError(f"role em.kind must be one of {EM_KINDS}")
            outcomes[f"em:{kind}"] = run_check(sf, f"em:{kind}")
        else:
            law = _ROLE_TO_LAW[key]
            outcomes[law] = run_check(sf, law)
    if not outcomes:
        raise MissingRole("structure file binds no law roles")
    return outcomes


def _word_objects(sf: StructureFile, *words: list[str]) -> dict[str, int]:
    objects: dict[str, int] = {}
    for word in words:
        for name in word:
            objects[name] = sf.objects[name]
    return objects


def _morph_dict(dom: list[str], cod: list[str], f) -> dict:
    return {"dom": dom, "cod": cod,
            "matrix": [[str(x) for x in row] for row in f.rows]}


def run_build(sf: StructureFile, construct: str) -> StructureFile:
    """Run a named construction and package the result as a structure file."""
    _need_kmod(sf, construct)
    if construct == "cowreath-product":
        block = get_role(sf, "cowreath")
        word = (_carrier_word(role_dict(block, "base", "cowreath"),
                              "cowreath.base")
                + _carrier_word(block, "cowreath"))
        product = cowreath_product(_cowreath_data(sf))
        return StructureFile(
            backend="kmod", objects=_word_objects(sf, word),
            morphisms={
                "comul": _morph_dict(word, word + word, product.comul),
                "counit": _morph_dict(word, [], product.counit),
            },
            roles={"comonoid": {"carrier": word, "comul": "comul",
                                "counit": "counit"}})
    if construct == "wreath-product":
        block = get_role(sf, "wreath")
        word = (_carrier_word(block, "wreath")
                + _carrier_word(role_dict(block, "base", "wreath"),
                                "wreath.base"))
        product = wreath_product(_wreath_data(sf))
        return StructureFile(
            backend="kmod", objects=_word_objects(sf, word),
            morphisms={
                "mul": _morph_dict(word + word, word, product.mul),
                "unit": _morph_dict([], word, product.unit),
            },
            roles={"monoid": {"carrier": word, "mul": "mul",
                              "unit": "unit"}})
    if construct in ("induced-monoid", "induced-comonoid"):
        block = get_role(sf, "ddl")
        word = _carrier_word(block, "ddl")
        mon, com = induced_structures(_ddl_data(sf, "ddl"))
        pw = word + word
        if construct == "induced-monoid":
            return StructureFile(
                backend="kmod", objects=_word_objects(sf, pw),
                morphisms={
                    "mul": _morph_dict(pw + pw, pw, mon.mul),
                    "unit": _morph_dict([], pw, mon.unit),
                },
                roles={"monoid": {"carrier": pw, "mul": "mul",
                                  "unit": "unit"}})
        return StructureFile(
            backend="kmod", objects=_word_objects(sf, pw),
            morphisms={
                "comul": _morph_dict(pw, pw + pw, com.comul),
                "counit": _morph_dict(pw, [], com.counit),
            },
            roles={"comonoid": {"carrier": pw, "comul": "comul",
                                "counit": "counit"}})
    if construct == "universal-cowreath":
        d = _cowreath_data(sf)
        block = get_role(sf, "universal_cowreath")
        cone_block = role_dict(block, "cone", "universal_cowreath")
        cone = _comonoid(sf, cone_block, "universal_cowreath.cone")
        gamma = universal_cowreath_morphism(
            d, cone,
            linmap(sf, role_str(block, "alpha", "universal_cowreath")),
            linmap(sf, role_str(block, "beta", "universal_cowreath")))
        cw_block = get_role(sf, "cowreath")
        dom_word = _carrier_word(cone_block, "universal_cowreath.cone")
        cod_word = (_carrier_word(role_dict(cw_block, "base", "cowreath"),
                                  "cowreath.base")
                    + _carrier_word(cw_block, "cowreath"))
        return StructureFile(
            backend="kmod", objects=_word_objects(sf, dom_word, cod_word),
            morphisms={"gamma": _morph_dict(dom_word, cod_word, gamma)},
            roles={})
    if construct == "universal-wreath":
        d = _wreath_data(sf)
        block = get_role(sf, "universal_wreath")
        target_block = role_dict(block, "target", "universal_wreath")
        target = _monoid(sf, target_block, "universal_wreath.target")
        phi_map = universal_wreath_morphism(
            d, target,
            linmap(sf, role_str(block, "phi", "universal_wreath")),
            linmap(sf, role_str(block, "psi", "universal_wreath")))
        wr_block = get_role(sf, "wreath")
        dom_word = (_carrier_word(wr_block, "wreath")
                    + _carrier_word(role_dict(wr_block, "base", "wreath"),
                                    "wreath.base"))
        cod_word = _carrier_word(target_block, "universal_wreath.target")
        return StructureFile(
            backend="kmod", objects=_word_objects(sf, dom_word, cod_word),
            morphisms={"phi": _morph_dict(dom_word, cod_word, phi_map)},
            roles={})
    raise SchemaError(f"unknown construct {construct!r}")


def run_demo(name: str, dim_l: int = 1) -> StructureFile:
    return build_demo(name, dim_l).file


def _write_output(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise SchemaError(f"cannot write {path}: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wreathkit",
        description="verify and build monoidal algebra structures from "
                    "structure files")
    sub = ap.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check one law against a file")
    p_check.add_argument("file")
    p_check.add_argument("--law", required=True, choices=LAW_NAMES)
    p_check.add_argument("--format", default="text", choices=("text", "json"))

    p_build = sub.add_parser("build", help="run a construction on a file")
    p_build.add_argument("file")
    p_build.add_argument("--construct", required=True,
                         choices=CONSTRUCT_NAMES)
    p_build.add_argument("-o", "--output", required=True)

    p_demo = sub.add_parser("demo", help="emit a built-in example file")
    p_demo.add_argument("name")
    p_demo.add_argument("--dim-l", type=int, default=1)
    p_demo.add_argument("-o", "--output", required=True)

    p_report = sub.add_parser("report", help="run every law a file binds")
    p_report.add_argument("file")
    p_report.add_argument("--format", default="json",
                          choices=("text", "json"))
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "check":
            outcome = run_check(parse_file(args.file), args.law)
            if args.format == "json":
                sys.stdout.write(dumps(check_report(outcome)))
            else:
                sys.stdout.write(render_outcome_text(outcome))
            code = 0 if outcome.passed else 1
        elif args.command == "build":
            built = run_build(parse_file(args.file), args.construct)
            _write_output(args.output, emit(built))
            sys.stdout.write(f"wrote {args.output}\n")
            code = 0
        elif args.command == "demo":
            built = run_demo(args.name, args.dim_l)
            _write_output(args.output, emit(built))
            sys.stdout.write(f"wrote {args.output}\n")
            code = 0
        else:
            outcomes = run_report(parse_file(args.file))
            if args.format == "text":
                sys.stdout.write(render_multi_text(outcomes))
            else:
                sys.stdout.write(dumps(multi_report(outcomes)))
            code = 0 if all(o.passed for o in outcomes.values()) else 1
    except (SchemaError, MissingRole, DimensionMismatch, KindMismatch,
            UnknownDemo) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    except (PreconditionFailed, HypothesisFailed, NotBalanced,
            WreathkitError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        code = 1
    print(f"# elapsed {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
