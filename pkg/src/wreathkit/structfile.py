"""Structure files: the JSON interchange format for all CLI and service I/O.

A structure file declares named objects (dimensions), named morphisms (exact
rational matrices between tensor words of objects) and role blocks binding
those names to the slots of each law.  Matrices always live on the full
k-tensor spaces; in the "rbimod" backend they are read as lifts and the
checkers project them to the tensor product over the declared base ring.

Rationals are strings like "3", "-3/2".  emit() is canonical (sorted keys,
fixed indentation, normalized fractions), so emit(parse(emit(x))) is
byte-identical to emit(x).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, ValidationError

from .bimodcat import BaseRing
from .errors import MissingRole, SchemaError
from .exactlin import FreeModule, LinMap, lin

SCHEMA_VERSION = 1


def parse_rational(s: str) -> Fraction:
    """Parse "p" or "p/q" with integer p and positive integer q."""
    if not isinstance(s, str):
        raise SchemaError(f"rational must be a string, got {type(s).__name__}")
    body = s[1:] if s.startswith("-") else s
    num, slash, den = body.partition("/")
    if not num.isdigit() or (slash and not den.isdigit()):
        raise SchemaError(f"bad rational {s!r}")
    if slash and int(den) == 0:
        raise SchemaError(f"bad rational {s!r}: zero denominator")
    return Fraction(s)


def format_rational(x: Fraction) -> str:
    return str(x)


class MorphismModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dom: list[str]
    cod: list[str]
    matrix: list[list[str]]


class BaseRingModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int
    mul: list[list[str]]
    unit: list[list[str]]


class StructureFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: int = SCHEMA_VERSION
    scalar: Literal["rational"] = "rational"
    backend: Literal["kmod", "rbimod"] = "kmod"
    base_ring: Optional[BaseRingModel] = None
    objects: dict[str, int] = {}
    morphisms: dict[str, MorphismModel] = {}
    roles: dict[str, Any] = {}


def parse(text: str) -> StructureFile:
    """Parse and validate a structure file, raising SchemaError on problems."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return parse_obj(data)


def parse_obj(data) -> StructureFile:
    """Validate already-decoded structure file data."""
    try:
        sf = StructureFile.model_validate(data)
    except ValidationError as exc:
        raise SchemaError(f"bad structure file: {exc}") from exc
    if sf.schema_version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {sf.schema_version}")
    if sf.backend == "rbimod" and sf.base_ring is None:
        raise SchemaError("backend rbimod requires a base_ring block")
    if sf.backend == "kmod" and sf.base_ring is not None:
        raise SchemaError("backend kmod must not carry a base_ring block")
    for name, d in sf.objects.items():
        if d < 0:
            raise SchemaError(f"object {name!r} has negative dimension")
    if sf.base_ring is not None:
        for rows in (sf.base_ring.mul, sf.base_ring.unit):
            for row in rows:
                for s in row:
                    parse_rational(s)
    for name, m in sf.morphisms.items():
        for w in m.dom + m.cod:
            if w not in sf.objects:
                raise SchemaError(f"morphism {name!r} references unknown "
                                  f"object {w!r}")
        for row in m.matrix:
            for s in row:
                parse_rational(s)
    return sf


def parse_file(path: str) -> StructureFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def emit(sf: StructureFile) -> str:
    """Canonical serialization: sorted keys, two-space indent, normalized rationals."""
    data = sf.model_dump(exclude_none=True)
    for m in data.get("morphisms", {}).values():
        m["matrix"] = [[format_rational(parse_rational(s)) for s in row]
                       for row in m["matrix"]]
    if "base_ring" in data:
        br = data["base_ring"]
        for key in ("mul", "unit"):
            br[key] = [[format_rational(parse_rational(s)) for s in row]
                       for row in br[key]]
    return json.dumps(data, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def unit_dim(sf: StructureFile) -> int:
    """k-dimension of the empty tensor word."""
    return sf.base_ring.dim if sf.base_ring is not None else 1


def word_dim(sf: StructureFile, word: list[str]) -> int:
    """k-dimension of a tensor word of object names."""
    if not word:
        return unit_dim(sf)
    d = 1
    for name in word:
        if name not in sf.objects:
            raise SchemaError(f"unknown object {name!r}")
        d *= sf.objects[name]
    return d


def linmap(sf: StructureFile, name: str) -> LinMap:
    """Resolve a morphism name to an exact matrix on the full k-tensor spaces."""
    if name not in sf.morphisms:
        raise SchemaError(f"unknown morphism {name!r}")
    m = sf.morphisms[name]
    dom = FreeModule(word_dim(sf, m.dom), "(x)".join(m.dom))
    cod = FreeModule(word_dim(sf, m.cod), "(x)".join(m.cod))
    rows = [[parse_rational(s) for s in row] for row in m.matrix]
    if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
        from .errors import DimensionMismatch
        raise DimensionMismatch(
            f"morphism {name!r}: matrix is {len(rows)}x"
            f"{len(rows[0]) if rows else 0}, dom/cod words need "
            f"{cod.dim}x{dom.dim}")
    return lin(dom, cod, rows)


def base_ring(sf: StructureFile) -> BaseRing:
    if sf.base_ring is None:
        raise SchemaError("structure file has no base_ring block")
    br = sf.base_ring
    r = FreeModule(br.dim, "R")
    mul_rows = [[parse_rational(s) for s in row] for row in br.mul]
    unit_rows = [[parse_rational(s) for s in row] for row in br.unit]
    if len(mul_rows) != br.dim or any(len(r_) != br.dim * br.dim
                                      for r_ in mul_rows):
        raise SchemaError("base_ring.mul must be dim x dim^2")
    if len(unit_rows) != br.dim or any(len(r_) != 1 for r_ in unit_rows):
        raise SchemaError("base_ring.unit must be dim x 1")
    return BaseRing(r, lin(FreeModule(br.dim * br.dim), r, mul_rows),
                    lin(FreeModule(1), r, unit_rows))


def get_role(sf: StructureFile, key: str) -> dict:
    if key not in sf.roles:
        raise MissingRole(f"structure file has no {key!r} role")
    block = sf.roles[key]
    if not isinstance(block, dict):
        raise SchemaError(f"role {key!r} must be an object")
    return block


def role_str(block: dict, key: str, path: str) -> str:
    if key not in block:
        raise SchemaError(f"role {path} is missing key {key!r}")
    v = block[key]
    if not isinstance(v, str):
        raise SchemaError(f"role {path}.{key} must be a string")
    return v


def role_dict(block: dict, key: str, path: str) -> dict:
    if key not in block:
        raise SchemaError(f"role {path} is missing key {key!r}")
    v = block[key]
    if not isinstance(v, dict):
        raise SchemaError(f"role {path}.{key} must be an object")
    return v
