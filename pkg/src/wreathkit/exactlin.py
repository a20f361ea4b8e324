"""Exact linear algebra over the rationals for finite free modules.

A map f: X -> Y is a dense row-major matrix with cod.dim rows and dom.dim
columns, entries fractions.Fraction.  Composition and Kronecker products skip
zero entries, so permutation-like structure maps stay cheap even at tensor
dimensions in the hundreds.  Tensor products use the flat index convention
e_i (x) e_j |-> i*dim(Y) + j.

FreeModule equality ignores the label; two free modules of the same dimension
are the same object, which is what makes the monoidal structure strict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch

Rational = Fraction
Scalar = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x: Scalar) -> Fraction:
    """Coerce an int, string like "-3/2", or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class FreeModule:
    """A free module of finite rank; the label is for display only."""

    dim: int
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionMismatch(f"negative dimension {self.dim}")

    def __repr__(self):
        return f"FreeModule({self.dim}{', ' + self.label if self.label else ''})"


UNIT = FreeModule(1, "I")


def _freeze_rows(rows: Iterable[Iterable[Scalar]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(rat(x) for x in row) for row in rows)


@dataclass(frozen=True)
class LinMap:
    """A linear map dom -> cod, stored as a cod.dim x dom.dim matrix."""

    dom: FreeModule
    cod: FreeModule
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.cod.dim:
            raise DimensionMismatch(
                f"matrix has {len(self.rows)} rows, codomain dim {self.cod.dim}")
        for r in self.rows:
            if len(r) != self.dom.dim:
                raise DimensionMismatch(
                    f"matrix row has {len(r)} entries, domain dim {self.dom.dim}")

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def __repr__(self):
        return f"LinMap({self.dom.dim}->{self.cod.dim})"


def lin(dom: FreeModule, cod: FreeModule, rows: Iterable[Iterable[Scalar]]) -> LinMap:
    """Build a LinMap from any nested iterable of ints/strings/Fractions."""
    return LinMap(dom, cod, _freeze_rows(rows))


def lin_from_cols(dom: FreeModule, cod: FreeModule,
                  cols: Iterable[Iterable[Scalar]]) -> LinMap:
    """Build a LinMap column by column (images of the domain basis)."""
    cols = [list(c) for c in cols]
    if len(cols) != dom.dim:
        raise DimensionMismatch(f"{len(cols)} columns for domain dim {dom.dim}")
    rows = [[rat(cols[j][i]) for j in range(dom.dim)] for i in range(cod.dim)]
    return LinMap(dom, cod, tuple(tuple(r) for r in rows))


def lin_from_entries(dom: FreeModule, cod: FreeModule,
                     entries: dict[tuple[int, int], Scalar]) -> LinMap:
    """Build a LinMap from a sparse {(row, col): value} dict."""
    rows = [[_ZERO] * dom.dim for _ in range(cod.dim)]
    for (i, j), v in entries.items():
        rows[i][j] = rat(v)
    return LinMap(dom, cod, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def identity(x: FreeModule) -> LinMap:
    rows = [[_ONE if i == j else _ZERO for j in range(x.dim)] for i in range(x.dim)]
    return LinMap(x, x, tuple(tuple(r) for r in rows))


def zero_map(dom: FreeModule, cod: FreeModule) -> LinMap:
    return LinMap(dom, cod, tuple(tuple([_ZERO] * dom.dim) for _ in range(cod.dim)))


def _int_rows(rows) -> tuple[list[list[int]], int]:
    """Clear denominators: integer matrix plus the common denominator."""
    den = 1
    for row in rows:
        for x in row:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
    if den == 1:
        return [[x.numerator for x in row] for row in rows], 1
    return [[x.numerator * (den // x.denominator) for x in row]
            for row in rows], den


def _ints(m: LinMap) -> tuple[list[list[int]], int]:
    """The cleared-denominator view of a map, cached on the instance."""
    cached = getattr(m, "_icache", None)
    if cached is None:
        cached = _int_rows(m.rows)
        object.__setattr__(m, "_icache", cached)
    return cached


def _pick_raw_fraction():
    # Fraction() spends most of its time dispatching on argument types; for
    # the hot paths the instance is built directly and its slots filled with
    # an already-normalized pair.  Falls back to the public constructor if
    # the stdlib internals ever change shape.
    try:
        probe = Fraction.__new__(Fraction)
        probe._numerator = -3
        probe._denominator = 2
        if probe == Fraction(-3, 2) and probe + probe == Fraction(-3):
            def raw(num: int, den: int) -> Fraction:
                g = gcd(num, den)
                out = Fraction.__new__(Fraction)
                out._numerator = num // g
                out._denominator = den // g
                return out
            return raw
    except (AttributeError, TypeError):
        pass
    return Fraction


_raw_frac = _pick_raw_fraction()
_FRAC_CACHE: dict[tuple[int, int], Fraction] = {}


def _frac(num: int, den: int) -> Fraction:
    """Exact num/den (den positive), interning commonly repeated values."""
    if -64 <= num <= 64 and den <= 64:
        f = _FRAC_CACHE.get((num, den))
        if f is None:
            f = _raw_frac(num, den)
            _FRAC_CACHE[num, den] = f
        return f
    return _raw_frac(num, den)


def _compose2(f: LinMap, g: LinMap) -> LinMap:
    # f after g.  Denominators are cleared so the inner accumulation runs on
    # plain integers; zero entries of g are skipped once up front, which keeps
    # both permutation-like and dense structure maps cheap.
    if g.cod.dim != f.dom.dim:
        raise DimensionMismatch(
            f"compose: inner dims differ ({g.cod.dim} vs {f.dom.dim})")
    n = g.dom.dim
    fn, fd = _ints(f)
    gn, gd = _ints(g)
    den = fd * gd
    gnz = [[(j, b) for j, b in enumerate(row) if b] for row in gn]
    ints = []
    rows = []
    for frow in fn:
        acc = [0] * n
        for k, a in enumerate(frow):
            if a:
                for j, b in gnz[k]:
                    acc[j] += a * b
        ints.append(acc)
        rows.append(tuple(_frac(x, den) if x else _ZERO for x in acc))
    out = LinMap(g.dom, f.cod, tuple(rows))
    object.__setattr__(out, "_icache", (ints, den))
    return out


def compose(*maps: LinMap) -> LinMap:
    """compose(f, g, h) = f after g after h."""
    if not maps:
        raise DimensionMismatch("compose needs at least one map")
    acc = maps[-1]
    for f in reversed(maps[:-1]):
        acc = _compose2(f, acc)
    return acc


def tensor_obj(x: FreeModule, y: FreeModule) -> FreeModule:
    label = f"{x.label}(x){y.label}" if x.label and y.label else ""
    return FreeModule(x.dim * y.dim, label)


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product under the flat index e_i (x) e_j |-> i*dim + j."""
    dc, dd = g.cod.dim, g.dom.dim
    fn, fd = _ints(f)
    gn, gd = _ints(g)
    den = fd * gd
    cols = f.dom.dim * dd
    ints = [[0] * cols for _ in range(f.cod.dim * dc)]
    fracs = [[_ZERO] * cols for _ in range(f.cod.dim * dc)]
    for i_f, frow in enumerate(fn):
        for j_f, a in enumerate(frow):
            if not a:
                continue
            cbase = j_f * dd
            rbase = i_f * dc
            for i_g, grow in enumerate(gn):
                irow = ints[rbase + i_g]
                orow = fracs[rbase + i_g]
                for j_g, b in enumerate(grow):
                    if b:
                        v = a * b
                        irow[cbase + j_g] = v
                        orow[cbase + j_g] = _frac(v, den)
    out = LinMap(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod),
                 tuple(map(tuple, fracs)))
    object.__setattr__(out, "_icache", (ints, den))
    return out


def tensor_many(*maps: LinMap) -> LinMap:
    if not maps:
        raise DimensionMismatch("tensor_many needs at least one map")
    acc = maps[0]
    for g in maps[1:]:
        acc = tensor_map(acc, g)
    return acc


def swap_map(x: FreeModule, y: FreeModule) -> LinMap:
    """The flip x (x) y -> y (x) x on basis vectors."""
    entries = {}
    for i in range(x.dim):
        for j in range(y.dim):
            entries[(j * x.dim + i, i * y.dim + j)] = _ONE
    return lin_from_entries(tensor_obj(x, y), tensor_obj(y, x), entries)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def kernel_basis(f: LinMap) -> tuple[tuple[Fraction, ...], ...]:
    """Basis of ker f, one vector per free column, free coordinate set to 1."""
    red, pivots = rref(f.rows)
    pivot_set = set(pivots)
    free = [c for c in range(f.dom.dim) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [_ZERO] * f.dom.dim
        v[fc] = _ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def rank(f: LinMap) -> int:
    return len(rref(f.rows)[1])


def inverse(f: LinMap) -> LinMap:
    """Exact inverse of a square invertible map; ValueError if singular."""
    n = f.dom.dim
    if f.cod.dim != n:
        raise DimensionMismatch("inverse needs a square matrix")
    aug = [list(f.rows[i]) + [_ONE if j == i else _ZERO for j in range(n)]
           for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return LinMap(f.cod, f.dom, tuple(tuple(red[i][n:]) for i in range(n)))


@dataclass(frozen=True)
class Residual:
    """One coordinate where two maps disagree."""

    row: int
    col: int
    lhs: Fraction
    rhs: Fraction

    @property
    def delta(self) -> Fraction:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class AxiomReport:
    """Result of comparing the two sides of one axiom."""

    name: str
    lhs: str
    rhs: str
    residuals: tuple[Residual, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.residuals


@dataclass(frozen=True)
class CheckOutcome:
    """Per-axiom results of one law check."""

    law: str
    axioms: tuple[AxiomReport, ...]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)

    def failing(self) -> tuple[AxiomReport, ...]:
        return tuple(a for a in self.axioms if not a.passed)

    def axiom(self, name: str) -> AxiomReport:
        for a in self.axioms:
            if a.name == name:
                return a
        raise KeyError(name)


def equality_axiom(name: str, lhs_str: str, rhs_str: str,
                   f: LinMap, g: LinMap) -> AxiomReport:
    """Compare two maps entrywise; residuals list every disagreement."""
    if f.dom.dim != g.dom.dim or f.cod.dim != g.cod.dim:
        raise DimensionMismatch(
            f"{name}: cannot compare {f.dom.dim}->{f.cod.dim} with "
            f"{g.dom.dim}->{g.cod.dim}")
    fn, fd = _ints(f)
    gn, gd = _ints(g)
    if fd == gd and fn == gn:
        return AxiomReport(name, lhs_str, rhs_str, ())
    residuals = []
    for i in range(f.cod.dim):
        frow, grow = fn[i], gn[i]
        for j in range(f.dom.dim):
            if frow[j] * gd != grow[j] * fd:
                residuals.append(Residual(i, j, f.rows[i][j], g.rows[i][j]))
    return AxiomReport(name, lhs_str, rhs_str, tuple(residuals))


def map_equal(f: LinMap, g: LinMap) -> CheckOutcome:
    """Exact equality of two maps with the same shape."""
    return CheckOutcome("map-equal", (equality_axiom("equal", "f", "g", f, g),))


class KModContext:
    """Strict monoidal context of free modules over the rationals.

    Objects are FreeModule values (equal iff same dimension, so the tensor is
    strictly associative and unital), maps are LinMap.
    """

    name = "kmod"

    def unit(self) -> FreeModule:
        return UNIT

    def tensor(self, x: FreeModule, y: FreeModule) -> FreeModule:
        return tensor_obj(x, y)

    def tensor_all(self, *xs: FreeModule) -> FreeModule:
        acc = UNIT
        for x in xs:
            acc = tensor_obj(acc, x)
        return acc

    def identity(self, x: FreeModule) -> LinMap:
        return identity(x)

    def compose(self, *fs: LinMap) -> LinMap:
        return compose(*fs)

    def tensor_map(self, *fs: LinMap) -> LinMap:
        return tensor_many(*fs)

    def to_lin(self, f: LinMap) -> LinMap:
        return f

    def obj_dim(self, x: FreeModule) -> int:
        return x.dim


KMOD = KModContext()
