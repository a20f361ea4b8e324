"""Bimodules over an exact base ring R and tensor products over R.

M (x)_R N is presented as an explicit quotient of the k-tensor product: the
relation span {(m.r)(x)n - m(x)(r.n)} is row reduced once, the quotient basis
is the set of non-pivot standard basis vectors, proj reads the RREF
coefficients off and sect embeds the free coordinates, so proj . sect = id.

flatten() applies the same construction to a whole tensor word (relations at
every adjacent junction), which gives every bracketing one shared normalized
carrier.  BimodContext builds a strict monoidal category on top: objects are
words (tuples of bimodules, the empty word is the unit object with carrier R),
the tensor is concatenation, and maps are matrices between flattened carriers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, NotBalanced
from .exactlin import (
    UNIT, AxiomReport, CheckOutcome, FreeModule, LinMap, compose,
    equality_axiom, identity, lin_from_entries, rref, swap_map, tensor_many,
    tensor_map, tensor_obj,
)


@dataclass(frozen=True)
class BaseRing:
    """A unital associative k-algebra R given by mul: R(x)R -> R, unit: k -> R."""

    carrier: FreeModule
    mul: LinMap
    unit: LinMap

    def __post_init__(self):
        d = self.carrier.dim
        if self.mul.dom.dim != d * d or self.mul.cod.dim != d:
            raise DimensionMismatch("base ring mul must be R(x)R -> R")
        if self.unit.dom.dim != 1 or self.unit.cod.dim != d:
            raise DimensionMismatch("base ring unit must be k -> R")

    @property
    def dim(self) -> int:
        return self.carrier.dim


@dataclass(frozen=True)
class Bimodule:
    """An R-R-bimodule: lact: R(x)M -> M and ract: M(x)R -> M."""

    ring: BaseRing
    carrier: FreeModule
    lact: LinMap
    ract: LinMap

    def __post_init__(self):
        d, m = self.ring.dim, self.carrier.dim
        if self.lact.dom.dim != d * m or self.lact.cod.dim != m:
            raise DimensionMismatch("lact must be R(x)M -> M")
        if self.ract.dom.dim != m * d or self.ract.cod.dim != m:
            raise DimensionMismatch("ract must be M(x)R -> M")

    @property
    def dim(self) -> int:
        return self.carrier.dim


def check_base_ring(r: BaseRing) -> CheckOutcome:
    """Unit and associativity laws for R."""
    idr = identity(r.carrier)
    axioms = (
        equality_axiom("(ring-unit-l)", "mul∘(unit⊗R)", "id",
                       compose(r.mul, tensor_map(r.unit, idr)), idr),
        equality_axiom("(ring-unit-r)", "mul∘(R⊗unit)", "id",
                       compose(r.mul, tensor_map(idr, r.unit)), idr),
        equality_axiom("(ring-assoc)", "mul∘(mul⊗R)", "mul∘(R⊗mul)",
                       compose(r.mul, tensor_map(r.mul, idr)),
                       compose(r.mul, tensor_map(idr, r.mul))),
    )
    return CheckOutcome("base-ring", axioms)


def check_bimodule(m: Bimodule) -> CheckOutcome:
    """The five bimodule laws: unit and associativity per side, commutation."""
    r = m.ring
    idr, idm = identity(r.carrier), identity(m.carrier)
    axioms = (
        equality_axiom("(lmod-unit)", "lact∘(unit⊗M)", "id",
                       compose(m.lact, tensor_map(r.unit, idm)), idm),
        equality_axiom("(lmod-assoc)", "lact∘(mul⊗M)", "lact∘(R⊗lact)",
                       compose(m.lact, tensor_map(r.mul, idm)),
                       compose(m.lact, tensor_map(idr, m.lact))),
        equality_axiom("(rmod-unit)", "ract∘(M⊗unit)", "id",
                       compose(m.ract, tensor_map(idm, r.unit)), idm),
        equality_axiom("(rmod-assoc)", "ract∘(ract⊗R)", "ract∘(M⊗mul)",
                       compose(m.ract, tensor_map(m.ract, idr)),
                       compose(m.ract, tensor_map(idm, r.mul))),
        equality_axiom("(bimod-comm)", "ract∘(lact⊗R)", "lact∘(R⊗ract)",
                       compose(m.ract, tensor_map(m.lact, idr)),
                       compose(m.lact, tensor_map(idr, m.ract))),
    )
    return CheckOutcome("bimodule", axioms)


def regular_bimodule(r: BaseRing) -> Bimodule:
    """R as a bimodule over itself via multiplication."""
    return Bimodule(r, r.carrier, r.mul, r.mul)


Word = tuple[Bimodule, ...]


@dataclass(frozen=True)
class Flat:
    """Presentation of the flattened carrier of a tensor word over R.

    tensor is the full k-tensor carrier, quotient the coequalizer carrier;
    proj: tensor -> quotient and sect: quotient -> tensor satisfy
    proj . sect = id and ker(proj) = relation span.
    """

    word: Word
    tensor: FreeModule
    quotient: FreeModule
    proj: LinMap
    sect: LinMap


def _word_tensor(ring: BaseRing, word: Word) -> FreeModule:
    if not word:
        return ring.carrier
    acc = word[0].carrier
    for m in word[1:]:
        acc = tensor_obj(acc, m.carrier)
    return acc


def _junction_relations(word: Word) -> list[list]:
    """Relation generators (m.r)(x)n - m(x)(r.n) at every junction, as rows."""
    rows = []
    for j in range(len(word) - 1):
        m, n = word[j], word[j + 1]
        ring = m.ring
        pre = 1
        for w in word[:j]:
            pre *= w.dim
        post = 1
        for w in word[j + 2:]:
            post *= w.dim
        # generator on M (x) R (x) N, then padded by identities on both sides
        mid = tensor_obj(tensor_obj(m.carrier, ring.carrier), n.carrier)
        lhs = tensor_map(m.ract, identity(n.carrier))
        rhs = compose(tensor_map(identity(m.carrier), n.lact))
        gen = LinMap(mid, lhs.cod, tuple(
            tuple(a - b for a, b in zip(lr, rr))
            for lr, rr in zip(lhs.rows, rhs.rows)))
        padded = gen
        if pre > 1:
            padded = tensor_map(identity(FreeModule(pre)), padded)
        if post > 1:
            padded = tensor_map(padded, identity(FreeModule(post)))
        # columns of padded span the relations contributed by this junction
        for c in range(padded.dom.dim):
            col = [padded.rows[i][c] for i in range(padded.cod.dim)]
            if any(col):
                rows.append(col)
    return rows


@lru_cache(maxsize=None)
def _flatten_cached(ring: BaseRing, word: Word) -> Flat:
    big = _word_tensor(ring, word)
    if len(word) == 0:
        return Flat(word, big, big, identity(big), identity(big))
    rel_rows = _junction_relations(word)
    if not rel_rows:
        q = big
        return Flat(word, big, q, identity(big), identity(big))
    red, pivots = rref(rel_rows)
    pivot_set = set(pivots)
    free = [c for c in range(big.dim) if c not in pivot_set]
    q = FreeModule(len(free))
    proj_entries = {}
    for k, f in enumerate(free):
        proj_entries[(k, f)] = 1
    for i, p in enumerate(pivots):
        # [e_p] = -sum_f red[i][f] [e_f]
        for k, f in enumerate(free):
            v = red[i][f]
            if v:
                proj_entries[(k, p)] = -v
    proj = lin_from_entries(big, q, proj_entries)
    sect = lin_from_entries(q, big, {(f, k): 1 for k, f in enumerate(free)})
    return Flat(word, big, q, proj, sect)


def flatten(ring: BaseRing, word) -> Flat:
    """Flatten a tensor word to its carrier over R (cached per word)."""
    return _flatten_cached(ring, tuple(word))


@dataclass(frozen=True)
class RTensor:
    """M (x)_R N with its induced bimodule structure and presentation maps."""

    left: Bimodule
    right: Bimodule
    quotient: Bimodule
    proj: LinMap
    sect: LinMap


def r_tensor(ring: BaseRing, m: Bimodule, n: Bimodule) -> RTensor:
    """The tensor product over R of two bimodules."""
    fl = flatten(ring, (m, n))
    idr = identity(ring.carrier)
    lact = compose(fl.proj, tensor_map(m.lact, identity(n.carrier)),
                   tensor_map(idr, fl.sect))
    ract = compose(fl.proj, tensor_map(identity(m.carrier), n.ract),
                   tensor_map(fl.sect, idr))
    q = Bimodule(ring, fl.quotient, lact, ract)
    return RTensor(m, n, q, fl.proj, fl.sect)


def _induce(proj_dom: LinMap, sect_dom: LinMap, proj_cod: LinMap,
            f: LinMap, what: str = "map") -> LinMap:
    """Push a k-level map down to the quotients, checking balancedness."""
    down = compose(proj_cod, f)
    induced = compose(down, sect_dom)
    recomposed = compose(induced, proj_dom)
    for i in range(down.cod.dim):
        for j in range(down.dom.dim):
            if down.rows[i][j] != recomposed.rows[i][j]:
                raise NotBalanced(
                    f"{what} does not descend to the tensor over R "
                    f"(first bad coordinate row {i}, col {j})")
    return induced


def induced_map(t: RTensor, t2: RTensor, f: LinMap) -> LinMap:
    """Quotient map induced by a k-level map between the underlying tensors."""
    if f.dom.dim != t.proj.dom.dim or f.cod.dim != t2.proj.dom.dim:
        raise DimensionMismatch("induced_map: f does not match the presentations")
    return _induce(t.proj, t.sect, t2.proj, f)


@dataclass(frozen=True)
class WordMap:
    """A map between flattened word carriers in the bimodule backend."""

    dom: Word
    cod: Word
    lin: LinMap

    def __repr__(self):
        return f"WordMap({len(self.dom)}-word -> {len(self.cod)}-word)"


class BimodContext:
    """Strict monoidal context of R-bimodule tensor words.

    Objects are words (tuples of Bimodule); the unit object is the empty word,
    whose carrier is R itself.  Concatenation is strictly associative and
    strictly unital, so the shared law checkers apply verbatim.
    """

    name = "rbimod"

    def __init__(self, ring: BaseRing):
        self.ring = ring

    def unit(self) -> Word:
        return ()

    def tensor(self, x, y) -> Word:
        return tuple(x) + tuple(y)

    def flat(self, w) -> Flat:
        return flatten(self.ring, tuple(w))

    def obj_dim(self, w) -> int:
        return self.flat(w).quotient.dim

    def identity(self, w) -> WordMap:
        w = tuple(w)
        return WordMap(w, w, identity(self.flat(w).quotient))

    def to_lin(self, f: WordMap) -> LinMap:
        return f.lin

    def compose(self, *fs: WordMap) -> WordMap:
        if not fs:
            raise DimensionMismatch("compose needs at least one map")
        acc = fs[-1]
        for f in reversed(fs[:-1]):
            if f.dom != acc.cod:
                raise DimensionMismatch("compose: word mismatch")
            acc = WordMap(acc.dom, f.cod, compose(f.lin, acc.lin))
        return acc

    def _split(self, w1: Word, w2: Word) -> LinMap:
        """K(w1+w2) -> K(w1) (x) K(w2), inserting 1_R at empty factors."""
        k1 = _word_tensor(self.ring, w1)
        k2 = _word_tensor(self.ring, w2)
        if w1 and w2:
            return identity(tensor_obj(k1, k2))
        if not w1 and not w2:
            return tensor_map(identity(self.ring.carrier), self.ring.unit)
        if not w1:
            return tensor_map(self.ring.unit, identity(k2))
        return tensor_map(identity(k1), self.ring.unit)

    def _join(self, w1: Word, w2: Word) -> LinMap:
        """K(w1) (x) K(w2) -> K(w1+w2), acting on the edge factor."""
        k1 = _word_tensor(self.ring, w1)
        k2 = _word_tensor(self.ring, w2)
        if w1 and w2:
            return identity(tensor_obj(k1, k2))
        if not w1 and not w2:
            return self.ring.mul
        if not w1:
            rest = _word_tensor(self.ring, w2[1:]) if w2[1:] else None
            act = w2[0].lact
            return tensor_map(act, identity(rest)) if rest else act
        rest = _word_tensor(self.ring, w1[:-1]) if w1[:-1] else None
        act = w1[-1].ract
        return tensor_map(identity(rest), act) if rest else act

    def lift(self, f: WordMap) -> LinMap:
        """Canonical k-level representative sect . lin . proj of a WordMap."""
        fd, fc = self.flat(f.dom), self.flat(f.cod)
        return compose(fc.sect, f.lin, fd.proj)

    def wrap(self, dom, cod, k_level: LinMap, what: str = "map") -> WordMap:
        """Induce a WordMap from a k-level map, checking it is balanced."""
        dom, cod = tuple(dom), tuple(cod)
        fd, fc = self.flat(dom), self.flat(cod)
        if k_level.dom.dim != fd.tensor.dim or k_level.cod.dim != fc.tensor.dim:
            raise DimensionMismatch(
                f"{what}: lift must be {fd.tensor.dim} -> {fc.tensor.dim}, "
                f"got {k_level.dom.dim} -> {k_level.cod.dim}")
        return WordMap(dom, cod, _induce(fd.proj, fd.sect, fc.proj, k_level, what))

    def tensor_map(self, *fs: WordMap) -> WordMap:
        if not fs:
            raise DimensionMismatch("tensor_map needs at least one map")
        acc = fs[0]
        for g in fs[1:]:
            acc = self._tensor2(acc, g)
        return acc

    def _tensor2(self, f: WordMap, g: WordMap) -> WordMap:
        wd = f.dom + g.dom
        wc = f.cod + g.cod
        k_level = compose(self._join(f.cod, g.cod),
                          tensor_map(self.lift(f), self.lift(g)),
                          self._split(f.dom, g.dom))
        return self.wrap(wd, wc, k_level)


def trivial_ring() -> BaseRing:
    """R = k itself (dimension 1)."""
    r = FreeModule(1, "R")
    one = identity(r)
    return BaseRing(r, LinMap(FreeModule(1), r, one.rows), LinMap(UNIT, r, one.rows))


def swap_bimodule_factors(m: Bimodule, n: Bimodule) -> LinMap:
    """Flip on the underlying k-tensor (not R-balanced in general)."""
    return swap_map(m.carrier, n.carrier)
