"""Shared corpus and perturbation helpers for the test suite."""

import random
from fractions import Fraction

from wreathkit.algebra import ComonoidData, MonoidData
from wreathkit.bimonoid import DoubleDL
from wreathkit.exactlin import compose, inverse, lin, tensor_map
from wreathkit.zoo import build_demo


def ddl_corpus():
    """Every double distributive law the demos carry, with expected verdicts.

    Each entry: (name, DoubleDL, expected bimonoid PASS).
    """
    out = []
    for d in (1, 2, 3):
        z = build_demo("kplusl", d)
        out.append((f"kplusl-{d}", z.core["ddl"], True))
        out.append((f"kplusl-{d}-flip", z.core["flip_ddl"], False))
    for n in (2, 3, 4):
        z = build_demo(f"flip-c{n}")
        out.append((f"flip-c{n}", z.core["ddl"], True))
    return out


def random_basis_change(rng: random.Random, n: int) -> list[list[Fraction]]:
    """A unimodular integer matrix built from elementary row operations."""
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(3 * n + 2):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = Fraction(rng.randint(-2, 2))
        for k in range(n):
            m[i][k] += c * m[j][k]
    if n > 1 and rng.random() < 0.5:
        m[0], m[1] = m[1], m[0]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    return m


def equivalence_suite(perturbations=100):
    """Corpus entries plus seeded random basis-change perturbations.

    The schedule revisits the cheap low-dimensional entries more often so a
    big sweep stays fast, but every corpus entry is perturbed repeatedly.
    Each entry: (name, DoubleDL, expected bimonoid PASS).
    """
    rng = random.Random(20260817)
    cases = ddl_corpus()
    small = [c for c in cases if c[1].carrier.dim <= 3]
    schedule = small * 5 + cases
    out = list(cases)
    for k in range(perturbations):
        name, b, expected = schedule[k % len(schedule)]
        g = random_basis_change(rng, b.carrier.dim)
        out.append((f"{name}/perturbed-{k}", conjugate_ddl(b, g), expected))
    return out


def conjugate_ddl(b: DoubleDL, g_rows) -> DoubleDL:
    """Transport all five structure maps along an invertible basis change.

    This preserves every distributive-law identity and every bimonoid
    verdict, so it generates law-preserving perturbations for fuzzing.
    """
    x = b.carrier
    g = lin(x, x, g_rows)
    gi = inverse(g)
    g2, gi2 = tensor_map(g, g), tensor_map(gi, gi)
    mon = MonoidData(x, compose(g, b.monoid.mul, gi2),
                     compose(g, b.monoid.unit))
    com = ComonoidData(x, compose(g2, b.comonoid.comul, gi),
                       compose(b.comonoid.counit, gi))
    return DoubleDL(mon, com, compose(g2, b.hbar, gi2))
