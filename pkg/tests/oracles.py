"""Reference computations used to freeze expected values.

Everything here works on structure-constant tables: dicts mapping basis
indices to coefficient dicts.  No imports from the package's linear algebra,
so the two implementations can check each other.

Table shapes (all coefficients Fraction, zero entries omitted):
  mul:    (i, j) -> {k: c}        e_i e_j = sum c e_k
  unit:   {k: c}                  1 = sum c e_k
  comul:  i -> {(j, k): c}        comul(e_i) = sum c e_j (x) e_k
  counit: {i: c}                  counit(e_i) = c
  twist:  (i, j) -> {(k, l): c}   twist(e_i (x) e_j) = sum c e_k (x) e_l
"""

from fractions import Fraction

F = Fraction


def _clean(d):
    return {k: v for k, v in d.items() if v != 0}


def dict_eq(a, b):
    return _clean(a) == _clean(b)


def flip_table(n):
    return {(i, j): {(j, i): F(1)} for i in range(n) for j in range(n)}


def kplusl_tables(dim_l):
    """Square-zero extension of the field by an L of dimension dim_l."""
    n = dim_l + 1
    mul = {}
    for i in range(n):
        for j in range(n):
            if i == 0:
                mul[i, j] = {j: F(1)}
            elif j == 0:
                mul[i, j] = {i: F(1)}
            else:
                mul[i, j] = {}
    comul = {0: {(0, 0): F(1)}}
    for i in range(1, n):
        comul[i] = {(0, i): F(1), (i, 0): F(1)}
    twist = {}
    for i in range(n):
        for j in range(n):
            if i == 0 and j == 0:
                twist[i, j] = {(0, 0): F(1)}
            elif i == 0:
                twist[i, j] = {(j, 0): F(1)}
            elif j == 0:
                twist[i, j] = {(0, i): F(1)}
            else:
                twist[i, j] = {(i, j): F(-1)}
    return {"dim": n, "mul": mul, "unit": {0: F(1)}, "comul": comul,
            "counit": {0: F(1)}, "twist": twist}


def cyclic_tables(n):
    """Group algebra of the cyclic group of order n, twist = flip."""
    return {
        "dim": n,
        "mul": {(i, j): {(i + j) % n: F(1)}
                for i in range(n) for j in range(n)},
        "unit": {0: F(1)},
        "comul": {i: {(i, i): F(1)} for i in range(n)},
        "counit": {i: F(1) for i in range(n)},
        "twist": flip_table(n),
    }


# ---- table -> dense matrix (plain lists, flat index i*dim+j) ----

def mul_matrix(tab):
    n = tab["dim"]
    rows = [[F(0)] * (n * n) for _ in range(n)]
    for (i, j), out in tab["mul"].items():
        for k, c in out.items():
            rows[k][i * n + j] = c
    return rows


def unit_matrix(tab):
    n = tab["dim"]
    rows = [[F(0)] for _ in range(n)]
    for k, c in tab["unit"].items():
        rows[k][0] = c
    return rows


def comul_matrix(tab):
    n = tab["dim"]
    rows = [[F(0)] * n for _ in range(n * n)]
    for i, out in tab["comul"].items():
        for (j, k), c in out.items():
            rows[j * n + k][i] = c
    return rows


def counit_matrix(tab):
    n = tab["dim"]
    return [[tab["counit"].get(i, F(0)) for i in range(n)]]


def twist_matrix(tab):
    n = tab["dim"]
    rows = [[F(0)] * (n * n) for _ in range(n * n)]
    for (i, j), out in tab["twist"].items():
        for (k, l), c in out.items():
            rows[k * n + l][i * n + j] = c
    return rows


# ---- independent law verdicts by structure-constant convolution ----

def _mul_vec(mul, vec, b):
    """vec (a dict k->c) times basis element e_b."""
    out = {}
    for k, c in vec.items():
        for m, c2 in mul[k, b].items():
            out[m] = out.get(m, F(0)) + c * c2
    return out


def _vec_mul(mul, a, vec):
    out = {}
    for k, c in vec.items():
        for m, c2 in mul[a, k].items():
            out[m] = out.get(m, F(0)) + c * c2
    return out


def mul_assoc_holds(tab):
    n, mul = tab["dim"], tab["mul"]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not dict_eq(_mul_vec(mul, mul[i, j], k),
                               _vec_mul(mul, i, mul[j, k])):
                    return False
    return True


def unit_left_holds(tab):
    n, mul, unit = tab["dim"], tab["mul"], tab["unit"]
    for j in range(n):
        out = {}
        for k, c in unit.items():
            for m, c2 in mul[k, j].items():
                out[m] = out.get(m, F(0)) + c * c2
        if not dict_eq(out, {j: F(1)}):
            return False
    return True


def unit_right_holds(tab):
    n, mul, unit = tab["dim"], tab["mul"], tab["unit"]
    for i in range(n):
        out = {}
        for k, c in unit.items():
            for m, c2 in mul[i, k].items():
                out[m] = out.get(m, F(0)) + c * c2
        if not dict_eq(out, {i: F(1)}):
            return False
    return True


def coassoc_holds(tab):
    n, comul = tab["dim"], tab["comul"]
    for i in range(n):
        left, right = {}, {}
        for (j, k), c in comul[i].items():
            for (p, q), c2 in comul[j].items():
                left[p, q, k] = left.get((p, q, k), F(0)) + c * c2
            for (p, q), c2 in comul[k].items():
                right[j, p, q] = right.get((j, p, q), F(0)) + c * c2
        if not dict_eq(left, right):
            return False
    return True


def counit_left_holds(tab):
    n, comul, counit = tab["dim"], tab["comul"], tab["counit"]
    for i in range(n):
        out = {}
        for (j, k), c in comul[i].items():
            out[k] = out.get(k, F(0)) + c * counit.get(j, F(0))
        if not dict_eq(out, {i: F(1)}):
            return False
    return True


def counit_right_holds(tab):
    n, comul, counit = tab["dim"], tab["comul"], tab["counit"]
    for i in range(n):
        out = {}
        for (j, k), c in comul[i].items():
            out[j] = out.get(j, F(0)) + c * counit.get(k, F(0))
        if not dict_eq(out, {i: F(1)}):
            return False
    return True


# ---- brute-force bimonoid compatibility (the four pointwise identities) ----

def compat_mul_holds(tab):
    """comul(ab) equals the twisted product of comul(a), comul(b)."""
    n = tab["dim"]
    mul, comul, twist = tab["mul"], tab["comul"], tab["twist"]
    for i in range(n):
        for j in range(n):
            lhs = {}
            for k, c in mul[i, j].items():
                for (p, q), c2 in comul[k].items():
                    lhs[p, q] = lhs.get((p, q), F(0)) + c * c2
            rhs = {}
            for (a1, a2), c1 in comul[i].items():
                for (b1, b2), c2 in comul[j].items():
                    for (t1, t2), c3 in twist[a2, b1].items():
                        for p, c4 in mul[a1, t1].items():
                            for q, c5 in mul[t2, b2].items():
                                rhs[p, q] = (rhs.get((p, q), F(0))
                                             + c1 * c2 * c3 * c4 * c5)
            if not dict_eq(lhs, rhs):
                return False
    return True


def compat_unit_holds(tab):
    lhs = {}
    for k, c in tab["unit"].items():
        for (p, q), c2 in tab["comul"][k].items():
            lhs[p, q] = lhs.get((p, q), F(0)) + c * c2
    rhs = {}
    for p, c in tab["unit"].items():
        for q, c2 in tab["unit"].items():
            rhs[p, q] = rhs.get((p, q), F(0)) + c * c2
    return dict_eq(lhs, rhs)


def compat_counit_unit_holds(tab):
    total = sum((c * tab["counit"].get(k, F(0))
                 for k, c in tab["unit"].items()), F(0))
    return total == 1


def compat_counit_mul_holds(tab):
    n, mul, counit = tab["dim"], tab["mul"], tab["counit"]
    for i in range(n):
        for j in range(n):
            lhs = sum((c * counit.get(k, F(0))
                       for k, c in mul[i, j].items()), F(0))
            if lhs != counit.get(i, F(0)) * counit.get(j, F(0)):
                return False
    return True


def bimonoid_compat_verdicts(tab):
    """(a, b, c, d) booleans for the four compatibility identities."""
    return (compat_unit_holds(tab), compat_mul_holds(tab),
            compat_counit_unit_holds(tab), compat_counit_mul_holds(tab))


# ---- naive dense helpers for cross-checking the matrix kernel ----

def naive_matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    assert all(len(r) == inner for r in a)
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), F(0))
             for j in range(cols)] for i in range(rows)]


def naive_kron(a, b):
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    out = [[F(0)] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            for p in range(rb):
                for q in range(cb):
                    out[i * rb + p][j * cb + q] = a[i][j] * b[p][q]
    return out
