"""
Exact rational linear algebra.
Scalars are fractions.Fraction, matrices are numpy object arrays of Fractions.
Nothing in here ever rounds.
"""
import math
from fractions import Fraction
import numpy as np

def to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f'Refusing to convert float {x} to an exact rational, pass a string or Fraction')
    return Fraction(x)

def fraction_vector(v):
    return tuple(to_fraction(x) for x in v)

def fraction_matrix(rows):
    rows = [fraction_vector(row) for row in rows]
    if rows:
        n = len(rows[0])
        assert all(len(row) == n for row in rows), f'Ragged matrix, row lengths {[len(row) for row in rows]}'
    A = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            A[i, j] = x
    return A

def identity(n):
    return fraction_matrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

def dot(u, v):
    assert len(u) == len(v), f'Expected equal lengths, got {len(u)} and {len(v)}'
    return sum((x * y for x, y in zip(u, v)), Fraction(0))

def is_integral(v):
    return all(to_fraction(x).denominator == 1 for x in v)

def _integer_rows(A, b=None):
    # Scale each row of [A|b] by the lcm of its denominators
    rows = []
    for i in range(len(A)):
        row = list(A[i]) + ([b[i]] if b is not None else [])
        row = [to_fraction(x) for x in row]
        scale = math.lcm(*[x.denominator for x in row]) if row else 1
        rows.append([int(x * scale) for x in row])
    return rows

def _bareiss(M, n_cols):
    """
    Fraction-free elimination in place on an integer matrix, pivoting over the first n_cols columns.
    Returns the list of (row, col) pivots. Every division is exact.
    """
    m = len(M)
    pivots = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        for i in range(r + 1, m):
            for j in range(len(M[i])):
                if j == c:
                    continue
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        pivots.append((r, c))
        r += 1
    return pivots

def rank(A):
    A = np.asarray(A, dtype=object)
    if A.size == 0:
        return 0
    M = _integer_rows(A)
    return len(_bareiss(M, A.shape[1]))

def solve_linear_system(A, b):
    A = np.asarray(A, dtype=object)
    n = A.shape[0]
    if A.ndim != 2 or A.shape[1] != n:
        raise ValueError(f'Expected a square matrix, got shape {A.shape}')
    if len(b) != n:
        raise ValueError(f'Right-hand side has length {len(b)}, expected {n}')
    return solve_integer_system(_integer_rows(A, b))

def solve_integer_system(M):
    """
    Solve an augmented integer system [A | b] with square A in place. None when singular.
    """
    n = len(M)
    pivots = _bareiss(M, n)
    if len(pivots) < n:
        return None
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(M[i][n])
        for j in range(i + 1, n):
            acc -= M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return tuple(x)

def rref(A):
    """
    Reduced row echelon form over the rationals. Returns (R, pivot_columns).
    """
    R = np.asarray(A, dtype=object).copy()
    R = fraction_matrix(R.tolist()) if R.size else R
    m, n = R.shape
    pivot_cols = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if R[i, c] != 0), None)
        if p is None:
            continue
        R[[r, p]] = R[[p, r]]
        R[r] = R[r] / R[r, c]
        for i in range(m):
            if i != r and R[i, c] != 0:
                R[i] = R[i] - R[i, c] * R[r]
        pivot_cols.append(c)
        r += 1
    return R, pivot_cols

def nullspace(A):
    A = np.asarray(A, dtype=object)
    n = A.shape[1]
    R, pivot_cols = rref(A)
    free = [c for c in range(n) if c not in pivot_cols]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivot_cols):
            v[c] = -R[r, f]
        basis.append(tuple(v))
    return basis

def invert_matrix(A):
    A = np.asarray(A, dtype=object)
    n = A.shape[0]
    assert A.shape == (n, n), f'Expected a square matrix, got shape {A.shape}'
    R, pivot_cols = rref(np.concatenate([A, identity(n)], axis=1))
    if pivot_cols[:n] != list(range(n)):
        raise ValueError('Matrix is singular')
    return R[:, n:]

def _egcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t

def _combine(x, u, y, v):
    return [x * ui + y * vi for ui, vi in zip(u, v)]

def hermite_normal_form(A):
    """
    Row-style Hermite normal form. Returns (H, U) with U unimodular and U A = H.
    H is in row echelon form, pivots positive, entries above a pivot in [0, pivot), zero rows last.
    """
    rows = [[to_fraction(x) for x in row] for row in np.asarray(A, dtype=object).tolist()]
    assert all(x.denominator == 1 for row in rows for x in row), 'Hermite normal form needs an integer matrix'
    H = [[int(x) for x in row] for row in rows]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            g, x, y = _egcd(H[r][c], H[i][c])
            p, q = H[r][c] // g, H[i][c] // g
            H[r], H[i] = _combine(x, H[r], y, H[i]), _combine(-q, H[r], p, H[i])
            U[r], U[i] = _combine(x, U[r], y, U[i]), _combine(-q, U[r], p, U[i])
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-h for h in H[r]]
            U[r] = [-u for u in U[r]]
        for i in range(r):
            k = H[i][c] // H[r][c]
            if k:
                H[i] = _combine(1, H[i], -k, H[r])
                U[i] = _combine(1, U[i], -k, U[r])
        r += 1
    return np.array(H, dtype=object).reshape(m, n), np.array(U, dtype=object).reshape(m, m)

def primitive_integer_vector(a):
    a = fraction_vector(a)
    if all(x == 0 for x in a):
        raise ValueError('Zero vector has no primitive multiple')
    scale = math.lcm(*[x.denominator for x in a])
    ints = [int(x * scale) for x in a]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)

def primitive_scale(a):
    # Positive factor lambda with lambda * a == primitive_integer_vector(a)
    a = fraction_vector(a)
    p = primitive_integer_vector(a)
    i = next(i for i, x in enumerate(a) if x != 0)
    return Fraction(p[i]) / a[i]

def format_fraction(x):
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f'{x.numerator}/{x.denominator}'
