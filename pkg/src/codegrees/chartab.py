"""Exact irreducible character tables via the Dixon-Schneider method.

The pipeline: pick a prime p = 1 (mod exp(G)) with p > 2*sqrt(|G|);
build the class-algebra structure-constant matrices; split F_p^r into
common eigenspaces of those matrices (seeded pseudorandom combinations
are used when single matrices do not separate); normalize eigenvectors
to modular central characters; recover degrees and modular character
values; lift to exact cyclotomic values through the power maps by a
discrete Fourier sum over each representative's cyclic group.

Every table is verified (orthogonality both ways, degree divisibility,
sum of squared degrees) before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .cyclo import Cyclotomic, zero
from .group import (ConjugacyClasses, PermGroup, DEFAULT_ORDER_CAP,
                    conjugacy_classes, is_prime)

DEFAULT_SEED = 42


class TableConsistencyError(AssertionError):
    """An exact character-table invariant failed (indicates a bug)."""


# ---------------------------------------------------------------------------
# class functions


@dataclass(frozen=True)
class ClassFunction:
    """A function on conjugacy classes with exact cyclotomic values."""

    classes: ConjugacyClasses
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.classes):
            raise ValueError("wrong number of class-function values")

    @property
    def degree(self) -> int:
        return self.values[0].to_integer()

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        assert self.classes is other.classes
        return ClassFunction(self.classes, tuple(
            a + b for a, b in zip(self.values, other.values)))

    def scale(self, k) -> "ClassFunction":
        return ClassFunction(self.classes, tuple(
            v.scale(k) for v in self.values))

    def __eq__(self, other) -> bool:
        return (isinstance(other, ClassFunction)
                and self.classes is other.classes
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.classes), self.values))


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum over classes of size * a * conj(b); exact."""
    if a.classes is not b.classes:
        raise ValueError("class functions live on different class data")
    total = zero
    for size, x, y in zip(a.classes.sizes, a.values, b.values):
        total = total + (x * y.conj()).scale(size)
    return total.scale(Fraction(1, a.classes.group.order))


@dataclass(frozen=True)
class CharacterTable:
    classes: ConjugacyClasses
    chars: tuple[ClassFunction, ...]
    dixon_prime: int
    seed: int

    @property
    def group(self) -> PermGroup:
        return self.classes.group

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.chars)

    def verify(self) -> None:
        cc = self.classes
        n = self.group.order
        r = len(cc)
        if len(self.chars) != r:
            raise TableConsistencyError(
                f"{len(self.chars)} characters for {r} classes")
        if sum(d * d for d in self.degrees) != n:
            raise TableConsistencyError("sum of squared degrees != |G|")
        for d in self.degrees:
            if n % d:
                raise TableConsistencyError(f"degree {d} does not divide {n}")
        for i, a in enumerate(self.chars):
            for j in range(i, r):
                ip = inner_product(a, self.chars[j])
                expected = 1 if i == j else 0
                if ip != expected:
                    raise TableConsistencyError(
                        f"row orthogonality failed at ({i}, {j})")
        for gi in range(r):
            for hi in range(gi, r):
                s = zero
                for chi in self.chars:
                    s = s + chi.values[gi] * chi.values[hi].conj()
                expected = n // cc.sizes[gi] if gi == hi else 0
                if s != expected:
                    raise TableConsistencyError(
                        f"column orthogonality failed at ({gi}, {hi})")


# ---------------------------------------------------------------------------
# modular linear algebra (small dense matrices over F_p)


def _mat_vec(M, v, p):
    return [sum(m * x for m, x in zip(row, v)) % p for row in M]


def _nullspace(M, p):
    """Basis of the right nullspace of M over F_p, in echelon form."""
    rows = [row[:] for row in M]
    ncols = len(M[0])
    nrows = len(rows)
    pivots = {}
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    basis = []
    for c in range(ncols):
        if c in pivots:
            continue
        vec = [0] * ncols
        vec[c] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-rows[pr][c]) % p
        basis.append(vec)
    return basis


def _charpoly(A, p):
    """Characteristic polynomial of A over F_p by interpolation."""
    m = len(A)
    xs = list(range(m + 1))
    ys = [_det([[(A[i][j] - (x if i == j else 0)) % p for j in range(m)]
                for i in range(m)], p) for x in xs]
    # Lagrange interpolation -> coefficients (ascending)
    coeffs = [0] * (m + 1)
    for k, (xk, yk) in enumerate(zip(xs, ys)):
        denom = 1
        basis = [1]
        for j, xj in enumerate(xs):
            if j == k:
                continue
            denom = denom * (xk - xj) % p
            basis = _poly_mul(basis, [(-xj) % p, 1], p)
        f = yk * pow(denom, -1, p) % p
        for i, b in enumerate(basis):
            coeffs[i] = (coeffs[i] + f * b) % p
    return coeffs


def _det(M, p):
    M = [row[:] for row in M]
    m = len(M)
    det = 1
    for c in range(m):
        pr = next((i for i in range(c, m) if M[i][c] % p), None)
        if pr is None:
            return 0
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], -1, p)
        for i in range(c + 1, m):
            if M[i][c] % p:
                f = M[i][c] * inv % p
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[c])]
    return det % p


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_mod(a, f, p):
    a = a[:]
    df = len(f) - 1
    if df == 0:
        return [0]
    inv = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    a = a[:df]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _trim(a):
    a = a[:]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _trim(_poly_mod(a, b, p))
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _poly_pow_mod(base, e, f, p):
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _roots(f, p, rng) -> list[int]:
    """All roots in F_p of a polynomial that splits over F_p."""
    # strip multiplicities: g = gcd(x^p - x, f) is squarefree with the
    # same root set
    xp = _poly_pow_mod([0, 1], p, f, p)
    while len(xp) < 2:
        xp.append(0)
    xp[1] = (xp[1] - 1) % p
    xp_minus_x = _trim(xp)
    if len(xp_minus_x) == 1 and xp_minus_x[0] == 0:
        g = f  # f already squarefree and split
        inv = pow(g[-1], -1, p)
        g = [c * inv % p for c in g]
    else:
        g = _poly_gcd(f, xp_minus_x, p)
    return sorted(_split_linear(g, p, rng))


def _split_linear(g, p, rng) -> list[int]:
    deg = len(g) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [(-g[0]) * pow(g[1], -1, p) % p]
    while True:
        a = rng.randrange(p)
        h = _poly_pow_mod([a, 1], (p - 1) // 2, g, p)
        h = h[:]
        h[0] = (h[0] - 1) % p
        d = _poly_gcd_or_none(h, g, p)
        if d is not None and 0 < len(d) - 1 < deg:
            rest = _poly_div_exact(g, d, p)
            return _split_linear(d, p, rng) + _split_linear(rest, p, rng)


def _poly_gcd_or_none(a, b, p):
    if len(a) == 1 and a[0] == 0:
        return None
    d = _poly_gcd(a, b, p)
    return d


def _poly_div_exact(a, d, p):
    a = a[:]
    out = [0] * (len(a) - len(d) + 1)
    inv = pow(d[-1], -1, p)
    for i in range(len(a) - 1, len(d) - 2, -1):
        c = a[i] * inv % p
        out[i - (len(d) - 1)] = c
        if c:
            for j in range(len(d)):
                a[i - (len(d) - 1) + j] = (a[i - (len(d) - 1) + j] - c * d[j]) % p
    return out


# ---------------------------------------------------------------------------
# Dixon-Schneider


def dixon_prime(order: int, exp: int, nclasses: int = 0) -> int:
    """Smallest prime p = 1 (mod exp) with p > 2*sqrt(order).

    Also forced above the class count so characteristic polynomials of
    the class-algebra matrices can be interpolated from distinct points.
    """
    bound = max(2 * isqrt(order) + 1, nclasses)
    p = exp + 1
    while True:
        if p > bound and is_prime(p):
            return p
        p += exp


def _class_matrices(cc: ConjugacyClasses) -> list[list[list[int]]]:
    """M[j][i][k] = #{x in C_j : x^{-1} * rep_k in C_i}."""
    r = len(cc)
    reps = cc.reps
    mats = []
    for j in range(r):
        inv_elems = [x.inverse() for x in cc.class_elements[j]]
        M = [[0] * r for _ in range(r)]
        for k in range(r):
            zk = reps[k]
            for xinv in inv_elems:
                i = cc.class_of(xinv * zk)
                M[i][k] += 1
        mats.append(M)
    return mats


def _split_eigenspaces(mats, p, rng):
    """Common one-dimensional eigenspaces of the class matrices over F_p."""
    r = len(mats)
    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    queue = list(range(1, r))
    attempts = 0
    while any(len(b) > 1 for b in spaces):
        if queue:
            j = queue.pop(0)
            M = mats[j]
        else:
            attempts += 1
            if attempts > 200:
                raise TableConsistencyError("eigenspace splitting stalled")
            coeffs = [rng.randrange(p) for _ in range(r)]
            M = [[sum(c * mats[j][i][k] for j, c in enumerate(coeffs)) % p
                  for k in range(r)] for i in range(r)]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            new_spaces.extend(_split_once(M, basis, p, rng))
        spaces = new_spaces
    return [b[0] for b in spaces]


def _split_once(M, basis, p, rng):
    """Split the span of basis into eigenspaces of M (restricted)."""
    m = len(basis)
    r = len(basis[0])
    # coordinates of M*b in the basis: solve echelonized system once
    images = [_mat_vec(M, b, p) for b in basis]
    A = _restrict_coords(basis, images, p)
    lam_list = _roots(_charpoly(A, p), p, rng)
    grouped_out = []
    total_dim = 0
    for lam in lam_list:
        shifted = [[(A[i][j] - (lam if i == j else 0)) % p for j in range(m)]
                   for i in range(m)]
        vecs = []
        for coords in _nullspace(shifted, p):
            vec = [0] * r
            for c, b in zip(coords, basis):
                if c:
                    for i in range(r):
                        vec[i] = (vec[i] + c * b[i]) % p
            vecs.append(vec)
        total_dim += len(vecs)
        grouped_out.append(vecs)
    if total_dim != m:
        raise TableConsistencyError("eigenspace dimensions do not add up")
    return grouped_out


def _restrict_coords(basis, images, p):
    """Matrix A with images[j] = sum_i A[i][j] basis[i] (coordinates)."""
    m = len(basis)
    r = len(basis[0])
    # solve basis^T * a = image for each image via one echelonization
    rows = [[basis[j][i] for j in range(m)] + [img[i] for img in images]
            for i in range(r)]
    pivots = []
    rr = 0
    for c in range(m):
        pr = next((i for i in range(rr, r) if rows[i][c] % p), None)
        if pr is None:
            raise TableConsistencyError("basis not independent")
        rows[rr], rows[pr] = rows[pr], rows[rr]
        inv = pow(rows[rr][c], -1, p)
        rows[rr] = [(x * inv) % p for x in rows[rr]]
        for i in range(r):
            if i != rr and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
    A = [[rows[i][m + j] for j in range(len(images))] for i in range(m)]
    # consistency: remaining rows must be zero
    for i in range(rr, r):
        if any(rows[i][m:]):
            raise TableConsistencyError("image left the subspace")
    return A


def _primitive_root(p: int) -> int:
    factors = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for z in range(2, p):
        if all(pow(z, (p - 1) // q, p) != 1 for q in factors):
            return z
    raise AssertionError("no primitive root found")


_table_cache: dict[int, CharacterTable] = {}
_classes_cache: dict[int, ConjugacyClasses] = {}


def classes_of(G: PermGroup, cap: int = DEFAULT_ORDER_CAP) -> ConjugacyClasses:
    """Conjugacy classes, cached per group object."""
    cc = _classes_cache.get(id(G))
    if cc is None or cc.group is not G:
        cc = conjugacy_classes(G, cap=cap)
        _classes_cache[id(G)] = cc
    return cc


def character_table(G: PermGroup, seed: int = DEFAULT_SEED,
                    cap: int = DEFAULT_ORDER_CAP) -> CharacterTable:
    """The exact table of irreducible characters of G (cached)."""
    cached = _table_cache.get(id(G))
    if cached is not None and cached.group is G and cached.seed == seed:
        return cached
    cc = classes_of(G, cap=cap)
    table = _character_table_from_classes(cc, seed)
    table.verify()
    _table_cache[id(G)] = table
    return table


def _character_table_from_classes(cc: ConjugacyClasses, seed: int) -> CharacterTable:
    G = cc.group
    n = G.order
    r = len(cc)
    e = cc.exponent
    p = dixon_prime(n, e, r)
    rng = random.Random(seed)
    if r == 1:
        triv = ClassFunction(cc, (Cyclotomic(1, {0: 1}),))
        return CharacterTable(cc, (triv,), p, seed)
    mats = _class_matrices(cc)
    eigvecs = _split_eigenspaces(mats, p, rng)
    inv_sizes = [pow(s, -1, p) for s in cc.sizes]
    n_mod = n % p

    chars = []
    w = pow(_primitive_root(p), (p - 1) // e, p)
    for vec in eigvecs:
        if vec[0] % p == 0:
            raise TableConsistencyError("eigenvector vanishes at identity")
        scale = pow(vec[0], -1, p)
        omega = [v * scale % p for v in vec]
        t = sum(omega[i] * omega[cc.inverse_map[i]] * inv_sizes[i]
                for i in range(r)) % p
        d2 = n_mod * pow(t, -1, p) % p
        d = _degree_from_square(d2, n, p)
        chi_mod = [d * omega[i] * inv_sizes[i] % p for i in range(r)]
        values = _lift_character(cc, chi_mod, d, p, w, e)
        chars.append(ClassFunction(cc, tuple(values)))
    chars.sort(key=_char_sort_key)
    return CharacterTable(cc, tuple(chars), p, seed)


def _degree_from_square(d2: int, n: int, p: int) -> int:
    for d in range(1, isqrt(n) + 1):
        if n % d == 0 and d * d % p == d2:
            return d
    raise TableConsistencyError("no integer degree matches the modular square")


def _lift_character(cc, chi_mod, degree, p, w, e):
    """Exact values from modular ones via eigenvalue multiplicities."""
    values = []
    for k in range(len(cc)):
        m = cc.reps[k].order()
        if m == 1:
            values.append(Cyclotomic(1, {0: degree}))
            continue
        wm = pow(w, e // m, p)
        wm_inv = pow(wm, -1, p)
        m_inv = pow(m, -1, p)
        terms = {}
        for s in range(m):
            total = 0
            for t in range(m):
                cls = cc.power_maps[t % cc.exponent][k]
                total += chi_mod[cls] * pow(wm_inv, (s * t) % m, p)
            mult = total * m_inv % p
            if mult:
                if mult > degree:
                    raise TableConsistencyError(
                        "eigenvalue multiplicity exceeds the degree")
                terms[s] = mult
        if sum(terms.values()) != degree:
            raise TableConsistencyError("multiplicities do not sum to degree")
        values.append(Cyclotomic(m, terms))
    return values


def _char_sort_key(chi: ClassFunction):
    return (chi.values[0].to_integer(),
            tuple(v.e_string() for v in chi.values))


# ---------------------------------------------------------------------------
# restriction / induction / constituents


def class_fusion(ccG: ConjugacyClasses, ccH: ConjugacyClasses) -> tuple[int, ...]:
    """For each H-class, the index of the G-class containing it."""
    return tuple(ccG.class_of(rep) for rep in ccH.reps)


def restrict(f: ClassFunction, ccH: ConjugacyClasses) -> ClassFunction:
    """Restriction of a class function on G to a subgroup's classes."""
    fusion = class_fusion(f.classes, ccH)
    return ClassFunction(ccH, tuple(f.values[i] for i in fusion))


def induce(theta: ClassFunction, ccG: ConjugacyClasses) -> ClassFunction:
    """Induced class function theta^G from a subgroup H up to G."""
    ccH = theta.classes
    H = ccH.group
    G = ccG.group
    fusion = class_fusion(ccG, ccH)
    values = []
    for i in range(len(ccG)):
        s = zero
        for c, gi in enumerate(fusion):
            if gi == i:
                s = s + theta.values[c].scale(ccH.sizes[c])
        s = s.scale(Fraction(G.order, H.order * ccG.sizes[i]))
        values.append(s)
    return ClassFunction(ccG, tuple(values))


def constituents(f: ClassFunction, table: CharacterTable) -> list[tuple[int, int]]:
    """Decomposition f = sum m_i chi_i; errors unless all m_i are
    nonnegative integers."""
    out = []
    remainder = f
    for i, chi in enumerate(table.chars):
        ip = inner_product(f, chi)
        if ip.is_zero:
            continue
        if not ip.is_integer or ip.to_integer() < 0:
            raise ValueError(
                f"not a character: multiplicity of chi_{i} is {ip.e_string()}")
        out.append((i, ip.to_integer()))
    total = ClassFunction(f.classes, tuple(zero for _ in range(len(f.classes))))
    for i, m in out:
        total = total + table.chars[i].scale(m)
    if total.values != f.values:
        raise ValueError("not a character: decomposition does not reassemble")
    return out
