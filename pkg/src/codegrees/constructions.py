"""Named group constructions realized as permutation groups.

Matrix groups over prime fields act on the p^d vectors of V = F_p^d
(vectors indexed little-endian base p).  Extension fields F_{p^d} are
table fields over the lexicographically least irreducible monic
polynomial, so Gamma(p^d) and the monomial groups come out of the same
machinery.  Every builder validates its own structural probes (order,
involution counts, ...) before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .chartab import _det, _poly_gcd, _poly_mul, _poly_pow_mod, _trim
from .group import (DEFAULT_DEGREE_CAP, CapExceededError, PermGroup,
                    is_prime, subgroup_from_elements, sylow)
from .perm import Permutation


class ConstructionError(ValueError):
    """Invalid parameters for a named construction."""


# ---------------------------------------------------------------------------
# table-based finite fields


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _is_irreducible(f: list[int], p: int) -> bool:
    # f (monic, degree d) is irreducible over F_p iff x^(p^d) = x mod f
    # and gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d
    d = len(f) - 1
    x = [0, 1]
    xq = _poly_pow_mod(x, p ** d, f, p)
    if _poly_sub(xq, x, p) != [0]:
        return False
    for r in _prime_factors(d):
        xr = _poly_pow_mod(x, p ** (d // r), f, p)
        diff = _poly_sub(xr, x, p)
        if diff == [0] or len(_poly_gcd(f, diff, p)) > 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class GF:
    """The field F_{p^d} as integers 0..p^d-1 (little-endian digit
    vectors of polynomial coefficients)."""

    def __init__(self, p: int, d: int):
        if not is_prime(p) or d < 1:
            raise ConstructionError(f"GF({p}, {d}): p must be prime, d >= 1")
        self.p = p
        self.d = d
        self.size = p ** d
        self.poly = self._least_irreducible()

    def _least_irreducible(self) -> tuple[int, ...]:
        p, d = self.p, self.d
        if d == 1:
            return (0, 1)
        for coeffs in product(range(p), repeat=d):
            f = list(coeffs) + [1]
            if _is_irreducible(f, p):
                return tuple(f)
        raise AssertionError("no irreducible polynomial found")

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, digs) -> int:
        a = 0
        for c in reversed(list(digs)):
            a = a * self.p + (c % self.p)
        return a

    def add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        return self.from_digits((x + y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self.from_digits((-x) % self.p for x in self.digits(a))

    def mul(self, a: int, b: int) -> int:
        prod = _poly_mul(self.digits(a), self.digits(b), self.p)
        red = _poly_mod_tuple(prod, self.poly, self.p)
        return self.from_digits(red + [0] * (self.d - len(red)))

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF")
        return self.pow(a, self.size - 2)

    def primitive_element(self) -> int:
        factors = _prime_factors(self.size - 1)
        for a in range(2, self.size):
            if all(self.pow(a, (self.size - 1) // r) != 1 for r in factors):
                return a
        if self.size == 2:
            return 1
        raise AssertionError("no primitive element found")

    def mult_matrix(self, a: int) -> tuple[tuple[int, ...], ...]:
        """The F_p-linear map x -> a*x as a d x d matrix (column j is
        a * x^j in coordinates)."""
        cols = [self.digits(self.mul(a, self.p ** j)) for j in range(self.d)]
        return tuple(tuple(cols[j][i] for j in range(self.d))
                     for i in range(self.d))

    def frobenius_matrix(self) -> tuple[tuple[int, ...], ...]:
        """The F_p-linear map x -> x^p as a d x d matrix."""
        cols = [self.digits(self.pow(self.p ** j, self.p))
                for j in range(self.d)]
        return tuple(tuple(cols[j][i] for j in range(self.d))
                     for i in range(self.d))


def _poly_mod_tuple(a, f, p):
    a = list(a)
    f = list(f)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [x % p for x in a[:df]]


# ---------------------------------------------------------------------------
# matrix groups acting on vectors


@dataclass(frozen=True)
class MatrixGroupSpec:
    """Generators of a subgroup of GL(d, p), entries as integers mod p."""

    p: int
    d: int
    generators: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ConstructionError(f"{self.p} is not prime")
        for M in self.generators:
            if len(M) != self.d or any(len(row) != self.d for row in M):
                raise ConstructionError("matrix has wrong shape")
            if _det([list(row) for row in M], self.p) == 0:
                raise ConstructionError(f"singular generator {M}")


def _vector_index(v, p: int) -> int:
    a = 0
    for c in reversed(v):
        a = a * p + (c % p)
    return a


def _index_vector(a: int, d: int, p: int) -> list[int]:
    out = []
    for _ in range(d):
        out.append(a % p)
        a //= p
    return out


def _matrix_perm(M, p: int, d: int) -> Permutation:
    n = p ** d
    images = [0] * n
    for a in range(n):
        v = _index_vector(a, d, p)
        w = [sum(M[i][j] * v[j] for j in range(d)) % p for i in range(d)]
        images[a] = _vector_index(w, p)
    return Permutation(tuple(images))


def matrix_to_perm(spec: MatrixGroupSpec,
                   degree_cap: int = DEFAULT_DEGREE_CAP) -> PermGroup:
    """The linear action on all p^d vectors of V (faithful)."""
    n = spec.p ** spec.d
    if n > degree_cap:
        raise CapExceededError(f"degree {n} exceeds cap {degree_cap}")
    gens = [_matrix_perm(M, spec.p, spec.d) for M in spec.generators]
    return PermGroup(n, gens)


def dual_action(spec: MatrixGroupSpec) -> MatrixGroupSpec:
    """Generators replaced by their inverse transposes (the action on
    Irr(V) under the dual-space identification)."""
    out = []
    for M in spec.generators:
        inv = _matrix_inverse(M, spec.p)
        out.append(tuple(tuple(inv[j][i] for j in range(spec.d))
                         for i in range(spec.d)))
    return MatrixGroupSpec(spec.p, spec.d, tuple(out))


def _matrix_inverse(M, p: int):
    d = len(M)
    aug = [list(M[i]) + [1 if i == j else 0 for j in range(d)]
           for i in range(d)]
    for c in range(d):
        pr = next(i for i in range(c, d) if aug[i][c] % p)
        aug[c], aug[pr] = aug[pr], aug[c]
        inv = pow(aug[c][c], -1, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for i in range(d):
            if i != c and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[c])]
    return [row[d:] for row in aug]


@dataclass(frozen=True)
class AffineGroupSpec:
    """V x| H on the p^d points of V: linear part plus translations."""

    matrix_part: MatrixGroupSpec
    group: PermGroup


def affine(spec: MatrixGroupSpec,
           degree_cap: int = DEFAULT_DEGREE_CAP) -> AffineGroupSpec:
    p, d = spec.p, spec.d
    n = p ** d
    if n > degree_cap:
        raise CapExceededError(f"degree {n} exceeds cap {degree_cap}")
    H = matrix_to_perm(spec, degree_cap)
    gens = list(H.generators)
    translations = []
    for j in range(d):
        e = p ** j
        images = [0] * n
        for a in range(n):
            v = _index_vector(a, d, p)
            v[j] = (v[j] + 1) % p
            images[a] = _vector_index(v, p)
        t = Permutation(tuple(images))
        translations.append(t)
        gens.append(t)
    G = PermGroup(n, gens)
    if G.order != H.order * n:
        raise AssertionError(
            f"affine group order {G.order} != {H.order} * {n}")
    # translation subgroup: elementary abelian, normal, order p^d
    T = subgroup_from_elements(G, translations)
    if T.order != n:
        raise AssertionError("translation subgroup has wrong order")
    for t in translations:
        if not (t ** p).is_identity:
            raise AssertionError("translation subgroup not of exponent p")
        for g in gens:
            if t.conjugate(g) not in T:
                raise AssertionError("translation subgroup not normal")
    return AffineGroupSpec(spec, G)


# ---------------------------------------------------------------------------
# classical named groups


def symmetric(m: int) -> PermGroup:
    if m < 1:
        raise ConstructionError("symmetric(m) needs m >= 1")
    if m == 1:
        return PermGroup(1, [])
    gens = [Permutation.from_cycles(m, [[0, 1]]),
            Permutation.from_cycles(m, [list(range(m))])]
    return PermGroup(m, gens)


def alternating(m: int) -> PermGroup:
    if m < 3:
        return PermGroup(max(m, 1), [])
    gens = [Permutation.from_cycles(m, [[i, i + 1, i + 2]])
            for i in range(m - 2)]
    G = PermGroup(m, gens)
    factorial = 1
    for k in range(2, m + 1):
        factorial *= k
    if G.order != factorial // 2:
        raise AssertionError("alternating group has wrong order")
    return G


def cyclic(m: int) -> PermGroup:
    if m < 1:
        raise ConstructionError("cyclic(m) needs m >= 1")
    if m == 1:
        return PermGroup(1, [])
    return PermGroup(m, [Permutation.from_cycles(m, [list(range(m))])])


def dihedral(m: int) -> PermGroup:
    """The dihedral group of order 2m acting on an m-gon (m >= 3)."""
    if m < 3:
        raise ConstructionError("dihedral(m) needs m >= 3")
    rot = Permutation.from_cycles(m, [list(range(m))])
    ref = Permutation(tuple((-i) % m for i in range(m)))
    G = PermGroup(m, [rot, ref])
    if G.order != 2 * m:
        raise AssertionError("dihedral group has wrong order")
    return G


def generalized_quaternion(order: int) -> PermGroup:
    """Q_{2^n} of the given order (a power of two, >= 8), via the left
    regular representation on normal forms a^i b^j."""
    n = order.bit_length() - 1
    if order < 8 or order != 1 << n:
        raise ConstructionError(
            "generalized_quaternion(order) needs a 2-power order >= 8")
    m = order // 2  # |<a>|

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        if j2 == 0:
            return ((i1 - i2) % m, 1)
        return ((i1 - i2 + m // 2) % m, 0)

    def idx(x):
        return x[0] + m * x[1]

    elems = [(i, j) for j in range(2) for i in range(m)]
    gens = []
    for g in [(1, 0), (0, 1)]:
        images = [0] * order
        for x in elems:
            images[idx(x)] = idx(mul(g, x))
        gens.append(Permutation(tuple(images)))
    G = PermGroup(order, gens)
    if G.order != order:
        raise AssertionError("quaternion group has wrong order")
    if _involution_count(G) != 1:
        raise AssertionError("quaternion group must have a unique involution")
    return G


def elementary_abelian(p: int, d: int) -> PermGroup:
    spec = MatrixGroupSpec(p, d, ())
    return affine(spec).group


def _involution_count(G: PermGroup) -> int:
    return sum(1 for g in G.elements()
               if not g.is_identity and (g * g).is_identity)


# ---------------------------------------------------------------------------
# the paper's linear groups


def gamma_spec(p: int, d: int) -> MatrixGroupSpec:
    """Gamma(p^d) = {x -> a x^sigma} as a subgroup of GL(d, p)."""
    F = GF(p, d)
    gens = [F.mult_matrix(F.primitive_element())]
    if d > 1:
        gens.append(F.frobenius_matrix())
    return MatrixGroupSpec(p, d, tuple(gens))


def gamma_semilinear(p: int, d: int,
                     degree_cap: int = DEFAULT_DEGREE_CAP) -> PermGroup:
    from .group import derived_length
    G = matrix_to_perm(gamma_spec(p, d), degree_cap)
    if G.order != d * (p ** d - 1):
        raise AssertionError(
            f"Gamma({p}^{d}) has order {G.order}, expected {d * (p**d - 1)}")
    if G.order > 1 and derived_length(G) > 2:
        raise AssertionError("Gamma group must be metabelian")
    # transitive on nonzero field elements
    orbit = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for g in G.generators:
            y = g.images[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    if len(orbit) != p ** d - 1:
        raise AssertionError("Gamma group not transitive on nonzero vectors")
    return G


def monomial_spec(p: int, d: int) -> MatrixGroupSpec:
    """Monomial 2x2 matrices over F_{p^(d/2)} of determinant +-1, as a
    subgroup of GL(d, p); order 4(p^(d/2) - 1)."""
    if p == 2 or not is_prime(p):
        raise ConstructionError("monomial_pm1 needs an odd prime p")
    if d % 2:
        raise ConstructionError("monomial_pm1 needs even d")
    h = d // 2
    F = GF(p, h)
    g = F.primitive_element()
    ginv = F.inverse(g)
    one = 1
    neg_one = F.neg(one)

    def block2(a, b, c, e):
        """[[a, b], [c, e]] over F_q as a d x d matrix over F_p."""
        blocks = [[F.mult_matrix(a), F.mult_matrix(b)],
                  [F.mult_matrix(c), F.mult_matrix(e)]]
        return tuple(
            tuple(blocks[i // h][j // h][i % h][j % h] for j in range(d))
            for i in range(d))

    gens = (block2(g, 0, 0, ginv),      # det 1
            block2(one, 0, 0, neg_one),  # det -1
            block2(0, one, one, 0))      # det -1
    return MatrixGroupSpec(p, d, gens)


def monomial_pm1(p: int, d: int,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> PermGroup:
    G = matrix_to_perm(monomial_spec(p, d), degree_cap)
    q = p ** (d // 2)
    if G.order != 4 * (q - 1):
        raise AssertionError(
            f"monomial group has order {G.order}, expected {4 * (q - 1)}")
    return G


def gl23_spec() -> MatrixGroupSpec:
    return MatrixGroupSpec(3, 2, (
        ((1, 1), (0, 1)),
        ((1, 0), (1, 1)),
        ((2, 0), (0, 1)),
    ))


def gl23() -> PermGroup:
    """GL(2,3) on the 9 vectors of F_3^2."""
    G = matrix_to_perm(gl23_spec())
    if G.order != 48:
        raise AssertionError(f"GL(2,3) has order {G.order}, expected 48")
    P = sylow(G, 2)
    if _involution_count(P) <= 1:
        raise AssertionError("GL(2,3) Sylow-2 must have several involutions")
    return G


def csu23_spec() -> MatrixGroupSpec:
    """CSU(2,3), the binary octahedral group of order 48, realized inside
    GL(2,7): the quaternions i, j live in SL(2,7), omega has order 3, and
    s = (1+i)/sqrt(2)-style element squares into the quaternion part."""
    return MatrixGroupSpec(7, 2, (
        ((0, 6), (1, 0)),   # i
        ((2, 3), (3, 5)),   # j
        ((6, 2), (3, 0)),   # omega, order 3
        ((5, 2), (5, 5)),   # s, the extra element making the order 48
    ))


def csu23() -> PermGroup:
    from .invariants import fitting_subgroup
    G = matrix_to_perm(csu23_spec())
    if G.order != 48:
        raise AssertionError(f"CSU(2,3) has order {G.order}, expected 48")
    F = fitting_subgroup(G)
    if F.order != 8 or _involution_count(F.handle) != 1:
        raise AssertionError("F(CSU(2,3)) must be Q8")
    P = sylow(G, 2)
    if P.order != 16 or _involution_count(P) != 1:
        raise AssertionError("Sylow-2 of CSU(2,3) must be Q16")
    return G


# ---------------------------------------------------------------------------
# catalog


def _catalog_builders() -> list[tuple[str, object]]:
    entries: list[tuple[str, object]] = []
    for m in range(2, 13):
        entries.append((f"C{m}", lambda m=m: cyclic(m)))
    entries.extend([
        ("S3", lambda: symmetric(3)),
        ("S4", lambda: symmetric(4)),
        ("A4", lambda: alternating(4)),
        ("D4", lambda: dihedral(4)),
        ("Q8", lambda: generalized_quaternion(8)),
        ("Q16", lambda: generalized_quaternion(16)),
        ("E4", lambda: elementary_abelian(2, 2)),
        ("E8", lambda: elementary_abelian(2, 3)),
        ("E9", lambda: elementary_abelian(3, 2)),
        ("E25", lambda: elementary_abelian(5, 2)),
        ("GL(2,3)", gl23),
        ("CSU(2,3)", csu23),
        ("Gamma(8)", lambda: gamma_semilinear(2, 3)),
        ("Gamma(9)", lambda: gamma_semilinear(3, 2)),
        ("Gamma(25)", lambda: gamma_semilinear(5, 2)),
        ("Monomial(3,2)", lambda: monomial_pm1(3, 2)),
        ("Monomial(5,2)", lambda: monomial_pm1(5, 2)),
        ("Affine-GL(2,3)", lambda: affine(gl23_spec()).group),
        ("Affine-CSU(2,3)", lambda: affine(csu23_spec()).group),
        ("Affine-Gamma(8)", lambda: affine(gamma_spec(2, 3)).group),
        ("Affine-Gamma(9)", lambda: affine(gamma_spec(3, 2)).group),
        ("Affine-Gamma(25)", lambda: affine(gamma_spec(5, 2)).group),
        ("Affine-Monomial(3,2)", lambda: affine(monomial_spec(3, 2)).group),
        ("Affine-Monomial(5,2)", lambda: affine(monomial_spec(5, 2)).group),
    ])
    return entries


_CATALOG = None


def catalog() -> list[tuple[str, object]]:
    """Deterministic list of (name, zero-argument builder)."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _catalog_builders()
    return _CATALOG


_built: dict[str, PermGroup] = {}


def build(name: str) -> PermGroup:
    """Build (and cache) a catalog group by name."""
    if name in _built:
        return _built[name]
    for entry_name, builder in catalog():
        if entry_name == name:
            G = builder()
            _built[name] = G
            return G
    raise KeyError(f"no catalog group named {name!r}")


def catalog_names() -> list[str]:
    return [name for name, _ in catalog()]


# matrix specs for the catalog's linear groups, used by the
# half-transitivity and Lemma 3.3 checks
LINEAR_SPECS: dict[str, object] = {
    "GL(2,3)": gl23_spec,
    "CSU(2,3)": csu23_spec,
    "Gamma(8)": lambda: gamma_spec(2, 3),
    "Gamma(9)": lambda: gamma_spec(3, 2),
    "Gamma(25)": lambda: gamma_spec(5, 2),
    "Monomial(3,2)": lambda: monomial_spec(3, 2),
    "Monomial(5,2)": lambda: monomial_spec(5, 2),
}

# the linear specs behind the affine catalog entries, used by the
# Lemma 3.1 partition check
AFFINE_SPECS: dict[str, object] = {
    "Affine-GL(2,3)": gl23_spec,
    "Affine-CSU(2,3)": csu23_spec,
    "Affine-Gamma(8)": lambda: gamma_spec(2, 3),
    "Affine-Gamma(9)": lambda: gamma_spec(3, 2),
    "Affine-Gamma(25)": lambda: gamma_spec(5, 2),
    "Affine-Monomial(3,2)": lambda: monomial_spec(3, 2),
    "Affine-Monomial(5,2)": lambda: monomial_spec(5, 2),
}
