import pytest

from codegrees.constructions import (GF, AFFINE_SPECS, LINEAR_SPECS,
                                     ConstructionError, MatrixGroupSpec,
                                     affine, alternating, build, catalog,
                                     catalog_names, csu23, cyclic, dihedral,
                                     dual_action, elementary_abelian,
                                     gamma_semilinear, gamma_spec,
                                     generalized_quaternion, gl23,
                                     matrix_to_perm, monomial_pm1, symmetric)
from codegrees.group import exponent, sylow


def test_gf_arithmetic():
    F = GF(3, 2)
    assert F.size == 9
    # least irreducible monic: x^2 + 1 over F_3
    assert F.poly == (1, 0, 1)
    for a in range(1, 9):
        assert F.mul(a, F.inverse(a)) == 1
    g = F.primitive_element()
    seen = {1}
    x = 1
    for _ in range(7):
        x = F.mul(x, g)
        seen.add(x)
    assert len(seen) == 8  # g generates the multiplicative group
    # Frobenius is additive and multiplicative
    for a in range(9):
        for b in range(9):
            assert F.pow(F.add(a, b), 3) == F.add(F.pow(a, 3), F.pow(b, 3))


def test_classical_groups():
    assert symmetric(4).order == 24
    assert alternating(4).order == 12
    assert cyclic(7).order == 7
    assert dihedral(4).order == 8
    assert elementary_abelian(3, 2).order == 9
    assert exponent(elementary_abelian(3, 2)) == 3


def test_generalized_quaternion():
    Q8 = generalized_quaternion(8)
    assert Q8.order == 8
    involutions = [g for g in Q8.elements()
                   if not g.is_identity and (g * g).is_identity]
    assert len(involutions) == 1
    Q16 = generalized_quaternion(16)
    assert Q16.order == 16
    with pytest.raises(ConstructionError):
        generalized_quaternion(12)
    with pytest.raises(ConstructionError):
        generalized_quaternion(4)


def test_matrix_to_perm_orders():
    gl22 = MatrixGroupSpec(2, 2, (((1, 1), (0, 1)), ((0, 1), (1, 0))))
    assert matrix_to_perm(gl22).order == 6
    assert matrix_to_perm(MatrixGroupSpec(3, 2, ())).order == 1
    assert gl23().order == 48


def test_singular_generator_rejected():
    with pytest.raises(ConstructionError):
        MatrixGroupSpec(3, 2, (((1, 1), (1, 1)),))


def test_gamma_groups():
    assert gamma_semilinear(2, 3).order == 21
    assert gamma_semilinear(3, 2).order == 16
    assert gamma_semilinear(5, 2).order == 48
    assert gamma_semilinear(5, 1).order == 4  # p - 1, Galois group trivial


def test_monomial_groups():
    assert monomial_pm1(3, 2).order == 8
    assert monomial_pm1(5, 2).order == 16
    with pytest.raises(ConstructionError):
        monomial_pm1(3, 3)  # d odd
    with pytest.raises(ConstructionError):
        monomial_pm1(2, 2)  # p even


def test_affine_groups():
    gl22 = MatrixGroupSpec(2, 2, (((1, 1), (0, 1)), ((0, 1), (1, 0))))
    assert affine(gl22).group.order == 24
    assert affine(MatrixGroupSpec(2, 2, ())).group.order == 4
    assert affine(gamma_spec(3, 2)).group.order == 144


def test_csu23_probes():
    G = csu23()
    assert G.order == 48
    P = sylow(G, 2)
    assert P.order == 16
    involutions = [g for g in P.elements()
                   if not g.is_identity and (g * g).is_identity]
    assert len(involutions) == 1  # Sylow-2 is Q16
    # GL(2,3) is distinguished by its Sylow-2 having several involutions
    P2 = sylow(gl23(), 2)
    inv2 = [g for g in P2.elements()
            if not g.is_identity and (g * g).is_identity]
    assert len(inv2) > 1


def test_dual_action():
    spec = gamma_spec(3, 2)
    assert dual_action(dual_action(spec)) == spec
    # orthogonal generators are fixed by inverse-transpose
    swap = MatrixGroupSpec(5, 2, (((0, 1), (1, 0)),))
    assert dual_action(swap) == swap


def test_dual_orbit_sizes_match():
    from codegrees.verify import check_half_transitive
    spec = gamma_spec(3, 2)
    _, sizes, _ = check_half_transitive(spec)
    _, dual_sizes, _ = check_half_transitive(dual_action(spec))
    assert sizes == dual_sizes


def test_catalog_contents():
    names = catalog_names()
    for required in ["C2", "C12", "S3", "S4", "D4", "Q8", "Q16", "A4",
                     "GL(2,3)", "CSU(2,3)", "Gamma(8)", "Gamma(9)",
                     "Gamma(25)", "Monomial(3,2)", "Monomial(5,2)", "E9"]:
        assert required in names
    assert build("S4").order == 24
    assert build("CSU(2,3)").order == 48
    # every affine entry has a registered linear spec
    for name in AFFINE_SPECS:
        assert name in names
    for name in LINEAR_SPECS:
        assert name in names


def test_catalog_builders_all_valid():
    for name, builder in catalog():
        G = builder()
        assert G.order >= 1
        for g in G.generators:
            assert g in G
