import random
from fractions import Fraction

from freepoisson.symplectic import (
    PnEnv,
    SPoly,
    Weyl,
    moyal,
    pn_commutator,
    pn_env_mul,
    rho_w,
    sp_bracket,
    symmetrize,
    theta_left,
    theta_right,
    weyl_mul,
)
from freepoisson.sampling import rand_spoly, rand_weyl

X1 = SPoly.x(1, 1)
Y1 = SPoly.y(1, 1)


def test_spoly_arithmetic():
    assert X1 * Y1 == Y1 * X1
    assert X1 - X1 == 0
    assert SPoly.zero(1) == 0
    assert (X1 + Y1) * (X1 - Y1) == X1 * X1 - Y1 * Y1
    assert (X1 * Y1).deg() == 2
    assert SPoly.constant(1, Fraction(3, 2)).constant_value() == Fraction(3, 2)
    assert (X1 * X1 * Y1).max_exponents() == (2, 1)


def test_spoly_derivatives():
    assert X1.derive(0) == SPoly.one(1)
    assert X1.derive(1) == 0
    assert (X1 * X1).derive(0) == 2 * X1
    assert (X1 * Y1).derive_multi((1, 1)) == SPoly.one(1)
    assert (X1 * Y1).derive_multi((2, 0)) == 0


def test_sp_bracket_canonical_relations():
    for n in (1, 2):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                xi, yj = SPoly.x(n, i), SPoly.y(n, j)
                expected = SPoly.one(n) if i == j else SPoly.zero(n)
                assert sp_bracket(xi, yj) == expected
                assert sp_bracket(SPoly.x(n, i), SPoly.x(n, j)) == 0
                assert sp_bracket(SPoly.y(n, i), SPoly.y(n, j)) == 0


def test_sp_bracket_axioms_random():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 2)
        f = rand_spoly(rng, n, 3)
        g = rand_spoly(rng, n, 3)
        h = rand_spoly(rng, n, 2)
        assert sp_bracket(f, g) == -sp_bracket(g, f)
        assert sp_bracket(f, g * h) == sp_bracket(f, g) * h + g * sp_bracket(f, h)
        jac = (
            sp_bracket(f, sp_bracket(g, h))
            + sp_bracket(g, sp_bracket(h, f))
            + sp_bracket(h, sp_bracket(f, g))
        )
        assert jac == 0


def test_weyl_mul_known_values():
    X, Y = Weyl.X(1, 1), Weyl.Y(1, 1)
    XY = weyl_mul(X, Y)
    YX = weyl_mul(Y, X)
    assert XY == Weyl(1, {((1,), (1,)): Fraction(1)})
    assert YX == XY - Weyl.one(1)
    assert XY - YX == Weyl.one(1)
    assert weyl_mul(X, X) == Weyl(1, {((2,), (0,)): Fraction(1)})


def test_weyl_mul_is_associative():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 2)
        a = rand_weyl(rng, n, 2)
        b = rand_weyl(rng, n, 2)
        c = rand_weyl(rng, n, 2)
        assert weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))


def test_symmetrize_known_values():
    X, Y = Weyl.X(1, 1), Weyl.Y(1, 1)
    assert symmetrize(X1 * Y1) == weyl_mul(X, Y) - Fraction(1, 2) * Weyl.one(1)
    assert symmetrize(X1) == X
    assert symmetrize(X1 * X1) == weyl_mul(X, X)
    assert symmetrize(SPoly.one(1)) == Weyl.one(1)
    assert symmetrize(SPoly.zero(1)) == 0


def test_symmetrize_is_linear():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(1, 2)
        f = rand_spoly(rng, n, 3)
        g = rand_spoly(rng, n, 3)
        assert symmetrize(f + g) == symmetrize(f) + symmetrize(g)
        assert symmetrize(3 * f) == 3 * symmetrize(f)


def test_rho_w_worked_value():
    assert rho_w(X1 * Y1) == PnEnv(
        1,
        {
            (0, 0): X1 * Y1,
            (1, 0): Fraction(1, 2) * Y1,
            (0, 1): Fraction(1, 2) * X1,
            (1, 1): SPoly.constant(1, Fraction(1, 4)),
        },
    )


def test_rho_w_properties():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(1, 2)
        f = rand_spoly(rng, n, 4)
        img = rho_w(f)
        assert img.p_part() == f
        assert img == theta_left(symmetrize(f))


def test_theta_images():
    X = Weyl.X(1, 1)
    hx, hy = PnEnv.h_x(1, 1), PnEnv.h_y(1, 1)
    assert theta_left(X) == PnEnv.from_poly(X1) + Fraction(1, 2) * hx
    assert theta_right(X) == PnEnv.from_poly(X1) - Fraction(1, 2) * hx
    assert theta_left(Weyl.Y(1, 1)) == PnEnv.from_poly(Y1) + Fraction(1, 2) * hy
    assert theta_right(Weyl.Y(1, 1)) == PnEnv.from_poly(Y1) - Fraction(1, 2) * hy
    assert theta_left(Weyl.one(1)) == PnEnv.one(1)


def test_theta_maps_are_homomorphisms():
    rng = random.Random(29)
    for _ in range(30):
        n = rng.randint(1, 2)
        a = rand_weyl(rng, n, 2)
        b = rand_weyl(rng, n, 2)
        assert theta_left(weyl_mul(a, b)) == pn_env_mul(theta_left(a), theta_left(b))
        assert theta_right(weyl_mul(a, b)) == pn_env_mul(theta_right(b), theta_right(a))


def test_theta_images_commute():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(1, 2)
        a = rand_weyl(rng, n, 2)
        b = rand_weyl(rng, n, 2)
        assert pn_commutator(theta_left(a), theta_right(b)) == 0


def test_pn_env_mul_known_value():
    hx = PnEnv.h_x(1, 1)
    assert pn_env_mul(hx, PnEnv.from_poly(Y1)) == PnEnv(
        1, {(1, 0): Y1, (0, 0): SPoly.one(1)}
    )
    assert pn_env_mul(hx, PnEnv.from_poly(X1)) == PnEnv(1, {(1, 0): X1})


def rand_pn_env(rng, n, hdeg, coeff_deg):
    from freepoisson.sampling import rand_exponents, rand_spoly

    out = PnEnv.zero(n)
    for _ in range(2):
        out = out + PnEnv(n, {rand_exponents(rng, 2 * n, hdeg): rand_spoly(rng, n, coeff_deg)})
    return out


def test_pn_env_mul_is_associative():
    rng = random.Random(37)
    for _ in range(25):
        n = rng.randint(1, 2)
        a = rand_pn_env(rng, n, 2, 2)
        b = rand_pn_env(rng, n, 2, 2)
        c = rand_pn_env(rng, n, 1, 1)
        assert pn_env_mul(pn_env_mul(a, b), c) == pn_env_mul(a, pn_env_mul(b, c))


def test_canonical_commutators():
    for n in (1, 2):
        zx = [PnEnv.from_poly(SPoly.x(n, i)) for i in range(1, n + 1)] + [
            PnEnv.from_poly(SPoly.y(n, i)) for i in range(1, n + 1)
        ]
        zy = [PnEnv.h_y(n, i) for i in range(1, n + 1)] + [
            -1 * PnEnv.h_x(n, i) for i in range(1, n + 1)
        ]
        for a in range(2 * n):
            for b in range(2 * n):
                assert pn_commutator(zx[a], zx[b]) == 0
                assert pn_commutator(zy[a], zy[b]) == 0
                expected = PnEnv.one(n) if a == b else PnEnv.zero(n)
                assert pn_commutator(zx[a], zy[b]) == expected


def test_moyal_known_values():
    assert moyal(X1, Y1) == X1 * Y1 + SPoly.constant(1, Fraction(1, 2))
    assert moyal(Y1, X1) == X1 * Y1 - SPoly.constant(1, Fraction(1, 2))
    assert moyal(X1, Y1) - moyal(Y1, X1) == SPoly.one(1)
    assert moyal(X1, X1) == X1 * X1


def test_moyal_matches_rho_w_products():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(1, 2)
        f = rand_spoly(rng, n, 3)
        g = rand_spoly(rng, n, 3)
        prod = pn_env_mul(rho_w(f), rho_w(g))
        star = moyal(f, g)
        assert prod.p_part() == star
        assert prod == rho_w(star)


def test_moyal_is_associative():
    rng = random.Random(43)
    for _ in range(15):
        n = rng.randint(1, 2)
        f = rand_spoly(rng, n, 3)
        g = rand_spoly(rng, n, 3)
        h = rand_spoly(rng, n, 2)
        assert moyal(moyal(f, g), h) == moyal(f, moyal(g, h))
