import random
from fractions import Fraction

import pytest

from tripatch.algebra import (
    BivarPoly,
    Poly1,
    count_cstar_roots,
    count_distinct_cstar_roots,
    discriminant_y,
    isolate_real_roots,
    poly_eval,
    resultant,
    sign_at_root,
    squarefree_part,
)
from tripatch.errors import ConstantInY, VanishesAtRoot, ZeroPolynomial


def P(*coeffs):
    """Poly1 from low-to-high coefficients."""
    return Poly1(coeffs)


X = Poly1.x()
Q_RUN = P(Fraction(1, 4), -2, 0, 1)          # X^3 - 2X + 1/4
D_RUN = P(108) - P(27) * Q_RUN * Q_RUN        # 108 - 27*Q^2


def brute_force_sign_changes(p, lo, hi, steps=2000):
    """Independent oracle: count sign changes of p on a fine rational grid."""
    lo, hi = Fraction(lo), Fraction(hi)
    h = (hi - lo) / steps
    count = 0
    prev = 0
    for k in range(steps + 1):
        s = p.sign_at(lo + k * h)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


class TestPolyEval:
    def test_spec_examples(self):
        assert poly_eval(P(-1, 0, 1), 2) == 3
        assert poly_eval(Poly1.zero(), 7) == 0
        assert poly_eval(Q_RUN, 1) == Fraction(-3, 4)


class TestSquarefreePart:
    def test_repeated_root(self):
        p = P(-1, 1) * P(-1, 1) * P(2, 1)  # (X-1)^2 (X+2)
        assert squarefree_part(p) == (P(-1, 1) * P(2, 1)).monic()

    def test_already_squarefree(self):
        assert squarefree_part(P(1, 0, 1)) == P(1, 0, 1)

    def test_cube(self):
        assert squarefree_part(P(0, 0, 0, 1)) == P(0, 1)

    def test_zero_raises(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_part(Poly1.zero())


class TestIsolation:
    def test_two_exact_roots(self):
        ivs = isolate_real_roots(P(-4, 0, 1))
        assert len(ivs) == 2
        assert ivs[0].contains(-2) and ivs[1].contains(2)
        assert all(iv.multiplicity == 1 for iv in ivs)

    def test_no_real_roots(self):
        assert isolate_real_roots(P(1, 0, 1)) == []

    def test_running_discriminant(self):
        # two real roots located in (-2,-1) and (1,2); count confirmed by the
        # brute-force sign-change oracle on a fine grid
        ivs = isolate_real_roots(D_RUN)
        assert len(ivs) == 2
        for iv in ivs:
            iv.refine_below_width(Fraction(1, 8))
        assert -2 < ivs[0].low and ivs[0].high < -1
        assert 1 < ivs[1].low and ivs[1].high < 2
        assert brute_force_sign_changes(D_RUN, -4, 4) == 2

    def test_multiplicities(self):
        p = P(-1, 1) ** 2 * P(2, 1) ** 3 * P(0, 1)
        ivs = isolate_real_roots(p)
        mults = {}
        for iv in ivs:
            for r in (-2, 0, 1):
                if iv.contains(r):
                    mults[r] = iv.multiplicity
        assert mults == {-2: 3, 0: 1, 1: 2}

    def test_degree_parity_invariant(self):
        rng = random.Random(7)
        for _ in range(25):
            coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(rng.randint(2, 8))]
            p = Poly1(coeffs)
            if p.is_zero or p.degree == 0:
                continue
            ivs = isolate_real_roots(p)
            real_mult = sum(iv.multiplicity for iv in ivs)
            assert (p.degree - real_mult) % 2 == 0
            assert p.degree - real_mult >= 0

    def test_intervals_stay_isolating_under_refinement(self):
        ivs = isolate_real_roots(D_RUN)
        for iv in ivs:
            for _ in range(10):
                iv.refine()
                assert iv.sturm_count_of(iv.sf) == 1 or iv.is_exact


class TestDiscriminantY:
    def test_quadratic_spec_example(self):
        C = BivarPoly.from_coeff_dict({(0, 2): 1, (2, 0): -1, (1, 0): -1})
        assert discriminant_y(C) == P(0, 4, 4)

    def test_depressed_cubic_constant(self):
        # Y^3 + pY + q with constants: disc = -4p^3 - 27q^2
        for p_, q_ in [(2, 5), (-3, 0), (1, -1)]:
            C = BivarPoly.from_coeff_dict({(0, 3): 1, (0, 1): p_, (0, 0): q_})
            assert discriminant_y(C) == Poly1.constant(-4 * p_**3 - 27 * q_**2)

    def test_cubic_in_x(self):
        C = BivarPoly.from_coeff_dict({(0, 3): 1, (0, 1): -3, (1, 0): 1})
        assert discriminant_y(C) == P(108, 0, -27)

    def test_general_identity_random(self):
        # disc(Y^3+a1Y^2+a2Y+a3) = -4P^3-27Q^2 with P,Q the depressed invariants
        rng = random.Random(3)
        for _ in range(20):
            a1 = Poly1([rng.randint(-3, 3) for _ in range(3)])
            a2 = Poly1([rng.randint(-3, 3) for _ in range(3)])
            a3 = Poly1([rng.randint(-3, 3) for _ in range(3)])
            C = BivarPoly((a3, a2, a1, Poly1.constant(1)))
            Pp = a2 - a1 * a1 * Fraction(1, 3)
            Qp = a3 - a2 * a1 * Fraction(1, 3) + a1 * a1 * a1 * Fraction(2, 27)
            D = Pp * Pp * Pp * (-4) - Qp * Qp * 27
            assert discriminant_y(C) == D

    def test_constant_in_y_rejected(self):
        with pytest.raises(ConstantInY):
            discriminant_y(BivarPoly.from_coeff_dict({(1, 0): 1}))


class TestCstarCounts:
    def test_spec_examples(self):
        assert count_cstar_roots(P(0, 4, 4)) == 1
        assert count_cstar_roots(P(0, 0, 0, 0, 0, 1)) == 0
        assert count_cstar_roots(P(108, 0, -27)) == 2
        assert count_distinct_cstar_roots(P(-1, 1) * P(-1, 1) * P(2, 1)) == 2
        assert count_distinct_cstar_roots(P(0, 0, 0, 1)) == 0
        assert count_distinct_cstar_roots(P(0, 4, 4)) == 1


class TestSignAtRoot:
    def test_exact_root(self):
        iv = isolate_real_roots(P(2, 1))[0]
        assert sign_at_root(X, iv) == -1

    def test_interval_root(self):
        ivs = isolate_real_roots(P(108, 0, -27))
        pos = [iv for iv in ivs if iv.high > 0][-1]
        assert sign_at_root(X, pos) == 1

    def test_running_example(self):
        ivs = isolate_real_roots(D_RUN)
        assert sign_at_root(Q_RUN, ivs[0]) == -1
        assert sign_at_root(Q_RUN, ivs[1]) == 1

    def test_shared_root_raises(self):
        iv = isolate_real_roots(P(-1, 1))[0]
        with pytest.raises(VanishesAtRoot):
            sign_at_root(P(-2, 2), iv)


class TestResultant:
    def test_spec_examples(self):
        assert resultant(P(-1, 1), P(1, 1)) == 2
        assert resultant(P(-1, 0, 1), P(-1, 1)) == 0
        assert resultant(P(1, 0, 1), P(0, 1)) == 1

    def test_zero_iff_common_factor(self):
        rng = random.Random(11)
        for _ in range(30):
            a = Poly1([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
            b = Poly1([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))])
            if a.is_zero or b.is_zero or a.degree == 0 or b.degree == 0:
                continue
            r = resultant(a, b)
            g = a.gcd(b)
            assert (r == 0) == (g.degree >= 1)

    def test_multiplicativity(self):
        a, b, c = P(1, 2, 1), P(-3, 1), P(2, 0, 1)
        assert resultant(a * b, c) == resultant(a, c) * resultant(b, c)


class TestBivarBasics:
    def test_strip_y(self):
        C = BivarPoly.from_coeff_dict({(0, 1): 1, (1, 2): 2, (0, 3): 1})
        h, g = C.strip_y()
        assert h == 1
        assert g.support() == {(0, 0), (1, 1), (0, 2)}

    def test_strip_x(self):
        C = BivarPoly.from_coeff_dict({(1, 0): 1, (2, 1): 3})
        k, g = C.strip_x()
        assert k == 1
        assert g.support() == {(0, 0), (1, 1)}

    def test_eval_x(self):
        C = BivarPoly.from_coeff_dict({(0, 3): 1, (0, 1): -3, (1, 0): 1})
        cubic = C.eval_x(2)
        assert cubic.coeffs == (2, -3, 0, 1)

    def test_json_roundtrip(self):
        p = Poly1.from_dict({0: "1/4", 1: "-2", 3: "1"})
        assert Poly1.from_json(p.to_json()) == p
