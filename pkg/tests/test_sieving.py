from math import comb, gcd

import pytest

from fdrbasis.basisops import partition_vector
from fdrbasis.exterior import apply_perm
from fdrbasis.partitions import LabeledPartition
from fdrbasis.sieving import (
    QPolynomial,
    congruence_check,
    csp_check,
    fake_degree,
    fd_csp_polynomial,
    fixed_point_counts,
    long_cycle,
    orbit_polynomial,
    q_binomial,
    q_catalan,
    q_factorial,
    q_int,
    q_multinomial,
    rotate,
    rotation_orbits,
    top_fake_degree,
    x_set,
)
from fdrbasis.symfunc import SchurExpansion, frobenius_bigraded, hook_dim, partitions_of


def catalan(m):
    return comb(2 * m, m) // (m + 1)


def test_qpolynomial_arithmetic():
    p = QPolynomial((1, 2))
    q = QPolynomial((0, 1))
    assert (p * q).coeffs == (0, 1, 2)
    assert (p - p).is_zero()
    assert p.evaluate(3) == 7
    assert QPolynomial((1, 0, 0)).coeffs == (1,)
    assert QPolynomial.monomial(3).text() == "q^3"


def test_qpolynomial_exact_division():
    num = q_int(2) * q_int(3)
    assert num.exact_div(q_int(3)) == q_int(2)
    with pytest.raises(ValueError):
        QPolynomial((1, 1, 1)).exact_div(QPolynomial((1, 1)))


def test_qpolynomial_mod_fold():
    p = QPolynomial.monomial(5) + QPolynomial.one()
    assert p.mod_q_power_minus_1(2) == QPolynomial((1, 1))


def test_q_int_examples():
    assert q_int(3) == QPolynomial((1, 1, 1))
    assert q_int(0).is_zero()
    assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)


def test_q_binomial_example():
    assert q_binomial(4, 2) == QPolynomial((1, 1, 2, 1, 1))
    assert q_binomial(4, 5).is_zero()


def test_q_multinomial_specialises():
    from math import factorial

    poly = q_multinomial(6, (2, 3, 1))
    assert poly.evaluate(1) == factorial(6) // (2 * 6 * 1)
    with pytest.raises(ValueError):
        q_multinomial(5, (2, 2))


def test_q_catalan_examples():
    assert q_catalan(2) == QPolynomial((1, 0, 1))
    for m in range(0, 9):
        assert q_catalan(m).evaluate(1) == catalan(m)
    assert q_catalan(3).evaluate(1) == 5 == len(x_set(3))


def test_fake_degree_rows_and_columns():
    for m in range(1, 8):
        assert fake_degree((m,)) == QPolynomial.one()
        expected = QPolynomial.monomial(m * (m - 1) // 2)
        assert fake_degree((1,) * m) == expected


def test_fake_degree_specialises_to_hook_dim():
    for w in range(1, 8):
        for lam in partitions_of(w):
            assert fake_degree(lam).evaluate(1) == hook_dim(lam)


def test_fake_degree_of_expansion():
    exp = SchurExpansion({(2,): 1, (1, 1): 3})
    assert fake_degree(exp) == QPolynomial((1, 3))


def test_top_fake_degree_small_instance():
    assert top_fake_degree(3) == QPolynomial((1, 4))


def test_top_fake_degree_matches_expansion_route():
    for n in range(2, 7):
        total = SchurExpansion()
        for (i, j), exp in frobenius_bigraded(n).items():
            if i + j == n - 1:
                total = total + exp
        assert fake_degree(total) == top_fake_degree(n), n


def test_top_fake_degree_counts_at_one():
    for n in range(2, 9):
        assert top_fake_degree(n).evaluate(1) == len(x_set(n))


def test_x_set_members_have_singleton_distinguished_block():
    for n in (3, 4, 5, 6):
        for pi in x_set(n):
            assert pi.n_block == (n,)


def test_rotate_small_case():
    pi = LabeledPartition.parse("1:t/2:x/3")
    image = rotate(pi)
    assert image == LabeledPartition.parse("1:x/2:t/3")
    pair = LabeledPartition.parse("1,2/3")
    assert rotate(pair) == pair


def test_rotate_requires_lone_distinguished_block():
    with pytest.raises(ValueError):
        rotate(LabeledPartition.parse("1:t/2,3"))


def test_rotation_order_divides():
    for n in range(2, 8):
        for pi in x_set(n):
            current = pi
            for _ in range(n - 1):
                current = rotate(current)
            assert current == pi
        for orbit in rotation_orbits(n):
            assert (n - 1) % len(orbit) == 0


def test_rotation_matches_vector_action():
    # on the top antidiagonal the block-sorting factor is trivial, so the
    # permuted vector is exactly the signed relabeled vector
    for n in range(2, 7):
        cycle = long_cycle(n)
        for pi in x_set(n):
            lhs = apply_perm(cycle, partition_vector(pi))
            rhs = partition_vector(rotate(pi)).scale(cycle.sign())
            assert lhs == rhs


def test_fixed_counts_depend_on_gcd():
    for n in range(3, 8):
        counts = fixed_point_counts(n)
        assert counts[0] == len(x_set(n))
        order = n - 1
        for d1 in range(order):
            for d2 in range(order):
                if gcd(d1, order) == gcd(d2, order):
                    assert counts[d1] == counts[d2]


def test_orbit_polynomial_evaluates_to_counts():
    for n in range(2, 7):
        order = n - 1
        poly = orbit_polynomial(n)
        assert poly.evaluate(1) == len(x_set(n))
        assert poly.mod_q_power_minus_1(order) == poly


def test_csp_check_both_instances():
    for n in range(2, 7):
        fd = csp_check(n, fd_csp_polynomial(n), name="fake-degree")
        cat = csp_check(n, q_catalan(n), name="q-catalan")
        assert fd["passed"], fd
        assert cat["passed"], cat
        assert fd["fixed_counts"][0] == len(x_set(n))
        assert fd["nonnegative"] and cat["nonnegative"]


def test_csp_check_reports_mismatch():
    bad = csp_check(4, QPolynomial((1,)), name="bad")
    assert not bad["passed"]
    assert bad["mismatches"]


def test_congruence_small_modulus_vanishes():
    for n in range(2, 9):
        report = congruence_check(n)
        assert report["zero_mod_q^(n-1)-1"], n


def test_congruence_worked_instance():
    # n=3: candidate q^3 (1 + 4q) folds to 4 + q modulo q^2 - 1, matching
    # the q-catalan number 1 + q^2 + q^3 + q^4 + q^6 -> 4 + q
    report = congruence_check(3)
    assert report["fd_side"] == (QPolynomial.monomial(3) * QPolynomial((1, 4))).text()
    assert report["q_catalan"] == QPolynomial((1, 0, 1, 1, 1, 0, 1)).text()
    assert report["zero_mod_q^(n-1)-1"]
    assert fd_csp_polynomial(3).mod_q_power_minus_1(2) == QPolynomial((4, 1))
    assert q_catalan(3).mod_q_power_minus_1(2) == QPolynomial((4, 1))


def test_displayed_polynomials_are_nonnegative():
    for n in range(2, 9):
        assert top_fake_degree(n).is_nonnegative()
        assert q_catalan(n).is_nonnegative()
        for k in range(0, n):
            assert q_binomial(n, k).is_nonnegative()
