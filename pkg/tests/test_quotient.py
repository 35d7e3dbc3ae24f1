import random
from fractions import Fraction
from itertools import combinations
from math import comb

from fdrbasis.basisops import partition_vector
from fdrbasis.exterior import Monomial, Multivector, Permutation, apply_perm, inner_product, wedge
from fdrbasis.partitions import phi, phi_bidegree
from fdrbasis.quotient import (
    ColumnEchelon,
    column_rank,
    diagonal_element,
    dimension,
    expected_leading_monomial,
    ideal_rank,
    ideal_slice,
    injectivity_check,
    monomials_of_bidegree,
    narayana,
    reduce_to_basis,
    verify_basis,
)


def test_diagonal_element():
    d = diagonal_element(3)
    assert d.terms == {
        Monomial(1, 1): Fraction(1),
        Monomial(2, 2): Fraction(1),
    }


def test_ideal_slice_empty_cases():
    assert ideal_slice(4, 0, 0) == []
    assert ideal_slice(4, 1, 0) == []
    assert ideal_slice(4, 0, 1) == []


def test_ideal_slice_first_cell():
    slice_ = ideal_slice(3, 1, 1)
    assert slice_ == [diagonal_element(3)]


def test_dimension_and_index_counts_agree():
    for n in range(2, 7):
        for i in range(n):
            for j in range(n):
                assert dimension(n, i, j) == len(phi_bidegree(n, i, j)), (n, i, j)


def test_dimension_out_of_range():
    assert dimension(4, 4, 0) == 0
    assert dimension(4, 0, -1) == 0


def test_rank_plus_dimension_is_monomial_count():
    for n in (3, 4, 5):
        for i in range(n):
            for j in range(n):
                assert ideal_rank(n, i, j) + dimension(n, i, j) == comb(n - 1, i) * comb(
                    n - 1, j
                )


def test_narayana_values():
    assert [narayana(4, k) for k in (1, 2, 3, 4)] == [1, 6, 6, 1]
    assert narayana(9, 5) == 1764


def test_reduce_basis_vector_is_unit_coordinate():
    for n in (2, 3, 4, 5):
        for pi in phi(n):
            coords = reduce_to_basis(partition_vector(pi))
            assert coords == {pi: Fraction(1)}


def test_reduce_ideal_elements_to_zero():
    for n in (3, 4, 5):
        d = diagonal_element(n)
        limit = 1 << (n - 1)
        for t in range(limit):
            for x in range(limit):
                image = wedge(d, Multivector.from_monomial(n, Monomial(t, x)))
                assert reduce_to_basis(image) == {}


def test_reduce_matches_straighten():
    from fdrbasis.basisops import straighten

    rng = random.Random(99)
    for n in (3, 4, 5, 6):
        pool = phi(n)
        for _ in range(15):
            pi = pool[rng.randrange(len(pool))]
            word = list(range(1, n))
            rng.shuffle(word)
            sigma = Permutation(word)
            target = apply_perm(sigma, partition_vector(pi))
            assert reduce_to_basis(target) == straighten(sigma, pi)


def test_reduce_support_preserves_statistics():
    rng = random.Random(3)
    for n in (4, 5, 6):
        pool = phi(n)
        for _ in range(10):
            pi = pool[rng.randrange(len(pool))]
            word = list(range(1, n))
            rng.shuffle(word)
            target = apply_perm(Permutation(word), partition_vector(pi))
            stats = (pi.num_pairs, pi.num_theta, pi.num_xi)
            for rho in reduce_to_basis(target):
                assert (rho.num_pairs, rho.num_theta, rho.num_xi) == stats


def test_ideal_orthogonality_within_classes():
    # the basis vector of pi is orthogonal to D wedge m' whenever m' pairs up
    # a (k-1)-subset of pi's pair support around the singleton monomial
    for n in (4, 5):
        for pi in phi(n):
            if not pi.pairs:
                continue
            support = sorted(v for p in pi.pairs for v in p)
            tmask = sum(1 << (i - 1) for i, lab in pi.singletons if lab == "t")
            xmask = sum(1 << (i - 1) for i, lab in pi.singletons if lab == "x")
            vec = partition_vector(pi)
            d = diagonal_element(n)
            for sub in combinations(support, len(pi.pairs) - 1):
                pair_mask = sum(1 << (s - 1) for s in sub)
                m_prime = Multivector.from_monomial(
                    n, Monomial(tmask | pair_mask, xmask | pair_mask)
                )
                assert inner_product(vec, wedge(d, m_prime)) == 0


def test_leading_monomials():
    for n in (3, 4, 5):
        for pi in phi(n):
            assert partition_vector(pi).leading_monomial() == expected_leading_monomial(pi)


def test_verify_basis_smallest_case():
    report = verify_basis(2)
    assert report["passed"]
    assert report["indexed_count"] == 3
    assert report["dim_total"] == 3
    names = {pi.serialize() for pi in phi(2)}
    assert names == {"1,2", "1:t/2", "1:x/2"}


def test_verify_basis_small_range():
    for n in (3, 4, 5):
        report = verify_basis(n)
        assert report["passed"], report["witnesses"]
        assert report["indexed_count"] == report["dim_total"]


def test_column_rank_matches_fraction_echelon():
    rng = random.Random(17)
    n = 5
    for _ in range(30):
        cols = []
        for _ in range(rng.randrange(1, 8)):
            terms = {}
            for _ in range(rng.randrange(1, 5)):
                mono = Monomial(rng.randrange(16), rng.randrange(16))
                terms[mono] = Fraction(rng.randrange(-4, 5))
            cols.append(Multivector(n, terms))
        ech = ColumnEchelon(n)
        for col in cols:
            ech.add_column(col)
        assert ech.rank == column_rank(cols, n)


def test_injectivity_report():
    for n in (2, 3, 4, 5):
        report = injectivity_check(n)
        assert report["passed"], report
        for row in report["bidegrees"]:
            if row["interior"]:
                assert row["kernel"] == 0
            else:
                assert row["rank"] == 0 and row["kernel"] == row["dim"]


def test_monomials_of_bidegree_counts():
    for n in (3, 4, 5):
        for i in range(n):
            for j in range(n):
                assert len(monomials_of_bidegree(n, i, j)) == comb(n - 1, i) * comb(
                    n - 1, j
                )
