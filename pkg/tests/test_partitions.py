import random
from itertools import permutations
from math import comb

import pytest

from fdrbasis.exterior import Permutation
from fdrbasis.partitions import (
    LabeledPartition,
    MotzkinPath,
    TwoRowTableau,
    all_paths,
    canonical_word,
    enumerate_partitions,
    from_motzkin,
    inversions,
    pairs_to_tableau,
    phi,
    phi_bidegree,
    phi_class,
    psi,
    satisfies_ballot,
    tableau_to_pairs,
    to_motzkin,
)
from fdrbasis.symfunc import hook_dim


def narayana(n, k):
    return comb(n, k) * comb(n, k - 1) // n


def test_is_noncrossing_defining_example():
    crossing = LabeledPartition.make(4, (2, 4), pairs=[(1, 3)])
    assert not crossing.is_noncrossing()
    ok = LabeledPartition.make(5, (5,), pairs=[(1, 2), (3, 4)])
    assert ok.is_noncrossing()


def test_worked_example_is_noncrossing():
    pi = LabeledPartition.parse("1:t/2,5/3,4/6,8/7:x")
    assert pi.n == 8
    assert pi.is_noncrossing()
    assert pi.n_block == (6, 8)
    assert pi.num_pairs == 2 and pi.num_theta == 1 and pi.num_xi == 1


def test_serialize_parse_round_trip():
    for n in range(2, 7):
        for pi in psi(n):
            assert LabeledPartition.parse(pi.serialize()) == pi


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        LabeledPartition.parse("1,2,3/4")  # size-3 block away from the maximum
    with pytest.raises(ValueError):
        LabeledPartition.parse("1/2")  # unlabeled singleton away from n
    with pytest.raises(ValueError):
        LabeledPartition.parse("1:z/2")
    with pytest.raises(ValueError):
        LabeledPartition.parse("1,2:t/3")  # labeled pair


def test_enumerate_unique_block_when_k_equals_n():
    for n in (2, 3, 4, 5):
        full = enumerate_partitions(n, k=n)
        assert full == [LabeledPartition.make(n, range(1, n + 1))]


def test_enumerate_total_count_n3():
    assert len(phi(3)) == 10
    assert len(enumerate_partitions(3, noncrossing_only=False)) == 10


def test_first_crossing_partition_appears_at_n4():
    assert len(psi(4)) - len(phi(4)) > 0


def test_x_class_count_n3():
    xs = [pi for pi in phi(3) if pi.n_block == (3,)]
    assert len(xs) == 5


def test_bidegree_counts_match_narayana():
    for n in range(2, 8):
        for k in range(1, n + 1):
            found = len(phi_bidegree(n, n - k, k - 1))
            assert found == narayana(n, k), (n, k)


def test_enumerate_filters_are_consistent():
    for n in (3, 4, 5, 6):
        total = 0
        for k in range(1, n + 1):
            for t in range(0, n):
                for x in range(0, n):
                    total += len(enumerate_partitions(n, k=k, t=t, x=x))
        assert total == len(phi(n))


def test_enumerate_deterministic_order():
    listing = enumerate_partitions(5)
    assert listing == sorted(listing, key=lambda p: p.serialize())
    assert listing == enumerate_partitions(5)


def test_canonical_word_worked_example():
    pi = LabeledPartition.parse("1:t/2,5/3,4/6,8/7:x")
    word, sign = canonical_word(pi)
    assert word == (2, 5, 3, 4, 1, 7)
    assert inversions(word) == 6
    assert sign == 1


def test_canonical_word_all_singletons():
    pi = LabeledPartition.make(4, (4,), singletons=[(1, "t"), (2, "t"), (3, "x")])
    word, sign = canonical_word(pi)
    assert word == (1, 2, 3)
    assert sign == 1


def test_apply_perm_partition_examples():
    pi = LabeledPartition.parse("2,3/4,5/7:t/1,8,6")
    sigma = Permutation.parse("(3 5 7 6)", 7)
    image = pi.apply_perm(sigma)
    assert image == LabeledPartition.parse("2,5/4,7/6:t/1,3,8")
    assert (image.num_pairs, image.num_theta, image.num_xi) == (
        pi.num_pairs,
        pi.num_theta,
        pi.num_xi,
    )
    ident = Permutation.identity(7)
    assert pi.apply_perm(ident) == pi


def test_apply_perm_partition_is_group_action():
    rng = random.Random(11)
    for n in (4, 5, 6):
        for _ in range(25):
            pi = psi(n)[rng.randrange(len(psi(n)))]
            w1 = list(range(1, n))
            w2 = list(range(1, n))
            rng.shuffle(w1)
            rng.shuffle(w2)
            s1, s2 = Permutation(w1), Permutation(w2)
            assert pi.apply_perm(s2).apply_perm(s1) == pi.apply_perm(s1.compose(s2))


def test_noncrossing_class_is_not_closed_under_action():
    for n in range(4, 8):
        witness = None
        for pi in phi(n):
            for word in permutations(range(1, n)):
                if not pi.apply_perm(Permutation(word)).is_noncrossing():
                    witness = (pi, word)
                    break
            if witness:
                break
        assert witness is not None, n


def test_motzkin_worked_instance():
    pi = LabeledPartition.make(
        8, (4, 5, 8), pairs=[(1, 3), (6, 7)], singletons=[(2, "t")]
    )
    path = to_motzkin(pi)
    assert path.steps == ("U", "U", "HT", "D", "U", "U", "U", "D")
    assert from_motzkin(path) == pi


def test_motzkin_round_trip_and_counts():
    for n in range(2, 8):
        paths = all_paths(n)
        assert len(paths) == len(phi(n))
        for pi in phi(n):
            assert from_motzkin(to_motzkin(pi)) == pi
        for path in paths:
            assert to_motzkin(from_motzkin(path)) == path


def test_motzkin_rejects_crossing():
    crossing = LabeledPartition.make(5, (5,), pairs=[(1, 3), (2, 4)])
    with pytest.raises(ValueError):
        to_motzkin(crossing)


def test_motzkin_path_validation():
    with pytest.raises(ValueError):
        MotzkinPath(("D",))
    with pytest.raises(ValueError):
        MotzkinPath(("U", "D", "U"))  # returns to the axis


def test_tableau_worked_example():
    pi = LabeledPartition.parse("1,4/2,3/7,8/5,6,9")
    tab = pairs_to_tableau(pi)
    assert tab.row2 == (3, 4, 8)
    assert tableau_to_pairs(tab, 9) == pi


def test_tableau_k0_single_row():
    pi = LabeledPartition.make(5, (1, 2, 3, 4, 5))
    tab = pairs_to_tableau(pi)
    assert tab.shape == (4, 0)
    assert tableau_to_pairs(tab, 5) == pi


def test_tableau_round_trip_and_counts():
    for n in range(2, 8):
        for k in range(0, (n - 1) // 2 + 1):
            pis = phi_class(n, pairs=k, theta=0, xi=0)
            assert len(pis) == hook_dim((n - k - 1, k)), (n, k)
            for pi in pis:
                assert tableau_to_pairs(pairs_to_tableau(pi), n) == pi


def test_tableau_validation():
    TwoRowTableau((1, 3), (2,))  # valid
    with pytest.raises(ValueError):
        TwoRowTableau((2, 3), (1,))  # column decreasing
    with pytest.raises(ValueError):
        TwoRowTableau((1,), (2, 3))  # second row longer


def test_ballot_characterisation():
    # pair-maxima of singleton-free noncrossing partitions are exactly the
    # ballot subsets of [n-1]
    from itertools import combinations

    for n in range(2, 10):
        images = {
            frozenset(b for _, b in pi.pairs)
            for pi in phi(n)
            if not pi.singletons
        }
        ballot = set()
        for size in range(0, n):
            for sub in combinations(range(1, n), size):
                if satisfies_ballot(sub, n):
                    ballot.add(frozenset(sub))
        assert images == ballot, n


def test_enumeration_golden_listing_n3():
    # frozen canonical serialization order; golden files depend on it
    assert [pi.serialize() for pi in phi(3)] == [
        "1,2,3",
        "1,2/3",
        "1,3/2:t",
        "1,3/2:x",
        "1:t/2,3",
        "1:t/2:t/3",
        "1:t/2:x/3",
        "1:x/2,3",
        "1:x/2:t/3",
        "1:x/2:x/3",
    ]
