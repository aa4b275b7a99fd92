import itertools
from fractions import Fraction as Q

import pytest

from w0action.so1n import (
    check_star,
    complex_type_of_so1n,
    invariant_tableau,
    so1n_dim,
    so1n_sign,
    tableau_unique,
)


def test_complex_types():
    assert complex_type_of_so1n(2) == ("B", 1)
    assert complex_type_of_so1n(3) == ("D2special", 2)
    assert complex_type_of_so1n(4) == ("B", 2)
    assert complex_type_of_so1n(5) == ("D", 3)
    assert complex_type_of_so1n(6) == ("B", 3)
    assert complex_type_of_so1n(7) == ("D", 4)
    with pytest.raises(ValueError):
        complex_type_of_so1n(1)


def test_check_star():
    assert check_star(5, (1, 1, 0))
    assert not check_star(5, (1, 0, 0))  # odd sum
    assert not check_star(6, (1, 1, 1))  # support too wide
    assert check_star(2, (3,))
    assert not check_star(2, (Q(1, 2),))  # spin weight
    assert check_star(3, (1, -1))
    assert check_star(3, (1, 1))
    assert not check_star(3, (Q(3, 2), Q(1, 2)))
    assert check_star(4, (2, 0))
    assert not check_star(4, (Q(1, 2), Q(1, 2)))


def test_check_star_rejects_bad_weights():
    with pytest.raises(ValueError, match="dominant"):
        check_star(4, (0, 1))
    with pytest.raises(ValueError, match="integral"):
        check_star(4, (Q(1, 3), 0))
    with pytest.raises(ValueError, match="dominant"):
        check_star(3, (1, 2))


def test_so1n_dim():
    assert so1n_dim(4, (2, 0)) == 1
    assert so1n_dim(4, (1, 0)) == 0
    assert so1n_dim(3, (1, -1)) == 1
    assert so1n_dim(7, (0, 0, 0, 0)) == 1
    assert so1n_dim(6, (Q(1, 2), Q(1, 2), Q(1, 2))) == 0


def test_so1n_sign():
    assert so1n_sign(5, (1, 1, 0)) == -1  # adjoint
    assert so1n_sign(5, (2, 0, 0)) == 1
    assert so1n_sign(2, (4,)) == 1
    assert so1n_sign(2, (1,)) == -1
    assert so1n_sign(3, (1, 1)) == -1
    with pytest.raises(ValueError, match="no sign"):
        so1n_sign(5, (1, 0, 0))


def test_semigroup_morphism_small():
    # sign(l+m) = sign(l) sign(m) on star weights; exhaustive small grid
    for n in range(2, 8):
        stars = _star_grid(n, 4)
        for l1, l2 in itertools.product(stars, repeat=2):
            s = tuple(a + b for a, b in zip(l1, l2))
            assert so1n_sign(n, s) == so1n_sign(n, l1) * so1n_sign(n, l2)


def _star_grid(n, bound):
    out = []
    if n == 2:
        return [(k,) for k in range(bound + 1)]
    rank = {3: 2, 4: 2, 5: 3, 6: 3, 7: 4}[n]
    lo = -bound if n == 3 else 0
    for a in range(bound + 1):
        for b in range(lo, bound + 1):
            if abs(b) <= a and (a + b) % 2 == 0:
                out.append((a, b) + (0,) * (rank - 2))
    return out


def test_invariant_tableau_values():
    t = invariant_tableau(4, 2)
    assert (t.a1, t.a2, t.a2bar, t.a1bar) == (Q(3, 2), Q(3), Q(3), Q(4))
    assert (t.b1, t.b2, t.b2bar, t.b1bar) == (Q(0), Q(0), Q(3, 2), Q(2))
    t = invariant_tableau(5, 1)
    assert t.a1 == 2 and t.a2 == 3 and t.a2bar == 3 and t.a1bar == 5
    assert t.b2bar == 1 and t.b1bar == 1
    t = invariant_tableau(0, 0)
    assert all(v == 0 for v in t.as_dict().values())


def test_invariant_tableau_rejects_bad_input():
    with pytest.raises(ValueError):
        invariant_tableau(1, 0)  # odd sum
    with pytest.raises(ValueError):
        invariant_tableau(1, 2)  # not sorted


def test_nullity_identity_on_grid():
    for l1 in range(13):
        for l2 in range(l1 + 1):
            if (l1 + l2) % 2 == 0:
                t = invariant_tableau(l1, l2)
                assert t.a2 == t.a1 + t.b2bar
                t.check()


def test_tableau_unique_examples():
    assert tableau_unique(4, 2)
    assert tableau_unique(1, 1)
    assert tableau_unique(2, 0)
    t = invariant_tableau(1, 1)
    assert t.a1 == Q(1, 2) and t.b2bar == Q(1, 2)
    t = invariant_tableau(2, 0)
    assert t.a1 == 1 and t.b2bar == 0
