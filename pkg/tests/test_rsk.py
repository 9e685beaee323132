import pytest
from hypothesis import given, strategies as st

from rsinv.enumeration import involutions
from rsinv.errors import (
    DuplicateEntry,
    InvalidTableau,
    NotInvolution,
    ShapeMismatch,
)
from rsinv.permutations import all_permutations, decreasing, identity, inverse, reverse
from rsinv.rsk import f_involution, inverse_rsk, row_insert, rsk, tableau_of_involution
from rsinv.tableaux import shape, transpose
from rsinv.verify import (
    check_descent_transport,
    check_f_twice,
    check_reversal_transpose,
    check_roundtrip,
    check_schuetzenberger,
)


@st.composite
def perms(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


def test_row_insert():
    assert row_insert(((1, 2),), 3) == (((1, 2, 3),), 1)
    assert row_insert(((1, 4), (2,)), 3) == (((1, 3), (2, 4)), 2)
    t = ()
    for x in range(1, 6):
        t, landing = row_insert(t, x)
        assert landing == 1
    assert t == ((1, 2, 3, 4, 5),)


def test_row_insert_duplicate():
    with pytest.raises(DuplicateEntry):
        row_insert(((1, 3), (2,)), 3)


def test_rsk_worked_examples():
    layered = ((1, 3, 6), (2, 4, 7), (5, 8), (9,))
    assert rsk((2, 1, 5, 4, 3, 9, 8, 7, 6)) == (layered, layered)
    assert rsk(identity(4)) == (((1, 2, 3, 4),), ((1, 2, 3, 4),))
    flipped = ((1, 2, 5, 9), (3, 4, 8), (6, 7))
    assert rsk((6, 7, 3, 4, 8, 1, 2, 5, 9)) == (flipped, flipped)
    assert rsk(()) == ((), ())


def test_inverse_rsk_examples():
    flipped = ((1, 2, 5, 9), (3, 4, 8), (6, 7))
    assert inverse_rsk((flipped, flipped)) == (6, 7, 3, 4, 8, 1, 2, 5, 9)
    column = tuple((i,) for i in range(1, 6))
    assert inverse_rsk((column, column)) == decreasing(5)


def test_inverse_rsk_rejects():
    with pytest.raises(ShapeMismatch):
        inverse_rsk((((1, 2),), ((1,), (2,))))
    with pytest.raises(InvalidTableau):
        inverse_rsk((((2, 1),), ((1, 2),)))


def test_tableau_of_involution():
    assert tableau_of_involution((2, 1, 5, 4, 3, 9, 8, 7, 6)) == (
        (1, 3, 6),
        (2, 4, 7),
        (5, 8),
        (9,),
    )
    assert tableau_of_involution(identity(5)) == ((1, 2, 3, 4, 5),)
    assert tableau_of_involution((1, 3, 2, 5, 4, 6, 7)) == ((1, 2, 4, 6, 7), (3, 5))


def test_tableau_of_involution_rejects():
    with pytest.raises(NotInvolution):
        tableau_of_involution((1, 3, 4, 2))


def test_f_involution_examples():
    assert f_involution((2, 1, 5, 4, 3, 9, 8, 7, 6)) == (6, 7, 3, 4, 8, 1, 2, 5, 9)
    assert f_involution((6, 5, 7, 4, 2, 1, 3)) == (1, 3, 2, 4, 5, 7, 6)
    for n in range(7):
        assert f_involution(identity(n)) == decreasing(n)


def test_f_involution_rejects_non_involution():
    with pytest.raises(NotInvolution):
        f_involution((2, 3, 1))


@given(perms(max_n=7))
def test_roundtrip_property(p):
    assert inverse_rsk(rsk(p)) == p


@given(perms(max_n=7))
def test_schuetzenberger_property(p):
    p_tab, q_tab = rsk(p)
    assert rsk(inverse(p)) == (q_tab, p_tab)
    assert shape(p_tab) == shape(q_tab)


@given(perms(max_n=7))
def test_reversal_property(p):
    assert rsk(reverse(p))[0] == transpose(rsk(p)[0])


def test_involutions_have_symmetric_tableaux():
    for n in range(8):
        for p in involutions(n):
            p_tab, q_tab = rsk(p)
            assert p_tab == q_tab


def test_exhaustive_rsk_suite():
    for result in (
        check_roundtrip(7),
        check_schuetzenberger(7),
        check_reversal_transpose(7),
        check_descent_transport(7),
        check_f_twice(8),
    ):
        assert result.ok, result.failures


def test_all_permutations_reached_by_inverse_rsk():
    # every tableau pair of a common shape comes from exactly one permutation
    seen = set()
    for p in all_permutations(5):
        seen.add(rsk(p))
    assert len(seen) == 120
