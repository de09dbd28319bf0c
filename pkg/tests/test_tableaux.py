import pytest

from bssyt.shapes import Partition, subshape_contained
from bssyt.tableaux import (
    ReversePlanePartition,
    SetValuedTableau,
    classify,
    count_bssyt,
    count_rpp,
    count_ssyt,
    enumerate_bssyt,
    enumerate_rpp,
    enumerate_ssyt,
    induced_subshape,
    rpp_to_ssyt,
    ssyt_to_rpp,
)

P = Partition

WORKED_BSSYT = "1,1,2,2/{2,4},4,4,4/5,5/6"  # shape (4,4,2,1), doubled cell in row 2


def test_classify():
    assert classify(SetValuedTableau.parse(WORKED_BSSYT, k=2)) == "BSSYT"
    assert classify(SetValuedTableau.parse("1,2,2,3/{2,4},4,4/5,6/7,7", k=3)) == "BSSYT"
    assert classify(SetValuedTableau.parse("1,1/2", k=1)) == "SSYT"
    assert classify(SetValuedTableau.parse("{1,2}/{3,4}", k=2)) == "other"
    assert classify(SetValuedTableau.parse("{1,2,3}", k=3)) == "other"


def test_validation_rejects_bad_tableaux():
    with pytest.raises(ValueError):
        SetValuedTableau.parse("2,1", k=2)  # row decreasing
    with pytest.raises(ValueError):
        SetValuedTableau.parse("1/1", k=2)  # column not strict
    with pytest.raises(ValueError):
        SetValuedTableau.parse("3", k=1)  # flag k+1 exceeded
    with pytest.raises(ValueError):
        SetValuedTableau.parse("0", k=1)  # below 1
    with pytest.raises(ValueError):
        SetValuedTableau.parse("{2,4},1", k=3)  # row violates max<=min
    with pytest.raises(ValueError):
        SetValuedTableau(P((1,)), (((2, 2),),), 2)  # repeated entry in a cell


def test_rpp_validation():
    with pytest.raises(ValueError):
        ReversePlanePartition.parse("1,0", k=1)
    with pytest.raises(ValueError):
        ReversePlanePartition.parse("1/0", k=1)
    with pytest.raises(ValueError):
        ReversePlanePartition.parse("2", k=1)
    with pytest.raises(ValueError):
        ReversePlanePartition.parse("-1", k=1)
    assert ReversePlanePartition.parse("0,1/1", k=1).rows == ((0, 1), (1,))


def test_enumerate_ssyt_counts():
    assert count_ssyt(P((1,)), 2) == 3
    assert count_ssyt(P((2, 1)), 1) == 5
    assert count_ssyt(P((2,)), 3) == 10
    assert count_ssyt(P(()), 5) == 1


def test_enumerate_ssyt_contents():
    singles = [T.rows for T in enumerate_ssyt(P((1,)), 2)]
    assert singles == [(((1,),),), (((2,),),), (((3,),),)]


def test_enumerate_bssyt_counts():
    assert count_bssyt(P((1,)), 1) == 1
    assert count_bssyt(P((1,)), 3) == 6
    assert count_bssyt(P((2, 1)), 1) == 5
    assert count_bssyt(P((2,)), 1) == 2
    assert count_bssyt(P((3, 1)), 1) == 8
    assert count_bssyt(P(()), 3) == 0


def test_enumerate_bssyt_forced_case():
    only = list(enumerate_bssyt(P((1,)), 1))
    assert len(only) == 1
    assert only[0].rows == (((1, 2),),)


def test_enumerate_rpp_counts_and_contents():
    assert count_rpp(P((1,)), 1) == 2
    assert [p.rows for p in enumerate_rpp(P((2,)), 1)] == [
        ((0, 0),),
        ((0, 1),),
        ((1, 1),),
    ]
    assert count_rpp(P((2, 1)), 1) == 5
    assert count_rpp(P(()), 2) == 1


def test_enumerations_validate_and_deduplicate():
    lam = P((3, 2))
    for k in (1, 2):
        ssyt = list(enumerate_ssyt(lam, k))
        bssyt = list(enumerate_bssyt(lam, k))
        rpps = list(enumerate_rpp(lam, k))
        for T in ssyt + bssyt:
            T.validate()
            assert classify(T) == ("SSYT" if T in ssyt else "BSSYT")
        for R in rpps:
            R.validate()
        assert len({T.serialize() for T in ssyt}) == len(ssyt)
        assert len({T.serialize() for T in bssyt}) == len(bssyt)
        assert len({R.serialize() for R in rpps}) == len(rpps)


def test_enumeration_is_deterministic():
    lam = P((2, 2))
    first = [T.serialize() for T in enumerate_bssyt(lam, 2)]
    second = [T.serialize() for T in enumerate_bssyt(lam, 2)]
    assert first == second


def test_bad_bound_rejected():
    with pytest.raises(ValueError):
        count_ssyt(P((1,)), 0)
    with pytest.raises(ValueError):
        list(enumerate_rpp(P((1,)), -2))


def test_row_shift_example():
    rpp = ReversePlanePartition.parse("0,0/1", k=1)
    assert rpp_to_ssyt(rpp).serialize() == "1,1/3"
    assert ssyt_to_rpp(rpp_to_ssyt(rpp)) == rpp
    empty = ReversePlanePartition.parse("", k=1)
    assert rpp_to_ssyt(empty).serialize() == ""


def test_row_shift_bijection_small_grid():
    from bssyt.shapes import all_subshapes

    for lam in all_subshapes(P((3, 3, 3))):
        for k in (1, 2, 3):
            images = set()
            for rpp in enumerate_rpp(lam, k):
                T = rpp_to_ssyt(rpp)
                T.validate()
                assert classify(T) == "SSYT"
                assert ssyt_to_rpp(T) == rpp
                images.add(T.serialize())
            assert len(images) == count_rpp(lam, k) == count_ssyt(lam, k)


def test_row_shift_inverse_rejects_non_ssyt():
    with pytest.raises(ValueError):
        ssyt_to_rpp(SetValuedTableau.parse("{1,2}", k=1))


def test_induced_subshape_examples():
    corner_side = ReversePlanePartition.parse("0,0,1,1/0,2,2,2/2,2/2", k=2)
    assert induced_subshape(corner_side, 2).parts == (4, 1)
    assert induced_subshape(corner_side, 1).parts == (2, 1)
    outside_side = ReversePlanePartition.parse("0,0,1,1/2,2,2,2/2,2/2", k=2)
    assert induced_subshape(outside_side, 1).parts == (2,)
    all_ones = ReversePlanePartition.parse("1,1/1", k=1)
    assert induced_subshape(all_ones, 1).parts == ()
    with pytest.raises(ValueError):
        induced_subshape(corner_side, 0)
    with pytest.raises(ValueError):
        induced_subshape(corner_side, 3)


def test_induced_subshape_monotone_in_level():
    lam = P((3, 2))
    k = 3
    for rpp in enumerate_rpp(lam, k):
        previous = None
        for level in range(1, k + 1):
            mu = induced_subshape(rpp, level)
            assert subshape_contained(mu, lam)
            if previous is not None:
                assert subshape_contained(previous, mu)
            previous = mu


def test_serialization_round_trip():
    T = SetValuedTableau.parse(WORKED_BSSYT, k=2)
    assert T.serialize() == WORKED_BSSYT
    assert SetValuedTableau.parse(T.serialize(), k=2) == T
    assert SetValuedTableau.parse("", k=1).serialize() == ""
    with pytest.raises(ValueError):
        SetValuedTableau.parse("{1,2", k=2)
    with pytest.raises(ValueError):
        SetValuedTableau.parse("1}", k=2)


def test_tableau_equality_includes_bound():
    a = SetValuedTableau.parse("1", k=1)
    b = SetValuedTableau.parse("1", k=2)
    assert a != b
