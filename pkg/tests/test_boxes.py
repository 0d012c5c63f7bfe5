"""Box parsing and geometry tests."""

from fractions import Fraction as F

import pytest

from conjdensity.boxes import Box, root_proxy_box


def test_parse_rational_and_decimal():
    b = Box.parse("-1/4,1/4;-0.5,2")
    assert b.intervals == ((F(-1, 4), F(1, 4)), (F(-1, 2), F(2)))
    assert b.dimension == 2
    assert b.volume == F(1, 2) * F(5, 2)


def test_parse_rejects_malformed():
    for bad in ("", "1", "1,2,3", "a,b", "1,2;x", "0.1.2,3"):
        with pytest.raises(ValueError):
            Box.parse(bad)


def test_order_validation():
    with pytest.raises(ValueError):
        Box.of((1, 0))
    Box.of((1, 1))  # degenerate allowed


def test_closed_membership():
    b = Box.of((0, 1), (F(-1, 2), F(1, 2)))
    assert b.contains([F(0), F(1, 2)])        # boundary included
    assert b.contains([1, 0])
    assert not b.contains([F(2), F(0)])
    with pytest.raises(ValueError):
        b.contains([1])


def test_round_trip_strings():
    b = Box.parse("-1/4,1/4")
    assert str(b) == "-1/4,1/4"
    assert b.as_strings() == [["-1/4", "1/4"]]
    assert Box.parse(str(b)) == b


def test_root_proxy_box():
    b = root_proxy_box(5, 2)
    assert b.intervals == ((F(-6), F(6)), (F(-6), F(6)))
