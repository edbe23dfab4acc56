import math

import pytest
from hypothesis import given, strategies as st

from odolab.errors import BadFirstEntry, DivisibilityViolation, NotIncreasing
from odolab.scales import (Scale, SupernaturalNumber, combine, divides,
                           factorize, scale_lcm, validate_scale)

S = SupernaturalNumber.parse


def test_combine_lcm_with_infinity():
    assert combine(S("2^inf*3"), S("2^2*5"), "lcm") == S("2^inf*3*5")


def test_combine_gcd_with_infinity():
    assert combine(S("2^inf*3"), S("2^2*5"), "gcd") == S("2^2")


def test_combine_mul_infinity_absorbs():
    assert combine(S("2^inf"), S("2^3"), "mul") == S("2^inf")


def test_divides_examples():
    assert divides(SupernaturalNumber.from_int(12), S("2^inf*3"))
    assert not divides(S("2^inf"), S("2^10"))
    assert divides(SupernaturalNumber.one(), S("2^inf*3*5^2"))


def test_parse_format_round_trip():
    for text in ("1", "2", "2^inf", "2^inf*3*5^2", "2^3*7"):
        assert str(S(text)) == text


def test_parse_composite_base():
    assert S("12") == S("2^2*3")


def test_validate_scale_accepts_powers_of_two():
    assert validate_scale([2, 4, 8, 16]).entries == (2, 4, 8, 16)


def test_validate_scale_divisibility_violation():
    with pytest.raises(DivisibilityViolation):
        validate_scale([2, 3])


def test_validate_scale_not_increasing():
    with pytest.raises(NotIncreasing):
        validate_scale([2, 2])


def test_validate_scale_bad_first_entry():
    with pytest.raises(BadFirstEntry):
        validate_scale([1, 2])


def test_validate_scale_rejects_empty():
    with pytest.raises(ValueError):
        validate_scale([])


def test_scale_lcm_examples():
    assert scale_lcm(Scale([2, 4, 8])) == S("2^3")
    assert scale_lcm(Scale([3, 6, 12])) == S("2^2*3")
    assert scale_lcm(Scale([2, 6, 30])) == S("2*3*5")


def test_scale_lcm_matches_integer_lcm():
    for entries in ([2, 4, 8, 16], [3, 6, 12], [2, 6, 30], [5, 10, 40]):
        assert int(scale_lcm(Scale(entries))) == math.lcm(*entries)


def test_scale_lcm_divisible_by_entries():
    scale = Scale([2, 6, 30])
    value = scale_lcm(scale)
    for entry in scale:
        assert SupernaturalNumber.from_int(entry).divides(value)


small_supernaturals = st.builds(
    lambda fin, inf: SupernaturalNumber(
        {p: e for p, e in fin.items() if p not in inf}, inf),
    st.dictionaries(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), max_size=3),
    st.frozensets(st.sampled_from([2, 3, 5, 7]), max_size=2),
)


@given(small_supernaturals, small_supernaturals)
def test_gcd_lcm_divisibility(a, b):
    assert divides(a.gcd(b), a)
    assert divides(a, a.lcm(b))
    assert divides(a, combine(a, b, "lcm"))


@given(small_supernaturals, small_supernaturals, small_supernaturals)
def test_lcm_is_a_semilattice(a, b, c):
    assert a.lcm(b) == b.lcm(a)
    assert a.lcm(a) == a
    assert a.lcm(b).lcm(c) == a.lcm(b.lcm(c))


@given(st.integers(2, 10_000))
def test_factorize_reconstructs(n):
    assert math.prod(p ** e for p, e in factorize(n).items()) == n
