from fractions import Fraction

import pytest

from dirmat.errors import ZeroRestriction
from dirmat.polynomials import IntPoly
from dirmat.sturm import (
    interlace_check,
    isolate_roots,
    squarefree_part,
    yun_decomposition,
)


def poly_from_roots(roots):
    out = IntPoly((1,))
    for r in roots:
        out = out * IntPoly((-r, 1))
    return out


def test_isolate_simple_roots():
    p = poly_from_roots([1, 2, 3])
    intervals = isolate_roots(p)
    assert len(intervals) == 3
    for (lo, hi, mult), want in zip(intervals, [1, 2, 3]):
        assert lo <= want <= hi
        assert mult == 1


def test_isolate_with_multiplicity():
    p = poly_from_roots([1, 1, 4])
    intervals = isolate_roots(p)
    # two distinct roots, the first one doubled
    assert len(intervals) == 2
    assert sorted(mult for _, _, mult in intervals) == [1, 2]


def test_yun_splits_by_multiplicity():
    p = poly_from_roots([2, 2, 5])
    fac = yun_decomposition(p)
    degrees = sorted((f.degree(), k) for f, k in fac if f.degree() > 0)
    assert degrees == [(1, 1), (1, 2)]


def test_squarefree_part():
    p = poly_from_roots([1, 1, 1, 7])
    s = squarefree_part(p)
    assert s.degree() == 2


def test_interlace_shared_root():
    low = IntPoly((0, 2))            # 2t
    high = IntPoly((0, 0, 1))        # t^2
    rep = interlace_check(low, high)
    assert rep["real_rooted"]
    assert rep["interlaced"]


def test_interlace_strict():
    low = IntPoly((-2, 2))                       # 2t - 2, root 1
    high = IntPoly((-3, 1)) * IntPoly((1, 1))    # roots 3 and -1
    rep = interlace_check(low, high)
    assert rep["interlaced"]


def test_interlace_failure():
    low = IntPoly((-5, 1))                       # root 5
    high = IntPoly((-1, 1)) * IntPoly((-2, 1))   # roots 1 and 2
    rep = interlace_check(low, high)
    assert not rep["interlaced"]


def test_interlace_rejects_zero():
    with pytest.raises(ZeroRestriction):
        interlace_check(IntPoly(()), IntPoly((1, 1)))


def test_not_real_rooted_detected():
    low = IntPoly((1, 1))
    high = IntPoly((1, 0, 1))  # t^2 + 1 has no real roots
    rep = interlace_check(low, high)
    assert not rep["real_rooted"]
    assert not rep["interlaced"]


def test_isolating_intervals_are_disjoint_and_ordered():
    p = poly_from_roots([-3, 0, 1, 2, 9])
    intervals = isolate_roots(p)
    assert len(intervals) == 5
    for i in range(len(intervals) - 1):
        assert intervals[i][1] <= intervals[i + 1][0]
    # every interval is narrow
    for lo, hi, _ in intervals:
        assert hi - lo <= Fraction(1, 32)
