import pytest

from errors import DomainError
from formulas import check_lemma_p7_first, check_lemma_p7_second, check_p7_lemmas


def test_first_inequality_equality_set():
    report = check_lemma_p7_first(3, limit=12)
    assert report.ok
    assert report.violations == []
    assert report.equality == [(0, 0), (2, 6)]
    assert report.checked == 13 * 7


def test_second_inequality_equality_set():
    report = check_lemma_p7_second(3, 10, limit=12)
    assert report.ok
    assert report.equality == [(2, 7)]


def test_second_inequality_needs_large_m():
    with pytest.raises(DomainError):
        check_lemma_p7_second(3, 9)


def test_small_p_rejected():
    with pytest.raises(DomainError):
        check_lemma_p7_first(2)


@pytest.mark.parametrize("p", [3, 4, 5])
def test_both_inequalities_hold(p):
    first, second = check_p7_lemmas(p, limit=14)
    assert first.ok and second.ok
    assert second.m == 3 * p + 1
    assert (2, 2 * p) in first.equality
    assert (2, second.m - p) in second.equality
