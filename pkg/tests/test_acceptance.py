"""Acceptance battery: one test per built-in verification criterion.

Each test prints the same pass/fail line the `suite` verb emits, enforces
the criterion's wall-clock budget, then asserts the criterion itself.

Criterion 4 checks the advertised star count 2n - 2. The computed
universal Groebner basis of the star on n vertices has n(n-1)/2 elements
(cross-checked against the even cycles of the star's prism), which agrees
with 2n - 2 only at n = 4, so that one test fails by design and its
failure message records the per-star discrepancy.
"""

from diagminors import suite


def _check(result, budget, per_item=False):
    print(suite.format_line(result))
    spent = (max if per_item else sum)(result.timings.values())
    assert spent < budget, "over budget: %.2fs" % spent
    assert result.passed, suite.format_line(result)


def test_criterion_01():
    _check(suite.criterion_1(), 10.0)


def test_criterion_02():
    _check(suite.criterion_2(), 1.0, per_item=True)


def test_criterion_03():
    _check(suite.criterion_3(), 30.0)


def test_criterion_04():
    _check(suite.criterion_4(), 10.0)


def test_criterion_05():
    _check(suite.criterion_5(), 30.0)


def test_criterion_06():
    _check(suite.criterion_6(), 60.0)


def test_criterion_07():
    _check(suite.criterion_7(), 60.0)


def test_criterion_08():
    _check(suite.criterion_8(), 5.0)


def test_criterion_09():
    _check(suite.criterion_9(), 1.0)


def test_criterion_10():
    _check(suite.criterion_10(), 300.0)
