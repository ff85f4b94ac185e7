import math

import mpmath
import numpy as np
import pytest

from glsobolev.errors import DomainError
from glsobolev.gammafn import gamma, log_gamma

mpmath.mp.dps = 40


class TestLogGamma:
    @pytest.mark.parametrize("n", range(1, 21))
    def test_integer_factorials(self, n):
        assert gamma(float(n)) == pytest.approx(math.factorial(n - 1), rel=1e-12)

    def test_half_integer(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
        assert gamma(1.5) == pytest.approx(0.5 * math.sqrt(math.pi), rel=1e-13)

    def test_against_high_precision_reference(self):
        # 40-digit mpmath reference across the working range
        for x in np.geomspace(1e-3, 200.0, 400):
            ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
            assert log_gamma(float(x)) == pytest.approx(ref, abs=5e-13 * max(abs(ref), 1.0))

    def test_recurrence(self):
        # log Gamma(x + 1) = log Gamma(x) + log x
        for x in [0.3, 1.7, 9.2, 55.5]:
            assert log_gamma(x + 1.0) == pytest.approx(
                log_gamma(x) + math.log(x), rel=1e-13, abs=1e-13
            )

    def test_large_argument_stays_in_log_space(self):
        # Gamma(400) overflows a double; its log must not
        val = log_gamma(400.0)
        ref = float(mpmath.loggamma(400))
        assert val == pytest.approx(ref, rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, math.nan, math.inf])
    def test_rejects_nonpositive(self, x):
        with pytest.raises(DomainError):
            log_gamma(x)


class TestGamma:
    def test_matches_math_gamma(self):
        for x in np.geomspace(0.01, 150.0, 200):
            assert gamma(float(x)) == pytest.approx(math.gamma(float(x)), rel=5e-13)

    def test_ratio_in_log_space(self):
        # Gamma(1000)/Gamma(999) = 999, assembled without overflow
        ratio = math.exp(log_gamma(1000.0) - log_gamma(999.0))
        assert ratio == pytest.approx(999.0, rel=1e-12)
