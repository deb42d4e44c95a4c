# External imports
import inspect

import pytest
import numpy as np

# Module to test
from .. import validate
from ..validate import (CheckResult, run_suites, verify, poly_suite,
                        disc_suite, fourier_suite, galois_suite, census_suite,
                        constructed_g3_pairs)
from ..galois import g1_flag, g2_flag, g3_radicand
from ..config import Config
from ..utils import ShapeError, VerificationError


@pytest.fixture
def config():
    return Config(workers=1, seed=3, prime_budget=200)


def names(results):
    return [r.name for r in results if not r.passed]


class TestSuites(object):

    def test_poly(self, config):
        results = poly_suite(config, samples=20)
        assert len(results) == 5
        assert names(results) == []

    def test_default_sample_sizes(self):
        for suite in (poly_suite, disc_suite, galois_suite):
            default = inspect.signature(suite).parameters["samples"].default
            assert default == 10 ** 4
        assert census_suite.__defaults__[1] == validate.G1_SERIES

    def test_cayley_draws_per_degree(self, config):
        results = poly_suite(config, samples=7)
        assert results[1].checked == 5 * 7

    def test_disc(self, config):
        results = disc_suite(config, samples=10)
        assert names(results) == []
        assert results[0].checked == 50

    def test_fourier(self, config):
        results = fourier_suite(config, samples=6, primes=(3,))
        assert names(results) == []
        assert results[-1].checked == 6

    def test_galois(self):
        config = Config(workers=1, seed=3, prime_budget=1000)
        results = galois_suite(config, samples=40, constructed=3,
                               fingerprints=3)
        assert names(results) == []
        assert len(results) == 4
        assert results[0].checked > 150
        assert results[1].checked == 3

    def test_constructed_g3_pairs(self):
        rng = np.random.default_rng(0)
        pairs = constructed_g3_pairs(rng, 6)
        assert [k for k, _ in pairs] == [2, 3, 5, 2, 3, 5]
        for k, pair in pairs:
            assert pair.n == 3
            assert not g1_flag(pair) and not g2_flag(pair)
            assert g3_radicand(pair) == k

    def test_census(self, config):
        results = census_suite(config, samples=40, series=())
        assert names(results) == []
        assert len(results) == 3

    def test_census_series_rows(self, config):
        series = (("monic", True, (2, 4, 8), 1, 1),)
        results = census_suite(config, samples=5, series=series)
        fit, trend = results[3:]
        assert fit.checked == 3
        assert fit.detail.startswith("ratio")
        # u^2 + 1 puts every height in the G1 tally
        assert trend.checked == 3
        assert trend.passed == (trend.failures == 0)


class TestRunSuites(object):

    def test_selection(self, config):
        results = run_suites(["poly"], config, samples=5)
        assert set(r.suite for r in results) == {"poly"}
        assert all(isinstance(r, CheckResult) for r in results)

    def test_unknown(self, config):
        with pytest.raises(ShapeError):
            run_suites("nope", config)

    def test_verify_failure(self, config, monkeypatch):
        def broken(config, samples=1):
            return [CheckResult(suite="poly", name="always fails",
                                passed=False)]
        monkeypatch.setitem(validate.SUITES, "poly", broken)
        with pytest.raises(VerificationError) as info:
            verify("poly", config)
        assert "always fails" in str(info.value)
