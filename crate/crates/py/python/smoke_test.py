"""Smoke test for the compiled `krivine` module. Exits non-zero on failure."""

import math
import sys

import krivine


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    exact = 2 / math.pi * math.log(1 + math.sqrt(2))
    assert close(krivine.threshold(), exact, 1e-15)

    r = krivine.phi_i(0.228)
    assert close(r.value, 0.561614475916681, 1e-7), r
    assert r.method == "semi-infinite"
    for method in ("polar", "cartesian"):
        other = krivine.phi_i(0.228, method=method)
        assert abs(other.value - r.value) <= other.error_estimate + r.error_estimate, other

    report = krivine.verify(0.228)
    assert report.passed and report.margin > 5.1e-4, report
    assert not krivine.verify(0.0, tol=1e-10).passed

    c = krivine.mehler_coefficients(0.228, order=11)
    verdict = krivine.alternation_check(krivine.revert_odd_series(c))
    assert not verdict.alternating and verdict.first_violation == 5, verdict
    assert 1.7805 < krivine.conditional_bound(r.value) < 1.7806

    est = krivine.estimate_phi_t("identity1", 0.5, 1_000_000, 42)
    assert abs(est.z_score(1 / 3)) <= 4, est
    again = krivine.estimate_phi_t("identity1", 0.5, 1_000_000, 42, threads=2)
    assert (again.mean, again.stderr) == (est.mean, est.stderr)

    best = krivine.maximize_eta(0.1, 0.4)
    assert 0.20 <= best.eta_star <= 0.26, best

    for bad in (lambda: krivine.phi_real_t(0.1, 1.0), lambda: krivine.estimate_phi_i("bogus", 10, 1)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    assert issubclass(krivine.NonConvergenceError, RuntimeError)

    print(f"krivine {krivine.__version__}: smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
