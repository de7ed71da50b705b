"""Acceptance suite: one line per criterion group, gated on its pass/fail checks."""

import pytest

from bianchi_klf import verify

CFG = verify.SuiteConfig()


@pytest.mark.parametrize("n", sorted(verify.CRITERIA), ids=lambda n: f"criterion_{n}")
def test_criterion(n, capsys):
    checks = verify.CRITERIA[n](CFG)
    n_pass, n_fail, n_rep = verify.summarize(checks)
    failed = [c for c in checks if c.status == verify.FAIL]
    gated = n_pass + n_fail
    verdict = "PASS" if not failed else "FAIL"
    if gated == 0:
        verdict = "PASS" if checks else "FAIL"
    with capsys.disabled():
        print(f"\n[acceptance] criterion {n:2d} {verdict}: {verify.TITLES[n]} "
              f"({n_pass} pass, {n_fail} fail, {n_rep} report-only)")
        for c in failed:
            print(f"[acceptance]     {c.id}: residual {c.residual:.3e} tol {c.tol:.1e}")
        for c in checks:
            if c.status == verify.REPORT and c.residual is not None:
                print(f"[acceptance]     report {c.id}: residual {c.residual:.3e}")
    assert checks, "criterion produced no checks"
    assert not failed, f"{len(failed)} of {gated} checks failed: {[c.id for c in failed]}"
