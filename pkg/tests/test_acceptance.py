"""Acceptance gate: one line per criterion, all must pass."""

import pytest

from stableclass.acceptance import CHECKS, run_check


@pytest.mark.parametrize("cid, title, fn", CHECKS, ids=[f"criterion-{c[0]:02d}" for c in CHECKS])
def test_criterion(cid, title, fn, capsys):
    result = run_check(cid, title, fn)
    with capsys.disabled():
        status = "PASS" if result.passed else "FAIL"
        print(f"\n[acceptance {cid:>2}] {status} ({result.seconds:.3f}s) {title}: {result.detail}")
    assert result.passed, result.detail
