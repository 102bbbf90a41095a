"""Acceptance suite: every check prints one pass/fail line and must pass.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines inline;
the same checks back the ``agpaths selftest`` CLI verb.
"""

import time

import pytest

from agpaths.acceptance import CHECKS


@pytest.mark.parametrize("name,check", CHECKS, ids=[n for n, _ in CHECKS])
def test_acceptance(name, check):
    t0 = time.perf_counter()
    ok, detail = check()
    dt = time.perf_counter() - t0
    print(f"{'pass' if ok else 'FAIL'}  {name}: {detail}  ({dt:.1f}s)")
    assert ok, f"{name}: {detail}"
