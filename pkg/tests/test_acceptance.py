"""Acceptance suite: one pass/fail line per numbered criterion."""

import pytest

from orbsp import verify


@pytest.mark.parametrize(
    "num,name,fn", verify.CRITERIA,
    ids=[f"criterion_{num:02d}_{name.replace(' ', '_')}"
         for num, name, _ in verify.CRITERIA])
def test_criterion(num, name, fn):
    ok, detail = fn()
    print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"criterion {num} ({name}): {detail}"
