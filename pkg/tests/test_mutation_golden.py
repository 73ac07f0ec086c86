"""Premutation formulas on the reference configurations.

Formula-only here (every cocycle, cyclic equality with the displayed
forms); the acceptance suite additionally runs the reduction and dimension
comparisons on sampled cocycles.
"""

import pytest

from orbsp import verify


@pytest.mark.parametrize("num", sorted(verify.GOLDEN_CONFIGS))
def test_formula(num):
    ok, detail = verify.verify_config(num, full=False)
    assert ok, detail


def test_full_pipeline_on_one_config():
    ok, detail = verify.verify_config(1)
    assert ok, detail
