import importlib
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cliffexp import _kernel_py, kernel

try:
    from cliffexp import _kernel as compiled
except ImportError:  # pragma: no cover - extension not built
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="extension not built")


def bubble_sign(a, b, neg_mask):
    """Sign of e_A e_B by literally sorting the concatenated index word."""
    word = [i for i in range(16) if a >> i & 1] + [i for i in range(16) if b >> i & 1]
    swaps = 0
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                swaps += 1
    # adjacent equal pairs contract to their square
    negs = sum(1 for i in range(16) if (a & b & neg_mask) >> i & 1)
    return -1 if (swaps + negs) % 2 else 1


masks = st.integers(0, (1 << 6) - 1)


@given(masks, masks, masks)
def test_python_sign_matches_bubble_sort(a, b, neg):
    assert _kernel_py.blade_sign(a, b, neg) == bubble_sign(a, b, neg)


@needs_compiled
@given(masks, masks, masks)
def test_compiled_sign_matches_python(a, b, neg):
    assert compiled.blade_sign(a, b, neg) == _kernel_py.blade_sign(a, b, neg)


terms = st.dictionaries(
    st.integers(0, 31), st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=6
)


@needs_compiled
@given(terms, terms, st.integers(0, 31))
def test_compiled_products_match_python(xs, ys, neg):
    xs = {k: v for k, v in xs.items() if v}
    ys = {k: v for k, v in ys.items() if v}
    assert compiled.geometric_product(xs, ys, neg) == _kernel_py.geometric_product(xs, ys, neg)
    assert compiled.outer_product(xs, ys) == _kernel_py.outer_product(xs, ys)


def test_products_drop_cancelled_terms():
    # (1 + e1)(1 - e1) = 1 - e1^2 = 0 in Cl(1,0)
    xs = {0: Fraction(1), 1: Fraction(1)}
    ys = {0: Fraction(1), 1: Fraction(-1)}
    assert kernel.geometric_product(xs, ys, 0) == {}


def test_backend_is_reported():
    assert kernel.BACKEND in ("compiled", "python")


def test_env_var_forces_python_backend():
    env = dict(os.environ, CLIFFEXP_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import cliffexp.kernel as k; print(k.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@needs_compiled
def test_compiled_is_default_when_built(monkeypatch):
    monkeypatch.delenv("CLIFFEXP_PURE_PYTHON", raising=False)
    mod = importlib.reload(kernel)
    assert mod.BACKEND == "compiled"
