"""Shared chart fixtures used across the test suite."""
import numpy as np
import pytest

from curvepoly import chart, classify


@pytest.fixture(scope="session")
def teardrop_chart():
    # y^2 = x(1-x)^2, both roots at the support endpoints
    curve = classify([1.0, -2.0, 1.0, 0.0])
    return chart(curve, (0.0, 1.0), "legendre")


@pytest.fixture(scope="session")
def teardrop_jacobi_chart():
    curve = classify([1.0, -2.0, 1.0, 0.0])
    return chart(curve, (0.0, 1.0), "jacobi", alpha=0.5, beta=1.5)


@pytest.fixture(scope="session")
def cusp_laguerre_chart():
    # y^2 = x^3 on [0, inf)
    curve = classify([1.0, 0.0, 0.0, 0.0])
    return chart(curve, (0.0, "inf"), "laguerre", alpha=0.0)


@pytest.fixture(scope="session")
def segment_chart():
    # y^2 = (x+2)(x^2+1): one simple root, support away from the far end
    curve = classify([1.0, 2.0, 1.0, 2.0])
    return chart(curve, (-2.0, 2.0), "legendre")


@pytest.fixture(scope="session")
def ode2_chart():
    # y^2 = (1-x^2)(2-x)
    curve = classify([1.0, -2.0, -1.0, 2.0])
    return chart(curve, (-1.0, 1.0), "legendre")
