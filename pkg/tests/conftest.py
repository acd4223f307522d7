import math

import pytest

from postfock import ModelParams

# coupling ratios J/Delta and scaled times jhat*t used for cross-route
# equivalence sweeps; chosen inside the validity region and away from both
# the zero-time boundary and the omega -> 0 degenerate loci
LATTICE_RATIOS = (0.2, 0.65, 1.3, 2.0, 3.25)
LATTICE_JTS = (0.5, 1.3, 1.9, 2.6)


@pytest.fixture(scope="session")
def canonical_params():
    """Ultrastrong-coupling working point used throughout: J = 1.3 Delta, r = 0.5."""
    return ModelParams(hopping=1.3, detuning=1.0, squeeze=0.5, phase=0.0)


@pytest.fixture(scope="session")
def canonical_t(canonical_params):
    """Physical time with jhat * t = pi/2."""
    jhat = math.hypot(canonical_params.hopping, canonical_params.detuning)
    return (math.pi / 2.0) / jhat


@pytest.fixture(scope="session")
def weak_params():
    return ModelParams(hopping=0.2, detuning=1.0, squeeze=0.5, phase=0.0)


def lattice_points(phase=0.37, squeeze=0.5):
    """20 (params, t) pairs spanning weak to ultrastrong coupling."""
    points = []
    for ratio in LATTICE_RATIOS:
        params = ModelParams(hopping=ratio, detuning=1.0,
                             squeeze=squeeze, phase=phase)
        jhat = math.hypot(ratio, 1.0)
        for jt in LATTICE_JTS:
            points.append((params, jt / jhat))
    return points
