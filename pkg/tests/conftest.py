import numpy as np
import pytest

import qbp


@pytest.fixture(scope="session")
def five_qubit():
    return qbp.five_qubit_code()


@pytest.fixture(scope="session")
def warm_kernels(five_qubit):
    """Compile/load every jit kernel once so timed tests measure decoding."""
    priors = qbp.depolarizing_priors(5, 0.1)
    syndrome = five_qubit.syndrome(qbp.PauliString.from_string("IXIII"))
    dec4 = qbp.Bp4Decoder(five_qubit)
    for schedule in ("parallel", "serial"):
        for extra in ({}, {"alpha_c": 1.5}, {"alpha_v": 1.5}, {"beta": 0.2}):
            cfg = qbp.DecoderConfig(schedule=schedule, max_iter=3, **extra)
            dec4.decode(syndrome, priors, cfg)
            qbp.bp2_on_stabilizer(five_qubit, syndrome, 0.1, cfg)
    return True
