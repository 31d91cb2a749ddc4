"""Deterministic random stream shared by the simulation engines.

Both the reference stochastic engine and the register-level emulator draw
unit-mean exponential variates from this source.  Reproducibility contract:
a given (algorithm id, seed) pair yields one fixed sequence of variates, on
every platform.  The algorithm id below is written into trace headers so a
trace can always be replayed.

Variates are produced by inverse-CDF transformation of PCG64 doubles
(``-log1p(-u)``), not by ziggurat sampling, because the raw PCG64 bit
stream is stable across numpy versions while ziggurat internals are not.
"""

from __future__ import annotations

import numpy as np

# Bumped whenever the draw sequence for a given seed would change.
ALGORITHM_ID = "pcg64-exp-icdf/1"

_BUFFER = 8192


class RandomSource:
    """Seeded stream of unit-mean exponential variates.

    Draws are buffered in blocks for speed; the visible sequence is
    identical to drawing one at a time.
    """

    def __init__(self, seed: int | None = 0):
        self.seed = 0 if seed is None else int(seed)
        self._gen = np.random.Generator(np.random.PCG64(self.seed))
        self._buf: list[float] = []
        self._idx = 0

    def exponential(self) -> float:
        """Next unit-mean exponential variate."""
        if self._idx >= len(self._buf):
            self._buf = (-np.log1p(-self._gen.random(_BUFFER))).tolist()
            self._idx = 0
        v = self._buf[self._idx]
        self._idx += 1
        return v

    def child(self, n: int) -> "RandomSource":
        """Independent stream derived from this seed (for arrival processes
        and other side channels that must not perturb engine draws)."""
        ss = np.random.SeedSequence(self.seed)
        child_seed = int(ss.spawn(n + 1)[n].generate_state(1)[0])
        return RandomSource(child_seed)
