"""Tensor-square amplification of unitaries.

The conjugation action of U(n) on the matrix space M_n(C), taken in the
row-major basis E_ij (output index i*n+j), yields a unitary embedding
U(n) -> U(n^2) realized as u -> conj(u) (x) u.  It transforms pairwise
Hilbert-Schmidt distances by d -> d*sqrt(2 - d^2/2), whose only fixed points
in [0, 2] are 0, sqrt(2) and the collapse f(2) = 0; iterating drives every
separation in (0, 2) toward sqrt(2).

The block-diagonal embedding u -> diag(u, I_n) scales all distances by
exactly 1/sqrt(2), shrinking any diameter-2 configuration strictly below 2
so that the amplification recurrence applies.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import ResourceLimits, default_limits
from .errors import ResourceCapError
from .metrics import UnitaryMatrix, hs_distance, phase_aligned_hs

SQRT2 = math.sqrt(2.0)


def tensor_square(u: UnitaryMatrix) -> UnitaryMatrix:
    """Amplify one step: rank n -> n^2, normalized trace -> |trace|^2."""
    out = np.kron(u.entries.conj(), u.entries)
    return UnitaryMatrix(out, 10 * u.unitarity_tolerance)


def amplified_distance(d: float) -> float:
    """One-step distance transform d * sqrt(2 - d^2/2) on [0, 2]."""
    if not 0.0 <= d <= 2.0:
        raise ValueError(f"distance {d} outside [0, 2]")
    return d * math.sqrt(2.0 - d * d / 2.0)


def iterate_amplification(d0: float, k: int) -> list[float]:
    """The k-term orbit [d0, f(d0), f(f(d0)), ...] of the distance map.

    The endpoints are rejected: 0 is a fixed point and 2 collapses to 0 in
    one step, so neither can converge to sqrt(2).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if d0 <= 0.0 or d0 >= 2.0:
        raise ValueError(
            f"d0 = {d0} is degenerate: 0 is a fixed point and 2 collapses to 0"
        )
    orbit = [d0]
    for _ in range(k - 1):
        orbit.append(amplified_distance(orbit[-1]))
    return orbit


def iterations_to_tolerance(d0: float, tol: float,
                            limits: ResourceLimits | None = None) -> int:
    """First index k (0-based along the orbit) with |orbit_k - sqrt(2)| < tol."""
    limits = limits or default_limits()
    d = d0
    for k in range(limits.iteration_cap + 1):
        if abs(d - SQRT2) < tol:
            return k
        d = amplified_distance(d)
    raise ResourceCapError(
        f"orbit from {d0} did not reach tolerance {tol} within "
        f"{limits.iteration_cap} iterations"
    )


def halve_embed(u: UnitaryMatrix) -> UnitaryMatrix:
    """Block-diagonal embedding u -> diag(u, I_n); a homomorphism scaling
    all Hilbert-Schmidt distances by exactly 1/sqrt(2)."""
    n = u.n
    out = np.eye(2 * n, dtype=np.complex128)
    out[:n, :n] = u.entries
    return UnitaryMatrix(out, u.unitarity_tolerance)


@dataclass(frozen=True)
class AmplificationReport:
    """Measured vs predicted distances for one amplification step.

    d_in is the phase-aligned input distance: the tensor square kills global
    phases, and d_measured = amplified_distance(d_in) is an exact identity in
    that quantity.  For images with real nonnegative relative traces
    (permutation matrices, real orthogonal matrices, and every image produced
    by a previous amplification step) the phase-aligned distance coincides
    with the plain Hilbert-Schmidt distance, so there the recurrence governs
    hs itself.
    """

    input_rank: int
    output_rank: int
    pairs: tuple[tuple[float, float, float], ...]  # (d_in, d_predicted, d_measured)

    def max_prediction_error(self) -> float:
        return max((abs(p - m) for _, p, m in self.pairs), default=0.0)

    def to_json(self) -> dict:
        return {
            "input_rank": self.input_rank,
            "output_rank": self.output_rank,
            "pairs": [
                {"d_in": d, "d_predicted": p, "d_measured": m}
                for d, p, m in self.pairs
            ],
        }


def amplification_report(pairs: list[tuple[UnitaryMatrix, UnitaryMatrix]]) -> AmplificationReport:
    """Amplify each pair once and compare the measured output distance with
    the closed-form prediction."""
    if not pairs:
        raise ValueError("at least one pair required")
    n = pairs[0][0].n
    rows = []
    for u, v in pairs:
        if u.n != n or v.n != n:
            raise ValueError("all pairs must share one rank")
        d_in = phase_aligned_hs(u, v)
        rows.append((d_in, amplified_distance(d_in), hs_distance(tensor_square(u), tensor_square(v))))
    return AmplificationReport(input_rank=n, output_rank=n * n, pairs=tuple(rows))
