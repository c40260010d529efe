"""Target metric groups: permutations under the normalized Hamming distance
and finite-rank unitaries under the normalized Hilbert-Schmidt distance.

Permutation products compose left-to-right: (s * t)(i) = t(s(i)).  With the
matrix convention a[i, s(i)] = 1 this makes the permutation-matrix embedding
a group homomorphism, and it matches the edge-coloured-graph reading where
following a colour sequence applies the corresponding permutations in order.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DEFAULT_UNITARITY_TOL = 1e-9


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1}, stored as its image array."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1 or sorted(self.images) != list(range(n)):
            raise ValueError("images must be a bijection of {0,...,n-1}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_fixed_point_free(self) -> bool:
        return all(self.images[i] != i for i in range(self.n))


def hamming(s: Permutation, t: Permutation) -> Fraction:
    """Normalized Hamming distance: the fraction of moved points, exact."""
    if s.n != t.n:
        raise ValueError("degree mismatch")
    moved = sum(1 for a, b in zip(s.images, t.images) if a != b)
    return Fraction(moved, s.n)


@dataclass(frozen=True, eq=False)
class UnitaryMatrix:
    """A finite-rank unitary with a hard unitarity check on construction.

    Violations are rejected rather than repaired; silent re-orthonormalization
    would corrupt certificate verification semantics.
    """

    entries: np.ndarray
    unitarity_tolerance: float = DEFAULT_UNITARITY_TOL

    def __post_init__(self) -> None:
        m = np.asarray(self.entries, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise ValueError("entries must be a nonempty square matrix")
        defect = np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))
        if defect > self.unitarity_tolerance:
            raise ValueError(
                f"matrix is not unitary within tolerance {self.unitarity_tolerance:g} "
                f"(defect {defect:.3e})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def identity(cls, n: int) -> "UnitaryMatrix":
        return cls(np.eye(n, dtype=np.complex128))

    def __mul__(self, other: "UnitaryMatrix") -> "UnitaryMatrix":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        tol = max(self.unitarity_tolerance, other.unitarity_tolerance)
        return UnitaryMatrix(self.entries @ other.entries, 10 * tol)

    def adjoint(self) -> "UnitaryMatrix":
        return UnitaryMatrix(self.entries.conj().T, self.unitarity_tolerance)


def normalized_trace(u: UnitaryMatrix) -> complex:
    """(1/n) * trace; modulus at most 1 for unitary input."""
    return complex(np.trace(u.entries) / u.n)


def hs_distance(u: UnitaryMatrix, v: UnitaryMatrix) -> float:
    """Normalized Hilbert-Schmidt distance via the trace formula
    sqrt(2 - tr~(u*v) - tr~(v*u)); values lie in [0, 2]."""
    if u.n != v.n:
        raise ValueError("rank mismatch")
    cross = normalized_trace(UnitaryMatrix(u.entries.conj().T @ v.entries, 1e-6))
    val = 2.0 - 2.0 * cross.real
    return float(np.sqrt(max(val, 0.0)))


def hs_distance_direct(u: UnitaryMatrix, v: UnitaryMatrix) -> float:
    """Independent computation path: sqrt((1/n) tr((u-v)*(u-v)))."""
    if u.n != v.n:
        raise ValueError("rank mismatch")
    diff = u.entries - v.entries
    return float(np.sqrt(max(np.trace(diff.conj().T @ diff).real / u.n, 0.0)))


def phase_aligned_hs(u: UnitaryMatrix, v: UnitaryMatrix) -> float:
    """min over unit phases c of hs(u, c*v), i.e. sqrt(2 - 2|tr~(u*v)|).

    Coincides with hs_distance exactly when the relative normalized trace
    tr~(u*v) is real and nonnegative -- in particular for permutation
    matrices, whose relative trace is the fraction of agreeing points.  The
    tensor-square amplification is insensitive to global phase, and its
    one-step distance law is exact in this quantity.
    """
    if u.n != v.n:
        raise ValueError("rank mismatch")
    t = abs(np.trace(u.entries.conj().T @ v.entries) / u.n)
    return float(np.sqrt(max(2.0 - 2.0 * t, 0.0)))


def uniform_distance(u: UnitaryMatrix, v: UnitaryMatrix) -> float:
    """Operator-norm distance; convenience only."""
    if u.n != v.n:
        raise ValueError("rank mismatch")
    return float(np.linalg.norm(u.entries - v.entries, ord=2))


def perm_matrix(s: Permutation) -> UnitaryMatrix:
    """0/1 unitary with a[i, s(i)] = 1; a group monomorphism satisfying
    hamming(s, t) = (1/2) * hs(perm_matrix(s), perm_matrix(t))^2."""
    m = np.zeros((s.n, s.n), dtype=np.complex128)
    for i, j in enumerate(s.images):
        m[i, j] = 1.0
    return UnitaryMatrix(m)


def random_unitary(n: int, rng: np.random.Generator) -> UnitaryMatrix:
    """Random unitary: complex Gaussian matrix orthonormalized column by
    column (modified Gram-Schmidt)."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q = np.zeros_like(z)
    for k in range(n):
        v = z[:, k].copy()
        for j in range(k):
            v -= (q[:, j].conj() @ v) * q[:, j]
        q[:, k] = v / np.linalg.norm(v)
    return UnitaryMatrix(q)


def random_orthogonal(n: int, rng: np.random.Generator) -> UnitaryMatrix:
    """Random real orthogonal matrix; a unitary whose relative traces with
    other real matrices are real, so the amplification recurrence applies to
    the plain Hilbert-Schmidt distance."""
    z = rng.normal(size=(n, n))
    q = np.zeros_like(z)
    for k in range(n):
        v = z[:, k].copy()
        for j in range(k):
            v -= (q[:, j] @ v) * q[:, j]
        q[:, k] = v / np.linalg.norm(v)
    return UnitaryMatrix(q.astype(np.complex128))


def sinfty_transposition_distance(a: dict[int, int], b: dict[int, int]) -> Fraction:
    """Left-invariant (non-normalized) distance sum(2^-i over i with
    a(i) != b(i)), for finitely supported bijections of {1, 2, ...}."""
    points = set(a) | set(b)
    total = Fraction(0)
    for i in points:
        if a.get(i, i) != b.get(i, i):
            total += Fraction(1, 2**i)
    return total


def _transposition(i: int, j: int) -> dict[int, int]:
    return {i: j, j: i}


def sinfty_demo(k: int) -> tuple[Fraction, Fraction]:
    """Distances witnessing the non-normality of the small-displacement
    subgroup of S_infinity under its left-invariant metric.

    Returns (d(x_k, e), d(y_k^-1 x_k y_k, e)) for x_k = (k, k+1) and
    y_k = (1, k); the first tends to 0 while the second stays >= 1/2.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    x = _transposition(k, k + 1)
    y = _transposition(1, k)

    def apply(f: dict[int, int], i: int) -> int:
        return f.get(i, i)

    # y is an involution, so the conjugate is i -> y(x(y(i)))
    points = set(x) | set(y)
    conj = {i: apply(y, apply(x, apply(y, i))) for i in points}
    conj = {i: j for i, j in conj.items() if i != j}
    identity: dict[int, int] = {}
    return (
        sinfty_transposition_distance(x, identity),
        sinfty_transposition_distance(conj, identity),
    )
