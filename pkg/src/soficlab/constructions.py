"""Certificate constructions: Folner sets to symmetric-group certificates,
local monomorphisms through regular representations, free-group certificates
via mod-p matrix images, the sofic-to-hyperlinear conversion, certificate
amplification, and finite-stage approximation sequences.
"""

from dataclasses import dataclass

from .almosthom import AlmostHom, Certificate, defect, measured_certificate, separation
from .amplify import amplified_distance, tensor_square
from .backends import FiniteBackend, free_backend
from .balls import BallTable, ball
from .config import ResourceLimits, default_limits
from .errors import BackendMismatchError, ResourceCapError
from .amenability import FolnerSet
from .metrics import Permutation, perm_matrix
from .sl2 import lef_witness_free, mat_mul_mod, sl2_word_image
from .words import word_to_str


def regular_representation(backend: FiniteBackend) -> list[Permutation]:
    """Right-translation action of a finite group on itself: element g acts
    as i -> index(element_i * g).  An injective homomorphism under the
    left-to-right permutation product, with every non-identity image
    fixed-point-free."""
    m = backend.order
    return [
        Permutation(tuple(int(backend.table[i, g]) for i in range(m)))
        for g in range(m)
    ]


def folner_to_sofic(domain: BallTable, phi: FolnerSet) -> AlmostHom:
    """Extend, for each ball element g, the partial right-translation
    x -> x*g on phi to a self-bijection of phi.

    Unmatched domain points are paired with unmatched codomain points in
    canonical element order.  For Z intervals this fill reconstitutes exact
    cyclic shifts, so those certificates have defect 0; in higher rank the
    fill is still deterministic but boundary wrapping is inexact, leaving a
    defect on the order of the box's surface-to-volume ratio.
    """
    if domain.backend != phi.backend:
        raise BackendMismatchError("ball and Folner set use different backends")
    backend = phi.backend
    n = len(phi.elements)
    position = {x: i for i, x in enumerate(phi.elements)}
    images = []
    for g in domain.elements:
        assignment: list[int | None] = [None] * n
        taken = [False] * n
        for i, x in enumerate(phi.elements):
            j = position.get(backend.multiply(x, g))
            if j is not None:
                assignment[i] = j
                taken[j] = True
        free_targets = iter(j for j in range(n) if not taken[j])
        for i in range(n):
            if assignment[i] is None:
                assignment[i] = next(free_targets)
        images.append(Permutation(tuple(assignment)))
    return AlmostHom(domain=domain, target_kind="sym", target_n=n, images=tuple(images))


def folner_certificate(domain: BallTable, phi: FolnerSet) -> Certificate:
    hom = folner_to_sofic(domain, phi)
    return measured_certificate(
        hom,
        provenance=f"folner: backend={domain.backend.kind} |phi|={len(phi)} "
        f"radius={domain.radius}",
    )


def lef_to_sofic(domain: BallTable, target: FiniteBackend,
                 local_mono: dict[int, int]) -> AlmostHom:
    """Compose a local monomorphism (ball index -> finite-group index) with
    the regular representation of the target.

    The map must be injective and multiplicative on all products defined in
    the ball; violations are rejected with a counterexample pair.  The result
    has defect exactly 0 and separation exactly 1.
    """
    n = len(domain)
    if set(local_mono) != set(range(n)):
        raise ValueError("local monomorphism must be total on the ball")
    values = [local_mono[i] for i in range(n)]
    if len(set(values)) != n:
        seen: dict[int, int] = {}
        for i, v in enumerate(values):
            if v in seen:
                raise ValueError(
                    f"not injective: ball elements {seen[v]} and {i} share image {v}"
                )
            seen[v] = i
    if values[0] != target.identity_index:
        raise ValueError("ball identity must map to the target identity")
    for (i, j), k in domain.products.items():
        if target.multiply(values[i], values[j]) != values[k]:
            alphabet = domain.backend.alphabet
            raise ValueError(
                "not partially multiplicative at pair "
                f"({word_to_str(alphabet, domain.words[i])!r}, "
                f"{word_to_str(alphabet, domain.words[j])!r})"
            )
    rep = regular_representation(target)
    images = tuple(rep[v] for v in values)
    return AlmostHom(domain=domain, target_kind="sym", target_n=target.order,
                     images=images)


def sl2_elements(p: int) -> list:
    """All of SL(2, Z_p) in lexicographic entry order; p(p^2 - 1) matrices."""
    return [
        ((a, b), (c, d))
        for a in range(p) for b in range(p) for c in range(p) for d in range(p)
        if (a * d - b * c) % p == 1
    ]


def sl2_finite_backend(p: int) -> FiniteBackend:
    """SL(2, Z_p) as an explicit table of order p(p^2 - 1), with the mod-p
    word-evaluation generators marked."""
    elements = sl2_elements(p)
    index = {m: i for i, m in enumerate(elements)}
    m = len(elements)
    table = [[index[mat_mul_mod(x, y, p)] for y in elements] for x in elements]
    gen_a = index[sl2_word_image((1,), p)]
    gen_b = index[sl2_word_image((2,), p)]
    return FiniteBackend(table, index[((1 % p, 0), (0, 1 % p))],
                         generators=[gen_a, gen_b], names=("A", "B"))


def free_sofic_certificate(radius: int, limits: ResourceLimits | None = None) -> Certificate:
    """Exact sofic certificate for the rank-2 free group: evaluate ball words
    into SL(2, Z_p) for the least injective prime p, then act by right
    translations.  Defect 0, separation 1."""
    limits = limits or default_limits()
    p = lef_witness_free(radius, limits)
    order = p * (p * p - 1)
    if order > limits.ball_cap:
        raise ResourceCapError(f"|SL(2,Z_{p})| = {order} exceeds the cap")
    domain = ball(free_backend(2), radius, limits)
    target = sl2_finite_backend(p)
    matrix_index = {m: i for i, m in enumerate(sl2_elements(p))}
    local_mono = {
        i: matrix_index[sl2_word_image(w, p)] for i, w in enumerate(domain.words)
    }
    hom = lef_to_sofic(domain, target, local_mono)
    return measured_certificate(
        hom, provenance=f"free_sofic: p={p} order={order} radius={radius}"
    )


def sofic_to_hyperlinear(hom: AlmostHom) -> AlmostHom:
    """Push a symmetric-group certificate through the permutation-matrix
    embedding.  Pairwise distances obey hamming = (1/2) hs^2, so a
    separation s becomes sqrt(2 s) and a defect d becomes at most sqrt(2 d)."""
    if hom.target_kind != "sym":
        raise ValueError("sym target required")
    return AlmostHom(
        domain=hom.domain,
        target_kind="unitary",
        target_n=hom.target_n,
        images=tuple(perm_matrix(p) for p in hom.images),
    )


def hyperlinear_certificate(cert: Certificate) -> Certificate:
    hom = sofic_to_hyperlinear(cert.hom)
    return measured_certificate(
        hom, provenance=cert.provenance + " | to-unitary"
    )


def amplify_certificate(cert: Certificate, times: int,
                        limits: ResourceLimits | None = None) -> Certificate:
    """Pass every image through the tensor square `times` times.  Pairwise
    separations follow the iterated distance map; the rank grows to
    n^(2^k) and is checked against the rank cap up front."""
    if times < 1:
        raise ValueError("times must be >= 1")
    hom = cert.hom
    if hom.target_kind != "unitary":
        raise ValueError("unitary target required")
    limits = limits or default_limits()
    final_rank = hom.target_n ** (2 ** times)
    if final_rank > limits.rank_cap:
        raise ResourceCapError(
            f"amplified rank {final_rank} exceeds cap {limits.rank_cap}"
        )
    images = list(hom.images)
    for _ in range(times):
        images = [tensor_square(u) for u in images]
    out = AlmostHom(domain=hom.domain, target_kind="unitary",
                    target_n=final_rank, images=tuple(images))
    return measured_certificate(
        out, provenance=cert.provenance + f" | amplified x{times}"
    )


def predicted_amplified(d: float, times: int) -> float:
    for _ in range(times):
        d = amplified_distance(d)
    return d


@dataclass(eq=False)
class ApproximationSequence:
    """Certificates over one backend with strictly growing ball radii and a
    common separation floor."""

    certificates: tuple[Certificate, ...]
    separation_floor: float

    def __post_init__(self) -> None:
        if not self.certificates:
            raise ValueError("sequence must be nonempty")
        radii = [c.hom.domain.radius for c in self.certificates]
        if any(a >= b for a, b in zip(radii, radii[1:])):
            raise ValueError("ball radii must be strictly increasing")
        descriptors = {str(c.hom.domain.backend.descriptor()) for c in self.certificates}
        if len(descriptors) != 1:
            raise BackendMismatchError("sequence must use a single backend")
        if self.separation_floor <= 0:
            raise ValueError("separation floor must be positive")


@dataclass(frozen=True)
class SequenceReport:
    passed: bool
    defects: tuple[float, ...]
    separations: tuple[float, ...]
    schedule: tuple[float, ...]
    first_failure: int | None


def check_sequence(seq: ApproximationSequence, schedule: list[float]) -> SequenceReport:
    """Pass iff every stage's recomputed defect sits below its (decreasing)
    schedule entry and every separation clears the floor."""
    if len(schedule) != len(seq.certificates):
        raise ValueError("schedule length must match the sequence")
    if any(a <= b for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly decreasing")
    defects = []
    separations = []
    first_failure = None
    for k, cert in enumerate(seq.certificates):
        d = float(defect(cert.hom))
        s = float(separation(cert.hom))
        defects.append(d)
        separations.append(s)
        if (d > schedule[k] or s < seq.separation_floor) and first_failure is None:
            first_failure = k
    return SequenceReport(
        passed=first_failure is None,
        defects=tuple(defects),
        separations=tuple(separations),
        schedule=tuple(schedule),
        first_failure=first_failure,
    )
