"""(F, eps)-almost homomorphisms, their defect/separation functionals, and
serializable certificates.

The defect of an assignment j on a ball is the worst multiplicativity
violation max d(j(g)j(h), j(gh)) over pairs whose product stays in the ball;
the separation is the least target distance between images of distinct ball
elements (uniform injectivity).  Both are exact rationals for symmetric-group
targets and floats for unitary targets.  Claims stored in a certificate are
advisory and always recomputed on verification.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backends import backend_from_descriptor
from .balls import BallTable, ball
from .config import ResourceLimits, default_limits
from .errors import MalformedCertificateError
from .metrics import (
    Permutation,
    UnitaryMatrix,
    hamming,
    hs_distance,
)
from .words import word_from_str, word_to_str

CERT_SCHEMA = "sofic-cert/v1"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_MALFORMED = 2


@dataclass(eq=False)
class AlmostHom:
    """A total assignment of target elements to the elements of a ball."""

    domain: BallTable
    target_kind: str  # "sym" | "unitary"
    target_n: int
    images: tuple

    def __post_init__(self) -> None:
        if self.target_kind not in ("sym", "unitary"):
            raise ValueError(f"unknown target kind {self.target_kind!r}")
        if len(self.images) != len(self.domain):
            raise ValueError("assignment must be total on the ball")
        for img in self.images:
            expected = Permutation if self.target_kind == "sym" else UnitaryMatrix
            if not isinstance(img, expected):
                raise ValueError(f"image {img!r} has wrong target type")
            if img.n != self.target_n:
                raise ValueError("image degree/rank mismatch")
        e = self.images[0]
        if self.target_kind == "sym":
            if e != Permutation.identity(self.target_n):
                raise ValueError("ball identity must map to the identity permutation")
        else:
            if np.max(np.abs(e.entries - np.eye(self.target_n))) > 1e-9:
                raise ValueError("ball identity must map to the identity matrix")

    def distance(self, a, b):
        if self.target_kind == "sym":
            return hamming(a, b)
        return hs_distance(a, b)


def defect_witness(hom: AlmostHom):
    """(defect, (g_index, h_index)) for the worst-violated product pair;
    the witness is None when the ball records no products (singleton ball)."""
    worst = Fraction(0) if hom.target_kind == "sym" else 0.0
    witness = None
    for (i, j), k in hom.domain.products.items():
        d = hom.distance(hom.images[i] * hom.images[j], hom.images[k])
        if witness is None or d > worst:
            worst, witness = d, (i, j)
    return worst, witness


def defect(hom: AlmostHom):
    return defect_witness(hom)[0]


def separation_witness(hom: AlmostHom):
    """(separation, (g_index, h_index)) for the closest pair of images."""
    if len(hom.domain) < 2:
        raise ValueError("separation requires a ball with at least 2 elements")
    best = None
    witness = None
    for i in range(len(hom.images)):
        for j in range(i + 1, len(hom.images)):
            d = hom.distance(hom.images[i], hom.images[j])
            if best is None or d < best:
                best, witness = d, (i, j)
    return best, witness


def separation(hom: AlmostHom):
    return separation_witness(hom)[0]


@dataclass(eq=False)
class Certificate:
    """An almost homomorphism together with its (advisory) measured claims."""

    hom: AlmostHom
    claimed_defect: float
    claimed_separation: float
    provenance: str = ""


def measured_certificate(hom: AlmostHom, provenance: str = "") -> Certificate:
    return Certificate(
        hom=hom,
        claimed_defect=float(defect(hom)),
        claimed_separation=float(separation(hom)),
        provenance=provenance,
    )


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    defect: float
    separation: float
    eps: float
    delta: float
    worst_defect_pair: tuple[str, str] | None
    worst_separation_pair: tuple[str, str] | None

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.passed else EXIT_FAIL

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "defect": self.defect,
            "separation": self.separation,
            "eps": self.eps,
            "delta": self.delta,
            "worst_defect_pair": list(self.worst_defect_pair) if self.worst_defect_pair else None,
            "worst_separation_pair": list(self.worst_separation_pair)
            if self.worst_separation_pair
            else None,
        }


def verify(cert: Certificate, eps: float, delta: float) -> VerificationReport:
    """Recompute defect and separation; pass iff defect < eps and
    separation >= delta.  Claims inside the certificate are ignored."""
    if eps <= 0:
        raise ValueError("eps must be > 0")
    if delta < 0:
        raise ValueError("delta must be >= 0")
    hom = cert.hom
    dft, dft_pair = defect_witness(hom)
    sep, sep_pair = separation_witness(hom)
    alphabet = hom.domain.backend.alphabet

    def pair_words(pair):
        if pair is None:
            return None
        return tuple(word_to_str(alphabet, hom.domain.words[i]) for i in pair)

    return VerificationReport(
        passed=bool(dft < eps and sep >= delta),
        defect=float(dft),
        separation=float(sep),
        eps=eps,
        delta=delta,
        worst_defect_pair=pair_words(dft_pair),
        worst_separation_pair=pair_words(sep_pair),
    )


def _image_to_json(hom: AlmostHom, img) -> list:
    if hom.target_kind == "sym":
        return list(img.images)
    flat = img.entries.reshape(-1)
    return [[float(z.real), float(z.imag)] for z in flat]


def certificate_to_json(cert: Certificate) -> dict:
    hom = cert.hom
    alphabet = hom.domain.backend.alphabet
    mapping = {}
    for idx, word in enumerate(hom.domain.words):
        mapping[word_to_str(alphabet, word)] = _image_to_json(hom, hom.images[idx])
    return {
        "schema": CERT_SCHEMA,
        "group": hom.domain.backend.descriptor(),
        "ball_radius": hom.domain.radius,
        "target": {"kind": hom.target_kind, "n": hom.target_n},
        "map": mapping,
        "claimed_defect": cert.claimed_defect,
        "claimed_separation": cert.claimed_separation,
        "provenance": cert.provenance,
    }


def _image_from_json(kind: str, n: int, raw) -> Permutation | UnitaryMatrix:
    if kind == "sym":
        if not isinstance(raw, list) or len(raw) != n:
            raise MalformedCertificateError(f"permutation image must list {n} points")
        try:
            return Permutation(tuple(int(x) for x in raw))
        except (TypeError, ValueError) as exc:
            raise MalformedCertificateError(f"bad permutation image: {exc}") from exc
    if not isinstance(raw, list) or len(raw) != n * n:
        raise MalformedCertificateError(f"matrix image must list {n * n} entries")
    try:
        flat = np.array([complex(re, im) for re, im in raw], dtype=np.complex128)
        return UnitaryMatrix(flat.reshape(n, n))
    except (TypeError, ValueError) as exc:
        raise MalformedCertificateError(f"bad unitary image: {exc}") from exc


def certificate_from_json(doc: dict, limits: ResourceLimits | None = None) -> Certificate:
    """Parse and structurally validate a certificate document.

    Raises MalformedCertificateError on any structural violation; this is a
    different failure mode than verification failure.
    """
    limits = limits or default_limits()
    try:
        if doc.get("schema") != CERT_SCHEMA:
            raise MalformedCertificateError(f"unknown schema {doc.get('schema')!r}")
        backend = backend_from_descriptor(doc["group"])
        radius = int(doc["ball_radius"])
        target = doc["target"]
        kind, n = target["kind"], int(target["n"])
        mapping = doc["map"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCertificateError(f"bad certificate structure: {exc}") from exc
    domain = ball(backend, radius, limits)
    images: list = [None] * len(domain)
    alphabet = backend.alphabet
    for key, raw in mapping.items():
        try:
            elem = backend.normal_form(word_from_str(alphabet, key))
        except ValueError as exc:
            raise MalformedCertificateError(f"bad map key {key!r}: {exc}") from exc
        idx = domain.index.get(elem)
        if idx is None:
            raise MalformedCertificateError(f"map key {key!r} lies outside the ball")
        images[idx] = _image_from_json(kind, n, raw)
    if any(img is None for img in images):
        raise MalformedCertificateError("map does not cover the whole ball")
    try:
        hom = AlmostHom(domain=domain, target_kind=kind, target_n=n, images=tuple(images))
    except ValueError as exc:
        raise MalformedCertificateError(str(exc)) from exc
    return Certificate(
        hom=hom,
        claimed_defect=float(doc.get("claimed_defect", 0.0)),
        claimed_separation=float(doc.get("claimed_separation", 0.0)),
        provenance=str(doc.get("provenance", "")),
    )


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w") as fh:
        json.dump(certificate_to_json(cert), fh, indent=1)
        fh.write("\n")


def load_certificate(path, limits: ResourceLimits | None = None) -> Certificate:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedCertificateError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedCertificateError("certificate document must be a JSON object")
    return certificate_from_json(doc, limits)
