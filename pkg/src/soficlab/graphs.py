"""Edge-coloured graph formulation of soficity.

A coloured graph stores, per positive generator (colour), a successor map on
its vertices: edge m -> k with colour v iff successor_v(m) = k.  Inverse
colours are implicit as reversed edges.  Cayley balls give partial successor
maps at the boundary; graphs built from symmetric-group certificates carry
full permutations.

Local correctness at a vertex is decided by word traversal rather than
generic graph isomorphism: per-colour out-degree at most 1 makes rooted
coloured balls rigid, so a vertex m has a correct N-ball exactly when
following every reduced word of length <= N from m is defined and collides
precisely as the reference group elements do.
"""

from dataclasses import dataclass
from fractions import Fraction

from .almosthom import AlmostHom
from .balls import BallTable, ball
from .backends import free_backend
from .config import ResourceLimits
from .errors import BackendMismatchError
from .metrics import Permutation
from .words import Word


@dataclass(eq=False)
class ColoredGraph:
    """vertex_count vertices; per colour a successor list (entry None where
    the edge is missing).  total is False for externally loaded partial
    graphs."""

    vertex_count: int
    colors: tuple[str, ...]
    successors: dict[str, tuple[int | None, ...]]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        if set(self.successors) != set(self.colors):
            raise ValueError("successor map must cover exactly the colours")
        for color, succ in self.successors.items():
            if len(succ) != self.vertex_count:
                raise ValueError(f"colour {color!r} successor list has wrong length")
            for v in succ:
                if v is not None and not (0 <= v < self.vertex_count):
                    raise ValueError(f"colour {color!r} successor out of range")

    @property
    def total(self) -> bool:
        return all(
            None not in succ and len(set(succ)) == self.vertex_count
            for succ in self.successors.values()
        )

    def predecessors(self, color: str) -> tuple[int | None, ...]:
        pred: list[int | None] = [None] * self.vertex_count
        for m, k in enumerate(self.successors[color]):
            if k is not None:
                pred[k] = m if pred[k] is None else pred[k]
        return tuple(pred)

    def to_json(self) -> dict:
        return {
            "vertexCount": self.vertex_count,
            "colors": list(self.colors),
            "successors": {
                c: [v for v in succ] for c, succ in self.successors.items()
            },
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ColoredGraph":
        return cls(
            vertex_count=doc["vertexCount"],
            colors=tuple(doc["colors"]),
            successors={
                c: tuple(v if v is not None else None for v in succ)
                for c, succ in doc["successors"].items()
            },
        )

    def to_dot(self) -> str:
        palette = ["red", "blue", "green", "orange", "purple", "brown"]
        lines = ["digraph colored {"]
        for ci, color in enumerate(self.colors):
            tint = palette[ci % len(palette)]
            for m, k in enumerate(self.successors[color]):
                if k is not None:
                    lines.append(f'  {m} -> {k} [label="{color}", color={tint}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LocalMatchReport:
    radius: int
    matched_count: int
    total_count: int
    sample_failures: tuple[tuple[int, str], ...]

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.matched_count, self.total_count)


def cayley_ball_graph(backend, radius: int,
                      limits: ResourceLimits | None = None) -> ColoredGraph:
    """Coloured Cayley ball: vertices are ball elements, a colour-v edge
    g -> gv whenever both endpoints lie in the ball (right multiplication)."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    table = ball(backend, radius, limits)
    colors = tuple(backend.alphabet.names)
    successors = {}
    for s in range(1, backend.rank + 1):
        gen = backend.letter(s)
        succ = tuple(
            table.index.get(backend.multiply(g, gen)) for g in table.elements
        )
        successors[colors[s - 1]] = succ
    return ColoredGraph(vertex_count=len(table), colors=colors, successors=successors)


def cert_to_graph(hom: AlmostHom) -> ColoredGraph:
    """Finite clone of the group from a symmetric-group certificate: vertices
    {0,...,n-1} and successor_v = the image permutation of generator v."""
    if hom.target_kind != "sym":
        raise ValueError("sym target required")
    backend = hom.domain.backend
    if hom.domain.radius < 1:
        raise ValueError("ball must contain the generators (radius >= 1)")
    colors = tuple(backend.alphabet.names)
    successors = {}
    for s in range(1, backend.rank + 1):
        idx = hom.domain.index[backend.letter(s)]
        successors[colors[s - 1]] = tuple(hom.images[idx].images)
    return ColoredGraph(vertex_count=hom.target_n, colors=colors, successors=successors)


def _traverse(graph: ColoredGraph, preds: dict[str, tuple[int | None, ...]],
              start: int, word: Word) -> int | None:
    v = start
    for s in word:
        color = graph.colors[abs(s) - 1]
        step = graph.successors[color][v] if s > 0 else preds[color][v]
        if step is None:
            return None
        v = step
    return v


def local_match_fraction(graph: ColoredGraph, radius: int,
                         reference: BallTable,
                         limits: ResourceLimits | None = None,
                         max_failures: int = 10) -> LocalMatchReport:
    """Fraction of vertices whose N-ball is colour-isomorphic to the
    reference Cayley ball.

    A vertex matches iff every reduced word of length <= N can be followed
    from it (inverse colours traverse edges backward) and two words land on
    the same vertex exactly when they are equal as reference elements.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    backend = reference.backend
    if tuple(backend.alphabet.names) != tuple(graph.colors):
        raise BackendMismatchError("graph colours do not match the reference alphabet")
    if reference.radius != radius:
        raise ValueError("reference ball radius must equal the requested radius")
    free_words = ball(free_backend(backend.rank), radius, limits).elements
    targets = [backend.normal_form(w) for w in free_words]
    preds = {c: graph.predecessors(c) for c in graph.colors}
    matched = 0
    failures: list[tuple[int, str]] = []
    for m in range(graph.vertex_count):
        landing: dict = {}
        reason = None
        for w, elem in zip(free_words, targets):
            v = _traverse(graph, preds, m, w)
            if v is None:
                reason = f"undefined traversal for word {w}"
                break
            if elem in landing:
                if landing[elem] != v:
                    reason = f"equal elements separate at word {w}"
                    break
            else:
                landing[elem] = v
        if reason is None and len(set(landing.values())) != len(landing):
            reason = "distinct elements collide"
        if reason is None:
            matched += 1
        elif len(failures) < max_failures:
            failures.append((m, reason))
    return LocalMatchReport(
        radius=radius,
        matched_count=matched,
        total_count=graph.vertex_count,
        sample_failures=tuple(failures),
    )


def graph_to_almosthom(graph: ColoredGraph, reference: BallTable) -> AlmostHom:
    """Extract a symmetric-group assignment from a coloured graph: each
    reference element acts by composing successor permutations along its
    canonical word.

    Partial successor maps are extended to permutations by canonical-order
    fill (unmatched vertices paired in increasing order); extraction from a
    certificate-grade (total) graph is exact.
    """
    backend = reference.backend
    if tuple(backend.alphabet.names) != tuple(graph.colors):
        raise BackendMismatchError("graph colours do not match the reference alphabet")
    n = graph.vertex_count
    color_perm: dict[str, Permutation] = {}
    for color in graph.colors:
        succ = graph.successors[color]
        assignment: list[int | None] = list(succ)
        taken = set(v for v in succ if v is not None)
        if len(taken) != sum(1 for v in succ if v is not None):
            raise ValueError(f"colour {color!r} successor map is not injective")
        fill = iter(v for v in range(n) if v not in taken)
        for m in range(n):
            if assignment[m] is None:
                assignment[m] = next(fill)
        color_perm[color] = Permutation(tuple(assignment))
    inv_perm = {c: p.inverse() for c, p in color_perm.items()}
    images = []
    for word in reference.words:
        perm = Permutation.identity(n)
        for s in word:
            color = graph.colors[abs(s) - 1]
            perm = perm * (color_perm[color] if s > 0 else inv_perm[color])
        images.append(perm)
    return AlmostHom(domain=reference, target_kind="sym", target_n=n,
                     images=tuple(images))
