"""Command-line surface.

Exit codes: 0 success/pass, 1 verification failure (or infeasible matching),
2 usage errors, I/O failures, and malformed inputs.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .almosthom import (
    EXIT_FAIL,
    EXIT_MALFORMED,
    EXIT_PASS,
    load_certificate,
    measured_certificate,
    save_certificate,
    verify,
)
from .amplify import amplification_report
from .amenability import (
    folner_box,
    generator_folner_defect,
    paradox_verify,
    reiter_norm,
)
from .backends import (
    GroupBackend,
    finite_backend_from_json,
    free_backend,
    heisenberg_backend,
    zpower_backend,
)
from .balls import ball
from .config import default_limits
from .constructions import (
    amplify_certificate,
    folner_certificate,
    free_sofic_certificate,
    hyperlinear_certificate,
    lef_to_sofic,
)
from .errors import MalformedCertificateError, SoficlabError
from .graphs import ColoredGraph, cert_to_graph, local_match_fraction
from .matching import (
    BipartiteGraph,
    DeficiencyWitness,
    paradox_from_matching,
    two_one_matching,
)
from .metrics import random_unitary, sinfty_demo

FAMILIES = ("z", "z2", "heisenberg", "free", "finite")


def _backend_for(args) -> GroupBackend:
    family = args.family
    if family == "z":
        return zpower_backend(1)
    if family == "z2":
        return zpower_backend(2)
    if family == "heisenberg":
        return heisenberg_backend()
    if family == "free":
        return free_backend(getattr(args, "rank", 2) or 2)
    if family == "finite":
        if not getattr(args, "table", None):
            raise SoficlabError("--table required for the finite family")
        with open(args.table) as fh:
            return finite_backend_from_json(json.load(fh))
    raise SoficlabError(f"unknown family {family!r}")


def _emit(doc, path=None) -> None:
    text = json.dumps(doc, indent=1, default=str)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_ball(args) -> int:
    backend = _backend_for(args)
    table = ball(backend, args.radius, default_limits())
    by_length = {}
    for length in table.lengths:
        by_length[length] = by_length.get(length, 0) + 1
    _emit(
        {
            "backend": backend.kind,
            "radius": args.radius,
            "elements": len(table),
            "by_length": by_length,
            "products_defined": len(table.products),
        },
        args.output,
    )
    return EXIT_PASS


def cmd_certify(args) -> int:
    limits = default_limits()
    if args.family == "free":
        cert = free_sofic_certificate(args.radius, limits)
    elif args.family == "finite":
        backend = _backend_for(args)
        domain = ball(backend, args.radius, limits)
        identity_mono = {i: g for i, g in enumerate(domain.elements)}
        hom = lef_to_sofic(domain, backend, identity_mono)
        cert = measured_certificate(hom, provenance=f"finite regular rep, radius={args.radius}")
    else:
        if args.folner is None:
            raise SoficlabError("--folner L required for amenable families")
        backend = _backend_for(args)
        domain = ball(backend, args.radius, limits)
        cert = folner_certificate(domain, folner_box(backend, args.folner))
    save_certificate(cert, args.output)
    print(
        f"certificate: defect={cert.claimed_defect:g} "
        f"separation={cert.claimed_separation:g} target_n={cert.hom.target_n}",
        file=sys.stderr,
    )
    return EXIT_PASS


def cmd_verify(args) -> int:
    cert = load_certificate(args.certificate)
    report = verify(cert, args.eps, args.delta)
    _emit(report.to_json(), args.output)
    return report.exit_code


def cmd_amplify(args) -> int:
    cert = load_certificate(args.certificate)
    out = amplify_certificate(cert, args.times, default_limits())
    save_certificate(out, args.output)
    print(
        f"amplified x{args.times}: rank {cert.hom.target_n} -> {out.hom.target_n}, "
        f"separation {out.claimed_separation:g}",
        file=sys.stderr,
    )
    return EXIT_PASS


def cmd_to_unitary(args) -> int:
    cert = load_certificate(args.certificate)
    save_certificate(hyperlinear_certificate(cert), args.output)
    return EXIT_PASS


def cmd_graph(args) -> int:
    cert = load_certificate(args.certificate)
    graph = cert_to_graph(cert.hom)
    if args.output.endswith(".dot"):
        with open(args.output, "w") as fh:
            fh.write(graph.to_dot())
    else:
        _emit(graph.to_json(), args.output)
    return EXIT_PASS


def cmd_match_fraction(args) -> int:
    with open(args.graph) as fh:
        graph = ColoredGraph.from_json(json.load(fh))
    backend = _backend_for(args)
    reference = ball(backend, args.radius, default_limits())
    report = local_match_fraction(graph, args.radius, reference)
    _emit(
        {
            "radius": args.radius,
            "matched": report.matched_count,
            "total": report.total_count,
            "fraction": float(report.fraction),
            "sample_failures": [list(f) for f in report.sample_failures],
        },
        args.output,
    )
    return EXIT_PASS


def cmd_folner(args) -> int:
    backend = _backend_for(args)
    phi = folner_box(backend, args.side)
    defect = generator_folner_defect(phi)
    reiter = max(
        reiter_norm(phi, backend.letter(s))
        for s in backend.alphabet.signed_letters()
    )
    _emit(
        {
            "backend": backend.kind,
            "side": args.side,
            "size": len(phi),
            "generator_defect": float(defect),
            "reiter_norm_max": float(reiter),
        },
        args.output,
    )
    return EXIT_PASS


def cmd_hall(args) -> int:
    with open(args.graph) as fh:
        graph = BipartiteGraph.from_json(json.load(fh))
    outcome = two_one_matching(graph)
    if isinstance(outcome, DeficiencyWitness):
        _emit(
            {
                "feasible": False,
                "witness": list(outcome.left_subset),
                "neighbourhood_size": outcome.neighbourhood_size,
            },
            args.output,
        )
        return EXIT_FAIL
    _emit({"feasible": True, "i": list(outcome.i), "j": list(outcome.j)}, args.output)
    return EXIT_PASS


def cmd_paradox(args) -> int:
    if args.spread:
        report = paradox_from_matching(args.radius, args.spread)
        _emit(
            {
                "radius": report.radius,
                "spread": report.spread,
                "feasible": report.feasible,
                "pieces": {f"{s}|{t}": c for (s, t), c in report.pieces.items()},
                "translated_disjoint": report.translated_disjoint,
                "leakage": report.leakage,
                "witness": list(report.witness.left_subset) if report.witness else None,
            },
            args.output,
        )
        return EXIT_PASS if report.feasible else EXIT_FAIL
    report = paradox_verify(args.radius)
    _emit(
        {
            "radius": report.radius,
            "piece_sizes": report.piece_sizes,
            "a_identity_holds": report.a_identity_holds,
            "b_identity_holds": report.b_identity_holds,
            "partition_ok": report.partition_ok,
        },
        args.output,
    )
    return EXIT_PASS if report.all_ok else EXIT_FAIL


def cmd_demo(args) -> int:
    if args.what == "sinfty":
        dx, dconj = sinfty_demo(args.k)
        print(f"{float(dx)}")
        print(f"{float(dconj)}")
        return EXIT_PASS
    if args.what == "amplify":
        rng = np.random.default_rng(args.seed)
        pairs = [
            (random_unitary(args.rank, rng), random_unitary(args.rank, rng))
            for _ in range(args.pairs)
        ]
        _emit(amplification_report(pairs).to_json(), args.output)
        return EXIT_PASS
    raise SoficlabError(f"unknown demo {args.what!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soficlab",
        description="Finite metric approximations of countable groups",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p, required=True):
        p.add_argument("--family", choices=FAMILIES, required=required)
        p.add_argument("--rank", type=int, default=2, help="rank for the free family")
        p.add_argument("--table", help="finite group table JSON (finite family)")

    p = sub.add_parser("ball", help="enumerate a word-metric ball and print stats")
    add_family(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("certify", help="construct a sofic certificate")
    add_family(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--folner", type=int, help="Folner box side for amenable families")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="verify a certificate against eps/delta")
    p.add_argument("certificate")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("amplify", help="tensor-square amplify a unitary certificate")
    p.add_argument("certificate")
    p.add_argument("--times", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_amplify)

    p = sub.add_parser("to-unitary", help="convert a sym certificate to a unitary one")
    p.add_argument("certificate")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_to_unitary)

    p = sub.add_parser("graph", help="export a certificate as a coloured graph")
    p.add_argument("certificate")
    p.add_argument("-o", "--output", required=True, help=".json or .dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("match-fraction", help="locally-correct vertex fraction of a graph")
    p.add_argument("graph")
    add_family(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_match_fraction)

    p = sub.add_parser("folner", help="Folner box defect and Reiter norm")
    add_family(p)
    p.add_argument("-L", "--side", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_folner)

    p = sub.add_parser("hall", help="(2,1)-matching of a bipartite graph JSON")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("paradox", help="paradoxical decomposition checks")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--spread", type=int, help="run the matching-based construction with B_{N+k}")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_paradox)

    p = sub.add_parser("demo", help="built-in demonstrations")
    p.add_argument("what", choices=("sinfty", "amplify"))
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--pairs", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedCertificateError as exc:
        print(f"malformed: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (OSError, json.JSONDecodeError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (SoficlabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
