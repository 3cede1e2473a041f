"""Command-line front end.

Six subcommands over diagram files:

    analyze   thresholds epsilon and D plus the stable signature
    embed     run the full pipeline, emit a canonical JSON certificate
    verify    re-derive a stored certificate and compare byte-for-byte
    density   bracket-closure dimension trace at a rational parameter
    words     word counts per length and the faithfulness probe
    cycle     closed-form checks for one cycle-complement diagram

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad
input or usage.  Certificates are deterministic: the JSON body contains
no timing, no environment data, and all numbers in canonical form, so
the same diagram and ring always produce identical bytes.  Timings go
to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclecheck import verify_cycle_example
from .diagram import cycle_complement, parse_diagram, serialize_diagram
from .errors import CoxcertError, InputError
from .exactcore import Interval, QuadElem, quad_sign
from .gram import d_threshold, gram_pencil, threshold_report
from .liealg import bracket_closure_density
from .units import PellSolution, fundamental_pell
from .vinberg import EmbeddingCertificate, build_embedding_certificate
from .words import enumerate_by_length, faithfulness_probe

CERTIFICATE_FORMAT = "coxcert-embedding/1"


# -- canonical rendering ---------------------------------------------------


def _rat(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _quad(x: QuadElem) -> dict:
    return {"a": _rat(x.a), "b": _rat(x.b), "m": x.m}


def _interval(iv: Interval | None):
    if iv is None:
        return None
    return [_rat(iv.lo), _rat(iv.hi)]


def certificate_payload(cert: EmbeddingCertificate) -> dict:
    """The deterministic JSON body; everything exact, nothing environmental."""
    return {
        "format": CERTIFICATE_FORMAT,
        "diagram": {
            "n": cert.diagram.n,
            "edges": [list(e) for e in cert.diagram.sorted_edges()],
        },
        "m": cert.m,
        "thresholds": {
            "epsilon": _rat(cert.epsilon),
            "rho_interval": _interval(cert.rho_interval),
            "d_value": cert.d_value,
            "largest_root_interval": _interval(cert.largest_root_interval),
            "signature": list(cert.signature),
        },
        "unit": {
            "pell": {
                "m": cert.pell.m,
                "x": str(cert.pell.x),
                "y": str(cert.pell.y),
                "norm": cert.pell.norm,
            },
            "power": cert.unit_power,
            "alpha": _quad(cert.alpha),
            "tau_alpha": _quad(cert.galois.tau),
            "product": _rat(cert.galois.product),
        },
        "density_trace": list(cert.density_trace),
        "faithfulness_probe": {
            "passed": cert.faithfulness_passed,
            "max_len": cert.faithfulness_length,
            "t": _rat(cert.faithfulness_t),
        },
        "verdicts": cert.verdicts(),
        "passed": cert.passed,
    }


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# -- shared input handling -------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load_diagram(path: str):
    return parse_diagram(_read_text(path))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def _emit_timings(timings: dict) -> None:
    for stage, seconds in timings.items():
        print(f"# {stage}: {seconds:.3f}s", file=sys.stderr)


# -- subcommands -------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = _load_diagram(args.diagram)
    report = threshold_report(gram_pencil(g))
    print(f"vertices: {g.n}")
    print(f"edges: {len(g.edges)}")
    eps = report.epsilon
    print(f"epsilon: {_rat(eps)} (~{float(eps):.6g})")
    if report.rho_interval is not None:
        iv = report.rho_interval
        print(f"rho interval: [{_rat(iv.lo)}, {_rat(iv.hi)}] (~{float(iv.mid):.6g})")
    else:
        print("rho interval: none (no minor has a real root)")
    print(f"D: {report.d_value}")
    if report.largest_root_interval is not None:
        iv = report.largest_root_interval
        print(f"largest root interval: [{_rat(iv.lo)}, {_rat(iv.hi)}] (~{float(iv.mid):.6g})")
    else:
        print("largest root interval: none (det M_d has no real root)")
    print(f"signature at D: {report.signature}")
    return 0


def cmd_embed(args) -> int:
    g = _load_diagram(args.diagram)
    cert = build_embedding_certificate(g, m=args.m, probe_len=args.probe_len)
    text = canonical_json(certificate_payload(cert))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _emit_timings(cert.timings)
    for name, verdict in cert.verdicts().items():
        print(f"# {name}: {'pass' if verdict else 'FAIL'}", file=sys.stderr)
    return 0 if cert.passed else 1


def _recheck_unit_block(payload: dict) -> None:
    """Re-derive the unit data of a stored certificate from scratch.

    Independent of the byte comparison: the Pell solution is recomputed,
    alpha is rebuilt as the stated power, and the Galois bound is checked
    against the stated epsilon.  Any mismatch is a verification failure.
    """
    from .errors import VerificationFailed

    unit = payload["unit"]
    m = unit["pell"]["m"]
    pell = fundamental_pell(m)
    stated = PellSolution(m, int(unit["pell"]["x"]), int(unit["pell"]["y"]), unit["pell"]["norm"])
    if stated != pell:
        raise VerificationFailed(f"stored Pell solution {stated} is not fundamental for m={m}")
    alpha = QuadElem(Fraction(unit["alpha"]["a"]), Fraction(unit["alpha"]["b"]), m)
    if alpha != pell.unit() ** unit["power"]:
        raise VerificationFailed("stored alpha is not the stated power of the fundamental unit")
    tau = alpha.conjugate()
    if tau != QuadElem(Fraction(unit["tau_alpha"]["a"]), Fraction(unit["tau_alpha"]["b"]), m):
        raise VerificationFailed("stored tau(alpha) is not the conjugate of alpha")
    product = alpha * tau
    if not (product.is_rational() and product.as_fraction() == Fraction(unit["product"])):
        raise VerificationFailed("stored alpha * tau(alpha) does not match")
    epsilon = Fraction(payload["thresholds"]["epsilon"])
    if quad_sign(abs(tau) - epsilon) > 0:
        raise VerificationFailed("stored tau(alpha) violates the stated epsilon bound")


def cmd_verify(args) -> int:
    from .errors import VerificationFailed

    stored_text = _read_text(args.certificate)
    try:
        payload = json.loads(stored_text)
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != CERTIFICATE_FORMAT:
        raise InputError(f"not a {CERTIFICATE_FORMAT} certificate")

    g = _load_diagram(args.diagram)
    stored_diagram = payload.get("diagram", {})
    if stored_diagram.get("n") != g.n or [list(e) for e in g.sorted_edges()] != stored_diagram.get("edges"):
        print("FAIL: certificate was issued for a different diagram", file=sys.stderr)
        return 1

    try:
        _recheck_unit_block(payload)
    except (KeyError, ValueError) as exc:
        raise InputError(f"certificate is malformed: {exc!r}") from exc

    probe_len = payload["faithfulness_probe"]["max_len"]
    cert = build_embedding_certificate(g, m=payload["m"], probe_len=probe_len)
    fresh_text = canonical_json(certificate_payload(cert))
    _emit_timings(cert.timings)
    if fresh_text != stored_text:
        print("FAIL: certificate does not match a fresh derivation", file=sys.stderr)
        return 1
    if not cert.passed:
        print("FAIL: re-derived certificate has failing verdicts", file=sys.stderr)
        return 1
    print("certificate verified: byte-identical re-derivation, all checks pass")
    return 0


def cmd_density(args) -> int:
    g = _load_diagram(args.diagram)
    if args.d is not None:
        t = _parse_fraction(args.d)
    else:
        t = Fraction(d_threshold(gram_pencil(g))[0])
    cert = bracket_closure_density(g, t)
    print(f"t: {_rat(cert.t)}")
    print(f"seed pairs: {' '.join(f'({i},{j})' for i, j in cert.seed_pairs)}")
    print("dimension trace: " + " -> ".join(str(k) for k in cert.dimension_trace))
    print(f"final dimension: {cert.final_dimension} of {cert.full_dimension}")
    print("PASS" if cert.verdict else "FAIL")
    return 0 if cert.verdict else 1


def cmd_words(args) -> int:
    g = _load_diagram(args.diagram)
    if args.max_len < 0:
        raise InputError("--max-len must be nonnegative")
    counts = enumerate_by_length(g, args.max_len)
    print("word counts: " + " ".join(str(c) for c in counts))
    if args.at_d is not None:
        t = _parse_fraction(args.at_d)
    else:
        t = Fraction(d_threshold(gram_pencil(g))[0])
    report = faithfulness_probe(g, t, args.max_len)
    print("image counts: " + " ".join(str(c) for c in report.image_counts))
    print(f"t: {_rat(t)}")
    print(f"faithfulness probe: {'PASS' if report.injective else 'FAIL'}")
    return 0 if report.injective else 1


def cmd_cycle(args) -> int:
    report = verify_cycle_example(args.n)
    print(serialize_diagram(cycle_complement(args.n)), end="")
    print(f"D: {report.d_value}")
    print(f"circulant identity: {'pass' if report.identity_ok else 'FAIL'}")
    print(
        f"stable signature: {report.signature} expected {report.expected_signature}: "
        f"{'pass' if report.signature_ok else 'FAIL'}"
    )
    print(
        f"special eigenvalue {_rat(report.special_eigenvalue)} at t={_rat(report.t_checked)}: "
        f"{'exact root' if report.special_is_root else 'FAIL'}"
    )
    print(
        f"spectrum at t={_rat(report.t_checked)}: max deviation {report.max_deviation:.3g}: "
        f"{'pass' if report.spectrum_ok else 'FAIL'}"
    )
    print("PASS" if report.ok else "FAIL")
    return 0 if report.ok else 1


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxcert",
        description="Exact certification of reflection-group embeddings over real quadratic rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="thresholds epsilon and D for a diagram")
    p.add_argument("diagram", help="diagram file ('-' for stdin)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("embed", help="full pipeline, canonical JSON certificate")
    p.add_argument("diagram", help="diagram file ('-' for stdin)")
    p.add_argument("--m", type=int, default=2, help="squarefree radicand of the ring (default 2)")
    p.add_argument("--probe-len", type=int, default=4, help="faithfulness probe depth (default 4)")
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="re-derive a certificate and compare bytes")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("diagram", help="diagram file ('-' for stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("density", help="bracket-closure dimension trace")
    p.add_argument("diagram", help="diagram file ('-' for stdin)")
    p.add_argument("--d", help="rational parameter value (default: the threshold D)")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("words", help="word counts and the faithfulness probe")
    p.add_argument("diagram", help="diagram file ('-' for stdin)")
    p.add_argument("--max-len", type=int, default=8, help="maximum word length (default 8)")
    p.add_argument("--at-d", help="probe parameter (default: the threshold D)")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("cycle", help="closed-form checks for cycle_complement(n)")
    p.add_argument("--n", type=int, required=True, help="number of vertices (at least 5)")
    p.set_defaults(func=cmd_cycle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoxcertError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
