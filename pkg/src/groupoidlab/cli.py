"""Command-line interface.

Subcommands operate on groupoid documents (JSON) or built-in models and print
JSON to stdout.  Exit codes: 0 on success, 1 when the input parses but fails a
semantic requirement (axiom violations, failed checks, wrong category of
input), 2 when the input cannot be parsed or the invocation is malformed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import abelian, algebra, checks, core, document, generators, groups, quotients

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_INPUT = 2


class CliError(Exception):
    """Carries the exit code and a JSON payload describing what went wrong."""

    def __init__(self, code: int, payload: dict):
        super().__init__(payload.get("error", "error"))
        self.code = code
        self.payload = payload


# --- input handling ---------------------------------------------------------

def _model(kind: str, seed: int, budget: int) -> core.FiniteGroupoid:
    if kind == "random":
        return generators.random_groupoid(seed, budget)
    if kind in generators.NAMED_MODELS:
        return generators.NAMED_MODELS[kind]()
    if kind.startswith("pair:"):
        return generators.pair_groupoid(_positive(kind.split(":", 1)[1], kind))
    if kind.startswith("trivial:"):
        return generators.trivial_groupoid(_positive(kind.split(":", 1)[1], kind))
    if kind.startswith("group:"):
        name = kind.split(":", 1)[1]
        builder = groups.LIBRARY_BUILDERS.get(name)
        if builder is None:
            raise CliError(EXIT_INPUT, {
                "error": f"unknown group {name!r}",
                "known": sorted(groups.LIBRARY_BUILDERS)})
        return generators.group_bundle([("p", builder())])
    raise CliError(EXIT_INPUT, {
        "error": f"unknown kind {kind!r}",
        "known": ["random", "pair:N", "trivial:N", "group:NAME",
                  *sorted(generators.NAMED_MODELS)]})


def _positive(text: str, kind: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise CliError(EXIT_INPUT, {"error": f"kind {kind!r} needs a positive size"})
    return value


def _read_document(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_INPUT, {"error": f"cannot read {path}: {exc}"}) from exc
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INPUT, {"error": f"invalid JSON in {path}: {exc}"}) from exc


def _load(args, validate_axioms: bool = True) -> core.FiniteGroupoid:
    if getattr(args, "input", None):
        try:
            G = document.decode_groupoid(_read_document(args.input))
        except document.DocumentError as exc:
            raise CliError(EXIT_INPUT, {"error": str(exc)}) from exc
    elif getattr(args, "kind", None):
        G = _model(args.kind, args.seed, args.budget)
    else:
        raise CliError(EXIT_INPUT, {"error": "provide --input FILE or --kind KIND"})
    if validate_axioms:
        bad = core.validate(G)
        if bad:
            raise CliError(EXIT_SEMANTIC, {
                "error": "axiom violations",
                "violations": [{"kind": v.kind, "message": v.message} for v in bad]})
    return G


def _emit(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands ------------------------------------------------------------

def _cmd_validate(args) -> int:
    G = _load(args, validate_axioms=False)
    bad = core.validate(G)
    _emit({"valid": not bad,
           "elements": G.n,
           "units": len(G.units),
           "violations": [{"kind": v.kind, "message": v.message} for v in bad]},
          args.output)
    return EXIT_OK if not bad else EXIT_SEMANTIC


def _cmd_generate(args) -> int:
    G = _model(args.kind, args.seed, args.budget)
    _emit(document.encode_groupoid(G), args.output)
    return EXIT_OK


def _carrier(G: core.FiniteGroupoid, spec: str) -> frozenset[int]:
    if spec == "isotropy":
        return frozenset(core.isotropy(G).members)
    if spec == "units":
        return frozenset(G.units)
    members = set()
    for label in spec.split(";"):
        label = label.strip()
        try:
            members.add(G.label_index(label))
        except ValueError:
            raise CliError(EXIT_INPUT, {"error": f"unknown arrow label {label!r}"}) from None
    return frozenset(members)


def _cmd_quotient(args) -> int:
    G = _load(args)
    carrier = _carrier(G, args.by)
    verdict = quotients.is_normal(G, carrier)
    if not verdict:
        raise CliError(EXIT_SEMANTIC, {
            "error": "not a normal subgroupoid",
            "kind": verdict.kind,
            "message": verdict.message})
    H = quotients.normal_subgroupoid(G, carrier)
    qr = quotients.quotient(G, H)
    exact = quotients.quotient_preimage_of_units(G, qr) == H.members
    _emit({"by": sorted(G.labels[g] for g in carrier),
           "quotient": document.encode_groupoid(qr.quotient),
           "class_map": {G.labels[a]: qr.quotient.labels[qr.class_map[a]]
                         for a in G.arrows()},
           "exact": exact},
          args.output)
    return EXIT_OK if exact else EXIT_SEMANTIC


def _cmd_abelianize(args) -> int:
    G = _load(args)
    ab = quotients.abelianize_groupoid(G)
    dim = algebra.abelianization_dim(G)
    class_map = {G.labels[ab.inclusion[i]]: ab.g_ab.labels[ab.class_map[i]]
                 for i in range(ab.g_fix.n)}
    _emit({"fixed_points": sorted(G.labels[x] for x in core.fixed_points(G).members),
           "restricted": document.encode_groupoid(ab.g_fix),
           "abelianized": document.encode_groupoid(ab.g_ab),
           "class_map": class_map,
           "abelianization_dim": dim},
          args.output)
    return EXIT_OK


def _cmd_dual(args) -> int:
    G = _load(args)
    try:
        bundle = abelian.dual_bundle(G)
    except ValueError as exc:
        raise CliError(EXIT_SEMANTIC, {"error": str(exc)}) from exc
    fibers = {}
    for x in bundle.base:
        group = bundle.fiber_groups[x]
        dec = abelian.invariant_factors(group)
        fibers[G.labels[x]] = {
            "order": group.order,
            "invariant_factors": list(dec.factors),
            "characters": len(bundle.fibers[x]),
        }
    _emit({"base": [G.labels[x] for x in bundle.base],
           "total_characters": bundle.size(),
           "fibers": fibers},
          args.output)
    return EXIT_OK


def _cmd_characters(args) -> int:
    G = _load(args)
    functionals = algebra.enumerate_characters(G)
    payload = {
        "count": len(functionals),
        "abelianization_dim": algebra.abelianization_dim(G),
        "characters": [
            {"unit": G.labels[phi.unit],
             "modulus": phi.modulus,
             "exponents": {G.labels[g]: e for g, e in sorted(phi.exponents.items())}}
            for phi in functionals],
    }
    _emit(payload, args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    if args.corpus:
        report = checks.corpus_report(seed=args.seed, count=args.count,
                                      cap=args.budget, jobs=args.jobs)
    else:
        # axiom problems surface as a failing check with a witness, so the
        # suite runs on whatever decodes — only parse errors stop it
        G = _load(args, validate_axioms=False)
        name = args.input or args.kind
        report = checks.file_report(G, instance=name)
    _emit(report.to_json(), args.output)
    return EXIT_OK if report.ok else EXIT_SEMANTIC


# --- parser -----------------------------------------------------------------

def _add_source(p: argparse.ArgumentParser, require_kind: bool = False) -> None:
    if not require_kind:
        p.add_argument("--input", metavar="FILE",
                       help="groupoid document to read ('-' for stdin)")
    p.add_argument("--kind", metavar="KIND",
                   required=require_kind,
                   help="built-in model: random, klein-cross, s3, s3-a3-bundle, "
                        "pair:N, trivial:N, group:NAME")
    p.add_argument("--seed", type=int, default=0, help="seed for --kind random")
    p.add_argument("--budget", type=int, default=60,
                   help="size budget for --kind random")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupoidlab",
        description="Finite groupoid workbench: quotients, abelianizations, "
                    "character duals, and exact convolution algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the groupoid axioms")
    _add_source(p)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("generate", help="emit a built-in model as a document")
    _add_source(p, require_kind=True)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("quotient", help="quotient by a normal subgroupoid")
    _add_source(p)
    p.add_argument("--by", default="isotropy", metavar="SPEC",
                   help="carrier: 'isotropy', 'units', or semicolon-separated arrow labels")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("abelianize",
                       help="restrict to fixed points and abelianize fiberwise")
    _add_source(p)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_abelianize)

    p = sub.add_parser("dual", help="character dual of an abelian group bundle")
    _add_source(p)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("characters",
                       help="one-dimensional representations of the convolution algebra")
    _add_source(p)
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_characters)

    p = sub.add_parser("check", help="run the verification suite")
    _add_source(p)
    p.add_argument("--corpus", action="store_true",
                   help="run over generated instances plus fixed families")
    p.add_argument("--count", type=int, default=200,
                   help="number of corpus instances")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for the corpus")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        _emit(exc.payload, getattr(args, "output", None))
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
