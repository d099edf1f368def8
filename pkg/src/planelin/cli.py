"""Command-line entry point: ``planelin <verb> [payload ...]``.

Payloads use the text grammar of :mod:`planelin.exactalg.grammar`; ``-``
reads a payload from stdin and ``@path`` from a file. Results go to stdout
(text, or a versioned JSON envelope with ``--json``), diagnostics to stderr.
Exit codes: 0 success, 1 domain error, 2 parse error.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from planelin.config import settings
from planelin.errors import ParseError, PlanelinError, UnsupportedField
from planelin.exactalg import (
    FieldSpec,
    parse_automorphism,
    parse_mat2,
    parse_matpoly,
)
from planelin.freefactor import free_factorize
from planelin.linmap import (
    SubgroupSpec,
    classify,
    congruence_modulus,
    congruence_subgroup_gens,
    degree_law_check,
    induce_representation,
    psi,
    psi_inv,
    rho_S,
    section_for,
)
from planelin.matpoly import e_generation_factorize, pingpong_grid, verify_pingpong
from planelin.planeaut import PolyAut, compose_all, factorize, inverse, membership
from planelin.schemas import (
    Envelope,
    block_rows,
    congruence_record,
    e_word_record,
    matrix_rows,
    tau_word_record,
    vdk_word_record,
)
from planelin.witness import SUITES, run_suites

logger = logging.getLogger("planelin.cli")


@dataclass(frozen=True, slots=True)
class Outcome:
    """What a verb prints: ``text`` normally, ``data`` inside the JSON envelope."""

    text: str
    data: Any
    ok: bool = True


Handler = Callable[[argparse.Namespace, FieldSpec], Outcome]


# ----------------------------------------------------------------------
# Payloads
# ----------------------------------------------------------------------


def _payload(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    if text.startswith("@"):
        return Path(text[1:]).read_text(encoding="utf-8")
    return text


def _automorphism(text: str, field: FieldSpec) -> PolyAut:
    """Parse a pair and certify it; raises NotAnAutomorphism otherwise."""
    phi = PolyAut(*parse_automorphism(_payload(text), field))
    factorize(phi)
    return phi


def _subgroup(args: argparse.Namespace, field: FieldSpec) -> SubgroupSpec:
    return SubgroupSpec.of(field, [parse_mat2(_payload(g), field) for g in args.gen])


# ----------------------------------------------------------------------
# Verbs
# ----------------------------------------------------------------------


def _compose(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    phi = compose_all([_automorphism(m, field) for m in args.maps])
    return Outcome(str(phi), str(phi))


def _inverse(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    phi = inverse(_automorphism(args.map, field))
    return Outcome(str(phi), str(phi))


def _normalize(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    phi = _automorphism(args.map, field)
    kind = membership(phi)
    data = {"map": str(phi), "membership": str(kind), "degree": phi.degree}
    return Outcome(f"{phi}  [{kind}, degree {phi.degree}]", data)


def _factor_vdk(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    word = factorize(_automorphism(args.map, field))
    record = vdk_word_record(word)
    lines = [f"{r.kind}: {r.map}" for r in record.factors]
    lines.append(f"tail: {record.tail}")
    return Outcome("\n".join(lines), record.model_dump())


def _factor_free(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    word = free_factorize(_automorphism(args.map, field))
    return Outcome(str(word), [r.model_dump() for r in tau_word_record(word)])


def _factor_e(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    word = e_generation_factorize(parse_matpoly(_payload(args.matrix), field))
    return Outcome(str(word), [r.model_dump() for r in e_word_record(word)])


def _psi(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    g = psi(_automorphism(args.map, field))
    return Outcome(str(g), matrix_rows(g))


def _psi_inv(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    phi = psi_inv(parse_matpoly(_payload(args.matrix), field))
    return Outcome(str(phi), str(phi))


def _classify(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    result = classify(parse_mat2(_payload(args.matrix), field))
    return Outcome(result.model_dump_json(), result.model_dump())


def _rho_s(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    subgroup = _subgroup(args, field)
    section = section_for(subgroup, args.depth)
    g = rho_S(_automorphism(args.map, field), section, word_bound=args.word_bound)
    return Outcome(str(g), {"mode": str(section.mode), "matrix": matrix_rows(g)})


def _congruence(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    subgroup = _subgroup(args, field)
    modulus = args.modulus or congruence_modulus(subgroup)
    congruence = congruence_subgroup_gens(subgroup, modulus, args.cap)
    gens = ", ".join(str(g) for g in congruence.generators)
    text = f"m = {modulus}, index {congruence.index}: <{gens}>"
    return Outcome(text, congruence_record(congruence).model_dump())


def _induce(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    subgroup = _subgroup(args, field)
    modulus = args.modulus or congruence_modulus(subgroup)
    congruence = congruence_subgroup_gens(subgroup, modulus, args.cap)
    section = section_for(congruence.subgroup, args.depth)
    block = induce_representation(_automorphism(args.map, field), congruence, section)
    rows = block_rows(block)
    text = "\n".join("[" + ", ".join(row) + "]" for row in rows)
    return Outcome(text, {"modulus": modulus, "index": congruence.index, "matrix": rows})


def _witness(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    results = run_suites(args.suite, args.length)
    text = "\n".join(f"{r.suite}: {'pass' if r.passed else 'FAIL'}" for r in results)
    ok = all(r.passed for r in results)
    return Outcome(text, [r.model_dump() for r in results], ok)


def _pingpong(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    if field.is_rational:
        raise UnsupportedField("The ping-pong grid needs a prime field")
    rng = random.Random(args.seed)
    samples, vectors = pingpong_grid(field, args.factors, args.vectors, rng)
    report = verify_pingpong(samples, vectors)
    violations = len(report.violations)
    text = f"checked {report.checked}, skipped {report.skipped}, violations {violations}"
    return Outcome(text, report.model_dump(), report.passed)


def _degree_law(args: argparse.Namespace, field: FieldSpec) -> Outcome:
    result = degree_law_check(free_factorize(_automorphism(args.map, field)))
    text = (
        f"deg = {result.aut_degree}, deg psi = {result.matrix_degree}, "
        f"factor degrees {result.factor_degrees}"
    )
    return Outcome(text, result.model_dump())


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        type=FieldSpec.parse,
        default=settings.default_field,
        help="q (default) or fp:<p>",
    )
    common.add_argument("--json", action="store_true", help="Print a JSON envelope")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def _group_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--gen", action="append", required=True, help="Generator matrix, repeatable"
    )
    parser.add_argument("--depth", type=int, default=settings.section_depth)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="planelin", description="Exact computations with plane automorphisms"
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    verb("compose", _compose, "Compose automorphisms left to right").add_argument(
        "maps", nargs="+"
    )
    verb("inverse", _inverse, "Inverse automorphism").add_argument("map")
    verb("normalize", _normalize, "Canonical form and membership").add_argument("map")
    verb("factor-vdk", _factor_vdk, "Amalgam normal form").add_argument("map")
    verb("factor-free", _factor_free, "Free product word of an Aut_1 element").add_argument(
        "map"
    )
    verb("factor-e", _factor_e, "E-factorization of a GL_1 matrix").add_argument("matrix")
    verb("psi", _psi, "Linearize an Aut_1 element").add_argument("map")
    verb("psi-inv", _psi_inv, "Automorphism of a GL_1 matrix").add_argument("matrix")
    verb("classify", _classify, "Classify a matrix of GL(2, K)").add_argument("matrix")

    rho = verb("rho-s", _rho_s, "Linearize an element of Aut_S")
    rho.add_argument("map")
    _group_options(rho)
    rho.add_argument("--word-bound", type=int, default=settings.hypothesis_word_bound)

    congruence = verb("congruence", _congruence, "Congruence subgroup of S")
    congruence.add_argument("--gen", action="append", required=True)
    congruence.add_argument("--modulus", type=int, default=0)
    congruence.add_argument("--cap", type=int, default=settings.image_cap)

    induce = verb("induce", _induce, "Induced representation from a congruence subgroup")
    induce.add_argument("map")
    _group_options(induce)
    induce.add_argument("--modulus", type=int, default=0)
    induce.add_argument("--cap", type=int, default=settings.image_cap)

    witness = verb("witness", _witness, "Run witness suites")
    witness.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    witness.add_argument("--length", type=int, default=settings.distinctness_length)

    pingpong = verb("pingpong", _pingpong, "Ping-pong grid over a prime field")
    pingpong.add_argument("--factors", type=int, default=3)
    pingpong.add_argument("--vectors", type=int, default=3)
    pingpong.add_argument("--seed", type=int, default=settings.property_seed)

    verb("degree-law", _degree_law, "Degree laws of the free factorization").add_argument("map")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch the verb and return the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level.value,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    field: FieldSpec = args.field
    try:
        outcome: Outcome = args.handler(args, field)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except PlanelinError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        logger.debug("invalid input", exc_info=True)
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    if args.json:
        envelope = Envelope(verb=args.verb, field=field.flag, result=outcome.data)
        print(envelope.model_dump_json(indent=2))
    else:
        print(outcome.text)
    return 0 if outcome.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
