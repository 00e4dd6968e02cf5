"""Command-line interface: ``qrm-transversal <command> ...``.

Every JSON payload carries ``"schema": 1``. Exit codes: 0 success, 1 domain
error, 2 usage error, 3 verification failure (payload carries a witness).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import classify as cl
from . import hypercube as hc
from . import oracle as orc
from . import qrm_code as qc
from . import ring_codes as rc
from . import synthesis as syn
from .errors import DomainError, UsageError, VerificationFailure

SCHEMA = 1
EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p: argparse.ArgumentParser, top: bool) -> None:
    default = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=("json", "text"), default=default("json"))
    p.add_argument("--seed", type=int, default=default(0))
    p.add_argument("--sample", type=int, default=default(None),
                   help="check N seeded logical words instead of all of them")


def _add_code(p: argparse.ArgumentParser) -> None:
    p.add_argument("m", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qrm-transversal",
                     description="Transversal subcube operators on quantum Reed-Muller codes.")
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_common(p, top=False)
        return p

    p = command("params", "code parameters")
    _add_code(p)

    p = command("table", "all codes up to a size that reach a hierarchy level")
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--min-kmax", type=int, default=2)

    p = command("classify", "classify a subcube operator by formula")
    _add_code(p)
    p.add_argument("--basis", choices=("z", "x", "Z", "X"), default="z")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--signed", action="store_true")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cube")
    group.add_argument("--cube-dim", type=int)
    group.add_argument("--admissible", action="store_true",
                       help="table of every dimension for X, Z and signed Z(1..k)")

    p = command("covers", "minimal covers of a generator set")
    _add_code(p)
    p.add_argument("--K", required=True)

    p = command("synthesize", "logical circuit of a Z-basis subcube operator")
    _add_code(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--signed", action="store_true")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--K")
    group.add_argument("--cube")
    p.add_argument("--qasm", action="store_true", help="also emit the physical gate list")

    p = command("decompose", "standard-subcube terms of a subcube operator")
    _add_code(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cube", required=True)
    p.add_argument("--signed", action="store_true")

    p = command("verify", "check an operator (and optionally a circuit) with the oracle")
    _add_code(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cube", required=True)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--against-circuit", metavar="FILE")

    p = command("dual", "subcube <-> cross-polytope simplex")
    p.add_argument("--m", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cube")
    group.add_argument("--simplex")

    p = command("ring-probe", "probe preserving phase functions against the stacked module")
    _add_code(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    return parser


def _code(args) -> qc.QrmCode:
    return qc.QrmCode(args.m, args.q, args.r)


def _code_json(code: qc.QrmCode) -> dict:
    return {"m": code.m, "q": code.q, "r": code.r}


def _cube(args, code: qc.QrmCode) -> hc.Subcube:
    return hc.Subcube.parse(args.cube, code.m)


def cmd_params(args) -> tuple[dict, str]:
    code = _code(args)
    p = qc.parameters(code)
    payload = {"code": _code_json(code), "n": p.n, "kappa": p.kappa, "d": p.distance, "k_max": p.k_max}
    return payload, f"{code}: [[{p.n},{p.kappa},{p.distance}]] k_max={p.k_max}"


def cmd_table(args) -> tuple[dict, str]:
    rows = qc.code_table(args.max_m, args.min_kmax)
    cols = ("m", "q", "r", "n", "kappa", "d", "k_max")
    text = "\n".join(["\t".join(cols)] + ["\t".join(str(row[c]) for c in cols) for row in rows])
    return {"rows": rows}, text


def cmd_classify(args) -> tuple[dict, str]:
    code = _code(args)
    basis = args.basis.upper()
    if args.admissible:
        k_max = qc.parameters(code).k_max or 0
        rows = cl.admissible_table(code, k_max)
        payload = {"code": _code_json(code), "dimensions": list(range(code.m + 1)),
                   "rows": [{"operator": label, "tags": [str(t) for t in tags]} for label, tags in rows]}
        return payload, cl.render_admissible(code, k_max)
    if args.cube is not None:
        cube = _cube(args, code)
        dim, where = cube.dim, str(cube)
    else:
        if not 0 <= args.cube_dim <= code.m:
            raise UsageError(f"--cube-dim must lie in 0..{code.m}")
        dim, where = args.cube_dim, None
    tag = cl.classify_dimension(code, basis, args.k, dim)
    t = cl.thresholds(code, basis, args.k)
    payload = {"code": _code_json(code), "basis": basis, "k": args.k, "signed": args.signed,
               "cube": where, "dim": dim, "tag": str(tag),
               "thresholds": {"logical_min": t.logical_min, "logical_max": t.logical_max,
                              "stabilizer_min": t.stabilizer_min}}
    return payload, f"{tag} (logical for {t.logical_min} <= dim <= {t.logical_max}; dim = {dim})"


def cmd_covers(args) -> tuple[dict, str]:
    code = _code(args)
    k_set = hc.parse_index_list(args.K)
    covers = syn.minimal_covers(code, k_set)
    circuit = syn.CzCircuit(frozenset(covers))
    payload = {"code": _code_json(code), "K": hc.format_index_set(k_set),
               "level": syn.level_of(code, k_set), "covers": circuit.to_json(code)}
    return payload, "\n".join(" ".join(hc.format_index_set(j) for j in g) for g in circuit.ordered(code))


def qasm_lines(f: orc.PhaseFunction, m: int) -> list[str]:
    k = f.k
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";',
             f"// z_{k} = diag(1, exp(i*pi/2^{k})), equal to rz(pi/2^{k}) up to global phase",
             f"gate z_{k} a {{ rz(pi/{1 << k}) a; }}",
             f"gate z_{k}_dg a {{ rz(-pi/{1 << k}) a; }}",
             f"qreg q[{1 << m}];"]
    for x, e in enumerate(f.exponents):
        e = int(e)
        if e == 0:
            continue
        if e == 1:
            lines.append(f"z_{k} q[{x}];")
        elif e == f.modulus - 1:
            lines.append(f"z_{k}_dg q[{x}];")
        else:
            lines.extend([f"z_{k} q[{x}];"] * e)
    return lines


def _operator(args, code: qc.QrmCode) -> cl.OperatorSpec:
    if getattr(args, "K", None) is not None:
        cube = hc.Subcube.standard(code.m, hc.parse_index_list(args.K))
    else:
        cube = _cube(args, code)
    return cl.OperatorSpec("Z", args.signed, args.k, cube)


def cmd_synthesize(args) -> tuple[dict, str]:
    code = _code(args)
    code.require_logicals()
    spec = _operator(args, code)
    tag = cl.require_preserving(code, spec)
    circuit = syn.arbitrary_subcube_circuit(code, spec)
    payload = {"code": _code_json(code), "k": spec.k, "signed": spec.signed, "cube": str(spec.cube),
               "tag": str(tag), "gates": circuit.to_json(code), "text": circuit.to_text(code)}
    text = circuit.to_text(code)
    if args.qasm:
        lines = qasm_lines(orc.phase_of_operator(spec, code.m), code.m)
        payload["qasm"] = "\n".join(lines)
        text += "\n" + payload["qasm"]
    return payload, text


def cmd_decompose(args) -> tuple[dict, str]:
    code = _code(args)
    code.require_logicals()
    spec = _operator(args, code)
    terms = syn.decompose_to_standard(code, spec.k, spec.cube, spec.signed)
    payload = {"code": _code_json(code), "cube": str(spec.cube), "signed": spec.signed,
               "terms": [{"level": lvl, "K": hc.format_index_set(t)} for lvl, t in terms]}
    return payload, "\n".join(f"level {lvl}: <{hc.format_index_set(t)}>" for lvl, t in terms)


def cmd_verify(args) -> tuple[dict, str]:
    code = _code(args)
    code.require_logicals()
    spec = _operator(args, code)
    f = orc.phase_of_operator(spec, code.m)
    oracle = orc.CodeOracle(code, args.sample, args.seed)
    circuit = None
    if args.against_circuit:
        try:
            with open(args.against_circuit, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read circuit file: {exc}") from None
        gates = data.get("gates") if isinstance(data, dict) else data
        if not isinstance(gates, list):
            raise UsageError("circuit file must hold a list of gates or an object with 'gates'")
        circuit = syn.CzCircuit.from_json(code, gates)
    verdict = oracle.run([f], [circuit] if circuit is not None else None)[0]
    formula = cl.classify(code, spec)
    payload = {"code": _code_json(code), "cube": str(spec.cube), "k": spec.k, "signed": spec.signed,
               "sampled": verdict.sampled, "words_checked": verdict.words_checked,
               "oracle_tag": str(verdict.classification), "formula_tag": str(formula),
               "agree": verdict.classification is formula}
    if not verdict.preserves:
        payload["witness"] = verdict.witness
    if circuit is not None:
        payload["circuit_matches"] = bool(verdict.matches_circuit)
        if verdict.circuit_witness:
            payload["circuit_witness"] = verdict.circuit_witness
    ok = payload["agree"] and (circuit is None or payload["circuit_matches"])
    payload["verdict"] = ok
    if not ok:
        raise VerificationFailure("oracle disagrees", payload)
    text = f"ok: oracle={payload['oracle_tag']} formula={payload['formula_tag']}"
    if circuit is not None:
        text += " circuit matches"
    return payload, text


def cmd_dual(args) -> tuple[dict, str]:
    if args.cube is not None:
        cube = hc.Subcube.parse(args.cube, args.m)
        simplex = hc.octa_convert(cube)
    else:
        simplex = hc.OctaSimplex(args.simplex)
        if args.m is not None and args.m != simplex.m:
            raise UsageError("--m does not match the simplex length")
        cube = hc.octa_convert(simplex)
    payload = {"cube": str(cube), "cube_dim": cube.dim, "simplex": str(simplex), "simplex_dim": simplex.dim}
    return payload, f"{cube} <-> {simplex}"


def cmd_ring_probe(args) -> tuple[dict, str]:
    code = _code(args)
    report = rc.conjecture_probe(code, args.k, args.trials, args.seed)
    return report, report["verdict"]


COMMANDS = {
    "params": cmd_params, "table": cmd_table, "classify": cmd_classify, "covers": cmd_covers,
    "synthesize": cmd_synthesize, "decompose": cmd_decompose, "verify": cmd_verify,
    "dual": cmd_dual, "ring-probe": cmd_ring_probe,
}


def _emit(payload: dict, text: str, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "text":
        print(text, file=stream)
    else:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2), file=stream)


def main(argv: Sequence[str] | None = None) -> int:
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        payload, text = COMMANDS[args.command](args)
    except UsageError as exc:
        _emit({"error": "usage", "message": str(exc)}, f"usage error: {exc}", fmt, sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        _emit({"error": "domain", "message": str(exc)}, f"domain error: {exc}", fmt)
        return EXIT_DOMAIN
    except VerificationFailure as exc:
        _emit({"error": "verification", **exc.witness}, f"verification failed: {json.dumps(exc.witness)}", fmt)
        return EXIT_VERIFY
    _emit(payload, text, fmt)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
