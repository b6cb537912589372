"""Command-line interface.

Subcommands
-----------
    analyze    decide whether a secure code exists; print verdict and bounds
    construct  build a secure code and write it as a JSON code file
    verify     check a code file against an instance: decodability + security
    encode     filter: message symbols (and key symbols) -> codeword symbols
    decode     filter: codeword + side-information symbols -> wanted symbols
    graph      export the instance's directed bipartite graph as DOT
    search     exhaustive search for a secure linear code of a given length

Exit codes are the API: 0 success/secure, 1 usage or parse error,
2 proven impossible (or verification failed), 3 unknown, 4 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, codes, model, oracle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NO = 2
EXIT_UNKNOWN = 3
EXIT_BUDGET = 4


class _UsageError(Exception):
    pass


def _load_instance(args):
    try:
        inst, file_acc = model.load_instance(args.instance)
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot read instance: {exc}")
    violations = [
        v for v in model.validate(inst) if "expungeable" not in v
    ]
    if violations:
        raise _UsageError("invalid instance: " + "; ".join(violations))
    return inst, file_acc


def _resolve_access(args, file_acc, m):
    if getattr(args, "t_level", None) is not None and getattr(args, "access", None) is not None:
        raise _UsageError("give at most one of --t-level and --access")
    if getattr(args, "t_level", None) is not None:
        return model.AccessStructure.t_level(args.t_level)
    if getattr(args, "access", None) is not None:
        try:
            sets = json.loads(args.access)
        except json.JSONDecodeError as exc:
            raise _UsageError(f"--access is not valid JSON: {exc}")
        if not isinstance(sets, list) or not all(isinstance(a, list) for a in sets):
            raise _UsageError("--access must be a JSON list of index lists, e.g. '[[3,4]]'")
        return model.AccessStructure.explicit(sets)
    if file_acc is not None:
        return file_acc
    # no adversary anywhere: fall back to the classical no-constraint case
    return model.AccessStructure.classical(m)


def _load_code(args, inst):
    try:
        code = codes.load_code(args.code)
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot read code: {exc}")
    if code.m != inst.m:
        raise _UsageError(
            f"code is for {code.m} messages, instance has {inst.m}"
        )
    return code


def _print_json(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _verdict_exit(verdict):
    if verdict.answer == analysis.ANSWER_YES:
        return EXIT_OK
    if verdict.answer == analysis.ANSWER_NO:
        return EXIT_NO
    return EXIT_UNKNOWN


def _describe_verdict(verdict):
    lines = [f"answer: {verdict.answer}"]
    if verdict.answer == analysis.ANSWER_YES:
        code = verdict.code
        lines.append(f"certificate: linear code of length {code.length} over GF({code.q})")
        for j, row in enumerate(code.generator.to_lists(), start=1):
            lines.append(f"  g_{j} = {row}")
    elif verdict.certificate is not None:
        cert = verdict.certificate.to_dict()
        if cert["type"] == "compromised_receiver":
            lines.append(
                f"certificate: receiver {cert['receiver']} is compromised by access set {cert['access']}"
            )
        else:
            lines.append("certificate: acyclic receiver/message graph with every message wanted")
    lines.append(f"codelength bounds: lower={verdict.lower} upper={verdict.upper}")
    return "\n".join(lines)


def _decide(inst, acc, args):
    b = getattr(args, "b", 1)
    if acc.kind == model.AccessStructure.KIND_T_LEVEL:
        return analysis.decide_t_level(inst, acc.t, b=b)
    if b != 1:
        raise _UsageError("block sizes b > 1 are supported for t-level adversaries only")
    return analysis.decide(inst, acc)


def cmd_analyze(args) -> int:
    inst, file_acc = _load_instance(args)
    inst = model.normalize(inst)
    acc = _resolve_access(args, file_acc, inst.m)
    verdict = _decide(inst, acc, args)
    if args.json:
        _print_json(verdict.to_dict())
    else:
        print(_describe_verdict(verdict))
    return _verdict_exit(verdict)


def cmd_construct(args) -> int:
    inst, file_acc = _load_instance(args)
    inst = model.normalize(inst)
    acc = _resolve_access(args, file_acc, inst.m)
    try:
        verdict = _decide(inst, acc, args)
    except codes.NoSecureCodeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO
    if verdict.answer != analysis.ANSWER_YES:
        if args.json:
            _print_json(verdict.to_dict())
        else:
            print(_describe_verdict(verdict))
        return _verdict_exit(verdict)
    code = verdict.code
    level = codes.security_level(code, budget=args.budget)
    least = analysis.min_side_info(inst)
    if args.code:
        codes.save_code(args.code, code)
    summary = {
        "length": code.length,
        "min_side_info": least,
        "security_level": level,
        "q": code.q,
    }
    if code.q != inst.q:
        summary["field_substituted_from"] = inst.q
    if args.json:
        out = dict(summary)
        if not args.code:
            out["code"] = codes.code_to_dict(code)
        _print_json(out)
    else:
        print(f"length: {code.length}")
        print(f"min side information: {least}")
        print(f"security level: {level}")
        if code.q != inst.q:
            print(f"field: GF({code.q}) (instance field GF({inst.q}) too small)")
        if args.code:
            print(f"code written to {args.code}")
        else:
            print(json.dumps(codes.code_to_dict(code)))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst, file_acc = _load_instance(args)
    acc = _resolve_access(args, file_acc, inst.m)
    code = _load_code(args, inst)
    decodable = oracle.check_decodability(code, inst, budget=args.budget)
    report = oracle.check_security(code, inst, acc, b=args.b, budget=args.budget)
    payload = report.to_dict()
    payload["decodable"] = decodable
    if args.json:
        _print_json(payload)
    else:
        for i, ok in enumerate(decodable, start=1):
            print(f"receiver {i}: {'decodes' if ok else 'CANNOT DECODE'}")
        for check in report.checks:
            status = "uniform" if check.uniform else "LEAKS"
            print(f"A={list(check.access)} B={list(check.block)}: {status}")
        print(f"secure: {report.secure}")
    return EXIT_OK if (all(decodable) and report.secure) else EXIT_NO


def _read_symbol_lines(q):
    for lineno, line in enumerate(sys.stdin, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            values = [int(tok) for tok in stripped.split()]
        except ValueError:
            raise _UsageError(f"stdin line {lineno}: non-integer symbol")
        for v in values:
            if not 0 <= v < q:
                raise _UsageError(f"stdin line {lineno}: symbol {v} outside GF({q})")
        yield lineno, values


def cmd_encode(args) -> int:
    try:
        code = codes.load_code(args.code)
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot read code: {exc}")
    expect = code.m + code.key_dim
    for lineno, values in _read_symbol_lines(code.q):
        if len(values) != expect:
            raise _UsageError(
                f"stdin line {lineno}: expected {expect} symbols "
                f"({code.m} message + {code.key_dim} key), got {len(values)}"
            )
        x, y = values[: code.m], values[code.m :]
        word = code.encode(x, y if code.is_randomized else None)
        print(" ".join(str(v) for v in word))
    return EXIT_OK


def cmd_decode(args) -> int:
    inst, _ = _load_instance(args)
    code = _load_code(args, inst)
    if code.is_randomized:
        raise _UsageError("decode applies to deterministic codes")
    if not 1 <= args.receiver <= inst.n:
        raise _UsageError(f"--receiver must be in [1, {inst.n}]")
    rec = inst.receivers[args.receiver - 1]
    expect = code.length + len(rec.knows)
    for lineno, values in _read_symbol_lines(code.q):
        if len(values) != expect:
            raise _UsageError(
                f"stdin line {lineno}: expected {expect} symbols "
                f"({code.length} codeword + {len(rec.knows)} side), got {len(values)}"
            )
        word, side = values[: code.length], values[code.length :]
        out = codes.decode(code, inst, args.receiver, word, side)
        if out is None:
            print(f"receiver {args.receiver} cannot decode this code", file=sys.stderr)
            return EXIT_NO
        print(" ".join(str(v) for v in out))
    return EXIT_OK


def cmd_graph(args) -> int:
    inst, file_acc = _load_instance(args)
    acc = _resolve_access(args, file_acc, inst.m)
    dot = model.build_graph(inst, acc).to_dot()
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_search(args) -> int:
    inst, file_acc = _load_instance(args)
    inst = model.normalize(inst)
    acc = _resolve_access(args, file_acc, inst.m)
    code = analysis.search_linear(inst, acc, args.length, b=args.b, budget=args.budget)
    if code is None:
        msg = f"no secure linear code of length {args.length} over GF({inst.q})"
        if args.json:
            _print_json({"found": False, "length": args.length})
        else:
            print(msg)
        return EXIT_NO
    if args.code:
        codes.save_code(args.code, code)
    if args.json:
        out = {"found": True, "length": args.length}
        if not args.code:
            out["code"] = codes.code_to_dict(code)
        _print_json(out)
    else:
        print(json.dumps(codes.code_to_dict(code)))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="secix",
        description="Secure index coding: constructions and exact verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, code_file=False, needs_instance=True):
        if needs_instance:
            p.add_argument("--instance", required=True, help="instance JSON file")
        if code_file:
            p.add_argument("--code", required=True, help="code JSON file")
        p.add_argument("--t-level", dest="t_level", type=int, help="override adversary: all subsets of this size")
        p.add_argument("--access", help="override adversary: explicit JSON sets, e.g. '[[3,4]]'")
        p.add_argument("--b", type=int, default=1, help="block size for joint security (default 1)")
        p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                       help="max joint states / candidates to enumerate")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="decide secure-code existence")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="construct a secure code")
    common(p)
    p.add_argument("--code", help="write the code JSON here (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a code file against an instance")
    common(p, code_file=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode whitespace-separated symbols from stdin")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode codeword+side symbols from stdin")
    p.add_argument("--instance", required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--receiver", type=int, required=True, help="1-based receiver index")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("graph", help="export the bipartite graph as DOT")
    common(p)
    p.add_argument("--dot", help="write DOT here (default: stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("search", help="exhaustive search for a secure linear code")
    common(p)
    p.add_argument("--length", type=int, required=True, help="codeword length to search")
    p.add_argument("--code", help="write the found code JSON here")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; our API reserves 2 for proven-no
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except oracle.InfeasibleBlockError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except codes.NoSecureCodeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
