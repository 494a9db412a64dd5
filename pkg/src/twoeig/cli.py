"""Command-line interface.

Subcommands: classify, construct, verify, cotree, bound, selftest.
Graphs come from one of --dsl EXPR, --g6 PATH|-, or --edges PATH; output
is JSON (default) or --text.  Exit codes: 0 success, 1 failed checks,
2 unparseable input, 3 graph not constructible.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import _kernels
from .classify import Verdict, classification_to_json, classify
from .construct import NotConstructibleError, WitnessPair, witness_matrix_for
from .cotree import build_cotree
from .dsl import ExpressionSyntaxError, parse_block_dsl
from .graphs import Graph, GraphFormatError, parse_edge_list, parse_graph6, unique_path_bound
from .selftest import run_selftest
from .verify import verify_matrix, verify_witness

SCHEMA = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_NOT_CONSTRUCTIBLE = 3


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dsl", metavar="EXPR", help="inline clique expression, e.g. '(K1+K2)*K3'")
    src.add_argument("--g6", metavar="PATH", help="graph6 file, or - for stdin")
    src.add_argument("--edges", metavar="PATH", help="edge-list file: 'n  i j  i j ...'")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true", default=True)
    fmt.add_argument("--text", dest="as_json", action="store_false")


def _single_graph(args) -> Graph:
    if args.dsl is not None:
        return parse_block_dsl(args.dsl)[0]
    if args.edges is not None:
        return parse_edge_list(Path(args.edges).read_text(encoding="utf-8"))
    text = sys.stdin.read() if args.g6 == "-" else Path(args.g6).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


def _graph6_lines(args):
    stream = sys.stdin if args.g6 == "-" else open(args.g6, "r", encoding="utf-8")
    try:
        for lineno, line in enumerate(stream, start=1):
            if line.strip():
                yield lineno, line.strip()
    finally:
        if stream is not sys.stdin:
            stream.close()


def write_matrix(path: Path, matrix: np.ndarray) -> None:
    """Matrix text format: first line n, then n rows of 17-significant-digit floats."""
    n = matrix.shape[0]
    rows = [" ".join(f"{x:.17g}" for x in matrix[i]) for i in range(n)]
    path.write_text("\n".join([str(n)] + rows) + "\n", encoding="utf-8")


def read_matrix(path: Path) -> np.ndarray:
    lines = path.read_text(encoding="utf-8").split()
    n = int(lines[0])
    vals = [float(x) for x in lines[1:]]
    if len(vals) != n * n:
        raise GraphFormatError(f"matrix file holds {len(vals)} values, expected {n * n}")
    return np.array(vals).reshape(n, n)


def _cmd_classify(args) -> int:
    if args.g6 is not None:
        for lineno, line in _graph6_lines(args):
            try:
                g = parse_graph6(line)
            except GraphFormatError as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                return EXIT_PARSE
            _report_classification(g, args, extra={"line": lineno, "graph6": line})
        return EXIT_OK
    g = _single_graph(args)
    _report_classification(g, args)
    return EXIT_OK


def _report_classification(g: Graph, args, extra: dict | None = None) -> None:
    cls = classify(g)
    if args.as_json:
        obj = {"schema": SCHEMA, "n": g.n, **classification_to_json(cls)}
        if extra:
            obj.update(extra)
        _emit(obj)
    else:
        bound = cls.q_lower_bound
        print(f"n={g.n} verdict={cls.verdict.value} q_lower_bound={bound}")


def _cmd_construct(args) -> int:
    g = _single_graph(args)
    cls = classify(g)
    try:
        matrix, pair = witness_matrix_for(g, cls)
    except NotConstructibleError:
        obj = {
            "schema": SCHEMA,
            "n": g.n,
            "constructible": False,
            **classification_to_json(cls),
        }
        if args.as_json:
            _emit(obj)
        else:
            print(f"not constructible: verdict={cls.verdict.value}")
        return EXIT_NOT_CONSTRUCTIBLE

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    matrix_path = out_dir / "matrix.txt"
    write_matrix(matrix_path, matrix)

    if pair is not None:
        report = verify_witness(
            pair, g, involution_tol=args.tol_involution, zero_tol=args.tol_zero
        )
    else:
        # two-clique unions carry the split as {1^2, -1^(n-2)}; the
        # clique-plus-isolated form carries {1^1, -1^(n-1)}
        expected = g.n - 2 if cls.verdict is Verdict.MINIMAL_N2_2 else g.n - 1
        report = verify_matrix(
            matrix,
            g,
            expected_neg_one_mult=expected,
            involution_tol=args.tol_involution,
            zero_tol=args.tol_zero,
        )

    witness_obj = {
        "schema": SCHEMA,
        "verdict": cls.verdict.value,
        "matrix_file": str(matrix_path),
        "verify": report.to_json(),
    }
    if pair is not None:
        witness_obj.update(pair.to_json())
    (out_dir / "witness.json").write_text(
        json.dumps(witness_obj, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    if args.as_json:
        _emit(witness_obj)
    else:
        print(f"verdict={cls.verdict.value} verify={report.verdict} matrix={matrix_path}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_verify(args) -> int:
    g = _single_graph(args)
    payload = json.loads(Path(args.witness).read_text(encoding="utf-8"))
    matrix = None
    source = args.matrix or payload.get("matrix_file")
    if source:
        matrix = read_matrix(Path(source))
    if "u" in payload and "v" in payload:
        u = np.asarray(payload["u"], dtype=np.float64)
        v = np.asarray(payload["v"], dtype=np.float64)
        scale = float(payload.get("scale") or (u @ u))
        if matrix is None:
            matrix = np.eye(len(u)) - (2.0 / scale) * (np.outer(u, u) + np.outer(v, v))
        pair = WitnessPair(u, v, scale, matrix)
        report = verify_witness(
            pair, g, involution_tol=args.tol_involution, zero_tol=args.tol_zero
        )
    elif matrix is not None:
        report = verify_matrix(
            matrix,
            g,
            expected_neg_one_mult=args.expect_mult,
            involution_tol=args.tol_involution,
            zero_tol=args.tol_zero,
        )
    else:
        print("witness JSON carries neither vectors nor a matrix file", file=sys.stderr)
        return EXIT_PARSE
    if args.as_json:
        _emit({"schema": SCHEMA, "n": g.n, **report.to_json()})
    else:
        print(f"verify={report.verdict}" + ("" if report.passed else f" failures={list(report.failures)}"))
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_cotree(args) -> int:
    g = _single_graph(args)
    if g.n == 0:
        _emit({"schema": SCHEMA, "n": 0, "cotree": None})
        return EXIT_OK
    tree = build_cotree(g)
    if isinstance(tree, tuple):
        obj = {"schema": SCHEMA, "n": g.n, "p4_witness": list(tree)}
    else:
        obj = {"schema": SCHEMA, "n": g.n, "cotree": tree.to_json()}
    if args.as_json:
        _emit(obj)
    else:
        print(obj)
    return EXIT_OK


def _cmd_bound(args) -> int:
    g = _single_graph(args)
    value = unique_path_bound(g)
    if args.as_json:
        _emit({"schema": SCHEMA, "n": g.n, "unique_path_bound": value})
    else:
        print(f"unique_path_bound={value}")
    return EXIT_OK


def _cmd_selftest(args) -> int:
    report = run_selftest(max_n=args.max_n, seed=args.seed, cases=args.cases)
    total = report.graphs_checked
    pct = 100.0 * report.agreements / total if total else 100.0
    print(f"graphs n<={args.max_n} checked: {total}, verdict agreement {pct:.1f}%")
    print(
        f"random constructions: {report.constructions_passed}/{report.constructions_checked} verified"
    )
    print(f"kernel backend: {_kernels.BACKEND}")
    if report.failures:
        for failure in report.failures:
            print(f"FAIL {failure}")
        return EXIT_FAIL
    print("selftest: all checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoeig",
        description="Classify graphs by their minimal two-eigenvalue multiplicity "
        "split and synthesize verified witness matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="verdict for one graph or a graph6 stream")
    _add_input_flags(p_classify)
    _add_output_flags(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_construct = sub.add_parser("construct", help="build and verify a witness matrix")
    _add_input_flags(p_construct)
    _add_output_flags(p_construct)
    p_construct.add_argument("--out", default=".", help="directory for witness.json and matrix.txt")
    p_construct.add_argument("--tol-involution", type=float, default=1e-8)
    p_construct.add_argument("--tol-zero", type=float, default=1e-10)
    p_construct.set_defaults(func=_cmd_construct)

    p_verify = sub.add_parser("verify", help="re-check a previously emitted witness")
    _add_input_flags(p_verify)
    _add_output_flags(p_verify)
    p_verify.add_argument("--witness", required=True, help="witness JSON path")
    p_verify.add_argument("--matrix", help="matrix text file (overrides matrix_file)")
    p_verify.add_argument("--expect-mult", type=int, default=None)
    p_verify.add_argument("--tol-involution", type=float, default=1e-8)
    p_verify.add_argument("--tol-zero", type=float, default=1e-10)
    p_verify.set_defaults(func=_cmd_verify)

    p_cotree = sub.add_parser("cotree", help="cotree JSON, or an induced-P4 witness")
    _add_input_flags(p_cotree)
    _add_output_flags(p_cotree)
    p_cotree.set_defaults(func=_cmd_cotree)

    p_bound = sub.add_parser("bound", help="unique-shortest-path eigenvalue bound")
    _add_input_flags(p_bound)
    _add_output_flags(p_bound)
    p_bound.set_defaults(func=_cmd_bound)

    p_selftest = sub.add_parser("selftest", help="exhaustive + randomized self-checks")
    p_selftest.add_argument("--max-n", type=int, default=6)
    p_selftest.add_argument("--seed", type=int, default=0)
    p_selftest.add_argument("--cases", type=int, default=200)
    p_selftest.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ExpressionSyntaxError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
