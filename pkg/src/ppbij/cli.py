"""Command-line front end: map between representations, print statistic
tables, enumerate families, and run the identity-check suites.

Exit codes: 0 success (all checks pass), 1 domain error or check
failure, 2 usage error (malformed input, unknown name, parameter caps).
All output is deterministic for fixed inputs: polynomials print in
descending graded-lexicographic order and JSON keys are emitted in a
fixed order.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from .bijection import greene_shape, lis_tail, phi, phi_inverse, \
    word_to_strict_tableau
from .checks import CHECKS, CheckResult, run_all
from .core import NMatrix, Partition, PlanePartition, Word
from .enumeration import count_D_alpha, gen_pp_box, gen_pp_shape, \
    gen_strict_tableaux, gen_words

# Hard parameter caps: exhaustive enumeration is exponential, so reject
# desk-scale overruns up front unless --unsafe-no-caps is given.
CAP_BOX = 5
CAP_N = 12
CAP_WORD = 10


class UsageError(Exception):
    """Bad input or parameters: reported on stderr with exit code 2."""


class DomainError(Exception):
    """Structurally valid input outside an operation's domain: exit 1."""


def _check_caps(args, dims=(), N=None, word_len=None):
    if getattr(args, "unsafe_no_caps", False):
        return
    for name, value in dims:
        if value is not None and value > CAP_BOX:
            raise UsageError(
                f"{name}={value} exceeds the cap {CAP_BOX}; "
                "pass --unsafe-no-caps to override")
    if N is not None and N > CAP_N:
        raise UsageError(
            f"N={N} exceeds the cap {CAP_N}; pass --unsafe-no-caps to override")
    if word_len is not None and word_len > CAP_WORD:
        raise UsageError(
            f"word length {word_len} exceeds the cap {CAP_WORD}; "
            "pass --unsafe-no-caps to override")


def _read_input(args, flag: str):
    """One input source per invocation: inline JSON flag, --input path,
    or stdin.
    """
    inline = getattr(args, flag, None)
    path = getattr(args, "input", None)
    if inline is not None and path is not None:
        raise UsageError("give either an inline value or --input, not both")
    if inline is not None:
        text = inline
    elif path is not None:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON input: {exc}") from None


def _parse_pp(data) -> PlanePartition:
    try:
        return PlanePartition.from_json(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"not a plane partition: {exc}") from None


def _parse_matrix(data) -> NMatrix:
    try:
        if isinstance(data, dict):
            return NMatrix.from_json(data)
        return NMatrix(data)
    except (TypeError, ValueError, KeyError) as exc:
        raise UsageError(f"not an N-matrix: {exc}") from None


def _parse_shape(text: str) -> Partition:
    try:
        parts = [int(p) for p in text.split(",") if p != ""]
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}: {exc}") from None


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p != "")
    except ValueError as exc:
        raise UsageError(f"bad vector {text!r}: {exc}") from None


def _emit(args, text_lines, json_obj):
    if args.json:
        print(json.dumps(json_obj, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


# -- subcommands -------------------------------------------------------


def cmd_map(args) -> int:
    if args.direction == "phi":
        pp = _parse_pp(_read_input(args, "pp"))
        if args.n is None or args.m is None:
            raise UsageError("map phi needs --n and --m")
        try:
            D = phi(pp, args.n, args.m)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        _emit(args, [json.dumps([list(r) for r in D.entries])], D.to_json())
    elif args.direction == "inv":
        D = _parse_matrix(_read_input(args, "matrix"))
        try:
            pp = phi_inverse(D)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        _emit(args, [json.dumps(pp.to_json())], pp.to_json())
    elif args.direction == "word":
        if args.w is None or args.m is None:
            raise UsageError("map word needs --w and --m")
        try:
            w = Word.from_digits(args.w, args.m)
        except ValueError as exc:
            raise UsageError(f"bad word: {exc}") from None
        _check_caps(args, word_len=len(w))
        st = word_to_strict_tableau(w)
        _emit(args, [json.dumps(st.to_json())], st.to_json())
    else:
        raise UsageError(f"unknown direction {args.direction!r}")
    return 0


def cmd_stats(args) -> int:
    pp = _parse_pp(_read_input(args, "pp"))
    m = args.m if args.m is not None else pp.max_entry()
    if m < pp.max_entry():
        raise DomainError("entry exceeds --m")
    table = [
        ("shape", list(pp.shape().parts)),
        ("volume", pp.volume()),
        ("trace", pp.trace()),
        ("descents", pp.descent_count()),
        ("up_hook_volume", pp.up_hook_volume()),
        ("corner_volume", pp.corner_volume()),
        ("column_counts", list(pp.column_counts(m)) if m else []),
        ("row_descent_counts", list(pp.row_descent_counts())),
    ]
    _emit(args, [f"{k} {json.dumps(v)}" for k, v in table], dict(table))
    return 0


_STATS = {
    "volume": PlanePartition.volume,
    "trace": PlanePartition.trace,
    "descents": PlanePartition.descent_count,
    "uh": PlanePartition.up_hook_volume,
    "corner": PlanePartition.corner_volume,
}


def cmd_enumerate(args) -> int:
    if args.family == "box":
        if len(args.dims) != 3:
            raise UsageError("enumerate box needs three dimensions: k n m")
        k, n, m = args.dims
        _check_caps(args, dims=[("k", k), ("n", n), ("m", m)])
        items = list(gen_pp_box(k, n, m))
    elif args.family == "shape":
        if args.shape is None or args.m is None:
            raise UsageError("enumerate shape needs --shape and --m")
        lam = _parse_shape(args.shape)
        _check_caps(args, dims=[("shape rows", len(lam)),
                                ("shape width", lam.part(1)), ("m", args.m)])
        items = list(gen_pp_shape(lam, args.m))
    elif args.family == "st":
        if args.shape is None or args.n is None:
            raise UsageError("enumerate st needs --shape and --n")
        lam = _parse_shape(args.shape)
        _check_caps(args, dims=[("shape rows", len(lam)),
                                ("shape width", lam.part(1))], N=args.n)
        items = list(gen_strict_tableaux(lam, args.n))
    elif args.family == "words":
        if args.n is None or args.m is None:
            raise UsageError("enumerate words needs --n and --m")
        _check_caps(args, dims=[("m", args.m)], word_len=args.n)
        ws = list(gen_words(args.n, args.m))
        if args.list:
            _emit(args, ["".join(map(str, w.letters)) for w in ws],
                  [list(w.letters) for w in ws])
        else:
            _emit(args, [str(len(ws))], {"count": len(ws)})
        return 0
    else:
        raise UsageError(f"unknown family {args.family!r}")

    if args.gf is not None:
        if args.stat is None:
            raise UsageError("--gf needs --stat")
        stat = _STATS[args.stat]
        coeffs: dict[int, int] = {}
        for pp in items:
            v = stat(pp)
            coeffs[v] = coeffs.get(v, 0) + 1
        var = args.gf
        parts = []
        for d in sorted(coeffs):
            c = coeffs[d]
            if d == 0:
                parts.append(str(c))
            else:
                body = var if d == 1 else f"{var}^{d}"
                parts.append(body if c == 1 else f"{c}*{body}")
        _emit(args, [" + ".join(parts) if parts else "0"],
              {"var": var, "coefficients": {str(d): coeffs[d]
                                            for d in sorted(coeffs)}})
    elif args.list:
        _emit(args, [json.dumps(pp.to_json()) for pp in items],
              [pp.to_json() for pp in items])
    else:
        _emit(args, [str(len(items))], {"count": len(items)})
    return 0


def cmd_dalpha(args) -> int:
    if args.alpha is None or args.n is None or args.m is None:
        raise UsageError("dalpha needs --alpha, --n and --m")
    alpha = _parse_vector(args.alpha)
    if len(alpha) != args.m:
        raise UsageError("--alpha must have exactly m components")
    _check_caps(args, dims=[("k", args.k), ("n", args.n), ("m", args.m)],
                N=sum(alpha))
    count = count_D_alpha(args.k, args.n, args.m, alpha)
    _emit(args, [str(count)],
          {"k": args.k, "n": args.n, "m": args.m,
           "alpha": list(alpha), "count": count})
    return 0


def cmd_greene(args) -> int:
    if args.w is None or args.m is None:
        raise UsageError("greene needs --w and --m")
    try:
        w = Word.from_digits(args.w, args.m)
    except ValueError as exc:
        raise UsageError(f"bad word: {exc}") from None
    _check_caps(args, word_len=len(w))
    shape = greene_shape(w)
    ls = {i: lis_tail(w, i) for i in range(1, w.m + 1)}
    lines = [f"shape {json.dumps(list(shape.parts))}"]
    lines += [f"L_{i} {ls[i]}" for i in range(w.m, 0, -1)]
    _emit(args, lines,
          {"word": "".join(map(str, w.letters)), "m": w.m,
           "shape": list(shape.parts),
           "L": [ls[i] for i in range(w.m, 0, -1)]})
    return 0


def _render_result(r: CheckResult, as_json: bool) -> str:
    if as_json:
        return json.dumps(r.to_json(), sort_keys=False)
    status = "pass" if r.passed else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
    line = f"{status} {r.check_name} {params} ({r.elapsed:.3f}s)"
    if r.first_diff:
        line += f"  diff {r.first_diff[0]}: {r.first_diff[1]} != {r.first_diff[2]}"
    return line


def cmd_verify(args) -> int:
    if args.name == "all":
        results = run_all(args.level, workers=args.workers)
    else:
        if args.name not in CHECKS:
            raise UsageError(f"unknown check {args.name!r}")
        fn = CHECKS[args.name]
        accepted = set(inspect.signature(fn).parameters)
        supplied = {}
        mapping = {
            "k": args.k, "n": args.n, "m": args.m, "N": args.N,
            "N_max": args.N, "n_max": args.N, "mode": args.mode,
            "bound": args.bound,
            "lam": _parse_shape(args.shape) if args.shape else None,
        }
        for key, value in mapping.items():
            if key in accepted and value is not None:
                supplied[key] = value
        missing = [p for p, param in
                   inspect.signature(fn).parameters.items()
                   if param.default is inspect.Parameter.empty
                   and p not in supplied]
        if missing:
            raise UsageError(
                f"check {args.name!r} needs: {', '.join(sorted(missing))}")
        _check_caps(args, dims=[(d, supplied.get(d)) for d in ("k", "n", "m")],
                    N=supplied.get("N", supplied.get("N_max")))
        results = [fn(**supplied)]
    for r in results:
        print(_render_result(r, args.json))
    failed = [r for r in results if not r.passed]
    if not args.json:
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


# -- argument parsing --------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppbij",
        description="Plane partitions, the descent-level-count bijection, "
                    "and exact identity verification.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit JSON instead of text")
        p.add_argument("--unsafe-no-caps", action="store_true",
                       help="disable the parameter size caps")

    p = sub.add_parser("map", help="apply the bijection or the word map")
    p.add_argument("direction", choices=["phi", "inv", "word"])
    p.add_argument("--pp", help="plane partition as inline JSON rows")
    p.add_argument("--matrix", help="matrix as inline JSON")
    p.add_argument("--input", help="path to a JSON input file")
    p.add_argument("--w", help="word as a digit string")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    common(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", help="statistics table of a plane partition")
    p.add_argument("--pp", help="plane partition as inline JSON rows")
    p.add_argument("--input", help="path to a JSON input file")
    p.add_argument("--m", type=int, help="value range for column counts")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="count, list, or build a "
                                         "generating polynomial")
    p.add_argument("family", choices=["box", "shape", "st", "words"])
    p.add_argument("dims", type=int, nargs="*",
                   help="box dimensions k n m (family 'box')")
    p.add_argument("--shape", help="partition, comma-separated")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--stat", choices=sorted(_STATS))
    p.add_argument("--gf", metavar="VAR",
                   help="print the generating polynomial of --stat")
    p.add_argument("--list", action="store_true", help="list the family")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dalpha", help="descent enumeration count for a "
                                      "content vector")
    p.add_argument("--alpha", help="content vector, comma-separated")
    p.add_argument("--k", type=int, help="row length bound (omit for "
                                         "unbounded)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    common(p)
    p.set_defaults(func=cmd_dalpha)

    p = sub.add_parser("greene", help="tail subsequence lengths and the "
                                      "tableau shape of a word")
    p.add_argument("--w", help="word as a digit string")
    p.add_argument("--m", type=int)
    common(p)
    p.set_defaults(func=cmd_greene)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("name", help="check name or 'all'")
    p.add_argument("--level", default="small", choices=["small", "full"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--mode", choices=["entries", "rows"])
    p.add_argument("--bound", type=int)
    p.add_argument("--shape", help="partition, comma-separated")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
