"""Command-line front end.

JSON results are printed as ``{"status": "ok", "payload": ...}`` with sorted
keys; tables are CSV.  Errors go to stderr as JSON with a stable code.
Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from pathlib import Path

from . import __version__, gdecomp, lattice, loopcat, semisimple, specialblock as sb, verify
from .branching import canonical, induced_H_decomp, mackey_res_ind
from .weights import parse_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, code: str, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.code, self.message, self.exit_code = code, message, exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("E_USAGE", message)


# -- helpers -----------------------------------------------------------------

def _dump(payload) -> str:
    return json.dumps({"status": "ok", "payload": payload}, sort_keys=True, ensure_ascii=False)


def _load_json(path: str):
    """Read a JSON file; our own ``{"status": "ok", "payload": ...}`` output is unwrapped."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if isinstance(data, dict) and data.get("status") == "ok" and "payload" in data:
            return data["payload"]
        return data
    except FileNotFoundError:
        raise CliError("E_INPUT", f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise CliError("E_INPUT", f"{path}: invalid JSON ({exc.msg})") from None


def _weight(text: str) -> str:
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise CliError("E_INPUT", str(exc)) from None


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _table(kind: str, max_n: int) -> str:
    if max_n < 0:
        raise CliError("E_INPUT", "--max must be nonnegative")
    data = lattice.delannoy_table(max_n) if kind == "delannoy" else lattice.circular_table(max_n)
    rows = [["m\\n"] + list(range(max_n + 1))]
    rows += [[m] + row for m, row in enumerate(data)]
    return _csv(rows)


def _module_or_label(arg: str):
    """A path to a module JSON file, or a label such as J+(0,2) or R(1)."""
    if arg.endswith(".json") or os.path.isfile(arg):
        try:
            return sb.GradedRModule.from_json(_load_json(arg))
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError("E_INPUT", f"{arg}: malformed module ({exc})") from None
    try:
        return sb.parse_label(arg)
    except ValueError as exc:
        raise CliError("E_INPUT", str(exc)) from None


def _as_module(x) -> sb.GradedRModule:
    return x if isinstance(x, sb.GradedRModule) else sb.make(x)


def _morphism(path: str) -> loopcat.Morphism:
    try:
        return loopcat.Morphism.from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("E_INPUT", f"{path}: malformed morphism ({exc})") from None


def _bidegree(text: str) -> tuple[int, int]:
    try:
        n, m = (int(x) for x in text.split(","))
    except ValueError:
        raise CliError("E_INPUT", f"bidegree must look like n,m: {text!r}") from None
    return n, m


# -- subcommands ---------------------------------------------------------------

def cmd_table(args) -> tuple[str, int]:
    return _table(args.kind, args.max), EXIT_OK


def cmd_loops(args) -> tuple[str, int]:
    if args.n < 1 or args.m < 1:
        raise CliError("E_INPUT", "loops need n, m >= 1")
    if args.orbits:
        orbits = lattice.loop_orbits(args.n, args.m)
        payload = {"count": sum(len(o) for o in orbits), "orbits": [[p.to_json() for p in o] for o in orbits]}
    else:
        loops = lattice.enumerate_loops(args.n, args.m)
        payload = {"count": len(loops), "loops": [p.to_json() for p in loops]}
    return _dump(payload), EXIT_OK


def cmd_compose(args) -> tuple[str, int]:
    f, g = _morphism(args.f), _morphism(args.g)
    try:
        return _dump(loopcat.compose(f, g).to_json()), EXIT_OK
    except ValueError as exc:
        raise CliError("E_INPUT", str(exc)) from None


def cmd_identity(args) -> tuple[str, int]:
    if args.n < 1:
        raise CliError("E_INPUT", "identity needs n >= 1")
    try:
        return _dump(loopcat.identity(args.n).to_json()), EXIT_OK
    except loopcat.LoopCategoryError as exc:
        raise CliError("E_DOMAIN", str(exc), EXIT_FAIL) from None


def cmd_endalgebra(args) -> tuple[str, int]:
    if args.n < 1:
        raise CliError("E_INPUT", "endalgebra needs n >= 1")
    basis, consts = loopcat.end_algebra(args.n)
    payload = {
        "n": args.n,
        "basis": [p.to_json() for p in basis],
        "constants": [{"i": i, "j": j, "k": k, "c": c} for (i, j, k), c in sorted(consts.items())],
    }
    return _dump(payload), EXIT_OK


def cmd_branch(args) -> tuple[str, int]:
    lam = _weight(args.weight)
    dec = induced_H_decomp(lam) if args.how == "induce" else mackey_res_ind(lam)
    return _dump({"weight": lam, "decomposition": canonical(dec)}), EXIT_OK


def cmd_decompose(args) -> tuple[str, int]:
    if args.what == "schwartz":
        try:
            n = int(args.arg)
        except ValueError:
            raise CliError("E_INPUT", f"expected a positive integer, got {args.arg!r}") from None
        if n < 1:
            raise CliError("E_INPUT", "schwartz needs n >= 1")
        dec = gdecomp.schwartz_g_decomp(n)
    else:
        dec = gdecomp.induced_proj_decomp(_weight(args.arg))
    return _dump(gdecomp.decomp_to_json(dec)), EXIT_OK


def cmd_special(args) -> tuple[str, int]:
    if args.action == "make":
        lab = _module_or_label(args.target)
        return _dump(_as_module(lab).to_json()), EXIT_OK
    if args.action == "decompose":
        M = _as_module(_module_or_label(args.target))
        return _dump(sb.decomp_to_json(sb.decompose(M))), EXIT_OK
    if args.action == "heller":
        M = _as_module(_module_or_label(args.target))
        shifted, discarded = sb.heller_module(M, args.k)
        payload = {"k": args.k, "summands": sb.decomp_to_json(sb.decompose(shifted)),
                   "discarded_free": sb.decomp_to_json(discarded)}
        return _dump(payload), EXIT_OK
    A = _as_module(_module_or_label(args.target))
    B = _as_module(_module_or_label(args.other))
    return _dump({"hom_dim": sb.hom_dim(A, B)}), EXIT_OK


def cmd_ss(args) -> tuple[str, int]:
    if args.action == "image":
        lab = _module_or_label(args.items[0]) if len(args.items) == 1 else None
        if not isinstance(lab, (sb.Zigzag, sb.FreeR)):
            raise CliError("E_USAGE", "ss image takes exactly one label")
        u = semisimple.ss_image(lab)
        return _dump(None if u is None else {"n": u[0], "m": u[1]}), EXIT_OK
    if not args.items:
        raise CliError("E_USAGE", "ss tensor needs at least one bidegree")
    out = semisimple.BigradedObject({(0, 0): 1})
    for text in args.items:
        out = semisimple.ss_tensor(out, semisimple.BigradedObject({_bidegree(text): 1}))
    return _dump(out.to_json()), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    results = verify.run_all(args.level, args.seed)
    lines = [r.line() for r in results]
    failed = [r for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return "\n".join(lines), EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="circlerep", description="Circular Delannoy loops and the circle category.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--seed", type=int, default=None, help="seed for randomized checks (default: $SEED or 0)")
    p.add_argument("--timing", action="store_true", help="report elapsed_ms on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="CSV tables of D(n,m) or C(n,m)")
    t.add_argument("kind", choices=["delannoy", "circular"])
    t.add_argument("--max", type=int, default=9)
    t.set_defaults(func=cmd_table)

    lp = sub.add_parser("loops", help="Delannoy loops on the n x m torus")
    lp.add_argument("action", choices=["enumerate"])
    lp.add_argument("n", type=int)
    lp.add_argument("m", type=int)
    lp.add_argument("--orbits", action="store_true")
    lp.set_defaults(func=cmd_loops)

    c = sub.add_parser("compose", help="compose two morphisms stored as JSON")
    c.add_argument("f")
    c.add_argument("g")
    c.set_defaults(func=cmd_compose)

    i = sub.add_parser("identity", help="solve for the identity of End(n)")
    i.add_argument("n", type=int)
    i.set_defaults(func=cmd_identity)

    e = sub.add_parser("endalgebra", help="structure constants of End(n)")
    e.add_argument("n", type=int)
    e.set_defaults(func=cmd_endalgebra)

    b = sub.add_parser("branch", help="restriction of induced modules to H")
    b.add_argument("how", choices=["induce", "mackey"])
    b.add_argument("weight")
    b.set_defaults(func=cmd_branch)

    d = sub.add_parser("decompose", help="decompositions into indecomposable projectives")
    d.add_argument("what", choices=["schwartz", "induced"])
    d.add_argument("arg")
    d.set_defaults(func=cmd_decompose)

    s = sub.add_parser("special", help="graded R-modules")
    s.add_argument("action", choices=["make", "decompose", "heller", "homdim"])
    s.add_argument("target", help="label such as J+(0,2), R(1), M(0), D(1), N(0), or a module JSON file")
    s.add_argument("other", nargs="?", help="heller: the shift k; homdim: second module")
    s.set_defaults(func=cmd_special)

    ss = sub.add_parser("ss", help="semisimplification")
    ss.add_argument("action", choices=["image", "tensor"])
    ss.add_argument("items", nargs="*", help="image: one label; tensor: bidegrees n,m")
    ss.set_defaults(func=cmd_ss)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--level", choices=list(verify.LEVELS), default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def _fix_special_args(args) -> None:
    if args.command != "special":
        return
    if args.action == "heller":
        if args.other is None:
            raise CliError("E_USAGE", "special heller needs a shift k")
        try:
            args.k = int(args.other)
        except ValueError:
            raise CliError("E_USAGE", f"shift must be an integer, got {args.other!r}") from None
    elif args.action == "homdim" and args.other is None:
        raise CliError("E_USAGE", "special homdim needs two modules")
    elif args.action in ("make", "decompose") and args.other is not None:
        raise CliError("E_USAGE", f"special {args.action} takes one argument")


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Parse and execute; returns (stdout text, exit code).  Raises CliError."""
    args = build_parser().parse_args(argv)
    if args.seed is None:
        try:
            args.seed = verify.default_seed()
        except ValueError:
            raise CliError("E_USAGE", "SEED must be an integer") from None
    _fix_special_args(args)
    return args.func(args)


def main(argv: list[str] | None = None) -> int:
    t0 = time.perf_counter()
    timing = "--timing" in (sys.argv[1:] if argv is None else argv)
    try:
        out, code = run(argv)
    except CliError as exc:
        err = {"status": "error", "error": {"code": exc.code, "message": exc.message}}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        code = exc.exit_code
    else:
        print(out)
    if timing:
        print(json.dumps({"elapsed_ms": round(1000 * (time.perf_counter() - t0))}), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
