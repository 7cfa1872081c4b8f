"""Command-line front end (installed as ``fpa``).

Exit codes: 0 success, 1 parse error, 2 domain error or failed check
suite, 3 undecided (step budget or bounded search exhausted).
"""

import argparse
import json
import sys

from . import calculus, symplectic, syntax
from .depend import StepBudgetExceeded, brute_force_dependence, decide_left_dependence
from .env import ham
from .symplectic import moyal, symmetrize, theta_left, theta_right, weyl_mul
from .syntax import DomainError, ParseError, parse_element


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _emit(args, value):
    if args.format == "json":
        print(_dumps(syntax.to_json(value)))
    else:
        print(syntax.render(value))
    return 0


def _cmd_bracket(args):
    return _emit(args, parse_element(args.expr, args.n, "poisson"))


def _cmd_mul(args):
    mode = args.mode
    a = parse_element(args.lhs, args.n, mode)
    b = parse_element(args.rhs, args.n, mode)
    if mode == "weyl":
        return _emit(args, weyl_mul(a, b))
    return _emit(args, a * b)


def _cmd_ham(args):
    p = parse_element(args.expr, args.n, "poisson")
    return _emit(args, ham(p))


def _cmd_fox(args):
    p = parse_element(args.expr, args.n, "poisson")
    if not 1 <= args.index <= args.n:
        raise DomainError(f"variable index {args.index} out of range 1..{args.n}")
    return _emit(args, calculus.fox(p, args.index))


def _matrix_out(args, mat):
    if args.format == "json":
        rows = [[syntax.to_json(e) for e in row] for row in mat.entries]
        print(_dumps({"rows": rows}))
    else:
        for row in mat.entries:
            print("[" + ", ".join(syntax.render(e) for e in row) + "]")
    return 0


def _cmd_jacobian(args):
    if len(args.images) != args.n:
        raise DomainError(f"expected {args.n} images, got {len(args.images)}")
    images = [parse_element(s, args.n, "poisson") for s in args.images]
    psi = calculus.Endomorphism(args.n, images)
    jac = calculus.jacobian(psi)
    if not args.invert:
        return _matrix_out(args, jac)
    res = calculus.invert_jacobian_bounded(jac, args.hdeg_bound, args.coeff_bound)
    if res.status != "invertible":
        print(
            f"inverse not found within hdeg {args.hdeg_bound}, "
            f"coefficient degree {args.coeff_bound}",
            file=sys.stderr,
        )
        return 3
    return _matrix_out(args, res.V)


def _cmd_depend(args):
    elems = [parse_element(s, args.n, "env") for s in args.elements]
    if args.oracle:
        witness = brute_force_dependence(
            elems, args.hdeg_bound, args.coeff_bound, n=args.n
        )
        if witness is None:
            obj = {
                "status": "no_witness",
                "hdeg_bound": args.hdeg_bound,
                "coeff_deg_bound": args.coeff_bound,
            }
        else:
            obj = {"status": "dependent", "witness": [syntax.render(w) for w in witness]}
        print(_dumps(obj))
        return 0
    verdict = decide_left_dependence(elems, max_steps=args.max_steps)
    if verdict.status == "dependent":
        obj = {
            "status": "dependent",
            "witness": [syntax.render(w) for w in verdict.witness],
        }
    else:
        obj = {"status": "independent"}
    print(_dumps(obj))
    return 0


def _cmd_pair_status(args):
    f = parse_element(args.f, args.n, "poisson")
    g = parse_element(args.g, args.n, "poisson")
    ps = calculus.pair_status(f, g, max_steps=args.max_steps)
    obj = {"status": ps.status}
    if ps.status == "dependent":
        if ps.lam is not None:
            obj["lambda"] = syntax.render(ps.lam)
            obj["mu"] = syntax.render(ps.mu)
        else:
            obj["witness"] = [syntax.render(w) for w in ps.witness]
    print(_dumps(obj))
    return 0


def _cmd_moyal(args):
    f = parse_element(args.f, args.n, "symplectic")
    g = parse_element(args.g, args.n, "symplectic")
    return _emit(args, moyal(f, g))


def _cmd_symmetrize(args):
    f = parse_element(args.f, args.n, "symplectic")
    return _emit(args, symmetrize(f))


def _cmd_theta_left(args):
    a = parse_element(args.a, args.n, "weyl")
    return _emit(args, theta_left(a))


def _cmd_theta_right(args):
    a = parse_element(args.a, args.n, "weyl")
    return _emit(args, theta_right(a))


def _cmd_weyl_mul(args):
    a = parse_element(args.lhs, args.n, "weyl")
    b = parse_element(args.rhs, args.n, "weyl")
    return _emit(args, weyl_mul(a, b))


def _cmd_check(args):
    from . import checks

    names = args.suites or [name for name, _, _ in checks.REGISTRY]
    all_ok = True
    for name in names:
        result = checks.run_check(name, seed=args.seed)
        print(("ok   " if result.passed else "FAIL ") + f"{result.name}: {result.detail}")
        all_ok = all_ok and result.passed
    return 0 if all_ok else 2


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, required=True, help="number of x-variables")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-steps", type=int, default=100_000)

    top = argparse.ArgumentParser(prog="fpa", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", parents=[common], help="evaluate a bracket expression")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    p.add_argument("--mode", choices=("poisson", "env", "symplectic", "weyl"), default="env")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("ham", parents=[common], help="Hamiltonian of a bracket polynomial")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_ham)

    p = sub.add_parser("fox", parents=[common], help="partial derivative into the enveloping algebra")
    p.add_argument("expr")
    p.add_argument("index", type=int)
    p.set_defaults(func=_cmd_fox)

    p = sub.add_parser("jacobian", parents=[common], help="Jacobian matrix of an endomorphism")
    p.add_argument("images", nargs="+")
    p.add_argument("--invert", action="store_true")
    p.add_argument("--hdeg-bound", type=int, default=3)
    p.add_argument("--coeff-bound", type=int, default=6)
    p.set_defaults(func=_cmd_jacobian)

    p = sub.add_parser("depend", parents=[common], help="decide left dependence")
    p.add_argument("elements", nargs="+")
    p.add_argument("--oracle", action="store_true", help="bounded brute-force search")
    p.add_argument("--hdeg-bound", type=int, default=2)
    p.add_argument("--coeff-bound", type=int, default=2)
    p.set_defaults(func=_cmd_depend)

    p = sub.add_parser("pair-status", parents=[common], help="classify a pair as free or dependent")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=_cmd_pair_status)

    p = sub.add_parser("moyal", parents=[common], help="Moyal star product")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=_cmd_moyal)

    p = sub.add_parser("symmetrize", parents=[common], help="symmetrization into the Weyl algebra")
    p.add_argument("f")
    p.set_defaults(func=_cmd_symmetrize)

    p = sub.add_parser("theta-left", parents=[common], help="left Weyl embedding")
    p.add_argument("a")
    p.set_defaults(func=_cmd_theta_left)

    p = sub.add_parser("theta-right", parents=[common], help="right Weyl embedding")
    p.add_argument("a")
    p.set_defaults(func=_cmd_theta_right)

    p = sub.add_parser("weyl-mul", parents=[common], help="product in the Weyl algebra")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=_cmd_weyl_mul)

    p = sub.add_parser("check", parents=[common], help="run property suites")
    p.add_argument("suites", nargs="*")
    p.set_defaults(func=_cmd_check)

    return top


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except StepBudgetExceeded as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
