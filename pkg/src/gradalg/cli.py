"""Command-line front end: ``gradalg validate|coind|radical|simples|bijection|smash|check``.

Exit codes: 0 pass, 1 mathematical failure (a witness is reported), 2 input
error (unreadable/malformed file, unknown module or degree, enumeration bound).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from pathlib import Path

from . import __version__
from .algebra import ModuleAxiomError, RModule
from .coind import coind
from .exactlin import EnumerationBoundError
from .graded import GradedModule, make_shift, validate_algebra
from .groups import GroupAxiomError
from .homs import regular_ae
from .instance import Instance, InstanceError, add_modules, dump_instance, parse_instance, read_json
from .simples import bijection_check, simple_ae_modules, sweep_graded_simples
from .suites import ALL, SUITES, Context, run_suites
from .torsion import torsion_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class MathFailure(Exception):
    def __init__(self, report: dict):
        super().__init__(json.dumps(report, sort_keys=True))
        self.report = report


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")


@contextlib.contextmanager
def _bound_env(bound: int | None):
    """--bound overrides GRADALG_BOUND for the duration of the command."""
    if bound is None:
        yield
        return
    old = os.environ.get("GRADALG_BOUND")
    os.environ["GRADALG_BOUND"] = str(bound)
    try:
        yield
    finally:
        if old is None:
            os.environ.pop("GRADALG_BOUND", None)
        else:
            os.environ["GRADALG_BOUND"] = old


# -- loading ------------------------------------------------------------------

def _validation(inst: Instance) -> dict:
    report = {"name": inst.name, "algebra": validate_algebra(inst.algebra).as_dict(), "modules": {}}
    ok = report["algebra"]["ok"]
    for name, m in inst.modules.items():
        if isinstance(m, GradedModule):
            mrep = m.validate().as_dict()
        else:
            w = m.axiom_witness()
            mrep = {"ok": w is None,
                    "checks": [{"check": "module_axioms", "passed": w is None, **({"witness": list(w)} if w else {})}]}
        report["modules"][name] = mrep
        ok = ok and mrep["ok"]
    report["ok"] = ok
    return report


def _load(path: str, *, require_valid: bool = True) -> Instance:
    """Parse, check the algebra before reading modules, then (optionally) the modules."""
    data = read_json(path)
    try:
        inst = parse_instance(data, with_modules=False)
    except GroupAxiomError as exc:
        raise MathFailure({"ok": False, "algebra": {"ok": False, "checks": [
            {"check": "group_axioms", "passed": False, "witness": list(getattr(exc, "witness", ())),
             "message": str(exc)}]}})
    algebra_report = validate_algebra(inst.algebra).as_dict()
    if not algebra_report["ok"]:
        raise MathFailure({"name": inst.name, "ok": False, "algebra": algebra_report, "modules": "skipped"})
    add_modules(inst, data)
    if require_valid:
        report = _validation(inst)
        if not report["ok"]:
            raise MathFailure(report)
    return inst


def _degree(inst: Instance, x: int) -> int:
    if not 0 <= x < inst.algebra.group.order:
        raise InputError(f"degree {x} is not an element of the group of order {inst.algebra.group.order}")
    return x


def _module(inst: Instance, name: str) -> GradedModule | RModule:
    """Modules from the file, plus built-ins ``regular_ae`` and ``shift:<y>``."""
    if name in inst.modules:
        return inst.modules[name]
    if name == "regular_ae":
        return regular_ae(inst.algebra)
    if name.startswith("shift:"):
        try:
            y = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad shift name {name!r}") from None
        return make_shift(inst.algebra, _degree(inst, y))
    raise InputError(f"unknown module {name!r}; available: {sorted(inst.modules)}")


def _context(inst: Instance, args) -> Context:
    graded = [m for m in inst.modules.values() if isinstance(m, GradedModule)]
    ae = [m for m in inst.modules.values() if isinstance(m, RModule)]
    return Context(inst.algebra, graded, ae, args.bound, args.seed)


# -- commands -----------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        report = _validation(_load(args.file, require_valid=False))
    except MathFailure as exc:
        report = exc.report
    _emit(report)
    for chk in report["algebra"]["checks"]:
        _say(f"{chk['check']}: {'pass' if chk['passed'] else 'FAIL ' + str(chk.get('witness'))}")
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_coind(args) -> int:
    inst = _load(args.file)
    x = _degree(inst, args.degree)
    n = _module(inst, args.module)
    if not isinstance(n, RModule):
        raise InputError(f"module {args.module!r} is graded; coind needs an A_e-module")
    c = coind(inst.algebra, x, n)
    name = f"Coind_{x}({args.module})"
    report = {"degree": x, "module": args.module, "name": name, "deg_dims": list(c.module.deg_dims),
              "dim": c.module.dim}
    if args.out:
        out = Instance(f"{inst.name}:{name}", inst.algebra, {name: c.module})
        dump_instance(out, args.out)
        report["out"] = str(args.out)
    _emit(report)
    _say(f"{name}: component dims {list(c.module.deg_dims)}")
    return EXIT_OK


def cmd_radical(args) -> int:
    inst = _load(args.file)
    x = _degree(inst, args.degree)
    m = _module(inst, args.module)
    if not isinstance(m, GradedModule):
        raise InputError(f"module {args.module!r} is not graded")
    report = torsion_report(x, m).as_dict()
    report["module"] = args.module
    report["module_dims"] = list(m.deg_dims)
    _emit(report)
    return EXIT_OK


def cmd_simples(args) -> int:
    inst = _load(args.file)
    a = inst.algebra
    report = {"ae_simples": [c.dim for c in simple_ae_modules(a)]}
    if args.degree is not None:
        x = _degree(inst, args.degree)
        report["degree"] = x
        report["graded_simples"] = [list(c.representative.deg_dims) for c in sweep_graded_simples(a, x)]
    _emit(report)
    return EXIT_OK


def cmd_bijection(args) -> int:
    inst = _load(args.file)
    rep = bijection_check(inst.algebra, _degree(inst, args.degree))
    _emit(rep.as_dict())
    for f in rep.failures:
        _say(f)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_smash(args) -> int:
    inst = _load(args.file)
    res = SUITES["smash"](_context(inst, args))
    _emit({"dimB": res.details.get("dimB"), "relations": res.details.get("relations"),
           "ratB_dim": res.details.get("ratB_dim")})
    for f in res.failures:
        _say(f)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_check(args) -> int:
    try:
        inst = _load(args.file)
    except MathFailure as exc:
        _emit({"ok": False, "validate": exc.report})
        return EXIT_FAIL
    names = ALL if args.suite == "all" else (args.suite,)
    results = run_suites(_context(inst, args), names)
    ok = all(r.ok for r in results.values())
    _emit({"ok": ok, "suites": {k: r.as_dict() for k, r in results.items()}})
    for k, r in results.items():
        _say(f"{k}: {'pass' if r.ok else 'FAIL'}" + "".join(f"\n  {f}" for f in r.failures))
    return EXIT_OK if ok else EXIT_FAIL


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gradalg", description="Exact computations with G-graded algebras over GF(p).")
    parser.add_argument("--version", action="version", version=f"gradalg {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="instance file (JSON)")
    common.add_argument("--bound", type=int, default=None, help="enumeration cap (overrides GRADALG_BOUND)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="check algebra and module axioms").set_defaults(func=cmd_validate)

    p = sub.add_parser("coind", parents=[common], help="coinduce an A_e-module")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_coind)

    p = sub.add_parser("radical", parents=[common], help="the radical r_x of a graded module")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--module", required=True)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("simples", parents=[common], help="simple A_e-modules and graded simples")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_simples)

    p = sub.add_parser("bijection", parents=[common], help="check the simples bijection at a degree")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_bijection)

    sub.add_parser("smash", parents=[common], help="build and verify the smash ring").set_defaults(func=cmd_smash)

    p = sub.add_parser("check", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        with _bound_env(args.bound):
            return args.func(args)
    except MathFailure as exc:
        _emit(exc.report)
        return EXIT_FAIL
    except ModuleAxiomError as exc:
        _emit({"ok": False, "error": str(exc), "witness": list(exc.witness)})
        return EXIT_FAIL
    except (InstanceError, InputError) as exc:
        _say(f"input error: {exc}")
        return EXIT_INPUT
    except EnumerationBoundError as exc:
        _say(f"enumeration bound exceeded: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
