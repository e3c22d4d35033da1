"""Command-line front end.

Exit codes: 0 when every check passes, 1 for semantic violations, 2 for
unreadable input or bad usage.  ``--json`` prints a machine report instead
of the text rendering.  Relative paths that do not exist are looked up in
the fixture directory (``SKEWCAT_FIXTURES`` or the bundled fixtures).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from . import serialize
from .dgcat import DgCategory, validate_dg_category
from .equivmod import (EquivariantModule, ModuleMismatchError, RightModule, from_skew_module,
                       hom_dim, roundtrip_check, to_skew_module, validate_equivariant,
                       validate_module)
from .graded import ChainComplex, validate_complex
from .groupact import NotAGroupError, StrictAction, validate_action, validate_monoid
from .orbit import OrbitHomQuery, laurent_dims, orbit_hom_dims
from .report import Report, ValidationError, Violation
from .skew import (HypothesisError, check_freeify, check_trivial_induced_action,
                   equivariance_of_embedding, freeify, reduce, skew_group_algebra,
                   skew_group_dg_category)

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad input files or arguments; maps to exit code 2."""


@dataclass
class RunReport:
    command: str
    violations: List[Violation] = field(default_factory=list)
    outputs: dict = field(default_factory=dict)
    error: Optional[str] = None
    lines: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "violations" if self.violations else "ok"

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "violations": EXIT_VIOLATIONS, "error": EXIT_USAGE}[self.status]

    def absorb(self, rep: Report, prefix: str = "") -> None:
        for v in rep.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.detail))
        self.lines.append(str(rep))

    def to_json(self) -> dict:
        out = {"command": self.command, "status": self.status,
               "violations": [v.to_json() for v in self.violations], "outputs": self.outputs}
        if self.error is not None:
            out["error"] = self.error
        return out

    def render(self) -> str:
        lines = list(self.lines)
        if self.error is not None:
            lines.append(f"error: {self.error}")
        lines.append(f"{self.command}: {self.status}")
        return "\n".join(lines)


def fixtures_dir() -> Path:
    env = os.environ.get("SKEWCAT_FIXTURES")
    return Path(env) if env else Path(__file__).parent / "fixtures"


def resolve(path: str) -> Path:
    p = Path(path)
    if p.exists() or p.is_absolute():
        return p
    for cand in (fixtures_dir() / path, fixtures_dir() / f"{path}.json"):
        if cand.exists():
            return cand
    return p


def load(path: str, *kinds):
    p = resolve(path)
    try:
        obj = serialize.load(p)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from exc
    except serialize.SchemaError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if kinds and not isinstance(obj, kinds):
        want = " or ".join(k.__name__ for k in kinds)
        raise UsageError(f"{path}: expected {want}, got {type(obj).__name__}")
    return obj


def _emit(run: RunReport, name: str, obj, out: Optional[str]) -> None:
    if out:
        serialize.save(obj, out)
        run.outputs[name] = out
    else:
        run.outputs[name] = serialize.to_json(obj)


def _variant_path(out: Optional[str], suffix: str) -> Optional[str]:
    if not out:
        return None
    p = Path(out)
    return str(p.with_name(f"{p.stem}.{suffix}{p.suffix or '.json'}"))


def validate_object(obj) -> Report:
    """Run every validator that applies to a decoded document."""
    if isinstance(obj, EquivariantModule):
        rep = Report("equivariant")
        rep.extend(validate_dg_category(obj.action.category), "algebra.")
        rep.extend(validate_action(obj.action), "action.")
        if rep.ok:
            rep.extend(validate_equivariant(obj))
        return rep
    if isinstance(obj, RightModule):
        rep = Report("module")
        rep.extend(validate_dg_category(obj.algebra), "algebra.")
        if rep.ok:
            rep.extend(validate_module(obj))
        return rep
    if isinstance(obj, StrictAction):
        rep = Report("action")
        rep.extend(validate_monoid(obj.monoid), "monoid.")
        rep.extend(validate_dg_category(obj.category), "category.")
        if rep.ok:
            rep.extend(validate_action(obj))
        return rep
    if isinstance(obj, DgCategory):
        return validate_dg_category(obj)
    if isinstance(obj, ChainComplex):
        return validate_complex(obj)
    raise TypeError(type(obj).__name__)


# commands

def cmd_validate(args) -> RunReport:
    run = RunReport("validate")
    obj = load(args.path)
    run.absorb(validate_object(obj))
    return run


def cmd_skew(args) -> RunReport:
    run = RunReport("skew")
    rho = load(args.action, StrictAction)
    rep = validate_object(rho)
    if not rep.ok:
        run.absorb(rep)
        return run
    s = skew_group_dg_category(rho, check=False)
    run.lines.append(f"skew category: {len(s.category.objects)} object(s)")
    _emit(run, "skew", s.category, args.output)
    if args.reduce:
        try:
            red = reduce(s)
        except NotAGroupError as exc:
            run.violations.append(Violation("group", (), str(exc)))
        else:
            run.lines.append(f"reduced on representatives {', '.join(red.representatives)}")
            _emit(run, "reduced", red.category, _variant_path(args.output, "reduced"))
    if args.algebra:
        if not rho.category.is_algebra():
            run.violations.append(Violation("algebra", (), "the action is not on a one-object degree-0 algebra"))
        else:
            ag = skew_group_algebra(rho, check=False)
            run.lines.append(f"skew group algebra: dimension {ag.dimension}, basis {', '.join(ag.basis_labels)}")
            _emit(run, "algebra", ag, _variant_path(args.output, "algebra"))
    if args.check_equivariance:
        try:
            run.absorb(equivariance_of_embedding(s), "equivariance.")
        except NotAGroupError as exc:
            run.violations.append(Violation("equivariance.group", (), str(exc)))
    if args.check_trivial_induced:
        try:
            run.absorb(check_trivial_induced_action(rho, skew=s), "trivial_induced.")
        except NotAGroupError as exc:
            run.violations.append(Violation("trivial_induced.group", (), str(exc)))
        except HypothesisError as exc:
            run.violations.append(Violation("trivial_induced.hypothesis", (), str(exc)))
            run.lines.append(f"hypothesis failed: {exc}")
    return run


def cmd_freeify(args) -> RunReport:
    run = RunReport("freeify")
    rho = load(args.action, StrictAction)
    rep = validate_object(rho)
    if not rep.ok:
        run.absorb(rep)
        return run
    try:
        res = freeify(rho)
    except NotAGroupError as exc:
        run.violations.append(Violation("group", (), str(exc)))
        run.lines.append(f"not a group: {exc}")
        return run
    run.lines.append(f"free objects: {', '.join(res.category.objects)}")
    run.absorb(check_freeify(res, rho))
    _emit(run, "action", res.action, args.output)
    run.outputs["projection"] = serialize.functor_to_json(res.projection)
    return run


def cmd_equiv(args) -> RunReport:
    run = RunReport("equiv")
    rho = load(args.action, StrictAction)
    rep = validate_object(rho)
    if not rep.ok:
        run.absorb(rep)
        return run
    if not rho.monoid.is_group:
        run.violations.append(Violation("group", (), "equivariant modules need a group"))
        return run
    if not rho.category.is_algebra():
        run.violations.append(Violation("algebra", (), "the action is not on a one-object degree-0 algebra"))
        return run
    mod = _bind(load(args.module, EquivariantModule, RightModule), rho)
    try:
        if args.roundtrip:
            rt = roundtrip_check(mod, rho)
            run.absorb(rt)
            if rt.intertwiner is not None:
                run.outputs["intertwiner"] = [[str(x) for x in row] for row in rt.intertwiner.to_rows()]
        else:
            other = _bind(load(args.homdim, EquivariantModule, RightModule), rho)
            lhs, rhs = _homdims(mod, other, rho)
            run.outputs["hom_dims"] = {"source_side": lhs, "skew_side": rhs}
            run.lines.append(f"hom dimension: {lhs} before, {rhs} after the equivalence")
            if lhs != rhs:
                run.violations.append(Violation("hom_dim", (args.module, args.homdim), f"{lhs} != {rhs}"))
    except (ModuleMismatchError, ValueError) as exc:
        run.violations.append(Violation("mismatch", (), str(exc)))
    return run


def _bind(obj, rho: StrictAction):
    """Let a module refer to the command's action when the two are equal."""
    if isinstance(obj, EquivariantModule) and obj.action is not rho and obj.action == rho:
        obj = EquivariantModule(rho, obj.base, obj.u)
    return obj


def _homdims(m, n, rho):
    if isinstance(m, EquivariantModule) and isinstance(n, EquivariantModule):
        return hom_dim(m, n), hom_dim(to_skew_module(m, rho), to_skew_module(n, rho))
    if isinstance(m, RightModule) and isinstance(n, RightModule):
        return hom_dim(m, n), hom_dim(from_skew_module(m, rho), from_skew_module(n, rho))
    raise ValueError("--homdim needs two modules of the same kind")


def cmd_orbit(args) -> RunReport:
    run = RunReport("orbit")
    if args.period == 0:
        raise UsageError("--period must be nonzero")
    src = load(args.source, ChainComplex)
    tgt = load(args.target, ChainComplex) if args.target else src
    for name, c in (("source", src), ("target", tgt)):
        rep = validate_complex(c)
        if not rep.ok:
            run.absorb(rep, f"{name}.")
    if run.violations:
        return run
    lo, hi = args.window
    dims = orbit_hom_dims(OrbitHomQuery(src, tgt, args.period, (lo, hi)))
    table = {d: dims.get(d) for d in range(lo, hi + 1)}
    run.outputs["dims"] = {str(d): v for d, v in table.items()}
    run.lines.append("degree  dim")
    run.lines += [f"{d:>6}  {v}" for d, v in table.items()]
    if args.laurent_check:
        expect = laurent_dims(args.period, (lo, hi))
        for d in table:
            if table[d] != expect.get(d):
                run.violations.append(Violation("laurent", (d,), f"{table[d]} != {expect.get(d)}"))
    return run


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewcat", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="print a machine-readable report")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the axioms of a JSON document")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("skew", help="build the skew group category of an action")
    s.add_argument("action")
    s.add_argument("--reduce", action="store_true", help="also emit the reduced skew category")
    s.add_argument("--algebra", action="store_true", help="also emit the skew group algebra")
    s.add_argument("--check-equivariance", action="store_true")
    s.add_argument("--check-trivial-induced", action="store_true")
    s.add_argument("-o", "--output", help="write the skew category here; variants get a suffix")
    s.set_defaults(func=cmd_skew)

    f = sub.add_parser("freeify", help="replace an action by one free on objects")
    f.add_argument("action")
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_freeify)

    e = sub.add_parser("equiv", help="equivariant modules versus modules over the skew algebra")
    e.add_argument("action")
    e.add_argument("module")
    mode = e.add_mutually_exclusive_group(required=True)
    mode.add_argument("--roundtrip", action="store_true")
    mode.add_argument("--homdim", metavar="OTHER")
    e.set_defaults(func=cmd_equiv)

    o = sub.add_parser("orbit", help="orbit hom dimensions under the n-fold shift")
    o.add_argument("source")
    o.add_argument("target", nargs="?")
    o.add_argument("--period", type=int, required=True)
    o.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), required=True)
    o.add_argument("--laurent-check", action="store_true")
    o.set_defaults(func=cmd_orbit)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        run = args.func(args)
    except UsageError as exc:
        run = RunReport(args.command, error=str(exc))
    except ValidationError as exc:
        run = RunReport(args.command)
        run.absorb(exc.report)
    if args.json:
        print(json.dumps(run.to_json(), indent=1, ensure_ascii=False))
    else:
        print(run.render(), file=sys.stderr if run.status == "error" else sys.stdout)
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
