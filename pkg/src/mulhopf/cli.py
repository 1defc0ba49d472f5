"""Command line front end: read an algebra specification, run law suites, print a report.

Exit status is 0 when every selected law passes, 1 when one fails and 2 for
input errors or unmet preconditions.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import os
import sys
from importlib import resources

import jsonschema

from . import instances as inst
from .bimonoids import (
    MultiplierBimonoid, RegularStructure, check_bimonoid, check_regular, infer_regular,
)
from .comodules import (
    check_comodule, check_conv_inverse, check_dual_comodule, check_pushforward, check_q,
    coaction_inverse, dual_comodule, from_q, pushforward, regular_comodule, tensor_comodule,
    to_q, unit_comodule,
)
from .exactlin import QQ, GF, UNIT, LinAlgError, LinMap, space
from .hopf import antipode_suite
from .hopfmodules import PreconditionUnmet, check_hopf_module, free_hopf_module, fthm_check
from .modules import (
    check_dual_module, check_regular_module, check_restrict, check_tensor_module, dual_module,
    lift, regular_module, restrict, tensor_module, trivial_module,
)
from .multipliers import identity_mm
from .report import CheckReport, LawResult, Witness

COMMANDS = ("check-bimonoid", "check-regular", "check-hopf", "antipode", "check-comodule",
            "check-module", "check-hopfmodule", "fthm", "all")
SPARSE_COMMANDS = ("check-bimonoid", "check-hopf", "all")


class ParseError(Exception):
    pass


def _schema(name):
    return json.loads(resources.files("mulhopf").joinpath("schemas", name).read_text("utf-8"))


def report_schema():
    return _schema("report.schema.json")


# ------------------------------------------------------------------ loading


class Instance:
    def __init__(self, name, field, B=None, R=None, sparse=None):
        self.name, self.field, self.B, self.R, self.sparse = name, field, B, R, sparse


def _field(spec):
    if spec["kind"] == "rational":
        return QQ
    try:
        return GF(spec["p"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _matrix(rows, dom, cod, field, what):
    try:
        return LinMap.from_rows(rows, dom, cod, field)
    except (LinAlgError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{what}: {exc}") from exc


def load_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        jsonschema.validate(doc, _schema("spec.schema.json"))
    except jsonschema.ValidationError as exc:
        raise ParseError(f"invalid specification: {exc.message}") from exc
    F = _field(doc["field"])
    name = doc.get("name", "")
    if "raw" in doc:
        return _load_raw(doc["raw"], F, name or "raw")
    b = doc["builder"]
    if b["kind"] == "sparse":
        groups = {"integers": inst.Integers, "free2": inst.FreeGroup2}
        if b["group"] == "symmetric":
            if "n" not in b:
                raise ParseError("the symmetric group needs n")
            G = inst.SymmetricGroup(b["n"])
        else:
            G = groups[b["group"]]()
        return Instance(name or f"sparse({b['group']})", F,
                        sparse=inst.sparse_function_algebra(G, F))
    try:
        T = inst.table_from_json(b["table"])
        build = inst.function_algebra if b["kind"] == "function_algebra" else inst.group_algebra
        B, R = build(T, F)
    except (inst.InvalidTable, ValueError, IndexError) as exc:
        raise ParseError(f"bad table: {exc}") from exc
    return Instance(name or b["kind"], F, B, R)


def _load_raw(raw, F, name):
    n = raw["dim"]
    names = raw.get("names")
    if names is not None and len(names) != n:
        raise ParseError("names must match dim")
    A = space("A", n, names)
    A2 = A * A
    t1 = _matrix(raw["t1"], A2, A2, F, "t1")
    t2 = _matrix(raw["t2"], A2, A2, F, "t2")
    e = _matrix([raw["e"]], A, UNIT, F, "e")
    B = MultiplierBimonoid(A, t1, t2, e, name=name)
    if ("t3" in raw) != ("t4" in raw):
        raise ParseError("t3 and t4 come together")
    R = None
    if "t3" in raw:
        R = RegularStructure(_matrix(raw["t3"], A2, A2, F, "t3"),
                             _matrix(raw["t4"], A2, A2, F, "t4"))
    return Instance(name, F, B, R)


# ------------------------------------------------------------------- suites


def _regular(B, R):
    R = R or infer_regular(B)
    if R is None:
        raise PreconditionUnmet("no regular structure (t3, t4) exists")
    return R


def suite_bimonoid(I, seed, ctx):
    return check_bimonoid(I.B)


def suite_regular(I, seed, ctx):
    return check_regular(I.B, _regular(I.B, I.R))


def suite_hopf(I, seed, ctx):
    R = I.R or infer_regular(I.B)
    antipode, _, r = antipode_suite(I.B, R)
    if antipode is not None and antipode.sbar is not None:
        rows = antipode.sbar.to_rows()
        ctx["derived"]["sbar"] = [[I.field.format(x) for x in row] for row in rows]
    return r


def _antipode(I, R, ctx, suite):
    """The antipode, or None after recording why the Hopf-dependent part is skipped."""
    antipode, _, rep = antipode_suite(I.B, R)
    if antipode is None:
        bad = "; ".join(law.witness.text for law in rep.failures)
        ctx["skipped"].append({"suite": suite, "reason": f"not a multiplier Hopf monoid ({bad})"})
    return antipode


def suite_comodule(I, seed, ctx):
    B = I.B
    R = _regular(B, I.R)
    r = CheckReport(field=I.field)
    C = regular_comodule(B, R)
    r.extend(check_comodule(B, R, C), "regular.")
    r.extend(check_comodule(B, R, unit_comodule(B)), "unit.")
    i = identity_mm(B.semigroup)
    r.extend(check_pushforward(i, C, pushforward(i, C), B, R), "regular.")
    qm = to_q(B, C)
    r.extend(check_q(B, qm), "regular.")
    back = from_q(qm)
    r.equal("regular.q_roundtrip.v1", back.v1, C.v1)
    r.equal("regular.q_roundtrip.v3", back.v3, C.v3)
    r.extend(check_comodule(B, R, tensor_comodule(B, C, C)), "regular_tensor_regular.")
    antipode = _antipode(I, R, ctx, "check-comodule:antipode")
    if antipode is None:
        return r
    try:
        coaction_inverse(C, antipode)
        r.add(LawResult("regular.coaction_inverse", True))
    except LinAlgError as exc:
        r.add(LawResult("regular.coaction_inverse", False, Witness(text=str(exc))))
    r.extend(check_conv_inverse(i, antipode.s, B, R), "regular.")
    D, d = dual_comodule(B, C, antipode)
    r.extend(check_dual_comodule(B, R, C, D, d), "regular.")
    return r


def suite_module(I, seed, ctx):
    B = I.B
    R = _regular(B, I.R)
    S = B.semigroup
    r = CheckReport(field=I.field)
    M = regular_module(B)
    r.extend(check_regular_module(B, R, lift(B, R, M)), "regular.")
    T = trivial_module(B)
    r.extend(check_regular_module(B, R, lift(B, R, T)), "trivial.")
    r.extend(check_tensor_module(B, M, M, tensor_module(B, M, M)), "regular_tensor_regular.")
    r.extend(check_tensor_module(B, M, T, tensor_module(B, M, T)), "regular_tensor_trivial.")
    i = identity_mm(S)
    r.extend(check_restrict(i, M, restrict(i, M), S), "regular.")
    antipode = _antipode(I, R, ctx, "check-module:dual")
    if antipode is None:
        return r
    D, d = dual_module(B, antipode, M)
    r.extend(check_dual_module(B, M, D, d), "regular.")
    return r


def suite_hopfmodule(I, seed, ctx):
    B = I.B
    R = _regular(B, I.R)
    r = CheckReport(field=I.field)
    for k in (1, 2):
        X = space("X", k)
        r.extend(check_hopf_module(B, R, free_hopf_module(B, R, X)), f"free[{k}].")
    return r


def suite_fthm(I, seed, ctx):
    R = I.R or infer_regular(I.B)
    return fthm_check(I.B, R, seed=seed)


def suite_sparse(I, seed, ctx):
    return inst.sparse_law_check(I.sparse, seed)


SUITES = {
    "check-bimonoid": suite_bimonoid,
    "check-regular": suite_regular,
    "check-hopf": suite_hopf,
    "antipode": suite_hopf,
    "check-comodule": suite_comodule,
    "check-module": suite_module,
    "check-hopfmodule": suite_hopfmodule,
    "fthm": suite_fthm,
}
ALL_ORDER = ("check-bimonoid", "check-regular", "check-hopf", "check-comodule", "check-module",
             "check-hopfmodule", "fthm")


def run(command, I, seed):
    """(report, derived, skipped); raises PreconditionUnmet for a single unmet suite."""
    ctx = {"derived": {}, "skipped": []}
    if I.sparse is not None:
        if command not in SPARSE_COMMANDS:
            raise PreconditionUnmet(f"{command} needs a finite-dimensional instance")
        return suite_sparse(I, seed, ctx), ctx["derived"], ctx["skipped"]
    if command != "all":
        return SUITES[command](I, seed, ctx), ctx["derived"], ctx["skipped"]
    r = CheckReport(field=I.field)
    for name in ALL_ORDER:
        try:
            r.extend(SUITES[name](I, seed, ctx), f"{name}:")
        except PreconditionUnmet as exc:
            ctx["skipped"].append({"suite": name, "reason": str(exc)})
    return r, ctx["derived"], ctx["skipped"]


# ------------------------------------------------------------------- output


def _field_name(F):
    return "QQ" if F.kind == "rational" else f"GF({F.p})"


def to_json(I, command, seed, report, derived, skipped):
    laws = []
    for law in report.laws:
        wit = law.witness.to_json(I.field) if law.witness is not None else None
        laws.append({"id": law.law_id, "passed": law.passed, "witness": wit})
    return {"instance": I.name, "command": command, "field": _field_name(I.field),
            "seed": seed, "laws": laws, "derived": derived, "skipped": skipped}


def to_text(doc):
    lines = [f"{doc['instance']} [{doc['field']}] {doc['command']} seed={doc['seed']}"]
    for law in doc["laws"]:
        if law["passed"]:
            lines.append(f"PASS {law['id']}")
        else:
            lines.append(f"FAIL {law['id']}: {law['witness']['text']}")
    for s in doc["skipped"]:
        lines.append(f"SKIP {s['suite']}: {s['reason']}")
    if "sbar" in doc["derived"]:
        lines.append("sbar:")
        lines.extend("  " + " ".join(row) for row in doc["derived"]["sbar"])
    failed = sum(not law["passed"] for law in doc["laws"])
    lines.append(f"{len(doc['laws'])} laws, {failed} failed")
    return "\n".join(lines) + "\n"


def _seed(value):
    if value is None:
        value = os.environ.get("MULHOPF_SEED", "0")
    try:
        seed = int(value)
    except ValueError as exc:
        raise ParseError(f"seed must be an integer, got {value!r}") from exc
    if not 0 <= seed < 2 ** 64:
        raise ParseError("seed must fit in an unsigned 64-bit integer")
    return seed


def build_parser():
    p = argparse.ArgumentParser(prog="mulhopf", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", help="path to a JSON algebra specification")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--seed", default=None,
                   help="seed for randomized checks (default $MULHOPF_SEED or 0)")
    p.add_argument("--laws", default=None, help="glob selecting law ids, e.g. 'hopf.*'")
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        seed = _seed(args.seed)
        I = load_spec(args.spec)
        report, derived, skipped = run(args.command, I, seed)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except PreconditionUnmet as exc:
        err.write(f"precondition unmet: {exc}\n")
        return 2
    if args.laws:
        kept = [law for law in report.laws if fnmatch.fnmatchcase(law.law_id, args.laws)]
        report = CheckReport(kept, report.field)
    doc = to_json(I, args.command, seed, report, derived, skipped)
    if args.format == "json":
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(to_text(doc))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
