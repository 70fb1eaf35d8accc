"""Command-line frontend: load instances, dispatch computations, emit reports.

Reports are JSON on standard output, byte-identical across runs for
identical inputs; --pretty renders the same payload as text tables.
Exit codes: 0 computed, 1 requested object does not exist, 2 invalid
input, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .errors import (
    DeltoidError,
    NoConstructionError,
    ResourceLimitError,
    UnsupportedInfiniteGroupError,
)
from .groups import canonicalize, format_group, parse_group
from .matching import (
    PartialMatching,
    deficiency,
    deficiency_by_subsets,
    partial_matching_with_defect,
    verify_matching,
)
from .partition import (
    AdmissiblePartition,
    lambda_,
    lambda_by_feasibility,
    partition_left,
    partition_right,
    rho,
    rho_by_feasibility,
    validate_partition,
)
from .sets import Deltoid, GroupSet, build_deltoid, chowla_defect
from .structure import ObstructionWitness, construct_deficient_pair, find_witness, verify_witness
from .transform import deficiency_by_subgroups


class InstanceFileError(DeltoidError):
    """Instance or certificate JSON is malformed; message names the field."""


# --- JSON encoding helpers -------------------------------------------------


def _enc_set(s: GroupSet) -> list:
    return [list(e) for e in s.elements]


def _enc_pairs(m: PartialMatching) -> list:
    return [[list(a), list(b)] for a, b in m.pairs]


def _matching_cert(m: PartialMatching) -> dict:
    return {"kind": "matching", "pairs": _enc_pairs(m), "defect": m.defect}


def _witness_cert(w: ObstructionWitness) -> dict:
    return {
        "kind": "witness",
        "S": _enc_set(w.S),
        "R": _enc_set(w.R),
        "Y": _enc_set(w.Y),
        "Z": _enc_set(w.Z),
        "level": w.level,
    }


def _partition_cert(p: AdmissiblePartition) -> dict:
    return {
        "kind": "partition",
        "side": p.side,
        "classes": [_enc_set(c) for c in p.classes],
        "matchings": [_enc_pairs(m) for m in p.matchings],
    }


def _require(obj: dict, field: str, path: str):
    if field not in obj:
        raise InstanceFileError(f"{path}: missing field {field!r}")
    return obj[field]


def load_instance(path: str) -> tuple[Deltoid, dict, list[str]]:
    """Read an instance file into a validated Deltoid.

    Returns the deltoid, the canonical inputs echo, and any warnings
    (currently only element deduplication notices).
    """
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise InstanceFileError(f"{path}: {err.strerror or err}") from None
    except json.JSONDecodeError as err:
        raise InstanceFileError(f"{path}: invalid JSON ({err.msg} at line {err.lineno})") from None
    if not isinstance(data, dict):
        raise InstanceFileError(f"{path}: top level must be an object")
    group = parse_group(str(_require(data, "group", path)))
    warnings = []
    sets = {}
    for name in ("A", "B"):
        raw = _require(data, name, path)
        if not isinstance(raw, list):
            raise InstanceFileError(f"{path}: field {name!r} must be an array of elements")
        try:
            canon = GroupSet.of(group, raw)
        except (TypeError, ValueError) as err:
            raise InstanceFileError(f"{path}: field {name!r}: {err}") from None
        if len(canon.elements) < len(raw):
            warnings.append(f"duplicate elements removed from {name}")
        sets[name] = canon
    deltoid = build_deltoid(sets["A"], sets["B"])
    echo = {
        "group": format_group(group),
        "A": _enc_set(deltoid.A),
        "B": _enc_set(deltoid.B),
    }
    return deltoid, echo, warnings


def _parse_matching(group, obj: dict) -> PartialMatching:
    pairs = _require(obj, "pairs", "certificate")
    canon = []
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InstanceFileError("certificate: each pair must be [a, b]")
        canon.append((canonicalize(group, pair[0]), canonicalize(group, pair[1])))
    return PartialMatching(tuple(canon), int(_require(obj, "defect", "certificate")))


def _parse_witness(group, obj: dict) -> ObstructionWitness:
    parts = {
        name: GroupSet.of(group, _require(obj, name, "certificate"))
        for name in ("S", "R", "Y", "Z")
    }
    return ObstructionWitness(level=int(_require(obj, "level", "certificate")), **parts)


def _parse_partition(group, obj: dict) -> AdmissiblePartition:
    side = str(_require(obj, "side", "certificate"))
    classes = tuple(GroupSet.of(group, c) for c in _require(obj, "classes", "certificate"))
    matchings = []
    for pairs in _require(obj, "matchings", "certificate"):
        canon = tuple((canonicalize(group, a), canonicalize(group, b)) for a, b in pairs)
        matchings.append(PartialMatching(canon, -1))
    # defects are rebuilt from the instance size; certificates carry pairs only
    return AdmissiblePartition(side, classes, tuple(matchings))


# --- subcommand handlers ----------------------------------------------------


def _cmd_deficiency(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    delta = deficiency(deltoid)
    routes: dict = {"matching": delta, "subsets": None, "subgroups": None}
    skipped = {}
    try:
        routes["subsets"] = deficiency_by_subsets(deltoid)
    except ResourceLimitError as err:
        skipped["subsets"] = str(err)
    try:
        routes["subgroups"] = deficiency_by_subgroups(deltoid)
    except (UnsupportedInfiniteGroupError, ResourceLimitError) as err:
        skipped["subgroups"] = str(err)
    computed = [v for v in routes.values() if v is not None]
    results = {
        "delta": delta,
        "routes": routes,
        "agreement": len(set(computed)) == 1,
        "skipped": skipped,
    }
    return 0, _report("deficiency", echo, results, warnings=warnings)


def _cmd_match(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    matching = partial_matching_with_defect(deltoid, args.defect)
    if matching is None:
        results = {
            "present": False,
            "defect": args.defect,
            "deficiency": deficiency(deltoid),
            "reason": "no matching with requested defect: deficiency exceeds it",
        }
        return 1, _report("match", echo, results, warnings=warnings)
    results = {"present": True, "defect": args.defect, "pairs": len(matching.pairs)}
    certs = {"matching": _matching_cert(matching)}
    return 0, _report("match", echo, results, certificates=certs, warnings=warnings)


def _cmd_witness(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    if args.ell < 0:
        raise InstanceFileError("--ell must be nonnegative")
    witness = find_witness(deltoid, args.ell)
    if witness is None:
        results = {
            "present": False,
            "ell": args.ell,
            "reason": "no witness: deficiency not greater than ell",
        }
        return 1, _report("witness", echo, results, warnings=warnings)
    results = {
        "present": True,
        "ell": args.ell,
        "sizes": {
            "S": len(witness.S.elements),
            "R": len(witness.R.elements),
            "Y": len(witness.Y.elements),
            "Z": len(witness.Z.elements),
        },
    }
    certs = {"witness": _witness_cert(witness)}
    return 0, _report("witness", echo, results, certificates=certs, warnings=warnings)


def _cmd_rho(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    value = rho(deltoid)
    encoded = "infinite" if value is math.inf else value
    return 0, _report("rho", echo, {"rho": encoded}, warnings=warnings)


def _cmd_lambda(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    return 0, _report("lambda", echo, {"lambda": lambda_(deltoid)}, warnings=warnings)


def _cmd_partition(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    side = args.side
    k = args.k
    if k is None:
        if side == "left":
            k = lambda_by_feasibility(deltoid)
        else:
            if rho(deltoid) is math.inf:
                results = {
                    "feasible": False,
                    "side": side,
                    "reason": "no finite partition: an element of B stabilizes A",
                }
                return 1, _report("partition", echo, results, warnings=warnings)
            k = rho_by_feasibility(deltoid)
    build = partition_left if side == "left" else partition_right
    part = build(deltoid, k)
    if part is None:
        results = {
            "feasible": False,
            "side": side,
            "k": k,
            "reason": "no partition into k admissible classes",
        }
        return 1, _report("partition", echo, results, warnings=warnings)
    results = {
        "feasible": True,
        "side": side,
        "k": k,
        "class_sizes": [len(c.elements) for c in part.classes],
    }
    certs = {"partition": _partition_cert(part)}
    return 0, _report("partition", echo, results, certificates=certs, warnings=warnings)


def _cmd_construct(args) -> tuple[int, dict]:
    group = parse_group(args.group)
    try:
        A, B = construct_deficient_pair(group, args.n, args.ell)
    except NoConstructionError as err:
        echo = {"group": format_group(group), "n": args.n, "ell": args.ell}
        results = {"present": False, "reason": str(err)}
        return 1, _report("construct", echo, results)
    deltoid = build_deltoid(A, B)
    echo = {"group": format_group(group), "n": args.n, "ell": args.ell}
    results = {
        "present": True,
        "instance": {"group": format_group(group), "A": _enc_set(A), "B": _enc_set(B)},
        "deficiency": deficiency(deltoid),
    }
    witness = find_witness(deltoid, args.ell)
    certs = {"witness": _witness_cert(witness)} if witness else None
    return 0, _report("construct", echo, results, certificates=certs)


def _cmd_chowla(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    bound = chowla_defect(deltoid.B)
    delta = deficiency(deltoid)
    results = {
        "chowla_defect": bound,
        "size": deltoid.size,
        "deficiency": delta,
        "bound_holds": delta <= bound,
    }
    return 0, _report("chowla", echo, results, warnings=warnings)


def _verify_one(deltoid: Deltoid, obj: dict) -> tuple[str, bool, str]:
    kind = obj.get("kind")
    group = deltoid.A.group
    if kind == "matching":
        verdict = verify_matching(deltoid, _parse_matching(group, obj))
    elif kind == "witness":
        verdict = verify_witness(deltoid, _parse_witness(group, obj))
    elif kind == "partition":
        part = _parse_partition(group, obj)
        fixed = AdmissiblePartition(
            part.side,
            part.classes,
            tuple(
                PartialMatching(m.pairs, deltoid.size - len(m.pairs))
                for m in part.matchings
            ),
        )
        verdict = validate_partition(deltoid, fixed)
    else:
        raise InstanceFileError(f"certificate: unknown kind {kind!r}")
    return kind, bool(verdict), verdict.reason


def _cmd_verify(args) -> tuple[int, dict]:
    deltoid, echo, warnings = load_instance(args.instance)
    try:
        with open(args.certificate, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise InstanceFileError(f"{args.certificate}: {err.strerror or err}") from None
    except json.JSONDecodeError as err:
        raise InstanceFileError(f"{args.certificate}: invalid JSON ({err.msg})") from None
    if "certificates" in data:
        named = data["certificates"]
    elif "kind" in data:
        named = {"certificate": data}
    else:
        raise InstanceFileError("certificate file has neither 'kind' nor 'certificates'")
    checks = []
    for name in sorted(named):
        try:
            kind, ok, reason = _verify_one(deltoid, named[name])
        except (TypeError, ValueError) as err:
            raise InstanceFileError(f"certificate {name!r}: malformed ({err})") from None
        checks.append({"name": name, "kind": kind, "valid": ok, "reason": reason})
    all_ok = all(c["valid"] for c in checks)
    results = {"valid": all_ok, "checks": checks}
    return (0 if all_ok else 1), _report("verify", echo, results, warnings=warnings)


# --- report assembly and rendering -----------------------------------------


def _report(command, inputs, results, certificates=None, warnings=None) -> dict:
    report = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "version": __version__,
    }
    if certificates:
        report["certificates"] = certificates
    if warnings:
        report["warnings"] = warnings
    return report


def _pretty_lines(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            child = value[key]
            if isinstance(child, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_pretty_lines(child, indent + 1))
            else:
                lines.append(f"{pad}{key}: {child}")
    elif isinstance(value, list):
        flat = json.dumps(value)
        if len(flat) <= 70:
            lines.append(f"{pad}{flat}")
        else:
            for item in value:
                lines.extend(_pretty_lines(item, indent))
    else:
        lines.append(f"{pad}{value}")
    return lines


def render_json(value, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, two-space indent, short arrays inline."""
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f'{pad}  {json.dumps(key)}: {render_json(value[key], indent + 1)}'
            for key in sorted(value)
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, list):
        flat = json.dumps(value, sort_keys=True, separators=(", ", ": "))
        if len(flat) <= 72:
            return flat
        items = [f"{pad}  {render_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(value)


def emit(report: dict, pretty: bool) -> None:
    if pretty:
        print("\n".join(_pretty_lines(report)))
    else:
        print(render_json(report))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltoids",
        description="Partial matchings, deficiency, and admissible partitions "
        "of finite subsets of abelian groups.",
    )
    parser.add_argument("--pretty", action="store_true", help="render a text table instead of JSON")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("deficiency", _cmd_deficiency, "deficiency by all available routes")
    p.add_argument("instance")
    p = add("match", _cmd_match, "a partial matching with the requested defect")
    p.add_argument("instance")
    p.add_argument("--defect", type=int, required=True)
    p = add("witness", _cmd_witness, "an obstruction witness for the requested level")
    p.add_argument("instance")
    p.add_argument("--ell", type=int, required=True)
    p = add("rho", _cmd_rho, "right partition number")
    p.add_argument("instance")
    p = add("lambda", _cmd_lambda, "left partition number")
    p.add_argument("instance")
    p = add("partition", _cmd_partition, "partition into admissible classes")
    p.add_argument("instance")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--k", type=int, default=None)
    p = add("construct", _cmd_construct, "build a pair with deficiency above ell")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p = add("chowla", _cmd_chowla, "Chowla defect of B and the deficiency bound")
    p.add_argument("instance")
    p = add("verify", _cmd_verify, "re-verify a certificate against an instance")
    p.add_argument("instance")
    p.add_argument("--certificate", required=True)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.handler(args)
    except ResourceLimitError as err:
        print(f"deltoids: resource limit: {err}", file=sys.stderr)
        return 3
    except DeltoidError as err:
        print(f"deltoids: {err}", file=sys.stderr)
        return 2
    emit(report, args.pretty)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
