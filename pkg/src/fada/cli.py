"""Command-line surface: reproducible tables, checks and reports.

Every command emits either human-readable text or JSON with a stable field
order, so identical configurations produce byte-identical output.  Exit code
0 means the computation ran and every verification passed, 1 flags a
verification failure, and 2 a configuration problem.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import fgl as fgl_mod
from .a1hat import appendix_crosscheck, eta_sigma_closed, sigma_index
from .algebra import AlgebraElement, Localized, TorusAlgebra, make_torus
from .connective import ConnectiveContext, check_recursion, hecke_action_check
from .duals import dual_x, gkm_check_big, gkm_check_small
from .errors import ConfigError, FadaError, MembershipError
from .peterson import PetersonContext, centralizer_report
from .roots import AffineElt, FiniteRootDatum, Window
from .twisted import ExpansionTables, TwistedAlgebra, braid_check

SCHEMA = 1


@dataclass
class JobConfig:
    """Parsed command-line state shared by all subcommands."""

    root: object = "A1"
    fgl: object = "connective"
    torus: str = "small"
    window: int = 3
    degree: int = 8
    fmt: str = "json"
    jobs: int = 1
    extra: Dict[str, object] = field(default_factory=dict)


# -- config parsing --------------------------------------------------------


def _load_arg(text: object) -> object:
    """Inline JSON, @file reference, or a bare name."""
    if not isinstance(text, str):
        return text
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                return json.load(fh)
        except OSError as exc:
            raise ConfigError("cannot read %s: %s" % (text[1:], exc))
        except ValueError as exc:
            raise ConfigError("bad JSON in %s: %s" % (text[1:], exc))
    stripped = text.strip()
    if stripped[:1] in "[{\"":
        try:
            return json.loads(stripped)
        except ValueError as exc:
            raise ConfigError("bad inline JSON %r: %s" % (text, exc))
    return stripped


def build_datum(spec: object) -> FiniteRootDatum:
    spec = _load_arg(spec)
    if isinstance(spec, str):
        return FiniteRootDatum.from_type(spec)
    if isinstance(spec, dict):
        if "type" in spec:
            return FiniteRootDatum.from_type(spec["type"])
        if "cartan" in spec:
            return FiniteRootDatum.from_cartan(spec["cartan"], spec.get("label"))
    raise ConfigError("root descriptor needs a 'type' name or a 'cartan' matrix")


_SHORTHAND = {
    "additive": ("ADD", None),
    "multiplicative": ("MUL", None),
    "connective": ("CON", None),
}


def build_law(spec: object, degree: int):
    """Resolve an FGL descriptor to (backend, law-or-None)."""
    spec = _load_arg(spec)
    if isinstance(spec, str):
        if spec in _SHORTHAND:
            return _SHORTHAND[spec]
        if spec == "hyperbolic":
            return "SER", fgl_mod.FormalGroupLaw.hyperbolic()
        raise ConfigError("unknown formal group law %r" % spec)
    if not isinstance(spec, dict):
        raise ConfigError("formal group law descriptor must be a name or object")
    backend = spec.get("backend")
    kind = spec.get("kind")
    if backend is None:
        if kind in _SHORTHAND:
            return _SHORTHAND[kind]
        backend = "SER"
    if backend != "SER":
        if kind in _SHORTHAND and _SHORTHAND[kind][0] == backend:
            return backend, None
        raise ConfigError("backend %r does not realize law %r" % (backend, kind))
    law = fgl_mod.from_descriptor({k: v for k, v in spec.items() if k != "backend"})
    law.validate(min(degree, law.table_degree or degree))
    return "SER", law


def make_algebra(cfg: JobConfig) -> TwistedAlgebra:
    datum = build_datum(cfg.root)
    backend, law = build_law(cfg.fgl, cfg.degree)
    torus = make_torus(datum, backend, cfg.torus, fgl=law, precision=cfg.degree)
    return TwistedAlgebra(torus)


def parse_word(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text or text == "e":
        return ()
    try:
        return tuple(int(p) for p in text.replace(",", " ").split())
    except ValueError:
        raise ConfigError("cannot parse word %r; expected letters like '0,1,0'" % text)


# -- serialization ---------------------------------------------------------


def elem_json(e: AlgebraElement) -> List[object]:
    return [[list(k), str(c)] for k, c in sorted(e.terms.items())]


def loc_json(c: Localized) -> Dict[str, object]:
    s = c.simplify()
    return {"num": elem_json(s.num), "den": [list(b) for b in s.den]}


def _word_of(window: Window, w: AffineElt) -> Tuple[int, ...]:
    return window.compat_word(w)


def coeffs_json(window: Window, table: Dict[AffineElt, Localized]) -> List[object]:
    rows = sorted(((len(_word_of(window, w)), _word_of(window, w)), c)
                  for w, c in table.items())
    return [[list(word), loc_json(c)] for (_, word), c in rows]


def emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    _emit_text(payload, indent="")


def _emit_text(node: object, indent: str) -> None:
    if isinstance(node, dict):
        for key in sorted(node):
            value = node[key]
            if isinstance(value, (dict, list)):
                sys.stdout.write("%s%s:\n" % (indent, key))
                _emit_text(value, indent + "  ")
            else:
                sys.stdout.write("%s%s: %s\n" % (indent, key, value))
    elif isinstance(node, list):
        for value in node:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent)
            else:
                sys.stdout.write("%s- %s\n" % (indent, value))
    else:
        sys.stdout.write("%s%s\n" % (indent, node))


# -- subcommands -----------------------------------------------------------


def _expand_one_torus(cfg: JobConfig, torus_kind: str,
                      word: Optional[Tuple[int, ...]]) -> dict:
    local = JobConfig(cfg.root, cfg.fgl, torus_kind, cfg.window, cfg.degree)
    algebra = make_algebra(local)
    group = algebra.torus.group
    window = group.window(cfg.window)
    tables = ExpansionTables(algebra, window)
    targets = window.elements
    if word is not None:
        x = group.from_word(word)
        window.require(x, "requested word")
        targets = (x,)
    rows = []
    for w in sorted(targets, key=lambda w: (len(window.compat_word(w)),
                                            window.compat_word(w))):
        rows.append({
            "word": list(window.compat_word(w)),
            "eta_in_x": coeffs_json(window, tables.eta_in_x(w)),
            "x_in_eta": coeffs_json(window, tables.a[w]),
        })
    return {"torus": torus_kind, "rows": rows}


def cmd_expand(cfg: JobConfig) -> Tuple[dict, bool]:
    word = cfg.extra.get("word")
    kinds = ("small", "big") if cfg.torus == "both" else (cfg.torus,)
    payload = {
        "schema": SCHEMA,
        "command": "expand",
        "window": cfg.window,
        "tables": [_expand_one_torus(cfg, kind, word) for kind in kinds],
    }
    return payload, True


def cmd_gkm(cfg: JobConfig) -> Tuple[dict, bool]:
    algebra = make_algebra(cfg)
    group = algebra.torus.group
    window = group.window(cfg.window)
    tables = ExpansionTables(algebra, window)
    degree_bound = int(cfg.extra.get("gkm_degree", 2))
    grassmannian = bool(cfg.extra.get("grassmannian", False))
    reports = []
    ok = True
    for w in window.elements:
        f = dual_x(tables, w)
        if cfg.torus == "big":
            rep = gkm_check_big(f)
        else:
            rep = gkm_check_small(f, degree_bound, grassmannian=grassmannian)
        ok = ok and rep.passed
        reports.append({
            "word": list(window.compat_word(w)),
            "summary": rep.summary(),
            "passed": rep.passed,
            "violations": sorted(rep.violations),
        })
    payload = {
        "schema": SCHEMA,
        "command": "gkm",
        "torus": cfg.torus,
        "window": cfg.window,
        "degree_bound": degree_bound,
        "reports": reports,
        "all_passed": ok,
    }
    return payload, ok


def cmd_peterson(cfg: JobConfig) -> Tuple[dict, bool]:
    algebra = make_algebra(cfg)
    group = algebra.torus.group
    window = group.window(cfg.window)
    ctx = PetersonContext(algebra, window)
    u = group.from_word(parse_word(cfg.extra["u"]))
    ok = True
    problems: List[str] = []
    try:
        expansion = ctx.expansion(u)
        coeffs = [[list(expansion.words[v]), elem_json(c)]
                  for v, c in sorted(
                      expansion.coeffs.items(),
                      key=lambda item: (len(expansion.words[item[0]]),
                                        expansion.words[item[0]]))]
    except MembershipError as exc:
        ok = False
        problems.append(str(exc))
        coeffs = []
    report = centralizer_report(algebra, ctx.element(u))
    if not (report.consistent and report.commutes):
        ok = False
        problems.extend(report.witnesses or ["centralizer criteria disagree"])
    payload = {
        "schema": SCHEMA,
        "command": "peterson",
        "u": list(window.compat_word(u)),
        "coeffs": coeffs,
        "centralizer": report.commutes and report.consistent,
        "problems": sorted(problems),
    }
    length = cfg.extra.get("structure_length")
    if length is not None:
        pairs = []
        for pair in ctx.structure_constants(int(length)):
            ok = ok and pair.identity_holds
            pairs.append({
                "u": list(window.compat_word(pair.u)),
                "v": list(window.compat_word(pair.v)),
                "d": coeffs_json(window, pair.d_row),
                "peterson": coeffs_json(window, pair.frak_row),
                "identity_holds": pair.identity_holds,
            })
        payload["structure"] = pairs
    return payload, ok


def cmd_recurse(cfg: JobConfig) -> Tuple[dict, bool]:
    algebra = make_algebra(cfg)
    group = algebra.torus.group
    ctx = ConnectiveContext(algebra)
    window = group.window(cfg.window)
    out_window = group.window(cfg.window - 1)
    tables = ExpansionTables(algebra, window)
    i = int(cfg.extra["i"])
    basis = cfg.extra.get("basis", "X")
    word = cfg.extra.get("v")
    if word is not None:
        targets = [group.from_word(word)]
    else:
        targets = list(out_window.elements)
    rows = []
    ok = True
    for v in sorted(targets, key=lambda w: (len(out_window.compat_word(w)),
                                            out_window.compat_word(w))):
        good = hecke_action_check(ctx, tables, window, out_window, i, v,
                                  basis=basis)
        ok = ok and good
        rows.append({"v": list(out_window.compat_word(v)), "ok": good})
    table_report = check_recursion(ctx, out_window,
                                   flavor="x" if basis == "X" else "y",
                                   letters=(i,))
    ok = ok and table_report.passed
    payload = {
        "schema": SCHEMA,
        "command": "recurse",
        "basis": basis,
        "i": i,
        "window": cfg.window,
        "actions": rows,
        "table_recursion": {
            "checked": table_report.checked,
            "failures": sorted(table_report.failures),
        },
    }
    return payload, ok


def cmd_a1hat(cfg: JobConfig) -> Tuple[dict, bool]:
    choice = str(cfg.extra.get("c", "generic"))
    law = {"0": "additive", "1": "multiplicative", "generic": "connective"}.get(choice)
    if law is None:
        raise ConfigError("--c must be 0, 1 or generic")
    kmax = int(cfg.extra.get("kmax", 3))
    local = JobConfig("A1", law, "small", kmax, cfg.degree)
    algebra = make_algebra(local)
    group = algebra.torus.group
    table = []
    for k in range(-kmax, kmax + 1):
        closed = eta_sigma_closed(algebra, k)
        row = sorted((sigma_index(group, w), loc_json(c)) for w, c in closed.items())
        table.append({"k": k, "coeffs": [[j, c] for j, c in row]})
    report = appendix_crosscheck(algebra, kmax,
                                 degree_bound=int(cfg.extra.get("gkm_degree", 2)))
    payload = {
        "schema": SCHEMA,
        "command": "a1hat",
        "c": choice,
        "kmax": kmax,
        "table": table,
        "crosscheck": {
            "summary": report.summary(),
            "mismatches": sorted(report.mismatches),
            "gkm_failing": sum(0 if r.passed else 1 for r in report.gkm),
        },
    }
    return payload, report.passed


def cmd_braid(cfg: JobConfig) -> Tuple[dict, bool]:
    algebra = make_algebra(cfg)
    i = int(cfg.extra["i"])
    j = int(cfg.extra["j"])
    report = braid_check(algebra, i, j)
    payload = {
        "schema": SCHEMA,
        "command": "braid-check",
        "i": report.i,
        "j": report.j,
        "order": report.order,
        "holds": report.holds,
        "witness": report.witness,
        "line": report.line(),
    }
    return payload, report.holds


# -- argument wiring -------------------------------------------------------


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--root", default="A1",
                        help="root datum: type name, inline JSON, or @file")
    parser.add_argument("--fgl", default="connective",
                        help="formal group law: name, inline JSON, or @file")
    parser.add_argument("--torus", default="small",
                        choices=["small", "big", "both"])
    parser.add_argument("--window", type=int, default=3,
                        help="length bound L for the element window")
    parser.add_argument("--degree", type=int, default=8,
                        help="truncation degree for series backends")
    parser.add_argument("--format", dest="fmt", default="json",
                        choices=["json", "text"])
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker budget; output order is fixed regardless")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fada",
        description="exact computations in formal affine Demazure algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="eta <-> X change-of-basis tables")
    _common(p)
    p.add_argument("--word", help="restrict to one element given by its word")

    p = sub.add_parser("gkm", help="GKM divisibility checks on dual bases")
    _common(p)
    p.add_argument("--gkm-degree", type=int, default=2)
    p.add_argument("--grassmannian", action="store_true")

    p = sub.add_parser("peterson", help="Peterson basis expansions")
    _common(p)
    p.add_argument("--u", required=True, help="word of a minimal representative")
    p.add_argument("--structure-length", type=int)

    p = sub.add_parser("recurse", help="Hecke-type recursion verification")
    _common(p)
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--v", help="word of the dual basis index")
    p.add_argument("--basis", default="X", choices=["X", "Y"])

    p = sub.add_parser("a1hat", help="rank-one closed-form tables")
    _common(p)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--c", default="generic", choices=["0", "1", "generic"])
    p.add_argument("--gkm-degree", type=int, default=2)

    p = sub.add_parser("braid-check", help="braid relation for Demazure products")
    _common(p)
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--j", required=True, type=int)
    return parser


_HANDLERS = {
    "expand": cmd_expand,
    "gkm": cmd_gkm,
    "peterson": cmd_peterson,
    "recurse": cmd_recurse,
    "a1hat": cmd_a1hat,
    "braid-check": cmd_braid,
}


def config_from_args(args: argparse.Namespace) -> JobConfig:
    extra = {}
    for key in ("word", "gkm_degree", "grassmannian", "u", "structure_length",
                "i", "v", "basis", "kmax", "c", "j"):
        if hasattr(args, key) and getattr(args, key) is not None:
            extra[key] = getattr(args, key)
    if "word" in extra:
        extra["word"] = parse_word(extra["word"])
    if "v" in extra:
        extra["v"] = parse_word(extra["v"])
    return JobConfig(args.root, args.fgl, args.torus, args.window,
                     args.degree, args.fmt, args.jobs, extra)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        payload, ok = _HANDLERS[args.command](cfg)
    except FadaError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    emit(payload, cfg.fmt)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
