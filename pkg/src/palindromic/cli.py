"""Command-line front end: ``palindromic <group> <verb> [flags]``.

Results are printed to stdout as JSON ``{"verb", "status", "payload"}``;
logs and timings go to stderr.  Exit code 0 for pass/info, 1 for fail,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import acceptance, involutions, pia, rep, schreier
from .endo import AutWord, evaluate, int_matrix
from .smith import describe_abelian_group, exponent_matrix
from .words import exponent_sum, exponent_vector, is_palindrome, parse_word

log = logging.getLogger("palindromic")


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    verb: str
    status: str  # "pass" | "fail" | "info"
    payload: Any
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {"verb": self.verb, "status": self.status, "payload": self.payload}

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "fail" else 0


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _infer_rank(*texts: str) -> int:
    digits = [int(c) for s in texts if s for c in s if c.isdigit()]
    return max([2] + [d for d in digits if d <= 9])


def _rank(args, *texts: str) -> int:
    return args.rank if args.rank is not None else _infer_rank(*texts)


def _parse_matrix(text: str):
    try:
        rows = json.loads(text)
        return int_matrix([[int(v) for v in row] for row in rows])
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--matrix must be a JSON array of integer rows: {exc}") from exc


def _element(args) -> pia.PiA2Element:
    w = AutWord.parse(args.f, 2)
    if not all(g.kind == "mu" for g, _ in w.letters):
        raise UsageError("--f must be a word in m12, m21")
    f = pia.pia2_normal_form(w).f
    try:
        lam = pia.es2_element(args.lam)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"unknown --lambda {args.lam!r}") from exc
    return pia.PiA2Element(f, lam)


# -- word ------------------------------------------------------------------

def cmd_word_apply(a):
    rank = _rank(a, a.auto, a.word)
    e = evaluate(AutWord.parse(a.auto, rank))
    w = parse_word(a.word, rank)
    return "info", {"rank": rank, "result": str(e(w)), "automorphism": e.to_json()}


def cmd_word_reduce(a):
    rank = _rank(a, a.word)
    return "info", {"result": str(parse_word(a.word, rank))}


def cmd_word_palindrome(a):
    w = parse_word(a.word, _rank(a, a.word))
    return "info", {"word": str(w), "palindrome": is_palindrome(w)}


def cmd_word_expsum(a):
    w = parse_word(a.word, _rank(a, a.word))
    if a.index is not None:
        return "info", {"word": str(w), "index": a.index, "exponent_sum": exponent_sum(w, a.index)}
    return "info", {"word": str(w), "exponent_vector": exponent_vector(w)}


# -- pia -------------------------------------------------------------------

def _relation_payload(checks, table: bool):
    rows = [c.to_json() for c in checks]
    if table:
        width = max((len(r["relation"]) for r in rows), default=0)
        for r in rows:
            print(f"{r['relation']:<{width}}  {'ok' if r['pass'] else 'FAIL'}", file=sys.stderr)
    return {"count": len(rows), "checks": rows}


def cmd_pia_relations(a):
    checks = pia.verify_relations(a.rank or 3)
    return _status(all(c.passed for c in checks)), _relation_payload(checks, a.table)


def cmd_pia_action(a):
    checks = pia.verify_action(a.rank or 2)
    return _status(all(c.passed for c in checks)), _relation_payload(checks, a.table)


def cmd_pia_center(a):
    n = a.rank or 2
    k = a.max_len if a.max_len is not None else (4 if n == 2 else 3)
    found = pia.center_scan(n, k)
    return "info", {"rank": n, "max_len": k, "central": [str(w) for w in found],
                    "images": [evaluate(w).to_json() for w in found]}


def cmd_pia_normal_form(a):
    g = pia.pia2_normal_form(AutWord.parse(a.auto, 2))
    return "info", g.to_json()


# -- involution ------------------------------------------------------------

def cmd_inv_check(a):
    g = _element(a)
    return "info", {
        "element": str(g),
        "involution": involutions.is_involution(g, cross_check=False),
        "by_squaring": involutions.is_involution_by_squaring(g),
    }


def cmd_inv_classify(a):
    g = _element(a)
    if not involutions.is_involution(g, cross_check=True):
        return "info", {"involution": False, "representative": None, "conjugator": None,
                        "invariant": None}
    cls = involutions.classify(g)
    kind, par = involutions.class_invariant(g)
    return "info", {
        "involution": True,
        "representative": cls.name,
        "conjugator": str(cls.conjugator),
        "invariant": [kind, list(par) if par else None],
        "steps": cls.steps,
    }


# -- rep -------------------------------------------------------------------

def _matrix_json(M):
    return [[str(int(v)) for v in row] for row in M]


def cmd_rep_phi(a):
    if a.auto:
        w = AutWord.parse(a.auto, 2)
    else:
        w = _element(a).to_autword()
    M = rep.sanov_phi(w)
    same = bool((M == rep.psi(w)).all())
    return _status(same), {"word": str(w), "matrix": _matrix_json(M), "agrees_with_psi": same}


def cmd_rep_psi(a):
    n = _rank(a, a.auto)
    w = AutWord.parse(a.auto, n)
    M = rep.psi(w)
    col, row, lvl = rep.parity_criteria(M)
    return "info", {"rank": n, "matrix": _matrix_json(M), "column_pattern": col,
                    "row_pattern_2x2": row, "level2": lvl}


def cmd_rep_classify(a):
    M = _parse_matrix(a.matrix)
    try:
        matches = rep.eight_form_matches(M)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return "info", {"match": matches[0].to_json() if matches else None,
                    "all_matches": [m.to_json() for m in matches]}


def cmd_rep_smith(a):
    if a.matrix:
        M = _parse_matrix(a.matrix)
        return "info", {"invariant_factors": rep.smith_normal_form(M.tolist())}
    gens, rels = rep.u3_presentation() if a.presentation == "u3" else rep.epia_presentation(a.rank or 3)
    factors = rep.presentation_abelianization(gens, rels)
    return "info", {
        "presentation": a.presentation,
        "generators": [str(g) for g in gens],
        "exponent_matrix": exponent_matrix(gens, rels),
        "invariant_factors": factors,
        "group": describe_abelian_group(factors),
    }


def cmd_rep_kernel(a):
    r = rep.kernel_witness_check()
    return _status(r["pass"]), r


def cmd_rep_matrix_relations(a):
    r = rep.verify_matrix_relations()
    return _status(all(x["pass"] for x in r)), {"relations": r}


# -- schreier --------------------------------------------------------------

def cmd_schreier_enum(a):
    rows = schreier.table()
    report = schreier.enumerate_and_verify(rows)
    if a.out:
        with open(a.out, "w", newline="") as fh:
            fh.write(schreier.table_csv(rows))
        log.info("wrote %d rows to %s", len(rows), a.out)
    else:
        report["rows"] = [r.to_json() for r in rows]
    return _status(report["pass"]), report


def cmd_schreier_ia(a):
    r = schreier.ia_filter()
    return _status(r["pass"]), r


def cmd_schreier_fullarton(a):
    r = schreier.fullarton_check()
    return _status(r["pass"]), r


def cmd_schreier_ptg(a):
    r = schreier.ptg_sampler(a.count if a.count is not None else 1000,
                             a.max_len if a.max_len is not None else 8, a.seed)
    return _status(r["pass"]), r


def cmd_verify_all(a):
    results = acceptance.run_all()
    for r in results:
        log.info("criterion %d (%s): %s in %.3fs", r["criterion"], r["name"],
                 "PASS" if r["pass"] else "FAIL", r["elapsed_s"])
        r.pop("elapsed_s")
    return _status(all(r["pass"] for r in results)), {"criteria": results}


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None, help="rank n of F_n")
    common.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    common.add_argument("--max-len", dest="max_len", type=int, default=None)
    common.add_argument("--count", type=int, default=None)
    common.add_argument("--out", default=None, help="write CSV here (schreier enum)")
    common.add_argument("--json", action="store_true", help="JSON output (the default)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="palindromic", description=__doc__.split("\n")[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def add(group_parser, name, fn: Callable, *arguments: tuple[Sequence[str], dict]):
        p = group_parser.add_parser(name, parents=[common])
        for flags, kw in arguments:
            p.add_argument(*flags, **kw)
        p.set_defaults(func=fn, verb=name)
        return p

    word_arg = (("--word",), {"required": True, "help": 'e.g. "x1 x2^-1"'})
    auto_arg = (("--auto",), {"required": True, "help": 'e.g. "m12 t1 a12"'})
    f_arg = (("--f",), {"default": "", "help": 'mu-word, e.g. "m12 m21^-1"'})
    lam_arg = (("--lambda",), {"dest": "lam", "default": "id",
                               "help": "id, s, d, sd, r, sr, dr, sdr (or sigma/delta/rho)"})

    g = groups.add_parser("word").add_subparsers(dest="verb", required=True)
    add(g, "apply", cmd_word_apply, auto_arg, word_arg)
    add(g, "reduce", cmd_word_reduce, word_arg)
    add(g, "palindrome", cmd_word_palindrome, word_arg)
    add(g, "expsum", cmd_word_expsum, word_arg, (("--index",), {"type": int, "default": None}))

    g = groups.add_parser("pia").add_subparsers(dest="verb", required=True)
    table = (("--table",), {"action": "store_true", "help": "also render a table on stderr"})
    add(g, "verify-relations", cmd_pia_relations, table)
    add(g, "verify-action", cmd_pia_action, table)
    add(g, "center-scan", cmd_pia_center)
    add(g, "normal-form", cmd_pia_normal_form, auto_arg)

    g = groups.add_parser("involution").add_subparsers(dest="verb", required=True)
    add(g, "check", cmd_inv_check, f_arg, lam_arg)
    add(g, "classify", cmd_inv_classify, f_arg, lam_arg)

    g = groups.add_parser("rep").add_subparsers(dest="verb", required=True)
    add(g, "phi", cmd_rep_phi, (("--auto",), {"default": None}), f_arg, lam_arg)
    add(g, "psi", cmd_rep_psi, auto_arg)
    add(g, "classify", cmd_rep_classify, (("--matrix",), {"required": True,
                                                         "help": "JSON, e.g. [[1,2],[0,1]]"}))
    add(g, "smith", cmd_rep_smith, (("--matrix",), {"default": None}),
        (("--presentation",), {"choices": ["epia", "u3"], "default": "epia"}))
    add(g, "kernel-witness", cmd_rep_kernel)
    add(g, "matrix-relations", cmd_rep_matrix_relations)

    g = groups.add_parser("schreier").add_subparsers(dest="verb", required=True)
    add(g, "enum", cmd_schreier_enum)
    add(g, "ia", cmd_schreier_ia)
    add(g, "fullarton", cmd_schreier_fullarton)
    add(g, "ptg-sample", cmd_schreier_ptg)

    p = groups.add_parser("verify-all", parents=[common])
    p.set_defaults(func=cmd_verify_all, verb="verify-all")
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult:
    """Parse and execute; raises ``SystemExit(2)`` on usage errors."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose or args.group == "verify-all"
                        else logging.WARNING, stream=sys.stderr, format="%(message)s")
    verb = args.group if args.group == "verify-all" else f"{args.group} {args.verb}"
    start = time.perf_counter()
    try:
        status, payload = args.func(args)
    except (UsageError, ValueError, IndexError, KeyError) as exc:
        parser.print_usage(sys.stderr)
        print(f"palindromic: error: {exc}", file=sys.stderr)
        raise SystemExit(2) from exc
    return CommandResult(verb, status, payload, time.perf_counter() - start)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        result = run(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    log.info("%s: %s (%.3fs)", result.verb, result.status, result.elapsed)
    json.dump(result.to_json(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
