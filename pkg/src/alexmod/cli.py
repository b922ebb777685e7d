"""Command-line interface: ``alexmod <command> ...``.

Exit status is 0 when everything computed and verified, 1 when a
verification failed (a witness is printed), and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .abelian import (coker_invariants, determinant, reduce_mod, smith_normal_form,
                      subgroup_chain)
from .coverings import (RamificationData, cover_homology, cover_quotient, cyclic_ramification,
                        lefschetz_traces, validate_ramification)
from .crowell import (check_crowell_exactness, corrupt_theta2, crowell_sequence,
                      c2_exactness_check, theta2_between)
from .errors import AlexmodError, OracleDisagreement, ParseError
from .fox import alexander_invariants, alexander_matrix, alexander_polynomial, fox_derivative
from .group_algebra import format_element, is_laurent_group
from .presentations import abelianization
from .reports import Report
from .textio import parse_elements, parse_hom, parse_matrix, parse_presentation, parse_word

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _InputError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _with_file(path: str, fn, *args):
    try:
        return fn(_read(path), *args)
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from None


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load_pres_hom(args):
    P = _with_file(args.pres, parse_presentation)
    psi, spec = _with_file(args.hom, parse_hom, P)
    return P, psi, spec


# -- commands ---------------------------------------------------------------

def cmd_fox(args) -> int:
    names: dict[str, int] = {}
    if args.gens:
        for n in args.gens.split(","):
            names.setdefault(n.strip(), len(names) + 1)
    try:
        w = parse_word(args.word, names if not args.gens else list(names))
    except ParseError as exc:
        raise _InputError(f"--word: {exc}") from None
    if args.gen not in names:
        if args.gens:
            raise _InputError(f"--gen {args.gen!r} is not among --gens")
        names[args.gen] = len(names) + 1
    order = sorted(names, key=names.get)
    d = fox_derivative(w, names[args.gen])
    text = d.format(order)
    payload = {"command": "fox", "word": w.format(order), "generator": args.gen,
               "derivative": text,
               "terms": [{"word": u.format(order), "coeff": c}
                         for u, c in sorted(d.terms.items(), key=lambda t: (len(t[0]), t[0].syllables))]}
    _emit(args, payload, text)
    return EXIT_OK


def cmd_alexander(args) -> int:
    P, psi, _ = _load_pres_hom(args)
    ap = alexander_matrix(P, psi)
    H = psi.target
    payload = {"command": "alexander", "output": args.output, "H": H.to_dict()}
    if args.output == "matrix":
        rows = [[format_element(e) for e in row] for row in ap.matrix.entries]
        payload["matrix"] = rows
        text = "\n".join(" | ".join(row) for row in rows) if rows else "(no relators)"
    elif args.output == "invariants":
        if not H.is_finite:
            raise _InputError(f"invariants need a finite H, got {H}")
        G = alexander_invariants(ap)
        if args.mod:
            G = reduce_mod(G, args.mod)
            payload["modulus"] = args.mod
        payload["invariants"] = G.to_dict()
        payload["text"] = str(G)
        text = str(G)
    else:
        if not is_laurent_group(H):
            raise _InputError(f"the Alexander polynomial needs H = Z, got {H}")
        poly = alexander_polynomial(P, psi)
        payload["polynomial"] = format_element(poly)
        text = payload["polynomial"]
    _emit(args, payload, text)
    return EXIT_OK


def cmd_crowell_check(args) -> int:
    P, psi, _ = _load_pres_hom(args)
    cs = crowell_sequence(P, psi)
    if args.drop_theta2:
        if args.drop_theta2 not in P.generator_names:
            raise _InputError(f"--drop-theta2: unknown generator {args.drop_theta2!r}")
        cs = corrupt_theta2(cs, P.generator_names.index(args.drop_theta2) + 1)
    reports = [check_crowell_exactness(cs)]
    Gab, ab = abelianization(P)
    if Gab.is_finite and psi.is_surjective() and not args.drop_theta2:
        _, rep = theta2_between(crowell_sequence(P, ab), cs, args.samples, args.seed)
        reports.append(rep)
    passed = all(r.passed for r in reports)
    payload = {"command": "crowell-check", "passed": passed,
               "reports": [r.to_dict() for r in reports]}
    _emit(args, payload, "\n".join(r.format_text() for r in reports))
    return EXIT_OK if passed else EXIT_FAIL


def _cover_data(args) -> RamificationData:
    try:
        indices = tuple(int(x) for x in args.indices.split(","))
    except ValueError:
        raise _InputError(f"--indices must be comma-separated integers, got {args.indices!r}") from None
    if args.subgroup and args.cyclic:
        raise _InputError("--subgroup and --cyclic are mutually exclusive")
    if args.cyclic:
        images = None
        if args.images:
            try:
                images = [int(x) for x in args.images.split(",")]
            except ValueError:
                raise _InputError("--images must be comma-separated integers") from None
        return cyclic_ramification(indices, args.cyclic, images)
    if args.images:
        raise _InputError("--images needs --cyclic")
    lattice = _with_file(args.subgroup, parse_matrix) if args.subgroup else None
    return RamificationData(indices, lattice)


def cmd_cover(args) -> int:
    rd = _cover_data(args)
    H, psi = cover_quotient(rd)
    try:
        cr = cover_homology(rd)
    except OracleDisagreement as exc:
        warnings = validate_ramification(rd, H, psi)
        payload = {"command": "cover", "passed": False, "indices": list(rd.indices),
                   "deck_group": H.to_dict(), "warnings": warnings, "error": str(exc),
                   "first": str(exc.first), "second": str(exc.second)}
        text = "\n".join([f"deck group: {H}"] + [f"warning: {w}" for w in warnings]
                         + [f"cover: FAIL\n  {exc}"])
        _emit(args, payload, text)
        return EXIT_FAIL
    rep = Report("cover")
    predicted = lefschetz_traces(H, psi, cr.genus)
    bad = next((h for h in H.elements() if predicted[h] != cr.traces[h]), None)
    rep.add("lefschetz_traces", bad is None, "deck traces match the fixed point count",
            None if bad is None else {"element": str(bad), "computed": cr.traces[bad],
                                      "lefschetz": predicted[bad]})
    total = sum(cr.traces.values())
    rep.add("transfer_divisibility", total % H.order == 0,
            f"sum of traces {total} over |H| = {H.order}")
    rank = cr.homology.free_rank
    unimod = all(determinant(m) in (1, -1) for m in cr.h_action) if rank else True
    rep.add("action_invertible", unimod, "every generator acts with determinant +-1")
    payload = {"command": "cover", "passed": rep.passed, "indices": list(rd.indices),
               "deck_group": cr.deck_group.to_dict(), "homology": cr.homology.to_dict(),
               "genus": cr.genus, "warnings": cr.warnings,
               "h_action": [m.data for m in cr.h_action],
               "traces": [{"element": str(h), "computed": cr.traces[h], "lefschetz": predicted[h]}
                          for h in H.elements()],
               "sites": [s.to_dict() for s in rep.sites]}
    lines = [f"deck group: {cr.deck_group}", f"homology: {cr.homology}", f"genus: {cr.genus}"]
    lines += [f"warning: {w}" for w in cr.warnings]
    for g, m in zip(H.generators(), cr.h_action):
        lines.append(f"action of {g}:")
        lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in m.data]
    lines.append(rep.format_text())
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_snf(args) -> int:
    A = _with_file(args.matrix, parse_matrix)
    U, D, V = smith_normal_form(A)
    diag = [D.data[i][i] for i in range(min(D.rows, D.cols))]
    G = coker_invariants(A)
    payload = {"command": "snf", "U": U.data, "D": D.data, "V": V.data,
               "diagonal": diag, "cokernel": G.to_dict()}
    text = "\n".join(["U:", U.format(), "D:", D.format(), "V:", V.format(), f"cokernel: {G}"])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_c2_check(args) -> int:
    P, psi, spec = _load_pres_hom(args)
    gens = _with_file(args.subgroup, parse_elements, spec)
    inclusion, projection = subgroup_chain(psi.target, gens)
    rep = c2_exactness_check(P, psi, inclusion, projection)
    payload = {"command": "c2-check", "passed": rep.passed, "reports": [rep.to_dict()]}
    _emit(args, payload, rep.format_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="alexmod", description="Alexander modules via Fox calculus.")
    p.add_argument("--version", action="version", version=f"alexmod {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(q, seeds=False):
        q.add_argument("--json", action="store_true", help="machine-readable output")
        if seeds:
            q.add_argument("--samples", type=int, default=50, help="samples per sampled check")
            q.add_argument("--seed", type=int, default=0, help="random seed")

    q = sub.add_parser("fox", help="Fox derivative of a word")
    q.add_argument("--word", required=True)
    q.add_argument("--gen", required=True, help="differentiate with respect to this generator")
    q.add_argument("--gens", help="comma-separated generator order (default: order of appearance)")
    common(q)
    q.set_defaults(func=cmd_fox)

    q = sub.add_parser("alexander", help="Alexander matrix, invariants or polynomial")
    q.add_argument("--pres", required=True)
    q.add_argument("--hom", required=True)
    q.add_argument("--output", choices=("matrix", "invariants", "poly"), default="matrix")
    q.add_argument("--mod", type=int, help="reduce the invariants modulo this integer")
    common(q)
    q.set_defaults(func=cmd_alexander)

    q = sub.add_parser("crowell-check", help="verify the Crowell exact sequence")
    q.add_argument("--pres", required=True)
    q.add_argument("--hom", required=True)
    q.add_argument("--drop-theta2", metavar="GEN",
                   help="negative control: zero theta2 on this generator")
    common(q, seeds=True)
    q.set_defaults(func=cmd_crowell_check)

    q = sub.add_parser("cover", help="homology of an abelian branched cover of P^1")
    q.add_argument("--indices", required=True, help="ramification indices, e.g. 2,2,2,2")
    q.add_argument("--subgroup", help="matrix file whose columns generate R_0 modulo commutators")
    q.add_argument("--cyclic", type=int, metavar="N", help="cyclic cover of degree N")
    q.add_argument("--images", help="images of the generators in Z/N (with --cyclic)")
    common(q)
    q.set_defaults(func=cmd_cover)

    q = sub.add_parser("snf", help="Smith normal form of an integer matrix")
    q.add_argument("--matrix", required=True, help="matrix file, or - for stdin")
    common(q)
    q.set_defaults(func=cmd_snf)

    q = sub.add_parser("c2-check", help="right exactness for a chain of coefficient groups")
    q.add_argument("--pres", required=True)
    q.add_argument("--hom", required=True, help="the middle homomorphism G -> H_B")
    q.add_argument("--subgroup", required=True,
                   help="file listing generators of H_A inside H_B, one element per line")
    common(q)
    q.set_defaults(func=cmd_c2_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "samples", 1) < 1:
            raise _InputError("--samples must be positive")
        return args.func(args)
    except _InputError as exc:
        print(f"alexmod: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleDisagreement as exc:
        print(f"alexmod: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (AlexmodError, ValueError) as exc:
        print(f"alexmod: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
