"""
Command-line front end.

    patternlab series --family s3 --nmax 5
    patternlab table --family p231 --n 6 --format json
    patternlab bijection --phi 867943251
    patternlab popularity --nmax 10 --format csv
    patternlab check --family all --nmax 6
    patternlab observe --nmax 9

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dyck, oracle, popularity, rec123, rec132
from .perm import InvalidInput, catalan_number, parse_perm, stats
from .polyring import to_text

ENV_HARD_CAP = "PATTERNLAB_NMAX_HARD"


class UsageError(Exception):
    pass


def _hard_cap() -> int | None:
    raw = os.environ.get(ENV_HARD_CAP)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_HARD_CAP} must be an integer, got {raw!r}") from None


def _check_cap(n: int, cap: int, force: bool, what: str) -> None:
    if n < 0:
        raise UsageError("n must be nonnegative")
    hard = _hard_cap()
    if hard is not None and n > hard:
        raise UsageError(f"n={n} exceeds {ENV_HARD_CAP}={hard}")
    if n > cap:
        if not force:
            raise UsageError(f"n={n} exceeds the default cap {cap} for {what}; pass --force to run anyway")
        print(f"warning: n={n} exceeds the default cap {cap} for {what}; "
              f"entry n can have up to C_{n} = {catalan_number(n)} terms", file=sys.stderr)


def _family(name: str) -> oracle.Family:
    if name not in oracle.FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(oracle.FAMILIES)}")
    return oracle.FAMILIES[name]


def _parse_sets(items, names) -> dict[int, int]:
    out = {}
    for item in items or []:
        key, _, val = item.partition("=")
        if key not in names or val != "1":
            raise UsageError(f"--set expects NAME=1 with NAME in {', '.join(names)}, got {item!r}")
        out[names.index(key)] = 1
    return out


def _poly_rows(p):
    return [[str(c)] + [str(v) for v in e] for e, c in p.terms()]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows) -> str:
    import csv
    import io
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- subcommands ------------------------------------------------------------

def _polys(args, ns):
    fam = _family(args.family)
    _check_cap(max(ns), fam.cap, args.force, args.family)
    table = fam.table(args.workers)
    polys = [table.poly(n) for n in ns]
    fix = _parse_sets(args.set, list(polys[0].names))
    if fix:
        polys = [p.specialize(fix) for p in polys]
    return polys


def cmd_series(args) -> tuple[str, int]:
    ns = list(range(args.nmax + 1))
    polys = _polys(args, ns)
    names = list(polys[0].names)
    if args.format == "json":
        doc = {"family": args.family, "vars": names, "nmax": args.nmax,
               "entries": [{"n": n, "poly": p.to_json()} for n, p in zip(ns, polys)]}
        return json.dumps(doc, sort_keys=True) + "\n", 0
    if args.format == "csv":
        rows = [[n] + r for n, p in zip(ns, polys) for r in _poly_rows(p)]
        return _csv(["n", "coeff"] + names, rows), 0
    return "".join(f"t^{n}: {to_text(p)}\n" for n, p in zip(ns, polys)), 0


def cmd_table(args) -> tuple[str, int]:
    (p,) = _polys(args, [args.n])
    names = list(p.names)
    if args.format == "json":
        return json.dumps({"family": args.family, "n": args.n, "poly": p.to_json()}, sort_keys=True) + "\n", 0
    if args.format == "csv":
        return _csv(["coeff"] + names, _poly_rows(p)), 0
    return to_text(p) + "\n", 0


def cmd_bijection(args) -> tuple[str, int]:
    try:
        if args.phi or args.psi:
            sigma = parse_perm(args.phi or args.psi)
            path = dyck.phi(sigma) if args.phi else dyck.psi(sigma)
        else:
            path = dyck.parse_path(args.phi_inv or args.psi_inv)
            sigma = dyck.phi_inv(path) if args.phi_inv else dyck.psi_inv(path)
    except InvalidInput as exc:
        raise UsageError(str(exc)) from None
    ps = dyck.path_stats(path)
    st = stats(sigma)
    if args.format == "json":
        doc = {"perm": str(sigma), "path": str(path), "ret": ps.ret, "area": ps.area,
               "coarea": ps.coarea, "diag_peaks": {str(k): v for k, v in sorted(ps.diag_peaks.items())},
               "inv": st.inv, "coinv": st.coinv, "lrmin": st.lrmin, "linv": st.linv}
        return json.dumps(doc, sort_keys=True) + "\n", 0
    if args.format == "csv":
        return _csv(["perm", "path", "ret", "area", "coarea", "lrmin"],
                    [[str(sigma), str(path), ps.ret, ps.area, ps.coarea, st.lrmin]]), 0
    if args.phi or args.psi:
        return f"{path} ret={ps.ret} area={ps.area} coarea={ps.coarea}\n", 0
    return f"{sigma} inv={st.inv} coinv={st.coinv} lrmin={st.lrmin}\n", 0


def cmd_popularity(args) -> tuple[str, int]:
    N = args.nmax
    _check_cap(N, 10, args.force, "popularity (the G seed is enumerated)")
    seed = popularity.g12_oracle(N)
    series = [popularity.f12(max(N, 2))]
    series += [popularity.f_incr(N, m) for m in range(3, args.mmax + 1)]
    series += [seed]
    series += [popularity.g_desc(N, m, seed) for m in range(3, args.mmax + 1)]
    series += [popularity.g12_printed(max(N, 1))]
    if args.format == "csv":
        return popularity.to_csv(series), 0
    if args.format == "json":
        doc = [{"pattern": s.pattern, "class": s.avoid, "coeffs": [str(c) for c in s.coeffs()],
                "disputed": s.disputed} for s in series]
        return json.dumps(doc, sort_keys=True) + "\n", 0
    lines = []
    for s in series:
        tag = "  (disputed closed form)" if s.disputed else ""
        label = "F" if s.avoid == "132" else "G"
        lines.append(f"{label}_{s.pattern} over S_n({s.avoid}): {', '.join(map(str, s.coeffs()))}{tag}")
    return "\n".join(lines) + "\n", 0


def cmd_check(args) -> tuple[str, int]:
    lines, verdicts, ok = [], [], True
    if args.family:
        names = list(oracle.FAMILIES) if args.family == "all" else [args.family]
        for name in names:
            fam = _family(name)
            n = min(args.nmax, fam.cap) if args.family == "all" else args.nmax
            _check_cap(n, fam.cap, args.force, name)
            rep = oracle.check_family(name, n, fam.table(args.workers))
            ok &= rep.equal
            lines += rep.lines()
            verdicts.append(json.loads(rep.to_json()))
    if args.coeff:
        rep = rec123.coeff_equality_check(args.nmax, args.coeff)
        ok &= rep.ok
        lines.append(f"coefficient equality n<={args.nmax} j<={args.coeff}: "
                     f"{rep.compared} compared, {len(rep.mismatches)} mismatches")
        lines += [f"  mismatch n={m[0]} i={m[1]} j={m[2]}: {m[3]} vs {m[4]}" for m in rep.mismatches]
        verdicts.append({"check": "coeff", "n": args.nmax, "j": args.coeff, "equal": rep.ok,
                         "mismatches": [list(m) for m in rep.mismatches]})
    if args.symmetry is not None:
        fails = oracle.symmetry_suite(args.symmetry)
        ok &= not fails
        lines.append(f"symmetry suite n<={args.symmetry}: {len(fails)} failures")
        verdicts.append({"check": "symmetry", "n": args.symmetry, "equal": not fails})
    if args.census is not None:
        rep = rec132.good_recursion_census(args.census)
        ok &= rep.ok
        lines.append("census: " + ",".join(map(str, rep.counts)) + (" ok" if rep.ok else " FAIL"))
        lines += ["  " + p for p in rep.problems]
        verdicts.append({"check": "census", "n": args.census, "counts": rep.counts, "equal": rep.ok})
    if not verdicts:
        raise UsageError("check needs --family, --coeff, --symmetry or --census")
    if args.format == "json":
        return json.dumps(verdicts, sort_keys=True) + "\n", 0 if ok else 1
    return "\n".join(lines) + "\n", 0 if ok else 1


def cmd_observe(args) -> tuple[str, int]:
    if args.nmax < 4:
        raise UsageError("observe needs --nmax >= 4")
    _check_cap(args.nmax, 10, args.force, "observe")
    rep = oracle.observation_suite(args.nmax, args.fib_nmax)
    if args.format == "json":
        return json.dumps(rep.rows, sort_keys=True) + "\n", 0 if rep.ok else 1
    if args.format == "csv":
        rows = [[r["n"], r["claim"], *r["values"], r["expected"], int(r["ok"])] for r in rep.rows]
        return _csv(["n", "claim", "left", "right", "expected", "ok"], rows), 0 if rep.ok else 1
    return "\n".join(rep.lines()) + "\n", 0 if rep.ok else 1


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="patternlab", description=__doc__.split("\n\n")[0].strip())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--force", action="store_true", help="allow n above the default cap")
    common.add_argument("--workers", type=int, default=1, help="threads per table entry (output is unchanged)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="entries 0..nmax of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--set", action="append", metavar="NAME=1", help="specialize a variable to 1")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("table", parents=[common], help="one entry of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", action="append", metavar="NAME=1")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bijection", parents=[common], help="permutation <-> Dyck path")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--phi", metavar="PERM", help="132-avoider to path")
    g.add_argument("--psi", metavar="PERM", help="123-avoider to path")
    g.add_argument("--phi-inv", metavar="PATH")
    g.add_argument("--psi-inv", metavar="PATH")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("popularity", parents=[common], help="popularity series")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--mmax", type=int, default=4, help="longest tower pattern")
    p.set_defaults(func=cmd_popularity)

    p = sub.add_parser("check", parents=[common], help="compare against brute force")
    p.add_argument("--family", help="family name or 'all'")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--coeff", type=int, metavar="JMAX", help="coefficient equality for j <= JMAX")
    p.add_argument("--symmetry", type=int, metavar="N", help="symmetry suite up to N")
    p.add_argument("--census", type=int, metavar="N", help="good-recursion census up to N")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("observe", parents=[common], help="coefficient observations")
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--fib-nmax", type=int, default=None)
    p.set_defaults(func=cmd_observe)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        ap.error("--workers must be at least 1")
    try:
        text, code = args.func(args)
    except (UsageError, InvalidInput) as exc:
        print(f"patternlab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
