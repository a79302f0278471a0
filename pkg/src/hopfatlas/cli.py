"""Command-line front end.

Exit codes: 0 all checks in the invocation passed; 1 a mathematical check
failed; 2 usage error / unknown verb or flag; 3 invalid family name or
parameter; 4 file I/O failure.  Identical invocations produce byte-identical
output.  HOPFATLAS_THREADS bounds suite parallelism (default: machine cores).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import invariants as inv
from .atlas import UnknownFamilyError, build, shipped_surjections
from .hopf import coinvariants, hopf_dual, verify_antipode, verify_bialgebra, \
    verify_hopf_morphism
from .isowitness import search_iso, verify_iso
from .prover import Assumptions, ProverError, prove, replay
from .scalars import FieldElem
from .serialize import dump_algebra, dump_witness, load_witness
from .statuskb import crosscheck_with_prover, render_table, status

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_PARAMETER = 3
EXIT_IO = 4


class CliCheckFailure(Exception):
    pass


def _build(fam):
    try:
        return build(fam)
    except UnknownFamilyError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(EXIT_BAD_PARAMETER)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(EXIT_BAD_PARAMETER)


def cmd_verify(args):
    h = _build(args.family)
    rep_b = verify_bialgebra(h)
    rep_a = verify_antipode(h)
    if rep_b.ok and rep_a.ok:
        print("ok: bialgebra, antipode")
        return EXIT_OK
    for axiom, witness, msg in rep_b.failures + rep_a.failures:
        print(f"FAIL {axiom} at {witness} {msg}")
    return EXIT_CHECK_FAILED


def cmd_invariants(args):
    h = _build(args.family)
    s = inv.summarize(h)
    print(f"family={args.family}")
    print(f"dim={s.dim}")
    print(f"corad_dim={s.corad_dim}")
    print(f"r={s.grouplike_count}" + ("" if s.r_certified else " (uncertified)"))
    print(f"s={s.dual_grouplike_count}" + ("" if s.s_certified else " (uncertified)"))
    print(f"type=({s.grouplike_count},{s.dual_grouplike_count})")
    print(f"antipode_order={s.antipode_order}")
    print(f"trace_S2={s.trace_S2}")
    print(f"semisimple={'yes' if s.is_semisimple else 'no'}")
    print("filtration=" + ",".join(str(d) for d in s.filtration))
    if s.skew_table:
        dims = ",".join(str(d) for d in sorted(s.skew_table.values()))
        print(f"skew_dims={dims}")
    if args.report:
        from .serialize import canonical_json

        payload = {
            "family": args.family,
            "dim": s.dim,
            "corad_dim": s.corad_dim,
            "r": s.grouplike_count,
            "s": s.dual_grouplike_count,
            "r_certified": s.r_certified,
            "s_certified": s.s_certified,
            "antipode_order": s.antipode_order,
            "trace_S2": s.trace_S2.to_json(),
            "semisimple": s.is_semisimple,
            "filtration": list(s.filtration),
            "skew_dims": sorted(s.skew_table.values()),
        }
        _write(args.report, canonical_json(payload))
    return EXIT_OK


def cmd_dual(args):
    h = _build(args.family)
    text = dump_algebra(hopf_dual(h))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export(args):
    h = _build(args.family)
    _write(args.out, dump_algebra(h))
    return EXIT_OK


def _write(path, text):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as e:
        print(f"error: cannot write {path}: {e}", file=sys.stderr)
        sys.exit(EXIT_IO)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        print(f"error: cannot read {path}: {e}", file=sys.stderr)
        sys.exit(EXIT_IO)


def _parse_grid(spec, order):
    grid = []
    for tok in spec.split(","):
        tok = tok.strip()
        if tok.startswith("z^"):
            grid.append(FieldElem.zeta(order, int(tok[2:])))
        elif tok == "z":
            grid.append(FieldElem.zeta(order, 1))
        elif tok.startswith("-z^"):
            grid.append(-FieldElem.zeta(order, int(tok[3:])))
        elif tok == "-z":
            grid.append(-FieldElem.zeta(order, 1))
        else:
            grid.append(FieldElem.from_rational(tok, order))
    return grid


def cmd_iso(args):
    h, k = _build(args.family1), _build(args.family2)
    if args.witness:
        w = load_witness(_read(args.witness))
        rep = verify_iso(h, k, w)
        if rep.ok:
            print("witness verified")
            return EXIT_OK
        print(f"witness FAILED: {rep.failures[:3]}")
        return EXIT_CHECK_FAILED
    from math import lcm

    grid = _parse_grid(args.grid, lcm(h.order, k.order)) if args.grid else None
    w = search_iso(h, k, grid=grid, budget=args.budget)
    if isinstance(w, str):
        print(w)
        return EXIT_CHECK_FAILED
    sys.stdout.write(dump_witness(w))
    return EXIT_OK


def cmd_coinv(args):
    table = shipped_surjections()
    if args.surjection.startswith("id:"):
        h = _build(args.surjection[3:])
        from .linalg import LinearMap

        entry = (h, h, LinearMap.identity(h.order, h.dim))
    elif args.surjection in table:
        entry = table[args.surjection]
    else:
        print(f"error: unknown surjection {args.surjection!r}; shipped: "
              + ", ".join(sorted(table)) + ", id:<family>", file=sys.stderr)
        return EXIT_BAD_PARAMETER
    big, small, pi = entry
    if not verify_hopf_morphism(pi, big, small).ok:
        print("FAIL: not a Hopf algebra map")
        return EXIT_CHECK_FAILED
    sub = coinvariants(big, small, pi, args.side)
    print(f"dim H={big.dim} dim B={small.dim} dim coinvariants={sub.dim}")
    print(f"law: {big.dim} == {sub.dim} * {small.dim}")
    return EXIT_OK


def cmd_prove(args):
    if args.replay:
        ok, report = replay(_read(args.replay))
        print("replay: " + ("verdicts reproduced bit-for-bit" if ok else "MISMATCH"))
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    assumptions = Assumptions(
        nonpointed="pointed-ok" not in args.assume,
        noncopointed="copointed-ok" not in args.assume,
    )
    flags = tuple(args.flag)
    try:
        report = prove(args.dim, assumptions, args.pack, flags, tuple(args.axiom))
    except ProverError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_PARAMETER
    elim = []
    for v in report.verdicts:
        if v.eliminated:
            elim.append(f"{v.g}*" if v.used_axiom else str(v.g))
    print(f"n={args.dim} pack={args.pack} flags={','.join(flags) or '-'} "
          f"axioms={','.join(args.axiom) or '-'}")
    print("eliminated: " + (",".join(elim) or "-") + (" (* axiom)" if any("*" in e for e in elim) else ""))
    print("surviving: " + (",".join(str(g) for g in report.surviving_gs()) or "-"))
    cap = None if args.verbose else 3
    for v in report.verdicts:
        if v.eliminated:
            continue
        feasible = [pv for pv in v.profiles if not pv.eliminated]
        shown = feasible if cap is None else feasible[:cap]
        for pv in shown:
            assign = " ".join(f"{k}={val}" for k, val in sorted((pv.assignment or {}).items()))
            print(f"  g={v.g} feasible {pv.profile.label()}" + (f" with {assign}" if assign else ""))
        if cap is not None and len(feasible) > cap:
            print(f"  g={v.g} ... {len(feasible) - cap} more feasible profiles (--verbose lists all)")
    if args.trace:
        _write(args.trace, report.serialize())
    return EXIT_OK


def cmd_status(args):
    if not (2 <= args.dim <= 100):
        print("error: status covers dimensions 2..100", file=sys.stderr)
        return EXIT_BAD_PARAMETER
    st = status(args.dim)
    print(f"dim={st['dim']} pattern={st['pattern']}")
    for col in ("semisimple", "pointed", "chevalley", "other"):
        cell = st["columns"][col]
        note = f" ({cell.note})" if cell.note else ""
        print(f"{col}: {cell.status}{note} [{', '.join(cell.citations)}]")
    if "grouplike_orders" in st:
        print("grouplike_orders: " + ",".join(str(g) for g in st["grouplike_orders"]))
        rep = crosscheck_with_prover(args.dim)
        print(str(rep))
        return EXIT_OK if rep.ok else EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_table(args):
    sys.stdout.write(render_table(args.format))
    return EXIT_OK


def cmd_suite(args):
    from .acceptance import CRITERIA

    workers = int(os.environ.get("HOPFATLAS_THREADS", 0)) or (os.cpu_count() or 1)
    results = [None] * len(CRITERIA)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = {pool.submit(fn, args.seed): i for i, (_, _, fn) in enumerate(CRITERIA)}
        for fut, i in futures.items():
            results[i] = fut.result()
    all_ok = True
    for (cid, desc, _), (ok, detail) in zip(CRITERIA, results):
        all_ok &= ok
        print(f"{cid:5s} {'PASS' if ok else 'FAIL'}  {desc}: {detail}")
    print("suite: " + ("all criteria passed" if all_ok else "FAILURES PRESENT"))
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hopfatlas",
        description="exact Hopf algebra atlas, invariants, and counting prover",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="run the axiom checkers on a family")
    p.add_argument("family")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("invariants", help="coradical invariants of a family")
    p.add_argument("family")
    p.add_argument("--report", help="also write a structured JSON report here")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("dual", help="serialize the dual of a family")
    p.add_argument("family")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("export", help="write the canonical algebra file")
    p.add_argument("family")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_export)

    p = sub.add_parser("iso", help="search or verify an isomorphism witness")
    p.add_argument("family1")
    p.add_argument("family2")
    p.add_argument("--witness", help="verify this witness file instead of searching")
    p.add_argument("--grid", help="comma list of coefficients, e.g. 0,1,-1,z,-z,1/2")
    p.add_argument("--budget", type=int, default=200000)
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("coinv", help="coinvariants of a shipped surjection")
    p.add_argument("surjection")
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.set_defaults(fn=cmd_coinv)

    p = sub.add_parser("prove", help="run the elimination prover on a dimension")
    p.add_argument("dim", type=int, nargs="?")
    p.add_argument("--pack", choices=("base", "extended"), default="base")
    p.add_argument("--flag", action="append", default=[],
                   help="full-orbit=<d> or free-translation; repeatable")
    p.add_argument("--axiom", action="append", default=[], help="e.g. pq-half-dim")
    p.add_argument("--assume", action="append", default=[],
                   choices=("pointed-ok", "copointed-ok"))
    p.add_argument("--trace", help="write the replayable trace here")
    p.add_argument("--replay", help="re-run a stored trace and compare bytes")
    p.add_argument("--verbose", action="store_true", help="list every feasible profile")
    p.set_defaults(fn=cmd_prove)

    p = sub.add_parser("status", help="Table-1 style status of a dimension")
    p.add_argument("dim", type=int)
    p.set_defaults(fn=cmd_status)

    p = sub.add_parser("table", help="render the whole knowledge base")
    p.add_argument("--format", choices=("md", "csv"), default="md")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_suite)

    args = parser.parse_args(argv)
    if args.verb == "prove" and not args.replay and args.dim is None:
        parser.error("prove needs a dimension or --replay FILE")
    return args.fn(args)


def console_entry():
    try:
        return main()
    except BrokenPipeError:
        try:
            sys.stdout.close()
        except OSError:
            pass
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(console_entry())
