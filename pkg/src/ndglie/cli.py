"""Command line: ``ndglie verify ...`` and ``ndglie catalog ...``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .report import VerificationReport

EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _run_suite(args):
    from .suites import SUITES

    name, allow_slow, seed = args
    return SUITES[name](allow_slow=allow_slow, seed=seed)


def _dump_systems(out) -> None:
    from .brackets import SOLVABLE_CASES, build_candidate
    from .catalog import witnesses
    from .jacobi import jacobi_system
    from .poly import format_poly

    for case, name in SOLVABLE_CASES.items():
        c = build_candidate(name)
        eqs = jacobi_system(c)
        print(f"# jacobi {name} params {' '.join(c.params)} equations {len(eqs)}", file=out)
        for e in eqs:
            print(format_poly(e), file=out)
        for k, p in enumerate(witnesses(name)):
            vals = " ".join(f"{v}={x}" for v, x in sorted(p.items()) if x)
            print(f"# witness {name} {k}: {vals}", file=out)


def verify(ns, out) -> int:
    from .suites import SUITES

    names = list(SUITES) if ns.suite == "all" else [ns.suite]
    jobs = [(n, ns.allow_slow, ns.seed) for n in names]
    if ns.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=ns.jobs) as ex:
            parts = list(ex.map(_run_suite, jobs))
    else:
        parts = [_run_suite(j) for j in jobs]
    report = VerificationReport()
    for p in parts:
        report.extend(p)
    report = report.sorted()
    if ns.dump_system:
        _dump_systems(out)
    print(report.to_json() if ns.format == "json" else report.to_text(), file=out)
    return report.exit_code()


def catalog_cmd(ns, out) -> int:
    from .catalog import load_default
    from .liealg import Embedding, LieAlgebra

    cat = load_default()
    if ns.action == "list":
        print("\n".join(cat.names()), file=out)
        return 0
    try:
        entry = cat.get(ns.name)
    except KeyError as e:
        print(e.args[0], file=sys.stderr)
        return EX_USAGE
    if isinstance(entry, LieAlgebra):
        print(f"algebra {entry.name} dim {entry.dim}", file=out)
        if entry.labels:
            print("labels " + " ".join(entry.labels), file=out)
        labels = entry.labels or [f"e{i}" for i in range(entry.dim)]
        for (i, j), col in sorted(entry.brackets.items()):
            terms = " + ".join(f"({v}) {labels[k]}" for k, v in sorted(col.items()) if v != 0)
            if terms:
                print(f"[{labels[i]}, {labels[j]}] = {terms}", file=out)
    elif isinstance(entry, Embedding):
        print(f"embedding {entry.sub.name} into {entry.amb.name}", file=out)
    else:
        print(f"quotient {ns.name}: {entry.emb.sub.name} in {entry.emb.amb.name}, "
              f"dim m = {entry.m_dim}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITES

    p = _Parser(prog="ndglie", description="Exact verification of sub-maximal NDG almost complex structures.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--allow-slow", action="store_true", help="raise the Groebner basis budgets tenfold")
    v.add_argument("--dump-system", action="store_true", help="print the Jacobi systems and witnesses")
    v.add_argument("--seed", type=int, default=0)
    c = sub.add_parser("catalog", help="inspect the built-in catalog")
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("name", nargs="?")
    return p


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    if ns.command == "verify":
        if ns.jobs < 1:
            parser.print_usage(sys.stderr)
            return EX_USAGE
        return verify(ns, out)
    if ns.action == "show" and not ns.name:
        parser.print_usage(sys.stderr)
        return EX_USAGE
    return catalog_cmd(ns, out)


def main() -> None:
    sys.exit(run())
