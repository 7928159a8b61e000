"""Command-line front end for the verification suites and ad-hoc computations.

Subcommands::

    bosonfermion schur 3,1            creation-operator word vs. the Schur basis
    bosonfermion clifford             anticommutators + correspondence window
    bosonfermion cat specht 2,1       categorified creation/annihilation checks
    bosonfermion cat sigma --module trivial:1
    bosonfermion cat bb --a 1 --b 1 --module S:1 [--star]
    bosonfermion cat bbstar --a 0 --b 0 --module S:1
    bosonfermion cat suite            the default categorical battery

Module specifiers: ``trivial:n`` (one-dimensional trivial module on n
letters), ``S:λ`` (irreducible labelled by a partition, e.g. ``S:2,1``),
``reg:n`` (regular module, n ≤ small).

Exit codes: 0 all checks passed, 1 at least one check failed, 2 malformed
input, 3 a requested instance exceeds the configured caps.

Common flags (see ``config`` for the matching environment variables):
``--max-degree``, ``--charge-window lo:hi``, ``--index-window lo:hi``,
``--cache-dir``, ``--no-cache``, ``--json``, ``--jobs``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .catbernstein import (
    creation_word,
    fermionic_relation_check,
    relation_suite_bb,
    relation_suite_bbstar,
    sigma_idempotence_check,
    sigma_vanishing_check,
    specht_annihilation_check,
    specht_creation_check,
    vacuum_vector,
    word_character,
)
from .config import RunConfig
from .fock import clifford_relation_report, verify_correspondence
from .partition_core import format_partition, parse_partition
from .reports import Report
from .symfunc import schur
from .symrep import regular_module, specht_module, trivial_module

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_CAP_EXCEEDED = 3

REGULAR_DEGREE_CAP = 4


class CapExceeded(Exception):
    """A requested instance is larger than the configured degree cap."""


def parse_module_spec(spec, cache_dir=None):
    """Build a symmetric-group module from ``kind:argument`` text."""
    kind, sep, arg = str(spec).partition(":")
    if not sep:
        raise ValueError(f"module spec must look like 'kind:arg', got {spec!r}")
    if kind == "trivial":
        return trivial_module(_nonneg_int(arg, spec))
    if kind == "S":
        return specht_module(parse_partition(arg), cache_dir=cache_dir)
    if kind == "reg":
        n = _nonneg_int(arg, spec)
        if n > REGULAR_DEGREE_CAP:
            raise CapExceeded(f"regular module degree {n} exceeds "
                              f"{REGULAR_DEGREE_CAP}")
        return regular_module(n)
    raise ValueError(f"unknown module kind {kind!r} in {spec!r} "
                     "(expected trivial:n, S:λ, or reg:n)")


def _nonneg_int(text, spec):
    try:
        n = int(text)
    except ValueError as exc:
        raise ValueError(f"bad module degree in {spec!r}") from exc
    if n < 0:
        raise ValueError(f"module degree must be nonnegative in {spec!r}")
    return n


# --------------------------------------------------------------------------
# task table (top-level functions so parallel workers can receive them)
# --------------------------------------------------------------------------


def _task_clifford(cfg_obj):
    return clifford_relation_report(cfg_obj["max_degree"],
                                    tuple(cfg_obj["charge_window"]),
                                    tuple(cfg_obj["index_window"]))


def _task_correspondence(cfg_obj):
    return verify_correspondence(cfg_obj["max_degree"],
                                 tuple(cfg_obj["charge_window"]),
                                 tuple(cfg_obj["index_window"]),
                                 inject_sign_flip=cfg_obj.get("flip", False))


def _task_specht_creation(lam_text, cache_dir):
    return specht_creation_check(parse_partition(lam_text),
                                 cache_dir=cache_dir)


def _task_specht_annihilation(lam_text, cache_dir):
    return specht_annihilation_check(parse_partition(lam_text),
                                     cache_dir=cache_dir)


def _task_sigma(module_spec, cache_dir):
    m = parse_module_spec(module_spec, cache_dir)
    rep = sigma_idempotence_check(m)
    rep.extend(sigma_vanishing_check(m))
    rep.config["module"] = module_spec
    return rep


def _task_bb(a, b, star, module_spec, cache_dir):
    m = parse_module_spec(module_spec, cache_dir)
    rep = relation_suite_bb(a, b, m, star=star)
    rep.config["module"] = module_spec
    return rep


def _task_bbstar(a, b, module_spec, cache_dir):
    m = parse_module_spec(module_spec, cache_dir)
    rep = relation_suite_bbstar(a, b, m)
    rep.config["module"] = module_spec
    return rep


def _task_fermionic(index):
    return fermionic_relation_check(index, vacuum_vector())


_TASKS = {
    "clifford": _task_clifford,
    "correspondence": _task_correspondence,
    "specht_creation": _task_specht_creation,
    "specht_annihilation": _task_specht_annihilation,
    "sigma": _task_sigma,
    "bb": _task_bb,
    "bbstar": _task_bbstar,
    "fermionic": _task_fermionic,
}


def _run_one(desc):
    kind, payload = desc
    return _TASKS[kind](*payload)


def run_tasks(descs, jobs=1):
    """Run report-producing tasks, merging results deterministically.

    Reports come back sorted by title and configuration, so the output
    does not depend on the worker count or completion order.
    """
    if jobs > 1 and len(descs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, descs))
    else:
        reports = [_run_one(d) for d in descs]
    reports.sort(key=lambda r: (r.title,
                                json.dumps(r.config, sort_keys=True)))
    return reports


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_schur(cfg, partition_text):
    """Creation-operator word applied to 1, compared with the Schur basis."""
    lam = parse_partition(partition_text)
    if lam.size() > cfg.max_degree:
        raise CapExceeded(f"partition size {lam.size()} exceeds "
                          f"--max-degree {cfg.max_degree}")
    computed = word_character(creation_word(lam), schur(()))
    expected = schur(lam)
    report = Report("creation word in the function basis",
                    config={"partition": format_partition(lam)})
    report.add("operator word equals the basis element",
               computed == expected,
               computed=_symfunc_text(computed),
               expected=_symfunc_text(expected))
    return [report], _symfunc_text(computed)


def cmd_clifford(cfg, inject_sign_flip=False):
    """Anticommutator battery and correspondence window as one run."""
    cfg_obj = cfg.to_json_obj()
    cfg_obj["flip"] = bool(inject_sign_flip)
    descs = [("clifford", (cfg_obj,)), ("correspondence", (cfg_obj,))]
    return run_tasks(descs, cfg.jobs), None


def cmd_cat(cfg, args):
    """Categorified-operator suites at the configured caps."""
    cache = cfg.effective_cache_dir
    mode = args.mode
    if mode == "specht":
        if args.partition is None:
            raise ValueError("cat specht needs a partition argument")
        lam = parse_partition(args.partition)
        if lam.size() > cfg.max_degree:
            raise CapExceeded(f"partition size {lam.size()} exceeds "
                              f"--max-degree {cfg.max_degree}")
        text = format_partition(lam)
        descs = [("specht_creation", (text, cache)),
                 ("specht_annihilation", (text, cache))]
    elif mode == "sigma":
        m = parse_module_spec(args.module, cache)
        if m.degree > cfg.max_degree:
            raise CapExceeded(f"module degree {m.degree} exceeds "
                              f"--max-degree {cfg.max_degree}")
        descs = [("sigma", (args.module, cache))]
    elif mode in ("bb", "bbstar"):
        m = parse_module_spec(args.module, cache)
        reach = m.degree + max(abs(args.a), abs(args.b)) + 1
        if reach > cfg.max_degree:
            raise CapExceeded(f"instance reaches degree {reach}, beyond "
                              f"--max-degree {cfg.max_degree}")
        if mode == "bb":
            descs = [("bb", (args.a, args.b, bool(args.star),
                             args.module, cache))]
        else:
            descs = [("bbstar", (args.a, args.b, args.module, cache))]
    elif mode == "suite":
        descs = _default_suite(cfg, cache)
    else:
        raise ValueError(f"unknown cat mode {mode!r}")
    return run_tasks(descs, cfg.jobs), None


def _default_suite(cfg, cache):
    """The default categorical battery, bounded by the degree cap."""
    from .partition_core import enumerate_partitions

    descs = []
    for k in range(1, min(cfg.max_degree, 4) + 1):
        for lam in enumerate_partitions(k):
            text = format_partition(lam)
            descs.append(("specht_creation", (text, cache)))
            if k <= 3:
                descs.append(("specht_annihilation", (text, cache)))
    for spec in ("trivial:0", "trivial:1", "S:2"):
        descs.append(("sigma", (spec, cache)))
    for a, b, spec in ((1, 1, "S:1"), (2, 1, "trivial:0"),
                       (0, 1, "trivial:0")):
        descs.append(("bb", (a, b, False, spec, cache)))
        descs.append(("bb", (a, b, True, spec, cache)))
    for a, b in ((0, 0), (1, 1), (1, 0), (0, 1)):
        descs.append(("bbstar", (a, b, "S:1", cache)))
    descs.append(("fermionic", (2,)))
    return descs


# --------------------------------------------------------------------------
# emission and entry point
# --------------------------------------------------------------------------


def _symfunc_text(f):
    if f.is_zero():
        return "0"
    bits = []
    for lam in f.support():
        c = f.terms[lam]
        if not lam.parts:
            bits.append(str(c))
            continue
        head = "" if c == 1 else f"{c}*"
        bits.append(f"{head}s[{format_partition(lam)}]")
    return " + ".join(bits)


def emit(reports, cfg, stream=None, extra_line=None):
    """Print reports (text or canonical JSON); return the exit code."""
    stream = sys.stdout if stream is None else stream
    passed = all(r.passed for r in reports)
    if cfg.json_output:
        doc = {
            "config": cfg.to_json_obj(),
            "passed": passed,
            "reports": [r.to_json_obj() for r in reports],
        }
        stream.write(json.dumps(doc, sort_keys=True,
                                separators=(",", ":")) + "\n")
    else:
        if extra_line is not None:
            stream.write(extra_line + "\n")
        for r in reports:
            stream.write(r.render_text() + "\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", dest="max_degree", type=int,
                        default=None, metavar="N",
                        help="partition-size / module-degree cap")
    common.add_argument("--charge-window", dest="charge_window",
                        default=None, metavar="LO:HI",
                        help="inclusive charge range; a single integer k "
                             "means -k:k, and negative bounds need the "
                             "--charge-window=LO:HI spelling")
    common.add_argument("--index-window", dest="index_window",
                        default=None, metavar="LO:HI",
                        help="inclusive generator-index range (same syntax)")
    common.add_argument("--cache-dir", dest="cache_dir", default=None,
                        metavar="DIR", help="on-disk module cache directory")
    common.add_argument("--no-cache", dest="no_cache", action="store_true",
                        help="ignore the cache even if a directory is set")
    common.add_argument("--json", dest="json", action="store_true",
                        help="emit one canonical JSON document")
    common.add_argument("--jobs", dest="jobs", type=int, default=None,
                        metavar="K", help="parallel worker count")

    parser = argparse.ArgumentParser(
        prog="bosonfermion",
        description="exact checks for the boson-fermion correspondence "
                    "and its categorified operators")
    sub = parser.add_subparsers(dest="command", required=True)

    p_schur = sub.add_parser(
        "schur", parents=[common],
        help="apply a creation-operator word to 1 and compare")
    p_schur.add_argument("partition", help="partition, e.g. 3,1 (0 = empty)")

    p_cliff = sub.add_parser(
        "clifford", parents=[common],
        help="anticommutator battery + correspondence window")
    p_cliff.add_argument("--inject-sign-flip", action="store_true",
                         help="test hook: corrupt one sign and expect failure")

    p_cat = sub.add_parser(
        "cat", parents=[common],
        help="categorified operator suites")
    p_cat.add_argument("mode",
                       choices=["specht", "sigma", "bb", "bbstar", "suite"])
    p_cat.add_argument("partition", nargs="?", default=None,
                       help="partition argument for specht mode")
    p_cat.add_argument("--module", default="trivial:1", metavar="SPEC",
                       help="module spec: trivial:n, S:λ, or reg:n")
    p_cat.add_argument("--a", type=int, default=0)
    p_cat.add_argument("--b", type=int, default=0)
    p_cat.add_argument("--star", action="store_true",
                       help="use annihilation operators in bb mode")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_PARSE_ERROR
    try:
        cfg = RunConfig.resolve(args.command, args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        if args.command == "schur":
            reports, line = cmd_schur(cfg, args.partition)
        elif args.command == "clifford":
            reports, line = cmd_clifford(
                cfg, inject_sign_flip=args.inject_sign_flip)
        else:
            reports, line = cmd_cat(cfg, args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    return emit(reports, cfg, extra_line=line)


if __name__ == "__main__":
    sys.exit(main())
