"""Command line driver: ``lecycle {milnor,le-numbers,check,corpus,oracle}``.

Exit codes: 0 ok, 1 input error or failing corpus, 2 infinite length,
3 no admissible frame, 4 inconsistent criteria, 5 expectation mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .corpus import entry_files, load_entry, parse_point, write_expectations
from .cycles import jacobian
from .errors import AdmissibilityError, InconsistentCriteria, InfiniteLength, LecycleError
from .lenumbers import choose_admissible_tower, le_profile, milnor_number, slice_milnor
from .report import dumps_payload, dumps_report, run_entry

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFINITE = 2
EXIT_ADMISSIBILITY = 3
EXIT_INCONSISTENT = 4
EXIT_MISMATCH = 5


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, InfiniteLength):
        return EXIT_INFINITE
    if isinstance(exc, AdmissibilityError):
        return EXIT_ADMISSIBILITY
    if isinstance(exc, InconsistentCriteria):
        return EXIT_INCONSISTENT
    return EXIT_INPUT


def _seeds(args, entry):
    if args.seed is not None:
        return [args.seed + i for i in range(8)]
    return list(entry.seeds)


def _emit(obj, output, text=None):
    text = text if text is not None else json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if output:
        _atomic_write(Path(output), text)
    else:
        sys.stdout.write(text)


def _atomic_write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def cmd_milnor(args) -> int:
    entry = load_entry(args.file)
    point = parse_point(args.point) if args.point else None
    germ = entry.germ()
    if args.slice:
        s = jacobian(germ).sigma_dim
        tower, _ = choose_admissible_tower(germ, entry.frame == "identity", _seeds(args, entry), s,
                                           [point] if point else [])
        value = slice_milnor(germ, tower.frame, point, s)
        _emit({"slice_milnor": value, "s": s, "frame": tower.frame.as_json()}, args.output)
    else:
        _emit({"milnor": milnor_number(germ, point)}, args.output)
    return EXIT_OK


def cmd_le_numbers(args) -> int:
    entry = load_entry(args.file)
    point = parse_point(args.point) if args.point else None
    germ = entry.germ()
    s = jacobian(germ).sigma_dim
    tower, tried = choose_admissible_tower(germ, entry.frame == "identity", _seeds(args, entry), s,
                                           [point] if point else [])
    out = le_profile(tower, point).as_json()
    out["s"] = s
    out["frames_tried"] = tried
    _emit(out, args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    entry = load_entry(args.file)
    if args.seed is not None:
        entry.seeds = _seeds(args, entry)
    result = run_entry(entry)
    payload = result["payload"]
    _emit(None, args.output, dumps_payload(payload))
    if payload["mismatches"]:
        print(f"expectation mismatch: {json.dumps(payload['mismatches'], sort_keys=True)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _corpus_worker(path_and_seed):
    path, seed = path_and_seed
    try:
        entry = load_entry(path)
        if seed is not None:
            entry.seeds = [seed + i for i in range(8)]
        result = run_entry(entry)
        status = "mismatch" if result["payload"]["mismatches"] else "pass"
        return entry.name, status, result, None, EXIT_MISMATCH if status == "mismatch" else EXIT_OK
    except LecycleError as exc:
        return Path(path).stem, "error", None, f"{type(exc).__name__}: {exc}", _exit_code(exc)


def cmd_corpus(args) -> int:
    files = entry_files(args.dir)
    out_dir = Path(args.output) if args.output else None
    jobs = max(1, args.jobs)
    work = [(str(p), args.seed) for p in files]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corpus_worker, work))
    else:
        results = [_corpus_worker(w) for w in work]
    results.sort(key=lambda r: r[0])

    names = [r[0] for r in results]
    dupes = sorted({n for n in names if names.count(n) > 1})
    entries = {}
    for name, status, result, error, code in results:
        entries[name] = {"status": status, "exit_code": code}
        if error:
            entries[name]["error"] = error
        elif result["payload"]["mismatches"]:
            entries[name]["mismatches"] = result["payload"]["mismatches"]
        if out_dir and result is not None:
            _atomic_write(out_dir / f"{name}.json", dumps_report(result))
            _atomic_write(out_dir / f"{name}.payload.json", dumps_payload(result["payload"]))
    failed = sorted(n for n, e in entries.items() if e["status"] != "pass") + dupes
    summary = {
        "schema": 1,
        "tool_version": __version__,
        "entries": entries,
        "count": len(entries),
        "passed": len(entries) - len(set(failed)),
        "failed": sorted(set(failed)),
        "duplicate_names": dupes,
        "message": f"{len(entries)} entries",
    }
    text = json.dumps(summary, sort_keys=True, indent=2) + "\n"
    if out_dir:
        _atomic_write(out_dir / "summary.json", text)
    sys.stdout.write(text)
    return EXIT_INPUT if failed else EXIT_OK


def cmd_oracle(args) -> int:
    from . import oracle

    target = Path(args.path)
    files = entry_files(target) if target.is_dir() else [target]
    out = {}
    for path in files:
        entry = load_entry(path)
        exp = oracle.expectations(entry)
        out[entry.name] = exp
        if args.write:
            write_expectations(path, exp)
    _emit(out, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lecycle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, point=True):
        if point:
            p.add_argument("--point", help="comma separated rational coordinates (default: origin)")
        p.add_argument("--seed", type=int, default=None,
                       help="base seed; frames use seed..seed+7 (default: entry seeds or LECYCLE_SEED)")
        p.add_argument("--output", help="write JSON here instead of stdout")

    p = sub.add_parser("milnor", help="Milnor number (or slice Milnor number) at a point")
    p.add_argument("file")
    p.add_argument("--slice", action="store_true", help="restrict to the frame slice through the point")
    common(p)
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("le-numbers", help="Lê numbers at a point")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_le_numbers)

    p = sub.add_parser("check", help="criteria verdict and codimension-two scenario for one entry")
    p.add_argument("file")
    common(p, point=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("corpus", help="run every *.germ entry of a directory")
    p.add_argument("dir")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output", help="directory for per-entry reports and summary.json")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("oracle", help="recompute expectations through the independent path")
    p.add_argument("path", help="entry file or corpus directory")
    p.add_argument("--write", action="store_true", help="store expectations back into the entry files")
    p.add_argument("--output")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LecycleError as exc:
        code = _exit_code(exc)
        sys.stdout.write(json.dumps({"error": str(exc), "kind": type(exc).__name__, "exit_code": code},
                                    sort_keys=True) + "\n")
        print(f"lecycle: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
