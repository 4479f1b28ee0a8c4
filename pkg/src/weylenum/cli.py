"""Command-line driver: generate, verify, classes, orders, bench.

Exit codes: 0 on success, 1 when a verification found mismatches, 2 on
runtime failures (bad arguments, missing files, integrity errors).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import classify, kernels, reference, store
from .errors import WeylError
from .orbit import generate_group
from .rootsystems import (RootSystem, load_cartan_file, parse_id, root_system,
                          root_system_from_cartan)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_FAILURE = 2


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise WeylError(f"bad weight {text!r}: expected comma-separated integers") from None


def _make_system(name: str, cartan_file: str | None) -> RootSystem:
    if cartan_file:
        return root_system_from_cartan(load_cartan_file(cartan_file), name=name)
    return root_system(name)


def cmd_generate(name: str, out_dir: str, start_weight: str | None = None,
                 levels_up_to: int | None = None, cartan_file: str | None = None,
                 kernel: str | None = None) -> int:
    rs = _make_system(name, cartan_file)
    start = _parse_weight(start_weight) if start_weight else None
    kernels.warmup(kernel)
    sizes = []
    t0 = time.perf_counter()
    for level in generate_group(rs, start=start, kernel=kernel, levels_up_to=levels_up_to):
        store.write_level(level, rs.name, out_dir)
        sizes.append(level.size)
        print(f"level {level.index}: {level.size}")
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    store.write_summary(out_dir, rs.name, rs.name, sizes, elapsed_ms)
    print(f"{rs.name}: {sum(sizes)} elements in {len(sizes)} levels, {elapsed_ms:.1f} ms")
    print(f"wrote {len(sizes)} level files and {rs.name}_summary.json to {out_dir}")
    return EXIT_OK


def cmd_verify(name: str, out_dir: str) -> int:
    expected = reference.LEVEL_SIZES.get(name)
    if expected is None:
        print(f"no reference table for {name}; reference data covers "
              f"{', '.join(sorted(reference.LEVEL_SIZES))}", file=sys.stderr)
        return EXIT_FAILURE
    summary = store.read_summary(out_dir, name)
    got = list(summary.get("levels", []))
    mismatches = []
    if len(got) != len(expected):
        mismatches.append(f"level count: expected {len(expected)}, got {len(got)}")
    for k, (want, have) in enumerate(zip(expected, got)):
        if want != have:
            mismatches.append(f"level {k}: expected {want}, got {have}")
    if summary.get("total") != sum(expected):
        mismatches.append(f"total: expected {sum(expected)}, got {summary.get('total')}")
    # The file names re-state each level's size; recount them independently
    # of the summary.
    paths = store.find_level_files(out_dir, name)
    from_files = [store.parse_level_file_name(p)[2] for p in paths]
    if from_files != list(expected):
        for k, (want, have) in enumerate(zip(expected, from_files)):
            if want != have:
                mismatches.append(f"level file {k}: expected elems={want}, got elems={have}")
        if len(from_files) != len(expected):
            mismatches.append(
                f"level file count: expected {len(expected)}, got {len(from_files)}")
    if name == "D4":
        golden_path = Path(out_dir) / store.level_file_name("D4", 2, 9)
        body = golden_path.read_text(encoding="utf-8")
        if body != reference.GOLDEN_D4_LEVEL2:
            for ln, (want, have) in enumerate(
                    zip(reference.GOLDEN_D4_LEVEL2.splitlines(), body.splitlines()), start=1):
                if want != have:
                    mismatches.append(
                        f"golden level-2 file differs at line {ln}: "
                        f"expected {want!r}, got {have!r}")
                    break
            else:
                mismatches.append("golden level-2 file differs in length")
    for line in mismatches:
        print(line)
    if mismatches:
        print(f"{name}: FAIL ({len(mismatches)} mismatches)")
        return EXIT_MISMATCH
    print(f"{name}: OK ({sum(expected)} elements over {len(expected)} levels"
          + (", golden level-2 file matches" if name == "D4" else "") + ")")
    return EXIT_OK


def _load_levels(name: str, out_dir: str):
    paths = store.find_level_files(out_dir, name)
    total = sum(store.parse_level_file_name(p)[2] for p in paths)
    return paths, total


def cmd_classes(name: str, out_dir: str, ceiling: int = classify.DEFAULT_CEILING,
                as_json: bool = False) -> int:
    paths, total = _load_levels(name, out_dir)
    if total > ceiling:
        print(f"{name} has {total} elements, above the ceiling {ceiling}; "
              "pass --ceiling to raise the limit if you have the memory",
              file=sys.stderr)
        return EXIT_FAILURE
    levels = [store.read_level(p) for p in paths]
    index = store.build_index(levels)
    classes = classify.conjugacy_classes(levels, index, ceiling=ceiling)
    rank = levels[0].weights.shape[1]
    try:
        family, _ = parse_id(name)
    except WeylError:
        family = None
    report = classify.format_class_report(classes, levels, family, rank)
    report_path = Path(out_dir) / f"{name}_classes.txt"
    with open(report_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(report)
    partition = classify.order_partition(index)
    if as_json:
        payload = {
            "root_system": name,
            "classes": [
                {
                    "size": c.size,
                    "order": c.element_order,
                    "representative": list(c.representative),
                    "word": list(c.representative_word),
                }
                for c in classes
            ],
            "order_partition": {str(k): v for k, v in partition.items()},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(report, end="")
        print(f"{name}: {len(classes)} classes; order partition "
              + ", ".join(f"{k}:{v}" for k, v in partition.items()))
    print(f"wrote {report_path}")
    if name == "D4":
        problems = []
        if sorted(c.size for c in classes) != sorted(reference.D4_CLASS_SIZES):
            problems.append(
                f"class sizes {sorted(c.size for c in classes)} != "
                f"{sorted(reference.D4_CLASS_SIZES)}")
        if partition != reference.D4_ORDER_PARTITION:
            problems.append(f"order partition {partition} != {reference.D4_ORDER_PARTITION}")
        from . import cycletype
        types = tuple(cycletype.class_cycle_type(c, levels) for c in classes)
        if types != reference.D4_CYCLE_TYPES:
            problems.append("cycle-type sequence deviates from the published rows")
        for line in problems:
            print(line)
        if problems:
            print("D4: FAIL")
            return EXIT_MISMATCH
        print("D4: classes match the published tables")
    return EXIT_OK


def cmd_orders(name: str, out_dir: str, as_json: bool = False) -> int:
    paths, _ = _load_levels(name, out_dir)
    levels = [store.read_level(p) for p in paths]
    index = store.build_index(levels)
    partition = classify.order_partition(index)
    if as_json:
        print(json.dumps({"root_system": name,
                          "order_partition": {str(k): v for k, v in partition.items()}},
                         indent=2))
    else:
        print(f"{name} order partition: "
              + ", ".join(f"{k}:{v}" for k, v in partition.items()))
    if name == "D4" and partition != reference.D4_ORDER_PARTITION:
        print(f"expected {reference.D4_ORDER_PARTITION}")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_bench(names: list[str], kernel: str | None = None) -> int:
    rows = []
    which = (kernel,) if kernel else kernels.available_kernels()
    for name in names:
        rs = root_system(name)
        for k in which:
            kernels.warmup(k)
            t0 = time.perf_counter()
            total = 0
            n_levels = 0
            for level in generate_group(rs, kernel=k):
                total += level.size
                n_levels += 1
            elapsed = time.perf_counter() - t0
            rows.append({
                "system": rs.name,
                "kernel": k,
                "levels": n_levels,
                "total": total,
                "elapsed_ms": round(elapsed * 1000.0, 3),
                "elements_per_sec": round(total / elapsed) if elapsed > 0 else None,
            })
    print(json.dumps(rows, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="weylenum",
        description="Enumerate finite Weyl groups level by level, with inverse "
                    "pairing, conjugacy classes, and signed cycle-types.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="enumerate a group and write level files")
    g.add_argument("type", help="root system id such as D4, B7, E7")
    g.add_argument("--out", required=True, help="output directory")
    g.add_argument("--start-weight", help="comma-separated coordinates, default all ones")
    g.add_argument("--levels-up-to", type=int, help="stop after this level index")
    g.add_argument("--cartan-file", help="text file with rank and Cartan matrix rows")
    g.add_argument("--kernel", choices=kernels.KERNELS, help="force a level-step kernel")

    v = sub.add_parser("verify", help="check generated output against reference tables")
    v.add_argument("type")
    v.add_argument("--out", required=True)

    c = sub.add_parser("classes", help="conjugacy classes from generated output")
    c.add_argument("type")
    c.add_argument("--out", required=True)
    c.add_argument("--ceiling", type=int, default=classify.DEFAULT_CEILING,
                   help="element-count limit for in-memory class computation")
    c.add_argument("--json", action="store_true")

    o = sub.add_parser("orders", help="order partition from generated output")
    o.add_argument("type")
    o.add_argument("--out", required=True)
    o.add_argument("--json", action="store_true")

    b = sub.add_parser("bench", help="in-memory enumeration benchmark (JSON)")
    b.add_argument("types", nargs="+")
    b.add_argument("--kernel", choices=kernels.KERNELS,
                   help="bench one kernel instead of all available")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args.type, args.out, args.start_weight,
                                args.levels_up_to, args.cartan_file, args.kernel)
        if args.command == "verify":
            return cmd_verify(args.type, args.out)
        if args.command == "classes":
            return cmd_classes(args.type, args.out, args.ceiling, args.json)
        if args.command == "orders":
            return cmd_orders(args.type, args.out, args.json)
        if args.command == "bench":
            return cmd_bench(args.types, args.kernel)
        raise WeylError(f"unknown command {args.command}")
    except WeylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
