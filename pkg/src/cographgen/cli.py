"""Command line: generate, count, verify, bench.

Exit status is 0 on success, 1 on a failed check or I/O error, 2 on bad
usage.  Data goes to stdout (or ``--output``), diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, TextIO

from . import generator, oracle
from .cotree import compare_trees, is_ordered, min_tree, parse, serialize, validate
from .graphout import complement_check, materialize, to_dot, to_edgelist, to_graph6
from .partitions import Ordering, min_partition, next_partition
from .successor import next_tree

FORMATS = ("cotree", "graph6", "edgelist", "dot")


@dataclass
class RunConfig:
    command: str
    n: int
    format: str = "cotree"
    limit: Optional[int] = None
    connected_only: bool = False
    trees_only: bool = False
    long_oracle: bool = False
    output: Optional[str] = None
    workers: int = 1
    serialized: bool = True


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cographgen", description="Enumerate unlabeled cographs via canonical cotrees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("-n", type=_positive, required=True, help="number of vertices")
        p.add_argument("-o", "--output", help="write data here instead of stdout")

    gen = sub.add_parser("generate", help="stream all cographs on n vertices")
    common(gen)
    gen.add_argument("--format", choices=FORMATS, default="cotree")
    gen.add_argument("--limit", type=_positive, help="stop after this many outputs")
    gen.add_argument("--connected-only", action="store_true", help="emit only join-rooted (connected) cographs")
    gen.add_argument("--trees-only", action="store_true", help="one line per tree, without root types")

    cnt = sub.add_parser("count", help="print the number of cographs on n vertices")
    common(cnt)
    cnt.add_argument("--workers", type=_positive, default=1, help="processes for range-split counting")

    ver = sub.add_parser("verify", help="cross-check the generator against brute force")
    common(ver)
    ver.add_argument("--long-oracle", action="store_true", help="allow the slow n = 7 graph brute force")

    bench = sub.add_parser("bench", help="measure delay in counting mode")
    common(bench)
    bench.add_argument("--no-serialized", dest="serialized", action="store_false",
                       help="skip the second pass that includes serialization cost")
    return parser


def parse_config(argv: Optional[list[str]] = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(**vars(args))
    if cfg.trees_only and cfg.format != "cotree":
        parser.error("--trees-only only applies to --format cotree")
    if cfg.trees_only and cfg.connected_only:
        parser.error("--trees-only and --connected-only are mutually exclusive")
    if cfg.command == "bench" and cfg.n < 2:
        parser.error("bench needs n >= 2")
    return cfg


@contextmanager
def _open_output(cfg: RunConfig) -> Iterator[TextIO]:
    if cfg.output is None:
        sys.stdout.reconfigure(line_buffering=True)
        yield sys.stdout
    else:
        with open(cfg.output, "w", encoding="utf-8", buffering=1) as fh:
            yield fh


def _render(handle: generator.CographHandle, fmt: str, ordinal: int) -> str:
    if fmt == "cotree":
        return handle.text
    g = materialize(handle)
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edgelist":
        # graphs are blank-line separated blocks
        return to_edgelist(g) + "\n"
    return to_dot(g, name=f"G{ordinal}")


def cmd_generate(cfg: RunConfig, out: TextIO) -> int:
    written = 0
    if cfg.trees_only:
        for t in generator.trees(cfg.n):
            if cfg.limit is not None and written >= cfg.limit:
                break
            out.write(serialize(t) + "\n")
            written += 1
        return 0
    for h in generator.cographs(cfg.n):
        if cfg.limit is not None and written >= cfg.limit:
            break
        if cfg.connected_only and h.root_type == 0 and cfg.n > 1:
            continue
        out.write(_render(h, cfg.format, written) + "\n")
        written += 1
    return 0


def cmd_count(cfg: RunConfig, out: TextIO) -> int:
    out.write(f"{generator.count(cfg.n, workers=cfg.workers)}\n")
    return 0


class _Report:
    def __init__(self, out: TextIO):
        self.out = out
        self.failed = False

    def check(self, name: str, run: Callable[[], Optional[str]]) -> None:
        """``run`` returns None on success or a counterexample description."""
        if self.failed:
            self.out.write(f"SKIP {name}: earlier check failed\n")
            return
        problem = run()
        if problem is None:
            self.out.write(f"PASS {name}\n")
        else:
            self.failed = True
            self.out.write(f"FAIL {name}: {problem}\n")

    def skip(self, name: str, why: str) -> None:
        self.out.write(f"SKIP {name}: {why}\n")


def _check_partition_chain(n: int) -> Optional[str]:
    expected = oracle.all_partitions(n)
    p = min_partition(n)
    for i, want in enumerate(expected):
        if p != want:
            return f"step {i}: got {p}, expected {want}"
        p = next_partition(p)
    if p is not None:
        return f"chain continues past the maximum to {p}"
    return None


def _check_tree_chain(n: int) -> Optional[str]:
    expected = oracle.all_tree_texts(n)
    got = [serialize(t) for t in generator.trees(n)]
    for i, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            return f"tree {i}: got {a}, expected {b}"
    if len(got) != len(expected):
        return f"generator gave {len(got)} trees, brute force {len(expected)}"
    return None


def _check_graph_classes(n: int, allow_long: bool) -> Optional[str]:
    brute = oracle.cograph_classes_bruteforce(n, allow_long)
    seen = set()
    for h in generator.cographs(n):
        form = oracle.canonical_form(materialize(h))
        if form not in brute:
            return f"{h.text} ({to_graph6(materialize(h))}) is not a brute-force class"
        if form in seen:
            return f"{h.text} ({to_graph6(materialize(h))}) duplicates an earlier output"
        seen.add(form)
    if seen != brute:
        return f"generator {len(seen)} classes vs brute force {len(brute)}"
    return None


def _check_graphs(n: int) -> Optional[str]:
    for t in generator.trees(n):
        g0, g1 = materialize(t, 0), materialize(t, 1)
        text = serialize(t)
        if n > 1 and (g0.is_connected() or not g1.is_connected()):
            return f"connectivity wrong for {text}"
        if not complement_check(g0, g1):
            return f"type-1 graph of {text} is not the complement of its type-0 graph"
        for g in (g0, g1):
            if not oracle.is_p4_free(g):
                return f"{to_graph6(g)} from {text} contains an induced P4"
    return None


def _check_internal(n: int) -> Optional[str]:
    texts: set[str] = set()
    prev = None
    for t in generator.trees(n):
        text = serialize(t)
        try:
            validate(t)
        except ValueError as exc:
            return f"{text}: {exc}"
        if not is_ordered(t):
            return f"{text} has an unordered siblinghood"
        if text in texts:
            return f"{text} emitted twice"
        if prev is not None and compare_trees(prev, t) != Ordering.LESS:
            return f"{serialize(prev)} is not below {text}"
        if serialize(parse(text)) != text:
            return f"{text} does not round-trip"
        texts.add(text)
        prev = t.copy()
    return None


def cmd_verify(cfg: RunConfig, out: TextIO) -> int:
    n = cfg.n
    report = _Report(out)
    if 2 <= n <= 20:
        report.check(f"partition-chain n={n}", lambda: _check_partition_chain(n))
    else:
        report.skip("partition-chain", f"n={n} outside 2..20")
    if 2 <= n <= oracle.MAX_TREE_N:
        report.check(f"tree-chain n={n}", lambda: _check_tree_chain(n))
    else:
        report.skip("tree-chain", f"n={n} outside 2..{oracle.MAX_TREE_N}")
    top = oracle.LONG_GRAPH_N if cfg.long_oracle else oracle.MAX_GRAPH_N
    if n <= top:
        report.check(f"graph-classes n={n}", lambda: _check_graph_classes(n, cfg.long_oracle))
        report.check(
            f"count n={n}",
            lambda: None if generator.count(n) == oracle.count_cographs_bruteforce(n, cfg.long_oracle)
            else f"generator {generator.count(n)} vs brute force {oracle.count_cographs_bruteforce(n, cfg.long_oracle)}",
        )
    else:
        report.skip("graph-classes", f"n={n} beyond brute force range (max {top})")
        report.skip("count", f"n={n} beyond brute force range (max {top})")
    if n <= 8:
        report.check(f"p4-free/complement/connectivity n={n}", lambda: _check_graphs(n))
    else:
        report.skip("p4-free/complement/connectivity", f"n={n} > 8")
    report.check(f"internal-invariants n={n}", lambda: _check_internal(n))
    report.check(
        f"count-parity n={n}",
        lambda: None if n == 1 or generator.count(n) % 2 == 0 else "odd count",
    )
    out.write(("FAILED" if report.failed else "OK") + "\n")
    return 1 if report.failed else 0


def bench(n: int, serialized: bool = True) -> dict[str, float]:
    """Counting-mode run with per-step wall-clock and work counters."""
    clock = time.perf_counter
    t0 = clock()
    t = min_tree(n)
    first = clock() - t0
    start_work = t.node_count()
    steps = 0
    max_delay = 0.0
    max_work = 0
    total_work = 0
    w = 0
    t_prev = clock()
    while True:
        ok = next_tree(t)
        now = clock()
        if now - t_prev > max_delay:
            max_delay = now - t_prev
        t_prev = now
        dw = t.work - w
        w = t.work
        total_work += dw
        if not ok:
            break
        steps += 1
        if dw > max_work:
            max_work = dw
    total = clock() - t0
    outputs = 2 * (steps + 1)
    stats = {
        "n": n,
        "total_outputs": outputs,
        "total_seconds": total,
        "time_to_first_s": first,
        "start_work": start_work,
        "mean_delay_s": total / outputs,
        "max_delay_s": max_delay,
        "max_step_work": max_work,
        "mean_step_work": total_work / (steps + 1),
        "max_step_work_per_n": max_work / n,
    }
    if serialized:
        s0 = clock()
        max_delay = 0.0
        t_prev = s0
        for h in generator.cographs(n):
            h.text
            now = clock()
            if now - t_prev > max_delay:
                max_delay = now - t_prev
            t_prev = now
        stats["serialized_total_seconds"] = clock() - s0
        stats["serialized_mean_delay_s"] = stats["serialized_total_seconds"] / outputs
        stats["serialized_max_delay_s"] = max_delay
    return stats


def cmd_bench(cfg: RunConfig, out: TextIO) -> int:
    for key, value in bench(cfg.n, cfg.serialized).items():
        out.write(f"{key}={value:.9g}\n" if isinstance(value, float) else f"{key}={value}\n")
    return 0


COMMANDS = {"generate": cmd_generate, "count": cmd_count, "verify": cmd_verify, "bench": cmd_bench}


def main(argv: Optional[list[str]] = None) -> int:
    cfg = parse_config(argv)
    try:
        with _open_output(cfg) as out:
            return COMMANDS[cfg.command](cfg, out)
    except BrokenPipeError:
        # the consumer stopped reading, e.g. `| head`; not an error here
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"cographgen: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
