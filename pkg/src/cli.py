import argparse
import logging
import random
import sys
from typing import Callable, Optional

import formats
import render
from algorithms import catalogue, census
from algorithms.coloring import ListAssignment, degree_constrained_partition, is_Lxs_choosable, list_color, point_partition_number
from algorithms.data_structures.hypergraph import Hypergraph, sort_names
from algorithms.data_structures.vector_function import VectorFunction
from algorithms.degeneracy import degeneracy_order, is_strictly_degenerate
from algorithms.errors import HypergraphError, InputError, SizeGuardError
from algorithms.hardpair import is_hard, make_hard, random_plan, verify_certificate
from algorithms.hypercore import complete_uniform, cycle, path, random_hypergraph, t_fold
from algorithms.partition import Partition, enforce_degree_bounds, solve, verify_partition
from algorithms.structure import blocks, components
from utils import Style, configure_logging

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_HARD = 2


class CliParser(argparse.ArgumentParser):
    """Usage errors exit with 1, like every other failure."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAILED, f"{self.prog}: error: {message}\n")


# --- helpers ----------------------------------------------------------------


def read_text(name: str) -> str:
    if name == "-":
        return sys.stdin.read()
    with open(name, encoding="utf-8") as handle:
        return handle.read()


def load(name: str) -> formats.Instance:
    return formats.parse_instance(read_text(name))


def require_function(instance: formats.Instance) -> VectorFunction:
    if instance.function is None:
        raise InputError("this command needs f-values (header 'hg <p>' with p >= 1)")
    return instance.function


def require_lists(instance: formats.Instance) -> ListAssignment:
    if instance.lists is None:
        raise InputError("this command needs list lines (header 'hg 0')")
    return instance.lists


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def write(text: str) -> None:
    sys.stdout.write(text)


# --- commands ---------------------------------------------------------------


def cmd_blocks(args: argparse.Namespace) -> int:
    graph = load(args.instance).graph
    out = []
    for component in components(graph):
        tree = blocks(graph.induced(component))
        out.append("component " + " ".join(graph.induced(component).vertices))
        for i, block in enumerate(tree.blocks, start=1):
            out.append(f"block {i} " + " ".join(graph.induced(block).vertices))
        for v in sort_names(tree.cut_vertices):
            out.append(f"cut {v} " + " ".join(str(i + 1) for i in tree.blocks_containing(v)))
        out.append("end-blocks " + " ".join(str(i + 1) for i in tree.end_blocks()))
    write("\n".join(out) + "\n" if out else "")
    return EXIT_OK


def cmd_col(args: argparse.Namespace) -> int:
    graph = load(args.instance).graph
    order, value = degeneracy_order(graph)
    write(f"col {value}\nmax-degree {graph.max_degree()}\norder {' '.join(order)}\n")
    return EXIT_OK


def cmd_degenerate(args: argparse.Namespace) -> int:
    instance = load(args.instance)
    if args.h is not None:
        h = dict.fromkeys(instance.graph.vertices, args.h)
    else:
        h = require_function(instance).scalar(args.coord)
    witness = is_strictly_degenerate(instance.graph, h)
    if witness.is_degenerate:
        write("degenerate yes\norder " + " ".join(witness.removal_order) + "\n")
        return EXIT_OK
    write("degenerate no\ncore " + " ".join(instance.graph.induced(witness.core).vertices) + "\n")
    return EXIT_HARD


def cmd_is_hard(args: argparse.Namespace) -> int:
    instance = load(args.instance)
    f = require_function(instance)
    found = {}
    for component in components(instance.graph):
        sub = instance.graph.induced(component)
        certificate = is_hard(sub, f.restrict(sub.vertices))
        if certificate is not None:
            found[component] = certificate
    if found:
        write(formats.emit_certificates(found))
        return EXIT_HARD
    write("result not-hard\n")
    return EXIT_OK


def _report_hard(graph: Hypergraph, certificates, palette, html: Optional[str], s: int = 1) -> int:
    write(formats.emit_certificates(certificates, palette, s))
    if html:
        logger.info("certificate drawing saved at %s", render.certificate_html(graph, certificates, html))
    return EXIT_HARD


def _report_partition(graph: Hypergraph, partition: Partition, html: Optional[str]) -> int:
    write(formats.emit_partition(partition))
    if html:
        logger.info("partition drawing saved at %s", render.partition_html(graph, partition.assignment, html))
    return EXIT_OK


def cmd_partition(args: argparse.Namespace) -> int:
    instance = load(args.instance)
    result = solve(instance.graph, require_function(instance))
    if result.partition is None:
        return _report_hard(instance.graph, result.certificates, (), args.html)
    return _report_partition(instance.graph, result.partition, args.html)


def cmd_refine_degrees(args: argparse.Namespace) -> int:
    instance = load(args.instance)
    graph = instance.graph
    if args.k is not None:
        k = parse_vector(args.k)
        f = VectorFunction.constant(graph.vertices, k)
        partition = degree_constrained_partition(graph, k)
    else:
        f = require_function(instance)
        result = solve(graph, f)
        if result.partition is None:
            return _report_hard(graph, result.certificates, (), args.html)
        partition = enforce_degree_bounds(graph, f, result.partition)

    code = _report_partition(graph, partition, args.html)
    for i in range(1, f.p + 1):
        part = graph.induced(partition.members(i))
        write(f"# class {i}: max-degree {part.max_degree()} col {degeneracy_order(part)[1]}\n")
    return code


def cmd_list_color(args: argparse.Namespace) -> int:
    instance = load(args.instance)
    lists = require_lists(instance)
    if args.s == 1:
        result = list_color(instance.graph, lists, exhaustive=args.exhaustive)
    else:
        result = is_Lxs_choosable(instance.graph, lists, args.s, exhaustive=args.exhaustive)
    if result.coloring is not None:
        write(formats.emit_coloring(result.coloring, result.s))
        if args.html:
            render.partition_html(instance.graph, result.coloring.assignment, args.html)
        return EXIT_OK
    if not result.certificates:
        write("result uncolorable\n")
        return EXIT_HARD
    return _report_hard(instance.graph, result.certificates, result.palette, args.html, result.s)


def cmd_alpha(args: argparse.Namespace) -> int:
    graph = load(args.instance).graph
    result = point_partition_number(graph, args.s, args.convention)
    write(f"# alpha {result.value} (s={args.s}, {result.convention})\n")
    if result.partition is not None:
        write(formats.emit_partition(result.partition))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    f = None
    lists = None
    if args.kind == "complete-uniform":
        graph = complete_uniform(args.n, args.q)
    elif args.kind == "cycle":
        graph = cycle(args.n)
    elif args.kind == "path":
        graph = path(args.n)
    elif args.kind == "random":
        graph = random_hypergraph(
            args.n, args.m, args.max_arity, args.max_mult, seed=args.seed, connected=args.connected
        )
    elif args.kind == "hard":
        rng = random.Random(args.seed)
        graph, f = make_hard(random_plan(rng, args.max_blocks, args.p), seed=rng.randrange(2**32))
    elif args.kind == "block-chain":
        graph = catalogue.block_chain(args.n)
    else:
        made = catalogue.NAMED[args.kind]()
        graph, extra = made if isinstance(made, tuple) else (made, None)
        if isinstance(extra, VectorFunction):
            f = extra
        elif isinstance(extra, ListAssignment):
            lists = extra

    if args.t > 1:
        if f is not None:
            raise InputError("--t cannot be combined with a generated function")
        graph = t_fold(graph, args.t)
    if args.f is not None:
        f = VectorFunction.constant(graph.vertices, parse_vector(args.f))
        lists = None
    write(formats.emit_instance(graph, f, lists))
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    report = census.equivalence_sweep(args.max_n, (args.p,), args.samples, args.seed)
    for line in report.disagreements:
        logger.error("disagreement: %s", line)
    write(
        f"instances: {report.instances}\n"
        f"hard: {report.hard}\n"
        f"partitionable: {report.instances - report.hard}\n"
        f"disagreements: {len(report.disagreements)}\n"
        f"fallbacks: {report.fallbacks}\n"
    )
    return EXIT_OK if not report.disagreements else EXIT_FAILED


def cmd_census(args: argparse.Namespace) -> int:
    if args.kind == "hardpairs":
        report = census.equivalence_sweep(args.max_n or 5, (2, 3), args.samples, args.seed)
        write(f"{'n':>3} {'instances':>10} {'hard':>8} {'partitionable':>14}\n")
        for n in sorted(report.rows):
            row = report.rows[n]
            write(f"{n:>3} {row.instances:>10} {row.hard:>8} {row.partitionable:>14}\n")
        write(f"disagreements: {len(report.disagreements)}\nfallbacks: {report.fallbacks}\n")
        problems = report.disagreements
        if args.plot:
            render.plot_sweep(report, args.plot)
    elif args.kind == "closure":
        closure = census.closure_sweep(args.samples, seed=args.seed)
        write(f"plans: {closure.plans}\nfailures: {len(closure.failures)}\n")
        problems = closure.failures
    else:
        brooks = census.brooks_census(args.max_n or 7, seed=args.seed)
        write(f"{'n':>3} {'graphs':>8} {'extremal':>9}\n")
        for n in sorted(brooks.rows):
            row = brooks.rows[n]
            write(f"{n:>3} {row.graphs:>8} {row.extremal:>9}\n")
        write(f"hypergraphs: {brooks.hypergraphs}\nexceptions: {len(brooks.exceptions)}\n")
        problems = brooks.exceptions
        if args.plot:
            render.plot_brooks(brooks, args.plot)

    for line in problems:
        logger.error("%s", line)
    return EXIT_OK if not problems else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    instance = load(args.instance)
    result = formats.parse_result(read_text(args.result))
    graph = instance.graph

    if result.kind == "partition":
        f = require_function(instance)
        try:
            partition = Partition(result.partition.assignment, f.p)
        except InputError:
            partition = None
        ok = partition is not None and verify_partition(graph, f, partition)
    elif result.kind == "coloring":
        lists = instance.lists
        ok = result.coloring.classes_degenerate(graph, result.s) and (
            lists is None or result.coloring.respects(lists)
        )
    elif result.kind == "hard":
        f = instance.function
        if instance.lists is not None:
            f = _palette_function(graph, instance.lists, result.palette, result.s)
        if f is None:
            raise InputError("certificates need an instance with f-values or lists")
        ok = bool(result.certificates) and all(
            c <= graph.vertex_set and verify_certificate(graph.induced(c), f.restrict(c), cert)
            for c, cert in result.certificates.items()
        )
    else:
        raise InputError(f"result kind {result.kind!r} carries nothing to verify")

    write("valid\n" if ok else "invalid\n")
    return EXIT_OK if ok else EXIT_FAILED


def _palette_function(
    graph: Hypergraph, lists: ListAssignment, palette: tuple[str, ...], s: int = 1
) -> VectorFunction:
    palette = palette or lists.palette
    return VectorFunction({v: [s * int(c in lists[v]) for c in palette] for v in graph.vertices}, len(palette))


def _instance(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("instance", help="instance file, or - for stdin")


def _html(parser: argparse.ArgumentParser) -> None:
    _instance(parser)
    parser.add_argument("--html", metavar="PATH", help="also write an interactive HTML drawing")


def _degenerate_args(parser: argparse.ArgumentParser) -> None:
    _instance(parser)
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--coord", type=int, default=1, help="use f_i from the instance (default 1)")
    group.add_argument("--h", type=int, help="use the constant function h")


def _refine_args(parser: argparse.ArgumentParser) -> None:
    _html(parser)
    parser.add_argument("--k", help="comma-separated bounds k_1,...,k_p instead of the file's f")


def _list_args(parser: argparse.ArgumentParser) -> None:
    _html(parser)
    parser.add_argument("--s", type=int, default=1, help="classes must be strictly s-degenerate")
    parser.add_argument("--exhaustive", action="store_true", help="decide instances with s*|L(v)| < d(v) by search")


def _alpha_args(parser: argparse.ArgumentParser) -> None:
    _instance(parser)
    parser.add_argument("--s", type=int, required=True)
    parser.add_argument("--convention", choices=["strict", "lick-white"], default="strict")


def _gen_args(parser: argparse.ArgumentParser) -> None:
    kinds = ["complete-uniform", "cycle", "path", "random", "hard", *catalogue.NAMED]
    parser.add_argument("kind", choices=kinds)
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--m", type=int, default=6)
    parser.add_argument("--t", type=int, default=1, help="replace every edge by t parallel copies")
    parser.add_argument("--max-arity", type=int, default=3)
    parser.add_argument("--max-mult", type=int, default=1)
    parser.add_argument("--connected", action="store_true")
    parser.add_argument("--max-blocks", type=int, default=4)
    parser.add_argument("--p", type=int, default=2)
    parser.add_argument("--f", help="attach the constant vector f, e.g. 1,1")
    parser.add_argument("--seed", type=int, default=0)


def _oracle_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--p", type=int, default=2)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)


def _census_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=["hardpairs", "closure", "brooks"], default="hardpairs")
    parser.add_argument("--max-n", type=int)
    parser.add_argument("--samples", type=int, default=census.DEFAULT_SAMPLES)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--plot", metavar="PATH", help=f"save a PNG chart, e.g. {census.BASEPATH}/sweep.png")


def _verify_args(parser: argparse.ArgumentParser) -> None:
    _instance(parser)
    parser.add_argument("result", help="result file printed by another command")


# command_table:- command name -> (help text, argument setup, action)
command_table: dict[str, tuple[str, Callable[[argparse.ArgumentParser], None], Callable[[argparse.Namespace], int]]] = {
    "blocks": ("blocks, separating vertices and end-blocks of every component", _instance, cmd_blocks),
    "col": ("coloring number and a min-degree removal order", _instance, cmd_col),
    "degenerate": ("strict degeneracy test with an order or a stuck core", _degenerate_args, cmd_degenerate),
    "is-hard": ("recognise hard pairs and print certificates", _instance, cmd_is_hard),
    "partition": ("f-partition or hard-pair certificates", _html, cmd_partition),
    "refine-degrees": ("f-partition with d_{H_i}(v) <= f_i(v)", _refine_args, cmd_refine_degrees),
    "list-color": ("list coloring from the instance's lists", _list_args, cmd_list_color),
    "alpha": ("point-partition number", _alpha_args, cmd_alpha),
    "gen": ("print a generated or named instance", _gen_args, cmd_gen),
    "oracle-check": ("compare hard-pair recognition with brute force", _oracle_args, cmd_oracle_check),
    "census": ("run a seeded sweep and print a table", _census_args, cmd_census),
    "verify": ("re-check a printed partition, coloring or certificate", _verify_args, cmd_verify),
}


def build_parser() -> CliParser:
    parser = CliParser(prog="hypergraph-partitions", description="Strictly degenerate partitions of hypergraphs")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--format", default="text", choices=["text"])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)
    for name, (help_text, setup, action) in command_table.items():
        command_parser = sub.add_parser(name, help=help_text, description=help_text)
        setup(command_parser)
        command_parser.set_defaults(handler=action)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)
    configure_logging(args.log_level)

    try:
        return args.handler(args)
    except SizeGuardError as err:
        logger.error("%s", err)
        return EXIT_FAILED
    except (HypergraphError, OSError) as err:
        print(f"{Style.RED}error:{Style.RESET} {err}", file=sys.stderr)
        return EXIT_FAILED
    except KeyboardInterrupt:
        print("\n\nInterrupted. Goodbye!", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
