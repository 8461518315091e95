"""Line-oriented text formats for instances and results.

Instance files:

    hg <p>
    v <name> <f_1> ... <f_p>
    e <name> <v_1> ... <v_k>
    l <name> <color> ...        (list instances use `hg 0`)
    # comment

Results start with `result partition`, `result coloring`, `result hard`,
`result not-hard` or `result uncolorable`. List results with s > 1 carry an
`s <n>` line; list certificates also carry `palette <color> ...`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from algorithms.coloring import Coloring, ListAssignment
from algorithms.data_structures.hypergraph import Hypergraph, sort_names
from algorithms.data_structures.vector_function import VectorFunction
from algorithms.errors import InputError, ParseError
from algorithms.hardpair import BlockCertificate, CompleteTag, CycleTag, HardPairCertificate, MonoTag
from algorithms.partition import Partition


@dataclass(frozen=True)
class Instance:
    graph: Hypergraph
    p: int
    function: Optional[VectorFunction] = None
    lists: Optional[ListAssignment] = None


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content.split()


def _int(token: str, number: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(number, f"{what} {token!r} is not an integer") from None
    if value < 0:
        raise ParseError(number, f"{what} {token!r} is negative")
    return value


def parse_instance(text: str) -> Instance:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "hg" or len(lines[0][1]) != 2:
        raise ParseError(lines[0][0] if lines else 1, "expected header 'hg <p>'")
    header_line, header = lines[0]
    p = _int(header[1], header_line, "p")

    values: dict[str, list[int]] = {}
    vertex_lines: dict[str, int] = {}
    edges: list[tuple[str, list[str], int]] = []
    edge_names: set[str] = set()
    lists: dict[str, list[str]] = {}
    list_lines: dict[str, int] = {}

    for number, tokens in lines[1:]:
        kind, rest = tokens[0], tokens[1:]
        if kind == "v":
            if not rest:
                raise ParseError(number, "vertex line without a name")
            name, raw = rest[0], rest[1:]
            if name in vertex_lines:
                raise ParseError(number, f"duplicate vertex {name!r}")
            if len(raw) != p:
                raise ParseError(number, f"vertex {name!r} has {len(raw)} values, expected {p}")
            vertex_lines[name] = number
            values[name] = [_int(x, number, "value") for x in raw]
        elif kind == "e":
            if not rest:
                raise ParseError(number, "edge line without a name")
            name, members = rest[0], rest[1:]
            if name in edge_names:
                raise ParseError(number, f"duplicate edge {name!r}")
            if len(set(members)) != len(members):
                raise ParseError(number, f"edge {name!r} is a loop (repeated vertex)")
            if len(members) < 2:
                raise ParseError(number, f"edge {name!r} has arity {len(members)} < 2")
            edge_names.add(name)
            edges.append((name, members, number))
        elif kind == "l":
            if p != 0:
                raise ParseError(number, "list lines need header 'hg 0'; f-values and lists are never mixed")
            if not rest:
                raise ParseError(number, "list line without a vertex")
            name = rest[0]
            if name in lists:
                raise ParseError(number, f"duplicate list for {name!r}")
            lists[name] = rest[1:]
            list_lines[name] = number
        elif kind == "hg":
            raise ParseError(number, "repeated header")
        else:
            raise ParseError(number, f"unknown line type {kind!r}")

    for name, members, number in edges:
        unknown = [v for v in members if v not in vertex_lines]
        if unknown:
            raise ParseError(number, f"edge {name!r} uses undeclared vertex {unknown[0]!r}")
    for name in lists:
        if name not in vertex_lines:
            raise ParseError(list_lines[name], f"list for undeclared vertex {name!r}")
    if lists:
        missing = [v for v in sort_names(vertex_lines) if v not in lists]
        if missing:
            raise ParseError(vertex_lines[missing[0]], f"vertex {missing[0]!r} has no list")

    graph = Hypergraph(vertex_lines, [(name, members) for name, members, _ in edges])
    if p >= 1:
        return Instance(graph, p, function=VectorFunction(values, p) if values else VectorFunction({}, p))
    return Instance(graph, 0, lists=ListAssignment.of(lists) if lists else None)


def emit_instance(
    graph: Hypergraph, function: Optional[VectorFunction] = None, lists: Optional[ListAssignment] = None
) -> str:
    if function is not None and lists is not None:
        raise InputError("an instance carries f-values or lists, never both")
    p = function.p if function is not None else 0
    out = [f"hg {p}"]
    for v in graph.vertices:
        out.append(" ".join(["v", v, *(str(x) for x in function[v])]) if function is not None else f"v {v}")
    for e in graph.edges:
        out.append(" ".join(["e", e.name, *sort_names(e.members)]))
    if lists is not None:
        for v in graph.vertices:
            out.append(" ".join(["l", v, *sort_names(lists[v])]))
    return "\n".join(out) + "\n"


# --- results ----------------------------------------------------------------


def _tag_line(tag) -> str:
    if isinstance(tag, MonoTag):
        return f"type M j={tag.j}"
    if isinstance(tag, CompleteTag):
        return f"type K t={tag.t} n={tag.n} counts " + " ".join(map(str, tag.counts))
    return f"type C t={tag.t} n={tag.n} coords {tag.k} {tag.l}"


def emit_partition(partition: Partition) -> str:
    lines = ["result partition"] + [f"c {v} {i}" for v, i in partition.assignment.items()]
    return "\n".join(lines) + "\n"


def emit_coloring(coloring: Coloring, s: int = 1) -> str:
    lines = ["result coloring"] + ([f"s {s}"] if s != 1 else [])
    lines += [f"c {v} {coloring.assignment[v]}" for v in sort_names(coloring.assignment)]
    return "\n".join(lines) + "\n"


def emit_certificates(
    certificates: Mapping[frozenset[str], HardPairCertificate], palette: tuple[str, ...] = (), s: int = 1
) -> str:
    lines = ["result hard"]
    if palette:
        lines.append("palette " + " ".join(palette))
    if s != 1:
        # list certificates scale every color coordinate by s
        lines.append(f"s {s}")
    for component in sorted(certificates, key=lambda c: sort_names(c)[0]):
        lines.append("component " + " ".join(sort_names(component)))
        for entry in certificates[component]:
            lines.append("block " + " ".join(sort_names(entry.vertices)))
            lines.append(_tag_line(entry.tag))
            for v in sort_names(entry.vertices):
                lines.append(" ".join(["fb", v, *(str(x) for x in entry.function[v])]))
    return "\n".join(lines) + "\n"


@dataclass
class ParsedResult:
    kind: str
    partition: Optional[Partition] = None
    coloring: Optional[Coloring] = None
    certificates: dict[frozenset[str], HardPairCertificate] = field(default_factory=dict)
    palette: tuple[str, ...] = ()
    s: int = 1


def _key_values(tokens: list[str], number: int) -> dict[str, int]:
    found = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(number, f"expected key=value, got {token!r}")
        found[key] = _int(value, number, key)
    return found


def _parse_s(tokens: list[str], number: int) -> int:
    if len(tokens) != 2:
        raise ParseError(number, "expected 's <positive int>'")
    s = _int(tokens[1], number, "s")
    if s == 0:
        raise ParseError(number, "s must be positive")
    return s


def _parse_tag(tokens: list[str], number: int):
    kind = tokens[0] if tokens else ""
    try:
        if kind == "M":
            return MonoTag(_key_values(tokens[1:], number)["j"])
        if kind == "K":
            split = tokens.index("counts")
            fields = _key_values(tokens[1:split], number)
            return CompleteTag(fields["t"], tuple(_int(x, number, "count") for x in tokens[split + 1 :]))
        if kind == "C":
            split = tokens.index("coords")
            fields = _key_values(tokens[1:split], number)
            k, l = (_int(x, number, "coordinate") for x in tokens[split + 1 :])  # noqa: E741
            return CycleTag(fields["t"], fields["n"], k, l)
    except (KeyError, ValueError):
        raise ParseError(number, f"malformed type line for {kind!r}") from None
    raise ParseError(number, f"unknown block type {kind!r}")


def parse_result(text: str) -> ParsedResult:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "result" or len(lines[0][1]) != 2:
        raise ParseError(lines[0][0] if lines else 1, "expected 'result <kind>'")
    kind = lines[0][1][1]
    body = lines[1:]

    if kind in ("partition", "coloring"):
        assignment: dict[str, str] = {}
        classes: dict[str, int] = {}
        s = 1
        for number, tokens in body:
            if kind == "coloring" and tokens[0] == "s":
                s = _parse_s(tokens, number)
                continue
            if tokens[0] != "c" or len(tokens) != 3:
                raise ParseError(number, "expected 'c <vertex> <class>'")
            if tokens[1] in assignment:
                raise ParseError(number, f"vertex {tokens[1]!r} assigned twice")
            assignment[tokens[1]] = tokens[2]
            if kind == "partition":
                classes[tokens[1]] = _int(tokens[2], number, "class")
                if classes[tokens[1]] == 0:
                    raise ParseError(number, "class indices start at 1")
        if kind == "coloring":
            return ParsedResult(kind, coloring=Coloring(assignment), s=s)
        # the number of classes is not recorded; callers re-read it from f
        return ParsedResult(kind, partition=Partition(classes, max(classes.values(), default=1)))

    if kind in ("uncolorable", "not-hard"):
        return ParsedResult(kind)

    if kind != "hard":
        raise ParseError(lines[0][0], f"unknown result kind {kind!r}")

    result = ParsedResult(kind)
    component: Optional[frozenset[str]] = None
    entries: list[BlockCertificate] = []
    block: Optional[frozenset[str]] = None
    tag = None
    fb: dict[str, list[int]] = {}

    def close_block(number: int) -> None:
        nonlocal block, tag, fb
        if block is None:
            return
        if tag is None or set(fb) != block:
            raise ParseError(number, "block needs one type line and one fb line per vertex")
        entries.append(BlockCertificate(block, tag, VectorFunction(fb)))
        block, tag, fb = None, None, {}

    def close_component(number: int) -> None:
        nonlocal component, entries
        close_block(number)
        if component is not None:
            p = entries[0].function.p if entries else 1
            result.certificates[component] = HardPairCertificate(tuple(entries), p)
        component, entries = None, []

    last = lines[-1][0]
    for number, tokens in body:
        head = tokens[0]
        if head == "palette":
            result.palette = tuple(tokens[1:])
        elif head == "s":
            result.s = _parse_s(tokens, number)
        elif head == "component":
            close_component(number)
            component = frozenset(tokens[1:])
        elif head == "block":
            if component is None:
                raise ParseError(number, "block outside a component")
            close_block(number)
            block = frozenset(tokens[1:])
        elif head == "type":
            if block is None:
                raise ParseError(number, "type line outside a block")
            tag = _parse_tag(tokens[1:], number)
        elif head == "fb":
            if block is None or len(tokens) < 3:
                raise ParseError(number, "fb line outside a block")
            fb[tokens[1]] = [_int(x, number, "value") for x in tokens[2:]]
        else:
            raise ParseError(number, f"unexpected line {head!r} in a certificate")
    try:
        close_component(last)
    except InputError as err:
        raise ParseError(last, str(err)) from None
    return result
