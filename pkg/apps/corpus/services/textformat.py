"""
Plain-text formats for graphs and direction assignments.

Graph files::

    # comment
    n 3
    0 1 0
    0 1 1

The header gives the vertex count; each following line is one edge
`<tail> <head> <gain>`, in edge order. Direction files hold one line per
edge, `<index> <dx> <dy>`, with coordinates written as `num/den`.
"""
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from apps.corpus.exceptions import GraphParseError
from apps.directions.services.network import DirectionAssignment
from apps.gain_graphs.exceptions import InvalidGraphError
from apps.gain_graphs.graph import ColoredGraph, Edge


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if content:
            lines.append((number, content.split()))
    return lines


def _integer(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(line, f"{what} {token!r} is not an integer") from None


def parse_graph(text: str) -> ColoredGraph:
    """
    Parse a graph file.

    Raises:
        GraphParseError: on a malformed line, a vertex index out of range or
            a gain other than 0/1, with the 1-based line number.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError(1, "missing header 'n <count>'")
    number, tokens = lines[0]
    if len(tokens) != 2 or tokens[0] != 'n':
        raise GraphParseError(number, "expected header 'n <count>'")
    n = _integer(tokens[1], number, 'vertex count')
    if n < 0:
        raise GraphParseError(number, f"vertex count {n} is negative")

    edges = []
    for number, tokens in lines[1:]:
        if len(tokens) != 3:
            raise GraphParseError(number, f"expected '<tail> <head> <gain>', got {len(tokens)} fields")
        tail = _integer(tokens[0], number, 'tail')
        head = _integer(tokens[1], number, 'head')
        gain = _integer(tokens[2], number, 'gain')
        if gain not in (0, 1):
            raise GraphParseError(number, f"gain {gain} out of range (expected 0 or 1)")
        for vertex in (tail, head):
            if not 0 <= vertex < n:
                raise GraphParseError(number, f"vertex {vertex} out of range 0..{n - 1}")
        edges.append(Edge(tail, head, gain))
    try:
        return ColoredGraph(n, tuple(edges))
    except InvalidGraphError as exc:
        raise GraphParseError(number, str(exc)) from exc


def read_graph(path) -> ColoredGraph:
    return parse_graph(Path(path).read_text())


def emit_graph(g: ColoredGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{e.tail} {e.head} {int(e.gain)}" for e in g.edges)
    return '\n'.join(lines) + '\n'


def format_fraction(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _fraction(token: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphParseError(line, f"{token!r} is not a rational number") from None


def parse_directions(text: str, m: Optional[int] = None) -> DirectionAssignment:
    """
    Parse a directions file; every edge index 0..m-1 must appear exactly once.

    Without m the highest index read decides the edge count.
    """
    found = {}
    last_line = 1
    for number, tokens in _content_lines(text):
        last_line = number
        if len(tokens) != 3:
            raise GraphParseError(number, "expected '<edge> <dx> <dy>'")
        index = _integer(tokens[0], number, 'edge index')
        if index < 0 or (m is not None and index >= m):
            raise GraphParseError(number, f"edge index {index} out of range")
        if index in found:
            raise GraphParseError(number, f"edge {index} given twice")
        direction = (_fraction(tokens[1], number), _fraction(tokens[2], number))
        if direction == (0, 0):
            raise GraphParseError(number, f"edge {index} has the zero direction")
        found[index] = direction
    count = m if m is not None else len(found)
    missing = [i for i in range(count) if i not in found]
    if missing or len(found) != count:
        raise GraphParseError(last_line, f"no direction for edges {missing}")
    return tuple(found[i] for i in range(count))


def read_directions(path, m: Optional[int] = None) -> DirectionAssignment:
    return parse_directions(Path(path).read_text(), m)


def emit_directions(d: DirectionAssignment) -> str:
    return ''.join(
        f"{index} {format_fraction(dx)} {format_fraction(dy)}\n" for index, (dx, dy) in enumerate(d)
    )
