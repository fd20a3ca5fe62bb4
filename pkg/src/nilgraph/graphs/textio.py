"""Plain-text formats.

Graph::

    n
    i j        (one edge per line, 1-based, i < j after normalisation)

DiMultigraph::

    n_elem n_triple
    src dst mult   (vertices named e<k> or t<k>, 1-based)

Blank lines and lines starting with ``#`` are ignored on input.
"""

from __future__ import annotations

from .core import DiMultigraph, Graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def read_graph(text: str) -> Graph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input: expected vertex count", 1) from None
    tokens = header.split()
    if len(tokens) != 1:
        raise ParseError("header must be a single vertex count", lineno)
    n = _int(tokens[0], lineno)
    if n < 0:
        raise ParseError("vertex count must be nonnegative", lineno)
    edges = set()
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'i j', got {line!r}", lineno)
        i, j = (_int(t, lineno) for t in tokens)
        if i == j:
            raise ParseError(f"loop at vertex {i}", lineno)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex out of range 1..{n}", lineno)
        key = (min(i, j) - 1, max(i, j) - 1)
        if key in edges:
            raise ParseError(f"duplicate edge {min(i, j)} {max(i, j)}", lineno)
        edges.add(key)
    return Graph(n, frozenset(edges))


def write_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i + 1} {j + 1}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def _vertex(token: str, n_elem: int, n_triple: int, lineno: int) -> int:
    if len(token) < 2 or token[0] not in "et":
        raise ParseError(f"vertex must be e<k> or t<k>, got {token!r}", lineno)
    k = _int(token[1:], lineno)
    limit = n_elem if token[0] == "e" else n_triple
    if not 1 <= k <= limit:
        raise ParseError(f"vertex {token} out of range", lineno)
    return k - 1 if token[0] == "e" else n_elem + k - 1


def read_multigraph(text: str) -> DiMultigraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input: expected 'n_elem n_triple'", 1) from None
    tokens = header.split()
    if len(tokens) != 2:
        raise ParseError("header must be 'n_elem n_triple'", lineno)
    n_elem, n_triple = (_int(t, lineno) for t in tokens)
    if n_elem < 0 or n_triple < 0:
        raise ParseError("vertex counts must be nonnegative", lineno)
    arcs = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 'src dst mult', got {line!r}", lineno)
        u = _vertex(tokens[0], n_elem, n_triple, lineno)
        v = _vertex(tokens[1], n_elem, n_triple, lineno)
        k = _int(tokens[2], lineno)
        if k < 1:
            raise ParseError("multiplicity must be >= 1", lineno)
        arcs.append((u, v, k))
    return DiMultigraph.from_arc_list(n_elem, n_triple, arcs)


def write_multigraph(m: DiMultigraph) -> str:
    lines = [f"{m.n_elem} {m.n_triple}"]
    lines += [f"{m.name(u)} {m.name(v)} {k}" for (u, v), k in m.arcs.items()]
    return "\n".join(lines) + "\n"
