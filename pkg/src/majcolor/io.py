"""Line-oriented text formats for instances and colorings.

Instance records, one per line, ``#`` starting a comment::

    n <count>                 first record, exactly once
    e <u> <v>                 directed edge u -> v
    u <a> <b>                 undirected edge (not mixable with ``e``)
    l <v> <c1> <c2> ...       color list of v
    r <v> <c> <p>/<q> | <k>   rank of color c at v

A coloring is one ``<v> <color>`` line per vertex in ascending order.
"""

from .exceptions import InstanceFormatError
from .graph import Digraph, UndirectedGraph
from .instance import ListInstance, RankedInstance
from .rational import format_rational, parse_rational


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"expected an integer, got {token!r}", lineno) from None


def _vertex(token, n, lineno):
    v = _int(token, lineno)
    if not 0 <= v < n:
        raise InstanceFormatError(f"vertex id {v} out of range for n={n}", lineno)
    return v


def _records(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if line:
            yield lineno, line


def parse_instance(text):
    """Parse instance text.

    Returns a :class:`Digraph` or :class:`UndirectedGraph` when there are no
    list lines, a :class:`ListInstance` when lists are present without ranks,
    and a :class:`RankedInstance` when ranks are present.
    """
    n = None
    kind = None
    edges = []
    seen_edges = set()
    lists = {}
    ranks = {}
    for lineno, rec in _records(text):
        tag, args = rec[0], rec[1:]
        if n is None:
            if tag != "n":
                raise InstanceFormatError("first record must be 'n <count>'", lineno)
            if len(args) != 1:
                raise InstanceFormatError("'n' takes exactly one argument", lineno)
            n = _int(args[0], lineno)
            if n < 0:
                raise InstanceFormatError("vertex count must be non-negative", lineno)
            continue
        if tag == "n":
            raise InstanceFormatError("repeated 'n' record", lineno)
        if tag in ("e", "u"):
            if len(args) != 2:
                raise InstanceFormatError(f"'{tag}' takes two vertex ids", lineno)
            if kind is not None and kind != tag:
                raise InstanceFormatError("cannot mix directed and undirected edges", lineno)
            kind = tag
            a, b = _vertex(args[0], n, lineno), _vertex(args[1], n, lineno)
            if a == b:
                raise InstanceFormatError(f"self-loop at vertex {a}", lineno)
            key = (a, b) if tag == "e" or a < b else (b, a)
            if key in seen_edges:
                raise InstanceFormatError(f"duplicate edge {a} {b}", lineno)
            seen_edges.add(key)
            edges.append((a, b))
        elif tag == "l":
            if len(args) < 2:
                raise InstanceFormatError("'l' needs a vertex and at least one color", lineno)
            v = _vertex(args[0], n, lineno)
            if v in lists:
                raise InstanceFormatError(f"second color list for vertex {v}", lineno)
            colors = [_int(c, lineno) for c in args[1:]]
            if any(c < 0 for c in colors):
                raise InstanceFormatError("color ids must be non-negative", lineno)
            if len(set(colors)) != len(colors):
                raise InstanceFormatError(f"repeated color in list of vertex {v}", lineno)
            lists[v] = colors
        elif tag == "r":
            if len(args) != 3:
                raise InstanceFormatError("'r' takes a vertex, a color and a rank", lineno)
            v = _vertex(args[0], n, lineno)
            c = _int(args[1], lineno)
            if c not in lists.get(v, ()):
                raise InstanceFormatError(f"rank for color {c} not in the list of vertex {v}", lineno)
            if (v, c) in ranks:
                raise InstanceFormatError(f"second rank for color {c} at vertex {v}", lineno)
            try:
                ranks[v, c] = parse_rational(args[2])
            except ValueError as exc:
                raise InstanceFormatError(str(exc), lineno) from None
        else:
            raise InstanceFormatError(f"unknown record type {tag!r}", lineno)
    if n is None:
        raise InstanceFormatError("missing 'n' record")

    graph = UndirectedGraph(n, edges) if kind == "u" else Digraph(n, edges)
    if not lists:
        return graph
    missing = [v for v in range(n) if v not in lists]
    if missing:
        raise InstanceFormatError(f"vertex {missing[0]} has no color list")
    ordered = [lists[v] for v in range(n)]
    if not ranks:
        return ListInstance(graph, ordered)
    rows = []
    for v, colors in enumerate(ordered):
        row = []
        for c in colors:
            if (v, c) not in ranks:
                raise InstanceFormatError(f"vertex {v}: no rank for color {c}")
            row.append(ranks[v, c])
        rows.append(row)
    return RankedInstance(graph, ordered, rows)


def format_instance(obj):
    """Serialize a graph, ListInstance or RankedInstance to instance text."""
    graph = obj if isinstance(obj, (Digraph, UndirectedGraph)) else obj.graph
    tag = "u" if isinstance(graph, UndirectedGraph) else "e"
    lines = [f"n {graph.n}"]
    lines.extend(f"{tag} {a} {b}" for a, b in graph.edge_list())
    lists = getattr(obj, "lists", None)
    if lists is not None:
        for v, colors in enumerate(lists):
            lines.append(f"l {v} " + " ".join(map(str, colors)))
    ranks = getattr(obj, "ranks", None)
    if ranks is not None:
        for v, (colors, row) in enumerate(zip(lists, ranks)):
            lines.extend(f"r {v} {c} {format_rational(r)}" for c, r in zip(colors, row))
    return "\n".join(lines) + "\n"


def format_coloring(coloring):
    return "".join(f"{v} {c}\n" for v, c in enumerate(coloring))


def parse_coloring(text, n=None):
    """Parse ``<v> <color>`` lines into a list indexed by vertex."""
    assigned = {}
    for lineno, rec in _records(text):
        if len(rec) != 2:
            raise InstanceFormatError("coloring lines are '<vertex> <color>'", lineno)
        v, c = _int(rec[0], lineno), _int(rec[1], lineno)
        if v < 0 or c < 0:
            raise InstanceFormatError("vertex and color ids must be non-negative", lineno)
        if v in assigned:
            raise InstanceFormatError(f"vertex {v} colored twice", lineno)
        assigned[v] = c
    size = n if n is not None else len(assigned)
    if set(assigned) != set(range(size)):
        raise InstanceFormatError(f"coloring must cover exactly the vertices 0..{size - 1}")
    return [assigned[v] for v in range(size)]
