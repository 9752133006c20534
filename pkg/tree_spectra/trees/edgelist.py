"""Edge-list text format: one ``u v`` pair per line, ``#`` comments."""

from pathlib import Path

from tree_spectra.errors import EdgeListParseError
from tree_spectra.trees.tree import Edge, Tree, from_edge_list


def parse_edge_list(text: str) -> list[Edge]:
    """Parse edge-list text into integer pairs.

    Parameters
    ----------
    text : str
        File contents. Everything after ``#`` on a line is ignored, as are
        blank lines.

    Returns
    -------
    list of (int, int)
        Edges in file order.

    Raises
    ------
    EdgeListParseError
        If a line does not hold exactly two non-negative decimal ids.

    """
    edges = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        fields = content.split()
        if len(fields) != 2:
            raise EdgeListParseError(line_number, f"expected 'u v', got {content!r}")
        try:
            u, v = (int(field, 10) for field in fields)
        except ValueError:
            raise EdgeListParseError(line_number, f"vertex ids must be integers, got {content!r}")
        if u < 0 or v < 0:
            raise EdgeListParseError(line_number, f"vertex ids must be non-negative, got {content!r}")
        edges.append((u, v))
    return edges


def read_tree(path: str | Path) -> Tree:
    """Read and validate a tree from a UTF-8 edge-list file.

    Raises
    ------
    EdgeListParseError
        If a line is malformed or the file is not valid UTF-8; undecodable
        bytes are reported at their line.

    """
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_number = data.count(b"\n", 0, e.start) + 1
        raise EdgeListParseError(line_number, f"not valid UTF-8 (byte 0x{data[e.start]:02x})") from e
    return from_edge_list(parse_edge_list(text))


def format_edge_list(t: Tree) -> str:
    """Render ``t`` in the edge-list format, one sorted edge per line."""
    return "".join(f"{u} {v}\n" for u, v in t.edges)
