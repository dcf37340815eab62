"""Linear decompositions (vertex orderings) and their two-line file
format:

    width <decimal, 2 places>
    <vertex labels, space separated, left to right>

verify-style helpers resolve a label sequence against a graph and
report what is missing or duplicated.
"""

from __future__ import annotations

import csv

from .cuts import CutStats, width_of_ordering
from .errors import ParseError


class LinearDecomposition:
    """A vertex ordering together with per-prefix cut statistics."""

    __slots__ = ("order", "per_prefix", "width")

    def __init__(self, order, per_prefix, width):
        self.order = list(order)
        self.per_prefix = list(per_prefix)
        self.width = width

    @classmethod
    def measure(cls, g, order) -> "LinearDecomposition":
        width, stats = width_of_ordering(g, order)
        return cls(order, stats, width)

    @property
    def max_un(self) -> int:
        """Largest raw |UN| over the proper prefix cuts (1 if none)."""
        return max((s.un_count for s in self.per_prefix), default=1)

    def __repr__(self):
        return f"LinearDecomposition(width={self.width:.2f}, n={len(self.order)})"


def format_decomposition(g, dec: LinearDecomposition) -> str:
    labels = " ".join(g.labels[v] for v in dec.order)
    return f"width {dec.width:.2f}\n{labels}\n"


def write_decomposition(path, g, dec: LinearDecomposition) -> None:
    with open(path, "w") as fh:
        fh.write(format_decomposition(g, dec))


def read_decomposition(source) -> tuple[float, list[str]]:
    """Returns (declared width, label sequence)."""
    if hasattr(source, "read"):
        source = source.read()
    lines = [ln for ln in source.splitlines()]
    if not lines or not lines[0].startswith("width "):
        raise ParseError("first line must be 'width <decimal>'", 1)
    try:
        width = float(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError("unreadable width value", 1) from None
    if len(lines) < 2:
        raise ParseError("missing ordering line", 2)
    return width, lines[1].split()


def resolve_order(g, labels) -> list[int]:
    """Label sequence -> vertex indices; diagnoses unknown, duplicate
    and missing names."""
    known = {lab: v for v, lab in enumerate(g.labels)}
    order = []
    seen = set()
    for lab in labels:
        if lab not in known:
            raise ValueError(f"unknown vertex name {lab!r}")
        if lab in seen:
            raise ValueError(f"duplicate vertex name {lab!r}")
        seen.add(lab)
        order.append(known[lab])
    if len(order) != g.n:
        missing = [lab for lab in g.labels if lab not in seen]
        raise ValueError(f"ordering omits vertices: {' '.join(sorted(missing))}")
    return order


def write_cuts_csv(fh, dec: LinearDecomposition) -> None:
    """Per-cut CSV: prefix index (1-based), |UN|, booldim, twin-class
    counts of both sides."""
    w = csv.writer(fh)
    w.writerow(["prefix", "un_count", "booldim", "ntc_left", "ntc_right"])
    for i, s in enumerate(dec.per_prefix, start=1):
        w.writerow([i, s.un_count, f"{s.booldim:.4f}", s.ntc_left, s.ntc_right])
