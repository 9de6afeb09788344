"""Graph and multigraph representations, text formats, and canonical forms.

Vertices are dense 0-indexed integers.  Both graph kinds are immutable after
construction; adjacency is kept as one Python-int bitmask per vertex (works
for any n, fast path for the counting loops) alongside sorted neighbor lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import CapacityError, DomainError, GraphParseError

CANONICAL_MAX_N = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free undirected graph: n labeled vertices, set of (u, v) pairs u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise DomainError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        """Build from any iterable of (u, v) pairs; orientation is normalized."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u} not allowed")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            lists[u].append(v)
            lists[v].append(u)
        return tuple(tuple(sorted(l)) for l in lists)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        if u == v:
            raise DomainError("loop not allowed")
        e = (min(u, v), max(u, v))
        return SimpleGraph(max(self.n, e[1] + 1), self.edges | {e})

    def without_vertex(self, u: int) -> "SimpleGraph":
        """Drop all edges at u, keeping labels (u stays as an isolated vertex)."""
        return SimpleGraph(self.n, frozenset(e for e in self.edges if u not in e))


class Multigraph:
    """Loop-free undirected multigraph: per-pair edge multiplicities >= 1.

    Immutable by convention; mult maps (u, v) with u < v to its multiplicity.
    """

    __slots__ = ("n", "mult", "__dict__")

    def __init__(self, n: int, mult: dict[tuple[int, int], int]):
        if n < 0:
            raise DomainError("vertex count must be non-negative")
        clean: dict[tuple[int, int], int] = {}
        for (u, v), k in mult.items():
            if u == v:
                raise DomainError(f"loop at vertex {u} not allowed")
            if u > v:
                u, v = v, u
            if not (0 <= u < v < n):
                raise DomainError(f"pair ({u},{v}) out of range for n={n}")
            if k < 1:
                raise DomainError(f"multiplicity {k} < 1 for pair ({u},{v})")
            clean[(u, v)] = clean.get((u, v), 0) + k
        self.n = n
        self.mult = clean

    @property
    def m(self) -> int:
        return sum(self.mult.values())

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.mult:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for (u, v), k in self.mult.items():
            degs[u] += k
            degs[v] += k
        return tuple(degs)

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get((min(u, v), max(u, v)), 0)

    def underlying(self) -> SimpleGraph:
        return SimpleGraph(self.n, frozenset(self.mult))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Multigraph)
                and self.n == other.n and self.mult == other.mult)

    def __hash__(self):
        return hash((self.n, frozenset(self.mult.items())))

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m}, pairs={len(self.mult)})"


@dataclass(frozen=True)
class DegreeStats:
    delta_max: int
    delta_min: int
    avg: Fraction


def degree_stats(g: SimpleGraph | Multigraph) -> DegreeStats:
    """Max/min/average degree; multiplicities count toward multigraph degrees."""
    if g.n == 0:
        raise DomainError("degree statistics undefined for the empty vertex set")
    degs = g.degrees
    return DegreeStats(max(degs), min(degs), Fraction(2 * g.m, g.n))


def component_count(g: SimpleGraph | Multigraph) -> int:
    """Number of connected components; isolated vertices each count as one."""
    adj = g.adj
    seen = 0
    k = 0
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        k += 1
        seen |= 1 << s
        stack = [s]
        while stack:
            v = stack.pop()
            new = adj[v] & ~seen
            while new:
                wb = new & -new
                seen |= wb
                stack.append(wb.bit_length() - 1)
                new &= new - 1
    return k


def is_connected(g: SimpleGraph | Multigraph) -> bool:
    return g.n <= 1 or component_count(g) == 1


# ---------------------------------------------------------------------------
# graph6 codec (standard format: 6-bit groups offset by 63, upper triangle
# column by column, MSB first)

_G6_HEADER = ">>graph6<<"


def _g6_read_n(data: bytes) -> tuple[int, int]:
    """Return (n, index of first bit byte)."""
    if not data:
        raise GraphParseError("empty graph6 input", offset=0)
    c = data[0]
    if c == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise GraphParseError("truncated 36-bit vertex count", offset=len(data))
            n = 0
            for i in range(2, 8):
                n = (n << 6) | _g6_val(data, i)
            return n, 8
        if len(data) < 4:
            raise GraphParseError("truncated 18-bit vertex count", offset=len(data))
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _g6_val(data, i)
        return n, 4
    return _g6_val(data, 0), 1


def _g6_val(data: bytes, i: int) -> int:
    c = data[i]
    if not (63 <= c <= 126):
        raise GraphParseError(f"character {c!r} outside graph6 range 63..126",
                              offset=i)
    return c - 63


def parse_graph6(text: str) -> SimpleGraph:
    """Decode one graph6-encoded graph (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphParseError("non-ASCII byte in graph6 input",
                              offset=exc.start) from None
    n, pos = _g6_read_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphParseError(
            f"need {nbytes} edge bytes for n={n}, found {len(data) - pos}",
            offset=len(data))
    if len(data) - pos > nbytes:
        raise GraphParseError("trailing bytes after graph6 payload",
                              offset=pos + nbytes)
    edges = set()
    bit = 0
    for i in range(nbytes):
        group = _g6_val(data, pos + i)
        for j in range(5, -1, -1):
            if bit >= nbits:
                if (group >> j) & 1:
                    raise GraphParseError("nonzero padding bit", offset=pos + i)
                continue
            if (group >> j) & 1:
                edges.add(_g6_bit_to_pair(bit))
            bit += 1
    return SimpleGraph(n, frozenset(edges))


def _g6_bit_to_pair(bit: int) -> tuple[int, int]:
    # bits run (0,1), (0,2), (1,2), (0,3), ... : column v holds v bits
    v = 1
    while v * (v - 1) // 2 + v <= bit:
        v += 1
    u = bit - v * (v - 1) // 2
    return (u, v)


def write_graph6(g: SimpleGraph) -> str:
    """Encode as standard graph6 (no header)."""
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise CapacityError(f"n={n} beyond supported graph6 range")
    bits = []
    adj = g.adj
    for v in range(1, n):
        col = adj[v]
        for u in range(v):
            bits.append((col >> u) & 1)
    out = bytearray(head)
    for i in range(0, len(bits), 6):
        group = 0
        for j in range(6):
            group <<= 1
            if i + j < len(bits):
                group |= bits[i + j]
        out.append(group + 63)
    return out.decode("ascii")


# ---------------------------------------------------------------------------
# MULTI text format: header "MULTI <n>", then "<u> <v> <mult>" lines;
# '#' starts a comment line.

def parse_multigraph(text: str) -> Multigraph:
    lines = text.splitlines()
    header = None
    header_no = 0
    body: list[tuple[int, str]] = []
    for i, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_no = i
        else:
            body.append((i, line))
    if header is None:
        raise GraphParseError("missing MULTI header", line=1)
    parts = header.split()
    if len(parts) != 2 or parts[0] != "MULTI":
        raise GraphParseError("header must be 'MULTI <n>'", line=header_no)
    try:
        n = int(parts[1])
    except ValueError:
        raise GraphParseError(f"bad vertex count {parts[1]!r}", line=header_no) from None
    if n < 0:
        raise GraphParseError("vertex count must be non-negative", line=header_no)
    mult: dict[tuple[int, int], int] = {}
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 3:
            raise GraphParseError("expected '<u> <v> <mult>'", line=lineno)
        try:
            u, v, k = (int(f) for f in fields)
        except ValueError:
            raise GraphParseError(f"non-integer field in {line!r}", line=lineno) from None
        if u == v:
            raise GraphParseError(f"loop at vertex {u} not allowed", line=lineno)
        if not (0 <= u < v < n):
            raise GraphParseError(
                f"pair ({u},{v}) must satisfy 0 <= u < v < {n}", line=lineno)
        if k < 1:
            raise GraphParseError(f"multiplicity {k} < 1", line=lineno)
        if (u, v) in mult:
            raise GraphParseError(f"duplicate pair ({u},{v})", line=lineno)
        mult[(u, v)] = k
    return Multigraph(n, mult)


def write_multigraph(g: Multigraph) -> str:
    out = [f"MULTI {g.n}"]
    for (u, v), k in sorted(g.mult.items()):
        out.append(f"{u} {v} {k}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Canonical form: lexicographically minimal graph6 encoding over relabelings.

def canonical_form(g: SimpleGraph, max_n: int = CANONICAL_MAX_N) -> bytes:
    """Isomorphism-invariant byte string (equal bytes iff isomorphic graphs).

    Minimizes the column-major upper-triangle bitstring over all vertex
    orderings compatible with a degree-based vertex invariant, by prefix
    branch-and-bound.  Interchangeable twin vertices are collapsed at each
    branch point.  Intended for small graphs; guarded by max_n.
    """
    n = g.n
    if n > max_n:
        raise CapacityError(f"canonical form limited to n <= {max_n}, got {n}")
    if n == 0:
        return write_graph6(g).encode("ascii")
    adj = g.adj
    degs = g.degrees
    invariant = [
        (degs[v], tuple(sorted(degs[w] for w in g.neighbors[v])))
        for v in range(n)
    ]
    # slot k must receive a vertex whose invariant equals slot_inv[k]
    slot_inv = sorted(invariant)
    order = [0] * n          # order[k] = original vertex placed at position k
    placed_mask = 0
    best: list[int | None] = [None] * n   # per-level column bits; None = +inf

    def rec(depth: int) -> None:
        # invariant: the first `depth` levels of the current assignment equal
        # best[0:depth], so comparisons against best[depth] are meaningful
        nonlocal placed_mask
        if depth == n:
            return
        want = slot_inv[depth]
        tried: list[int] = []
        for v in range(n):
            if (placed_mask >> v) & 1 or invariant[v] != want:
                continue
            if any(_twins(adj, v, u) for u in tried):
                continue
            tried.append(v)
            av = adj[v]
            bits = 0
            for q in range(depth):
                bits = (bits << 1) | ((av >> order[q]) & 1)
            ref = best[depth]
            if ref is not None and bits > ref:
                continue
            if ref is None or bits < ref:
                best[depth] = bits
                for k in range(depth + 1, n):
                    best[k] = None
            order[depth] = v
            placed_mask |= 1 << v
            rec(depth + 1)
            placed_mask &= ~(1 << v)

    rec(0)
    edges = set()
    for depth in range(n):
        bits = best[depth]
        assert bits is not None
        for q in range(depth):
            if (bits >> (depth - 1 - q)) & 1:
                edges.add((q, depth))
    return write_graph6(SimpleGraph(n, frozenset(edges))).encode("ascii")


def _twins(adj: tuple[int, ...], v: int, u: int) -> bool:
    """True if swapping u and v is an automorphism (adjacent or non-adjacent twins)."""
    bu, bv = 1 << u, 1 << v
    return (adj[v] & ~bu) == (adj[u] & ~bv)
