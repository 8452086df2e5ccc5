"""Finite groups as index-based multiplication structures.

Elements are integers 0..order-1 and the identity is always index 0.
Small groups store a full multiplication table; constructions past the
table threshold (large wreath products, UT(5,2)) multiply through a
stored formula instead.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import BadParameter, NotAGroup, OrderCapExceeded

DEFAULT_ORDER_CAP = 20000
TABLE_LIMIT = 4096
EXHAUSTIVE_ASSOC_LIMIT = 256
ASSOC_SAMPLE_FACTOR = 10  # sampled triples above the exhaustive limit
_ASSOC_SEED = 0x5EED

FAMILIES = ("C", "D", "Q", "S", "A", "UT")

PROVENANCES = (
    "cayley-file",
    "permutation-gens",
    "named-family",
    "direct-product",
    "wreath-product",
    "corpus-fixture",
)


class Group:
    """Immutable finite group over element indices with identity at 0."""

    __slots__ = (
        "order",
        "name",
        "provenance",
        "known_gens",
        "perm_images",
        "product_meta",
        "_rows",
        "_inv",
        "_mul_fn",
        "_inv_fn",
        "_cache",
    )

    def __init__(
        self,
        order: int,
        *,
        name: str,
        provenance: str,
        rows: Sequence[Sequence[int]] | None = None,
        mul_fn: Callable[[int, int], int] | None = None,
        inv_table: Sequence[int] | None = None,
        inv_fn: Callable[[int], int] | None = None,
        known_gens: Iterable[int] = (),
        perm_images: Sequence[tuple[int, ...]] | None = None,
        product_meta=None,
    ):
        if provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {provenance!r}")
        if rows is None and mul_fn is None:
            raise ValueError("a group needs either a table or a mul function")
        self.order = order
        self.name = name
        self.provenance = provenance
        self.known_gens = tuple(known_gens)
        self.perm_images = tuple(perm_images) if perm_images is not None else None
        self.product_meta = product_meta
        self._rows = [tuple(r) for r in rows] if rows is not None else None
        self._mul_fn = mul_fn
        self._inv_fn = inv_fn
        if inv_table is not None:
            self._inv = tuple(inv_table)
        elif self._rows is not None:
            self._inv = _derive_inverses(self._rows)
        else:
            self._inv = None
        self._cache = {}

    def mul(self, a: int, b: int) -> int:
        if self._rows is not None:
            return self._rows[a][b]
        return self._mul_fn(a, b)

    def inv(self, a: int) -> int:
        if self._inv is not None:
            return self._inv[a]
        return self._inv_fn(a)

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def rows(self) -> list[tuple[int, ...]] | None:
        """Full multiplication table, or None for formula-backed groups."""
        return self._rows

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, x: int) -> int:
        n = 1
        y = x
        while y != 0:
            y = self.mul(y, x)
            n += 1
        return n

    def is_abelian(self) -> bool:
        cached = self._cache.get("abelian")
        if cached is None:
            cached = all(
                self.mul(a, b) == self.mul(b, a)
                for a in range(self.order)
                for b in range(a + 1, self.order)
            )
            self._cache["abelian"] = cached
        return cached

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order})"


def _derive_inverses(rows) -> tuple[int, ...]:
    inv = []
    for x, row in enumerate(rows):
        y = row.index(0)
        inv.append(y)
    return tuple(inv)


def check_axioms(group: Group, *, seed: int = _ASSOC_SEED) -> None:
    """Verify identity, inverses, Latin-square rows/cols and associativity.

    Associativity is exhaustive up to EXHAUSTIVE_ASSOC_LIMIT and sampled
    (ASSOC_SAMPLE_FACTOR * order**2 fixed-seed triples) above it.  Raises
    NotAGroup on the first violation.
    """
    n = group.order
    mul = group.mul
    for x in range(n):
        if mul(0, x) != x or mul(x, 0) != x:
            raise NotAGroup(f"index 0 is not an identity at element {x}")
        y = group.inv(x)
        if mul(x, y) != 0 or mul(y, x) != 0:
            raise NotAGroup(f"element {x} has no two-sided inverse")
    rows = group.rows()
    if rows is not None:
        full = list(range(n))
        for i, row in enumerate(rows):
            if sorted(row) != full:
                raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            if sorted(row[j] for row in rows) != full:
                raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        triples = (
            (a, b, c) for a in range(n) for b in range(n) for c in range(n)
        )
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n))
            for _ in range(ASSOC_SAMPLE_FACTOR * n * n)
        )
    for a, b, c in triples:
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            raise NotAGroup(f"associativity fails at triple ({a}, {b}, {c})")


# ---------------------------------------------------------------------------
# Cayley-table construction


def from_cayley(table: Sequence[Sequence[int]], *, name: str | None = None) -> Group:
    """Build a validated group from a square multiplication table.

    The table's identity may sit at any index; elements are relabeled by
    the 0<->identity swap so index 0 is the identity.  Raises NotAGroup
    with the offending row/triple on any axiom failure.
    """
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    rows = [list(r) for r in table]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotAGroup(f"row {i} holds entry {v!r} outside 0..{n - 1}")
    ident = None
    for e in range(n):
        if all(rows[e][x] == x for x in range(n)) and all(
            rows[x][e] == x for x in range(n)
        ):
            ident = e
            break
    if ident is None:
        raise NotAGroup("table has no identity element")
    if ident != 0:
        relabel = list(range(n))
        relabel[0], relabel[ident] = ident, 0
        old = rows
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[relabel[i]][relabel[j]] = relabel[old[i][j]]
    full = list(range(n))
    for i in range(n):
        if sorted(rows[i]) != full:
            raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if sorted(rows[i][j] for i in range(n)) != full:
            raise NotAGroup(f"column {j} is not a permutation of 0..{n - 1}")
    inv = []
    for x in range(n):
        y = rows[x].index(0)
        if rows[y][x] != 0:
            raise NotAGroup(f"element {x} lacks a two-sided inverse")
        inv.append(y)
    group = Group(
        n,
        name=name or f"cayley{n}",
        provenance="cayley-file",
        rows=rows,
        inv_table=inv,
    )
    check_axioms(group)
    return group


def dump_cayley(group: Group) -> str:
    """Serialize a table-backed group in the Cayley file format."""
    rows = group.rows()
    if rows is None:
        raise ValueError("cannot dump a formula-backed group")
    lines = [f"# {group.name}", str(group.order)]
    for row in rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_cayley(text: str) -> list[list[int]]:
    """Parse the Cayley file format: order line then n table rows.

    Anything from '#' to end of line is a comment.
    """
    items = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            items.append(line)
    if not items:
        raise NotAGroup("cayley file holds no data")
    try:
        n = int(items[0])
    except ValueError:
        raise NotAGroup(f"cayley file order line is not an integer: {items[0]!r}")
    if n < 1:
        raise NotAGroup(f"cayley file order must be positive, got {n}")
    if len(items) != n + 1:
        raise NotAGroup(f"cayley file has {len(items) - 1} rows, expected {n}")
    table = []
    for line in items[1:]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise NotAGroup(f"cayley file row is not integers: {line!r}")
        if len(row) != n:
            raise NotAGroup(f"cayley file row has {len(row)} entries, expected {n}")
        table.append(row)
    return table


def from_cayley_file(path, *, name: str | None = None) -> Group:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return from_cayley(load_cayley(text), name=name or str(path))


# ---------------------------------------------------------------------------
# Permutation groups


@dataclass(frozen=True)
class PermutationGenSet:
    """Generators of a permutation group on points 1..degree.

    Generators are stored in image form, 0-based: gen[i] is the image of
    point i.
    """

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise BadParameter(f"degree must be >= 1, got {self.degree}")
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise BadParameter(f"not a permutation of 0..{self.degree - 1}: {g}")

    @classmethod
    def from_cycles(cls, gens, degree: int | None = None) -> "PermutationGenSet":
        """Build from 1-based cycle notation.

        Each generator is a list of cycles, e.g. [[(1, 2), (3, 4)], [(1, 3)]]
        gives the two Klein generators.  Cycles within one generator are
        applied left to right.
        """
        gens = [list(g) for g in gens]
        top = 0
        for cycles in gens:
            for cyc in cycles:
                if cyc:
                    top = max(top, max(cyc))
        if degree is None:
            degree = max(top, 1)
        elif top > degree:
            raise BadParameter(f"cycle point {top} exceeds degree {degree}")
        images = []
        for cycles in gens:
            img = list(range(degree))
            for cyc in cycles:
                prev = img
                move = list(range(degree))
                for i, pt in enumerate(cyc):
                    move[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
                img = [move[prev[i]] for i in range(degree)]
            images.append(tuple(img))
        return cls(degree, tuple(images))


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p first, then q
    return tuple(q[v] for v in p)


def from_permutations(
    gens: PermutationGenSet,
    *,
    max_order: int = DEFAULT_ORDER_CAP,
    name: str | None = None,
) -> Group:
    """Enumerate the generated permutation group by breadth-first closure.

    Index 0 is the identity; the rest follow in first-discovery order from
    the deterministic FIFO worklist, so the labeling is reproducible.
    """
    degree = gens.degree
    identity = tuple(range(degree))
    gen_perms = [g for g in gens.generators if g != identity]
    elems = [identity]
    index = {identity: 0}
    qi = 0
    while qi < len(elems):
        p = elems[qi]
        qi += 1
        for g in gen_perms:
            q = _compose(p, g)
            if q not in index:
                index[q] = len(elems)
                elems.append(q)
                if len(elems) > max_order:
                    raise OrderCapExceeded(
                        f"permutation closure exceeded {max_order} elements"
                    )
    n = len(elems)
    inv = [0] * n
    for i, p in enumerate(elems):
        pi = [0] * degree
        for a, b in enumerate(p):
            pi[b] = a
        inv[i] = index[tuple(pi)]
    known = tuple(index[g] for g in gen_perms)
    if n <= TABLE_LIMIT:
        rows = [
            [index[_compose(p, q)] for q in elems]
            for p in elems
        ]
        return Group(
            n,
            name=name or f"perm{n}",
            provenance="permutation-gens",
            rows=rows,
            inv_table=inv,
            known_gens=known,
            perm_images=elems,
        )

    def mul_fn(a: int, b: int, _e=elems, _i=index) -> int:
        return _i[_compose(_e[a], _e[b])]

    return Group(
        n,
        name=name or f"perm{n}",
        provenance="permutation-gens",
        mul_fn=mul_fn,
        inv_table=inv,
        known_gens=known,
        perm_images=elems,
    )


# ---------------------------------------------------------------------------
# Named families


def named_group(family: str, n: int, *, max_order: int = DEFAULT_ORDER_CAP) -> Group:
    """Build a named-family group: C, D, Q (order subscript), S, A, or UT.

    D and Q follow the order convention: D8 and Q8 are the order-8 groups.
    UT(n, 2) is the unitriangular group over the 2-element field, order
    2**(n*(n-1)/2).
    """
    if family == "C":
        return _cyclic(n, max_order)
    if family == "D":
        return _dihedral(n, max_order)
    if family == "Q":
        return _quaternion(n, max_order)
    if family == "S":
        return _symmetric(n, max_order)
    if family == "A":
        return _alternating(n, max_order)
    if family == "UT":
        return _unitriangular(n, max_order)
    raise BadParameter(f"unknown family {family!r}")


def _cap(order: int, max_order: int, what: str) -> None:
    if order > max_order:
        raise OrderCapExceeded(f"{what} has order {order} > cap {max_order}")


def _cyclic(n: int, max_order: int) -> Group:
    if n < 1:
        raise BadParameter(f"C_n needs n >= 1, got {n}")
    _cap(n, max_order, f"C{n}")
    if n <= TABLE_LIMIT:
        rows = [[(i + j) % n for j in range(n)] for i in range(n)]
        return Group(
            n,
            name=f"C{n}",
            provenance="named-family",
            rows=rows,
            known_gens=(1,) if n > 1 else (),
        )
    return Group(
        n,
        name=f"C{n}",
        provenance="named-family",
        mul_fn=lambda a, b: (a + b) % n,
        inv_fn=lambda a: (-a) % n,
        known_gens=(1,),
    )


def _dihedral(n: int, max_order: int) -> Group:
    # order convention: D_n has order n (n even >= 4); D4 is the Klein group
    if n < 4 or n % 2:
        raise BadParameter(f"D_n needs even n >= 4, got {n}")
    _cap(n, max_order, f"D{n}")
    m = n // 2

    def mul(x: int, y: int) -> int:
        i1, j1 = x >> 1, x & 1
        i2, j2 = y >> 1, y & 1
        if j1:
            return ((i1 - i2) % m) << 1 | (1 ^ j2)
        return ((i1 + i2) % m) << 1 | j2

    if n <= TABLE_LIMIT:
        rows = [[mul(x, y) for y in range(n)] for x in range(n)]
        return Group(
            n, name=f"D{n}", provenance="named-family", rows=rows, known_gens=(2, 1)
        )

    def inv_fn(x: int) -> int:
        return x if x & 1 else ((-(x >> 1)) % m) << 1

    return Group(
        n,
        name=f"D{n}",
        provenance="named-family",
        mul_fn=mul,
        inv_fn=inv_fn,
        known_gens=(2, 1),
    )


def _quaternion(n: int, max_order: int) -> Group:
    # generalized quaternion, order a power of two >= 8
    if n < 8 or n & (n - 1):
        raise BadParameter(f"Q_n needs n in {{8, 16, 32, ...}}, got {n}")
    _cap(n, max_order, f"Q{n}")
    m = n // 2
    half = m // 2

    # normal forms x^a y^b with x^m = 1, y^2 = x^(m/2), y^-1 x y = x^-1
    def mul(u: int, v: int) -> int:
        a1, b1 = u >> 1, u & 1
        a2, b2 = v >> 1, v & 1
        if not b1:
            return ((a1 + a2) % m) << 1 | b2
        if not b2:
            return ((a1 - a2) % m) << 1 | 1
        return ((a1 - a2 + half) % m) << 1

    rows = [[mul(x, y) for y in range(n)] for x in range(n)]
    return Group(
        n, name=f"Q{n}", provenance="named-family", rows=rows, known_gens=(2, 1)
    )


def _symmetric(n: int, max_order: int) -> Group:
    if n < 1:
        raise BadParameter(f"S_n needs n >= 1, got {n}")
    _cap(math.factorial(n), max_order, f"S{n}")
    gens = []
    if n >= 2:
        gens.append([(1, 2)])
    if n >= 3:
        gens.append([tuple(range(1, n + 1))])
    pgs = PermutationGenSet.from_cycles(gens, degree=n)
    return from_permutations(pgs, max_order=max_order, name=f"S{n}")


def _alternating(n: int, max_order: int) -> Group:
    if n < 1:
        raise BadParameter(f"A_n needs n >= 1, got {n}")
    order = math.factorial(n) // 2 if n >= 2 else 1
    _cap(order, max_order, f"A{n}")
    gens = [[(i, i + 1, i + 2)] for i in range(1, n - 1)]
    pgs = PermutationGenSet.from_cycles(gens, degree=n)
    return from_permutations(pgs, max_order=max_order, name=f"A{n}")


def ut_entry_bit(n: int, i: int, j: int) -> int:
    """Bit position encoding entry (i, j), 0-based, of UT(n, 2) elements.

    The element index of the elementary matrix I + E_ij is
    1 << ut_entry_bit(n, i, j).
    """
    if not 0 <= i < j < n:
        raise BadParameter(f"need 0 <= i < j < n, got ({i}, {j}) for n={n}")
    pos = 0
    for r in range(n):
        for c in range(r + 1, n):
            if (r, c) == (i, j):
                return pos
            pos += 1
    raise AssertionError


def _unitriangular(n: int, max_order: int) -> Group:
    if n < 2:
        raise BadParameter(f"UT(n, 2) needs n >= 2, got {n}")
    bits = n * (n - 1) // 2
    order = 1 << bits
    _cap(order, max_order, f"UT({n},2)")
    positions = [(r, c) for r in range(n) for c in range(r + 1, n)]

    def decode_rows(e: int) -> tuple[int, ...]:
        rows = [1 << r for r in range(n)]
        for t, (r, c) in enumerate(positions):
            if e >> t & 1:
                rows[r] |= 1 << c
        return tuple(rows)

    all_rows = [decode_rows(e) for e in range(order)]
    index = {rows: e for e, rows in enumerate(all_rows)}

    def mul(a: int, b: int, _rows=all_rows, _index=index, _n=n) -> int:
        ar = _rows[a]
        br = _rows[b]
        out = []
        for i in range(_n):
            acc = 0
            bits_i = ar[i]
            while bits_i:
                low = bits_i & -bits_i
                acc ^= br[low.bit_length() - 1]
                bits_i ^= low
            out.append(acc)
        return _index[tuple(out)]

    inv = [0] * order
    for e in range(order):
        # unitriangular elements have 2-power order; walk to the inverse
        y = e
        prev = 0
        while y != 0:
            prev = y
            y = mul(y, e)
        inv[e] = prev if e else 0
    known = tuple(1 << ut_entry_bit(n, i, i + 1) for i in range(n - 1))
    name = f"UT({n},2)"
    if order <= EXHAUSTIVE_ASSOC_LIMIT:
        rows = [[mul(a, b) for b in range(order)] for a in range(order)]
        return Group(
            order,
            name=name,
            provenance="named-family",
            rows=rows,
            inv_table=inv,
            known_gens=known,
        )
    return Group(
        order,
        name=name,
        provenance="named-family",
        mul_fn=mul,
        inv_table=inv,
        known_gens=known,
    )


# ---------------------------------------------------------------------------
# Small-order isomorphism testing (element-order-profile guided search)


def group_isomorphic_small(a: Group, b: Group, *, cap: int = 16) -> bool:
    """Brute-force isomorphism test for groups of order <= cap.

    Candidate generator images are pruned by element-order profiles; the
    induced map is then checked to be a bijective homomorphism.
    """
    if a.order > cap or b.order > cap:
        raise OrderCapExceeded(f"isomorphism search capped at order {cap}")
    if a.order != b.order:
        return False
    orders_a = [a.element_order(x) for x in range(a.order)]
    orders_b = [b.element_order(x) for x in range(b.order)]
    if sorted(orders_a) != sorted(orders_b):
        return False
    gens = _generating_sequence(a)
    candidates = [
        [y for y in range(b.order) if orders_b[y] == orders_a[g]] for g in gens
    ]

    def extend(images: list[int]) -> bool:
        if len(images) == len(gens):
            return _induced_iso(a, b, gens, images)
        for y in candidates[len(images)]:
            if extend(images + [y]):
                return True
        return False

    return extend([])


def _generating_sequence(g: Group) -> list[int]:
    # greedy: repeatedly adjoin the smallest element outside the span
    gens: list[int] = []
    span = {0}
    while len(span) < g.order:
        x = min(set(range(g.order)) - span)
        gens.append(x)
        frontier = list(span)
        span_new = set(span)
        span_new.add(x)
        queue = [x]
        while queue:
            t = queue.pop()
            for s in list(span_new):
                for prod in (g.mul(t, s), g.mul(s, t)):
                    if prod not in span_new:
                        span_new.add(prod)
                        queue.append(prod)
        span = span_new
    return gens


def _induced_iso(a: Group, b: Group, gens: list[int], images: list[int]) -> bool:
    fmap = {0: 0}
    queue = [0]
    while queue:
        x = queue.pop()
        for g, img in zip(gens, images):
            y = a.mul(x, g)
            fy = b.mul(fmap[x], img)
            if y in fmap:
                if fmap[y] != fy:
                    return False
            else:
                fmap[y] = fy
                queue.append(y)
    if len(fmap) != a.order or len(set(fmap.values())) != b.order:
        return False
    return all(
        fmap[a.mul(x, y)] == b.mul(fmap[x], fmap[y])
        for x in range(a.order)
        for y in range(a.order)
    )
