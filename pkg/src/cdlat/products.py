"""Direct products and wreath products by a cyclic top, with the
structural maps (projections, base, diagonal) the lattice computations
quantify over."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import OrderCapExceeded
from .groups import DEFAULT_ORDER_CAP, TABLE_LIMIT, Group
from .subgroups import Subgroup


@dataclass(frozen=True)
class DirectProductMeta:
    """Coordinate structure of a two-factor direct product."""

    factors: tuple[Group, Group]

    def coord_of(self, x: int) -> tuple[int, int]:
        return divmod(x, self.factors[1].order)

    def embed(self, factor: int, x: int) -> int:
        if factor == 0:
            return x * self.factors[1].order
        return x


def direct_product(
    g: Group, h: Group, *, max_order: int = DEFAULT_ORDER_CAP
) -> Group:
    """Componentwise product on index pairs (a, b) packed as a*|H| + b."""
    order = g.order * h.order
    if order > max_order:
        raise OrderCapExceeded(
            f"|{g.name} x {h.name}| = {order} > cap {max_order}"
        )
    meta = DirectProductMeta(factors=(g, h))
    o2 = h.order
    right = f"({h.name})" if " x " in h.name else h.name
    name = f"{g.name} x {right}"
    # only trust factor gens that actually generate; else leave empty and
    # let full_subgroup fall back to greedy generation
    if (g.known_gens or g.order == 1) and (h.known_gens or h.order == 1):
        gens = tuple(x * o2 for x in g.known_gens) + h.known_gens
    else:
        gens = ()
    if order <= TABLE_LIMIT:
        g_rows = g.rows()
        h_rows = h.rows()
        if g_rows is not None and h_rows is not None:
            rows = []
            for a1 in range(g.order):
                ga = g_rows[a1]
                for b1 in range(h.order):
                    hb = h_rows[b1]
                    rows.append(
                        [ga[a2] * o2 + hb[b2] for a2 in range(g.order) for b2 in range(h.order)]
                    )
            inv = [g.inv(a) * o2 + h.inv(b) for a in range(g.order) for b in range(h.order)]
            return Group(
                order,
                name=name,
                provenance="direct-product",
                rows=rows,
                inv_table=inv,
                known_gens=gens,
                product_meta=meta,
            )

    def mul_fn(x: int, y: int) -> int:
        a1, b1 = divmod(x, o2)
        a2, b2 = divmod(y, o2)
        return g.mul(a1, a2) * o2 + h.mul(b1, b2)

    def inv_fn(x: int) -> int:
        a, b = divmod(x, o2)
        return g.inv(a) * o2 + h.inv(b)

    return Group(
        order,
        name=name,
        provenance="direct-product",
        mul_fn=mul_fn,
        inv_fn=inv_fn,
        known_gens=gens,
        product_meta=meta,
    )


def projection(p: Group, u: Subgroup, factor: int) -> Subgroup:
    """Image of u under the coordinate projection onto factor 0 or 1."""
    meta = p.product_meta
    if not isinstance(meta, DirectProductMeta):
        raise ValueError(f"{p.name} is not a direct product")
    target = meta.factors[factor]
    mask = 0
    for x in u.elements():
        mask |= 1 << meta.coord_of(x)[factor]
    gens = []
    for s in u.generators():
        i = meta.coord_of(s)[factor]
        if i and i not in gens:
            gens.append(i)
    return Subgroup(target, mask, gens=tuple(gens))


def product_subgroup(p: Group, x: Subgroup, y: Subgroup) -> Subgroup:
    """The subgroup x cross y inside the direct product p."""
    meta = p.product_meta
    if not isinstance(meta, DirectProductMeta):
        raise ValueError(f"{p.name} is not a direct product")
    if x.ambient is not meta.factors[0] or y.ambient is not meta.factors[1]:
        raise ValueError("factor subgroups do not match the product's factors")
    o2 = meta.factors[1].order
    mask = 0
    for a in x.elements():
        mask |= y.mask << (a * o2)
    gens = tuple(a * o2 for a in x.generators()) + y.generators()
    return Subgroup(p, mask, gens=gens)


# ---------------------------------------------------------------------------
# Wreath products by a cyclic top


@dataclass(frozen=True)
class WreathMeta:
    """Coordinate structure of W = G wr C_n.

    Base elements are functions f: slots -> G stored as n-digit base-|G|
    numbers (slot 0 most significant); the full index is that number times
    n plus the power of the distinguished top generator sigma.
    """

    bottom: Group
    top_order: int

    @property
    def slots(self) -> tuple[int, ...]:
        return tuple(range(self.top_order))

    @property
    def sigma(self) -> int:
        return 1

    def coord_of(self, x: int) -> tuple[tuple[int, ...], int]:
        rest, k = divmod(x, self.top_order)
        digits = []
        for _ in range(self.top_order):
            rest, d = divmod(rest, self.bottom.order)
            digits.append(d)
        return tuple(reversed(digits)), k

    def embed(self, f: tuple[int, ...], k: int) -> int:
        acc = 0
        for v in f:
            acc = acc * self.bottom.order + v
        return acc * self.top_order + k


def wreath_cyclic(g: Group, n: int, *, max_order: int = DEFAULT_ORDER_CAP) -> Group:
    """W = B semidirect C_n with B = G^n; conjugation by the top generator
    shifts base coordinates cyclically."""
    if n < 1:
        raise OrderCapExceeded(f"wreath top order must be >= 1, got {n}")
    order = n * g.order**n
    if order > max_order:
        raise OrderCapExceeded(
            f"|{g.name} wr C{n}| = {order} > cap {max_order}"
        )
    meta = WreathMeta(bottom=g, top_order=n)
    go = g.order

    def mul_fn(x: int, y: int) -> int:
        fx, k = meta.coord_of(x)
        fy, l = meta.coord_of(y)
        out = tuple(g.mul(fx[s], fy[(s + k) % n]) for s in range(n))
        return meta.embed(out, (k + l) % n)

    def inv_fn(x: int) -> int:
        fx, k = meta.coord_of(x)
        kk = (n - k) % n
        out = tuple(g.inv(fx[(s - k) % n]) for s in range(n))
        return meta.embed(out, kk)

    if g.known_gens or g.order == 1:
        gens = tuple(
            meta.embed(tuple(x if s == 0 else 0 for s in range(n)), 0)
            for x in g.known_gens
        ) + (meta.sigma,)
    else:
        gens = ()
    bottom_name = f"({g.name})" if " " in g.name else g.name
    name = f"{bottom_name} wr C{n}"
    if order <= TABLE_LIMIT:
        coords = [meta.coord_of(x) for x in range(order)]
        emb = {c: i for i, c in enumerate(coords)}
        g_rows = g.rows()
        if g_rows is None:
            g_rows = [tuple(g.mul(a, b) for b in range(go)) for a in range(go)]
        rows = []
        for fx, k in coords:
            row = []
            for fy, l in coords:
                out = tuple(g_rows[fx[s]][fy[(s + k) % n]] for s in range(n))
                row.append(emb[(out, (k + l) % n)])
            rows.append(row)
        return Group(
            order,
            name=name,
            provenance="wreath-product",
            rows=rows,
            known_gens=gens,
            product_meta=meta,
        )
    return Group(
        order,
        name=name,
        provenance="wreath-product",
        mul_fn=mul_fn,
        inv_fn=inv_fn,
        known_gens=gens,
        product_meta=meta,
    )


def _wreath_meta(w: Group) -> WreathMeta:
    meta = w.product_meta
    if not isinstance(meta, WreathMeta):
        raise ValueError(f"{w.name} is not a wreath product")
    return meta


def base_subgroup(w: Group) -> Subgroup:
    """The normal base B = G^n (all elements with trivial top part)."""
    cached = w._cache.get("wreath_base")
    if cached is not None:
        return cached
    meta = _wreath_meta(w)
    n = meta.top_order
    go = meta.bottom.order
    mask = 0
    for t in range(go**n):
        mask |= 1 << (t * n)
    gens = []
    bottom_gens = meta.bottom.known_gens or _bottom_gens(meta.bottom)
    for s in range(n):
        for x in bottom_gens:
            gens.append(meta.embed(tuple(x if i == s else 0 for i in range(n)), 0))
    result = Subgroup(w, mask, gens=tuple(gens))
    w._cache["wreath_base"] = result
    return result


def _bottom_gens(g: Group) -> tuple[int, ...]:
    from .subgroups import full_subgroup

    return full_subgroup(g).generators()


def diagonal_subgroup(w: Group, h: Subgroup) -> Subgroup:
    """Constant base functions with value in h <= G."""
    meta = _wreath_meta(w)
    if h.ambient is not meta.bottom:
        raise ValueError("diagonal_subgroup needs a subgroup of the bottom group")
    n = meta.top_order
    mask = 0
    for x in h.elements():
        mask |= 1 << meta.embed((x,) * n, 0)
    gens = tuple(meta.embed((x,) * n, 0) for x in h.generators())
    return Subgroup(w, mask, gens=gens)


def base_product_subgroup(w: Group, parts: list[Subgroup]) -> Subgroup:
    """The subgroup H_0 x ... x H_{n-1} of the base, one factor per slot."""
    meta = _wreath_meta(w)
    n = meta.top_order
    if len(parts) != n:
        raise ValueError(f"need {n} factors, got {len(parts)}")
    for h in parts:
        if h.ambient is not meta.bottom:
            raise ValueError("base_product_subgroup factors live in the bottom group")
    mask = 0
    for combo in itertools.product(*[h.elements() for h in parts]):
        mask |= 1 << meta.embed(combo, 0)
    gens = []
    for s, h in enumerate(parts):
        for x in h.generators():
            gens.append(meta.embed(tuple(x if i == s else 0 for i in range(n)), 0))
    return Subgroup(w, mask, gens=tuple(gens))


def base_projection(w: Group, u: Subgroup, slot: int) -> Subgroup:
    """Image of u <= B under the coordinate projection onto one slot
    (slots are 0-based; slot 0 is the first coordinate)."""
    meta = _wreath_meta(w)
    base_mask = base_subgroup(w).mask
    if u.mask & ~base_mask:
        raise ValueError("base_projection needs a subgroup of the base")
    mask = 0
    for x in u.elements():
        f, _ = meta.coord_of(x)
        mask |= 1 << f[slot]
    gens = []
    for s in u.generators():
        i = meta.coord_of(s)[0][slot]
        if i and i not in gens:
            gens.append(i)
    return Subgroup(meta.bottom, mask, gens=tuple(gens))
