"""Independent brute-force oracles.

Everything here works element by element from the multiplication table
alone, deliberately ignoring the engine's generator shortcuts, coset
extensions and caches, so the two paths can disagree when one is wrong.
"""

from __future__ import annotations

from itertools import combinations

from cdlat import Group


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def table_rows(g: Group) -> list[tuple[int, ...]]:
    rows = g.rows()
    if rows is None:
        rows = [tuple(g.mul(a, b) for b in range(g.order)) for a in range(g.order)]
    return rows


def is_closed_mask(g: Group, mask: int) -> bool:
    rows = table_rows(g)
    elems = [i for i in range(g.order) if mask >> i & 1]
    for a in elems:
        row = rows[a]
        for b in elems:
            if not mask >> row[b] & 1:
                return False
    return True


def brute_subgroup_masks(g: Group) -> set[int]:
    """Subset filtration: test every subset of Lagrange-compatible size
    containing the identity for closure under multiplication."""
    n = g.order
    rows = table_rows(g)
    others = list(range(1, n))
    found = set()
    for d in divisors(n):
        for combo in combinations(others, d - 1):
            elems = (0,) + combo
            mask = 0
            for e in elems:
                mask |= 1 << e
            ok = True
            for a in elems:
                row = rows[a]
                for b in elems:
                    if not mask >> row[b] & 1:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.add(mask)
    return found


def brute_centralizer_mask(g: Group, hmask: int) -> int:
    """Filter every element against every member of H (no generators)."""
    members = [i for i in range(g.order) if hmask >> i & 1]
    mask = 0
    for x in range(g.order):
        if all(g.mul(x, h) == g.mul(h, x) for h in members):
            mask |= 1 << x
    return mask


def brute_center_mask(g: Group) -> int:
    return brute_centralizer_mask(g, (1 << g.order) - 1)


def brute_normalizer_mask(g: Group, hmask: int) -> int:
    members = [i for i in range(g.order) if hmask >> i & 1]
    mask = 0
    for x in range(g.order):
        xi = g.inv(x)
        conj = 0
        for h in members:
            conj |= 1 << g.mul(g.mul(xi, h), x)
        if conj == hmask:
            mask |= 1 << x
    return mask


def brute_closure_mask(g: Group, seed) -> int:
    current = {0} | set(seed)
    while True:
        new = set()
        for a in current:
            for b in current:
                p = g.mul(a, b)
                if p not in current:
                    new.add(p)
        if not new:
            break
        current |= new
    mask = 0
    for e in current:
        mask |= 1 << e
    return mask


def brute_normal_closure_mask(g: Group, big_mask: int, small_mask: int) -> int:
    """Closure of the set of all big-conjugates of all small elements."""
    big = [i for i in range(g.order) if big_mask >> i & 1]
    small = [i for i in range(g.order) if small_mask >> i & 1]
    conjugates = set()
    for k in big:
        ki = g.inv(k)
        for h in small:
            conjugates.add(g.mul(g.mul(ki, h), k))
    return brute_closure_mask(g, conjugates)


def brute_product_set(g: Group, amask: int, bmask: int) -> int:
    left = [i for i in range(g.order) if amask >> i & 1]
    right = [i for i in range(g.order) if bmask >> i & 1]
    mask = 0
    for a in left:
        for b in right:
            mask |= 1 << g.mul(a, b)
    return mask
