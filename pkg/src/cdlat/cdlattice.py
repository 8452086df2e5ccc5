"""The measure |H| * |C_G(H)|, its maximum over all subgroups, the
sublattice of subgroups attaining it, and the centrally large subset."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLargeForIso
from .groups import Group
from .subgroups import (
    DEFAULT_ENUM_LIMIT,
    DEFAULT_SUBGROUP_CAP,
    Subgroup,
    SubgroupSet,
    all_subgroups,
    centralizer,
    is_normal,
    subnormal_defect,
)

ISO_MEMBER_CAP = 12


def measure(g: Group, h: Subgroup) -> int:
    """|H| * |C_G(H)|, exact."""
    return h.order * centralizer(g, h).order


def max_measure(
    g: Group,
    *,
    max_subgroups: int = DEFAULT_SUBGROUP_CAP,
    max_order: int = DEFAULT_ENUM_LIMIT,
) -> int:
    """Largest measure over all subgroups of g."""
    subs = all_subgroups(g, max_subgroups=max_subgroups, max_order=max_order)
    return max(measure(g, h) for h in subs)


@dataclass(frozen=True)
class CDMember:
    """One maximal-measure subgroup with its report annotations."""

    subgroup: Subgroup
    is_normal: bool
    defect: int
    is_centrally_large: bool
    centralizer_index: int


@dataclass(frozen=True)
class CDResult:
    """The maximal-measure sublattice of a group."""

    group: Group
    max_measure: int
    members: tuple[CDMember, ...]
    hasse_edges: tuple[tuple[int, int], ...]

    def member_masks(self) -> list[int]:
        return [m.subgroup.mask for m in self.members]

    def subgroup_set(self) -> SubgroupSet:
        return SubgroupSet(self.group, tuple(m.subgroup for m in self.members))

    def cl_masks(self) -> list[int]:
        return [m.subgroup.mask for m in self.members if m.is_centrally_large]

    def index_of(self, mask: int) -> int:
        for i, m in enumerate(self.members):
            if m.subgroup.mask == mask:
                return i
        raise KeyError(f"mask {mask:#x} is not a lattice member")


def cd_lattice(
    g: Group,
    *,
    max_subgroups: int = DEFAULT_SUBGROUP_CAP,
    max_order: int = DEFAULT_ENUM_LIMIT,
) -> CDResult:
    """All subgroups of maximal measure, with Hasse cover edges, CL flags,
    normality/defect annotations and the centralizer pairing."""
    cached = g._cache.get("cd_result")
    if cached is not None:
        return cached
    subs = all_subgroups(g, max_subgroups=max_subgroups, max_order=max_order)
    best = 0
    member_subs: list[Subgroup] = []
    for h in subs:
        m = measure(g, h)
        if m > best:
            best = m
            member_subs = [h]
        elif m == best:
            member_subs.append(h)
    # subs is canonically ordered, so member_subs already is
    mask_index = {h.mask: i for i, h in enumerate(member_subs)}
    members = []
    for h in member_subs:
        cent = centralizer(g, h)
        if cent.mask not in mask_index:
            raise AssertionError(
                f"centralizer of a member is not a member in {g.name}"
            )
        defect = subnormal_defect(g, h)
        if defect is None:
            raise AssertionError(f"non-subnormal lattice member in {g.name}")
        members.append(
            CDMember(
                subgroup=h,
                is_normal=is_normal(g, h),
                defect=defect,
                is_centrally_large=cent.mask & ~h.mask == 0,
                centralizer_index=mask_index[cent.mask],
            )
        )
    edges = _hasse_edges([h.mask for h in member_subs])
    result = CDResult(
        group=g, max_measure=best, members=tuple(members), hasse_edges=edges
    )
    g._cache["cd_result"] = result
    return result


def _hasse_edges(masks: list[int]) -> tuple[tuple[int, int], ...]:
    # pairwise containment, then transitive reduction
    m = len(masks)
    below = [
        [i != j and masks[i] & ~masks[j] == 0 for j in range(m)] for i in range(m)
    ]
    edges = []
    for i in range(m):
        for j in range(m):
            if not below[i][j]:
                continue
            if any(below[i][k] and below[k][j] for k in range(m)):
                continue
            edges.append((i, j))
    return tuple(edges)


def cl_subgroups(
    g: Group,
    *,
    max_subgroups: int = DEFAULT_SUBGROUP_CAP,
    max_order: int = DEFAULT_ENUM_LIMIT,
) -> SubgroupSet:
    """Members U of the lattice with Z(U) = C_G(U)."""
    result = cd_lattice(g, max_subgroups=max_subgroups, max_order=max_order)
    return SubgroupSet(
        g,
        tuple(m.subgroup for m in result.members if m.is_centrally_large),
    )


@dataclass(frozen=True)
class SubgroupCD:
    """Lattice of a subgroup S <= G computed inside G's enumeration."""

    ambient: Group
    within_mask: int
    max_measure: int
    member_masks: tuple[int, ...]
    cl_masks: tuple[int, ...]


def cd_of_subgroup(g: Group, s: Subgroup) -> SubgroupCD:
    """Lattice of s as its own ambient group, reusing g's enumeration.

    Subgroups of s are the enumerated subgroups of g inside s's mask, and
    C_S(H) = C_G(H) & S.
    """
    cache = g._cache.setdefault("sub_cd", {})
    cached = cache.get(s.mask)
    if cached is not None:
        return cached
    subs = all_subgroups(g)
    best = 0
    members: list[int] = []
    for h in subs:
        if h.mask & ~s.mask:
            continue
        c_in_s = centralizer(g, h).mask & s.mask
        m = h.order * c_in_s.bit_count()
        if m > best:
            best = m
            members = [h.mask]
        elif m == best:
            members.append(h.mask)
    cl = tuple(
        hm
        for hm in members
        if (centralizer(g, subs[subs.index_of(hm)]).mask & s.mask) & ~hm == 0
    )
    result = SubgroupCD(
        ambient=g,
        within_mask=s.mask,
        max_measure=best,
        member_masks=tuple(members),
        cl_masks=cl,
    )
    cache[s.mask] = result
    return result


# ---------------------------------------------------------------------------
# Order-isomorphism of small lattices


def lattice_isomorphic(a: CDResult, b: CDResult) -> bool:
    """True iff a bijection preserving <= in both directions exists.

    Brute-force backtracking over member bijections, pruned by iterated
    (down-set size, up-set size, cover degrees) signatures; capped at
    ISO_MEMBER_CAP members.
    """
    if len(a.members) > ISO_MEMBER_CAP or len(b.members) > ISO_MEMBER_CAP:
        raise TooLargeForIso(
            f"lattice isomorphism capped at {ISO_MEMBER_CAP} members"
        )
    if len(a.members) != len(b.members):
        return False
    rel_a = _leq_matrix(a.member_masks())
    rel_b = _leq_matrix(b.member_masks())
    sig_a = _signatures(rel_a)
    sig_b = _signatures(rel_b)
    if sorted(sig_a) != sorted(sig_b):
        return False
    n = len(sig_a)
    order = sorted(range(n), key=lambda i: (sig_a[i], i))
    used = [False] * n

    def assign(pos: int, mapping: dict[int, int]) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if used[j] or sig_b[j] != sig_a[i]:
                continue
            ok = True
            for i2, j2 in mapping.items():
                if rel_a[i][i2] != rel_b[j][j2] or rel_a[i2][i] != rel_b[j2][j]:
                    ok = False
                    break
            if ok:
                used[j] = True
                mapping[i] = j
                if assign(pos + 1, mapping):
                    return True
                del mapping[i]
                used[j] = False
        return False

    return assign(0, {})


def _leq_matrix(masks: list[int]) -> list[list[bool]]:
    return [[mi & ~mj == 0 for mj in masks] for mi in masks]


def _signatures(rel: list[list[bool]]) -> list[tuple]:
    n = len(rel)
    sig = [
        (sum(rel[i][j] for j in range(n)), sum(rel[j][i] for j in range(n)))
        for i in range(n)
    ]
    for _ in range(3):
        sig = [
            (
                sig[i],
                tuple(sorted(sig[j] for j in range(n) if rel[i][j] and i != j)),
                tuple(sorted(sig[j] for j in range(n) if rel[j][i] and i != j)),
            )
            for i in range(n)
        ]
    return sig
