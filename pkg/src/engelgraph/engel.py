"""Engel sequences, Engel element classification, and the Fitting subgroup.

The iterated commutator [a,_k x] is defined by [a,_0 x] = a and
[a,_k x] = [[a,_{k-1} x], x].  For fixed x the map y -> [y, x] is a
deterministic self-map of a finite group, so every question about the Engel
sequence of (a, x) is a question about the functional graph of that map:
``engel_depths`` computes, in one reverse breadth-first search from the
identity, the least k with [a,_k x] = 1 for every a at once.  Pointwise
operations iterate the map directly with a first-repeat early exit; both
routes are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import BaerViolation, PreconditionFailed, SameVertex
from .groups import (
    Group,
    is_abelian,
    is_nilpotent,
    is_subgroup,
    subgroup_generated,
)


@dataclass(frozen=True)
class EngelOutcome:
    """Result of following one Engel sequence.

    ``steps`` is the smallest k with [a,_k x] = 1 when ``reached`` is true,
    and None otherwise.  k = 0 occurs only for a = identity.
    """

    reached: bool
    steps: int | None = None

    def __post_init__(self):
        if self.reached != (self.steps is not None):
            raise ValueError("steps must be present exactly when reached is true")


def iterated_commutator(G: Group, a: int, x: int, k: int) -> int:
    """[a,_k x]; k = 0 returns a itself."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    y = a
    for _ in range(k):
        y = G.commutator(y, x)
    return y


def engel_reaches_identity(G: Group, a: int, x: int) -> EngelOutcome:
    """Smallest k <= |G| with [a,_k x] = 1, or reached=False.

    The bound is sound: the map y -> [y, x] is deterministic on a finite
    set, so a sequence that has not hit the identity within |G| steps has
    entered a cycle avoiding it.  A first repeat is used as an early exit.
    """
    n = G.order
    seen: set[int] = set()
    y, k = a, 0
    while True:
        if y == G.identity:
            return EngelOutcome(True, k)
        if y in seen or k >= n:
            return EngelOutcome(False)
        seen.add(y)
        y = G.commutator(y, x)
        k += 1


def engel_depths(G: Group, x: int) -> tuple[int, ...]:
    """For every element a, the smallest k with [a,_k x] = 1, or -1 when the
    Engel sequence of (a, x) never reaches the identity.

    Computed for all a at once by reverse BFS from the identity in the
    functional graph of y -> [y, x]; results are cached on the group.
    """
    key = ("engel_depths", x)
    cached = G._memo.get(key)
    if cached is not None:
        return cached
    n = G.order
    step = [G.commutator(y, x) for y in range(n)]
    preimages: list[list[int]] = [[] for _ in range(n)]
    for y, v in enumerate(step):
        preimages[v].append(y)
    depth = [-1] * n
    depth[G.identity] = 0
    queue = [G.identity]
    while queue:
        nxt = []
        for v in queue:
            for y in preimages[v]:
                if depth[y] < 0:
                    depth[y] = depth[v] + 1
                    nxt.append(y)
        queue = nxt
    result = tuple(depth)
    G._memo[key] = result
    return result


def is_left_engel(G: Group, x: int) -> bool:
    """True iff every Engel sequence [a,_k x] reaches the identity."""
    return all(d >= 0 for d in engel_depths(G, x))


def is_left_k_engel(G: Group, x: int, k: int) -> bool:
    """True iff [a,_k x] = 1 for every a, with the single exponent k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return all(0 <= d <= k for d in engel_depths(G, x))


def left_engel_set(G: Group) -> tuple[int, ...]:
    """All left Engel elements of G, as sorted indices."""
    cached = G._memo.get("left_engel_set")
    if cached is None:
        cached = tuple(x for x in range(G.order) if is_left_engel(G, x))
        G._memo["left_engel_set"] = cached
    return cached


def bounded_left_engel_set(G: Group) -> tuple[int, ...]:
    """All x that are left k-Engel for some k <= |G|.

    In a finite group a reached Engel sequence needs fewer than |G| steps,
    so this always coincides with ``left_engel_set``; the test suite checks
    that collapse rather than assuming it.
    """
    n = G.order
    return tuple(
        x for x in range(n) if all(0 <= d <= n for d in engel_depths(G, x))
    )


def is_engel_group(G: Group) -> bool:
    return len(left_engel_set(G)) == G.order


def fitting_subgroup(G: Group) -> tuple[int, ...]:
    """The Fitting subgroup, obtained as the left Engel set and then
    *verified* to be a subgroup, normal, and nilpotent.

    The verifications are assertions, not assumptions: for finite groups
    they are guaranteed, so a failure raises BaerViolation and means the
    implementation is wrong.
    """
    cached = G._memo.get("fitting")
    if cached is not None:
        return cached
    L = left_engel_set(G)
    members = set(L)
    if not is_subgroup(G, members):
        raise BaerViolation(f"left Engel set of {G.name!r} is not a subgroup")
    for g in range(G.order):
        if any(G.conjugate(a, g) not in members for a in L):
            raise BaerViolation(f"left Engel set of {G.name!r} is not normal")
    if not is_nilpotent(G, L):
        raise BaerViolation(f"left Engel set of {G.name!r} is not nilpotent")
    G._memo["fitting"] = L
    return L


def is_randomly_engel_conjugates(G: Group, x: int) -> bool:
    """True iff for every g, at least one of the Engel sequences of
    (x^g, x) and (x, x^g) reaches the identity."""
    depths_x = engel_depths(G, x)
    for g in range(G.order):
        xg = G.conjugate(x, g)
        if depths_x[xg] < 0 and engel_depths(G, xg)[x] < 0:
            return False
    return True


def is_engel_set(G: Group, members: Iterable[int]) -> bool:
    """True iff every ordered pair (x, y) of members has [x,_k y] = 1 for
    some k."""
    ms = sorted(set(members))
    return all(engel_depths(G, y)[x] >= 0 for x in ms for y in ms)


def is_randomly_engel_set(G: Group, members: Iterable[int]) -> bool:
    """True iff every pair {x, y} of members vanishes in at least one
    orientation: [x,_k y] = 1 or [y,_k x] = 1 for some k."""
    ms = sorted(set(members))
    for i, x in enumerate(ms):
        for y in ms[i:]:
            if engel_depths(G, y)[x] < 0 and engel_depths(G, x)[y] < 0:
                return False
    return True


def engel_adjacent(G: Group, x: int, y: int) -> bool:
    """Engel-graph adjacency: neither [x,_k y] nor [y,_k x] ever equals 1."""
    if x == y:
        raise SameVertex(f"adjacency needs two distinct elements, got index {x} twice")
    return engel_depths(G, y)[x] < 0 and engel_depths(G, x)[y] < 0


def lcm_power_engel_check(G: Group, a: int, g: int, ts: Sequence[int]) -> bool:
    """Check the abelian-normal-closure collapse: when the normal closure of
    <a> in <a, g> is abelian and [a, g^t1, ..., g^tk] = 1, the iterated
    Engel word [a,_k g^m] with m = lcm(ts) must also be trivial.

    Both hypotheses are verified here rather than trusted (the implication
    is vacuous otherwise); PreconditionFailed identifies the one that does
    not hold.  A correct implementation returns True whenever the
    hypotheses pass.
    """
    ts = list(ts)
    if not ts or any(t < 1 for t in ts):
        raise ValueError(f"ts must be a non-empty list of positive integers, got {ts}")
    H = subgroup_generated(G, (a, g))
    conjugates = {G.conjugate(a, h) for h in H}
    ncl = subgroup_generated(G, conjugates)
    if not is_abelian(G, ncl):
        raise PreconditionFailed(
            "hypothesis failed: the normal closure of <a> in <a,g> is not abelian"
        )
    c = a
    for t in ts:
        c = G.commutator(c, G.power(g, t))
    if c != G.identity:
        raise PreconditionFailed(
            f"hypothesis failed: [a, g^t1, ..., g^tk] is not the identity for ts={ts}"
        )
    m = lcm(*ts)
    return iterated_commutator(G, a, G.power(g, m), len(ts)) == G.identity
