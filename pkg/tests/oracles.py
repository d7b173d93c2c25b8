"""Independent brute-force oracles used to cross-check the library.

The enumeration oracle rebuilds the parameter list for a given infinitesimal
character by blind generate-and-test over a candidate block pool, with leaf
verification by multiset equality.  It shares no code path with the
production enumerator (which recurses on the maximum remaining entry).
"""

from __future__ import annotations

import itertools
from collections import Counter

from sympacket.params import (
    ArthurParameter,
    DiscreteBlock,
    UnipotentBlock,
    validate,
)
from sympacket.weights import InfinitesimalCharacter


def _unip_segment(dim: int) -> Counter:
    half = (dim - 1) // 2
    return Counter(range(-half, half + 1))


def _disc_segment(t: int, a: int) -> Counter:
    top = (t + a - 1) // 2
    bottom = (t - a + 1) // 2
    return Counter(
        list(range(bottom, top + 1)) + list(range(-top, -bottom + 1))
    )


def brute_force_params(chi: InfinitesimalCharacter, n: int) -> list[ArthurParameter]:
    """All valid rank-n parameters with infinitesimal character chi.

    Blind search: take every multiset of candidate blocks whose dimensions
    sum to 2n+1, keep those whose segments reproduce the character, then try
    all character assignments on the unipotent blocks and keep the valid
    parameters.
    """
    target = Counter(chi.entries)
    top = max(chi.entries)
    candidates: list[tuple[str, tuple[int, int] | int, Counter, int]] = []
    for h in range(top + 1):
        candidates.append(("u", 2 * h + 1, _unip_segment(2 * h + 1), 2 * h + 1))
    for h in range(top + 1):
        for low in range(1 - h, h + 1):
            if h + low >= 1:
                t, a = h + low, h - low + 1
                candidates.append(("d", (t, a), _disc_segment(t, a), 2 * a))

    covers: list[tuple] = []
    used: Counter = Counter()

    def dfs(start: int, remaining: int, chosen: list) -> None:
        if remaining == 0:
            if used == target:
                covers.append(tuple(chosen))
            return
        for i in range(start, len(candidates)):
            kind, data, seg, dim = candidates[i]
            if dim > remaining:
                continue
            if any(used[v] + c > target[v] for v, c in seg.items()):
                continue
            used.update(seg)
            chosen.append((kind, data))
            dfs(i, remaining - dim, chosen)
            chosen.pop()
            used.subtract(seg)

    dfs(0, 2 * n + 1, [])

    out: set[ArthurParameter] = set()
    for cover in covers:
        unip_dims = [data for kind, data in cover if kind == "u"]
        disc_data = [data for kind, data in cover if kind == "d"]
        parity = sum(a for _, a in disc_data) % 2
        for chars in itertools.product((0, 1), repeat=len(unip_dims)):
            if sum(chars) % 2 != parity:
                continue
            psi = ArthurParameter(
                n,
                tuple(UnipotentBlock(c, d) for c, d in zip(chars, unip_dims)),
                tuple(DiscreteBlock(t, a) for t, a in disc_data),
            ).canonical()
            if not validate(psi):
                out.add(psi)
    return sorted(out)
