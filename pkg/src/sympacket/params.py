"""Arthur parameters of Sp(2n,R) with integral infinitesimal character.

A parameter is a multiset of blocks of total dimension 2n+1:

* unipotent blocks ``eta ⊠ R[a']`` -- a quadratic character of the real Weil
  group (trivial or sign) tensored with the a'-dimensional irreducible of
  SL(2,C), a' odd;
* discrete blocks ``delta_t ⊠ R[a]`` -- the two dimensional Weil group
  representation of parameter t >= 1 tensored with R[a], with t + a odd.

Validity further requires the dimension count ``sum a'_i + 2 sum a_j = 2n+1``
and the determinant condition: the product of the quadratic characters equals
sgn raised to the number of discrete blocks with odd a.

Blocks are kept in a canonical order (discrete: t decreasing, ties by a
decreasing; unipotent: dimension decreasing, ties trivial before sign) so
that multiset equality is tuple equality.  ``enumerate_params`` produces the
complete duplicate-free list of valid parameters with a prescribed
infinitesimal character by covering the character multiset with centered
segments (unipotent) and mirrored off-center segments (discrete).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .weights import InfinitesimalCharacter

__all__ = [
    "CHAR_TRIV",
    "CHAR_SGN",
    "UnipotentBlock",
    "DiscreteBlock",
    "ArthurParameter",
    "validate",
    "inf_char_of_param",
    "a_psi",
    "a_psi_u",
    "twist_sgn",
    "hw_shape_check",
    "contains_block",
    "remove_discrete_block",
    "enumerate_params",
    "char_name",
    "char_from_name",
]

CHAR_TRIV = 0
CHAR_SGN = 1

# validation codes
DIM_SUM = "DIM_SUM"
PARITY_PRODUCT = "PARITY_PRODUCT"
BLOCK_SHAPE = "BLOCK_SHAPE"
ORDER = "ORDER"


def char_name(char: int) -> str:
    return "triv" if char % 2 == 0 else "sgn"


def char_from_name(name: str) -> int:
    try:
        return {"triv": CHAR_TRIV, "sgn": CHAR_SGN}[name]
    except KeyError:
        raise ValueError(f"unknown character {name!r}") from None


@dataclass(frozen=True, order=True)
class UnipotentBlock:
    """Quadratic character (0 = trivial, 1 = sign) times R[dim], dim odd."""

    char: int
    dim: int

    def __str__(self) -> str:
        return f"{char_name(self.char)}⊠R[{self.dim}]"


@dataclass(frozen=True, order=True)
class DiscreteBlock:
    """Two dimensional Weil group block delta_t times R[a], t + a odd.

    Its contribution to the infinitesimal character is the integer segment
    [bottom, top] together with its mirror image.
    """

    t: int
    a: int

    @property
    def top(self) -> int:
        return (self.t + self.a - 1) // 2

    @property
    def bottom(self) -> int:
        return (self.t - self.a + 1) // 2

    def __str__(self) -> str:
        return f"δ_{self.t}⊠R[{self.a}]"


def _unip_key(block: UnipotentBlock) -> tuple[int, int]:
    return (-block.dim, block.char)


def _disc_key(block: DiscreteBlock) -> tuple[int, int]:
    return (-block.t, -block.a)


@dataclass(frozen=True, order=True)
class ArthurParameter:
    """Block multiset of total dimension 2n+1, stored in canonical order.

    Rank 0 is permitted (the one-block parameter of the trivial group); it
    arises when discrete blocks are stripped off recursively.
    """

    n: int
    unipotent: tuple[UnipotentBlock, ...]
    discrete: tuple[DiscreteBlock, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "unipotent", tuple(self.unipotent))
        object.__setattr__(self, "discrete", tuple(self.discrete))

    def canonical(self) -> "ArthurParameter":
        return ArthurParameter(
            self.n,
            tuple(sorted(self.unipotent, key=_unip_key)),
            tuple(sorted(self.discrete, key=_disc_key)),
        )

    @property
    def dim_unipotent(self) -> int:
        return sum(b.dim for b in self.unipotent)

    @property
    def dim_discrete(self) -> int:
        return 2 * sum(b.a for b in self.discrete)

    def __str__(self) -> str:
        parts = [str(b) for b in self.discrete] + [str(b) for b in self.unipotent]
        return " ⊕ ".join(parts)


def validate(psi: ArthurParameter) -> list[str]:
    """Check all parameter invariants; return the list of violation codes.

    Codes: BLOCK_SHAPE (bad block data or negative rank), DIM_SUM (dimension
    count off), PARITY_PRODUCT (determinant condition fails), ORDER (blocks
    not canonically sorted).  An empty list means the parameter is valid.
    """
    codes: list[str] = []
    shape_ok = psi.n >= 0
    for b in psi.unipotent:
        if b.char not in (CHAR_TRIV, CHAR_SGN) or b.dim < 1 or b.dim % 2 == 0:
            shape_ok = False
    for b in psi.discrete:
        if b.t < 1 or b.a < 1 or (b.t + b.a) % 2 == 0:
            shape_ok = False
    if not shape_ok:
        codes.append(BLOCK_SHAPE)
    if psi.dim_unipotent + psi.dim_discrete != 2 * psi.n + 1:
        codes.append(DIM_SUM)
    char_parity = sum(b.char for b in psi.unipotent) % 2
    odd_discrete = sum(1 for b in psi.discrete if b.a % 2 == 1) % 2
    if char_parity != odd_discrete:
        codes.append(PARITY_PRODUCT)
    if psi != psi.canonical():
        codes.append(ORDER)
    return codes


def inf_char_of_param(psi: ArthurParameter) -> InfinitesimalCharacter:
    """Infinitesimal character of the packet attached to the parameter.

    Each unipotent block contributes the centered segment of its dimension,
    each discrete block the segment [bottom, top] plus its mirror image.
    """
    entries: list[int] = []
    for b in psi.unipotent:
        half = (b.dim - 1) // 2
        entries.extend(range(-half, half + 1))
    for b in psi.discrete:
        entries.extend(range(b.bottom, b.top + 1))
        entries.extend(range(-b.top, -b.bottom + 1))
    return InfinitesimalCharacter(tuple(entries))


def a_psi(psi: ArthurParameter) -> int:
    """Largest SL(2)-dimension occurring in any block."""
    dims = [b.dim for b in psi.unipotent] + [b.a for b in psi.discrete]
    if not dims:
        raise ValueError("parameter has no blocks")
    return max(dims)


def a_psi_u(psi: ArthurParameter) -> int:
    """Largest SL(2)-dimension occurring in the unipotent part."""
    if not psi.unipotent:
        raise ValueError("unipotent part is empty")
    return max(b.dim for b in psi.unipotent)


def twist_sgn(
    blocks: tuple[UnipotentBlock, ...], dim_discrete: int
) -> tuple[UnipotentBlock, ...]:
    """Twist unipotent blocks by sgn^{dim_discrete/2}.

    This is the correction making the unipotent part a parameter of the
    smaller symplectic group.  Discrete blocks absorb sign twists, so they
    never change.
    """
    if dim_discrete % 2 != 0:
        raise ValueError("discrete part has even dimension")
    exponent = (dim_discrete // 2) % 2
    if exponent == 0:
        return tuple(blocks)
    twisted = tuple(UnipotentBlock((b.char + 1) % 2, b.dim) for b in blocks)
    return tuple(sorted(twisted, key=_unip_key))


def hw_shape_check(psi: ArthurParameter) -> bool:
    """Block constraints forced when the packet can meet a highest weight module.

    (i) The unipotent part has 1 or 3 blocks, and with 3 blocks at least one
    is one dimensional.  (ii) At most one discrete block satisfies
    ``t - a + 1 <= 0``; if one does, the unipotent part is a single block,
    of dimension 1 when the inequality is strict.
    """
    r = len(psi.unipotent)
    if r not in (1, 3):
        return False
    if r == 3 and min(b.dim for b in psi.unipotent) != 1:
        return False
    flat = [b for b in psi.discrete if b.t - b.a + 1 <= 0]
    if len(flat) > 1:
        return False
    if flat:
        if r != 1:
            return False
        if flat[0].t - flat[0].a + 1 < 0 and psi.unipotent[0].dim != 1:
            return False
    return True


def contains_block(psi: ArthurParameter, block: UnipotentBlock | DiscreteBlock) -> bool:
    if isinstance(block, UnipotentBlock):
        return block in psi.unipotent
    return block in psi.discrete


def remove_discrete_block(psi: ArthurParameter, index: int) -> ArthurParameter:
    """Strip the discrete block at ``index`` and retwist the remainder.

    Removing ``delta_t ⊠ R[a]`` drops the rank by a and multiplies every
    unipotent character by sgn^a, so the result is again a valid parameter.
    """
    removed = psi.discrete[index]
    rest = psi.discrete[:index] + psi.discrete[index + 1 :]
    unip = twist_sgn(psi.unipotent, 2 * removed.a)
    return ArthurParameter(psi.n - removed.a, unip, rest).canonical()


# --- enumeration -----------------------------------------------------------

_Cover = tuple[tuple[int, ...], tuple[tuple[int, int], ...]]


def _sub_multiset(cnt: dict[int, int], seg: list[int]) -> dict[int, int] | None:
    need = Counter(seg)
    for v, k in need.items():
        if cnt.get(v, 0) < k:
            return None
    out = dict(cnt)
    for v, k in need.items():
        out[v] -= k
        if out[v] == 0:
            del out[v]
    return out


def _all_segment_covers(entries: tuple[int, ...]) -> frozenset[_Cover]:
    """All ways of writing the multiset as segments of the two block kinds.

    A cover is a pair (multiset of unipotent dimensions, multiset of (t, a)
    discrete data).  The search always covers the current maximum element,
    either by the centered segment topped there or by a mirrored segment
    pair [l, M] ∪ [-M, -l] with l > -M; results are canonicalized, so each
    cover is reported once.
    """
    memo: dict[tuple[tuple[int, int], ...], frozenset[_Cover]] = {}

    def rec(cnt: dict[int, int]) -> frozenset[_Cover]:
        if not cnt:
            return frozenset({((), ())})
        key = tuple(sorted(cnt.items()))
        if key in memo:
            return memo[key]
        top = max(cnt)
        found: set[_Cover] = set()
        if top >= 0:
            rest = _sub_multiset(cnt, list(range(-top, top + 1)))
            if rest is not None:
                dim = 2 * top + 1
                for unip, disc in rec(rest):
                    found.add(
                        (tuple(sorted(unip + (dim,), reverse=True)), disc)
                    )
        for low in range(top, -top, -1):
            if top + low < 1:
                break
            seg = list(range(low, top + 1)) + list(range(-top, -low + 1))
            rest = _sub_multiset(cnt, seg)
            if rest is None:
                continue
            block = (top + low, top - low + 1)  # (t, a)
            for unip, disc in rec(rest):
                merged = tuple(sorted(disc + (block,), key=lambda x: (-x[0], -x[1])))
                found.add((unip, merged))
        memo[key] = frozenset(found)
        return memo[key]

    return rec(dict(Counter(entries)))


def _char_assignments(dims: tuple[int, ...], parity: int):
    """Character multisets on unipotent blocks with prescribed sign parity."""
    groups = sorted(Counter(dims).items(), reverse=True)
    for picks in itertools.product(*(range(c + 1) for _, c in groups)):
        if sum(picks) % 2 != parity:
            continue
        blocks: list[UnipotentBlock] = []
        for (dim, count), k in zip(groups, picks):
            blocks.extend([UnipotentBlock(CHAR_TRIV, dim)] * (count - k))
            blocks.extend([UnipotentBlock(CHAR_SGN, dim)] * k)
        yield tuple(sorted(blocks, key=_unip_key))


def enumerate_params(
    chi: InfinitesimalCharacter, n: int, max_rank: int = 12
) -> list[ArthurParameter]:
    """All valid parameters of rank n with inf. character chi, canonicalized.

    The rank is capped by ``max_rank`` (default 12) since the cover search is
    combinatorial; raise the cap explicitly for larger experiments.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    if n > max_rank:
        raise ValueError(f"rank {n} exceeds the enumeration cap {max_rank}")
    if chi.rank != n:
        raise ValueError("character length must be 2n+1")
    out: set[ArthurParameter] = set()
    for unip_dims, disc_data in _all_segment_covers(chi.entries):
        discrete = tuple(DiscreteBlock(t, a) for t, a in disc_data)
        parity = sum(1 for b in discrete if b.a % 2 == 1) % 2
        for unip in _char_assignments(unip_dims, parity):
            psi = ArthurParameter(n, unip, discrete).canonical()
            if not validate(psi):
                out.add(psi)
    return sorted(out)
