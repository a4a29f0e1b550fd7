"""Specific Weyl elements of symplectic groups and shortest conjugators
between labelled diagonal patterns."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .groups import WeylElement, complete_partial_weyl, mirror, omega_sign, weyl_from_placements
from .matrix import Field
from .scalars import QQ


def weyl_theta03(l: int, field: Field = QQ) -> WeylElement:
    """w_{i,2i-1} = 1 for i <= l, completed in Sp_{2l}."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return weyl_from_placements(2 * l, {i: (2 * i - 1, 1) for i in range(1, l + 1)}, field)


def theta02_placements(r: int, l: int) -> dict[int, tuple[int, int]]:
    """First-half rows of the Weyl element of Sp_{2(l+r)} with corner
    blocks eps_1, eps_2 in Mat_r and I_{2l} in the middle."""
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    if l < 0:
        raise ValueError("l must be >= 0")
    off2 = r + 2 * l  # eps_2 sits in the last r columns
    place = {i: (2 * i - 1, 1) for i in range(1, (r + 1) // 2 + 1)}
    for i in range(0, (r - 3) // 2 + 1):
        place[i + (r + 3) // 2] = (off2 + 2 * i + 2, 1)
    for j in range(1, l + 1):
        place[r + j] = (r + j, 1)
    return place


def weyl_theta02(r: int, l: int, field: Field = QQ) -> WeylElement:
    return weyl_from_placements(2 * (l + r), theta02_placements(r, l), field)


def _to_first_half(two_n: int, row: int, col: int, sign: int) -> tuple[int, int, int]:
    """Re-express a placement in a second-half row through its mirror row."""
    if row <= two_n // 2:
        return row, col, sign
    rm, cm = mirror(row, two_n), mirror(col, two_n)
    return rm, cm, sign * omega_sign(rm, two_n) * omega_sign(cm, two_n)


def weyl_hook_exchange(alpha: int, l: int, n: int, k: int, r: int,
                       extension: dict[int, tuple[int, int]] | None = None,
                       shift: int = 0, field: Field = QQ) -> WeylElement:
    """w_{i,(i-1)alpha+1} = w_{l+i, 2n+k(r-1)-(l-i+1)alpha+shift} = 1 for i <= l,
    extended to a Weyl element of Sp_{2n+k(r-1)}.

    With shift = 0 the two column sets meet at alpha + 1 (up to mirroring) as
    soon as l >= 2, and construction raises. shift = 1 puts the i = 1 entry
    at column 2n+k(r-1)-l alpha+1 and is consistent for alpha >= 2.

    Rows left free by these rules are filled from ``extension`` (first-half
    row -> (column, sign)); any still free get the smallest unused column.
    """
    two_n = 2 * n + k * (r - 1)
    fixed: dict[int, tuple[int, int]] = {}
    cols: dict[int, int] = {}
    for i in range(1, l + 1):
        for row, col in ((i, (i - 1) * alpha + 1),
                         (l + i, two_n - (l - i + 1) * alpha + shift)):
            if not (1 <= row <= two_n and 1 <= col <= two_n):
                raise ValueError(f"placement ({row}, {col}) outside size {two_n}")
            fr, fc, fs = _to_first_half(two_n, row, col, 1)
            if fr in fixed and fixed[fr] != (fc, fs):
                raise ValueError(f"conflicting placements in row {fr}")
            key = min(fc, mirror(fc, two_n))
            if cols.get(key, fr) != fr:
                raise ValueError(f"column {fc} (or its mirror) placed in rows {cols[key]} and {fr}")
            cols[key] = fr
            fixed[fr] = (fc, fs)
    return complete_partial_weyl(two_n, fixed, extension, field)


def cusp_placements(alpha: int, beta: int, r: int, n: int) -> list[tuple[int, int, str]]:
    """1-based (row, col, tag) of every 1 in w_1 (cols 1..k r1) and
    w_2 (cols k r1 + 2n + 1 ..), tag naming the rule that placed it."""
    if alpha < 1 or beta < 0:
        raise ValueError("need alpha >= 1 and beta >= 0")
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    k = 2 * alpha + beta
    r1 = (r - 1) // 2
    w2_off = k * r1 + 2 * n
    out = []
    for i in range(1, r1 + 1):
        for q in range(alpha):
            out.append((alpha * (i - 1) + 1 + q, k * (i - 1) + 1 + q, "w1_alpha"))
            out.append((alpha * r1 + alpha * (i - 1) + 1 + q, w2_off + k * (i - 1) + 1 + q, "w2_alpha"))
        for q in range(beta):
            out.append((alpha * (r - 1) + beta * (i - 1) + 1 + q,
                        k * (i - 1) + alpha + 1 + q, "w1_beta"))
    return out


def weyl_cusp(alpha: int, beta: int, r: int, n: int, field: Field = QQ) -> WeylElement:
    """The element [[w_1, 0, w_2], [0, I_2n, 0], [w_3, 0, w_4]] of Sp_{2n+k(r-1)}."""
    k = 2 * alpha + beta
    r1 = (r - 1) // 2
    two_n = 2 * n + k * (r - 1)
    place: dict[int, tuple[int, int]] = {}
    for row, col, tag in cusp_placements(alpha, beta, r, n):
        if row in place:
            raise ValueError(f"overlapping placements in row {row} ({tag})")
        place[row] = (col, 1)
    for j in range(1, n + 1):
        place[k * r1 + j] = (k * r1 + j, 1)
    return weyl_from_placements(two_n, place, field)


def cusp_block_layout(alpha: int, beta: int, r: int, n: int) -> tuple[set, set]:
    """Which blocks of w_1 and w_2 hold identity matrices, as 1-based
    (block row, block col) pairs. Block rows are alpha x (r-1) then beta x r1;
    block cols are (alpha, beta, alpha) repeated r1 times."""
    w = weyl_cusp(alpha, beta, r, n)
    k = 2 * alpha + beta
    r1 = (r - 1) // 2
    row_sizes = [alpha] * (r - 1) + [beta] * r1
    col_sizes = [alpha, beta, alpha] * r1
    M = w.matrix

    def blocks(col0: int) -> set:
        found = set()
        ro = 0
        for bi, rs in enumerate(row_sizes, start=1):
            co = 0
            for bj, cs in enumerate(col_sizes, start=1):
                if rs and cs:
                    sub = M.block(ro, ro + rs, col0 + co, col0 + co + cs)
                    if not sub.is_zero():
                        if rs != cs or not sub.is_identity():
                            raise AssertionError(f"block ({bi},{bj}) is not an identity")
                        found.add((bi, bj))
                co += cs
            ro += rs
        return found

    return blocks(0), blocks(k * r1 + 2 * n)


# labelled diagonal patterns

@dataclass(frozen=True)
class Coord:
    """A diagonal coordinate symbol^exp; the symbol '1' is the constant."""

    symbol: str
    exp: int = 1

    def mirror(self) -> "Coord":
        return self if self.symbol == "1" else Coord(self.symbol, -self.exp)

    def __str__(self):
        if self.symbol == "1":
            return "1"
        return self.symbol if self.exp == 1 else f"{self.symbol}^{self.exp}"


@dataclass(frozen=True)
class BlockPattern:
    """Ordered labelled blocks of a diagonal torus element of Sp_{2N}."""

    blocks: tuple[tuple[str, tuple[Coord, ...]], ...]

    def __post_init__(self):
        cs = self.coords()
        n = len(cs)
        if n % 2:
            raise ValueError("pattern size must be even")
        for i in range(n):
            if cs[n - 1 - i] != cs[i].mirror():
                raise ValueError(f"coordinates {i + 1} and {n - i} are not mirror partners")

    def coords(self) -> tuple[Coord, ...]:
        return tuple(c for _, cs in self.blocks for c in cs)

    def labels(self) -> list[tuple[str, int]]:
        return [(lab, len(cs)) for lab, cs in self.blocks]

    @property
    def size(self) -> int:
        return len(self.coords())

    def evaluate(self, values: dict[str, object], field: Field = QQ) -> list:
        out = []
        for c in self.coords():
            if c.symbol == "1":
                out.append(field.one)
            else:
                v = field.coerce(values[c.symbol])
                out.append(v if c.exp == 1 else field.inv(v))
        return out

    def symbols(self) -> set[str]:
        return {c.symbol for c in self.coords() if c.symbol != "1"}


def _stable_matching(src: Sequence[Coord], dst: Sequence[Coord]) -> list[int]:
    """pi with dst[pi[j]] = src[j], preserving order among equal labels."""
    if Counter(src) != Counter(dst):
        raise ValueError("destination is not a rearrangement of the source")
    slots = defaultdict(list)
    for pos, c in enumerate(dst):
        slots[c].append(pos)
    used = Counter()
    pi = []
    for c in src:
        pi.append(slots[c][used[c]])
        used[c] += 1
    return pi


def inversions(pi: Sequence[int]) -> int:
    return sum(1 for a in range(len(pi)) for b in range(a + 1, len(pi)) if pi[a] > pi[b])


def shortest_conjugator(src: BlockPattern, dst: BlockPattern, field: Field = QQ) -> WeylElement:
    """Weyl element w with w diag(src) w^{-1} = diag(dst) whose coordinate
    permutation has the fewest inversions; signs are +1 on first-half rows."""
    s, d = src.coords(), dst.coords()
    if len(s) != len(d):
        raise ValueError("patterns have different sizes")
    pi = _stable_matching(s, d)
    n = len(s)
    for j in range(n):
        if pi[n - 1 - j] != n - 1 - pi[j]:
            raise AssertionError("matching does not commute with the mirror")
    place = {pi[j] + 1: (j + 1, 1) for j in range(n) if pi[j] < n // 2}
    return weyl_from_placements(n, place, field)


def brute_force_min_inversions(src: BlockPattern, dst: BlockPattern) -> int:
    """Minimum inversions over every mirror-compatible relabelling; small patterns only."""
    s, d = src.coords(), dst.coords()
    n = len(s)
    if n > 8:
        raise ValueError("brute force limited to patterns of length <= 8")
    best = None
    for pi in permutations(range(n)):
        if any(d[pi[j]] != s[j] for j in range(n)):
            continue
        if any(pi[n - 1 - j] != n - 1 - pi[j] for j in range(n)):
            continue
        inv = inversions(pi)
        best = inv if best is None or inv < best else best
    if best is None:
        raise ValueError("no valid permutation")
    return best


def _so_block(sym: str, k: int) -> tuple[Coord, ...]:
    m = k // 2
    first = [Coord(f"{sym}{i}") for i in range(1, m + 1)]
    mid = [Coord("1")] if k % 2 else []
    return tuple(first + mid + [c.mirror() for c in reversed(first)])


def unramified_patterns(r: int, k: int, n: int) -> tuple[BlockPattern, BlockPattern]:
    """diag(B, ..., B, A, B*, ..., B*) and its rearrangement
    diag(b, ..., b, a, h', ..., h', g', h'*, ..., h'*, 1/a, 1/b, ..., 1/b).

    B = diag(b, h', 1/b) with h' in the SO_{k-2} torus, and
    A = diag(a, g', 1/a) with g' in the Sp_{2n-2} torus.
    """
    if r < 3 or r % 2 == 0:
        raise ValueError(f"r must be odd and >= 3, got {r}")
    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    r1 = (r - 1) // 2
    b, a = Coord("b"), Coord("a")
    hp = _so_block("h", k - 2)
    gp = _so_block("g", 2 * n - 2)
    B = (b,) + hp + (b.mirror(),)
    A = (a,) + gp + (a.mirror(),)
    Bstar = tuple(c.mirror() for c in reversed(B))
    src = BlockPattern(tuple([("B", B)] * r1 + [("A", A)] + [("B*", Bstar)] * r1))
    hstar = tuple(c.mirror() for c in reversed(hp))
    dst_blocks = [("b", (b,))] * (r - 1) + [("a", (a,))]
    dst_blocks += [("h'", hp)] * r1 + [("g'", gp)] + [("h'*", hstar)] * r1
    dst_blocks += [("a^-1", (a.mirror(),))] + [("b^-1", (b.mirror(),))] * (r - 1)
    dst = BlockPattern(tuple((lab, cs) for lab, cs in dst_blocks if cs))
    src = BlockPattern(tuple((lab, cs) for lab, cs in src.blocks if cs))
    return src, dst


def pattern_from_labels(labels: Sequence[str]) -> BlockPattern:
    """One-coordinate blocks from strings like 'b', 'b^-1', '1'."""
    blocks = []
    for s in labels:
        if s == "1":
            c = Coord("1")
        elif s.endswith("^-1"):
            c = Coord(s[:-3], -1)
        else:
            c = Coord(s)
        blocks.append((s, (c,)))
    return BlockPattern(tuple(blocks))
