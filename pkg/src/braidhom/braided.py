"""Finite braided sets and the word combinatorics of idempotent braidings.

A braided set is a finite set X = {0, ..., n-1} together with a map
sigma : X x X -> X x X satisfying the Yang-Baxter equation on all triples.
Positive braid words act on tuples over X by applying sigma at adjacent
positions; for an idempotent sigma (sigma o sigma = sigma) the action
factors through the Coxeter (0-Hecke) monoid, whose longest element
computes a canonical normal form for every word - a generalized bubble
sort.  The product transported from word concatenation turns the set of
normal words into a monoid, and a pseudo-unit letter, when present, can
be erased to reach a reduced monoid.

Conventions, fixed once and for all:
  * sigma[x][y] = (a, b) is the output pair, so the strand entering at
    the right exits at the left carrying color a;
  * braid words are sequences of 1-indexed generator indices, and the
    RIGHTMOST generator acts first (diagrams read bottom to top);
  * failure witnesses are the lexicographically smallest counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

Word = tuple[int, ...]
Pair = tuple[int, int]


class BraidedSetError(ValueError):
    """Bad input to a braided-set operation (malformed table, index, word)."""


class BoundExceeded(RuntimeError):
    """An enumeration or closure ran past its configured resource bound."""


@dataclass
class CheckReport:
    holds: bool
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, tuple):
            w = list(w)
        return {"holds": self.holds, "witness": w, "detail": self.detail}


class BraidedSet:
    """A finite set with a total lookup table for sigma : X x X -> X x X."""

    def __init__(self, sigma, pseudo_unit: int | None = None, name: str = ""):
        table = tuple(tuple((int(a), int(b)) for (a, b) in row) for row in sigma)
        n = len(table)
        for row in table:
            if len(row) != n:
                raise BraidedSetError("sigma table is not square")
            for a, b in row:
                if not (0 <= a < n and 0 <= b < n):
                    raise BraidedSetError("sigma table entry out of range")
        if pseudo_unit is not None and not (0 <= pseudo_unit < n):
            raise BraidedSetError("pseudo-unit index out of range")
        self.size = n
        self.sigma = table
        self.pseudo_unit = pseudo_unit
        self.name = name or f"braided set (n={n})"
        self._ybe: CheckReport | None = None
        self._idem: CheckReport | None = None

    def pair(self, x: int, y: int) -> Pair:
        return self.sigma[x][y]

    def is_ybe(self) -> bool:
        if self._ybe is None:
            self._ybe = check_ybe(self)
        return self._ybe.holds

    def is_idempotent(self) -> bool:
        if self._idem is None:
            self._idem = check_idempotent(self)
        return self._idem.holds

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BraidedSet)
            and self.sigma == other.sigma
            and self.pseudo_unit == other.pseudo_unit
        )

    def __hash__(self) -> int:
        return hash((self.sigma, self.pseudo_unit))

    def __repr__(self) -> str:
        return f"BraidedSet({self.name!r})"

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "sigma": [[[a, b] for (a, b) in row] for row in self.sigma],
            "pseudo_unit": self.pseudo_unit,
        }

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "BraidedSet":
        if set(data) - {"size", "sigma", "pseudo_unit"}:
            raise BraidedSetError(f"unknown keys in braided-set data: {sorted(set(data) - {'size', 'sigma', 'pseudo_unit'})}")
        sigma = data["sigma"]
        if len(sigma) != data["size"]:
            raise BraidedSetError("declared size does not match sigma table")
        return cls(sigma, pseudo_unit=data.get("pseudo_unit"), name=name)


def check_ybe(bs: BraidedSet) -> CheckReport:
    """Exhaustively compare both sides of the Yang-Baxter equation on triples."""
    sig = bs.sigma
    for x, y, z in product(range(bs.size), repeat=3):
        p, q = sig[x][y]
        r, s = sig[q][z]
        u, v = sig[p][r]
        lhs = (u, v, s)
        a, b = sig[y][z]
        c, d = sig[x][a]
        e, f = sig[d][b]
        rhs = (c, e, f)
        if lhs != rhs:
            return CheckReport(False, (x, y, z), f"sides differ: {lhs} vs {rhs}")
    return CheckReport(True)


def check_idempotent(bs: BraidedSet) -> CheckReport:
    sig = bs.sigma
    for x, y in product(range(bs.size), repeat=2):
        a, b = sig[x][y]
        if sig[a][b] != (a, b):
            return CheckReport(False, (x, y), f"sigma{(x, y)} = {(a, b)} is not fixed")
    return CheckReport(True)


def apply_generator(bs: BraidedSet, w: Word, i: int) -> Word:
    """Apply sigma at positions (i, i+1) of w; positions are 1-indexed."""
    if not 1 <= i <= len(w) - 1:
        raise BraidedSetError("generator index exceeds strand count")
    a, b = bs.sigma[w[i - 1]][w[i]]
    return w[: i - 1] + (a, b) + w[i + 1 :]


def apply_braid_word(bs: BraidedSet, w: Word, gens) -> Word:
    """Act by a braid word on w, rightmost generator first."""
    letters = list(w)
    top = len(letters) - 1
    sig = bs.sigma
    for i in reversed(tuple(gens)):
        if not 1 <= i <= top:
            raise BraidedSetError("generator index exceeds strand count")
        a, b = letters[i - 1], letters[i]
        letters[i - 1], letters[i] = sig[a][b]
    return tuple(letters)


@lru_cache(maxsize=None)
def longest_word(k: int) -> tuple[int, ...]:
    """Reduced word of the longest Coxeter-monoid element on k strands."""
    out: list[int] = []
    for j in range(1, k):
        out.extend(range(j, 0, -1))
    return tuple(out)


def normal_form(bs: BraidedSet, w: Word) -> Word:
    """Canonical representative of w's class in the structure monoid.

    Acts by the longest braid word; for the min/max braiding this is
    literally bubble sort.  Requires an idempotent braiding.
    """
    if not bs.is_idempotent():
        raise BraidedSetError("delta normal form requires idempotent braiding")
    letters = list(w)
    sig = bs.sigma
    # the longest word, rightmost generator first, collapses to these sweeps
    for top in range(len(letters) - 1, 0, -1):
        for i in range(top):
            a, b = letters[i], letters[i + 1]
            letters[i], letters[i + 1] = sig[a][b]
    return tuple(letters)


def is_normal(bs: BraidedSet, w: Word) -> bool:
    sig = bs.sigma
    return all(sig[w[j]][w[j + 1]] == (w[j], w[j + 1]) for j in range(len(w) - 1))


def normal_words(bs: BraidedSet, max_len: int, avoid: int | None = None) -> list[Word]:
    """All normal words of length <= max_len, optionally avoiding one letter."""
    sig = bs.sigma
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    letters = [x for x in range(bs.size) if x != avoid]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in letters:
                if w and sig[w[-1]][x] != (w[-1], x):
                    continue
                nxt.append(w + (x,))
        out.extend(nxt)
        frontier = nxt
    return out


def normal_product(bs: BraidedSet, v: Word, w: Word) -> Word:
    """Product of normal words transported from concatenation: the normal
    form of vw.  Associative, with the empty word as unit."""
    if not (is_normal(bs, v) and is_normal(bs, w)):
        raise BraidedSetError("star product requires normal operands")
    return normal_form(bs, v + w)


def erase_letter(w: Word, e: int) -> Word:
    return tuple(x for x in w if x != e)


def reduced_normal_product(bs: BraidedSet, e: int, v: Word, w: Word) -> Word:
    """Product on pseudo-unit-free normal words; unit is the empty word."""
    if e in v or e in w:
        raise BraidedSetError("operands must avoid the pseudo-unit letter")
    return erase_letter(normal_product(bs, v, w), e)


def check_pseudo_unit(bs: BraidedSet, e: int, bound: int = 4) -> CheckReport:
    """Bounded verification of the pseudo-unit axioms for letter e.

    Condition 1 (sigma sends (e,x) and (x,e) into {(e,x),(x,e)}) is
    exhaustive.  Condition 2 (erasing an occurrence of e from a normal
    word leaves it normal) quantifies over all normal words, so it is
    checked on every normal word of length <= 2*bound, covering base
    words of length <= bound with up to `bound` occurrences of e
    inserted.  The report records the bound used.
    """
    if not bs.is_idempotent():
        raise BraidedSetError("pseudo-unit check requires idempotent braiding")
    sig = bs.sigma
    for x in range(bs.size):
        allowed = {(e, x), (x, e)}
        if sig[e][x] not in allowed or sig[x][e] not in allowed:
            return CheckReport(False, x, f"condition 1 fails at x={x} (bound={bound})")
    for w in normal_words(bs, 2 * bound):
        for p, letter in enumerate(w):
            if letter != e:
                continue
            if 1 <= p <= len(w) - 2:
                a, b = w[p - 1], w[p + 1]
                if sig[a][b] != (a, b):
                    return CheckReport(
                        False, (w, p), f"condition 2 fails erasing position {p} (bound={bound})"
                    )
    return CheckReport(True, detail=f"conditions 1-2 verified, bound={bound}")


def adjoin_unit(bs: BraidedSet) -> BraidedSet:
    """Extend sigma to X u {1} by sigma(x,1) = sigma(1,x) = (1,x).

    For an idempotent braiding this produces a pseudo-unital braided set
    whose reduced structure monoid is the structure monoid of bs; the
    new letter is appended with index n.
    """
    n = bs.size
    e = n
    table = [[None] * (n + 1) for _ in range(n + 1)]
    for x in range(n):
        for y in range(n):
            table[x][y] = bs.sigma[x][y]
    for x in range(n + 1):
        table[x][e] = (e, x)
        table[e][x] = (e, x)
    table[e][e] = (e, e)
    return BraidedSet(table, pseudo_unit=e, name=f"{bs.name} + formal unit")


# --- permutations and their canonical braid-word lifts -------------------

def inversions(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def invert_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return tuple(inv)


def reduced_word(perm: tuple[int, ...], from_right: bool = False) -> tuple[int, ...]:
    """A reduced word for a permutation (0-indexed one-line notation),
    as 1-indexed generator indices.

    Bubble-sorts the one-line notation, clearing the leftmost descent
    (or the rightmost one with from_right=True, giving an independent
    reduced word for cross-checking actions).
    """
    t = list(perm)
    recorded: list[int] = []
    while True:
        descents = [i for i in range(len(t) - 1) if t[i] > t[i + 1]]
        if not descents:
            break
        i = descents[-1] if from_right else descents[0]
        t[i], t[i + 1] = t[i + 1], t[i]
        recorded.append(i + 1)
    return tuple(reversed(recorded))


@lru_cache(maxsize=None)
def block_word(m: int, n: int) -> tuple[int, ...]:
    """Braid word moving the last n strands across the first m (the
    braiding of X^m with X^n at the word level)."""
    if m == 0 or n == 0:
        return ()
    perm = tuple(n + i for i in range(m)) + tuple(range(n))
    return reduced_word(perm)


def word_braiding(bs: BraidedSet, v: Word, w: Word) -> tuple[Word, Word]:
    """sigma extended to words: (v, w) -> (w', v')."""
    res = apply_braid_word(bs, v + w, block_word(len(v), len(w)))
    return res[: len(w)], res[len(w) :]


def act_right(bs: BraidedSet, w: Word, z: int) -> Word:
    """Right adjoint action of the letter z on the word w."""
    res = apply_braid_word(bs, w + (z,), block_word(len(w), 1))
    return res[1:]


def act_left(bs: BraidedSet, z: int, w: Word) -> Word:
    """Left adjoint action of the letter z on the word w."""
    res = apply_braid_word(bs, (z,) + w, block_word(1, len(w)))
    return res[:-1]


def move_strand_left(bs: BraidedSet, w: Word, i: int) -> tuple[int, Word]:
    """Carry strand i of w over strands i-1, ..., 1.

    Returns (final color of the moved strand, transformed prefix of
    length i-1); the suffix w[i:] is untouched.
    """
    seg = list(w[:i])
    sig = bs.sigma
    for j in range(i - 1, 0, -1):
        a, b = seg[j - 1], seg[j]
        seg[j - 1], seg[j] = sig[a][b]
    return seg[0], tuple(seg[1:])


def move_strand_right(bs: BraidedSet, w: Word, i: int) -> tuple[int, Word]:
    """Carry strand i of w over strands i+1, ..., k.

    Returns (final color of the moved strand, transformed suffix of
    length k-i); the prefix w[:i-1] is untouched.
    """
    seg = list(w[i - 1 :])
    sig = bs.sigma
    for j in range(1, len(seg)):
        a, b = seg[j - 1], seg[j]
        seg[j - 1], seg[j] = sig[a][b]
    return seg[-1], tuple(seg[:-1])


# --- braided-semigroup verification ---------------------------------------

def verify_braided_semigroup(bs: BraidedSet, max_len: int) -> CheckReport:
    """Check that normal words with the transported product and the
    word-level braiding form a braided commutative monoid, and that the
    braiding followed by concatenation recovers the product.

    All identities are tested on normal words of length <= max_len.
    """
    if not bs.is_idempotent():
        raise BraidedSetError("braided-semigroup check requires idempotent braiding")
    words = normal_words(bs, max_len)

    def braid(v: Word, w: Word) -> tuple[Word, Word]:
        return word_braiding(bs, v, w)

    for v in words:
        for w in words:
            w1, v1 = braid(v, w)
            if not (is_normal(bs, w1) and is_normal(bs, v1)):
                return CheckReport(False, (v, w), "braiding leaves normal words")
            if w1 + v1 != normal_product(bs, v, w):
                return CheckReport(False, (v, w), "braiding + concatenation != product")
            if normal_product(bs, w1, v1) != normal_product(bs, v, w):
                return CheckReport(False, (v, w), "braided commutativity fails")
    for u in words:
        for v in words:
            uv = normal_product(bs, u, v)
            for w in words:
                w1, v1 = braid(v, w)
                w2, u1 = braid(u, w1)
                if braid(uv, w) != (w2, normal_product(bs, u1, v1)):
                    return CheckReport(False, (u, v, w), "product-in-first-slot law fails")
                v2, u2 = braid(u, v)
                w3, u3 = braid(u2, w)
                if braid(u, normal_product(bs, v, w)) != (normal_product(bs, v2, w3), u3):
                    return CheckReport(False, (u, v, w), "product-in-second-slot law fails")
    return CheckReport(True, detail=f"checked {len(words)} normal words, max_len={max_len}")
