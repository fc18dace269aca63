"""Finite monoids as multiplication tables."""

from __future__ import annotations

from itertools import permutations, product

from .braided import BraidedSetError


class FiniteMonoid:
    """A multiplication table with a distinguished unit.

    table[i][j] is the index of the product of elements i and j.
    Associativity and the unit laws are verified at construction.
    """

    def __init__(self, table, unit: int = 0, names=None):
        tab = tuple(tuple(int(v) for v in row) for row in table)
        n = len(tab)
        for row in tab:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise BraidedSetError("malformed multiplication table")
        if not 0 <= unit < n:
            raise BraidedSetError("unit index out of range")
        for x in range(n):
            if tab[unit][x] != x or tab[x][unit] != x:
                raise BraidedSetError(f"unit law fails at element {x}")
        for x, y, z in product(range(n), repeat=3):
            if tab[tab[x][y]][z] != tab[x][tab[y][z]]:
                raise BraidedSetError(f"associativity fails at {(x, y, z)}")
        self.size = n
        self.unit = unit
        self.table = tab
        self.names = tuple(names) if names else tuple(str(i) for i in range(n))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def mul_all(self, xs) -> int:
        p = self.unit
        for x in xs:
            p = self.table[p][x]
        return p

    def is_submonoid(self, subset) -> bool:
        s = set(subset)
        return self.unit in s and all(self.table[x][y] in s for x in s for y in s)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteMonoid)
            and self.table == other.table
            and self.unit == other.unit
        )

    def __hash__(self) -> int:
        return hash((self.table, self.unit))

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size})"

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "unit": self.unit,
            "table": [v for row in self.table for v in row],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteMonoid":
        n = data["size"]
        flat = data["table"]
        if len(flat) != n * n:
            raise BraidedSetError("table length does not match declared size")
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        return cls(rows, unit=data.get("unit", 0))


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid(
        [[(i + j) % n for j in range(n)] for i in range(n)],
        names=[f"g{i}" for i in range(n)],
    )


def direct_product(a: FiniteMonoid, b: FiniteMonoid) -> FiniteMonoid:
    pairs = [(x, y) for x in range(a.size) for y in range(b.size)]
    index = {p: i for i, p in enumerate(pairs)}
    table = [
        [index[(a.mul(x1, x2), b.mul(y1, y2))] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    unit = index[(a.unit, b.unit)]
    names = [f"({a.names[x]},{b.names[y]})" for (x, y) in pairs]
    return FiniteMonoid(table, unit=unit, names=names)


def symmetric_group(n: int) -> FiniteMonoid:
    elems = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    # composition as functions: (p*q)(i) = p(q(i))
    table = [
        [index[tuple(p[q[i]] for i in range(n))] for q in elems] for p in elems
    ]
    return FiniteMonoid(table, unit=index[tuple(range(n))], names=[str(p) for p in elems])


def monoid_isomorphic(a: FiniteMonoid, b: FiniteMonoid):
    """Brute-force isomorphism search; returns a bijection or None."""
    if a.size != b.size:
        return None
    rest = [x for x in range(a.size) if x != a.unit]
    for image in permutations([y for y in range(b.size) if y != b.unit]):
        phi = {a.unit: b.unit}
        phi.update(zip(rest, image))
        if all(
            phi[a.mul(x, y)] == b.mul(phi[x], phi[y])
            for x in range(a.size)
            for y in range(a.size)
        ):
            return tuple(phi[x] for x in range(a.size))
    return None
