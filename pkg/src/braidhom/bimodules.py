"""Linear coefficients for braided homology: modules and bimodules over a
braided set, given by one integer action matrix per letter.

Matrix convention: coefficients are column vectors, so acting by x then y
on the right composes as R_y * R_x, and on the left as L_y * L_x applied
inside-out (x nearest the module element acts first).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .braided import BraidedSet, CheckReport
from .monoid import FiniteMonoid
from .zlinalg import IntMatrix


class Bimodule:
    """A finitely generated free Z-module with per-letter actions.

    Either side may be absent (left-only or right-only modules); `left[x]`
    and `right[x]` are r x r IntMatrix values indexed by the letters of
    the owning braided set (or the elements of a monoid, for bar
    complexes).
    """

    def __init__(self, n_letters, rank, left=None, right=None, labels=None, name=""):
        self.n_letters = n_letters
        self.rank = rank
        self.left = list(left) if left is not None else None
        self.right = list(right) if right is not None else None
        for side in (self.left, self.right):
            if side is not None:
                if len(side) != n_letters:
                    raise ValueError("need one action matrix per letter")
                for m in side:
                    if m.rows != rank or m.cols != rank:
                        raise ValueError("action matrix shape mismatch")
        self.labels = list(labels) if labels else [f"m{i}" for i in range(rank)]
        self.name = name
        self._left_cols = None
        self._right_cols = None

    @property
    def has_left(self) -> bool:
        return self.left is not None

    @property
    def has_right(self) -> bool:
        return self.right is not None

    def _columns(self, side):
        return [
            [[(i, m.data[i][j]) for i in range(self.rank) if m.data[i][j]] for j in range(self.rank)]
            for m in side
        ]

    def left_col(self, x: int, j: int):
        """Sparse column of L_x: the expansion of x . e_j."""
        if self._left_cols is None:
            self._left_cols = self._columns(self.left)
        return self._left_cols[x][j]

    def right_col(self, x: int, j: int):
        if self._right_cols is None:
            self._right_cols = self._columns(self.right)
        return self._right_cols[x][j]

    def to_json(self) -> dict:
        out = {"rank": self.rank, "basis": self.labels}
        if self.has_left:
            out["left"] = {str(x): [v for row in m.data for v in row] for x, m in enumerate(self.left)}
        if self.has_right:
            out["right"] = {str(x): [v for row in m.data for v in row] for x, m in enumerate(self.right)}
        return out

    @classmethod
    def from_json(cls, data: dict, n_letters: int) -> "Bimodule":
        r = data["rank"]

        def side(key):
            if key not in data:
                return None
            mats = []
            for x in range(n_letters):
                flat = data[key][str(x)]
                mats.append(IntMatrix(r, r, [flat[i * r : (i + 1) * r] for i in range(r)]))
            return mats

        return cls(n_letters, r, left=side("left"), right=side("right"), labels=data.get("basis"))


class BimoduleAlgebra(Bimodule):
    """A bimodule with a basis-indexed associative product.

    product[i][j] is the coefficient vector of the product of basis
    elements i and j.
    """

    def __init__(self, n_letters, rank, left, right, product_table, labels=None, name=""):
        super().__init__(n_letters, rank, left, right, labels, name)
        self.product = [
            [tuple(int(v) for v in cell) for cell in row] for row in product_table
        ]
        if len(self.product) != rank or any(len(row) != rank for row in self.product):
            raise ValueError("product table shape mismatch")

    def multiply(self, u, v):
        """Bilinear extension of the basis product to coefficient vectors."""
        out = [0] * self.rank
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                cell = self.product[i][j]
                for t in range(self.rank):
                    if cell[t]:
                        out[t] += a * b * cell[t]
        return tuple(out)

    def to_json(self) -> dict:
        out = super().to_json()
        out["product"] = [[list(cell) for cell in row] for row in self.product]
        return out


def trivial_bimodule(bs: BraidedSet, rank: int = 1, labels=None) -> Bimodule:
    ident = [IntMatrix.identity(rank) for _ in range(bs.size)]
    return Bimodule(bs.size, rank, left=list(ident), right=list(ident), labels=labels, name="trivial")


def trivial_ring_algebra(bs: BraidedSet) -> BimoduleAlgebra:
    """Z with trivial actions and its ring product, as a bimodule-algebra."""
    ident = [IntMatrix.identity(1) for _ in range(bs.size)]
    return BimoduleAlgebra(bs.size, 1, list(ident), list(ident), [[(1,)]], name="Z")


def adjoint_right_module(bs: BraidedSet) -> Bimodule:
    """ZX with the right action  e_x . y = e_{x'} where sigma(x,y) = (y', x')."""
    n = bs.size
    mats = []
    for y in range(n):
        m = IntMatrix(n, n)
        for x in range(n):
            m.data[bs.sigma[x][y][1]][x] += 1
        mats.append(m)
    return Bimodule(n, n, right=mats, labels=[f"x{i}" for i in range(n)], name="adjoint right")


def adjoint_left_module(bs: BraidedSet) -> Bimodule:
    """ZX with the left action  x . e_y = e_{y'} where sigma(x,y) = (y', x')."""
    n = bs.size
    mats = []
    for x in range(n):
        m = IntMatrix(n, n)
        for y in range(n):
            m.data[bs.sigma[x][y][0]][y] += 1
        mats.append(m)
    return Bimodule(n, n, left=mats, labels=[f"x{i}" for i in range(n)], name="adjoint left")


def adjoint_bimodule(bs: BraidedSet):
    """The two adjoint structures plus a report on whether they commute
    into a genuine bimodule (they need not)."""
    right = adjoint_right_module(bs)
    left = adjoint_left_module(bs)
    combined = Bimodule(
        bs.size, bs.size, left=left.left, right=right.right, labels=right.labels, name="adjoint"
    )
    report = _check_bimodule_law(combined)
    return right, left, report


def monoid_bimodule(
    G: FiniteMonoid, bs: BraidedSet | None = None, embedding=None, labels=None
) -> BimoduleAlgebra:
    """ZG with left/right translation actions and the monoid product.

    When a braided set plus an embedding of its letters into G is given,
    the actions are indexed by letters and the defining relations
    x y = y' x' are checked inside G; otherwise the actions are indexed
    by G itself (the regular bimodule used by bar complexes).
    """
    r = G.size
    if bs is None:
        letters = list(range(G.size))
    else:
        if embedding is None or len(embedding) != bs.size:
            raise ValueError("need one G-element per letter")
        letters = list(embedding)
        for x in range(bs.size):
            for y in range(bs.size):
                a, b = bs.sigma[x][y]
                if G.mul(letters[x], letters[y]) != G.mul(letters[a], letters[b]):
                    raise ValueError(
                        f"embedding breaks the defining relation at pair {(x, y)}"
                    )
    left = []
    right = []
    for g in letters:
        lm = IntMatrix(r, r)
        rm = IntMatrix(r, r)
        for m in range(r):
            lm.data[G.mul(g, m)][m] += 1
            rm.data[G.mul(m, g)][m] += 1
        left.append(lm)
        right.append(rm)
    prod = [
        [tuple(1 if t == G.mul(i, j) else 0 for t in range(r)) for j in range(r)]
        for i in range(r)
    ]
    names = labels or list(G.names)
    return BimoduleAlgebra(len(letters), r, left, right, prod, labels=names, name=f"Z[{G.size}]")


# --- verification ----------------------------------------------------------

def _check_right_law(bs: BraidedSet, M: Bimodule) -> CheckReport:
    for x, y in product(range(bs.size), repeat=2):
        a, b = bs.sigma[x][y]
        if M.right[y] * M.right[x] != M.right[b] * M.right[a]:
            return CheckReport(False, (x, y), "right module law fails")
    return CheckReport(True)


def _check_left_law(bs: BraidedSet, M: Bimodule) -> CheckReport:
    for x, y in product(range(bs.size), repeat=2):
        a, b = bs.sigma[x][y]
        if M.left[x] * M.left[y] != M.left[a] * M.left[b]:
            return CheckReport(False, (x, y), "left module law fails")
    return CheckReport(True)


def _check_bimodule_law(M: Bimodule) -> CheckReport:
    for x, y in product(range(M.n_letters), repeat=2):
        if M.left[x] * M.right[y] != M.right[y] * M.left[x]:
            return CheckReport(False, (x, y), "left and right actions do not commute")
    return CheckReport(True)


def verify_bimodule(bs: BraidedSet, M: Bimodule, unit_law: bool | None = None) -> CheckReport:
    """All module laws present in M.

    unit_law controls the extra pseudo-unit requirement (trivial action of
    the distinguished letter); None checks it exactly when the braided set
    carries a pseudo-unit.  Pass False for plain (X, sigma)-modules such
    as the adjoint ones, which need not respect the unit.
    """
    if M.has_right:
        rep = _check_right_law(bs, M)
        if not rep.holds:
            return rep
    if M.has_left:
        rep = _check_left_law(bs, M)
        if not rep.holds:
            return rep
    if M.has_left and M.has_right:
        rep = _check_bimodule_law(M)
        if not rep.holds:
            return rep
    if unit_law is None:
        unit_law = bs.pseudo_unit is not None
    if unit_law:
        return check_unit_law(bs, M)
    return CheckReport(True)


def check_unit_law(bs: BraidedSet, M: Bimodule) -> CheckReport:
    e = bs.pseudo_unit
    if e is None:
        return CheckReport(True)
    ident = IntMatrix.identity(M.rank)
    if M.has_left and M.left[e] != ident:
        return CheckReport(False, e, "pseudo-unit must act trivially on the left")
    if M.has_right and M.right[e] != ident:
        return CheckReport(False, e, "pseudo-unit must act trivially on the right")
    return CheckReport(True)


def verify_bimodule_algebra(bs: BraidedSet, M: BimoduleAlgebra) -> CheckReport:
    rep = verify_bimodule(bs, M)
    if not rep.holds:
        return rep
    basis = [tuple(1 if t == i else 0 for t in range(M.rank)) for i in range(M.rank)]
    for i, j, k in product(range(M.rank), repeat=3):
        if M.multiply(M.multiply(basis[i], basis[j]), basis[k]) != M.multiply(
            basis[i], M.multiply(basis[j], basis[k])
        ):
            return CheckReport(False, (i, j, k), "product not associative")
    for x in range(M.n_letters):
        lx, rx = M.left[x], M.right[x]
        for i, j in product(range(M.rank), repeat=2):
            li = tuple(lx.data[t][i] for t in range(M.rank))
            rj = tuple(rx.data[t][j] for t in range(M.rank))
            ri = tuple(rx.data[t][i] for t in range(M.rank))
            lj = tuple(lx.data[t][j] for t in range(M.rank))
            mij = M.multiply(basis[i], basis[j])
            lhs1 = M.multiply(li, basis[j])
            rhs1 = tuple(sum(lx.data[t][s] * mij[s] for s in range(M.rank)) for t in range(M.rank))
            if lhs1 != rhs1:
                return CheckReport(False, (x, i, j), "mu(x.m1, m2) != x.mu(m1, m2)")
            lhs2 = M.multiply(basis[i], rj)
            rhs2 = tuple(sum(rx.data[t][s] * mij[s] for s in range(M.rank)) for t in range(M.rank))
            if lhs2 != rhs2:
                return CheckReport(False, (x, i, j), "mu(m1, m2.x) != mu(m1, m2).x")
            if M.multiply(ri, basis[j]) != M.multiply(basis[i], lj):
                return CheckReport(False, (x, i, j), "mu(m1.x, m2) != mu(m1, x.m2)")
    return CheckReport(True)
