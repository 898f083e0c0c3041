"""Irreducible crystallographic root systems in exact integer coordinates.

Roots are integer vectors in the basis of simple roots, coroot-lattice
vectors are integer vectors in the basis of simple coroots.  Everything
flows from the Cartan matrix, with the convention

    C[i][j] = <alpha_j, alpha_i^vee>

so that ``s_i(alpha_j) = alpha_j - C[i][j] * alpha_i`` and the pairing of a
simple coroot with a simple root is ``<alpha_j^vee, alpha_i> = C[j][i]``.
Simple roots are numbered as in Bourbaki.
"""

from __future__ import annotations

import functools
import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_MAX_ENUM = 10**5
_MAX_ENUM_ENV = "WEYL_CATALAN_MAX_ENUM"


class EnumerationBoundError(RuntimeError):
    """An exhaustive enumeration would exceed the configured size bound."""


def max_enum() -> int:
    """Current enumeration bound (``WEYL_CATALAN_MAX_ENUM`` overrides)."""
    value = os.environ.get(_MAX_ENUM_ENV)
    if value is None:
        return DEFAULT_MAX_ENUM
    return int(value)


def check_bound(size: int, what: str) -> None:
    bound = max_enum()
    if size > bound:
        raise EnumerationBoundError(f"{what} has {size} elements, bound is {bound}")


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": 6 <= n <= 8,
            "F": n == 4,
            "G": n == 2,
        }.get(f)
        if not ok:
            raise ValueError(f"invalid Cartan type {f}{n}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> Matrix:
    n = ct.rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def link(i, j, mult=1):
        # mult > 1: alpha_i is the long root, so <alpha_i, alpha_j^vee> = -mult
        c[i][j] = -1
        c[j][i] = -mult

    f = ct.family
    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            link(n - 2, n - 1, 2)
        elif f == "C":
            c[n - 2][n - 1] = -2
            c[n - 1][n - 2] = -1
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif f == "F":
        link(0, 1)
        link(1, 2, 2)
        link(2, 3)
    elif f == "G":
        link(1, 0, 3)
    return tuple(tuple(row) for row in c)


def _half_norms(cartan: Matrix) -> Vec:
    """Half squared lengths (alpha_i, alpha_i)/2 of the simple roots, short = 1."""
    r = len(cartan)
    norms: list[Fraction | None] = [None] * r
    norms[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(r):
            if j != i and cartan[i][j] != 0 and norms[j] is None:
                # (alpha_i, alpha_j) = C[i][j] n_i = C[j][i] n_j
                norms[j] = norms[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    smallest = min(norms)
    return tuple(int(x / smallest) for x in norms)


def _det(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    a = [list(row) for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _mat_inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Matrix, v: Sequence[int]) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _identity(r: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable table of an irreducible root system.

    ``roots`` lists the positive roots first (sorted by height, then
    lexicographically) followed by their negatives in the same order, so the
    positive root with index ``i`` has negative at index ``i + npos``.
    """

    cartan_type: CartanType
    cartan: Matrix
    roots: tuple[Vec, ...]
    heights: tuple[int, ...]
    theta: Vec
    h: int
    f: int
    w_count: int
    half_norms: Vec
    _index: dict = field(repr=False)
    _sum_table: tuple = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan_type == other.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    @property
    def name(self) -> str:
        return str(self.cartan_type)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def npos(self) -> int:
        return len(self.heights)

    @property
    def positive_roots(self) -> tuple[Vec, ...]:
        return self.roots[: self.npos]

    @property
    def simple_roots(self) -> tuple[Vec, ...]:
        r = self.rank
        return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))

    @property
    def theta_coeffs(self) -> Vec:
        return self.theta

    def index(self, root: Sequence[int]) -> int:
        """Index of ``root`` in :attr:`roots`; ``KeyError`` if it is not a root."""
        return self._index[tuple(root)]

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._index

    def is_positive(self, v: Sequence[int]) -> bool:
        idx = self._index.get(tuple(v))
        return idx is not None and idx < self.npos

    def height(self, v: Sequence[int]) -> int:
        return sum(v)

    def pos_sum(self, i: int, j: int) -> int | None:
        """Index of ``roots[i] + roots[j]`` for positive indices, or None."""
        return self._sum_table[i][j]

    def pairing(self, mu: Sequence[int], a: Sequence[int]) -> int:
        return pairing(self, mu, a)

    def coroot(self, a: Sequence[int]) -> Vec:
        """The coroot 2a/(a,a) in simple-coroot coordinates."""
        hn = self.half_norms
        norm = self.half_norm(a)
        out = []
        for ai, ni in zip(a, hn):
            q, rem = divmod(ai * ni, norm)
            assert rem == 0
            out.append(q)
        return tuple(out)

    def half_norm(self, a: Sequence[int]) -> int:
        """(a, a)/2 in the normalisation where short simple roots have (a,a) = 2."""
        g = self.gram
        total = sum(a[i] * a[j] * g[i][j] for i in range(len(a)) for j in range(len(a)))
        return total // 2

    @functools.cached_property
    def gram(self) -> Matrix:
        r = self.rank
        return tuple(tuple(self.cartan[i][j] * self.half_norms[i] for j in range(r)) for i in range(r))

    @functools.cached_property
    def gram_inverse(self):
        return _mat_inverse(self.gram)

    @functools.cached_property
    def cartan_inverse_t(self):
        return _mat_inverse(tuple(zip(*self.cartan)))


def _simple_reflection_root(cartan: Matrix, i: int, a: Vec) -> Vec:
    # s_i(a) = a - <a, alpha_i^vee> alpha_i, <a, alpha_i^vee> = sum_j a_j C[i][j]
    c = sum(aj * cij for aj, cij in zip(a, cartan[i]))
    if c == 0:
        return a
    out = list(a)
    out[i] -= c
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    cartan = cartan_matrix(ct)
    r = ct.rank
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        a = queue.popleft()
        for i in range(r):
            b = _simple_reflection_root(cartan, i, a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    pos = sorted((a for a in seen if sum(a) > 0), key=lambda a: (sum(a), a))
    roots = tuple(pos) + tuple(tuple(-x for x in a) for a in pos)
    index = {a: i for i, a in enumerate(roots)}
    heights = tuple(sum(a) for a in pos)
    theta = pos[-1]
    h = 1 + sum(theta)
    f = abs(_det(cartan))
    w_count = math.factorial(r) * math.prod(theta) * f
    sums = []
    for a in pos:
        row = []
        for b in pos:
            s = tuple(x + y for x, y in zip(a, b))
            row.append(index.get(s))
        sums.append(tuple(row))
    return RootSystem(
        cartan_type=ct,
        cartan=cartan,
        roots=roots,
        heights=heights,
        theta=theta,
        h=h,
        f=f,
        w_count=w_count,
        half_norms=_half_norms(cartan),
        _index=index,
        _sum_table=tuple(sums),
    )


def build_root_system(ct: CartanType | str) -> RootSystem:
    """Generate the root system of Cartan type ``ct`` (e.g. ``"B3"``)."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build(ct)


def roots_of_height(rs: RootSystem, t: int) -> set[Vec]:
    return {a for a in rs.roots if sum(a) == t}


def root_poset_leq(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> bool:
    """Root order on positive roots: b - a is a nonnegative combination of simple roots."""
    if not (rs.is_positive(a) and rs.is_positive(b)):
        raise ValueError("root order is only defined on positive roots")
    return all(y >= x for x, y in zip(a, b))


def pairing(rs: RootSystem, mu: Sequence[int], a: Sequence[int]) -> int:
    """<mu, a> for mu in simple-coroot and a in simple-root coordinates."""
    c = rs.cartan
    return sum(mu[j] * a[i] * c[j][i] for j in range(len(mu)) if mu[j] for i in range(len(a)) if a[i])


class WeylElement:
    """Element of the finite Weyl group, stored as its matrix on root coordinates.

    Column ``j`` of :attr:`matrix` holds the simple-root coordinates of
    ``w(alpha_j)``.  Equality and hashing use the matrix only.
    """

    __slots__ = ("rs", "matrix", "_word", "_inverse", "_comatrix", "__weakref__")

    def __init__(self, rs: RootSystem, matrix: Matrix, word: tuple[int, ...] | None = None):
        self.rs = rs
        self.matrix = matrix
        self._word = word
        self._inverse = None
        self._comatrix = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix and self.rs == other.rs

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement({self.rs.name}, word={list(self.word)})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.rs, mat_mul(self.matrix, other.matrix))

    @property
    def coroot_matrix(self) -> Matrix:
        """Matrix of the same element acting on simple-coroot coordinates."""
        if self._comatrix is None:
            hn = self.rs.half_norms
            m = self.matrix
            r = len(m)
            # alpha_i^vee = alpha_i / n_i, so coroot coords b = N a
            self._comatrix = tuple(tuple(hn[i] * m[i][j] // hn[j] for j in range(r)) for i in range(r))
        return self._comatrix

    def act_root(self, a: Sequence[int]) -> Vec:
        return mat_vec(self.matrix, a)

    def act_coroot(self, mu: Sequence[int]) -> Vec:
        return mat_vec(self.coroot_matrix, mu)

    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            g, gi = self.rs.gram, self.rs.gram_inverse
            r = len(g)
            mt = tuple(zip(*self.matrix))
            # w orthogonal: w^{-1} = G^{-1} w^T G
            tmp = [[sum(mt[i][k] * g[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
            inv = []
            for i in range(r):
                row = []
                for j in range(r):
                    x = sum(gi[i][k] * tmp[k][j] for k in range(r))
                    assert x.denominator == 1
                    row.append(int(x))
                inv.append(tuple(row))
            word = tuple(reversed(self._word)) if self._word is not None else None
            self._inverse = WeylElement(self.rs, tuple(inv), word)
            self._inverse._inverse = self
        return self._inverse

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))

    @property
    def word(self) -> tuple[int, ...]:
        """A reduced word (0-based simple reflection indices), w = s_{i1} ... s_{ik}."""
        if self._word is None:
            self._word = _reduced_word(self)
        return self._word

    def length(self) -> int:
        return len(self.word)


def _reduced_word(w: WeylElement) -> tuple[int, ...]:
    rs = w.rs
    word = []
    m = w.matrix
    r = rs.rank
    while True:
        # right descent: w(alpha_i) negative  <=>  l(w s_i) < l(w)
        for i in range(r):
            col = [m[k][i] for k in range(r)]
            if sum(col) < 0:
                word.append(i)
                m = mat_mul(m, simple_reflection(rs, i).matrix)
                break
        else:
            break
    return tuple(reversed(word))


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, _identity(rs.rank), ())


@functools.lru_cache(maxsize=None)
def _simple_reflection_cached(rs: RootSystem, i: int) -> WeylElement:
    r = rs.rank
    cols = [_simple_reflection_root(rs.cartan, i, tuple(int(k == j) for k in range(r))) for j in range(r)]
    return WeylElement(rs, tuple(zip(*cols)), (i,))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return _simple_reflection_cached(rs, i)


def reflection(rs: RootSystem, a: Sequence[int]) -> WeylElement:
    """The reflection s_a through the hyperplane orthogonal to root ``a``."""
    av = rs.coroot(a)
    r = rs.rank
    cols = []
    for j in range(r):
        # s_a(alpha_j) = alpha_j - <a^vee, alpha_j> a
        c = pairing(rs, av, tuple(int(k == j) for k in range(r)))
        cols.append(tuple(int(k == j) - c * a[k] for k in range(r)))
    return WeylElement(rs, tuple(zip(*cols)))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    word = tuple(word)
    m = _identity(rs.rank)
    for i in word:
        m = mat_mul(m, simple_reflection(rs, i).matrix)
    return WeylElement(rs, m, None)


def weyl_act(w: WeylElement, v: Sequence[int], kind: str = "root") -> Vec:
    """Apply ``w`` to a root-coordinate (``kind="root"``) or coroot-coordinate vector."""
    if kind == "root":
        return w.act_root(v)
    if kind == "coroot":
        return w.act_coroot(v)
    raise ValueError(f"unknown vector kind {kind!r}")


@functools.lru_cache(maxsize=None)
def _enumerate(rs: RootSystem) -> tuple[WeylElement, ...]:
    start = identity(rs)
    seen = {start.matrix: start}
    order = [start]
    queue = deque([start])
    gens = [simple_reflection(rs, i) for i in range(rs.rank)]
    while queue:
        w = queue.popleft()
        for i, s in enumerate(gens):
            m = mat_mul(w.matrix, s.matrix)
            if m not in seen:
                x = WeylElement(rs, m, w.word + (i,))
                seen[m] = x
                order.append(x)
                queue.append(x)
    return tuple(order)


def weyl_enumerate(rs: RootSystem) -> list[WeylElement]:
    """All elements of W in breadth-first (length-graded) order."""
    check_bound(rs.w_count, f"Weyl group of {rs.name}")
    return list(_enumerate(rs))


def generated_subgroup(rs: RootSystem, gens: Iterable[WeylElement]) -> frozenset[WeylElement]:
    """Closure of ``gens`` under multiplication."""
    gens = list(gens)
    e = identity(rs)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def prime_factors(n: int) -> set[int]:
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out
