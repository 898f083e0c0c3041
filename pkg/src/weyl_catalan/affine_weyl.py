"""Affine Weyl group arithmetic, alcoves, p-stable elements and the Anderson map.

An element ``w t_mu`` of the affine Weyl group acts on the ambient space by
``x -> w(x + mu)``; it is stored as the pair ``(w, mu)`` with ``mu`` in
simple-coroot coordinates.  Alcove geometry is handled through integer
addresses only: for ``x`` in the fundamental alcove every positive root
pairs with ``x`` to a number in ``(0, 1)``.
"""

from __future__ import annotations

import functools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core_roots import (
    RootSystem,
    Vec,
    WeylElement,
    check_bound,
    from_word,
    identity,
    pairing,
    reflection,
    simple_reflection,
    weyl_enumerate,
)


class NotStableError(ValueError):
    """The element is not p-stable."""


class AffineRoot(NamedTuple):
    """The affine root ``root + k*delta``."""

    root: Vec
    k: int

    def is_positive(self, rs: RootSystem) -> bool:
        if rs.is_positive(self.root):
            return self.k >= 0
        return self.k > 0

    def height(self, rs: RootSystem) -> int:
        return sum(self.root) + self.k * rs.h

    def __neg__(self):
        return AffineRoot(tuple(-x for x in self.root), -self.k)


class AffineWeylElement:
    """The element ``w t_mu`` of the affine Weyl group."""

    __slots__ = ("w", "mu")

    def __init__(self, w: WeylElement, mu: Sequence[int]):
        self.w = w
        self.mu = tuple(mu)

    @property
    def rs(self) -> RootSystem:
        return self.w.rs

    def __eq__(self, other):
        return isinstance(other, AffineWeylElement) and self.mu == other.mu and self.w == other.w

    def __hash__(self):
        return hash((self.w.matrix, self.mu))

    def __repr__(self):
        return f"AffineWeylElement({self.rs.name}, w={list(self.w.word)}, mu={list(self.mu)})"

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        return aw_compose(self, other)

    def inverse(self) -> "AffineWeylElement":
        return aw_invert(self)

    def to_json(self) -> dict:
        return {"w": [i + 1 for i in self.w.word], "mu": list(self.mu)}

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "AffineWeylElement":
        word = [int(i) - 1 for i in data["w"]]
        if any(not 0 <= i < rs.rank for i in word):
            raise ValueError(f"simple reflection index out of range in {data['w']}")
        mu = tuple(int(x) for x in data["mu"])
        if len(mu) != rs.rank:
            raise ValueError("mu has wrong length")
        return cls(from_word(rs, word), mu)


def aw_identity(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement(identity(rs), (0,) * rs.rank)


def translation(rs: RootSystem, mu: Sequence[int]) -> AffineWeylElement:
    return AffineWeylElement(identity(rs), mu)


def finite(w: WeylElement) -> AffineWeylElement:
    return AffineWeylElement(w, (0,) * w.rs.rank)


def affine_reflection(rs: RootSystem, a: Sequence[int], k: int) -> AffineWeylElement:
    """Reflection through the hyperplane <x, a> = k, i.e. ``t_{k a^vee} s_a``."""
    av = rs.coroot(a)
    return AffineWeylElement(reflection(rs, a), tuple(-k * x for x in av))


@functools.lru_cache(maxsize=None)
def simple_affine_reflections(rs: RootSystem) -> tuple[AffineWeylElement, ...]:
    """Generators ``s_0 = s_theta^1, s_1, ..., s_r`` (index 0 is the affine one)."""
    gens = [affine_reflection(rs, rs.theta, 1)]
    gens += [finite(simple_reflection(rs, i)) for i in range(rs.rank)]
    return tuple(gens)


def _check_same(a: AffineWeylElement, b: AffineWeylElement) -> None:
    if a.rs != b.rs:
        raise ValueError(f"mixed root systems {a.rs.name} and {b.rs.name}")


def aw_compose(a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    """(w t_mu)(v t_nu) = (wv) t_{v^{-1}(mu) + nu}."""
    _check_same(a, b)
    vmu = b.w.inverse().act_coroot(a.mu)
    return AffineWeylElement(a.w * b.w, tuple(x + y for x, y in zip(vmu, b.mu)))


def aw_invert(a: AffineWeylElement) -> AffineWeylElement:
    wmu = a.w.act_coroot(a.mu)
    return AffineWeylElement(a.w.inverse(), tuple(-x for x in wmu))


def aw_apply_to_zero(a: AffineWeylElement) -> Vec:
    return a.w.act_coroot(a.mu)


def act_on_affine_root(a: AffineWeylElement, r: AffineRoot) -> AffineRoot:
    """w t_mu (alpha + k delta) = w(alpha) + (k - <mu, alpha>) delta."""
    return AffineRoot(a.w.act_root(r.root), r.k - pairing(a.rs, a.mu, r.root))


def root_address(a: AffineWeylElement, alpha: Sequence[int]) -> int:
    """k(a, alpha): the integer k with k < <x, alpha> < k+1 on the alcove a A_o."""
    rs = a.rs
    beta = a.w.inverse().act_root(alpha)
    k = pairing(rs, a.mu, beta)
    return k if sum(beta) > 0 else k - 1


def alcove_address(a: AffineWeylElement) -> tuple[int, ...]:
    """The address (k(a, alpha)) indexed by the positive roots of ``a.rs``."""
    rs = a.rs
    winv = a.w.inverse()
    out = []
    for alpha in rs.positive_roots:
        beta = winv.act_root(alpha)
        k = pairing(rs, a.mu, beta)
        out.append(k if sum(beta) > 0 else k - 1)
    return tuple(out)


def address_is_valid(rs: RootSystem, k: Sequence[int]) -> bool:
    """The additivity inequalities that characterise alcove addresses."""
    n = rs.npos
    for i in range(n):
        for j in range(i, n):
            s = rs.pos_sum(i, j)
            if s is not None and not (k[i] + k[j] <= k[s] <= k[i] + k[j] + 1):
                return False
    return True


def length(a: AffineWeylElement) -> int:
    return sum(abs(k) for k in alcove_address(aw_invert(a)))


def inversions(a: AffineWeylElement) -> set[AffineRoot]:
    """Inv(a): positive affine roots sent to negative ones.

    Read off from the hyperplanes separating a^{-1} A_o from A_o.
    """
    rs = a.rs
    out = set()
    for alpha, k in zip(rs.positive_roots, alcove_address(aw_invert(a))):
        if k >= 0:
            neg = tuple(-x for x in alpha)
            out.update(AffineRoot(neg, j) for j in range(1, k + 1))
        else:
            out.update(AffineRoot(alpha, j) for j in range(0, -k))
    return out


def floors(a: AffineWeylElement) -> set[tuple[Vec, int]]:
    """Floors of the alcove a A_o as pairs (alpha, m) with alpha positive, meaning H_alpha^m."""
    rs = a.rs
    out = set()
    for s in simple_affine_roots(rs):
        img = act_on_affine_root(a, -s)
        if img.k > 0:
            # H_{img.root}^{-k}; normalise to a positive root
            if rs.is_positive(img.root):
                out.add((img.root, -img.k))
            else:
                out.add((tuple(-x for x in img.root), img.k))
    return out


@functools.lru_cache(maxsize=None)
def simple_affine_roots(rs: RootSystem) -> tuple[AffineRoot, ...]:
    """Delta together with alpha_0 = -theta + delta."""
    neg_theta = tuple(-x for x in rs.theta)
    return (AffineRoot(neg_theta, 1),) + tuple(AffineRoot(a, 0) for a in rs.simple_roots)


@functools.lru_cache(maxsize=None)
def affine_roots_of_height(rs: RootSystem, t: int) -> frozenset[AffineRoot]:
    if t < 1:
        raise ValueError("height must be positive")
    out = set()
    for alpha in rs.roots:
        k, rem = divmod(t - sum(alpha), rs.h)
        if rem == 0:
            out.add(AffineRoot(alpha, k))
    return frozenset(out)


def _check_coprime(rs: RootSystem, p: int) -> None:
    if p < 1 or math.gcd(p, rs.h) != 1:
        raise ValueError(f"p={p} must be a positive integer coprime to h={rs.h}")


def is_p_stable(a: AffineWeylElement, p: int) -> bool:
    """True iff ``a`` has no inversion of height ``p``."""
    rs = a.rs
    _check_coprime(rs, p)
    return all(act_on_affine_root(a, r).is_positive(rs) for r in affine_roots_of_height(rs, p))


def is_dominant(a: AffineWeylElement) -> bool:
    return all(k >= 0 for k in alcove_address(a))


def chamber(a: AffineWeylElement) -> WeylElement:
    """The u in W with a A_o contained in the chamber uC."""
    rs = a.rs
    u = identity(rs)
    v = a
    while True:
        # reflect towards the dominant chamber across a separating simple wall
        for i, alpha in enumerate(rs.simple_roots):
            if root_address(v, alpha) < 0:
                s = simple_reflection(rs, i)
                v = aw_compose(finite(s), v)
                u = u * s
                break
        else:
            return u


def _solve_exact(rows: list[list[int]], rhs: list[int]) -> tuple[Fraction, ...] | None:
    """Solve a consistent (possibly overdetermined) integer system; None if inconsistent."""
    n = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(all(x == 0 for x in row[:n]) and row[n] != 0 for row in aug):
        return None
    if len(pivots) < n:
        return None
    return tuple(aug[i][n] for i in range(n))


@functools.lru_cache(maxsize=None)
def _w_p_scan(rs: RootSystem, p: int) -> AffineWeylElement:
    targets = set(rs.simple_roots)
    neg_theta = tuple(-x for x in rs.theta)
    phi_p = sorted(affine_roots_of_height(rs, p))
    found = []
    for w in weyl_enumerate(rs):
        images = [w.act_root(r.root) for r in phi_p]
        if set(images) != targets | {neg_theta}:
            continue
        rows, rhs = [], []
        for r, img in zip(phi_p, images):
            # k - <mu, beta> must be 0 on Delta and p on -theta
            rows.append([sum(r.root[i] * rs.cartan[j][i] for i in range(rs.rank)) for j in range(rs.rank)])
            rhs.append(r.k - (p if img == neg_theta else 0))
        mu = _solve_exact(rows, rhs)
        if mu is None or any(x.denominator != 1 for x in mu):
            continue
        found.append(AffineWeylElement(w, tuple(int(x) for x in mu)))
    if len(found) != 1:
        raise RuntimeError(f"expected a unique w_p for {rs.name}, p={p}; found {len(found)}")
    return found[0]


def _maps_sommers_to_dilated(a: AffineWeylElement, p: int) -> bool:
    rs = a.rs
    target = set(simple_affine_roots(rs)[1:]) | {AffineRoot(tuple(-x for x in rs.theta), p)}
    return {act_on_affine_root(a, r) for r in affine_roots_of_height(rs, p)} == target


def compute_w_p_bfs(rs: RootSystem, p: int, max_length: int = 60) -> AffineWeylElement:
    """Length-increasing search over the affine Weyl group for w_p."""
    _check_coprime(rs, p)
    start = aw_identity(rs)
    seen = {start}
    frontier = [start]
    gens = simple_affine_reflections(rs)
    for _ in range(max_length + 1):
        hits = [a for a in frontier if _maps_sommers_to_dilated(a, p)]
        if hits:
            return hits[0]
        nxt = []
        for a in frontier:
            for s in gens:
                b = aw_compose(a, s)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
        check_bound(len(seen), "w_p search")
    raise RuntimeError(f"w_p not found within length {max_length}")


def compute_w_p(rs: RootSystem, p: int) -> AffineWeylElement:
    """The unique element mapping the Sommers region onto p A_o.

    Found by scanning W for the finite part and solving for the translation
    from the affine-root characterisation w_p(Phi~_p) = Delta u {-theta + p delta}.
    """
    _check_coprime(rs, p)
    return _w_p_scan(rs, p)


@functools.lru_cache(maxsize=None)
def _p_stable(rs: RootSystem, p: int) -> tuple[AffineWeylElement, ...]:
    check_bound(p**rs.rank, f"p-stable elements of {rs.name} for p={p}")
    gens = simple_affine_reflections(rs)
    start = aw_identity(rs)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = aw_compose(x, s)
            if y in seen:
                continue
            # y A_o lies in the Sommers region iff y^{-1} is p-stable
            if is_p_stable(aw_invert(y), p):
                seen.add(y)
                order.append(y)
                queue.append(y)
    if len(order) != p**rs.rank:
        raise RuntimeError(f"found {len(order)} alcoves in the Sommers region, expected {p ** rs.rank}")
    return tuple(aw_invert(y) for y in order)


def enumerate_p_stable(rs: RootSystem, p: int) -> list[AffineWeylElement]:
    """All p-stable elements, as inverses of the alcoves in the Sommers region."""
    _check_coprime(rs, p)
    return list(_p_stable(rs, p))


def element_from_address(rs: RootSystem, address: Sequence[int]) -> AffineWeylElement:
    """The unique element whose alcove has the given address.

    Walks from A_o, each step crossing one wall of the current alcove that
    separates it from the target.
    """
    target = tuple(address)
    if len(target) != rs.npos or not address_is_valid(rs, target):
        raise ValueError(f"{list(target)} is not an alcove address of {rs.name}")
    gens = simple_affine_reflections(rs)
    cur = aw_identity(rs)
    addr = alcove_address(cur)
    dist = sum(abs(x - y) for x, y in zip(addr, target))
    while dist:
        for s in gens:
            nxt = aw_compose(cur, s)
            naddr = alcove_address(nxt)
            ndist = sum(abs(x - y) for x, y in zip(naddr, target))
            if ndist < dist:
                cur, addr, dist = nxt, naddr, ndist
                break
        else:  # pragma: no cover - excluded by the address inequalities
            raise RuntimeError("wall-crossing walk got stuck")
    return cur


@dataclass(frozen=True)
class TorusElement:
    """The coset ``coords + p Q^vee`` in simple-coroot coordinates, reduced mod p."""

    rs: RootSystem
    p: int
    coords: Vec

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if len(self.coords) != self.rs.rank:
            raise ValueError("torus coordinates have wrong length")
        object.__setattr__(self, "coords", tuple(int(x) % self.p for x in self.coords))

    def __add__(self, other: "TorusElement") -> "TorusElement":
        return TorusElement(self.rs, self.p, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def to_json(self) -> dict:
        return {"p": self.p, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "TorusElement":
        return cls(rs, int(data["p"]), tuple(int(x) for x in data["coords"]))


def anderson(a: AffineWeylElement, p: int) -> TorusElement:
    """A(a) = a w_p^{-1} . 0 + p Q^vee."""
    if not is_p_stable(a, p):
        raise NotStableError(f"{a} is not {p}-stable")
    rs = a.rs
    x = aw_compose(a, aw_invert(compute_w_p(rs, p)))
    return TorusElement(rs, p, aw_apply_to_zero(x))


@functools.lru_cache(maxsize=None)
def _anderson_table(rs: RootSystem, p: int) -> dict:
    table = {}
    for a in enumerate_p_stable(rs, p):
        t = anderson(a, p)
        if t.coords in table:
            raise RuntimeError("Anderson map is not injective")
        table[t.coords] = a
    return table


def anderson_inverse(t: TorusElement) -> AffineWeylElement:
    return _anderson_table(t.rs, t.p)[t.coords]


def stabilizer_generators(a: AffineWeylElement, p: int) -> set[Vec]:
    """Roots beta in a(Phi~_p) with zero delta part; their reflections generate Stab(A(a))."""
    if not is_p_stable(a, p):
        raise NotStableError(f"{a} is not {p}-stable")
    out = set()
    for r in affine_roots_of_height(a.rs, p):
        img = act_on_affine_root(a, r)
        if img.k == 0:
            out.add(img.root)
    return out


def torus_act(w: WeylElement, t: TorusElement) -> TorusElement:
    return TorusElement(t.rs, t.p, w.act_coroot(t.coords))


def torus_enumerate(rs: RootSystem, p: int) -> list[TorusElement]:
    check_bound(p**rs.rank, "finite torus")
    out = []

    def rec(prefix):
        if len(prefix) == rs.rank:
            out.append(TorusElement(rs, p, tuple(prefix)))
            return
        for x in range(p):
            rec(prefix + [x])

    rec([])
    return out


def torus_stabilizer(t: TorusElement) -> frozenset[WeylElement]:
    """Brute-force stabilizer of ``t`` in W."""
    return frozenset(w for w in weyl_enumerate(t.rs) if torus_act(w, t) == t)


def orbit_representatives(rs: RootSystem, p: int) -> list[Vec]:
    """Coroot-lattice points of the closed simplex p A_o: one per W-orbit on the torus."""
    _check_coprime(rs, p)
    c = rs.theta
    cinv = rs.cartan_inverse_t
    r = rs.rank
    out = []

    def rec(prefix, budget):
        if len(prefix) == r:
            mu = [sum(cinv[i][j] * prefix[j] for j in range(r)) for i in range(r)]
            if all(x.denominator == 1 for x in mu):
                out.append(tuple(int(x) for x in mu))
            return
        ci = c[len(prefix)]
        for x in range(budget // ci + 1):
            rec(prefix + [x], budget - ci * x)

    rec([], p)
    return sorted(out)


def addresses_in_box(rs: RootSystem, bound: int) -> list[tuple[int, ...]]:
    """All valid alcove addresses with every entry in [-bound, bound]."""
    check_bound((2 * bound + 1) ** rs.npos, "address box")
    n = rs.npos
    # pairs (i, j) whose sum is the root at index s, checked once s is filled
    checks: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = rs.pos_sum(i, j)
            if s is not None:
                checks[max(i, j, s)].append((i, j, s))
    out = []
    k = [0] * n

    def rec(pos):
        if pos == n:
            out.append(tuple(k))
            return
        for v in range(-bound, bound + 1):
            k[pos] = v
            if all(k[i] + k[j] <= k[s] <= k[i] + k[j] + 1 for i, j, s in checks[pos]):
                rec(pos + 1)

    rec(0)
    return out


def alcoves_in_box(rs: RootSystem, bound: int) -> list[AffineWeylElement]:
    return [element_from_address(rs, k) for k in addresses_in_box(rs, bound)]
