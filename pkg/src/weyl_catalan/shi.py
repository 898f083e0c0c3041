"""m-Shi arrangements: geometric chains of order filters, minimal alcoves,
m-nonnesting parking functions and the uniform zeta map.

Subsets of the positive roots are bitmasks over the positive-root index of
the root system (bit i is ``rs.positive_roots[i]``).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .affine_weyl import (
    AffineWeylElement,
    NotStableError,
    TorusElement,
    aw_compose,
    alcove_address,
    anderson,
    anderson_inverse,
    chamber,
    element_from_address,
    enumerate_p_stable,
    finite,
    floors,
    is_dominant,
    is_p_stable,
)
from .core_roots import (
    RootSystem,
    Vec,
    WeylElement,
    check_bound,
    from_word,
    generated_subgroup,
    reflection,
    weyl_enumerate,
)


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(rs: RootSystem, roots) -> int:
    out = 0
    for a in roots:
        i = rs.index(a)
        if i >= rs.npos:
            raise ValueError(f"{a} is not a positive root")
        out |= 1 << i
    return out


def roots_of_mask(rs: RootSystem, mask: int) -> list[Vec]:
    return [rs.positive_roots[i] for i in _bits(mask)]


@functools.lru_cache(maxsize=None)
def _upper_covers(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    simple = [rs.index(a) for a in rs.simple_roots]
    out = []
    for i in range(rs.npos):
        out.append(tuple(s for s in (rs.pos_sum(i, j) for j in simple) if s is not None))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _splits(rs: RootSystem) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each positive root, the unordered pairs of positive roots summing to it."""
    out = [[] for _ in range(rs.npos)]
    for i in range(rs.npos):
        for j in range(i, rs.npos):
            s = rs.pos_sum(i, j)
            if s is not None:
                out[s].append((i, j))
    return tuple(tuple(x) for x in out)


def is_order_filter(rs: RootSystem, mask: int) -> bool:
    covers = _upper_covers(rs)
    return all(all(mask >> c & 1 for c in covers[i]) for i in _bits(mask))


@functools.lru_cache(maxsize=None)
def order_filters(rs: RootSystem) -> tuple[int, ...]:
    """All order filters of the root poset, as sorted bitmasks."""
    covers = _upper_covers(rs)
    order = sorted(range(rs.npos), key=lambda i: -rs.heights[i])
    out = []

    def rec(pos, mask):
        if pos == len(order):
            out.append(mask)
            return
        i = order[pos]
        rec(pos + 1, mask)
        if all(mask >> c & 1 for c in covers[i]):
            rec(pos + 1, mask | 1 << i)

    rec(0, 0)
    return tuple(sorted(out))


@dataclass(frozen=True)
class FilterChain:
    """A descending chain J_1 >= ... >= J_m of order filters, stored as bitmasks."""

    rs: RootSystem
    filters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "filters", tuple(int(x) for x in self.filters))
        if not self.filters:
            raise ValueError("a chain needs m >= 1 filters")
        full = (1 << self.rs.npos) - 1
        if any(x < 0 or x & ~full for x in self.filters):
            raise ValueError("filter bitmask out of range")

    @property
    def m(self) -> int:
        return len(self.filters)

    def J(self, i: int) -> int:
        """J_i with J_0 = all positive roots and J_i = J_m beyond m."""
        if i <= 0:
            return (1 << self.rs.npos) - 1
        return self.filters[min(i, self.m) - 1]

    def to_json(self) -> list[int]:
        return list(self.filters)

    @classmethod
    def from_json(cls, rs: RootSystem, data) -> "FilterChain":
        return cls(rs, tuple(int(x) for x in data))

    @classmethod
    def from_roots(cls, rs: RootSystem, filters) -> "FilterChain":
        return cls(rs, tuple(mask_of(rs, f) for f in filters))


def empty_chain(rs: RootSystem, m: int) -> FilterChain:
    return FilterChain(rs, (0,) * m)


def _check_shape(chain: FilterChain) -> None:
    rs = chain.rs
    for x in chain.filters:
        if not is_order_filter(rs, x):
            raise ValueError(f"{roots_of_mask(rs, x)} is not an order filter")
    for a, b in zip(chain.filters, chain.filters[1:]):
        if b & ~a:
            raise ValueError("filters are not descending")


def _geometric(chain: FilterChain) -> bool:
    rs = chain.rs
    m = chain.m
    full = (1 << rs.npos) - 1
    splits = _splits(rs)

    def sums(a, b):
        out = 0
        for s, pairs in enumerate(splits):
            for i, j in pairs:
                if (a >> i & 1 and b >> j & 1) or (a >> j & 1 and b >> i & 1):
                    out |= 1 << s
                    break
        return out

    def ideal(i):
        return full & ~chain.J(i)

    for i in range(m + 1):
        for j in range(i, m + 1):
            if i + j <= m and sums(ideal(i), ideal(j)) & ~ideal(i + j):
                return False
            if sums(chain.J(i), chain.J(j)) & ~chain.J(i + j):
                return False
    return True


def validate_geometric(chain: FilterChain) -> bool:
    """True iff both additivity conditions hold; raises on malformed chains."""
    _check_shape(chain)
    return _geometric(chain)


def _require_geometric(chain: FilterChain) -> None:
    if not validate_geometric(chain):
        raise ValueError("chain is not geometric")


@functools.lru_cache(maxsize=None)
def geometric_chains(rs: RootSystem, m: int) -> tuple[FilterChain, ...]:
    """All geometric chains of m order filters."""
    filters = order_filters(rs)
    out = []

    def rec(prefix):
        if len(prefix) == m:
            c = FilterChain(rs, tuple(prefix))
            if _geometric(c):
                out.append(c)
            return
        for f in filters:
            if not prefix or not f & ~prefix[-1]:
                rec(prefix + [f])

    rec([])
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _k_vector(chain: FilterChain) -> tuple[int, ...]:
    rs = chain.rs
    splits = _splits(rs)
    k = [0] * rs.npos
    for idx in sorted(range(rs.npos), key=lambda i: rs.heights[i]):
        best = max((i for i in range(chain.m, 0, -1) if chain.J(i) >> idx & 1), default=0)
        for i, j in splits[idx]:
            best = max(best, k[i] + k[j])
        k[idx] = best
    return tuple(k)


def k_vector(chain: FilterChain) -> tuple[int, ...]:
    _require_geometric(chain)
    return _k_vector(chain)


def k_alpha(chain: FilterChain, a: Sequence[int]) -> int:
    """max of k_1 + ... + k_l over decompositions a = a_1 + ... + a_l with a_i in J_{k_i}."""
    rs = chain.rs
    i = rs.index(a)
    if i >= rs.npos:
        raise ValueError(f"{tuple(a)} is not a positive root")
    return k_vector(chain)[i]


def chain_to_minimal_alcove(chain: FilterChain) -> AffineWeylElement:
    return element_from_address(chain.rs, k_vector(chain))


def alcove_to_chain(a: AffineWeylElement, m: int) -> FilterChain:
    """The chain of the dominant m-Shi region containing the dominant alcove a A_o."""
    if m < 1:
        raise ValueError("m must be positive")
    addr = alcove_address(a)
    if any(k < 0 for k in addr):
        raise ValueError("alcove is not dominant")
    filters = []
    for i in range(1, m + 1):
        filters.append(sum(1 << j for j, k in enumerate(addr) if k >= i))
    return FilterChain(a.rs, tuple(filters))


def indecomposables(chain: FilterChain, k: int) -> set[Vec]:
    """Rank k indecomposable elements of a geometric chain."""
    rs = chain.rs
    m = chain.m
    if not 1 <= k <= m:
        raise ValueError(f"rank must lie in [1, {m}]")
    kv = k_vector(chain)
    splits = _splits(rs)
    out = set()
    for a in range(rs.npos):
        if kv[a] != k:
            continue
        decomposable = False
        for i in range(0, k + 1):
            Ji, Jj = chain.J(i), chain.J(k - i)
            if any((Ji >> x & 1 and Jj >> y & 1) or (Ji >> y & 1 and Jj >> x & 1) for x, y in splits[a]):
                decomposable = True
                break
        if decomposable:
            continue
        ok = True
        for b in range(rs.npos):
            s = rs.pos_sum(a, b)
            if s is None:
                continue
            t = kv[s]
            if t <= m and chain.J(t) >> s & 1 and not chain.J(t - k) >> b & 1:
                ok = False
                break
        if ok:
            out.add(rs.positive_roots[a])
    return out


def ind(chain: FilterChain) -> set[Vec]:
    return indecomposables(chain, chain.m)


def is_m_shi_alcove(a: AffineWeylElement, m: int) -> bool:
    """True iff every floor of a A_o is an m-Shi hyperplane."""
    return all(-m < k <= m for _, k in floors(a))


def signature(a: AffineWeylElement, m: int) -> tuple[int, ...]:
    """Which side of each m-Shi hyperplane the alcove lies on, in compressed form.

    Entry c for root alpha means a A_o is above H_alpha^k exactly for k <= c.
    """
    return tuple(max(-m, min(m, k)) for k in alcove_address(a))


@functools.lru_cache(maxsize=None)
def _minimal_table(rs: RootSystem, m: int) -> dict:
    table = {}
    for w in enumerate_p_stable(rs, m * rs.h + 1):
        sig = signature(w, m)
        if sig in table:
            raise RuntimeError("two m-Shi alcoves share a region")
        table[sig] = w
    return table


def minimal_alcove_of_region(a: AffineWeylElement, m: int) -> AffineWeylElement:
    return _minimal_table(a.rs, m)[signature(a, m)]


def m_shi_alcoves(rs: RootSystem, m: int) -> list[AffineWeylElement]:
    return enumerate_p_stable(rs, m * rs.h + 1)


@functools.lru_cache(maxsize=None)
def _ind_group(chain: FilterChain) -> frozenset[WeylElement]:
    rs = chain.rs
    return generated_subgroup(rs, [reflection(rs, b) for b in sorted(ind(chain))])


def canonical_representative(w: WeylElement, chain: FilterChain) -> WeylElement:
    """The unique w' in w W_J with w'(ind(J)) positive."""
    rs = chain.rs
    roots = sorted(ind(chain))
    for u in _ind_group(chain):
        v = w * u
        if all(rs.is_positive(v.act_root(b)) for b in roots):
            return v
    raise RuntimeError("no positive coset representative")  # pragma: no cover


@dataclass(frozen=True)
class NNParkClass:
    """The class [w, J] of an m-nonnesting parking function, canonically represented."""

    w_rep: WeylElement
    chain: FilterChain

    @property
    def rs(self) -> RootSystem:
        return self.chain.rs

    def to_json(self) -> dict:
        return {"w_word": [i + 1 for i in self.w_rep.word], "chain": self.chain.to_json()}

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "NNParkClass":
        w = from_word(rs, [int(i) - 1 for i in data["w_word"]])
        return park_class(w, FilterChain.from_json(rs, data["chain"]))


def park_class(w: WeylElement, chain: FilterChain) -> NNParkClass:
    if w.rs != chain.rs:
        raise ValueError("mixed root systems")
    _require_geometric(chain)
    return NNParkClass(canonical_representative(w, chain), chain)


def park_act(u: WeylElement, cls: NNParkClass) -> NNParkClass:
    return park_class(u * cls.w_rep, cls.chain)


def enumerate_park(rs: RootSystem, m: int) -> list[NNParkClass]:
    check_bound(rs.w_count * len(order_filters(rs)) ** m, "Park classes")
    seen = set()
    out = []
    for chain in geometric_chains(rs, m):
        for w in weyl_enumerate(rs):
            c = park_class(w, chain)
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def theta_map(cls: NNParkClass) -> AffineWeylElement:
    """[w, J] -> w' w_R."""
    return aw_compose(finite(cls.w_rep), chain_to_minimal_alcove(cls.chain))


def theta_inverse(a: AffineWeylElement, m: int) -> NNParkClass:
    rs = a.rs
    if not is_p_stable(a, m * rs.h + 1):
        raise NotStableError(f"{a} is not {m * rs.h + 1}-stable")
    u = chamber(a)
    dom = aw_compose(finite(u.inverse()), a)
    return park_class(u, alcove_to_chain(dom, m))


def gamma(cls: NNParkClass) -> TorusElement:
    return anderson(theta_map(cls), cls.chain.m * cls.rs.h + 1)


def zeta(t: TorusElement, m: int) -> NNParkClass:
    p = m * t.rs.h + 1
    if t.p != p:
        raise ValueError(f"torus modulus {t.p} does not match m*h+1 = {p}")
    return theta_inverse(anderson_inverse(t), m)


def shi_chamber_hyperplanes(rs: RootSystem, w: WeylElement, m: int) -> set[tuple[Vec, int]]:
    """m-Shi hyperplanes (alpha positive, k) meeting the open chamber wC."""
    out = set()
    for a in rs.positive_roots:
        b = w.act_root(a)
        for k in range(1, m + 1):
            if k < m or rs.is_positive(b):
                if rs.is_positive(b):
                    out.add((b, k))
                else:
                    out.add((tuple(-x for x in b), -k))
    return out


def dominant_count(rs: RootSystem, m: int) -> int:
    return sum(1 for w in m_shi_alcoves(rs, m) if is_dominant(w))
