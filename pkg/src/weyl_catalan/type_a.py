"""Type A combinatorics: affine permutations, abaci, rational Dyck paths and
parking functions, the combinatorial Anderson map and the Haglund-Loehr zeta map,
together with the dictionaries to the uniform constructions.

Conventions
-----------
* Permutations are one-line tuples ``(w(1), ..., w(n))`` with values in 1..n.
  A permutation acts on vectors by ``(w.x)_{w(i)} = x_i``.
* A rational p/n-Dyck path is the nondecreasing tuple ``(P_1, ..., P_n)`` of
  x-coordinates of its North steps.  Classical Dyck paths are (n+1)/n-paths.
* Affine permutations are given in window notation ``[w(1), ..., w(n)]``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .affine_weyl import (
    AffineWeylElement,
    NotStableError,
    TorusElement,
    anderson,
    aw_compose,
    chamber,
    enumerate_p_stable,
    finite,
    is_p_stable,
)
from .core_roots import RootSystem, WeylElement, build_root_system, from_word
from .shi import FilterChain, NNParkClass, alcove_to_chain, ind, zeta

Perm = tuple[int, ...]


# -- permutations -----------------------------------------------------------

def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def perm_compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """(u o v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def perm_inverse(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def perm_act(w: Sequence[int], x: Sequence) -> tuple:
    """Permute coordinates: (w.x)_{w(i)} = x_i."""
    out = [None] * len(x)
    for i, v in enumerate(x):
        out[w[i] - 1] = v
    return tuple(out)


def perm_word(w: Sequence[int]) -> tuple[int, ...]:
    """A reduced word (1-based letters) with w = s_{i1} ... s_{ik}."""
    w = list(w)
    word = []
    while True:
        for j in range(len(w) - 1):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                word.append(j + 1)
                break
        else:
            return tuple(reversed(word))


def type_a_system(n: int) -> RootSystem:
    if n < 2:
        raise ValueError("type A_{n-1} needs n >= 2")
    return build_root_system(f"A{n - 1}")


def _check_type_a(rs: RootSystem) -> int:
    if rs.cartan_type.family != "A":
        raise ValueError(f"{rs.name} is not of type A")
    return rs.rank + 1


def perm_to_weyl(rs: RootSystem, w: Sequence[int]) -> WeylElement:
    n = _check_type_a(rs)
    w = check_perm(w)
    if len(w) != n:
        raise ValueError("permutation length does not match the root system")
    return from_word(rs, [j - 1 for j in perm_word(w)])


def weyl_to_perm(w: WeylElement) -> Perm:
    n = _check_type_a(w.rs)
    out = tuple(range(1, n + 1))
    for j in w.word:
        t = list(range(1, n + 1))
        t[j], t[j + 1] = t[j + 1], t[j]
        out = perm_compose(out, t)
    return out


def root_of_pair(rs: RootSystem, i: int, j: int) -> tuple[int, ...]:
    """Simple-root coordinates of e_i - e_j."""
    n = _check_type_a(rs)
    lo, hi = min(i, j), max(i, j)
    sign = 1 if i < j else -1
    return tuple(sign if lo - 1 <= k < hi - 1 else 0 for k in range(n - 1))


def pair_of_root(root: Sequence[int]) -> tuple[int, int]:
    """(i, j) with root = e_i - e_j."""
    support = [k for k, x in enumerate(root) if x]
    i, j = support[0] + 1, support[-1] + 2
    return (i, j) if root[support[0]] > 0 else (j, i)


def ambient_to_coroot(x: Sequence[int]) -> tuple[int, ...]:
    if sum(x) != 0:
        raise ValueError("ambient vector does not sum to zero")
    out, s = [], 0
    for v in x[:-1]:
        s += v
        out.append(s)
    return tuple(out)


def coroot_to_ambient(b: Sequence[int]) -> tuple[int, ...]:
    b = list(b)
    prev = [0] + b
    nxt = b + [0]
    return tuple(y - x for x, y in zip(prev, nxt))


# -- affine permutations ----------------------------------------------------

@dataclass(frozen=True)
class AffinePermutation:
    """Affine permutation of period n in window notation."""

    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        n = len(w)
        if n < 1:
            raise ValueError("empty window")
        if sorted(x % n for x in w) != list(range(n)):
            raise ValueError(f"residues of {list(w)} mod {n} are not a permutation")
        if sum(w) != n * (n + 1) // 2:
            raise ValueError(f"window {list(w)} does not sum to {n * (n + 1) // 2}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return ap_compose(self, other)

    def inverse(self) -> "AffinePermutation":
        return ap_invert(self)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.window) + "]"


def ap_from_window(window: Iterable[int]) -> AffinePermutation:
    return AffinePermutation(tuple(window))


def ap_identity(n: int) -> AffinePermutation:
    return AffinePermutation(tuple(range(1, n + 1)))


def ap_eval(a: AffinePermutation, i: int) -> int:
    return a(i)


def ap_compose(a: AffinePermutation, b: AffinePermutation) -> AffinePermutation:
    if a.n != b.n:
        raise ValueError("periods differ")
    return AffinePermutation(tuple(a(b(i)) for i in range(1, a.n + 1)))


def ap_invert(a: AffinePermutation) -> AffinePermutation:
    n = a.n
    out = [0] * n
    for i, v in enumerate(a.window, start=1):
        q, r = divmod(v - 1, n)
        out[r] = i - q * n
    return AffinePermutation(tuple(out))


def affine_simple_transposition(n: int, j: int) -> AffinePermutation:
    """s~_j: swaps the residue classes of j and j+1."""
    win = list(range(1, n + 1))
    if j == 0:
        win[0], win[-1] = 0, n + 1
    else:
        win[j - 1], win[j] = j + 1, j
    return AffinePermutation(tuple(win))


def parse_window(text: str) -> AffinePermutation:
    m = re.fullmatch(r"\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)\s*\]\s*", text)
    if not m:
        raise ValueError(f"cannot parse window {text!r}")
    return AffinePermutation(tuple(int(x) for x in m.group(1).split(",")))


def parse_vector(text: str) -> tuple[int, ...]:
    m = re.fullmatch(r"\s*[\(\[]\s*(-?\d+(\s*,\s*-?\d+)*)?\s*[\)\]]\s*", text)
    if not m:
        raise ValueError(f"cannot parse vector {text!r}")
    body = m.group(1)
    return tuple(int(x) for x in body.split(",")) if body else ()


def bridge_to_uniform(a: AffinePermutation) -> AffineWeylElement:
    """w~(i) = w(i) + n mu_i  gives  w~ = w t_mu."""
    n = a.n
    rs = type_a_system(n)
    w = tuple((x - 1) % n + 1 for x in a.window)
    mu = tuple((x - y) // n for x, y in zip(a.window, w))
    return AffineWeylElement(perm_to_weyl(rs, w), ambient_to_coroot(mu))


def bridge_from_uniform(e: AffineWeylElement) -> AffinePermutation:
    n = _check_type_a(e.rs)
    w = weyl_to_perm(e.w)
    mu = coroot_to_ambient(e.mu)
    return AffinePermutation(tuple(w[i] + n * mu[i] for i in range(n)))


# -- abaci ------------------------------------------------------------------

def levels(a: AffinePermutation) -> tuple[int, ...]:
    """Levels of the balanced flush abacus of {l : a(l) > 0}."""
    n = a.n
    out = [0] * n
    for g in ap_invert(a).window:
        i = (g - 1) % n + 1
        out[i - 1] = (g - i) // n
    return tuple(out)


def min_gap(a: AffinePermutation) -> int:
    """M: the smallest l with a(l) > 0."""
    return min(ap_invert(a).window)


def g_shift(x: Sequence[int], times: int = 1) -> tuple[int, ...]:
    """Apply g(x) = (x_n + 1, x_1, ..., x_{n-1}) ``times`` times (negative allowed)."""
    x = tuple(x)
    for _ in range(times):
        x = (x[-1] + 1,) + x[:-1]
    for _ in range(-times):
        x = x[1:] + (x[0] - 1,)
    return x


def levels_of_gaps(gaps: Iterable[int], n: int) -> tuple[int, ...]:
    """Levels of the flush abacus whose smallest gap on each runner is given."""
    out = [None] * n
    for g in gaps:
        i = (g - 1) % n + 1
        out[i - 1] = (g - i) // n
    return tuple(out)


def normalized_levels(a: AffinePermutation) -> tuple[int, ...]:
    return g_shift(levels(a), -min_gap(a))


def ap_is_p_stable(a: AffinePermutation, p: int) -> bool:
    if p < 1 or math.gcd(p, a.n) != 1:
        raise ValueError(f"p={p} must be coprime to n={a.n}")
    return all(a(i + p) > a(i) for i in range(1, a.n + 1))


def enumerate_stable_permutations(n: int, p: int) -> list[AffinePermutation]:
    return [bridge_from_uniform(e) for e in enumerate_p_stable(type_a_system(n), p)]


def w_p_inverse_window(n: int, p: int) -> tuple[int, ...]:
    """Window of w_p^{-1}: [p-c, 2p-c, ..., np-c] with c = (p-1)(n+1)/2."""
    c = (p - 1) * (n + 1) // 2
    return tuple(i * p - c for i in range(1, n + 1))


# -- rational Dyck paths and parking functions ------------------------------

def _check_np(n: int, p: int) -> None:
    if n < 1 or p < 1 or math.gcd(n, p) != 1:
        raise ValueError(f"need coprime positive n, p (got n={n}, p={p})")


def is_dyck_path(steps: Sequence[int], p: int) -> bool:
    n = len(steps)
    if any(b < a for a, b in zip(steps, steps[1:])):
        return False
    return all(0 <= x and x * n <= p * i for i, x in enumerate(steps))


def area_vector(steps: Sequence[int], p: int) -> tuple[int, ...]:
    n = len(steps)
    return tuple(p * i // n - x for i, x in enumerate(steps))


def path_from_area(area: Sequence[int], p: int) -> tuple[int, ...]:
    n = len(area)
    return tuple(p * i // n - a for i, a in enumerate(area))


def pf_validate(f: Sequence[int], p: int) -> bool:
    """#{i : f_i < l} >= n l / p for every l in 1..p."""
    n = len(f)
    if any(x < 0 for x in f):
        return False
    return all(p * sum(1 for x in f if x < l) >= n * l for l in range(1, p + 1))


def enumerate_pfs(n: int, p: int) -> list[tuple[int, ...]]:
    _check_np(n, p)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            if pf_validate(prefix, p):
                out.append(tuple(prefix))
            return
        for x in range(p):
            rec(prefix + [x])

    rec([])
    return out


def enumerate_dyck_paths(n: int, p: int) -> list[tuple[int, ...]]:
    _check_np(n, p)
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 0
        for x in range(lo, p * i // n + 1):
            rec(prefix + [x])

    rec([])
    return out


def rational_catalan(n: int, p: int) -> int:
    return math.comb(n + p, n) // (n + p)


@dataclass(frozen=True)
class VertLabelledPath:
    """A p/n-Dyck path with its North steps labelled by sigma (bottom to top)."""

    p: int
    steps: tuple[int, ...]
    sigma: Perm

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(x) for x in self.steps))
        object.__setattr__(self, "sigma", check_perm(self.sigma))
        if len(self.steps) != len(self.sigma):
            raise ValueError("path and labelling differ in length")
        if not is_dyck_path(self.steps, self.p):
            raise ValueError(f"{list(self.steps)} is not a {self.p}/{self.n}-Dyck path")
        for i in range(self.n - 1):
            if self.steps[i] == self.steps[i + 1] and self.sigma[i] > self.sigma[i + 1]:
                raise ValueError("labels must increase up each column")

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def area(self) -> tuple[int, ...]:
        return area_vector(self.steps, self.p)

    def rises(self) -> set[tuple[int, int]]:
        """Labels (sigma(i), sigma(i+1)) of the rises."""
        return {(self.sigma[i], self.sigma[i + 1]) for i in range(self.n - 1) if self.steps[i] == self.steps[i + 1]}

    def to_json(self) -> dict:
        return {"p": self.p, "path": list(self.steps), "sigma": list(self.sigma)}


def pf_to_labelled(f: Sequence[int], p: int) -> VertLabelledPath:
    f = tuple(int(x) for x in f)
    if not pf_validate(f, p):
        raise ValueError(f"{f} is not a {p}/{len(f)}-parking function")
    order = sorted(range(len(f)), key=lambda i: (f[i], i))
    return VertLabelledPath(p, tuple(f[i] for i in order), tuple(i + 1 for i in order))


def labelled_to_pf(v: VertLabelledPath) -> tuple[int, ...]:
    """f = sigma . (P_1, ..., P_n)."""
    return perm_act(v.sigma, v.steps)


def sn_act_pf(tau: Sequence[int], v: VertLabelledPath) -> VertLabelledPath:
    """Relabel by tau o sigma and re-sort each column."""
    return pf_to_labelled(perm_act(check_perm(tau), labelled_to_pf(v)), v.p)


# -- combinatorial Anderson map ---------------------------------------------

def anderson_gmv(a: AffinePermutation, p: int) -> VertLabelledPath:
    """The Young-diagram construction on the rectangle [0,p) x [0,n)."""
    if not ap_is_p_stable(a, p):
        raise NotStableError(f"{a} is not {p}-stable")
    n = a.n
    m = min_gap(a)

    def label(x, y):
        return -n - n * x + p * y

    steps, sigma = [], []
    for y in range(n):
        row = sum(1 for x in range(p) if a(label(x, y) + m) > 0)
        steps.append(row)
        sigma.append(a(label(row - 1, y) + m))
    return VertLabelledPath(p, tuple(steps), tuple(sigma))


def gmv_tau(n: int, p: int) -> Perm:
    """tau(i) = p(i-1) mod n, with values in 1..n."""
    return tuple((p * i - 1) % n + 1 for i in range(n))


def anderson_gmv_formula(a: AffinePermutation, p: int) -> VertLabelledPath:
    """A_GMV via the level differences and sigma = w o r^M o tau."""
    if not ap_is_p_stable(a, p):
        raise NotStableError(f"{a} is not {p}-stable")
    n = a.n
    tau = gmv_tau(n, p)
    wp = ap_invert(AffinePermutation(w_p_inverse_window(n, p)))
    diff = [x - y for x, y in zip(normalized_levels(wp), normalized_levels(a))]
    steps = tuple(diff[tau[i] - 1] for i in range(n))
    w = tuple((x - 1) % n + 1 for x in a.window)
    m = min_gap(a)
    r_m = tuple((i - 1 + m) % n + 1 for i in range(1, n + 1))
    sigma = perm_compose(perm_compose(w, r_m), tau)
    return VertLabelledPath(p, steps, sigma)


def anderson_gmv_inverse(v: VertLabelledPath) -> AffinePermutation:
    """Read the labels left of the North steps, reorder by sigma and shift by M = 1 - area."""
    n, p = v.n, v.p
    m = 1 - sum(v.area)
    inv = [0] * n
    for i in range(n):
        inv[v.sigma[i] - 1] = -n * v.steps[i] + p * i + m
    return ap_invert(AffinePermutation(tuple(inv)))


# -- parking functions and the torus ----------------------------------------

def chi(t: TorusElement) -> tuple[int, ...]:
    """Q^vee / pQ^vee -> p/n-parking functions."""
    n = _check_type_a(t.rs)
    p = t.p
    _check_np(n, p)
    x = coroot_to_ambient(t.coords)
    best = min((tuple((v - l) % p for v in x) for l in range(p)), key=sum)
    return best


def chi_inverse(f: Sequence[int], p: int) -> TorusElement:
    f = tuple(int(x) for x in f)
    n = len(f)
    if not pf_validate(f, p):
        raise ValueError(f"{f} is not a {p}/{n}-parking function")
    rs = type_a_system(n)
    l = (-sum(f) * pow(n, -1, p)) % p
    x = [(v + l) % p for v in f]
    x[-1] -= sum(x)
    return TorusElement(rs, p, ambient_to_coroot(x))


# -- classical Dyck paths and zeta_HL ---------------------------------------

def _check_classical(steps: Sequence[int]) -> None:
    if not is_dyck_path(steps, len(steps) + 1):
        raise ValueError(f"{list(steps)} is not a Dyck path")


def zeta_haglund(steps: Sequence[int]) -> tuple[int, ...]:
    """Haglund's zeta map on classical Dyck paths."""
    _check_classical(steps)
    n = len(steps)
    area = area_vector(steps, n + 1)
    out, x = [], 0
    for i in range(n + 1):
        for a in area:
            if a == i:
                out.append(x)
            elif a == i - 1:
                x += 1
    return tuple(out)


def drw(v: VertLabelledPath) -> Perm:
    """Diagonal reading word: labels by increasing area, bottom to top within an area."""
    area = v.area
    order = sorted(range(v.n), key=lambda i: (area[i], i))
    return tuple(v.sigma[i] for i in order)


def valleys(steps: Sequence[int]) -> set[tuple[int, int]]:
    """Pairs (i, j) where the i-th East step is immediately followed by the j-th North step."""
    return {(steps[j], j + 1) for j in range(1, len(steps)) if steps[j] > steps[j - 1]}


@dataclass(frozen=True)
class DiagLabelledPath:
    """A classical Dyck path with the diagonal boxes labelled by w (bottom to top)."""

    w: Perm
    path: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "w", check_perm(self.w))
        object.__setattr__(self, "path", tuple(int(x) for x in self.path))
        if len(self.w) != len(self.path):
            raise ValueError("labelling and path differ in length")
        _check_classical(self.path)
        for i, j in valleys(self.path):
            if self.w[i - 1] > self.w[j - 1]:
                raise ValueError(f"valley ({i},{j}) violates the labelling condition")

    def valley_labels(self) -> set[tuple[int, int]]:
        return {(self.w[i - 1], self.w[j - 1]) for i, j in valleys(self.path)}

    def to_json(self) -> dict:
        return {"w": list(self.w), "path": list(self.path)}


def zeta_hl(v: VertLabelledPath) -> DiagLabelledPath:
    if v.p != v.n + 1:
        raise ValueError("the Haglund-Loehr map needs p = n + 1")
    return DiagLabelledPath(drw(v), zeta_haglund(v.steps))


def sort_on_valleys(w: Sequence[int], steps: Sequence[int]) -> Perm:
    """Sort the values of w along each maximal chain of valleys."""
    nxt = dict(valleys(steps))
    heads = set(nxt) - set(nxt.values())
    out = list(w)
    for h in heads:
        chain = [h]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        vals = sorted(out[i - 1] for i in chain)
        for i, x in zip(chain, vals):
            out[i - 1] = x
    return tuple(out)


def diag_act(u: Sequence[int], d: DiagLabelledPath) -> DiagLabelledPath:
    """u.(w, D) = ((uw)', D)."""
    return DiagLabelledPath(sort_on_valleys(perm_compose(check_perm(u), d.w), d.path), d.path)


def path_of_filter(rs: RootSystem, mask: int) -> tuple[int, ...]:
    """D(J): D_j = #{i < j : e_i - e_j in J}."""
    n = _check_type_a(rs)
    out = []
    for j in range(1, n + 1):
        out.append(sum(1 for i in range(1, j) if mask >> rs.index(root_of_pair(rs, i, j)) & 1))
    return tuple(out)


def filter_of_path(rs: RootSystem, steps: Sequence[int]) -> int:
    n = _check_type_a(rs)
    mask = 0
    for j in range(1, n + 1):
        for i in range(1, steps[j - 1] + 1):
            mask |= 1 << rs.index(root_of_pair(rs, i, j))
    return mask


def _check_m1_type_a(chain: FilterChain) -> None:
    _check_type_a(chain.rs)
    if chain.m != 1:
        raise ValueError("only m = 1 is modelled by diagonally labelled paths")


def epsilon(cls: NNParkClass) -> DiagLabelledPath:
    """[w, J] -> (w', D(J))."""
    _check_m1_type_a(cls.chain)
    return DiagLabelledPath(weyl_to_perm(cls.w_rep), path_of_filter(cls.rs, cls.chain.filters[0]))


def epsilon_inverse(d: DiagLabelledPath) -> NNParkClass:
    from .shi import park_class

    rs = type_a_system(len(d.w))
    chain = FilterChain(rs, (filter_of_path(rs, d.path),))
    return park_class(perm_to_weyl(rs, d.w), chain)


def delta(a: AffinePermutation) -> DiagLabelledPath:
    """(w, D(J)) where a A_o lies in wC and J is the filter of the dominant region of w^{-1} a."""
    e = bridge_to_uniform(a)
    if not is_p_stable(e, a.n + 1):
        raise NotStableError(f"{a} is not {a.n + 1}-stable")
    u = chamber(e)
    dom = aw_compose(finite(u.inverse()), e)
    chain = alcove_to_chain(dom, 1)
    return DiagLabelledPath(weyl_to_perm(u), path_of_filter(e.rs, chain.filters[0]))


def valley_pairs_of_ind(cls: NNParkClass) -> set[tuple[int, int]]:
    return {pair_of_root(r) for r in ind(cls.chain)}


# -- exhaustive verification ------------------------------------------------

def verify_gmv(n: int, p: int) -> dict:
    """Check chi o A = A_GMV on every p-stable affine permutation."""
    _check_np(n, p)
    rs = type_a_system(n)
    mismatches = []
    els = enumerate_p_stable(rs, p)
    for e in els:
        a = bridge_from_uniform(e)
        lhs = chi(anderson(e, p))
        rhs = labelled_to_pf(anderson_gmv(a, p))
        if lhs != rhs:
            mismatches.append({"window": list(a.window), "uniform": list(lhs), "gmv": list(rhs)})
    return {"suite": "gmv", "params": {"n": n, "p": p}, "total": len(els), "mismatches": mismatches}


def verify_zeta_equivalence(n: int) -> dict:
    """Check zeta_HL = eps o zeta o chi^{-1} = delta o A_GMV^{-1} on all parking functions."""
    p = n + 1
    pfs = enumerate_pfs(n, p)
    mismatches = []
    if n == 1:
        # rank 0: a single parking function and a single diagonal path
        v = pf_to_labelled(pfs[0], p)
        if zeta_hl(v) != DiagLabelledPath((1,), (0,)):
            mismatches.append({"pf": list(pfs[0])})
        return {"suite": "zeta", "params": {"n": n}, "total": len(pfs), "mismatches": mismatches}
    for f in pfs:
        v = pf_to_labelled(f, p)
        hl = zeta_hl(v)
        uni = epsilon(zeta(chi_inverse(f, p), 1))
        comb = delta(anderson_gmv_inverse(v))
        if not hl == uni == comb:
            mismatches.append({"pf": list(f), "zeta_hl": hl.to_json(), "uniform": uni.to_json(), "delta": comb.to_json()})
    return {"suite": "zeta", "params": {"n": n}, "total": len(pfs), "mismatches": mismatches}
