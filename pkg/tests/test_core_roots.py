import itertools
from fractions import Fraction

import pytest

from weyl_catalan.core_roots import (
    CartanType,
    EnumerationBoundError,
    build_root_system,
    from_word,
    generated_subgroup,
    identity,
    prime_factors,
    reflection,
    root_poset_leq,
    simple_reflection,
    weyl_enumerate,
)

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]

# (|W|, h) for the classical list
KNOWN = {
    "A1": (2, 2),
    "A2": (6, 3),
    "A3": (24, 4),
    "B2": (8, 4),
    "B3": (48, 6),
    "C3": (48, 6),
    "D4": (192, 6),
    "G2": (12, 6),
    "F4": (1152, 12),
    "E6": (51840, 12),
    "E7": (2903040, 18),
    "E8": (696729600, 30),
}


@pytest.mark.parametrize("name", ALL_TYPES)
def test_basic_identities(name):
    rs = build_root_system(name)
    r = rs.rank
    c = rs.cartan
    assert all(c[i][i] == 2 for i in range(r))
    assert all(c[i][j] <= 0 for i in range(r) for j in range(r) if i != j)
    assert len(rs.roots) == r * rs.h
    assert rs.npos == r * rs.h // 2
    assert rs.h == 1 + sum(rs.theta)
    assert rs.f == abs(round(_det(c)))
    # Phi_1 is the set of simple roots, Phi_{h-1} = {theta}
    assert {a for a in rs.positive_roots if sum(a) == 1} == set(rs.simple_roots)
    assert [a for a in rs.positive_roots if sum(a) == rs.h - 1] == [rs.theta]
    assert all(rs.is_positive(a) == (sum(a) > 0) for a in rs.roots)


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_weyl_order_and_coxeter_number(name):
    rs = build_root_system(name)
    assert (rs.w_count, rs.h) == KNOWN[name]


@pytest.mark.property
@pytest.mark.parametrize("name", ALL_TYPES)
def test_gcd_facts(name):
    # every prime dividing a coefficient of theta or the index of connection divides h
    rs = build_root_system(name)
    bad = set()
    for c in list(rs.theta) + [rs.f]:
        bad |= prime_factors(c) - prime_factors(rs.h)
    assert not bad


@pytest.mark.parametrize("name", ALL_TYPES)
def test_simple_reflections_permute_roots(name):
    rs = build_root_system(name)
    roots = set(rs.roots)
    for i in range(rs.rank):
        s = simple_reflection(rs, i)
        assert (s * s).is_identity()
        assert {s.act_root(a) for a in rs.roots} == roots
        assert s.act_root(rs.simple_roots[i]) == tuple(-x for x in rs.simple_roots[i])


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"])
def test_enumeration_matches_order(name):
    rs = build_root_system(name)
    els = weyl_enumerate(rs)
    assert len(els) == len(set(els)) == rs.w_count
    for w in els[:50]:
        assert from_word(rs, w.word) == w
        assert (w * w.inverse()).is_identity()
        # length equals the number of positive roots sent negative
        assert w.length() == sum(1 for a in rs.positive_roots if not rs.is_positive(w.act_root(a)))


def test_small_examples():
    assert len(weyl_enumerate(build_root_system("A2"))) == 6
    assert len(weyl_enumerate(build_root_system("A1"))) == 2
    assert len(weyl_enumerate(build_root_system("B2"))) == 8
    assert CartanType.parse("B3").rank == 3


@pytest.mark.parametrize("bad", ["D3", "A0", "B1", "G3", "E9", "X2", ""])
def test_invalid_types(bad):
    with pytest.raises(ValueError):
        build_root_system(bad)


def _decomposable_closure(rs):
    """Pairs (a, b) with b - a a nonnegative integer sum of positive roots, found by search."""
    pos = rs.positive_roots
    below = {}
    for b in pos:
        seen = set()
        stack = [b]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            for c in pos:
                u = tuple(x - y for x, y in zip(v, c))
                if all(x >= 0 for x in u) and any(u):
                    stack.append(u)
        below[b] = {a for a in pos if a in seen}
    return below


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"])
def test_root_order_matches_decomposition(name):
    rs = build_root_system(name)
    below = _decomposable_closure(rs)
    for a, b in itertools.product(rs.positive_roots, repeat=2):
        assert root_poset_leq(rs, a, b) == (a in below[b])


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "D4"])
def test_root_order_is_partial_order(name):
    rs = build_root_system(name)
    pos = rs.positive_roots
    for a in pos:
        assert root_poset_leq(rs, a, a)
        assert root_poset_leq(rs, a, rs.theta)
    for a, b in itertools.product(pos, repeat=2):
        if a != b and root_poset_leq(rs, a, b):
            assert not root_poset_leq(rs, b, a)
    minimal = {a for a in pos if not any(b != a and root_poset_leq(rs, b, a) for b in pos)}
    assert minimal == set(rs.simple_roots)


def test_reflection_of_theta():
    rs = build_root_system("A2")
    s = reflection(rs, rs.theta)
    assert s.act_root(rs.theta) == (-1, -1)
    assert s == from_word(rs, [0, 1, 0])
    assert len(generated_subgroup(rs, [s])) == 2
    assert generated_subgroup(rs, [identity(rs)]) == frozenset([identity(rs)])


def test_coroots():
    rs = build_root_system("B2")
    for a in rs.roots:
        # <a, a^vee> = 2
        assert rs.pairing(rs.coroot(a), a) == 2


def test_enumeration_bound(monkeypatch):
    monkeypatch.setenv("WEYL_CATALAN_MAX_ENUM", "100")
    rs = build_root_system("E6")
    with pytest.raises(EnumerationBoundError):
        weyl_enumerate(rs)


def _det(m):
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d
