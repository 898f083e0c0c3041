import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import affine_elements
from weyl_catalan.affine_weyl import (
    act_on_affine_root,
    affine_roots_of_height,
    alcove_address,
    alcoves_in_box,
    anderson,
    aw_identity,
    finite,
    floors,
    is_dominant,
    is_p_stable,
    root_address,
    stabilizer_generators,
    torus_act,
    torus_enumerate,
)
from weyl_catalan.core_roots import build_root_system, generated_subgroup, identity, reflection, weyl_enumerate
from weyl_catalan.shi import (
    FilterChain,
    NNParkClass,
    alcove_to_chain,
    canonical_representative,
    chain_to_minimal_alcove,
    dominant_count,
    empty_chain,
    enumerate_park,
    gamma,
    geometric_chains,
    ind,
    indecomposables,
    is_m_shi_alcove,
    is_order_filter,
    k_alpha,
    k_vector,
    m_shi_alcoves,
    mask_of,
    minimal_alcove_of_region,
    order_filters,
    park_act,
    park_class,
    shi_chamber_hyperplanes,
    signature,
    theta_inverse,
    theta_map,
    validate_geometric,
    zeta,
)

A2 = build_root_system("A2")
B2 = build_root_system("B2")
A1, AL2, TH = (1, 0), (0, 1), (1, 1)
SMALL = [("A2", 1), ("A2", 2), ("B2", 1), ("B2", 2), ("G2", 1), ("A3", 1)]


def systems(cases=SMALL):
    return [pytest.param(build_root_system(n), m, id=f"{n}-m{m}") for n, m in cases]


# -- chains of filters ------------------------------------------------------

def test_validate_examples():
    assert validate_geometric(empty_chain(A2, 2))
    assert not validate_geometric(FilterChain.from_roots(A2, [[TH], [TH]]))
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]:
        rs = build_root_system(name)
        for f in order_filters(rs):
            assert validate_geometric(FilterChain(rs, (f,)))


def test_malformed_chains_raise():
    with pytest.raises(ValueError):
        validate_geometric(FilterChain.from_roots(A2, [[A1]]))
    with pytest.raises(ValueError):
        validate_geometric(FilterChain.from_roots(A2, [[TH], [A1, AL2, TH]]))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "G2"])
def test_order_filters_by_brute_force(name):
    rs = build_root_system(name)
    brute = [mask for mask in range(1 << rs.npos) if is_order_filter(rs, mask)]
    assert sorted(order_filters(rs)) == brute


def test_k_examples():
    e = empty_chain(A2, 1)
    assert [k_alpha(e, a) for a in (A1, AL2, TH)] == [0, 0, 0]
    j = FilterChain.from_roots(A2, [[TH]])
    assert [k_alpha(j, a) for a in (A1, AL2, TH)] == [0, 0, 1]
    full = FilterChain.from_roots(A2, [[A1, AL2, TH]])
    assert [k_alpha(full, a) for a in (A1, AL2, TH)] == [1, 1, 2]
    x = chain_to_minimal_alcove(full)
    assert [root_address(x, a) for a in (A1, AL2, TH)] == [1, 1, 2]
    assert chain_to_minimal_alcove(empty_chain(A2, 3)) == aw_identity(A2)


def _decompositions(rs, a, start=0):
    """All multisets of positive roots summing to a, as sorted index tuples."""
    out = []
    pos = rs.positive_roots
    for i in range(start, rs.npos):
        rest = tuple(x - y for x, y in zip(a, pos[i]))
        if any(x < 0 for x in rest):
            continue
        if not any(rest):
            out.append((i,))
            continue
        for tail in _decompositions(rs, rest, i):
            out.append((i,) + tail)
    return out


@pytest.mark.parametrize("rs,m", systems([("A2", 1), ("A2", 2), ("A2", 3), ("B2", 1), ("B2", 2), ("G2", 1), ("G2", 2)]))
def test_k_alpha_literal_definition(rs, m):
    for chain in geometric_chains(rs, m):
        for a in rs.positive_roots:
            best = 0
            for parts in _decompositions(rs, a):
                best = max(best, sum(max((i for i in range(m + 1) if chain.J(i) >> j & 1), default=0) for j in parts))
            assert k_alpha(chain, a) == best


@pytest.mark.parametrize("rs,m", systems())
def test_chains_and_dominant_alcoves(rs, m):
    chains = geometric_chains(rs, m)
    assert len(chains) == dominant_count(rs, m)
    for c in chains:
        x = chain_to_minimal_alcove(c)
        assert is_dominant(x)
        assert is_p_stable(x, m * rs.h + 1)
        assert alcove_to_chain(x, m) == c
    dom = [x for x in m_shi_alcoves(rs, m) if is_dominant(x)]
    assert {alcove_to_chain(x, m) for x in dom} == set(chains)


def test_a2_dominant_counts():
    chains = geometric_chains(A2, 1)
    assert len(chains) == 5
    assert {c.filters[0] for c in chains} == set(order_filters(A2))
    assert len(geometric_chains(A2, 2)) == 12
    assert alcove_to_chain(aw_identity(A2), 2) == empty_chain(A2, 2)


def test_alcove_to_chain_rejects_non_dominant():
    x = finite(reflection(A2, A1))
    with pytest.raises(ValueError):
        alcove_to_chain(x, 1)


# -- indecomposables and floors --------------------------------------------

def test_indecomposable_examples():
    assert ind(empty_chain(A2, 1)) == set()
    full = FilterChain.from_roots(A2, [[A1, AL2, TH]])
    assert indecomposables(full, 1) == {A1, AL2}
    with pytest.raises(ValueError):
        indecomposables(full, 2)


@pytest.mark.parametrize("rs,m", systems())
def test_indecomposables_are_floors(rs, m):
    for c in geometric_chains(rs, m):
        fl = floors(chain_to_minimal_alcove(c))
        for k in range(1, m + 1):
            assert indecomposables(c, k) == {a for a, j in fl if j == k}
        # ind is an antichain of minimal elements of J_m
        top = c.J(m)
        for a in ind(c):
            assert top >> rs.index(a) & 1
            assert not any(
                b != a and top >> rs.index(b) & 1 and all(x <= y for x, y in zip(b, a)) for b in rs.positive_roots
            )


@pytest.mark.parametrize("rs,m", systems([("A2", 1), ("A2", 2), ("B2", 1), ("B2", 2)]))
def test_ind_from_stable_element(rs, m):
    p = m * rs.h + 1
    for c in geometric_chains(rs, m):
        x = chain_to_minimal_alcove(c)
        image = {act_on_affine_root(x, r) for r in affine_roots_of_height(rs, p)}
        assert ind(c) == {r.root for r in image if r.k == 0} == stabilizer_generators(x, p)


@pytest.mark.parametrize("rs,m", systems([("A2", 1), ("A2", 2), ("A2", 3), ("B2", 1), ("B2", 2), ("G2", 1), ("G2", 2)]))
def test_chamber_hyperplanes(rs, m):
    for w in weyl_enumerate(rs):
        brute = set()
        for b in rs.positive_roots:
            for k in range(-m + 1, m + 1):
                # H_b^k meets wC iff <x, b> takes the value k somewhere on wC
                if k != 0 and (k > 0) == rs.is_positive(w.inverse().act_root(b)):
                    brute.add((b, k))
        assert shi_chamber_hyperplanes(rs, w, m) == brute


# -- m-Shi alcoves and minimal alcoves --------------------------------------

@given(affine_elements(types=["A1", "A2", "B2", "G2"]), st.integers(1, 3))
def test_shi_alcove_iff_stable(x, m):
    assert is_m_shi_alcove(x, m) == is_p_stable(x, m * x.rs.h + 1)


def test_shi_alcove_counts_in_box():
    box2 = alcoves_in_box(A2, 2)
    assert sum(is_m_shi_alcove(x, 1) for x in box2) == 16
    box5 = alcoves_in_box(A2, 5)
    assert sum(is_m_shi_alcove(x, 2) for x in box5) == 49
    assert sum(is_m_shi_alcove(x, 1) for x in box5) == 16


@pytest.mark.parametrize("rs,m", systems())
def test_shi_alcove_totals(rs, m):
    q = m * rs.h + 1
    els = m_shi_alcoves(rs, m)
    assert len(els) == q**rs.rank
    assert len({signature(x, m) for x in els}) == len(els)
    assert all(is_m_shi_alcove(x, m) for x in els)


@pytest.mark.parametrize("m", [1, 2])
def test_minimal_alcove_against_box(m):
    box = alcoves_in_box(A2, 3)
    by_sig = {}
    for x in box:
        by_sig.setdefault(signature(x, m), []).append(alcove_address(x))
    for x in box:
        r = minimal_alcove_of_region(x, m)
        assert signature(r, m) == signature(x, m)
        assert is_m_shi_alcove(r, m)
        assert minimal_alcove_of_region(r, m) == r
        rk = alcove_address(r)
        for other in by_sig[signature(x, m)]:
            assert all(abs(u) <= abs(v) for u, v in zip(rk, other))


@given(affine_elements(types=["A2", "B2", "G2"], max_len=16), st.integers(1, 2))
def test_minimal_alcove_shrinks_address(x, m):
    r = minimal_alcove_of_region(x, m)
    assert all(abs(u) <= abs(v) for u, v in zip(alcove_address(r), alcove_address(x)))


# -- parking classes and the zeta map ---------------------------------------

@pytest.mark.parametrize("rs,m", systems())
def test_theta_round_trips(rs, m):
    park = enumerate_park(rs, m)
    assert len(park) == (m * rs.h + 1) ** rs.rank
    images = [theta_map(c) for c in park]
    assert set(images) == set(m_shi_alcoves(rs, m))
    for c, x in zip(park, images):
        assert theta_inverse(x, m) == c
        assert NNParkClass.from_json(rs, c.to_json()) == c


def test_theta_identity():
    c = park_class(identity(A2), empty_chain(A2, 1))
    assert theta_map(c) == aw_identity(A2)
    assert zeta(gamma(c), 1) == c


@pytest.mark.parametrize("rs,m", systems())
def test_park_orbits_and_stabilizers(rs, m):
    ws = weyl_enumerate(rs)
    park = enumerate_park(rs, m)
    seen = set()
    total = 0
    for c in park:
        assert park_act(identity(rs), c) == c
        if c in seen:
            continue
        orbit = {park_act(u, c) for u in ws}
        seen |= orbit
        total += len(orbit)
    assert total == len(park)
    for chain in geometric_chains(rs, m):
        base = park_class(identity(rs), chain)
        stab = {u for u in ws if park_act(u, base) == base}
        assert stab == generated_subgroup(rs, [reflection(rs, b) for b in ind(chain)])


@pytest.mark.parametrize("rs,m", systems())
def test_canonical_representative(rs, m):
    for chain in geometric_chains(rs, m)[:6]:
        for w in weyl_enumerate(rs):
            v = canonical_representative(w, chain)
            assert all(rs.is_positive(v.act_root(b)) for b in ind(chain))
            assert v.inverse() * w in generated_subgroup(rs, [reflection(rs, b) for b in ind(chain)])


@pytest.mark.property
@pytest.mark.parametrize("rs,m", systems([("A2", 1), ("A2", 2), ("B2", 1), ("B2", 2)]))
def test_gamma_zeta_equivariant(rs, m):
    p = m * rs.h + 1
    ws = weyl_enumerate(rs)
    park = enumerate_park(rs, m)
    assert {gamma(c) for c in park} == set(torus_enumerate(rs, p))
    for c in park:
        t = gamma(c)
        assert t == anderson(theta_map(c), p)
        assert zeta(t, m) == c
        for u in ws:
            assert gamma(park_act(u, c)) == torus_act(u, t)
            assert zeta(torus_act(u, t), m) == park_act(u, c)


def test_zeta_rejects_wrong_modulus():
    from weyl_catalan.affine_weyl import TorusElement

    with pytest.raises(ValueError):
        zeta(TorusElement(A2, 5, (0, 0)), 1)


def test_mask_helpers():
    assert mask_of(A2, [A1, TH]) == FilterChain.from_roots(A2, [[A1, TH]]).filters[0]
    assert k_vector(empty_chain(B2, 2)) == (0,) * B2.npos
