import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from weyl_catalan.affine_weyl import aw_compose, aw_identity, simple_affine_reflections
from weyl_catalan.core_roots import build_root_system

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


def element_from_generators(rs, word):
    gens = simple_affine_reflections(rs)
    x = aw_identity(rs)
    for i in word:
        x = aw_compose(x, gens[i])
    return x


@st.composite
def affine_elements(draw, types=SMALL_TYPES, max_len=12):
    """A random affine Weyl element given as a product of simple affine reflections."""
    rs = build_root_system(draw(st.sampled_from(types)))
    word = draw(st.lists(st.integers(0, rs.rank), max_size=max_len))
    return element_from_generators(rs, word)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
