from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from jackinf.alpha import AlphaPoly, AlphaRat
from jackinf.partitions import Partition

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def alpha_polys(draw, max_degree: int = 3) -> AlphaPoly:
    return AlphaPoly(draw(st.lists(small_fracs, min_size=0, max_size=max_degree + 1)))


@st.composite
def alpha_rats(draw, nonzero: bool = False) -> AlphaRat:
    num = draw(alpha_polys())
    den = draw(alpha_polys(2).filter(lambda q: not q.is_zero()))
    if nonzero and num.is_zero():
        num = AlphaPoly([1])
    return AlphaRat.from_polys(num, den)


@st.composite
def partitions(draw, max_weight: int = 8, min_weight: int = 0) -> Partition:
    n = draw(st.integers(min_weight, max_weight))
    parts = []
    left = n
    while left:
        k = draw(st.integers(1, left))
        parts.append(k)
        left -= k
    return Partition(parts)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
