from hypothesis import HealthCheck, settings, strategies as st

from hookbias.partitions import Partition

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=30, odd=False, distinct=False):
    """Random partition of size at most ``max_size``."""
    budget = draw(st.integers(0, max_size))
    parts = []
    while budget > 0:
        p = draw(st.integers(1, budget))
        if odd and p % 2 == 0:
            p -= 1
        if p == 0 or (distinct and p in parts):
            break
        parts.append(p)
        budget -= p
    return Partition(sorted(parts, reverse=True))
