from hypothesis import strategies as st

from fockcrystal.partitions import ChargedMultipartition, partition


@st.composite
def partitions(draw, max_len=4, max_part=5):
    return partition(sorted(draw(st.lists(st.integers(1, max_part), max_size=max_len)), reverse=True))


@st.composite
def charged(draw, levels=(1, 2, 3), max_len=3, max_part=4, spread=3):
    l = draw(st.sampled_from(levels))
    parts = tuple(draw(partitions(max_len, max_part)) for _ in range(l))
    charge = tuple(draw(st.integers(-spread, spread)) for _ in range(l))
    return ChargedMultipartition(parts, charge)
