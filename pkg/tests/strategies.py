from hypothesis import strategies as st

from disent.service.model import GaussianParams, PhysicalConstants

WEAK_RATIO = 1e-4


@st.composite
def coupling_ratios(
    draw, min_ratio=0.05, max_ratio=0.95, product=True, weak=False
):
    """|a12| / a11 in [min_ratio, max_ratio], or exactly zero.

    ``weak`` adds ratios in [1e-4, min_ratio). There c^2 + c'^2 is a
    difference of nearly equal numbers, so c and c' lose digits and only
    decisions and loosely toleranced values are compared.
    """
    ratios = st.floats(min_value=min_ratio, max_value=max_ratio)
    if weak:
        ratios = ratios | st.floats(
            min_value=WEAK_RATIO, max_value=min_ratio, exclude_max=True
        )
    if product:
        ratios = st.just(0.0) | ratios
    return draw(ratios)


@st.composite
def gaussian_params(
    draw,
    min_a11=0.5,
    max_a11=4.0,
    min_ratio=0.05,
    product=True,
    weak=False,
):
    a11 = draw(st.floats(min_value=min_a11, max_value=max_a11))
    ratio = draw(
        coupling_ratios(min_ratio=min_ratio, product=product, weak=weak)
    )
    sign = draw(st.sampled_from([-1.0, 1.0]))
    return GaussianParams(a11, sign * a11 * ratio)


@st.composite
def physical_constants(draw, low=0.5, high=2.0):
    values = st.floats(min_value=low, max_value=high)
    return PhysicalConstants(m=draw(values), hbar=draw(values), k=draw(values))


temperatures = st.floats(min_value=0.0, max_value=3.0)
warm_temperatures = st.floats(min_value=0.05, max_value=3.0)
times = st.floats(min_value=-10.0, max_value=10.0)
short_times = st.floats(min_value=-1.0, max_value=1.0)
