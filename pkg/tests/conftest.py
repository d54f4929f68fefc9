import sys

from hypothesis import settings, strategies as st

from schubop.polyring import SparsePolynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def polynomials(n: int, max_terms: int = 5, max_exp: int = 4, dyadic: bool = True):
    """Random polynomials in ``x_1..x_n`` with small dyadic coefficients."""
    exps = st.tuples(*[st.integers(0, max_exp)] * n)
    coeffs = st.integers(-9, 9).filter(bool)
    if dyadic:
        coeffs = st.tuples(coeffs, st.sampled_from([1, 2, 4])).map(lambda p: f"{p[0]}/{p[1]}")
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: SparsePolynomial(n, d))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
