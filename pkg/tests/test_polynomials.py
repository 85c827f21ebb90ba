from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from realizability import polynomials as pp


def test_char_poly_2x2():
    d = [[Fraction(2), Fraction(1)], [Fraction(0), Fraction(3)]]
    # det(D - uE) = (2-u)(3-u) = 6 - 5u + u^2
    assert pp.char_poly(d) == [Fraction(6), Fraction(-5), Fraction(1)]


def test_char_poly_eval_matches_det():
    from realizability.linalg import det

    d = [
        [Fraction(1), Fraction(2), Fraction(-1)],
        [Fraction(0), Fraction(1, 2), Fraction(3)],
        [Fraction(-2), Fraction(1), Fraction(4)],
    ]
    chi = pp.char_poly(d)
    for u in [Fraction(0), Fraction(1), Fraction(-3, 2)]:
        shifted = [
            [d[i][j] - (u if i == j else 0) for j in range(3)] for i in range(3)
        ]
        assert pp.evaluate(chi, u) == det(shifted)


def test_isolate_real_roots_cubic():
    # (u+2)(u+1)(u-3) = u^3 - 7u - 6
    p = pp.poly([-6, -7, 0, 1])
    roots = pp.isolate_real_roots(p)
    assert len(roots) == 3
    for (a, b), expect in zip(roots, [-2, -1, 3]):
        assert a < expect <= b
    negs = pp.isolate_real_roots(p, hi=0)
    assert len(negs) == 2


def test_sign_at_root():
    # root of u^2 - 2 in (1, 2) is sqrt(2)
    p = pp.poly([-2, 0, 1])
    (interval,) = pp.isolate_real_roots(p, lo=0)
    # q(sqrt 2) = sqrt2 - 1 > 0
    assert pp.sign_at_root(pp.poly([-1, 1]), p, interval) == 1
    # q = u^2 - 2 itself vanishes
    assert pp.sign_at_root(p, p, interval) == 0
    # q = 3 - 2u : 3 - 2 sqrt 2 > 0
    assert pp.sign_at_root(pp.poly([3, -2]), p, interval) == 1
    # q = 1 - u: negative at sqrt 2
    assert pp.sign_at_root(pp.poly([1, -1]), p, interval) == -1


def test_squarefree_and_gcd():
    # (u-1)^2 (u+2)
    p = pp.mul(pp.mul(pp.poly([-1, 1]), pp.poly([-1, 1])), pp.poly([2, 1]))
    sf = pp.squarefree(p)
    assert pp.degree(sf) == 2
    assert pp.evaluate(sf, 1) == 0 and pp.evaluate(sf, -2) == 0
    g = pp.gcd(p, pp.derivative(p))
    assert pp.degree(g) == 1 and pp.evaluate(g, 1) == 0


@given(
    st.lists(st.integers(-6, 6), min_size=1, max_size=5),
    st.lists(st.integers(-6, 6), min_size=1, max_size=5),
)
@settings(max_examples=200, deadline=None, derandomize=True)
def test_divmod_reconstructs(a, b):
    p, q = pp.poly(a), pp.poly(b)
    if not q:
        return
    quot, rem = pp.divmod_poly(p, q)
    assert pp.add(pp.mul(quot, q), rem) == p
    assert pp.degree(rem) < pp.degree(q) or not rem


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
@settings(max_examples=150, deadline=None, derandomize=True)
def test_isolated_intervals_each_contain_one_sign_change(coeffs):
    p = pp.poly(coeffs)
    if pp.degree(p) < 1:
        return
    sf = pp.squarefree(p)
    for a, b in pp.isolate_real_roots(p):
        chain = pp.sturm_chain(sf)
        assert pp.count_roots(chain, a, b) == 1
