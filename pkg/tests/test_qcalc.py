import pytest

from cyclojones import (
    IndexOutOfRange,
    LaurentPoly,
    NotAdmissible,
    brace,
    brace_fact,
    bracket,
    bracket_fact,
    cyclo_block,
    framing_mu,
    half_twist_delta,
    pochhammer,
    qbinom,
    qbinom_balanced,
)

A = LaurentPoly.monomial


def test_brace():
    assert brace(1) == A(2) - A(-2)
    assert brace(0).is_zero
    assert brace(3) == A(6) - A(-6)
    for n in range(-10, 11):
        assert brace(-n) == -brace(n)


def test_bracket():
    assert bracket(1) == 1
    assert bracket(0).is_zero
    assert bracket(2) == A(2) + A(-2)  # {2}/{1} expanded


def test_factorials(cache):
    assert brace_fact(0, cache) == 1
    assert brace_fact(2, cache) == A(6) - A(2) - A(-2) + A(-6)  # {2}{1}
    assert bracket_fact(2, cache) == A(2) + A(-2)
    with pytest.raises(IndexOutOfRange):
        brace_fact(-1, cache)


def test_balanced_binomial(cache):
    for n in range(0, 21):
        assert qbinom_balanced(n, 0, cache) == 1
    assert qbinom_balanced(2, 1, cache) == A(2) + A(-2)  # equals [2]
    assert qbinom_balanced(3, 5, cache).is_zero
    assert qbinom_balanced(3, -1, cache).is_zero


def test_pochhammer(cache):
    assert pochhammer(1, 0, cache) == 1
    assert pochhammer(1, 2, cache) == 1 - A(4) - A(8) + A(12)  # (1-q)(1-q^2)
    assert pochhammer(1 - 3, 3, cache).is_zero  # contains the factor 1-q^0


def _qbinom_pascal(n, i):
    # independent oracle: Gaussian-binomial Pascal recursion from scratch
    if i < 0 or i > n:
        return LaurentPoly.zero()
    if n == 0:
        return LaurentPoly.one()
    return _qbinom_pascal(n - 1, i - 1) + A(4 * i) * _qbinom_pascal(n - 1, i)


def test_qbinom(cache):
    for n in range(0, 9):
        assert qbinom(n, n, cache) == 1
    assert qbinom(2, 1, cache) == 1 + A(4)
    # frozen from the Pascal oracle: 1 + q + 2q^2 + q^3 + q^4
    assert qbinom(4, 2, cache) == 1 + A(4) + A(8, 2) + A(12) + A(16)
    for n in range(0, 9):
        for i in range(0, n + 1):
            assert qbinom(n, i, cache) == _qbinom_pascal(n, i)


def test_cyclo_block(cache):
    for N in range(1, 11):
        assert cyclo_block(N, 0, cache) == 1
    assert cyclo_block(2, 1, cache) == A(8) - A(4) - A(-4) + A(-8)  # {3}{1}
    with pytest.raises(IndexOutOfRange):
        cyclo_block(3, 3, cache)


def test_framing_mu():
    assert framing_mu(0) == 1
    assert framing_mu(1) == -A(3)
    assert framing_mu(2) == A(8)


def test_half_twist_delta():
    assert half_twist_delta(0, 1, 1) == -A(-3)
    assert half_twist_delta(2, 1, 1) == A(1)
    with pytest.raises(NotAdmissible):
        half_twist_delta(1, 1, 1)  # parity
    with pytest.raises(NotAdmissible):
        half_twist_delta(6, 1, 1)  # triangle


def test_delta_square_law():
    for a in range(0, 21):
        for b in range(0, 21):
            for c in range(abs(a - b), min(a + b, 20) + 1, 2):
                delta = half_twist_delta(c, a, b)
                assert delta * delta * framing_mu(a) * framing_mu(b) == framing_mu(c)


def test_balanced_gaussian_bridge(cache):
    for n in range(0, 17):
        for i in range(0, n + 1):
            assert qbinom_balanced(n, i, cache) == A(-2 * i * (n - i)) * qbinom(n, i, cache)


def test_pascal_identity(cache):
    for n in range(1, 17):
        for i in range(0, n + 1):
            rhs = qbinom(n - 1, i - 1, cache) + A(4 * i) * qbinom(n - 1, i, cache)
            assert qbinom(n, i, cache) == rhs


def test_cyclo_block_pochhammer_identity(cache):
    # {N+k}!/({N-1-k}!{N}) = (-1)^k q^(-k(k+1)/2) (q^(1-N);q)_k (q^(1+N);q)_k
    for N in range(1, 9):
        for k in range(0, N):
            sign = -1 if k & 1 else 1
            rhs = (
                A(-2 * k * (k + 1), sign)
                * pochhammer(1 - N, k, cache)
                * pochhammer(1 + N, k, cache)
            )
            assert cyclo_block(N, k, cache) == rhs


def test_brace_bracket_symmetry():
    for n in range(-30, 31):
        assert brace(n) == brace(1) * bracket(n)


def test_cache_equals_recomputation(cache):
    fresh = type(cache)()
    assert cache.brace_fact(12) == fresh.brace_fact(12)
    assert cache.pochhammer(2, 7) == fresh.pochhammer(2, 7)
    assert cache.qbinom(9, 4) == fresh.qbinom(9, 4)
