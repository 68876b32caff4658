import pytest
from hypothesis import given, strategies as st

from pptoggle.errors import DomainError
from pptoggle.oracle import partitions_up_to
from pptoggle.partitions import interlacers_below, interlaces, part, weight
from pptoggle.toggles import toggle_between, toggle_pop, toggle_push


def test_between_worked_example():
    assert toggle_between((5, 3, 1, 1), (3, 2, 1), (3, 2)) == (5, 3, 1)


def test_between_entrywise():
    # each entry lands at the opposite end of its interval; the weight law
    # |T| = |lam| + |mu| - |nu| pins the value
    assert toggle_between((2, 1), (1, 1), (1,)) == (2,)


def test_between_is_involution():
    cases = [((5, 3, 1, 1), (3, 2, 1), (3, 2)), ((2, 1), (1, 1), (1,)),
             ((4, 4), (4, 2), (3,))]
    for lam, nu, mu in cases:
        assert toggle_between(lam, toggle_between(lam, nu, mu), mu) == nu


def test_pop_worked_example():
    assert toggle_pop((4, 2, 1), (5, 3, 1, 1), (3, 2, 1)) == ((2, 2), 1)


def test_pop_trivial_cases():
    assert toggle_pop((), (), ()) == ((), 0)
    for k in range(5):
        assert toggle_pop((), (k,) if k else (), ()) == ((), k)


def test_push_inverts_the_pop_example():
    assert toggle_push((4, 2, 1), (2, 2), (3, 2, 1), 1) == (5, 3, 1, 1)


def test_push_trivial_cases():
    for k in range(1, 4):
        assert toggle_push((), (), (), k) == (k,)
    # the weight law |T| = |lam| + |mu| - |nu| + n forces both entries
    assert toggle_push((1,), (), (1,), 0) == (1, 1)
    assert toggle_pop((1,), (1, 1), (1,)) == ((), 0)


def test_interlacing_violations_raise():
    with pytest.raises(DomainError):
        toggle_between((1,), (3,), (1,))
    with pytest.raises(DomainError):
        toggle_pop((3,), (1,), ())
    with pytest.raises(DomainError):
        toggle_push((1,), (3,), (1,), 0)
    with pytest.raises(DomainError):
        toggle_push((1,), (1,), (1,), -1)


def _box(max_part, max_len):
    return [lam for lam in partitions_up_to(max_part * max_len)
            if len(lam) <= max_len and part(lam, 1) <= max_part]


def test_exhaustive_small_triples():
    box = _box(3, 3)
    for nu in box:
        for mu in interlacers_below(nu):
            for lam in box:
                if not interlaces(lam, nu):
                    continue
                t = toggle_between(lam, nu, mu)
                assert toggle_between(lam, t, mu) == nu
                assert weight(t) == weight(lam) + weight(mu) - weight(nu)
                assert interlaces(lam, t) and interlaces(t, mu)
    for nu in box:
        for lam in interlacers_below(nu):
            for mu in interlacers_below(nu):
                t, n = toggle_pop(lam, nu, mu)
                assert n == part(nu, 1) - max(part(lam, 1), part(mu, 1)) >= 0
                assert weight(t) == weight(lam) + weight(mu) - weight(nu) + n
                assert interlaces(lam, t) and interlaces(mu, t)
                assert toggle_push(lam, t, mu, n) == nu


interval_choices = st.lists(st.integers(min_value=0, max_value=3),
                            min_size=1, max_size=5)


@given(interval_choices, interval_choices, st.integers(0, 3))
def test_random_pop_push_round_trip(drops_a, drops_b, n):
    # build lam >- nu -< mu from random entry slacks
    nu = tuple(sorted((d + 1 for d in drops_a), reverse=True))
    lam = tuple(sorted((part(nu, i) + d for i, d in
                        enumerate(drops_b, start=1)), reverse=True))
    lam = tuple(v for v in lam if v)
    if not (interlaces(lam, nu) and interlaces(lam, nu)):
        return
    mu = lam
    t = toggle_push(lam, nu, mu, n)
    assert toggle_pop(lam, t, mu) == (nu, n)
