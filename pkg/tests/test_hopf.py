import random

from qsphere.exactq import ONE, RatQ
from qsphere.hopf import (
    TensorPoly,
    antipode,
    antipode_axiom_holds,
    check_antipode_axiom,
    check_coassociativity,
    check_counit_axiom,
    check_grading_consistency,
    coaction,
    coaction_via_delta,
    delta,
    delta_is_multiplicative,
)
from qsphere.ncalg import ONE_POLY, UNIT, Mono, NCPoly, iter_monomials, nc_mul, normalize_letters
from qsphere.verify import random_element

A, B, C, D = (NCPoly.gen(ch) for ch in "abcd")
GENS = [A, B, C, D]


def tensor(*pairs):
    return TensorPoly({(Mono.letter(x), Mono.letter(y)): ONE for x, y in pairs})


def test_delta_generators():
    assert delta(A) == tensor("aa", "bc")
    assert delta(B) == tensor("ab", "bd")
    assert delta(C) == tensor("ca", "dc")
    assert delta(D) == tensor("cb", "dd")
    assert delta(ONE_POLY) == TensorPoly({(UNIT, UNIT): ONE})


def test_antipode_examples():
    assert antipode(B) == B.scale(RatQ.q_power(1, -1))
    assert antipode(C) == C.scale(RatQ.q_power(-1, -1))
    assert antipode(A) == D and antipode(D) == A
    # S(ab) = S(b) S(a) = -q b d
    assert antipode(nc_mul(A, B)) == normalize_letters("bd", RatQ.q_power(1, -1))
    assert antipode(ONE_POLY) == ONE_POLY


def test_antipode_is_antihomomorphism():
    rng = random.Random(8)
    for _ in range(100):
        x, y = random_element(rng, 3), random_element(rng, 3)
        assert antipode(nc_mul(x, y)) == nc_mul(antipode(y), antipode(x))


def test_antipode_axiom_generators():
    # S(a)a + S(b)c = da - q bc = 1
    assert nc_mul(D, A) - nc_mul(B, C).scale(RatQ.q_power(1)) == ONE_POLY
    assert check_antipode_axiom(GENS + [ONE_POLY])


def test_coassociativity():
    assert check_coassociativity(GENS + [ONE_POLY])
    rng = random.Random(1)
    assert check_coassociativity([random_element(rng, 3) for _ in range(100)])


def test_counit_axiom():
    rng = random.Random(2)
    assert check_counit_axiom(GENS + [ONE_POLY] + [random_element(rng, 3) for _ in range(100)])


def test_antipode_axiom_random():
    rng = random.Random(3)
    assert check_antipode_axiom([random_element(rng, 3) for _ in range(100)])


def test_delta_multiplicative():
    rng = random.Random(4)
    for _ in range(200):
        assert delta_is_multiplicative(random_element(rng, 3), random_element(rng, 3))


def test_coaction_examples():
    assert coaction(A) == {1: A}
    assert coaction(D) == {-1: D}
    assert coaction(A + B) == {1: A, -1: B}
    assert coaction_via_delta(A + B) == {1: A, -1: B}


def test_grading_consistency_all_monomials():
    assert check_grading_consistency(5) == []


def test_coaction_is_multiplicative():
    rng = random.Random(6)
    monos = list(iter_monomials(3))
    for _ in range(100):
        x, y = NCPoly.mono(rng.choice(monos)), NCPoly.mono(rng.choice(monos))
        (ex, _), = coaction(x).items()
        (ey, _), = coaction(y).items()
        assert set(coaction_via_delta(nc_mul(x, y))) <= {ex + ey}


def test_broken_relation_detected():
    # sanity: a wrong antipode does fail the axiom
    from qsphere import hopf

    saved = hopf._ANTIPODE_GEN["b"]
    hopf._ANTIPODE_GEN["b"] = B.scale(RatQ.q_power(1))
    hopf.antipode_mono.cache_clear()
    try:
        assert not antipode_axiom_holds(A)
    finally:
        hopf._ANTIPODE_GEN["b"] = saved
        hopf.antipode_mono.cache_clear()
    assert antipode_axiom_holds(A)
