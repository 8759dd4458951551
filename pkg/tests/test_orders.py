import itertools

import pytest

import conescope as cs
from conescope.quadratic import QuadraticValue, sqrt2_sign


# -- exact sqrt(2) arithmetic --------------------------------------------------

def test_sqrt2_sign_cases():
    assert sqrt2_sign(0, 0) == 0
    assert sqrt2_sign(3, 0) == 1
    assert sqrt2_sign(0, -2) == -1
    # -1 + sqrt2 > 0 because 1^2 < 2*1^2
    assert sqrt2_sign(-1, 1) == 1
    # 3 - 2*sqrt2 > 0 because 9 > 8
    assert sqrt2_sign(3, -2) == 1
    # 7 - 5*sqrt2 < 0 because 49 < 50
    assert sqrt2_sign(7, -5) == -1
    assert sqrt2_sign(-3, 2) == -1


def test_quadratic_value_arithmetic():
    v = QuadraticValue(1, -1) + QuadraticValue(2, 1)
    assert v == QuadraticValue(3, 0)
    assert (-QuadraticValue(1, 2)).sign() == -1
    assert QuadraticValue(1, 1).scaled(-2) == QuadraticValue(-2, -2)
    with pytest.raises(TypeError):
        QuadraticValue(1.5, 0)


# -- hyperplane signs ------------------------------------------------------------

def test_hyperplane_sign_examples():
    weights = [(1, 0), (0, 1)]  # (1, sqrt2)
    assert cs.hyperplane_sign((1, 0), weights) is cs.Sign.POSITIVE
    assert cs.hyperplane_sign((-1, 1), weights) is cs.Sign.POSITIVE
    assert cs.hyperplane_sign((1, -1), weights) is cs.Sign.NEGATIVE
    # tie-break: value 0, lex on (0, -3)
    assert cs.hyperplane_sign((0, -3), [(1, 0), (0, 0)]) is cs.Sign.NEGATIVE
    assert cs.hyperplane_sign((0, 0), [(1, 0), (0, 0)]) is cs.Sign.IDENTITY


def test_hyperplane_all_zero_weights():
    with pytest.raises(cs.AllZeroWeights):
        cs.hyperplane_sign((1, 2), [(0, 0), (0, 0)])


def test_irrational_weights_never_tie_on_ball_6(z2):
    # 1*m + sqrt2*n = 0 has no nonzero integer solutions; check on B(6)
    for g in z2.ball(6).sorted_elements():
        m, n = z2.exponents(g)
        if (m, n) == (0, 0):
            continue
        assert sqrt2_sign(m, n) != 0


def test_hyperplane_lex_cone_is_lex_order(hyper_lex, z2):
    for g in z2.ball(4).sorted_elements():
        m, n = z2.exponents(g)
        expected = (cs.Sign.POSITIVE if (m > 0 or (m == 0 and n > 0)) else
                    cs.Sign.NEGATIVE if (m, n) != (0, 0) else cs.Sign.IDENTITY)
        assert hyper_lex.sign(g) is expected


# -- klein cone --------------------------------------------------------------------

def test_klein_cone_examples(klein, klein_oracle):
    assert klein_oracle.sign(klein.element("a")) is cs.Sign.POSITIVE
    assert klein_oracle.sign(klein.element("b")) is cs.Sign.POSITIVE
    # b^-1 a = a * b is a product of the two semigroup generators
    g = klein.element("Ba")
    assert g == klein.element("a") * klein.element("b")
    assert klein_oracle.sign(g) is cs.Sign.POSITIVE
    assert klein_oracle.sign(klein.element("BB")) is cs.Sign.NEGATIVE
    assert klein_oracle.sign(klein.identity()) is cs.Sign.IDENTITY


def test_klein_cone_is_generated_semigroup(klein, klein_oracle):
    # every positive in B(4) is a product of a's and b's: check by closure
    ball = klein.ball(4)
    generated = {klein.element("a"), klein.element("b")}
    grew = True
    while grew:
        grew = False
        for g, h in list(itertools.product(generated, repeat=2)):
            p = g * h
            if p in ball.members and p not in generated:
                generated.add(p)
                grew = True
    positives = set(klein_oracle.positives(ball))
    # generated semigroup inside the ball might miss boundary products;
    # it must at least be contained in the cone and cover radius <= 3
    assert generated <= positives
    small = {g for g in positives if g.length <= 3}
    assert small <= generated


# -- lex pairs ----------------------------------------------------------------------

def test_lex_pair_examples(f2_leading, z_leading):
    P = f2_leading.model
    # F2 leading: (a, z^-5) positive
    g = P.pair(P.factors[0].element("a"),
               P.factors[1].from_exponents([-5]))
    assert f2_leading.sign(g) is cs.Sign.POSITIVE
    # F2 leading: (1, z) positive via the trailing factor
    z = P.embed(P.factors[1].generator(1), 1)
    assert f2_leading.sign(z) is cs.Sign.POSITIVE
    # Z leading: (a^-1, z) positive, leading factor decides
    Q = z_leading.model
    h = Q.pair(Q.factors[0].element("A"), Q.factors[1].generator(1))
    assert z_leading.sign(h) is cs.Sign.POSITIVE


def test_lex_pair_records_cofinal_center(z_leading, f2_leading):
    assert z_leading.declared_cofinal_central is not None
    z = z_leading.declared_cofinal_central
    assert z == z_leading.model.embed(z_leading.model.factors[1].generator(1), 1)
    # free-leading pair has no cofinal central declaration
    assert f2_leading.declared_cofinal_central is None


def test_lex_pair_model_mismatch(magnus, z_natural):
    pair = cs.lex_pair_sign(magnus, z_natural)
    with pytest.raises(cs.ModelMismatch):
        pair.sign(cs.FreeGroup(2).element("a"))


# -- axiom verification ----------------------------------------------------------------

def test_axioms_pass_for_shipped_oracles(magnus, hyper_irr, klein_oracle):
    report = cs.verify_order_axioms(magnus, 5)
    assert report.passed and report.checked == 485
    assert cs.verify_order_axioms(hyper_irr, 6).passed
    assert cs.verify_order_axioms(klein_oracle, 6).passed


def test_axioms_fail_for_broken_oracle(f2):
    broken = cs.OrderOracle(
        name="broken", model=f2,
        sign_fn=lambda g: cs.Sign.IDENTITY if g.is_identity()
        else cs.Sign.POSITIVE)
    report = cs.verify_order_axioms(broken, 1)
    assert not report.passed
    pairs = {(a, b) for a, _, b, _ in report.partition_failures}
    assert ("a", "A") in pairs or ("A", "a") in pairs


def test_axioms_catch_identity_mislabel(f2):
    warped = cs.OrderOracle(
        name="warped", model=f2,
        sign_fn=lambda g: cs.Sign.POSITIVE)
    report = cs.verify_order_axioms(warped, 1)
    assert report.identity_failures


def test_antisymmetry_on_balls(magnus, hyper_irr, klein_oracle, f2_leading,
                               z_leading):
    cases = [(magnus, 4), (hyper_irr, 5), (klein_oracle, 5),
             (f2_leading, 3), (z_leading, 3)]
    for oracle, radius in cases:
        ball = oracle.model.ball(radius)
        for g in ball.sorted_elements():
            if g.is_identity():
                continue
            assert oracle.sign(g.inverse()) == oracle.sign(g).negated()


def test_semigroup_closure_on_balls(klein_oracle, hyper_irr):
    for oracle, radius in ((klein_oracle, 5), (hyper_irr, 5)):
        ball = oracle.model.ball(radius)
        positives = oracle.positives(ball)
        for g in positives:
            for h in positives:
                p = g * h
                if p in ball.members:
                    assert oracle.sign(p) is cs.Sign.POSITIVE


# -- descriptors ----------------------------------------------------------------------

def test_order_descriptor_round_trip(f2, z2, klein, z_leading):
    cases = [
        ({"kind": "magnus"}, f2),
        ({"kind": "hyperplane", "weights": [[1, 0], [0, 1]]}, z2),
        ({"kind": "klein"}, klein),
        ({"kind": "lex_pair", "leading_factor": 1,
          "leading": {"kind": "hyperplane", "weights": [[1, 0]]},
          "trailing": {"kind": "magnus"}}, z_leading.model),
    ]
    for descriptor, model in cases:
        oracle = cs.order_from_descriptor(descriptor, model)
        assert oracle.model == model
        ball = model.ball(2)
        # a usable oracle: all signs defined
        for g in ball.sorted_elements():
            oracle.sign(g)


def test_order_descriptor_errors(f2, klein):
    with pytest.raises(ValueError):
        cs.order_from_descriptor({"kind": "dehornoy"}, f2)
    with pytest.raises(cs.ModelMismatch):
        cs.order_from_descriptor({"kind": "klein"}, f2)
    with pytest.raises(ValueError):
        cs.order_from_descriptor({"kind": "hyperplane"}, klein)
