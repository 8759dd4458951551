import itertools

import pytest

import conescope as cs
from conescope.geometry import SwampCertificate, Verdict, product_column_swamp


def brute_force_components(oracle, r, radius):
    """Independent oracle: pairwise distances + transitive closure by DFS."""
    model = oracle.model
    ball = model.ball(radius)
    positives = oracle.positives(ball)
    adjacency = {g: [] for g in positives}
    for g, h in itertools.combinations(positives, 2):
        if model.distance(g, h) <= r:
            adjacency[g].append(h)
            adjacency[h].append(g)
    seen = set()
    components = []
    for g in positives:
        if g in seen:
            continue
        stack, comp = [g], set()
        while stack:
            cur = stack.pop()
            if cur in comp:
                continue
            comp.add(cur)
            stack.extend(adjacency[cur])
        seen |= comp
        components.append(frozenset(comp))
    return sorted((sorted(c, key=cs.Element.sort_key) for c in components),
                  key=lambda c: c[0].sort_key())


# -- max_of_ball ---------------------------------------------------------------

def test_max_of_ball_examples(f2, magnus, klein_oracle):
    assert str(cs.max_of_ball(magnus, 1)) == "a"
    assert cs.max_of_ball(magnus, 0) == f2.identity()
    assert str(cs.max_of_ball(klein_oracle, 1)) == "a"


def test_max_of_ball_is_maximum(magnus, f2):
    top = cs.max_of_ball(magnus, 3)
    for g in f2.ball(3).sorted_elements():
        if g != top:
            assert magnus.precedes(g, top)


def test_max_of_ball_detects_ties(f2):
    sloppy = cs.OrderOracle(
        name="sloppy", model=f2,
        sign_fn=lambda g: cs.Sign.IDENTITY)
    with pytest.raises(cs.BrokenOrderError):
        cs.max_of_ball(sloppy, 1)


# -- maxima ray -----------------------------------------------------------------

def test_maxima_ray_magnus(magnus):
    report = cs.verify_maxima_ray(magnus, 5)
    assert report.passed
    assert [str(g) for g in report.maxima] == ["a", "aa", "aaa", "aaaa", "aaaaa"]


def test_maxima_ray_klein(klein_oracle):
    report = cs.verify_maxima_ray(klein_oracle, 6)
    assert report.passed
    assert [g.length for g in report.maxima] == [1, 2, 3, 4, 5, 6]


def test_maxima_ray_vacuous(magnus):
    report = cs.verify_maxima_ray(magnus, 0)
    assert report.passed and report.maxima == ()


def test_maxima_ray_flags_broken_oracle(f2):
    # reversed identity handling breaks the negativity check
    weird = cs.OrderOracle(
        name="weird", model=f2,
        sign_fn=lambda g: cs.Sign.IDENTITY if g.is_identity()
        else (cs.Sign.POSITIVE if len(g.word) % 2 == 0 else cs.Sign.NEGATIVE))
    report = cs.verify_maxima_ray(weird, 3)
    assert not report.passed


# -- r-components ------------------------------------------------------------------

def test_components_hyperplane_connected(hyper_irr):
    report = cs.r_components(hyper_irr, 1, 4)
    assert report.count == 1


def test_components_magnus_disconnected(magnus):
    report = cs.r_components(magnus, 1, 6)
    assert report.count >= 2


def test_components_match_brute_force(magnus, hyper_irr, klein_oracle,
                                      z_leading):
    for oracle, r, radius in ((magnus, 1, 4), (magnus, 2, 4),
                              (hyper_irr, 1, 4), (klein_oracle, 1, 4),
                              (z_leading, 1, 3)):
        mine = cs.r_components(oracle, r, radius)
        brute = brute_force_components(oracle, r, radius)
        assert [list(c) for c in mine.components] == [list(c) for c in brute]


def test_components_radius_one_bound(magnus, f2):
    report = cs.r_components(magnus, 1, 1)
    # positives in B(1,1) split into at most |X| classes
    assert 1 <= report.count <= len(f2.alphabet)
    sizes = sorted(len(c) for c in report.components)
    assert sum(sizes) == len(magnus.positives(f2.ball(1)))


def test_components_traversal_independent(magnus, z_leading):
    for oracle, r, radius in ((magnus, 1, 5), (z_leading, 1, 4)):
        fwd = cs.r_components(oracle, r, radius, traversal="forward")
        rev = cs.r_components(oracle, r, radius, traversal="reverse")
        assert fwd.components == rev.components
        assert fwd.representatives == rev.representatives


def test_components_refine_as_r_grows(magnus):
    fine = cs.r_components(magnus, 1, 5)
    coarse = cs.r_components(magnus, 2, 5)
    coarse_index = coarse.component_index()
    for comp in fine.components:
        targets = {coarse_index[g] for g in comp}
        assert len(targets) == 1


def test_components_z_leading_boundary_strands(z_leading):
    # the Z-leading cone on F2 x Z leaves isolated positives at the ball
    # boundary at width 1 (their only shorter neighbor is negative); at
    # width 2 the z-direction detour reconnects everything
    counts1 = [cs.r_components(z_leading, 1, R).count for R in (3, 4, 5)]
    assert counts1 == [3, 7, 18]
    counts2 = [cs.r_components(z_leading, 2, R).count for R in (3, 4, 5)]
    assert counts2 == [1, 1, 1]
    stranded = cs.r_components(z_leading, 1, 3).components[1]
    assert [str(g) for g in stranded] == ["Aba"]


# -- tree swamps --------------------------------------------------------------------

def test_tree_swamp_sizes(magnus, f2):
    for r, size in ((1, 5), (2, 17), (3, 53)):
        cert = cs.tree_swamp_certificate(magnus, r)
        assert len(cert.swamp) == size
        assert len(f2.ball(r)) == size
        assert cert.verdict is Verdict.CERTIFIED_TREE
        for s in cert.swamp:
            assert magnus.is_negative(s)
        u, v = cert.witnesses
        assert magnus.is_positive(u) and magnus.is_positive(v)
        assert f2.distance(cert.center, u) > r
        assert f2.distance(cert.center, v) > r


def test_tree_swamp_degenerate_r0(magnus):
    cert = cs.tree_swamp_certificate(magnus, 0)
    assert len(cert.swamp) == 1
    assert cert.center in cert.swamp


def test_tree_swamp_needs_free_group(klein_oracle):
    with pytest.raises(cs.ModelMismatch):
        cs.tree_swamp_certificate(klein_oracle, 1)


def test_tree_swamp_witness_not_found_on_line():
    # the line (rank-1 free group) has a branch with no positives at all
    line = cs.FreeGroup(1)
    order = cs.magnus_order(line, name="line")
    with pytest.raises(cs.WitnessNotFound):
        cs.tree_swamp_certificate(order, 1)


def test_tree_swamp_sampled_paths_all_meet_s(magnus, f2):
    cert = cs.tree_swamp_certificate(magnus, 2)
    paths = cs.sample_tree_paths(cert, f2, 25, seed=99)
    for path in paths:
        assert path.points[0] == cert.witnesses[0]
        assert path.points[-1] == cert.witnesses[1]
        assert any(p in cert.swamp for p in path.points)


# -- separation verdicts ----------------------------------------------------------------

def test_separation_tree_certificates(magnus, f2):
    for r in (1, 2):
        cert = cs.tree_swamp_certificate(magnus, r)
        result = cs.verify_separation(cert, f2)
        assert result.verdict is Verdict.CERTIFIED_TREE


def test_separation_not_separating_in_plane(z2, hyper_irr):
    # S = {x} does not 1-disconnect y from x^2: an avoiding path exists
    center = z2.element("a")
    cert = SwampCertificate(
        r=1, center=center, swamp=frozenset({center}),
        witnesses=(z2.element("b"), z2.element("aa")),
        verdict=Verdict.EVIDENCE)
    result = cs.verify_separation(cert, z2, radius=3)
    assert result.verdict is Verdict.NOT_SEPARATING
    path = result.avoiding_path
    assert path.points[0] == z2.element("b")
    assert path.points[-1] == z2.element("aa")
    assert all(p not in cert.swamp for p in path.points)
    path.check()


def test_separation_certified_exhaustive_annulus(z2, hyper_irr):
    # a full annulus encloses the origin: the search space is finite
    ball = z2.ball(6)
    annulus = frozenset(g for g, d in ball.members.items() if d in (2, 3))
    cert = SwampCertificate(
        r=1, center=z2.element("aa"), swamp=annulus,
        witnesses=(z2.element("b"), z2.from_exponents((0, 5))),
        verdict=Verdict.EVIDENCE)
    result = cs.verify_separation(cert, z2, radius=6)
    assert result.verdict is Verdict.CERTIFIED_EXHAUSTIVE


def test_separation_product_column_evidence(f2_leading):
    cert = product_column_swamp(f2_leading, 1, 5)
    assert all(f2_leading.is_negative(s) for s in cert.swamp)
    result = cs.verify_separation(cert, f2_leading.model, radius=5)
    assert result.verdict is Verdict.EVIDENCE


# -- cofinal positive paths ----------------------------------------------------------------

def test_cofinal_path_example(z_leading):
    P = z_leading.model
    g = P.element("Ac")
    h = P.element("bc")
    path = cs.cofinal_positive_path(z_leading, g, h)
    assert path.points[0] == g and path.points[-1] == h
    assert all(z_leading.is_positive(p) for p in path.points)
    assert max(path.gaps(), default=0) <= 1


def test_cofinal_path_single_point(z_leading):
    g = z_leading.model.element("ac")
    path = cs.cofinal_positive_path(z_leading, g, g)
    assert path.points == (g,)


def test_cofinal_path_inside_z_line(z_leading):
    P = z_leading.model
    path = cs.cofinal_positive_path(z_leading, P.element("c"), P.element("ccc"))
    for p in path.points:
        assert P.project(p, 0).is_identity()
        assert z_leading.is_positive(p)


def test_cofinal_path_requires_declaration(f2_leading):
    P = f2_leading.model
    with pytest.raises(cs.NoDeclaredCofinalCenter):
        cs.cofinal_positive_path(f2_leading, P.element("a"), P.element("b"))


def test_cofinal_path_rejects_negative_endpoint(z_leading):
    P = z_leading.model
    with pytest.raises(ValueError):
        cs.cofinal_positive_path(z_leading, P.element("C"), P.element("c"))


def test_cofinal_path_random_pairs(z_leading):
    import random
    rng = random.Random(4)
    positives = z_leading.positives(z_leading.model.ball(4))
    for _ in range(15):
        g, h = rng.choice(positives), rng.choice(positives)
        path = cs.cofinal_positive_path(z_leading, g, h)
        assert all(z_leading.is_positive(p) for p in path.points)
        assert max(path.gaps(), default=0) <= 1


# -- product positive paths -------------------------------------------------------------------

@pytest.fixture(scope="module")
def zz_lex():
    lead = cs.hyperplane_order(cs.FreeAbelian(1), [(1, 0)], name="lead")
    trail = cs.hyperplane_order(cs.FreeAbelian(1), [(1, 0)], name="trail")
    return cs.lex_pair_sign(lead, trail, leading_factor=0, name="zz-lex")


def test_product_path_plane_example(zz_lex):
    M = zz_lex.model
    g = M.element("b")          # (0, 1)
    h = M.element("aBBBBB")     # (1, -5)
    path = cs.product_positive_path(zz_lex, g, h, r=1)
    assert path.points[0] == g and path.points[-1] == h
    for p in path.points:
        m = M.factors[0].exponents(M.project(p, 0))[0]
        n = M.factors[1].exponents(M.project(p, 1))[0]
        assert m > 0 or (m == 0 and n > 0)
    assert max(path.gaps()) <= 1


def test_product_path_single_point(zz_lex):
    g = zz_lex.model.element("ab")
    path = cs.product_positive_path(zz_lex, g, g, r=1)
    assert path.points == (g,)


def test_product_path_refuses_disconnected_factor(f2_leading, z_leading):
    for oracle in (f2_leading, z_leading):
        P = oracle.model
        g, h = P.element("ac"), P.element("bc")
        if not (oracle.is_positive(g) and oracle.is_positive(h)):
            continue
        with pytest.raises(cs.FactorNotConnectedAtScale):
            cs.product_positive_path(oracle, g, h, r=1)


def test_product_path_random_pairs(zz_lex):
    import random
    rng = random.Random(11)
    positives = zz_lex.positives(zz_lex.model.ball(4))
    for _ in range(15):
        g, h = rng.choice(positives), rng.choice(positives)
        path = cs.product_positive_path(zz_lex, g, h, r=1)
        assert all(zz_lex.is_positive(p) for p in path.points)


# -- survey ----------------------------------------------------------------------------------

def test_survey_prieto_consistent(hyper_irr):
    report = cs.connectivity_survey(hyper_irr, 1, [2, 4, 6])
    assert report.counts == (1, 1, 1)
    assert report.classification is cs.SurveyClass.PRIETO_CONSISTENT
    assert "Prieto-consistent" in report.verdict


def test_survey_hucha_certified(magnus):
    report = cs.connectivity_survey(magnus, 1, [4, 5, 6])
    assert all(c >= 2 for c in report.counts)
    assert report.classification is cs.SurveyClass.HUCHA_CERTIFIED
    assert report.certificate is not None
    assert report.certificate.verdict is Verdict.CERTIFIED_TREE
    assert "Hucha-certified" in report.verdict


def test_survey_disconnection_evidence(f2_leading):
    report = cs.connectivity_survey(f2_leading, 1, [3, 4, 5])
    assert report.counts[-1] >= 2
    assert report.classification is cs.SurveyClass.DISCONNECTION_EVIDENCE


# -- RPath invariants --------------------------------------------------------------------------

def test_rpath_validation(f2):
    good = cs.RPath((f2.element("a"), f2.element("ab")), 1)
    good.check()
    bad = cs.RPath((f2.element("a"), f2.element("bbb")), 1)
    with pytest.raises(ValueError):
        bad.check()
    with pytest.raises(ValueError):
        cs.RPath((), 1).check()
