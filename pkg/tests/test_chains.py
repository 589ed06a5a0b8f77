import random

import pytest

from masseylink.chains import (
    CellChain,
    Chain,
    Cochain,
    DualComplex,
    OrderedComplex,
    RelativePair,
    Subdivision,
    augmentation,
    boundary,
    boundary_simplex,
    cap,
    circle_complex,
    coboundary,
    cup,
    evaluate_triple_pairing,
    product_complex,
    s1_x_s2,
    torus_9,
    u_basis,
    verify_suite,
    _closure,
    _random_chain,
    _random_cochain,
)
from masseylink.errors import DimensionMismatch, NotManifold


# -- complexes -----------------------------------------------------------------


def test_boundary_delta4_counts():
    K = boundary_simplex(4)
    assert K.counts() == {0: 5, 1: 10, 2: 10, 3: 5}
    assert K.dim == 3


def test_torus9_is_a_closed_surface():
    K = torus_9()
    assert K.counts() == {0: 9, 1: 27, 2: 18}
    xi = K.fundamental_cycle()
    assert boundary(xi).is_zero()


def test_s1_x_s2_structure():
    K = s1_x_s2()
    assert K.dim == 3
    assert len(K.simplices(3)) == 36
    assert boundary(K.fundamental_cycle()).is_zero()


def test_not_manifold_detected():
    # a single triangle has free edges
    K = OrderedComplex([(0, 1, 2)])
    with pytest.raises(NotManifold):
        K.fundamental_cycle()


# -- subdivision and collapse ----------------------------------------------------


def test_sd_of_an_edge():
    K = OrderedComplex([(0, 1)])
    sub = Subdivision(K)
    assert sub.Kp.counts() == {0: 3, 1: 2}


def test_sd_of_a_triangle_has_six_pieces():
    K = OrderedComplex([(0, 1, 2)])
    sub = Subdivision(K)
    flags = sub._sd_simplex((0, 1, 2))
    assert len(flags) == 6
    assert sorted(flags.values()) == [-1, -1, -1, 1, 1, 1]


def test_sd_of_sphere_has_120_tetrahedra():
    sub = Subdivision(boundary_simplex(4))
    assert len(sub.Kp.simplices(3)) == 120


def test_theta_sends_barycenter_to_last_vertex():
    K = OrderedComplex([(0, 1, 2)])
    sub = Subdivision(K)
    assert sub.theta_vertex(sub.vertex_of[(0, 1)]) == 1
    assert sub.theta_vertex(sub.vertex_of[(0, 1, 2)]) == 2
    assert sub.theta_vertex(sub.vertex_of[(0,)]) == 0


def test_theta_after_sd_identity_exhaustive():
    K = boundary_simplex(4)
    sub = Subdivision(K)
    for s in K.all_simplices():
        c = Chain(len(s) - 1, {s: 1})
        assert sub.theta_chain(sub.sd(c)) == c


# -- products ---------------------------------------------------------------------


def test_cup_with_unit_cochain():
    K = boundary_simplex(3)
    one = Cochain(0, {s: 1 for s in K.simplices(0)})
    for s in K.simplices(1):
        u = u_basis(s)
        assert cup(u, one, K.simplices(1)) == u
        assert cup(one, u, K.simplices(1)) == u


def test_cap_definition_unfolds():
    # capping a 2-simplex with the dual of its front edge leaves the back edge
    s = (0, 1, 2)
    c = Chain(2, {s: 1})
    assert cap(c, u_basis((0, 1))) == Chain(1, {(1, 2): 1})
    assert cap(c, u_basis((1, 2))).is_zero()


def test_dual_cell_of_vertex_in_circle():
    dual = DualComplex(circle_complex())
    d = dual.dual_cell((1,))
    assert len(d.support()) == 2  # the two half-edges at the vertex


def test_dual_cell_of_top_simplex_is_barycenter():
    K = boundary_simplex(4)
    dual = DualComplex(K)
    top = K.simplices(3)[0]
    d = dual.dual_cell(top)
    assert d == Chain(0, {(dual.sub.vertex_of[top],): 1})


def test_top_pairing_is_one():
    K = boundary_simplex(4)
    dual = DualComplex(K)
    top = K.simplices(3)[0]
    prod = dual.intersection_product(
        dual.xi.coeffs[top] * Chain(3, {top: 1}), dual.phi(u_basis(top))
    )
    assert augmentation(prod) == 1


def test_appendix_product_single_back_edge():
    # sigma . D(tau) is the single subdivision edge from the barycenter of
    # tau to the barycenter of sigma, with the incidence sign; +1 on the
    # front face as in the worked example
    K = boundary_simplex(4)
    dual = DualComplex(K)
    sub = dual.sub
    for sigma in K.simplices(2):
        bdy = boundary(Chain(2, {sigma: 1}))
        for i in range(3):
            tau = sigma[:i] + sigma[i + 1:]
            prod = dual.intersection_product(
                Chain(2, {sigma: 1}), dual.phi(u_basis(tau))
            )
            expected = Chain(
                1,
                {(sub.vertex_of[tau], sub.vertex_of[sigma]): bdy.coeffs[tau]},
            )
            assert prod == expected
        front = sigma[:2]
        prod = dual.intersection_product(
            Chain(2, {sigma: 1}), dual.phi(u_basis(front))
        )
        assert list(prod._clean().values()) == [1]


def test_phi_coboundary_identity_torus():
    K = torus_9()
    dual = DualComplex(K)
    for s in K.all_simplices():
        p = len(s) - 1
        if p == K.dim:
            continue
        lhs = dual.realize(dual.phi(coboundary(K, u_basis(s))))
        rhs = (-1) ** (p + 1) * boundary(dual.dual_cell(s))
        assert lhs == rhs


def test_dimension_mismatch_raises():
    K = boundary_simplex(4)
    dual = DualComplex(K)
    with pytest.raises(DimensionMismatch):
        dual.intersection_product(
            Chain(1, {K.simplices(1)[0]: 1}), dual.phi(u_basis(K.simplices(2)[0]))
        )


# -- augmentation -----------------------------------------------------------------


def test_augmentation_sums_coefficients():
    c = Chain(0, {(0,): 3, (1,): -2})
    assert augmentation(c) == 1


def test_augmentation_kills_boundaries():
    K = boundary_simplex(4)
    rng = random.Random(4)
    one_chain = _random_chain(rng, K.simplices(1), 1)
    assert augmentation(boundary(one_chain)) == 0


def test_augmented_cap_is_evaluation():
    K = boundary_simplex(4)
    rng = random.Random(5)
    for _ in range(20):
        p = rng.randint(0, 3)
        c = _random_chain(rng, K.simplices(p), p)
        eta = _random_cochain(rng, K.simplices(p), p)
        assert augmentation(cap(c, eta)) == eta(c)


# -- the triple pairing (used by the third-order theory) ----------------------------


def test_triple_pairing_zero_cochain():
    K = boundary_simplex(4)
    dual = DualComplex(K)
    rng = random.Random(6)
    T = _random_chain(rng, K.simplices(2), 2)
    z = Cochain(1, {})
    beta = _random_cochain(rng, K.simplices(1), 1)
    assert evaluate_triple_pairing(dual, T, z, beta) == (0, 0)


def test_triple_pairing_unit_front():
    K = boundary_simplex(4)
    dual = DualComplex(K)
    rng = random.Random(7)
    one = Cochain(0, {s: 1 for s in K.simplices(0)})
    beta = _random_cochain(rng, K.simplices(1), 1)
    T = _random_chain(rng, K.simplices(1), 1)
    lhs, rhs = evaluate_triple_pairing(dual, T, one, beta)
    assert lhs == rhs == beta(T)


def test_triple_pairing_random_200():
    K = boundary_simplex(4)
    dual = DualComplex(K)
    rng = random.Random(8)
    for _ in range(200):
        alpha = _random_cochain(rng, K.simplices(1), 1)
        beta = _random_cochain(rng, K.simplices(1), 1)
        T = _random_chain(rng, K.simplices(2), 2)
        lhs, rhs = evaluate_triple_pairing(dual, T, alpha, beta)
        assert lhs == rhs


# -- relative pair -------------------------------------------------------------------


def _sphere_circle_pair():
    K = boundary_simplex(4)
    L = [(0,), (1,), (2,), (0, 1), (1, 2), (0, 2)]
    return RelativePair(K, L)


def test_relative_cell_in_Lstar_is_killed():
    pair = _sphere_circle_pair()
    a = Chain(2, {pair.K.simplices(2)[5]: 1})
    b = CellChain(2, {(0, 1): 1})
    assert pair.relative_intersection_product(a, b).is_zero()


def test_relative_reduces_to_absolute_for_tiny_L():
    K = boundary_simplex(4)
    pair = RelativePair(K, [(0,)])
    dual = pair.dual
    rng = random.Random(9)
    for _ in range(20):
        s = rng.choice(K.simplices(2))
        t = rng.choice([t for t in K.simplices(1) if t != (0,) and not pair.in_L(t)])
        a = Chain(2, {s: 1})
        rel = pair.relative_intersection_product(a, CellChain(2, {t: 1}))
        absolute = pair.reduce_Kp(
            dual.intersection_product(a, dual.phi(u_basis(t)))
        )
        assert rel == absolute


def test_relative_phi_identity_and_support():
    pair = _sphere_circle_pair()
    dual = pair.dual
    K = pair.K
    for s in K.all_simplices():
        if pair.in_L(s) or len(s) - 1 == K.dim:
            continue
        p = len(s) - 1
        lhs = pair.reduce_Kp(dual.realize(dual.phi(coboundary(K, u_basis(s)))))
        rhs = (-1) ** (p + 1) * pair.reduce_Kp(boundary(dual.dual_cell(s)))
        assert lhs == rhs
    # support inclusion mod L'
    for s in K.simplices(2):
        for t in K.simplices(1):
            if pair.in_L(t):
                continue
            prod = pair.relative_intersection_product(
                Chain(2, {s: 1}), CellChain(2, {t: 1})
            )
            sd_supp = _closure(
                pair.reduce_Kp(dual.sub.sd(Chain(2, {s: 1}))).support()
            )
            d_supp = _closure(pair.reduce_Kp(dual.dual_cell(t)).support())
            assert set(prod.support()) <= (sd_supp & d_supp)


def test_relative_rejects_L_supported_cochain():
    pair = _sphere_circle_pair()
    with pytest.raises(ValueError):
        pair.phi_bar(Cochain(1, {(0, 1): 1}))


# -- the full suite -------------------------------------------------------------------


@pytest.mark.parametrize(
    "name", ["boundary_delta3", "boundary_delta4", "torus9", "s1xs2"]
)
def test_verify_suite_passes(name):
    rep = verify_suite(name, seed=2, cases=40)
    assert rep["pass"], rep["identities"]
