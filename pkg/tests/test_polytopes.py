import pytest

from schubcalc import polytopes as pt
from schubcalc.cartan import RootDatum
from schubcalc.oracles import weyl_dimension

A2 = RootDatum("A", 2)
A3 = RootDatum("A", 3)
C2 = RootDatum("C", 2)


def unit_cube(d):
    ineqs = []
    for j in range(d):
        e = tuple(1 if t == j else 0 for t in range(d))
        ne = tuple(-x for x in e)
        ineqs.append((e, 1))
        ineqs.append((ne, 0))
    return pt.Polytope(d, tuple(ineqs))


def test_cube_basics():
    cube = unit_cube(2)
    assert len(pt.lattice_points(cube)) == 4
    cube3 = unit_cube(3)
    assert len(pt.vertices(cube3)) == 8
    assert pt.is_simple(cube3)
    f = pt.face(cube3, (0,))
    assert pt.affine_rank(pt.face_lattice_points(f)) == 2


def test_string_cone_facet_labels():
    cone = pt.string_cone(A2)
    # a_1^{(1)} >= 0, a_2^{(1)} >= 0, a_1^{(2)} >= a_2^{(1)}
    assert cone.ineqs == (((-1, 0, 0), 0), ((0, 0, -1), 0), ((0, -1, 1), 0))
    assert cone.labels == ("Fv1", "Fv2", "Fv3")
    conec = pt.string_cone(C2)
    # a_1^{(1)} = 0, b_1^{(2)} = a_2^{(1)}, a_2^{(1)} = a_1^{(2)}, a_1^{(2)} = 0
    assert conec.ineqs == (
        ((-1, 0, 0, 0), 0),
        ((0, -1, 1, 0), 0),
        ((0, 0, -1, 1), 0),
        ((0, 0, 0, -1), 0),
    )
    # the origin satisfies every cone inequality
    for cone_poly in (cone, conec):
        zero = (0,) * cone_poly.ambient_dim
        assert all(sum(c * x for c, x in zip(vec, zero)) <= rhs for vec, rhs in cone_poly.ineqs)


def test_cone_is_unbounded():
    with pytest.raises(pt.UnboundedRegionError):
        pt.lattice_points(pt.string_cone(A2))


def test_string_polytope_counts():
    assert pt.lattice_points(pt.string_polytope(A2, (0, 0))) == ((0, 0, 0),)
    assert len(pt.lattice_points(pt.string_polytope(A2, (1, 0)))) == 3
    assert len(pt.lattice_points(pt.string_polytope(A2, (1, 1)))) == 8
    assert len(pt.lattice_points(pt.string_polytope(C2, (1, 0)))) == 5
    assert len(pt.lattice_points(pt.string_polytope(C2, (0, 1)))) == 4


def test_lambda_facet_symbolic_example():
    # rank-3 ambient word (1,2,3,2,1,2): facet equations for positions 3, 4, 6
    word = (1, 2, 3, 2, 1, 2)
    vec, lam_vec = pt.string_lambda_facet(A3, word, 3)
    assert vec == (0, 0, 1, -1, 0, -1)
    assert lam_vec == (0, 0, 1)
    vec, lam_vec = pt.string_lambda_facet(A3, word, 4)
    assert vec == (0, 0, 0, 1, -1, 2)
    assert lam_vec == (0, 1, 0)
    vec, lam_vec = pt.string_lambda_facet(A3, word, 6)
    assert vec == (0, 0, 0, 0, 0, 1)
    assert lam_vec == (0, 1, 0)


def test_gt_and_sgt_counts():
    assert pt.lattice_points(pt.gt_polytope(A2, (0, 0))) == ((0, 0, 0),)
    assert len(pt.lattice_points(pt.gt_polytope(A2, (1, 0)))) == 3
    assert len(pt.lattice_points(pt.gt_polytope(A2, (1, 1)))) == 8
    assert len(pt.lattice_points(pt.sgt_polytope(C2, (1, 0)))) == 5
    assert len(pt.lattice_points(pt.sgt_polytope(C2, (0, 1)))) == 4
    for lam in [(1, 1), (2, 1)]:
        assert len(pt.lattice_points(pt.gt_polytope(A2, lam))) == weyl_dimension(A2, lam)
        assert len(pt.lattice_points(pt.sgt_polytope(C2, lam))) == weyl_dimension(C2, lam)


def test_facet_arrangement_pins():
    # first dual equation: a_1^{(n)} = a_2^{(n-1)}
    g = pt.gt_polytope(A3, (1, 1, 1))
    vec, rhs = g.ineqs[0]
    expected = [0] * 6
    expected[pt.a_pos(A3, 2, 2)] = 1
    expected[pt.a_pos(A3, 1, 3)] = -1
    assert list(vec) == expected and rhs == 0
    # first symplectic Kogan equation: b_1^{(n)} = a_1^{(n)}
    s = pt.sgt_polytope(C2, (1, 1))
    vec, rhs = s.ineqs[4]
    expected = [0] * 4
    expected[pt.a_pos(C2, 1, 2)] = 1
    expected[pt.b_pos(C2, 1, 2)] = -1
    assert list(vec) == expected and rhs == 0
    assert s.labels[4] == "Fv1"


def test_zero_profile_is_identity():
    for datum, lam in ((A2, (2, 1)), (C2, (1, 2)), (A3, (1, 1, 1))):
        if datum.family == "A":
            assert pt.deformed_polytope(datum, lam, pt.zero_profile(datum)) == pt.gt_polytope(
                datum, lam
            )
        else:
            assert pt.deformed_polytope(datum, lam, pt.zero_profile(datum)) == pt.sgt_polytope(
                datum, lam
            )


def test_profile_validation():
    with pytest.raises(ValueError):
        pt.EpsilonProfile("A", (1, 2))
    with pytest.raises(ValueError):
        pt.EpsilonProfile("A", (0, 2, 1))
    with pytest.raises(ValueError):
        pt.EpsilonProfile("C", (2,), (0, 1))
    assert pt.default_strict_profile(A3).is_strict()
    assert pt.default_strict_profile(C2).is_strict()


def test_deformed_simplicity_and_normal_fan():
    for datum in (A2, C2):
        profile = pt.default_strict_profile(datum)
        lam = pt.default_regular_lambda(datum, profile)
        deformed = pt.deformed_polytope(datum, lam, profile)
        assert pt.is_simple(deformed)
        undeformed = pt.deformed_polytope(datum, lam, pt.zero_profile(datum))
        assert pt.facet_normal_set(deformed) == pt.facet_normal_set(undeformed)


def test_undeformed_sgt_not_simple():
    # the deformation is needed: the plain symplectic polytope has a vertex on
    # too many facets already at small regular weights
    found = any(not pt.is_simple(pt.sgt_polytope(C2, lam)) for lam in [(1, 1), (2, 1), (2, 2)])
    assert found


def test_minkowski_support_additivity():
    cases = [
        (A2, (2, 1), (1, 1)),
        (A3, (1, 1, 1), (1, 0, 1)),
        (C2, (1, 1), (2, 1)),
    ]
    for datum, lam, mu in cases:
        profile = pt.default_strict_profile(datum)
        big = pt.deformed_polytope(datum, lam, profile)
        plain = pt.deformed_polytope(datum, mu, pt.zero_profile(datum))
        total = pt.deformed_polytope(datum, tuple(a + b for a, b in zip(lam, mu)), profile)
        directions = {c for c, _ in big.ineqs}
        for xi in directions:
            assert pt.support_value(big, xi) + pt.support_value(plain, xi) == pt.support_value(
                total, xi
            )


def test_lattice_count_minkowski_consistency():
    lam, mu = (1, 0), (0, 1)
    both = tuple(a + b for a, b in zip(lam, mu))
    assert len(pt.lattice_points(pt.gt_polytope(A2, both))) == weyl_dimension(A2, both)


def test_ehrhart_and_volumes():
    point = pt.string_polytope(A2, (0, 0))
    assert pt.normalized_volume(point) == 1
    rho = pt.string_polytope(A2, (1, 1))
    assert pt.normalized_volume(rho) == 1
    two_rho = pt.string_polytope(A2, (2, 2))
    assert pt.normalized_volume(two_rho) == 8
    coeffs = pt.ehrhart_polynomial(rho)
    d = len(coeffs) - 1
    held_out = len(pt.lattice_points(pt.dilate(rho, d + 1)))
    assert pt.ehrhart_value(coeffs, d + 1) == held_out


def test_dilation_consistency():
    poly = pt.gt_polytope(A2, (1, 1))
    coeffs = pt.ehrhart_polynomial(poly)
    assert pt.ehrhart_value(coeffs, 2) == len(pt.lattice_points(pt.dilate(poly, 2)))


def test_volume_at_lower_dim_is_zero():
    degenerate = pt.string_polytope(A2, (1, 0))
    assert pt.volume_at_dim(degenerate, 3) == 0
    assert pt.volume_at_dim(degenerate, pt.polytope_dim(degenerate)) > 0


def test_face_json_roundtrip():
    poly = pt.string_polytope(A2, (1, 1))
    blob = pt.polytope_to_json(poly)
    assert blob["ambient_dim"] == 3
    assert len(blob["inequalities"]) == 6
    assert blob["labels"]["0"] == "F1"


def test_face_intersection_and_transversality():
    cube = unit_cube(3)
    top = pt.face(cube, (0,))
    assert pt.intersect_faces(top, top).tight == top.tight
    assert not pt.transversal(top, top)
    side = pt.face(cube, (2,))
    assert pt.transversal(top, side)
    bottom = pt.face(cube, (1,))  # opposite halfspace of the same coordinate
    assert pt.face_dim(pt.intersect_faces(top, bottom)) == -1
    assert not pt.transversal(top, bottom)
    other = unit_cube(2)
    with pytest.raises(ValueError):
        pt.intersect_faces(top, pt.face(other, (0,)))


def test_empty_face_distinct_from_point():
    poly = pt.string_polytope(A2, (1, 0))
    # a single lattice point has dimension zero, emptiness is negative
    squeezed = pt.face(poly, (0, 1, 2))
    assert pt.face_dim(squeezed) in (-1, 0)
    zero = pt.string_polytope(A2, (0, 0))
    assert pt.face_dim(pt.face(zero, ())) == 0
