#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace strat;

namespace {

// Truncation of the circles-plus-interval model: m circles (3+ edges each)
// and one two-edge interval, all wedged at a common vertex; the far interval
// endpoint is the second special point. Strata: Y^1 = everything except the
// two special points, Y^2 = the two special points.
SManifold circles_and_interval(int m) {
    DeltaComplex x(1);
    int o = x.add_vertex();  // wedge point
    std::vector<std::pair<int, int>> cells1;
    for (int k = 1; k <= m; ++k) {
        int edges = std::max(3, k);
        int prev = o;
        for (int i = 0; i < edges - 1; ++i) {
            int v = x.add_vertex();
            x.add_cell(1, {v, prev});
            prev = v;
        }
        x.add_cell(1, {o, prev});
    }
    int mid = x.add_vertex();
    int end = x.add_vertex();
    x.add_cell(1, {mid, end});  // edge (end, mid)
    x.add_cell(1, {o, mid});    // edge (mid, o)
    x.freeze();

    SManifold s;
    s.complex = std::move(x);
    s.n = 1;
    s.num_strata = 2;
    s.stratum_of.resize(2);
    s.stratum_of[0].assign(s.complex.num_cells(0), 0);
    s.stratum_of[1].assign(s.complex.num_cells(1), 0);
    s.stratum_of[0][o] = 1;
    s.stratum_of[0][end] = 1;
    s.finish();
    return s;
}

// Oriented triangulated circle as a one-stratum 1-manifold.
SManifold circle_manifold(int k) { return testfix::one_stratum(testfix::circle(k), 1); }

}  // namespace

TEST_CASE("one-stratum sphere is a valid s-manifold") {
    SManifold s = testfix::one_stratum(testfix::tetra_sphere(), 2);
    auto rep = validate_smanifold(s);
    CHECK(rep.ok());
}

TEST_CASE("circles plus interval is a valid dimension-1 s-manifold") {
    SManifold s = circles_and_interval(2);
    auto rep = validate_smanifold(s);
    for (auto& iss : rep.issues) CAPTURE(iss.message);
    CHECK(rep.ok());
    ClosurePoset p = closure_poset(s);
    CHECK(p.leq(0, 1));
    CHECK_FALSE(p.leq(1, 0));
}

TEST_CASE("adjacent top strata violate the codimension rule") {
    // two triangles sharing an edge; the shared edge placed inside one
    // 2-dimensional stratum
    DeltaComplex x(2);
    for (int i = 0; i < 4; ++i) x.add_vertex();
    int e12 = x.add_cell(1, {2, 1});
    int e02 = x.add_cell(1, {2, 0});
    int e01 = x.add_cell(1, {1, 0});
    int e13 = x.add_cell(1, {3, 1});
    int e23 = x.add_cell(1, {3, 2});
    x.add_cell(2, {e12, e02, e01});
    x.add_cell(2, {e23, e13, e12});
    x.freeze();
    SManifold s;
    s.complex = std::move(x);
    s.n = 2;
    s.num_strata = 3;  // A = {t0, e12}, B = {t1}, C = everything else
    s.stratum_of.resize(3);
    s.stratum_of[0].assign(4, 2);
    s.stratum_of[1] = {0, 2, 2, 2, 2};
    s.stratum_of[2] = {0, 1};
    s.finish();
    auto rep = validate_smanifold(s);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (auto& iss : rep.issues) found = found || iss.code == "codimension_rule";
    CHECK(found);
}

TEST_CASE("manifold tier checks catch defects") {
    // dimension 1: a vertex with three stratum edge-ends
    DeltaComplex y(1);
    for (int i = 0; i < 4; ++i) y.add_vertex();
    y.add_cell(1, {0, 1});
    y.add_cell(1, {0, 2});
    y.add_cell(1, {0, 3});
    y.freeze();
    SManifold s = testfix::one_stratum(std::move(y), 1);
    auto rep = validate_smanifold(s);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.issues[0].code == "manifold_dim1");

    // dimension 2: a lone triangle is not a closed surface
    SManifold t = testfix::one_stratum(testfix::triangle(), 2);
    auto rep2 = validate_smanifold(t);
    CHECK_FALSE(rep2.ok());
}

TEST_CASE("codimension filtration") {
    SManifold sphere = testfix::one_stratum(testfix::tetra_sphere(), 2);
    auto f = codim_filtration(sphere);
    CHECK(int(f.x0.size()) == sphere.complex.total_cells());
    CHECK(f.x1.empty());
    CHECK(f.xge2.empty());

    // n = 1: the special points are codimension 1
    SManifold s = circles_and_interval(2);
    auto g = codim_filtration(s);
    CHECK(g.x1.size() == 2);
    CHECK(g.xge2.empty());
    CHECK(g.x0.size() + g.x1.size() == size_t(s.complex.total_cells()));

    // n = 2 wedge of spheres: the wedge point has codimension 2
    DeltaComplex two(2);
    two.add_vertex();  // shared vertex 0
    auto add_sphere = [&two](std::array<int, 4> vs) {
        std::map<std::pair<int, int>, int> e;
        auto edge = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = e.find(key);
            if (it != e.end()) return it->second;
            int idx = two.add_cell(1, {key.second, key.first});
            e[key] = idx;
            return idx;
        };
        auto tri = [&](int a, int b, int c) {
            two.add_cell(2, {edge(b, c), edge(a, c), edge(a, b)});
        };
        tri(vs[1], vs[2], vs[3]);
        tri(vs[0], vs[2], vs[3]);
        tri(vs[0], vs[1], vs[3]);
        tri(vs[0], vs[1], vs[2]);
    };
    std::array<int, 4> a{0, two.add_vertex(), two.add_vertex(), two.add_vertex()};
    add_sphere(a);
    std::array<int, 4> b{0, two.add_vertex(), two.add_vertex(), two.add_vertex()};
    add_sphere(b);
    two.freeze();
    SManifold w;
    w.complex = std::move(two);
    w.n = 2;
    w.num_strata = 2;
    w.stratum_of.resize(3);
    w.stratum_of[0].assign(w.complex.num_cells(0), 0);
    w.stratum_of[0][0] = 1;  // the wedge point
    w.stratum_of[1].assign(w.complex.num_cells(1), 0);
    w.stratum_of[2].assign(w.complex.num_cells(2), 0);
    w.finish();
    REQUIRE(validate_smanifold(w).ok());
    auto h = codim_filtration(w);
    CHECK(h.x1.empty());
    CHECK(h.xge2.size() == 1);
}

TEST_CASE("orientation of a triangulated circle") {
    SManifold s = circle_manifold(5);
    OrientationCert cert = OrientationCert::plus_ones(s, Ring::Z);
    auto res = check_orientation(s, cert);
    CHECK(res.ok);

    // flipping one edge breaks it; flipping all preserves it
    OrientationCert bad = cert;
    bad.signs[2] = -1;
    CHECK_FALSE(check_orientation(s, bad).ok);
    CHECK(check_orientation(s, cert.flipped()).ok);
}

TEST_CASE("verdict is invariant under global reversal on random certs") {
    SManifold s = testfix::one_stratum(testfix::tetra_sphere(), 2);
    for (int mask = 0; mask < 16; ++mask) {
        OrientationCert cert = OrientationCert::plus_ones(s, Ring::Z);
        for (int i = 0; i < 4; ++i)
            if (mask & (1 << i)) cert.signs[i] = -1;
        CHECK(check_orientation(s, cert).ok == check_orientation(s, cert.flipped()).ok);
    }
}

TEST_CASE("an orientation over Z passes over Z2 after forgetting signs") {
    SManifold s = circle_manifold(4);
    OrientationCert cert = OrientationCert::plus_ones(s, Ring::Z);
    cert.signs = {1, 1, 1, 1};
    REQUIRE(check_orientation(s, cert).ok);
    CHECK(check_z2_class(s).ok);
}

TEST_CASE("Z2 class fails at odd wedge points") {
    SManifold s = circles_and_interval(2);
    auto res = check_z2_class(s);
    REQUIRE_FALSE(res.ok);
    // defect at both special points: the interval end (one end) and the
    // wedge point (2m + 1 ends)
    CHECK(res.defect.coeffs().size() == 2);
}

TEST_CASE("trivial bundle matches the plain orientation check") {
    SManifold s = circle_manifold(4);
    OrientationCert cert = OrientationCert::plus_ones(s, Ring::Z);
    cert.bundle = Z2Cocycle{std::vector<int>(s.complex.num_cells(1), 1)};
    cert.omega.assign(s.complex.num_cells(1), 1);
    CHECK(check_orientation_bundle(s, cert).ok == check_orientation(s, cert).ok);
}

TEST_CASE("fundamental class of the oriented sphere generates H_2") {
    SManifold s = testfix::one_stratum(testfix::tetra_sphere(), 2);
    OrientationCert cert = OrientationCert::plus_ones(s, Ring::Z);
    cert.signs = {1, -1, 1, -1};
    auto res = fundamental_class(s, cert);
    REQUIRE(res.ok);
    CHECK(res.group.rank == 1);
    REQUIRE(res.coords.size() == 1);
    CHECK((res.coords[0] == 1 || res.coords[0] == -1));

    // zero weights give the zero class
    OrientationCert zero = cert;
    zero.weights.assign(s.num_strata, Rat(0));
    auto zres = fundamental_class(s, zero);
    REQUIRE(zres.ok);
    CHECK(zres.coords[0] == 0);

    // refusal names the defect
    OrientationCert bad = cert;
    bad.signs = {1, 1, 1, 1};
    auto bres = fundamental_class(s, bad);
    CHECK_FALSE(bres.ok);
    CHECK(bres.refusal.find("stratum") != std::string::npos);
}

TEST_CASE("fundamental class of a disjoint union is the direct sum") {
    SManifold a = circle_manifold(3);
    SManifold b = circle_manifold(4);
    auto du = disjoint_union(a, b);
    REQUIRE(validate_smanifold(du.manifold).ok());
    OrientationCert cert = OrientationCert::plus_ones(du.manifold, Ring::Z);
    auto res = fundamental_class(du.manifold, cert);
    REQUIRE(res.ok);
    REQUIRE(res.coords.size() == 2);
    auto ca = fundamental_class(a, OrientationCert::plus_ones(a, Ring::Z));
    auto cb = fundamental_class(b, OrientationCert::plus_ones(b, Ring::Z));
    REQUIRE(ca.ok);
    REQUIRE(cb.ok);
    // one +-1 per circle in the union, matching the summands' classes up to
    // basis order
    CHECK((res.coords[0] == 1 || res.coords[0] == -1));
    CHECK((res.coords[1] == 1 || res.coords[1] == -1));
}

TEST_CASE("homology vanishes above the declared dimension") {
    for (int m = 1; m <= 3; ++m) {
        SManifold s = circles_and_interval(m);
        for (Ring ring : {Ring::Z, Ring::Q, Ring::Z2}) {
            CHECK(homology_groups(s.complex, ring, s.n + 1).rank == 0);
            CHECK(homology_groups(s.complex, ring, s.n + 2).rank == 0);
        }
    }
}
