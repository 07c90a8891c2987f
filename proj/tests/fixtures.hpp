#ifndef STRAT_TESTS_FIXTURES_HPP
#define STRAT_TESTS_FIXTURES_HPP

// Small hand-built complexes shared by the unit tests. Corpus fixtures live
// in the library (strat/corpus.hpp); these are test-local scratch models.

#include <algorithm>
#include <map>

#include "strat/smanifold.hpp"

namespace strat::testfix {

// Standard 2-simplex: vertices 0,1,2; edges (1,2),(0,2),(0,1); one triangle.
inline DeltaComplex triangle() {
    DeltaComplex x(2);
    for (int i = 0; i < 3; ++i) x.add_vertex();
    int e12 = x.add_cell(1, {2, 1});  // faces of edge (1,2): opposite 0 -> 2, opposite 1 -> 1
    int e02 = x.add_cell(1, {2, 0});
    int e01 = x.add_cell(1, {1, 0});
    x.add_cell(2, {e12, e02, e01});
    x.freeze();
    return x;
}

// Boundary of the tetrahedron on vertices 0..3 (a 2-sphere).
inline DeltaComplex tetra_sphere() {
    DeltaComplex x(2);
    for (int i = 0; i < 4; ++i) x.add_vertex();
    // edge (a,b), a < b: faces (b, a)
    std::map<std::pair<int, int>, int> e;
    auto edge = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = e.find(key);
        if (it != e.end()) return it->second;
        int idx = x.add_cell(1, {key.second, key.first});
        e[key] = idx;
        return idx;
    };
    // triangle (a,b,c), a<b<c: faces (edge bc, edge ac, edge ab)
    auto tri = [&](int a, int b, int c) {
        return x.add_cell(2, {edge(b, c), edge(a, c), edge(a, b)});
    };
    tri(1, 2, 3);
    tri(0, 2, 3);
    tri(0, 1, 3);
    tri(0, 1, 2);
    x.freeze();
    return x;
}

// Circle with k >= 1 edges: vertices 0..k-1, edge i from i to i+1 (mod k).
inline DeltaComplex circle(int k) {
    DeltaComplex x(1);
    for (int i = 0; i < k; ++i) x.add_vertex();
    for (int i = 0; i < k; ++i) x.add_cell(1, {(i + 1) % k, i});
    x.freeze();
    return x;
}

// One-stratum s-manifold wrapper.
inline SManifold one_stratum(DeltaComplex c, int n) {
    SManifold s;
    s.complex = std::move(c);
    s.n = n;
    s.num_strata = 1;
    s.stratum_of.resize(s.complex.top_dim() + 1);
    for (int d = 0; d <= s.complex.top_dim(); ++d)
        s.stratum_of[d].assign(s.complex.num_cells(d), 0);
    s.finish();
    return s;
}

}  // namespace strat::testfix

#endif
