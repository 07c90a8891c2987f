#include "strat/smanifold.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace strat {

std::vector<CellRef> SManifold::cells_of_stratum(int s) const {
    std::vector<CellRef> out;
    for (int d = 0; d <= complex.top_dim(); ++d)
        for (int i = 0; i < complex.num_cells(d); ++i)
            if (stratum_of[d][i] == s) out.push_back({d, i});
    return out;
}

std::vector<int> SManifold::strata_of_dim(int d) const {
    std::vector<int> out;
    for (int s = 0; s < num_strata; ++s)
        if (stratum_dim[s] == d) out.push_back(s);
    return out;
}

void SManifold::finish() {
    if (!complex.frozen()) complex.freeze();
    stratum_dim.assign(num_strata, -1);
    for (int d = 0; d <= complex.top_dim(); ++d)
        for (int i = 0; i < complex.num_cells(d); ++i) {
            int s = stratum_of[d][i];
            if (s >= 0 && s < num_strata) stratum_dim[s] = std::max(stratum_dim[s], d);
        }
    if (int(stratum_label.size()) != num_strata) stratum_label.resize(num_strata);
    if (int(assert_manifold.size()) != num_strata) assert_manifold.resize(num_strata, false);
}

ClosurePoset closure_poset(const SManifold& s) {
    ClosurePoset p;
    p.count = s.num_strata;
    p.le.assign(p.count, std::vector<bool>(p.count, false));
    for (int i = 0; i < p.count; ++i) p.le[i][i] = true;
    for (int i = 0; i < p.count; ++i) {
        auto closed = closure_cells(s.complex, s.cells_of_stratum(i));
        for (CellRef c : closed) p.le[i][s.stratum(c)] = true;
    }
    for (int k = 0; k < p.count; ++k)
        for (int i = 0; i < p.count; ++i)
            if (p.le[i][k])
                for (int j = 0; j < p.count; ++j)
                    if (p.le[k][j]) p.le[i][j] = true;
    return p;
}

std::vector<int> stratum_components(const SManifold& s, int stratum) {
    auto cells = s.cells_of_stratum(stratum);
    std::map<CellRef, int> pos;
    for (int i = 0; i < int(cells.size()); ++i) pos[cells[i]] = i;
    std::vector<int> parent(cells.size());
    for (int i = 0; i < int(parent.size()); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int i = 0; i < int(cells.size()); ++i) {
        CellRef c = cells[i];
        if (c.dim == 0) continue;
        for (int f : s.complex.faces(c.dim, c.idx)) {
            auto it = pos.find({c.dim - 1, f});
            if (it != pos.end()) unite(i, it->second);
        }
    }
    std::map<int, int> norm;
    std::vector<int> comp(cells.size());
    for (int i = 0; i < int(cells.size()); ++i) {
        int r = find(i);
        auto [it, fresh] = norm.insert({r, int(norm.size())});
        comp[i] = it->second;
        (void)fresh;
    }
    return comp;
}

namespace {

std::string cell_str(CellRef c) {
    return "(" + std::to_string(c.dim) + "," + std::to_string(c.idx) + ")";
}

// Exact 1-manifold check: every stratum-internal vertex has exactly two
// stratum edge-ends.
void check_dim1(const SManifold& s, int st, ValidationReport& rep) {
    auto cells = s.cells_of_stratum(st);
    std::map<int, int> ends;  // vertex -> edge-end count
    for (CellRef c : cells) {
        if (c.dim != 1) continue;
        const auto& vt = s.complex.vertex_tuple(1, c.idx);
        ends[vt[0]]++;
        ends[vt[1]]++;
    }
    for (CellRef c : cells) {
        if (c.dim != 0) continue;
        int cnt = ends.count(c.idx) ? ends[c.idx] : 0;
        if (cnt != 2)
            rep.add("manifold_dim1", "stratum " + std::to_string(st) + " vertex " +
                                         std::to_string(c.idx) + " has " + std::to_string(cnt) +
                                         " edge-ends (need 2)");
    }
}

// Exact surface check: interior edges have exactly two incident triangle
// sides; the link of every stratum-internal vertex is a single circle.
void check_dim2(const SManifold& s, int st, ValidationReport& rep) {
    auto cells = s.cells_of_stratum(st);
    std::set<int> tri, edge, vert;
    for (CellRef c : cells) {
        if (c.dim == 2) tri.insert(c.idx);
        if (c.dim == 1) edge.insert(c.idx);
        if (c.dim == 0) vert.insert(c.idx);
    }
    std::map<int, int> edge_sides;
    for (int t : tri)
        for (int j = 0; j <= 2; ++j) edge_sides[s.complex.face(2, t, j)]++;
    for (int e : edge) {
        int cnt = edge_sides.count(e) ? edge_sides[e] : 0;
        if (cnt != 2)
            rep.add("manifold_dim2", "stratum " + std::to_string(st) + " edge " +
                                         std::to_string(e) + " lies on " + std::to_string(cnt) +
                                         " triangle sides (need 2)");
    }
    for (int v : vert) {
        // corners at v and their edge-end tokens
        struct Token {
            int edge, end;
            auto operator<=>(const Token&) const = default;
        };
        std::vector<std::array<Token, 2>> corners;
        for (int t : tri) {
            const auto& vt = s.complex.vertex_tuple(2, t);
            for (int p = 0; p <= 2; ++p) {
                if (vt[p] != v) continue;
                std::array<Token, 2> toks;
                int ti = 0;
                for (int j = 0; j <= 2; ++j) {
                    if (j == p) continue;
                    int f = s.complex.face(2, t, j);
                    int q = p < j ? p : p - 1;
                    toks[ti++] = {f, q};
                }
                corners.push_back(toks);
            }
        }
        if (corners.empty()) {
            rep.add("manifold_dim2", "stratum " + std::to_string(st) + " vertex " +
                                         std::to_string(v) + " has no incident triangles");
            continue;
        }
        std::map<Token, std::vector<int>> by_token;
        for (int i = 0; i < int(corners.size()); ++i) {
            by_token[corners[i][0]].push_back(i);
            by_token[corners[i][1]].push_back(i);
        }
        bool ok = true;
        for (auto& [tok, cs] : by_token) {
            if (!edge.count(tok.edge)) ok = false;  // link leaves the stratum
            if (cs.size() != 2) ok = false;
        }
        // every stratum edge-end at v must occur
        for (int e : edge) {
            const auto& vt = s.complex.vertex_tuple(1, e);
            for (int q = 0; q <= 1; ++q)
                if (vt[q] == v && !by_token.count({e, q})) ok = false;
        }
        if (ok) {
            // connectivity of the corner graph
            std::vector<int> comp(corners.size(), -1);
            std::vector<int> stack{0};
            comp[0] = 0;
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                for (const Token& tok : corners[c])
                    for (int o : by_token[tok])
                        if (comp[o] < 0) {
                            comp[o] = 0;
                            stack.push_back(o);
                        }
            }
            for (int c : comp)
                if (c < 0) ok = false;
        }
        if (!ok)
            rep.add("manifold_dim2", "stratum " + std::to_string(st) + " vertex " +
                                         std::to_string(v) + " link is not a circle");
    }
}

// Dimension >= 3 tier: pseudomanifold condition plus a link-connectivity
// heuristic; an assert_manifold override silences the heuristic.
void check_dim_high(const SManifold& s, int st, int d, ValidationReport& rep) {
    if (st < int(s.assert_manifold.size()) && s.assert_manifold[st]) {
        rep.notes.push_back("stratum " + std::to_string(st) +
                            ": manifold property asserted by override flag");
        return;
    }
    auto cells = s.cells_of_stratum(st);
    std::set<int> top, sub;
    for (CellRef c : cells) {
        if (c.dim == d) top.insert(c.idx);
        if (c.dim == d - 1) sub.insert(c.idx);
    }
    std::map<int, int> sides;
    for (int t : top)
        for (int j = 0; j <= d; ++j) sides[s.complex.face(d, t, j)]++;
    for (int e : sub) {
        int cnt = sides.count(e) ? sides[e] : 0;
        if (cnt != 2)
            rep.add("pseudomanifold", "stratum " + std::to_string(st) + " has a codim-1 cell on " +
                                          std::to_string(cnt) + " top-cell sides (need 2)");
    }
    rep.notes.push_back("stratum " + std::to_string(st) +
                        ": dimension >= 3, pseudomanifold + link-connectivity tier only");
    // heuristic: top cells around each stratum vertex form one component
    for (CellRef c : cells) {
        if (c.dim != 0) continue;
        std::vector<int> at;
        for (int t : top) {
            const auto& vt = s.complex.vertex_tuple(d, t);
            if (std::find(vt.begin(), vt.end(), c.idx) != vt.end()) at.push_back(t);
        }
        if (at.size() <= 1) continue;
        // connect via shared codim-1 faces containing v
        std::map<int, std::vector<int>> by_face;
        for (int i = 0; i < int(at.size()); ++i)
            for (int j = 0; j <= d; ++j) {
                int f = s.complex.face(d, at[i], j);
                const auto& fv = s.complex.vertex_tuple(d - 1, f);
                if (std::find(fv.begin(), fv.end(), c.idx) != fv.end())
                    by_face[f].push_back(i);
            }
        std::vector<int> comp(at.size(), -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j <= d; ++j) {
                int f = s.complex.face(d, at[i], j);
                auto it = by_face.find(f);
                if (it == by_face.end()) continue;
                for (int o : it->second)
                    if (comp[o] < 0) {
                        comp[o] = 0;
                        stack.push_back(o);
                    }
            }
        }
        for (int x : comp)
            if (x < 0)
                rep.add("link_connectivity", "stratum " + std::to_string(st) + " vertex " +
                                                 std::to_string(c.idx) +
                                                 " has a disconnected top-cell star");
    }
}

}  // namespace

ValidationReport validate_smanifold(const SManifold& s) {
    ValidationReport rep;
    ValidationReport crep = validate_complex(s.complex);
    for (auto& iss : crep.issues) rep.issues.push_back(iss);
    if (!rep.ok()) return rep;

    if (s.complex.top_dim() > s.n && [&] {
            for (int d = s.n + 1; d <= s.complex.top_dim(); ++d)
                if (s.complex.num_cells(d) > 0) return true;
            return false;
        }())
        rep.add("dimension", "complex has cells above the declared dimension");

    // partition
    std::vector<int> count(s.num_strata, 0);
    for (int d = 0; d <= s.complex.top_dim(); ++d) {
        if (int(s.stratum_of.size()) <= d || int(s.stratum_of[d].size()) != s.complex.num_cells(d)) {
            rep.add("partition", "stratum assignment missing for dimension " + std::to_string(d));
            return rep;
        }
        for (int i = 0; i < s.complex.num_cells(d); ++i) {
            int st = s.stratum_of[d][i];
            if (st < 0 || st >= s.num_strata) {
                rep.add("partition", "cell " + cell_str({d, i}) + " has no stratum");
                return rep;
            }
            count[st]++;
        }
    }
    for (int st = 0; st < s.num_strata; ++st)
        if (count[st] == 0) rep.add("partition", "stratum " + std::to_string(st) + " is empty");
    if (!rep.ok()) return rep;

    // dimensions
    for (int st = 0; st < s.num_strata; ++st) {
        int maxd = -1;
        for (CellRef c : s.cells_of_stratum(st)) maxd = std::max(maxd, c.dim);
        if (s.stratum_dim[st] != maxd)
            rep.add("stratum_dim", "stratum " + std::to_string(st) +
                                       " declared dimension differs from max cell dimension");
        if (maxd > s.n)
            rep.add("stratum_dim",
                    "stratum " + std::to_string(st) + " exceeds the declared dimension");
    }

    // local closedness: the frontier of each stratum is closed
    for (int st = 0; st < s.num_strata; ++st) {
        auto closed = closure_cells(s.complex, s.cells_of_stratum(st));
        std::set<CellRef> frontier;
        for (CellRef c : closed)
            if (s.stratum(c) != st) frontier.insert(c);
        for (CellRef c : frontier) {
            if (c.dim == 0) continue;
            for (int f : s.complex.faces(c.dim, c.idx))
                if (!frontier.count({c.dim - 1, f}))
                    rep.add("locally_closed", "stratum " + std::to_string(st) +
                                                  " frontier is not closed at cell " +
                                                  cell_str({c.dim - 1, f}));
        }
    }

    // poset conditions
    ClosurePoset p = closure_poset(s);
    for (int i = 0; i < p.count; ++i)
        for (int j = i + 1; j < p.count; ++j)
            if (p.le[i][j] && p.le[j][i])
                rep.add("poset_antisymmetry", "strata " + std::to_string(i) + " and " +
                                                  std::to_string(j) + " are closure-equivalent");
    for (int i = 0; i < p.count; ++i)
        for (int j = 0; j < p.count; ++j) {
            if (i == j || !p.le[i][j]) continue;
            int di = s.stratum_dim[i], dj = s.stratum_dim[j];
            bool case_a = (di == s.n - 1 || di == s.n) && dj < di;
            bool case_b = di <= s.n - 2 && dj <= s.n - 2;
            if (!case_a && !case_b)
                rep.add("codimension_rule",
                        "strata " + std::to_string(i) + " (dim " + std::to_string(di) + ") <= " +
                            std::to_string(j) + " (dim " + std::to_string(dj) +
                            ") violate the codimension rule");
        }

    // manifold tiers
    for (int st = 0; st < s.num_strata; ++st) {
        int d = s.stratum_dim[st];
        if (d <= 0) continue;
        if (d == 1)
            check_dim1(s, st, rep);
        else if (d == 2)
            check_dim2(s, st, rep);
        else
            check_dim_high(s, st, d, rep);
    }

    rep.notes.push_back(
        "finite complex: local compactness, Hausdorff, local finiteness automatic");
    rep.notes.push_back(s.realization ? "affine realization present"
                                      : "no affine realization attached");
    if (s.realization) {
        ValidationReport rr = validate_realization(s.complex, *s.realization);
        for (auto& iss : rr.issues) rep.issues.push_back(iss);
    }
    return rep;
}

CodimFiltration codim_filtration(const SManifold& s) {
    ValidationReport rep = validate_smanifold(s);
    if (!rep.ok())
        throw std::invalid_argument("codim_filtration: invalid s-manifold: " +
                                    rep.issues[0].message);
    CodimFiltration f;
    for (int d = 0; d <= s.complex.top_dim(); ++d)
        for (int i = 0; i < s.complex.num_cells(d); ++i) {
            CellRef c{d, i};
            int sd = s.stratum_dim[s.stratum(c)];
            if (sd == s.n) f.x0.push_back(c);
            if (sd == s.n - 1) f.x1.push_back(c);
            if (sd >= s.n - 1) f.xle1.push_back(c);
            if (sd <= s.n - 2) f.xge2.push_back(c);
        }
    // X_{>=2} must be closed (equivalently X_{<=1} open).
    std::set<CellRef> ge2(f.xge2.begin(), f.xge2.end());
    for (CellRef c : f.xge2) {
        if (c.dim == 0) continue;
        for (int fc : s.complex.faces(c.dim, c.idx))
            if (!ge2.count({c.dim - 1, fc}))
                throw std::logic_error("codim_filtration: X_{>=2} is not closed");
    }
    return f;
}

OrientationCert OrientationCert::plus_ones(const SManifold& s, Ring ring) {
    OrientationCert c;
    c.ring = ring;
    c.signs.assign(s.complex.num_cells(s.n), 1);
    c.weights.assign(s.num_strata, Rat(1));
    return c;
}

OrientationCert OrientationCert::flipped() const {
    OrientationCert c = *this;
    for (int& v : c.signs) v = -v;
    return c;
}

ValidationReport validate_cert(const SManifold& s, const OrientationCert& cert) {
    ValidationReport rep;
    if (int(cert.signs.size()) != s.complex.num_cells(s.n))
        rep.add("signs", "certificate must assign a sign to every top cell");
    for (int v : cert.signs)
        if (v != 1 && v != -1) rep.add("signs", "signs must be +1/-1");
    if (cert.ring == Ring::Z2)
        for (int v : cert.signs)
            if (v != 1) rep.add("signs", "Z2 certificates force all signs +1");
    if (!cert.weights.empty() && int(cert.weights.size()) != s.num_strata)
        rep.add("weights", "weights must be given per stratum");
    if (cert.ring == Ring::Z)
        for (const Rat& w : cert.weights)
            if (denominator(w) != 1) rep.add("weights", "non-integer weight over Z");
    if (cert.bundle) {
        ValidationReport cr = validate_cocycle(s.complex, *cert.bundle);
        for (auto& iss : cr.issues) rep.issues.push_back(iss);
        if (int(cert.omega.size()) != s.complex.num_cells(s.n))
            rep.add("omega", "bundle certificates need an omega sign per top cell");
        for (int v : cert.omega)
            if (v != 1 && v != -1) rep.add("omega", "omega values must be +1/-1");
    }
    return rep;
}

Chain weighted_top_chain(const SManifold& s, const OrientationCert& cert) {
    Chain t(cert.ring, s.n);
    for (int i = 0; i < s.complex.num_cells(s.n); ++i) {
        int st = s.stratum({s.n, i});
        if (s.stratum_dim[st] != s.n) continue;
        Rat w = cert.weights.empty() ? Rat(1) : cert.weights[st];
        if (cert.ring == Ring::Z2) w = ring_normalize(Ring::Z2, w);
        Rat v = w * cert.signs[i];
        t.add(i, v);
    }
    return t;
}

OrientationCheck check_orientation(const SManifold& s, const OrientationCert& cert) {
    OrientationCheck out;
    out.prep = validate_cert(s, cert);
    if (!out.prep.ok()) return out;
    Chain t = weighted_top_chain(s, cert);
    out.defect = boundary_chain(t, s.complex);
    out.ok = out.defect.is_zero();
    return out;
}

OrientationCheck check_z2_class(const SManifold& s) {
    return check_orientation(s, OrientationCert::plus_ones(s, Ring::Z2));
}

OrientationCheck check_orientation_bundle(const SManifold& s, const OrientationCert& cert) {
    OrientationCheck out;
    out.prep = validate_cert(s, cert);
    if (!cert.bundle) out.prep.add("bundle", "certificate has no bundle data");
    if (!out.prep.ok()) return out;
    Chain t(cert.ring, s.n);
    for (int i = 0; i < s.complex.num_cells(s.n); ++i) {
        int st = s.stratum({s.n, i});
        if (s.stratum_dim[st] != s.n) continue;
        Rat w = cert.weights.empty() ? Rat(1) : cert.weights[st];
        Rat v = w * cert.signs[i] * cert.omega[i];
        t.add(i, v);
    }
    out.defect = twisted_boundary(t, s.complex, *cert.bundle);
    out.ok = out.defect.is_zero();
    return out;
}

FundamentalClassResult fundamental_class(const SManifold& s, const OrientationCert& cert) {
    FundamentalClassResult res;
    OrientationCheck chk = check_orientation(s, cert);
    if (!chk.ok) {
        res.refusal = chk.prep.ok() ? "orientation check failed: " + describe_defect(s, chk.defect)
                                    : chk.prep.issues[0].message;
        return res;
    }
    Chain t = weighted_top_chain(s, cert);
    HomologyBasis hb = homology_basis(s.complex, cert.ring, s.n);
    res.group = hb.group;
    res.coords = hb.coords(t);
    res.ok = true;
    return res;
}

DisjointUnion disjoint_union(const SManifold& a, const SManifold& b) {
    DisjointUnion out;
    int top = std::max(a.complex.top_dim(), b.complex.top_dim());
    SManifold& m = out.manifold;
    m.complex = DeltaComplex(top);
    m.n = std::max(a.n, b.n);
    m.num_strata = a.num_strata + b.num_strata;
    out.stratum_offset = a.num_strata;
    m.stratum_of.resize(top + 1);
    out.cell_offset.resize(top + 1);

    for (int d = 0; d <= top; ++d) {
        int na = a.complex.num_cells(d);
        out.cell_offset[d].assign(1, na);
        for (int i = 0; i < na; ++i) {
            if (d == 0)
                m.complex.add_vertex();
            else
                m.complex.add_cell(d, a.complex.faces(d, i));
            m.stratum_of[d].push_back(a.stratum_of[d][i]);
        }
        for (int i = 0; i < b.complex.num_cells(d); ++i) {
            if (d == 0) {
                m.complex.add_vertex();
            } else {
                std::vector<int> f = b.complex.faces(d, i);
                for (int& v : f) v += a.complex.num_cells(d - 1);
                m.complex.add_cell(d, std::move(f));
            }
            m.stratum_of[d].push_back(b.stratum_of[d][i] + a.num_strata);
        }
    }
    m.finish();
    return out;
}

std::string describe_defect(const SManifold& s, const Chain& defect) {
    std::string out;
    for (const auto& [cell, v] : defect.coeffs()) {
        if (!out.empty()) out += ", ";
        out += "cell (" + std::to_string(defect.dim()) + "," + std::to_string(cell) +
               ") stratum " + std::to_string(s.stratum({defect.dim(), cell})) + ": " +
               rational_str(v);
    }
    return out.empty() ? "none" : out;
}

}  // namespace strat
