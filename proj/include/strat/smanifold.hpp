#ifndef STRAT_SMANIFOLD_HPP
#define STRAT_SMANIFOLD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strat/delta_complex.hpp"
#include "strat/homology.hpp"

namespace strat {

/**
 * A stratified combinatorial model: a Delta-complex partitioned into strata,
 * each a union of open cells carrying a declared manifold dimension. The
 * declared dimension n bounds all stratum dimensions.
 */
struct SManifold {
    DeltaComplex complex;
    std::optional<AffineRealization> realization;
    int n = 0;  // declared dimension
    int num_strata = 0;
    std::vector<std::vector<int>> stratum_of;  // [dim][idx] -> stratum index
    std::vector<int> stratum_dim;              // per stratum
    std::vector<std::string> stratum_label;    // optional, may be empty
    std::vector<bool> assert_manifold;         // per stratum override for dim >= 3

    int stratum(CellRef c) const { return stratum_of[c.dim][c.idx]; }
    std::vector<CellRef> cells_of_stratum(int s) const;
    std::vector<int> strata_of_dim(int d) const;

    // Recomputes stratum_dim from the cells and resizes auxiliary arrays.
    void finish();
};

/** The closure relation on strata: i <= j iff closure(X^i) meets X^j. */
struct ClosurePoset {
    int count = 0;
    std::vector<std::vector<bool>> le;  // reflexive-transitive closure

    bool leq(int i, int j) const { return le[i][j]; }
};

ClosurePoset closure_poset(const SManifold& s);

// Connected components of a stratum (two cells are adjacent when one is a
// face of the other and both lie in the stratum). Returns component index
// per stratum cell, aligned with cells_of_stratum(s).
std::vector<int> stratum_components(const SManifold& s, int stratum);

// Full validator for the stratified-manifold axioms: partition, dimension
// bounds, local closedness, poset antisymmetry, the codimension rule, and
// per-stratum manifold checks (exact in dimensions <= 2, pseudomanifold plus
// link-connectivity heuristic above, override flag recorded in the report).
ValidationReport validate_smanifold(const SManifold& s);

/** Codimension filtration of the cell set. */
struct CodimFiltration {
    std::vector<CellRef> x0, x1, xle1, xge2;
};

// Throws std::invalid_argument when s fails validation.
CodimFiltration codim_filtration(const SManifold& s);

/**
 * Orientation data: a sign per top cell, ring weights per stratum (only
 * dimension-n strata matter), and optionally a Z2-bundle cocycle with an
 * identification sign per top cell.
 */
struct OrientationCert {
    Ring ring = Ring::Z;
    std::vector<int> signs;    // per n-cell, +1/-1
    std::vector<Rat> weights;  // per stratum, default 1
    std::optional<Z2Cocycle> bundle;
    std::vector<int> omega;  // per n-cell, +1/-1 (used with bundle)

    static OrientationCert plus_ones(const SManifold& s, Ring ring);
    OrientationCert flipped() const;  // global orientation reversal
};

ValidationReport validate_cert(const SManifold& s, const OrientationCert& cert);

struct OrientationCheck {
    bool ok = false;
    Chain defect;           // boundary of the weighted top chain
    ValidationReport prep;  // certificate/structure problems, if any

    OrientationCheck() : defect(Ring::Z, 0) {}
};

// Weighted signed top chain of the certificate (Eq-level: sum over
// dimension-n strata of weight * sign * cell).
Chain weighted_top_chain(const SManifold& s, const OrientationCert& cert);

// Verdict is true iff the boundary of the weighted top chain vanishes
// identically; the defect chain carries the nonzero coefficients.
OrientationCheck check_orientation(const SManifold& s, const OrientationCert& cert);

// All-plus-one signs over Z2, weights 1.
OrientationCheck check_z2_class(const SManifold& s);

// Twisted variant: boundary taken with the bundle cocycle, signs adjusted
// by omega.
OrientationCheck check_orientation_bundle(const SManifold& s, const OrientationCert& cert);

struct FundamentalClassResult {
    bool ok = false;
    std::string refusal;  // defect description when not ok
    AbelianGroupPresentation group;
    ClassCoords coords;
};

// Class coordinates of the weighted top cycle in H_n(X, ring); refuses with
// the defect named when the certificate fails its check.
FundamentalClassResult fundamental_class(const SManifold& s, const OrientationCert& cert);

// Disjoint union; records the stratum index offset of the second summand.
struct DisjointUnion {
    SManifold manifold;
    std::vector<int> vertex_offset;   // [0]: offset of b's cells per dim... see impl
    int stratum_offset = 0;
    std::vector<std::vector<int>> cell_offset;  // per dim, offset of b cells
};

DisjointUnion disjoint_union(const SManifold& a, const SManifold& b);

// Human-readable defect summary: nonzero coefficients with their strata.
std::string describe_defect(const SManifold& s, const Chain& defect);

}  // namespace strat

#endif
