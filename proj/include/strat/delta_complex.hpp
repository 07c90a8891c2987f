#ifndef STRAT_DELTA_COMPLEX_HPP
#define STRAT_DELTA_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strat/ring.hpp"

namespace strat {

// A cell is addressed by (dimension, dense index within that dimension).
struct CellRef {
    int dim = 0;
    int idx = 0;
    auto operator<=>(const CellRef&) const = default;
};

/**
 * A finite Delta-complex: cells with ordered face tuples. The j-th face of a
 * k-cell is the (k-1)-cell opposite vertex j. Identifications (repeated
 * vertices, glued faces) are allowed; the simplicial identity
 * face_i(face_j(s)) = face_{j-1}(face_i(s)) for i < j is required of valid
 * complexes. Values are immutable after freeze().
 */
class DeltaComplex {
public:
    DeltaComplex() { cells_.resize(1); }
    explicit DeltaComplex(int top_dim) { cells_.resize(size_t(top_dim) + 1); }

    int top_dim() const { return int(cells_.size()) - 1; }
    int num_cells(int dim) const {
        return dim >= 0 && dim <= top_dim() ? int(cells_[dim].size()) : 0;
    }
    int total_cells() const;

    // Building. add_cell returns the new dense index.
    int add_vertex();
    int add_cell(int dim, std::vector<int> faces);
    void set_label(CellRef c, const std::string& label);

    const std::vector<int>& faces(int dim, int idx) const { return cells_[dim][idx]; }
    int face(int dim, int idx, int j) const { return cells_[dim][idx][j]; }
    std::optional<std::string> label(CellRef c) const;
    const std::map<std::pair<int, int>, std::string>& labels() const { return labels_; }

    bool has_cell(CellRef c) const {
        return c.dim >= 0 && c.dim <= top_dim() && c.idx >= 0 && c.idx < num_cells(c.dim);
    }

    // Ordered vertex tuple (v_0..v_k) of a cell; entries may repeat.
    // Requires a structurally valid complex (freeze() checks closure).
    const std::vector<int>& vertex_tuple(int dim, int idx) const;

    // Validates face closure and precomputes vertex tuples. Must be called
    // after building and before vertex_tuple/affine queries.
    void freeze();
    bool frozen() const { return frozen_; }

    bool operator==(const DeltaComplex& o) const {
        return cells_ == o.cells_ && labels_ == o.labels_;
    }

private:
    // cells_[k][i] = face tuple (size k+1) of the i-th k-cell; vertices have
    // empty tuples.
    std::vector<std::vector<std::vector<int>>> cells_;
    std::map<std::pair<int, int>, std::string> labels_;
    std::vector<std::vector<std::vector<int>>> vertex_tuples_;
    bool frozen_ = false;
};

/** Chain with exact coefficients in one degree over one ring. */
class Chain {
public:
    Chain(Ring ring, int dim) : ring_(ring), dim_(dim) {}

    Ring ring() const { return ring_; }
    int dim() const { return dim_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    Rat coeff(int cell) const;
    void add(int cell, const Rat& v);  // accumulate and normalize
    void set(int cell, const Rat& v);

    Chain operator+(const Chain& o) const;
    Chain operator-() const;
    bool operator==(const Chain& o) const {
        return ring_ == o.ring_ && dim_ == o.dim_ && coeffs_ == o.coeffs_;
    }

private:
    Ring ring_;
    int dim_;
    std::map<int, Rat> coeffs_;  // zero coefficients absent
};

struct ValidationIssue {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<std::string> notes;
    bool ok() const { return issues.empty(); }
    void add(const std::string& code, const std::string& message) {
        issues.push_back({code, message});
    }
};

// Diagnostic validation of the DeltaComplex invariants: face closure and the
// simplicial identity. Never throws; problems land in the report.
ValidationReport validate_complex(const DeltaComplex& x);

// Boundary operator: d(sum c_s s) = sum_s c_s sum_j (-1)^j face_j(s).
// Degree-0 chains map to the zero chain in degree -1.
Chain boundary_chain(const Chain& c, const DeltaComplex& x);

// Result of extracting a subcomplex: the new complex plus the identifier
// translation in both directions.
struct SubcomplexResult {
    DeltaComplex complex;
    // new (dim, idx) -> old idx
    std::vector<std::vector<int>> to_old;
    // old (dim, idx) -> new idx or -1
    std::vector<std::vector<int>> to_new;

    CellRef old_of(CellRef c) const { return {c.dim, to_old[c.dim][c.idx]}; }
};

// Smallest sub-Delta-complex containing the given cells (closure under
// faces). Throws std::invalid_argument on unknown identifiers.
SubcomplexResult subcomplex(const DeltaComplex& x, const std::vector<CellRef>& cells);

// All cells having one of the given cells as an iterated face (the open
// star), including the given cells.
std::vector<CellRef> star(const DeltaComplex& x, const std::vector<CellRef>& cells);

// Closure of the star.
SubcomplexResult closed_star(const DeltaComplex& x, const std::vector<CellRef>& cells);

// Closure of a cell set inside x (set of cells, not a new complex).
std::vector<CellRef> closure_cells(const DeltaComplex& x, const std::vector<CellRef>& cells);

/**
 * Rational coordinates for the 0-cells; each cell is realized as the affine
 * simplex on its vertex tuple.
 */
struct AffineRealization {
    int ambient = 0;
    std::vector<std::vector<Rat>> coords;  // per 0-cell

    const std::vector<Rat>& vertex(int v) const { return coords[v]; }
};

// Checks common ambient dimension and exact affine independence of every
// cell's vertex set.
ValidationReport validate_realization(const DeltaComplex& x, const AffineRealization& r);

// Tangent basis of a realized cell: edge vectors v_i - v_0, i = 1..k.
std::vector<std::vector<Rat>> cell_tangent_basis(const DeltaComplex& x,
                                                 const AffineRealization& r, CellRef c);

// Barycenter of a realized cell (a convenient rational interior witness).
std::vector<Rat> cell_barycenter(const DeltaComplex& x, const AffineRealization& r, CellRef c);

}  // namespace strat

#endif
