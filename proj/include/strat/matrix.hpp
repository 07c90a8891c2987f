#ifndef STRAT_MATRIX_HPP
#define STRAT_MATRIX_HPP

#include <optional>
#include <vector>

#include "strat/ring.hpp"

namespace strat {

// Dense integer matrix, row-major. Sizes in this project are small
// (chain groups of desk-scale complexes), so no sparsity is attempted.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    static IntMat identity(int n);

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v);

// Smith normal form U * M * V = D, with U, V unimodular and D diagonal
// with divisibility d_1 | d_2 | ... Inverses are tracked alongside.
struct SnfResult {
    IntMat U, Uinv, D, V, Vinv;
    // Diagonal entries of D, padded with zeros up to min(rows, cols).
    std::vector<Int> diagonal() const;
    // Nonzero diagonal entries (the invariant factors, 1s included).
    std::vector<Int> invariant_factors() const;
    int rank() const;
};

SnfResult smith_normal_form(const IntMat& m);

// Solve M x = b over the integers. Returns std::nullopt when no integral
// solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_integer(const SnfResult& snf, const std::vector<Int>& b);

// Basis of the integer kernel of M, as columns (each a vector of size cols).
// The basis spans a direct summand of Z^cols.
std::vector<std::vector<Int>> integer_kernel(const IntMat& m);

// --- Exact field linear algebra -------------------------------------------

// Rational dense matrix with Gaussian elimination helpers.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    Rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

int rat_rank(RatMat m);
std::optional<std::vector<Rat>> rat_solve(RatMat m, std::vector<Rat> b);
std::vector<std::vector<Rat>> rat_kernel(RatMat m);
// Sign of the determinant of a square matrix: -1, 0, +1.
int rat_det_sign(RatMat m);

// GF(2) matrix (entries 0/1).
struct GF2Mat {
    int rows = 0, cols = 0;
    std::vector<unsigned char> a;

    GF2Mat() = default;
    GF2Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

    unsigned char& at(int r, int c) { return a[size_t(r) * cols + c]; }
    unsigned char at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

int gf2_rank(GF2Mat m);
std::optional<std::vector<unsigned char>> gf2_solve(GF2Mat m, std::vector<unsigned char> b);
std::vector<std::vector<unsigned char>> gf2_kernel(GF2Mat m);

}  // namespace strat

#endif
