#pragma once

#include <utility>
#include <vector>

#include "superfrieze/scalar.hpp"

namespace superfrieze {

/// Dense matrix over SuperScalar with a declared (p,q) block split: the
/// first p row/column indices are even, the last q odd. Immutable after
/// construction apart from the entry setter used while assembling.
class SuperMatrix {
  public:
    SuperMatrix(int rows, int cols, std::pair<int, int> block = {0, 0})
        : rows_(rows), cols_(cols), block_(block),
          entries_(static_cast<std::size_t>(rows) * cols) {}

    static SuperMatrix identity(int n, std::pair<int, int> block = {0, 0});

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::pair<int, int> block() const { return block_; }

    const SuperScalar& at(int r, int c) const { return entries_[idx(r, c)]; }
    void set(int r, int c, SuperScalar v) { entries_[idx(r, c)] = std::move(v); }

    friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

    std::string str() const;

  private:
    int rows_, cols_;
    std::pair<int, int> block_;
    std::vector<SuperScalar> entries_;

    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }
};

/// Row-by-column product; factor order preserved (odd entries anticommute).
SuperMatrix mat_mul(const SuperMatrix& m, const SuperMatrix& n);

SuperMatrix mat_sub(const SuperMatrix& m, const SuperMatrix& n);

/// Recursive Laplace expansion along the first column with cofactor sign
/// (-1)^(r+1) and factor order entry * minor. Coincides with the ordinary
/// determinant on matrices of even entries; on other shapes it is the
/// convention used by the supercontinuant determinant formulas.
SuperScalar det_first_column(const SuperMatrix& m);

/// Signed permutation-sum determinant, factors in row order. Test oracle
/// for even matrices; exponential, keep n small.
SuperScalar det_permutation_sum(const SuperMatrix& m);

/// det(A - B D^-1 C) * det(D)^-1 for the declared block split; D must have
/// even commuting entries whose determinant has an invertible body.
SuperScalar berezinian(const SuperMatrix& m);

/// Membership test for the 3x3 realization of OSp(1|2): the five defining
/// relations plus the parity pattern. Returns false on any other shape.
bool is_osp12(const SuperMatrix& m);

/// Inverse of an OSp(1|2) element by entry shuffle (no division).
SuperMatrix osp_inverse(const SuperMatrix& m);

} // namespace superfrieze
