#pragma once

#include <vector>

#include "gradedmf/rational.hpp"

namespace gmf {

// Dense matrix over Q, exact arithmetic only.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix transpose() const;
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

struct KernelImage {
    // Kernel vectors in reduced-echelon parametrization, one per free column,
    // ordered by free column index.
    std::vector<std::vector<Rational>> kernel;
    // Columns of the original matrix at the pivot positions.
    std::vector<std::vector<Rational>> image;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Exact kernel/image/rank via fraction-free (Bareiss) elimination on the
// integer-cleared matrix. rank + |kernel| = cols always holds.
KernelImage rat_kernel_image(const RatMatrix& m);

int rat_rank(const RatMatrix& m);

// Solve A x = b for square invertible A; throws if singular.
std::vector<Rational> rat_solve(const RatMatrix& a, const std::vector<Rational>& b);

// Inverse of a square invertible matrix; throws if singular.
RatMatrix rat_inverse(const RatMatrix& a);

} // namespace gmf
