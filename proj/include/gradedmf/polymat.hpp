#pragma once

#include <vector>

#include "gradedmf/poly.hpp"

namespace gmf {

// Dense matrix of polynomials; carrier for factorization blocks, morphism
// supermatrices and the graded elimination.
class PolyMat {
public:
    PolyMat() : rows_(0), cols_(0), nvars_(0) {}
    PolyMat(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          entries_(static_cast<size_t>(rows) * cols, Poly(nvars)) {}

    static PolyMat identity(int n, int nvars);
    static PolyMat scalar(int n, const Poly& p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    Poly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Poly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const PolyMat& o) const = default;

    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat operator-(const PolyMat& o) const;
    PolyMat operator-() const;
    PolyMat scaled(const Rational& c) const;
    bool is_zero() const;

    // Block assembly [[a, b], [c, d]]; dimensions must tile.
    static PolyMat block2x2(const PolyMat& a, const PolyMat& b,
                            const PolyMat& c, const PolyMat& d);

    // Every entry rewritten over a larger variable set.
    PolyMat extended(int new_nvars) const;

private:
    int rows_, cols_, nvars_;
    std::vector<Poly> entries_;
};

} // namespace gmf
