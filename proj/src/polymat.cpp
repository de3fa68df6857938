#include "gradedmf/polymat.hpp"

#include <stdexcept>

namespace gmf {

PolyMat PolyMat::identity(int n, int nvars) {
    PolyMat m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ratio(1), nvars);
    return m;
}

PolyMat PolyMat::scalar(int n, const Poly& p) {
    PolyMat m(n, n, p.nvars());
    for (int i = 0; i < n; ++i) m.at(i, i) = p;
    return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMat: dimension mismatch in product");
    PolyMat r(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    return r;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("PolyMat: dimension mismatch in sum");
    PolyMat r(rows_, cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
    return *this + (-o);
}

PolyMat PolyMat::operator-() const { return scaled(ratio(-1)); }

PolyMat PolyMat::scaled(const Rational& c) const {
    PolyMat r(rows_, cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).scaled(c);
    return r;
}

bool PolyMat::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

PolyMat PolyMat::block2x2(const PolyMat& a, const PolyMat& b,
                          const PolyMat& c, const PolyMat& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() ||
        a.cols() != c.cols() || b.cols() != d.cols())
        throw std::invalid_argument("PolyMat::block2x2: blocks do not tile");
    PolyMat r(a.rows() + c.rows(), a.cols() + b.cols(), a.nvars());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) r.at(a.rows() + i, j) = c.at(i, j);
        for (int j = 0; j < d.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = d.at(i, j);
    }
    return r;
}

PolyMat PolyMat::extended(int new_nvars) const {
    PolyMat r(rows_, cols_, new_nvars);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).extended(new_nvars);
    return r;
}

} // namespace gmf
