#include "gradedmf/ratmatrix.hpp"

#include <stdexcept>

namespace gmf {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch in product");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in sum");
    RatMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in difference");
    RatMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch in apply");
    std::vector<Rational> r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// Row-echelon form of the integer-cleared matrix by one-step fraction-free
// (Bareiss) elimination. Row scaling does not change the kernel or the pivot
// column set. Returns the echelon matrix; pivots[k] is the column of the
// k-th pivot row.
struct Echelon {
    std::vector<std::vector<BigInt>> w;
    std::vector<int> pivots;
};

Echelon bareiss_echelon(const RatMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (int j = 0; j < cols; ++j) l = lcm(l, m.at(i, j).get_den());
        for (int j = 0; j < cols; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            w[i][j] = v.get_num();
        }
    }

    Echelon e;
    BigInt prev_piv = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv_row = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) { piv_row = i; break; }
        if (piv_row < 0) continue;
        std::swap(w[r], w[piv_row]);
        const BigInt piv = w[r][c];
        for (int i = r + 1; i < rows; ++i) {
            if (w[i][c] == 0) {
                // Still rescale so the division-free invariant holds row-wide.
                for (int j = c; j < cols; ++j)
                    w[i][j] = w[i][j] * piv / prev_piv;
                continue;
            }
            const BigInt f = w[i][c];
            for (int j = c; j < cols; ++j)
                w[i][j] = (w[i][j] * piv - f * w[r][j]) / prev_piv;
        }
        prev_piv = piv;
        e.pivots.push_back(c);
        ++r;
    }
    e.w = std::move(w);
    return e;
}

} // namespace

KernelImage rat_kernel_image(const RatMatrix& m) {
    Echelon e = bareiss_echelon(m);
    KernelImage out;
    out.pivot_cols = e.pivots;
    out.rank = static_cast<int>(e.pivots.size());

    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivots) is_pivot[c] = true;

    // Canonical kernel basis: one vector per free column, unit there, zero at
    // every other free column, pivot entries by back substitution.
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int r = out.rank - 1; r >= 0; --r) {
            int pc = e.pivots[r];
            Rational s(0);
            for (int j = pc + 1; j < cols; ++j)
                if (e.w[r][j] != 0 && v[j] != 0) s += Rational(e.w[r][j]) * v[j];
            v[pc] = -s / Rational(e.w[r][pc]);
        }
        out.kernel.push_back(std::move(v));
    }

    for (int c : e.pivots) {
        std::vector<Rational> col(m.rows());
        for (int i = 0; i < m.rows(); ++i) col[i] = m.at(i, c);
        out.image.push_back(std::move(col));
    }
    return out;
}

int rat_rank(const RatMatrix& m) {
    return static_cast<int>(bareiss_echelon(m).pivots.size());
}

std::vector<Rational> rat_solve(const RatMatrix& a, const std::vector<Rational>& b) {
    int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("rat_solve: square system required");
    RatMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    Echelon e = bareiss_echelon(aug);
    if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() == n) {
        // Either a rank-deficient A or an inconsistency pivot in the b column.
        throw std::invalid_argument("rat_solve: singular system");
    }
    std::vector<Rational> x(n, Rational(0));
    for (int r = n - 1; r >= 0; --r) {
        int pc = e.pivots[r];
        Rational s = Rational(e.w[r][n]);
        for (int j = pc + 1; j < n; ++j)
            if (e.w[r][j] != 0) s -= Rational(e.w[r][j]) * x[j];
        x[pc] = s / Rational(e.w[r][pc]);
    }
    return x;
}

RatMatrix rat_inverse(const RatMatrix& a) {
    int n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("rat_inverse: square matrix required");
    RatMatrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        std::vector<Rational> e(n, Rational(0));
        e[c] = 1;
        std::vector<Rational> col = rat_solve(a, e);
        for (int i = 0; i < n; ++i) inv.at(i, c) = col[i];
    }
    return inv;
}

} // namespace gmf
