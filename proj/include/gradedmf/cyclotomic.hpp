#pragma once

#include <complex>
#include <vector>

#include "gradedmf/rational.hpp"

namespace gmf {

// Element of the group ring Z[t]/(t^h - 1): sum c_m w^m with w a primitive
// h-th root of unity. Group-ring equality (coefficient vectors) is all the
// additive bookkeeping needs; float rendering handles mass and phase.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int h) : coeffs_(h, BigInt(0)) {
        if (h <= 0) throw std::invalid_argument("CyclotomicInt: h must be positive");
    }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    static CyclotomicInt root_power(int h, long k) {
        CyclotomicInt z(h);
        z.add_root_power(k, 1);
        return z;
    }

    // c * w^k, exponent wrapped mod h.
    void add_root_power(long k, const BigInt& c) {
        long h = order();
        long m = ((k % h) + h) % h;
        coeffs_[static_cast<size_t>(m)] += c;
    }

    CyclotomicInt operator+(const CyclotomicInt& o) const {
        check(o);
        CyclotomicInt r(order());
        for (int m = 0; m < order(); ++m) r.coeffs_[m] = coeffs_[m] + o.coeffs_[m];
        return r;
    }

    CyclotomicInt operator-(const CyclotomicInt& o) const {
        check(o);
        CyclotomicInt r(order());
        for (int m = 0; m < order(); ++m) r.coeffs_[m] = coeffs_[m] - o.coeffs_[m];
        return r;
    }

    CyclotomicInt operator-() const {
        CyclotomicInt r(order());
        for (int m = 0; m < order(); ++m) r.coeffs_[m] = -coeffs_[m];
        return r;
    }

    // Multiplication by w^k is a cyclic shift.
    CyclotomicInt shifted(long k) const {
        CyclotomicInt r(order());
        for (int m = 0; m < order(); ++m) r.add_root_power(m + k, coeffs_[m]);
        return r;
    }

    CyclotomicInt scaled(const BigInt& c) const {
        CyclotomicInt r(order());
        for (int m = 0; m < order(); ++m) r.coeffs_[m] = coeffs_[m] * c;
        return r;
    }

    bool operator==(const CyclotomicInt& o) const {
        return coeffs_ == o.coeffs_;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    // Evaluate at w = exp(2 pi i / h).
    std::complex<double> to_complex() const;

private:
    void check(const CyclotomicInt& o) const {
        if (order() != o.order())
            throw std::invalid_argument("CyclotomicInt: mixed root orders");
    }

    std::vector<BigInt> coeffs_;
};

} // namespace gmf
