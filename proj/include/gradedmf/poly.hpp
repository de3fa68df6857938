#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradedmf/rational.hpp"

namespace gmf {

// Exponent vector, one entry per variable. Objects here are tiny (at most a
// handful of variables), so dense vectors beat any sparse scheme.
using Exp = std::vector<int>;

struct DescLex {
    bool operator()(const Exp& a, const Exp& b) const { return a > b; }
};

struct WeightSystem {
    std::vector<int> weights; // a_1..a_n, all positive
    int index = 0;            // h; variable x_i carries degree 2*a_i/h

    int nvars() const { return static_cast<int>(weights.size()); }
    bool operator==(const WeightSystem& o) const = default;
};

// gcd(a_1,...,a_n,h) must be 1 and everything positive.
void validate_weight_system(const WeightSystem& ws);

// Multivariate polynomial over Q. Terms are kept in descending lexicographic
// order on exponents with no zero coefficients stored, so the internal map is
// already the canonical serialized form.
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(const Rational& c, int nvars);
    static Poly monomial(const Rational& c, const Exp& e);
    static Poly variable(int index, int nvars);
    // c * x^m in one variable.
    static Poly x_power(const Rational& c, int m);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Exp, Rational, DescLex>& terms() const { return terms_; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Rational& c) const;

    // Coefficient of the given exponent vector (zero if absent).
    Rational coeff(const Exp& e) const;
    // Univariate coefficient of x^m.
    Rational coeff1(int m) const;
    // A monomial c*x^m or zero? Used heavily by the graded elimination,
    // where homogeneity forces every entry into this shape.
    bool is_monomial() const { return terms_.size() <= 1; }
    // Degree of a univariate monomial; throws on zero or multi-term input.
    int monomial_degree() const;
    Rational monomial_coeff() const;

    // Reinterpret over a larger variable set, original variables first.
    Poly extended(int new_nvars) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void add_term(const Exp& e, const Rational& c);

    int nvars_;
    std::map<Exp, Rational, DescLex> terms_;

    friend Poly poly_sum(const Poly& p, const Poly& q, int sign);
};

// Weighted degree sum(e_i * 2 a_i / h) if every term agrees, nullopt if the
// polynomial is inhomogeneous. Throws on the zero polynomial.
std::optional<Rational> weighted_degree(const Poly& p, const WeightSystem& ws);

// Euler identity sum (2 a_i / h) x_i df/dx_i = 2 f, i.e. weighted degree 2.
bool check_quasi_homogeneous(const Poly& f, const WeightSystem& ws);

Poly partial_derivative(const Poly& p, int var_index);

// Res[g(x)dx / (h x^(h-1))] = coefficient of x^(h-2) in g, divided by h.
Rational residue_div(const Poly& g, int h);

} // namespace gmf
