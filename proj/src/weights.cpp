#include "gradedmf/weights.hpp"

#include <mutex>
#include <stdexcept>

namespace gmf {

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

ZPoly zpoly_div(const ZPoly& a, const ZPoly& b) {
    if (b.empty() || b.back() == 0) throw std::invalid_argument("zpoly_div: zero divisor");
    ZPoly rem = a;
    if (rem.size() < b.size()) throw std::invalid_argument("zpoly_div: not divisible");
    ZPoly q(rem.size() - b.size() + 1, BigInt(0));
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        BigInt c = rem[i + b.size() - 1];
        if (c == 0) continue;
        if (c % b.back() != 0) throw std::invalid_argument("zpoly_div: not divisible");
        q[i] = c / b.back();
        for (size_t j = 0; j < b.size(); ++j)
            rem[i + j] -= q[i] * b[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::invalid_argument("zpoly_div: nonzero remainder");
    return q;
}

BigInt zpoly_eval(const ZPoly& p, const BigInt& t) {
    BigInt r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

namespace {

ZPoly t_power_minus_one(int m) {
    ZPoly p(m + 1, BigInt(0));
    p[0] = -1;
    p[m] = 1;
    return p;
}

std::map<int, ZPoly> g_cyclo_cache;
std::mutex g_cyclo_mu;

// Node references in the map stay valid across later insertions, so handing
// them out after unlocking is safe; entries are never mutated once stored.
const ZPoly& cyclo_unlocked(int d) {
    auto it = g_cyclo_cache.find(d);
    if (it != g_cyclo_cache.end()) return it->second;
    ZPoly p = t_power_minus_one(d);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = zpoly_div(p, cyclo_unlocked(e));
    return g_cyclo_cache.emplace(d, std::move(p)).first->second;
}

} // namespace

const ZPoly& cyclotomic_polynomial(int d) {
    if (d <= 0) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mu);
    return cyclo_unlocked(d);
}

RegularityResult is_regular_weight_system(int a, int b, int c, int h) {
    if (a <= 0 || b <= 0 || c <= 0 || h <= 0)
        throw std::invalid_argument("is_regular_weight_system: positive integers required");

    const int num[3] = {h - a, h - b, h - c};
    const int den[3] = {a, b, c};
    RegularityResult res;
    for (int m : num)
        if (m <= 0) {
            // T^0 - 1 vanishes identically; chi degenerates unless the same
            // factor cancels, which a zero exponent never does.
            res.regular = false;
            res.offending_root_order = 1;
            return res;
        }

    std::map<int, int> mult; // Phi_d multiplicity, numerator minus denominator
    for (int m : num)
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) mult[d] += 1;
    for (int m : den)
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) mult[d] -= 1;

    for (const auto& [d, k] : mult) {
        if (k < 0) {
            res.regular = false;
            res.offending_root_order = d;
            return res;
        }
    }

    ZPoly chi{BigInt(1)};
    for (const auto& [d, k] : mult)
        for (int i = 0; i < k; ++i) chi = zpoly_mul(chi, cyclotomic_polynomial(d));
    res.regular = true;
    res.chi = std::move(chi);
    return res;
}

Rational milnor_number(int a, int b, int c, int h) {
    RegularityResult r = is_regular_weight_system(a, b, c, h);
    if (!r.regular)
        throw std::invalid_argument("milnor_number: not a regular weight system");
    return ratio(BigInt(h - a) * (h - b) * (h - c), BigInt(a) * b * c);
}

} // namespace gmf
