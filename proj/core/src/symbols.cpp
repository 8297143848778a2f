#include "symtoep/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace symtoep {

namespace {

// Binomial coefficients stay exactly representable for the degrees used here.
double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

// Rebuilds a symmetric symbol from an accumulator whose mirror entries may
// disagree by rounding (summation order); the m >= n half is authoritative.
FourierSymbol mirror_canonical_half(std::map<FourierSymbol::Key, Complex>&& acc) {
    FourierSymbol::CoeffMap out;
    for (const auto& [key, value] : acc) {
        if (key.first < key.second || value == Complex{0.0, 0.0}) continue;
        out[key] = value;
        out[{key.second, key.first}] = value;
    }
    return FourierSymbol::from_coefficients(std::move(out));
}

}  // namespace

void FourierSymbol::insert(int m, int n, Complex value) {
    const Key key{m, n};
    auto it = coeffs_.find(key);
    const Complex sum = (it == coeffs_.end() ? value : it->second + value);
    if (sum == Complex{0.0, 0.0}) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else if (it == coeffs_.end()) {
        coeffs_.emplace(key, sum);
    } else {
        it->second = sum;
    }
}

void FourierSymbol::recompute_bandwidth() {
    bandwidth_ = 0;
    for (const auto& [key, value] : coeffs_)
        bandwidth_ = std::max(bandwidth_,
                              std::max(std::abs(key.first), std::abs(key.second)));
}

FourierSymbol FourierSymbol::from_coefficients(CoeffMap coeffs, bool symmetrize) {
    FourierSymbol out;
    if (symmetrize) {
        for (const auto& [key, value] : coeffs) {
            out.insert(key.first, key.second, value / 2.0);
            out.insert(key.second, key.first, value / 2.0);
        }
    } else {
        for (const auto& [key, value] : coeffs) {
            auto mirror = coeffs.find({key.second, key.first});
            if (mirror == coeffs.end() || mirror->second != value)
                throw std::invalid_argument(
                    "asymmetric coefficient map; pass symmetrize to mirror");
        }
        for (const auto& [key, value] : coeffs) out.insert(key.first, key.second, value);
    }
    out.recompute_bandwidth();
    return out;
}

FourierSymbol FourierSymbol::constant(Complex c) {
    FourierSymbol out;
    out.insert(0, 0, c);
    out.recompute_bandwidth();
    return out;
}

FourierSymbol FourierSymbol::s() {
    return from_coefficients({{{1, 0}, 1.0}, {{0, 1}, 1.0}});
}

FourierSymbol FourierSymbol::p() { return from_coefficients({{{1, 1}, 1.0}}); }

Complex FourierSymbol::at(int m, int n) const {
    auto it = coeffs_.find({m, n});
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

FourierSymbol& FourierSymbol::operator+=(const FourierSymbol& other) {
    for (const auto& [key, value] : other.coeffs_) insert(key.first, key.second, value);
    recompute_bandwidth();
    return *this;
}

FourierSymbol& FourierSymbol::operator-=(const FourierSymbol& other) {
    for (const auto& [key, value] : other.coeffs_) insert(key.first, key.second, -value);
    recompute_bandwidth();
    return *this;
}

FourierSymbol operator*(const FourierSymbol& lhs, Complex scale) {
    FourierSymbol out;
    if (scale == Complex{0.0, 0.0}) return out;
    for (const auto& [key, value] : lhs.coeffs_)
        out.insert(key.first, key.second, value * scale);
    out.recompute_bandwidth();
    return out;
}

FourierSymbol product(const FourierSymbol& f, const FourierSymbol& g) {
    std::map<FourierSymbol::Key, Complex> acc;
    for (const auto& [kf, vf] : f.coefficients())
        for (const auto& [kg, vg] : g.coefficients())
            acc[{kf.first + kg.first, kf.second + kg.second}] += vf * vg;
    return mirror_canonical_half(std::move(acc));
}

FourierSymbol conjugate(const FourierSymbol& f) {
    FourierSymbol::CoeffMap acc;
    for (const auto& [key, value] : f.coefficients())
        acc[{-key.first, -key.second}] = std::conj(value);
    return FourierSymbol::from_coefficients(std::move(acc));
}

bool is_analytic(const FourierSymbol& f) {
    for (const auto& [key, value] : f.coefficients())
        if (key.first < 0 || key.second < 0) return false;
    return true;
}

double sup_norm_estimate(const FourierSymbol& f, int grid) {
    if (grid < 2 * f.bandwidth() + 1)
        throw std::invalid_argument("aliasing risk: grid smaller than 2*bandwidth+1");
    if (f.is_zero()) return 0.0;

    std::vector<Complex> roots(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / grid;
        roots[static_cast<std::size_t>(k)] = Complex{std::cos(theta), std::sin(theta)};
    }
    const auto root_pow = [&](int e, int j) {
        const int idx = ((e * j) % grid + grid) % grid;
        return roots[static_cast<std::size_t>(idx)];
    };

    double best = 0.0;
    for (int j1 = 0; j1 < grid; ++j1) {
        for (int j2 = 0; j2 < grid; ++j2) {
            Complex value{0.0, 0.0};
            for (const auto& [key, coeff] : f.coefficients())
                value += coeff * root_pow(key.first, j1) * root_pow(key.second, j2);
            best = std::max(best, std::abs(value));
        }
    }
    return best;
}

void SPPoly::insert(const Key& key, Complex value) {
    auto it = terms_.find(key);
    const Complex sum = (it == terms_.end() ? value : it->second + value);
    if (sum == Complex{0.0, 0.0}) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(key, sum);
    } else {
        it->second = sum;
    }
}

SPPoly SPPoly::from_terms(TermMap terms) {
    SPPoly out;
    for (const auto& [key, value] : terms) {
        if (key[0] < 0 || key[1] < 0 || key[2] < 0 || key[3] < 0)
            throw std::invalid_argument("negative exponent in SPPoly term");
        out.insert(key, value);
    }
    return out;
}

SPPoly SPPoly::constant(Complex c) {
    SPPoly out;
    out.insert({0, 0, 0, 0}, c);
    return out;
}

SPPoly SPPoly::s() { return from_terms({{{1, 0, 0, 0}, 1.0}}); }
SPPoly SPPoly::p() { return from_terms({{{0, 1, 0, 0}, 1.0}}); }
SPPoly SPPoly::s_bar() { return from_terms({{{0, 0, 1, 0}, 1.0}}); }
SPPoly SPPoly::p_bar() { return from_terms({{{0, 0, 0, 1}, 1.0}}); }

bool SPPoly::is_analytic() const {
    for (const auto& [key, value] : terms_)
        if (key[2] != 0 || key[3] != 0) return false;
    return true;
}

int SPPoly::total_degree() const {
    int deg = 0;
    for (const auto& [key, value] : terms_)
        deg = std::max(deg, key[0] + key[1] + key[2] + key[3]);
    return deg;
}

SPPoly& SPPoly::operator+=(const SPPoly& other) {
    for (const auto& [key, value] : other.terms_) insert(key, value);
    return *this;
}

SPPoly& SPPoly::operator-=(const SPPoly& other) {
    for (const auto& [key, value] : other.terms_) insert(key, -value);
    return *this;
}

SPPoly operator*(const SPPoly& lhs, const SPPoly& rhs) {
    SPPoly out;
    for (const auto& [ka, va] : lhs.terms_)
        for (const auto& [kb, vb] : rhs.terms_)
            out.insert({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]},
                       va * vb);
    return out;
}

SPPoly operator*(const SPPoly& lhs, Complex scale) {
    SPPoly out;
    if (scale == Complex{0.0, 0.0}) return out;
    for (const auto& [key, value] : lhs.terms_) out.insert(key, value * scale);
    return out;
}

FourierSymbol sp_to_fourier(const SPPoly& poly) {
    // Expand each term into z1^m z2^n monomials:
    //   s^i    = sum_t C(i,t) z1^t z2^(i-t)
    //   sbar^k = sum_u C(k,u) z1^(-u) z2^(-(k-u))
    //   p^j pbar^l = z1^(j-l) z2^(j-l)
    std::map<std::pair<int, int>, Complex> acc;
    for (const auto& [key, coeff] : poly.terms()) {
        const int i = key[0], j = key[1], k = key[2], l = key[3];
        for (int t = 0; t <= i; ++t) {
            const double ci = binomial(i, t);
            for (int u = 0; u <= k; ++u) {
                const double ck = binomial(k, u);
                const int m = t - u + j - l;
                const int n = (i - t) - (k - u) + j - l;
                acc[{m, n}] += coeff * ci * ck;
            }
        }
    }
    return mirror_canonical_half(std::move(acc));
}

}  // namespace symtoep
