#pragma once

#include <array>
#include <complex>
#include <map>
#include <utility>

namespace symtoep {

using Complex = std::complex<double>;

// Symmetric trigonometric polynomial on the torus: the symbol phi written as
// sum alpha_{m,n} z1^m z2^n with alpha_{m,n} = alpha_{n,m}. This is the only
// internal picture; SPPoly inputs are converted on entry.
class FourierSymbol {
public:
    using Key = std::pair<int, int>;  // (m, n)
    using CoeffMap = std::map<Key, Complex>;

    FourierSymbol() = default;  // zero symbol

    // Throws std::invalid_argument on an asymmetric map unless symmetrize is
    // set, in which case alpha <- (alpha_{m,n} + alpha_{n,m>) / 2 is applied.
    static FourierSymbol from_coefficients(CoeffMap coeffs, bool symmetrize = false);

    static FourierSymbol constant(Complex c);
    static FourierSymbol s();  // z1 + z2
    static FourierSymbol p();  // z1 z2

    const CoeffMap& coefficients() const { return coeffs_; }
    Complex at(int m, int n) const;
    int bandwidth() const { return bandwidth_; }  // max of max(|m|,|n|) over support
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const FourierSymbol&, const FourierSymbol&) = default;

    FourierSymbol& operator+=(const FourierSymbol& other);
    FourierSymbol& operator-=(const FourierSymbol& other);
    friend FourierSymbol operator+(FourierSymbol lhs, const FourierSymbol& rhs) {
        return lhs += rhs;
    }
    friend FourierSymbol operator-(FourierSymbol lhs, const FourierSymbol& rhs) {
        return lhs -= rhs;
    }
    friend FourierSymbol operator*(const FourierSymbol& lhs, Complex scale);

private:
    // Zero coefficients are pruned; bandwidth_ tracks the support.
    void insert(int m, int n, Complex value);
    void recompute_bandwidth();

    CoeffMap coeffs_;
    int bandwidth_ = 0;
};

// Fourier convolution; symmetry is preserved, bandwidth <= sum of bandwidths.
FourierSymbol product(const FourierSymbol& f, const FourierSymbol& g);
inline FourierSymbol operator*(const FourierSymbol& f, const FourierSymbol& g) {
    return product(f, g);
}

// alpha'_{m,n} = conj(alpha_{-m,-n}); the symbol of conj(phi) on the torus.
FourierSymbol conjugate(const FourierSymbol& f);

// True iff the support lies in {m >= 0 and n >= 0}.
bool is_analytic(const FourierSymbol& f);

// Max of |phi| over the grid x grid uniform torus grid. Lower bound of the
// true sup-norm; exact location of smooth maxima is grid-limited.
double sup_norm_estimate(const FourierSymbol& f, int grid);

// Polynomial in the intrinsic coordinates: terms c * s^i p^j sbar^k pbar^l.
class SPPoly {
public:
    using Key = std::array<int, 4>;  // exponents (i, j, k, l), all >= 0
    using TermMap = std::map<Key, Complex>;

    SPPoly() = default;

    static SPPoly from_terms(TermMap terms);
    static SPPoly constant(Complex c);
    static SPPoly s();
    static SPPoly p();
    static SPPoly s_bar();
    static SPPoly p_bar();

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_analytic() const;  // no sbar/pbar exponents
    int total_degree() const;  // max of i+j+k+l over support

    SPPoly& operator+=(const SPPoly& other);
    SPPoly& operator-=(const SPPoly& other);
    friend SPPoly operator+(SPPoly lhs, const SPPoly& rhs) { return lhs += rhs; }
    friend SPPoly operator-(SPPoly lhs, const SPPoly& rhs) { return lhs -= rhs; }
    friend SPPoly operator*(const SPPoly& lhs, const SPPoly& rhs);
    friend SPPoly operator*(const SPPoly& lhs, Complex scale);

private:
    void insert(const Key& key, Complex value);

    TermMap terms_;
};

// Substitutes s -> z1+z2, p -> z1 z2, sbar -> 1/z1 + 1/z2, pbar -> 1/(z1 z2)
// (valid on the torus) and expands. The result is symmetric by construction.
FourierSymbol sp_to_fourier(const SPPoly& poly);

}  // namespace symtoep
