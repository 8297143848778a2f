#include "symtoep/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace symtoep {

namespace {

void require_in_g(const GammaPoint& pt, const char* what) {
    if (classify_point(pt) != PointClass::in_g)
        throw std::invalid_argument(std::string(what) + ": point not inside G");
}

// Values of the symmetric quotients h_0..h_mmax at (s,p):
// h_m(z1+z2, z1 z2) = (z1^(m+1) - z2^(m+1)) / (z1 - z2).
std::vector<Complex> h_values(Complex s, Complex p, int mmax) {
    std::vector<Complex> h(static_cast<std::size_t>(mmax) + 1);
    h[0] = Complex{1.0, 0.0};
    if (mmax >= 1) h[1] = s;
    for (int m = 2; m <= mmax; ++m)
        h[static_cast<std::size_t>(m)] =
            s * h[static_cast<std::size_t>(m - 1)] - p * h[static_cast<std::size_t>(m - 2)];
    return h;
}

// f_ab(s,p) = p^b h_(a-b-1)(s,p) over hardy_window(D), in window order.
std::vector<Complex> basis_values(const GammaPoint& w, int D) {
    const auto window = enumerate(IndexWindow::hardy(D));
    const auto h = h_values(w.s, w.p, D - 1);
    std::vector<Complex> pb(static_cast<std::size_t>(D));
    pb[0] = Complex{1.0, 0.0};
    for (int b = 1; b < D; ++b) pb[static_cast<std::size_t>(b)] = pb[static_cast<std::size_t>(b - 1)] * w.p;
    std::vector<Complex> out(window.size());
    for (std::size_t i = 0; i < window.size(); ++i)
        out[i] = pb[static_cast<std::size_t>(window[i].b)] *
                 h[static_cast<std::size_t>(window[i].a - window[i].b - 1)];
    return out;
}

}  // namespace

void HardyElement::insert(const AntiIndex& idx, Complex value) {
    auto it = coeffs_.find(idx);
    const Complex sum = (it == coeffs_.end() ? value : it->second + value);
    if (sum == Complex{0.0, 0.0}) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else if (it == coeffs_.end()) {
        coeffs_.emplace(idx, sum);
    } else {
        it->second = sum;
    }
}

HardyElement HardyElement::from_coefficients(CoeffMap coeffs) {
    HardyElement out;
    for (const auto& [idx, value] : coeffs) {
        if (idx.a <= idx.b) throw std::invalid_argument("non-canonical index");
        if (!idx.hardy()) throw std::invalid_argument("co-Hardy index in HardyElement");
        out.insert(idx, value);
    }
    return out;
}

HardyElement HardyElement::basis(const AntiIndex& idx) {
    return from_coefficients({{idx, Complex{1.0, 0.0}}});
}

Complex HardyElement::at(const AntiIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

double HardyElement::norm() const {
    double acc = 0.0;
    for (const auto& [idx, value] : coeffs_) acc += std::norm(value);
    return std::sqrt(acc);
}

HardyElement& HardyElement::operator+=(const HardyElement& other) {
    for (const auto& [idx, value] : other.coeffs_) insert(idx, value);
    return *this;
}

HardyElement& HardyElement::operator-=(const HardyElement& other) {
    for (const auto& [idx, value] : other.coeffs_) insert(idx, -value);
    return *this;
}

HardyElement operator*(const HardyElement& lhs, Complex scale) {
    HardyElement out;
    if (scale == Complex{0.0, 0.0}) return out;
    for (const auto& [idx, value] : lhs.coefficients()) out.insert(idx, value * scale);
    return out;
}

Complex inner_product(const HardyElement& f, const HardyElement& g) {
    Complex acc{0.0, 0.0};
    for (const auto& [idx, value] : f.coefficients()) acc += value * std::conj(g.at(idx));
    return acc;
}

std::string to_string(PointClass cls) {
    switch (cls) {
        case PointClass::in_g: return "IN_G";
        case PointClass::in_gamma_boundaryish: return "IN_GAMMA_BOUNDARYISH";
        case PointClass::in_b_gamma: return "IN_B_GAMMA";
        case PointClass::outside: return "OUTSIDE";
    }
    throw std::logic_error("unreachable");
}

std::pair<Complex, Complex> point_roots(const GammaPoint& pt) {
    const Complex s = pt.s, p = pt.p;
    const Complex d = std::sqrt(s * s - 4.0 * p);
    const Complex u = (std::abs(s + d) >= std::abs(s - d)) ? s + d : s - d;
    if (u == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    const Complex z1 = u / 2.0;
    return {z1, p / z1};
}

PointClass classify_point(const GammaPoint& pt, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const auto [z1, z2] = point_roots(pt);
    const double m1 = std::abs(z1), m2 = std::abs(z2);
    if (m1 < 1.0 - tol && m2 < 1.0 - tol) return PointClass::in_g;
    if (std::abs(m1 - 1.0) <= tol && std::abs(m2 - 1.0) <= tol)
        return PointClass::in_b_gamma;
    if (m1 <= 1.0 + tol && m2 <= 1.0 + tol) return PointClass::in_gamma_boundaryish;
    return PointClass::outside;
}

HardyElement sp_poly_to_hardy(const SPPoly& f) {
    if (!f.is_analytic()) throw std::invalid_argument("not analytic");
    // Monomial coefficients of sqrt(2) U(f) = (z1 - z2) f(z1+z2, z1 z2);
    // the expansion of an analytic SPPoly has no negative exponents.
    const FourierSymbol fz = sp_to_fourier(f);
    std::map<std::pair<int, int>, Complex> g;
    for (const auto& [key, value] : fz.coefficients()) {
        g[{key.first + 1, key.second}] += value;
        g[{key.first, key.second + 1}] -= value;
    }
    // g is exactly anti-symmetric, so <U(f), e_hat(a,b)> = g[(a,b)].
    HardyElement::CoeffMap coeffs;
    for (const auto& [key, value] : g)
        if (key.first > key.second && value != Complex{0.0, 0.0})
            coeffs[AntiIndex{key.first, key.second}] = value;
    return HardyElement::from_coefficients(std::move(coeffs));
}

SPPoly hardy_to_sp_poly(const HardyElement& h) {
    int mmax = 0;
    for (const auto& [idx, value] : h.coefficients())
        mmax = std::max(mmax, idx.a - idx.b - 1);
    // h_m as polynomials, by the recurrence h_m = s h_(m-1) - p h_(m-2).
    std::vector<SPPoly> hm;
    hm.push_back(SPPoly::constant(1.0));
    if (mmax >= 1) hm.push_back(SPPoly::s());
    for (int m = 2; m <= mmax; ++m)
        hm.push_back(SPPoly::s() * hm[static_cast<std::size_t>(m - 1)] -
                     SPPoly::p() * hm[static_cast<std::size_t>(m - 2)]);

    SPPoly out;
    for (const auto& [idx, value] : h.coefficients()) {
        SPPoly term = hm[static_cast<std::size_t>(idx.a - idx.b - 1)] * value;
        SPPoly::TermMap shifted;
        for (const auto& [key, coeff] : term.terms())
            shifted[{key[0], key[1] + idx.b, key[2], key[3]}] = coeff;  // p^b factor
        out += SPPoly::from_terms(std::move(shifted));
    }
    return out;
}

VectorHardyElement to_vector_model(const HardyElement& h) {
    VectorHardyElement out;
    for (const auto& [idx, value] : h.coefficients())
        out.coeffs[{idx.b, idx.a - idx.b}] = value;
    return out;
}

HardyElement from_vector_model(const VectorHardyElement& v) {
    HardyElement::CoeffMap coeffs;
    for (const auto& [key, value] : v.coeffs) {
        if (key.first < 0 || key.second < 1)
            throw std::invalid_argument("invalid vector-model index");
        coeffs[AntiIndex{key.first + key.second, key.first}] = value;
    }
    return HardyElement::from_coefficients(std::move(coeffs));
}

double hardy_norm_quadrature(const SPPoly& f, double r, int grid) {
    if (!f.is_analytic()) throw std::invalid_argument("not analytic");
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r outside (0,1)");
    if (grid < 2 * f.total_degree() + 3)
        throw std::invalid_argument("grid too small for exact quadrature");

    std::vector<Complex> zs(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / grid;
        zs[static_cast<std::size_t>(k)] = r * Complex{std::cos(theta), std::sin(theta)};
    }
    const int deg = f.total_degree();
    double acc = 0.0;
    std::vector<Complex> spow(static_cast<std::size_t>(deg) + 1);
    std::vector<Complex> ppow(static_cast<std::size_t>(deg) + 1);
    for (int j1 = 0; j1 < grid; ++j1) {
        for (int j2 = 0; j2 < grid; ++j2) {
            const Complex z1 = zs[static_cast<std::size_t>(j1)];
            const Complex z2 = zs[static_cast<std::size_t>(j2)];
            const Complex s = z1 + z2, p = z1 * z2;
            spow[0] = ppow[0] = Complex{1.0, 0.0};
            for (int d = 1; d <= deg; ++d) {
                spow[static_cast<std::size_t>(d)] = spow[static_cast<std::size_t>(d - 1)] * s;
                ppow[static_cast<std::size_t>(d)] = ppow[static_cast<std::size_t>(d - 1)] * p;
            }
            Complex value{0.0, 0.0};
            for (const auto& [key, coeff] : f.terms())
                value += coeff * spow[static_cast<std::size_t>(key[0])] *
                         ppow[static_cast<std::size_t>(key[1])];
            acc += std::norm(value * (z1 - z2));
        }
    }
    // mean over the grid, divided by ||J||^2 = 2
    return acc / (static_cast<double>(grid) * grid * 2.0);
}

Complex szego_eval(const GammaPoint& w1, const GammaPoint& w2) {
    require_in_g(w1, "szego_eval");
    require_in_g(w2, "szego_eval");
    const Complex s1 = w1.s, p1 = w1.p;
    const Complex s2c = std::conj(w2.s), p2c = std::conj(w2.p);
    const Complex den =
        (1.0 - p1 * p2c) * (1.0 - p1 * p2c) - (s1 - s2c * p1) * (s2c - s1 * p2c);
    if (std::abs(den) < 1e-14) throw std::runtime_error("kernel singularity");
    return 1.0 / den;
}

Complex szego_partial_sum(const GammaPoint& w1, const GammaPoint& w2, int D) {
    require_in_g(w1, "szego_partial_sum");
    require_in_g(w2, "szego_partial_sum");
    if (D < 1) throw std::invalid_argument("D must be positive");
    const auto f1 = basis_values(w1, D);
    const auto f2 = basis_values(w2, D);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < f1.size(); ++i) acc += f1[i] * std::conj(f2[i]);
    return acc;
}

std::pair<double, double> joint_eigen_residual(const GammaPoint& w, int D) {
    require_in_g(w, "joint_eigen_residual");
    if (D < 1) throw std::invalid_argument("D must be positive");
    const IndexWindow window = IndexWindow::hardy(D);
    const auto indices = enumerate(window);
    const auto values = basis_values(w, D);
    // kernel coefficient vector: k[(a,b)] = conj(f_ab(w))
    const auto k_at = [&](const AntiIndex& idx) {
        return window.contains(idx) ? std::conj(values[window.position(idx)])
                                    : Complex{0.0, 0.0};
    };
    double norm2 = 0.0, rs = 0.0, rp = 0.0;
    const Complex sc = std::conj(w.s), pc = std::conj(w.p);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto& [a, b] = indices[i];
        const Complex k = std::conj(values[i]);
        norm2 += std::norm(k);
        // adjoint actions in coordinates: (T_s* k)(a,b) = k(a+1,b) + k(a,b+1),
        // (T_p* k)(a,b) = k(a+1,b+1); reads outside the window are zero.
        Complex ts = k_at(AntiIndex{a + 1, b});
        if (a > b + 1) ts += k_at(AntiIndex{a, b + 1});
        const Complex tp = k_at(AntiIndex{a + 1, b + 1});
        rs += std::norm(ts - sc * k);
        rp += std::norm(tp - pc * k);
    }
    const double kn = std::sqrt(norm2);
    return {std::sqrt(rs) / kn, std::sqrt(rp) / kn};
}

}  // namespace symtoep
