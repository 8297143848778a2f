#pragma once

#include <map>
#include <string>
#include <utility>

#include "symtoep/lattice.hpp"
#include "symtoep/symbols.hpp"

namespace symtoep {

// Element of the anti-symmetric Hardy space in e_hat coordinates (b >= 0).
// This model is the computational home; the intrinsic-coordinate space and
// the vector-valued Hardy space are views of it.
class HardyElement {
public:
    struct LexOrder {
        bool operator()(const AntiIndex& x, const AntiIndex& y) const {
            return lex_less(x, y);
        }
    };
    using CoeffMap = std::map<AntiIndex, Complex, LexOrder>;

    HardyElement() = default;
    static HardyElement from_coefficients(CoeffMap coeffs);  // rejects b < 0
    static HardyElement basis(const AntiIndex& idx);

    const CoeffMap& coefficients() const { return coeffs_; }
    Complex at(const AntiIndex& idx) const;
    double norm() const;

    HardyElement& operator+=(const HardyElement& other);
    HardyElement& operator-=(const HardyElement& other);
    friend HardyElement operator+(HardyElement lhs, const HardyElement& rhs) {
        return lhs += rhs;
    }
    friend HardyElement operator-(HardyElement lhs, const HardyElement& rhs) {
        return lhs -= rhs;
    }
    friend HardyElement operator*(const HardyElement& lhs, Complex scale);

private:
    void insert(const AntiIndex& idx, Complex value);

    CoeffMap coeffs_;
};

Complex inner_product(const HardyElement& f, const HardyElement& g);

// Element of the vector-valued Hardy space: coefficient at z^i e_j with
// z-degree i >= 0 and coefficient-space index j >= 1; ||e_j|| = 1 so the
// relabeling from e_hat coordinates is exactly unitary.
struct VectorHardyElement {
    std::map<std::pair<int, int>, Complex> coeffs;  // (i, j) -> coefficient

    friend bool operator==(const VectorHardyElement&, const VectorHardyElement&) =
        default;
};

struct GammaPoint {
    Complex s{0.0, 0.0};
    Complex p{0.0, 0.0};
};

enum class PointClass { in_g, in_gamma_boundaryish, in_b_gamma, outside };
std::string to_string(PointClass cls);

// Roots of z^2 - s z + p, larger modulus first (stable split: the smaller
// root comes from the product, not from cancellation).
std::pair<Complex, Complex> point_roots(const GammaPoint& pt);

// Classifies by the moduli of the roots of z^2 - s z + p.
PointClass classify_point(const GammaPoint& pt, double tol = 1e-9);

// U(f) = J (f after symmetrization) / ||J||, J = z1 - z2, ||J||^2 = 2.
// Linear isometry from the intrinsic polynomial picture onto its image.
// Throws "not analytic" when f carries sbar or pbar exponents.
HardyElement sp_poly_to_hardy(const SPPoly& f);

// Exact inverse on the image: e_hat(a,b) -> p^b h_(a-b-1) with the symmetric
// quotients h_0 = 1, h_1 = s, h_m = s h_(m-1) - p h_(m-2).
SPPoly hardy_to_sp_poly(const HardyElement& h);

// Relabeling e_hat(a,b) -> coefficient at (i=b, j=a-b); exactly unitary.
VectorHardyElement to_vector_model(const HardyElement& h);
HardyElement from_vector_model(const VectorHardyElement& v);

// Normalized quadrature of |f across pi|^2 |J|^2 / ||J||^2 over the radius-r
// torus. Exact for grid > 2 * (z-degree of J * f): nondecreasing in r and
// converging to the squared coefficient norm as r -> 1.
double hardy_norm_quadrature(const SPPoly& f, double r, int grid);

// Szego kernel of the symmetrized bidisc, closed form; both points in G.
Complex szego_eval(const GammaPoint& w1, const GammaPoint& w2);

// Sum over hardy_window(D) of f_ab(w1) conj(f_ab(w2)) with
// f_ab(s,p) = p^b h_(a-b-1)(s,p); converges to szego_eval as D grows.
Complex szego_partial_sum(const GammaPoint& w1, const GammaPoint& w2, int D);

// Residuals (||T_s* k - conj(s) k||, ||T_p* k - conj(p) k||) / ||k|| for the
// truncated kernel coefficient vector k at w; both vanish as D grows.
std::pair<double, double> joint_eigen_residual(const GammaPoint& w, int D);

}  // namespace symtoep
