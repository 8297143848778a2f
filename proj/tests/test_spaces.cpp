#include <doctest.h>

#include <complex>
#include <random>
#include <stdexcept>

#include "symtoep/spaces.hpp"

using namespace symtoep;

namespace {

SPPoly random_analytic(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    SPPoly::TermMap terms;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j)
            terms[{i, j, 0, 0}] = Complex{static_cast<double>(coeff(rng)),
                                          static_cast<double>(coeff(rng))};
    return SPPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("hardy elements are canonical-coefficient maps") {
    const HardyElement e = HardyElement::basis({2, 1});
    CHECK(e.at({2, 1}) == Complex{1.0});
    CHECK(e.at({1, 0}) == Complex{0.0});
    CHECK(e.norm() == doctest::Approx(1.0));

    HardyElement::CoeffMap bad;
    bad[{1, 1}] = 1.0;
    CHECK_THROWS_AS(HardyElement::from_coefficients(bad), std::invalid_argument);

    HardyElement::CoeffMap co;
    co[{1, -1}] = 1.0;
    CHECK_THROWS_AS(HardyElement::from_coefficients(co), std::invalid_argument);
}

TEST_CASE("inner product is linear in the first slot and conjugate-symmetric") {
    const HardyElement e10 = HardyElement::basis({1, 0});
    const HardyElement e21 = HardyElement::basis({2, 1});
    CHECK(inner_product(e10, e10) == Complex{1.0});
    CHECK(inner_product(e10, e21) == Complex{0.0});

    const HardyElement f = e10 * Complex{0.0, 1.0} + e21;
    CHECK(inner_product(f, e10) == Complex{0.0, 1.0});
    CHECK(inner_product(e10, f) == Complex{0.0, -1.0});
    CHECK(inner_product(f, f).real() == doctest::Approx(2.0));
}

TEST_CASE("the model map sends 1, s, p to single basis vectors") {
    const HardyElement one = sp_poly_to_hardy(SPPoly::constant(1.0));
    CHECK(one.at({1, 0}) == Complex{1.0});
    CHECK(one.coefficients().size() == 1);

    const HardyElement hs = sp_poly_to_hardy(SPPoly::s());
    CHECK(hs.at({2, 0}) == Complex{1.0});
    CHECK(hs.coefficients().size() == 1);

    const HardyElement hp = sp_poly_to_hardy(SPPoly::p());
    CHECK(hp.at({2, 1}) == Complex{1.0});
    CHECK(hp.coefficients().size() == 1);

    CHECK_THROWS_AS(sp_poly_to_hardy(SPPoly::s_bar()), std::invalid_argument);
}

TEST_CASE("model map round-trips through the intrinsic coordinates") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 8; ++trial) {
        const SPPoly f = random_analytic(rng, 4);
        const SPPoly back = hardy_to_sp_poly(sp_poly_to_hardy(f));
        CHECK((back - f).is_zero());
    }
}

TEST_CASE("vector model is a unitary relabeling") {
    std::mt19937 rng(2718);
    const SPPoly f = random_analytic(rng, 5);
    const HardyElement h = sp_poly_to_hardy(f);

    const VectorHardyElement v = to_vector_model(h);
    double vnorm2 = 0.0;
    for (const auto& [key, value] : v.coeffs) {
        CHECK(key.first >= 0);
        CHECK(key.second >= 1);
        vnorm2 += std::norm(value);
    }
    CHECK(std::sqrt(vnorm2) == doctest::Approx(h.norm()).epsilon(1e-12));

    const HardyElement back = from_vector_model(v);
    CHECK((back - h).norm() == doctest::Approx(0.0));

    VectorHardyElement badv;
    badv.coeffs[{0, 0}] = 1.0;
    CHECK_THROWS_AS(from_vector_model(badv), std::invalid_argument);
}

TEST_CASE("quadrature norm matches the coefficient norm profile") {
    // ||J||^2/2 at radius r is r^2 for the constant 1
    CHECK(hardy_norm_quadrature(SPPoly::constant(1.0), 0.99, 16) ==
          doctest::Approx(0.9801).epsilon(1e-12));
    // s maps to e_hat(2,0): weight r^(2(a+b)) = r^4
    CHECK(hardy_norm_quadrature(SPPoly::s(), 0.5, 16) ==
          doctest::Approx(0.0625).epsilon(1e-12));

    CHECK_THROWS_AS(hardy_norm_quadrature(SPPoly::s_bar(), 0.5, 16),
                    std::invalid_argument);
    CHECK_THROWS_AS(hardy_norm_quadrature(SPPoly::constant(1.0), 1.0, 16),
                    std::invalid_argument);
    std::mt19937 rng(5);
    CHECK_THROWS_AS(hardy_norm_quadrature(random_analytic(rng, 6), 0.5, 8),
                    std::invalid_argument);  // grid below the exactness bound
}

TEST_CASE("point classification on representative points") {
    CHECK(classify_point({Complex{0.0}, Complex{0.0}}) == PointClass::in_g);
    CHECK(classify_point({Complex{0.8}, Complex{0.1}}) == PointClass::in_g);
    CHECK(classify_point({Complex{2.0}, Complex{1.0}}) == PointClass::in_b_gamma);
    CHECK(classify_point({Complex{1.5}, Complex{0.5}}) ==
          PointClass::in_gamma_boundaryish);
    CHECK(classify_point({Complex{3.0}, Complex{1.0}}) == PointClass::outside);
    CHECK(to_string(PointClass::in_b_gamma) == "IN_B_GAMMA");
    CHECK_THROWS_AS(classify_point({Complex{0.0}, Complex{0.0}}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("point roots factor the characteristic quadratic") {
    const GammaPoint pt{Complex{0.7, 0.2}, Complex{0.1, -0.05}};
    const auto [z1, z2] = point_roots(pt);
    CHECK(std::abs(z1 + z2 - pt.s) < 1e-12);
    CHECK(std::abs(z1 * z2 - pt.p) < 1e-12);
    CHECK(std::abs(z1) >= std::abs(z2));

    const auto [u1, u2] = point_roots({Complex{2.0}, Complex{1.0}});
    CHECK(std::abs(u1 - 1.0) < 1e-12);
    CHECK(std::abs(u2 - 1.0) < 1e-12);
}

TEST_CASE("szego kernel closed form and partial sums") {
    const GammaPoint origin{Complex{0.0}, Complex{0.0}};
    CHECK(szego_eval(origin, origin) == Complex{1.0});

    const GammaPoint w1{Complex{0.5}, Complex{0.2}};
    const GammaPoint w2{Complex{0.3, 0.1}, Complex{0.1, -0.2}};
    // Hermitian symmetry
    CHECK(std::abs(szego_eval(w1, w2) - std::conj(szego_eval(w2, w1))) < 1e-14);

    // partial sums of the diagonal increase monotonically to the closed form
    double prev = 0.0;
    for (const int D : {5, 10, 20, 40}) {
        const double value = szego_partial_sum(w1, w1, D).real();
        CHECK(value >= prev - 1e-15);
        prev = value;
    }
    CHECK(prev == doctest::Approx(szego_eval(w1, w1).real()).epsilon(1e-10));

    // approaching the boundary diagonal underflows the denominator
    const double r = 0.9999;  // z1 = z2 = r gives denominator (1-r^2)^4
    const GammaPoint near_edge{Complex{2.0 * r}, Complex{r * r}};
    CHECK_THROWS_AS(szego_eval(near_edge, near_edge), std::runtime_error);
    // points on or past the boundary are rejected outright
    CHECK_THROWS_AS(szego_eval({Complex{2.0}, Complex{1.0}},
                               {Complex{2.0}, Complex{1.0}}),
                    std::invalid_argument);
}

TEST_CASE("kernel sections are approximate joint eigenvectors") {
    const GammaPoint w{Complex{0.4}, Complex{0.1}};
    const auto [rs10, rp10] = joint_eigen_residual(w, 10);
    const auto [rs30, rp30] = joint_eigen_residual(w, 30);
    CHECK(rs30 < rs10);
    CHECK(rp30 <= rp10 + 1e-15);
    CHECK(rs30 < 1e-6);
    CHECK(rp30 < 1e-6);
}
