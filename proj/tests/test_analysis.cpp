#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "symtoep/analysis.hpp"

using namespace symtoep;

namespace {

FourierSymbol random_symmetric(std::mt19937& rng, int beta) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    FourierSymbol::CoeffMap coeffs;
    for (int m = -beta; m <= beta; ++m)
        for (int n = -beta; n <= m; ++n) {
            const Complex value{static_cast<double>(coeff(rng)),
                                static_cast<double>(coeff(rng))};
            coeffs[{m, n}] = value;
            coeffs[{n, m}] = value;
        }
    return FourierSymbol::from_coefficients(std::move(coeffs));
}

double detail(const CheckReport& rep, const std::string& name) {
    for (const auto& d : rep.details)
        if (d.name == name) return d.residual;
    throw std::runtime_error("missing sub-check: " + name);
}

// commuting pair of diagonal unitaries -> (R, U) = (U1 + U2, U1 U2)
FinitePair diagonal_gamma_unitary() {
    Eigen::MatrixXcd u1 = Eigen::MatrixXcd::Zero(3, 3);
    Eigen::MatrixXcd u2 = Eigen::MatrixXcd::Zero(3, 3);
    const double thetas[3] = {0.3, 1.1, 2.5};
    const double phis[3] = {0.7, 2.2, 4.4};
    for (int k = 0; k < 3; ++k) {
        u1(k, k) = std::polar(1.0, thetas[k]);
        u2(k, k) = std::polar(1.0, phis[k]);
    }
    return {u1 + u2, u1 * u2};
}

}  // namespace

TEST_CASE("brown-halmos residuals vanish for toeplitz sections") {
    const FourierSymbol re_s = FourierSymbol::s() + conjugate(FourierSymbol::s());
    const CheckReport rep = check_brown_halmos(build_toeplitz(re_s, 12), 2);
    CHECK(rep.passed);
    CHECK(rep.residual == 0.0);
    CHECK(rep.name == "brown_halmos");
    REQUIRE(rep.window_used.has_value());
    CHECK(*rep.window_used == safe_subwindow(IndexWindow::hardy(12), 2));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const FourierSymbol f = random_symmetric(rng, 2);
        const CheckReport r = check_brown_halmos(build_toeplitz(f, 16), 3);
        CHECK(r.passed);
        CHECK(r.residual <= 1e-12);
    }
}

TEST_CASE("brown-halmos flags the degree-raising shift") {
    const CheckReport rep = check_brown_halmos(build_X(12), 2);
    CHECK_FALSE(rep.passed);
    CHECK(detail(rep, "second_relation") <= 1e-12);
    CHECK(std::abs(detail(rep, "first_relation") - 1.0) <= 1e-9);
}

TEST_CASE("recover_symbol reads the coefficients back exactly") {
    std::mt19937 rng(23);
    for (const int beta : {0, 1, 2}) {
        const FourierSymbol f = random_symmetric(rng, beta);
        const int D = 4 * beta + 8;
        const FourierSymbol got = recover_symbol(build_toeplitz(f, D), beta);
        CHECK(got == f);
    }
    CHECK_THROWS_AS(recover_symbol(build_toeplitz(FourierSymbol::s(), 8), -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(recover_symbol(build_toeplitz(FourierSymbol::s(), 4), 1),
                    std::invalid_argument);  // window below 4 beta + 2
}

TEST_CASE("gamma unitary certifier accepts the commuting construction") {
    const CheckReport rep = certify_gamma_unitary(diagonal_gamma_unitary());
    CHECK(rep.passed);
    CHECK(rep.residual <= 1e-8);
    CHECK(detail(rep, "joint_spectrum_boundary") <= 1e-8);
}

TEST_CASE("gamma unitary certifier flags radius and commutation failures") {
    FinitePair shifted = diagonal_gamma_unitary();
    shifted.T += 1.5 * Eigen::MatrixXcd::Identity(3, 3);
    const CheckReport rep = certify_gamma_unitary(shifted);
    CHECK_FALSE(rep.passed);
    CHECK(detail(rep, "spectral_radius_excess") > 0.1);

    FinitePair bad = diagonal_gamma_unitary();
    bad.V(0, 1) = 0.4;  // no longer unitary
    CHECK_FALSE(certify_gamma_unitary(bad).passed);

    FinitePair mismatched = diagonal_gamma_unitary();
    mismatched.V = Eigen::MatrixXcd::Identity(2, 2);
    CHECK_THROWS_AS(certify_gamma_unitary(mismatched), std::invalid_argument);
}

TEST_CASE("scalar boundary pair (2,1) is a gamma unitary") {
    FinitePair pair{Eigen::MatrixXcd::Constant(1, 1, 2.0),
                    Eigen::MatrixXcd::Constant(1, 1, 1.0)};
    const CheckReport rep = certify_gamma_unitary(pair);
    CHECK(rep.passed);
    CHECK(rep.residual <= 1e-12);
}

TEST_CASE("gamma isometry certifier and its windowed variant") {
    const FinitePair unitary_pair = diagonal_gamma_unitary();
    CHECK(certify_gamma_isometry(unitary_pair).passed);

    const OperatorMatrix Ts = build_toeplitz(FourierSymbol::s(), 16);
    const OperatorMatrix Tp = build_toeplitz(FourierSymbol::p(), 16);

    // raw finite sections fail: truncation breaks the isometry relation
    CHECK_FALSE(certify_gamma_isometry({Ts.entries, Tp.entries}, 1e-6).passed);

    // compressing residuals away from the truncation edge restores it exactly
    const CheckReport rep = certify_gamma_isometry_windowed(Ts, Tp, 2);
    CHECK(rep.passed);
    CHECK(rep.residual == 0.0);
    REQUIRE(rep.window_used.has_value());
    CHECK(*rep.window_used == exact_subwindow(IndexWindow::hardy(16), 2));
}

TEST_CASE("analyticity characterizations agree on both kinds of symbols") {
    for (const FourierSymbol& f :
         {FourierSymbol::s(), FourierSymbol::p(),
          FourierSymbol::s() * FourierSymbol::s() + FourierSymbol::p(),
          conjugate(FourierSymbol::s()),
          FourierSymbol::s() + conjugate(FourierSymbol::s())}) {
        const CheckReport rep = check_analyticity_equivalences(f, 12);
        CHECK(rep.passed);
        CHECK(rep.residual == 0.0);
    }
    CHECK_THROWS_AS(check_analyticity_equivalences(FourierSymbol::s(), 1),
                    std::invalid_argument);
}

TEST_CASE("compactness profile separates corner projections from multipliers") {
    const auto corner = compactness_profile(build_Fn(2, 24));
    for (const auto& [n, value] : corner) {
        if (n >= 3) CHECK(value == 0.0);
    }
    CHECK(corner.front().first == 1);
    CHECK(corner.size() == 12);

    const auto shift_like = compactness_profile(build_toeplitz(FourierSymbol::s(), 16));
    for (const auto& [n, value] : shift_like) CHECK(value > 1.5);

    CHECK_THROWS_AS(compactness_profile(build_toeplitz(FourierSymbol::s(), 6)),
                    std::invalid_argument);  // D below the profile minimum
}

TEST_CASE("asymptotic toeplitz check passes exact sections plus compacts") {
    std::mt19937 rng(41);
    const FourierSymbol f = random_symmetric(rng, 1);
    const CheckReport exact = check_asymptotic_toeplitz(build_toeplitz(f, 16), f, 16);
    CHECK(exact.passed);
    CHECK(exact.residual == 0.0);

    const OperatorMatrix mixed =
        add(build_Fn(1, 24), build_toeplitz(FourierSymbol::s(), 24));
    const CheckReport rep = check_asymptotic_toeplitz(mixed, FourierSymbol::s(), 24);
    CHECK(rep.passed);
    CHECK(rep.residual <= 1e-12);
}

TEST_CASE("asymptotic toeplitz check flags the degree-raising shift") {
    const CheckReport rep =
        check_asymptotic_toeplitz(build_X(24), FourierSymbol::s(), 24);
    CHECK_FALSE(rep.passed);
    CHECK(detail(rep, "eta_remainder_tail") == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        check_asymptotic_toeplitz(build_X(16), FourierSymbol::s(), 24),
        std::invalid_argument);  // window does not match D
}

TEST_CASE("dual toeplitz sections satisfy the dual brown-halmos relations") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 4; ++trial) {
        const FourierSymbol f = random_symmetric(rng, 2);
        const CheckReport rep =
            check_dual_toeplitz_bh(build_dual_toeplitz(f, 12), 3);
        CHECK(rep.passed);
        CHECK(rep.residual <= 1e-12);
    }
}

TEST_CASE("dual brown-halmos flags a rank-one co-hardy operator") {
    OperatorMatrix E = identity_on(IndexWindow::co_hardy(8));
    E.entries.setZero();
    const auto pos = static_cast<Eigen::Index>(E.rows.position({0, -1}));
    E.entries(pos, pos) = 1.0;
    const CheckReport rep = check_dual_toeplitz_bh(E, 1);
    CHECK_FALSE(rep.passed);
    CHECK(rep.residual > 1e-3);
}

TEST_CASE("fundamental operator identity is exact on every window") {
    for (const int D : {8, 12, 16}) {
        const CheckReport rep = check_fundamental_operator(D);
        CHECK(rep.passed);
        CHECK(rep.residual == 0.0);
        CHECK(detail(rep, "Q_idempotent") == 0.0);
    }
    CHECK_THROWS_AS(check_fundamental_operator(2), std::invalid_argument);
}
