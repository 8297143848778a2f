#include "symtoep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "symtoep/spaces.hpp"

namespace symtoep {

namespace {

CheckReport finalize(std::string name, double tol, std::optional<IndexWindow> window,
                     std::vector<SubCheck> details) {
    CheckReport out;
    out.name = std::move(name);
    out.tolerance = tol;
    out.window_used = window;
    out.details = std::move(details);
    out.passed = true;
    for (const auto& d : out.details) {
        out.residual = std::max(out.residual, d.residual);
        if (!(d.residual <= tol)) out.passed = false;  // NaN counts as failure
    }
    return out;
}

int require_hardy(const OperatorMatrix& T, const char* who) {
    if (!T.square() || !(T.rows == IndexWindow::hardy(T.rows.a_max)))
        throw std::invalid_argument(std::string(who) +
                                    ": expected a section on a hardy window");
    return T.rows.a_max;
}

int require_co_hardy(const OperatorMatrix& T, const char* who) {
    if (!T.square() || !(T.rows == IndexWindow::co_hardy(T.rows.a_max)))
        throw std::invalid_argument(std::string(who) +
                                    ": expected a section on a co-hardy window");
    return T.rows.a_max;
}

void require_pair(const FinitePair& pair) {
    if (pair.T.rows() != pair.T.cols() || pair.V.rows() != pair.V.cols() ||
        pair.T.rows() != pair.V.rows())
        throw std::invalid_argument("dimension mismatch");
}

// Both-index diagonal translation gather: G[(r),(c)] = A[(r + n e), (c + n e)]
// with e = (1,1); all translated indices must lie in A's windows.
Eigen::MatrixXcd translate_gather(const OperatorMatrix& A, int n, const IndexWindow& w) {
    const auto idx = enumerate(w);
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(idx.size()),
                       static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const std::size_t cp = A.cols.position(AntiIndex{idx[j].a + n, idx[j].b + n});
        for (std::size_t i = 0; i < idx.size(); ++i)
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                A.entries(static_cast<Eigen::Index>(
                              A.rows.position(AntiIndex{idx[i].a + n, idx[i].b + n})),
                          static_cast<Eigen::Index>(cp));
    }
    return g;
}

// Joint eigenvalue pairs of a commuting pair: Schur basis of a fixed generic
// combination diagonalizes both in the simple case; multiplicity clusters
// fall back to per-eigenspace extraction.
std::vector<std::pair<Complex, Complex>> joint_eigenvalues(const Eigen::MatrixXcd& R,
                                                           const Eigen::MatrixXcd& U) {
    std::vector<std::pair<Complex, Complex>> out;
    const Eigen::Index n = R.rows();
    if (n == 0) return out;
    constexpr double kClusterTol = 1e-7;
    const Complex c1{0.61803398874989485, 0.0};
    const Complex c2{0.5411961001461969, 0.33141357403559086};
    const Eigen::MatrixXcd Z = c1 * R + c2 * U;
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(Z, /*computeU=*/true);
    const Eigen::MatrixXcd& Q = schur.matrixU();
    const Eigen::MatrixXcd DR = Q.adjoint() * R * Q;
    const Eigen::MatrixXcd DU = Q.adjoint() * U * Q;
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (i != j)
                off = std::max({off, std::abs(DR(i, j)), std::abs(DU(i, j))});
    if (off <= kClusterTol) {
        for (Eigen::Index i = 0; i < n; ++i) out.emplace_back(DR(i, i), DU(i, i));
        return out;
    }

    // Cluster fallback: group (sorted) eigenvalues of R, then read U's
    // eigenvalues on each group's invariant subspace.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(R, /*computeEigenvectors=*/true);
    const auto& ev = es.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        if (ev(x).real() != ev(y).real()) return ev(x).real() < ev(y).real();
        return ev(x).imag() < ev(y).imag();
    });
    Eigen::MatrixXcd V(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        V.col(k) = es.eigenvectors().col(order[static_cast<std::size_t>(k)]);
    const Eigen::MatrixXcd Up = V.partialPivLu().solve(U * V);
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n &&
               std::abs(ev(order[static_cast<std::size_t>(stop)]) -
                        ev(order[static_cast<std::size_t>(stop - 1)])) <= kClusterTol)
            ++stop;
        const Eigen::Index len = stop - start;
        if (len == 1) {
            out.emplace_back(ev(order[static_cast<std::size_t>(start)]), Up(start, start));
        } else {
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> bs(
                Eigen::MatrixXcd(Up.block(start, start, len, len)),
                /*computeEigenvectors=*/false);
            for (Eigen::Index k = 0; k < len; ++k)
                out.emplace_back(ev(order[static_cast<std::size_t>(start + k)]),
                                 bs.eigenvalues()(k));
        }
        start = stop;
    }
    return out;
}

double boundary_deviation(const std::vector<std::pair<Complex, Complex>>& pairs) {
    double dev = 0.0;
    for (const auto& [s, p] : pairs) {
        const auto [z1, z2] = point_roots(GammaPoint{s, p});
        dev = std::max({dev, std::abs(std::abs(z1) - 1.0), std::abs(std::abs(z2) - 1.0)});
    }
    return dev;
}

}  // namespace

CheckReport check_brown_halmos(const OperatorMatrix& T, int margin, double tol) {
    const int D = require_hardy(T, "check_brown_halmos");
    const IndexWindow safe = safe_subwindow(T.rows, margin);
    const auto Ts = build_toeplitz(FourierSymbol::s(), D);
    const auto Tp = build_toeplitz(FourierSymbol::p(), D);
    const auto r1 = subtract(multiply(multiply(adjoint(Ts), T), Tp), multiply(T, Ts));
    const auto r2 = subtract(multiply(multiply(adjoint(Tp), T), Tp), T);
    std::vector<SubCheck> details{
        {"first_relation", max_abs(compress(r1, safe, safe).entries)},
        {"second_relation", max_abs(compress(r2, safe, safe).entries)}};
    return finalize("brown_halmos", tol, safe, std::move(details));
}

FourierSymbol recover_symbol(const OperatorMatrix& T, int beta) {
    const int D = require_hardy(T, "recover_symbol");
    if (beta < 0) throw std::invalid_argument("recover_symbol: negative bandwidth");
    if (D < 4 * beta + 2)
        throw std::invalid_argument("recover_symbol: window too small for bandwidth");
    FourierSymbol::CoeffMap coeffs;
    for (int u = -beta; u <= beta; ++u) {
        for (int v = -beta; v <= u; ++v) {
            // Placement: the second core-formula term has index magnitude
            // > beta there, so the entry reads off alpha_{u,v} alone.
            const int b = std::max(0, -v);
            const int a = b + 2 * beta + 1;
            const AntiIndex row{a + u, b + v}, col{a, b};
            const Complex value = T.at(row, col);
            if (value != Complex{0.0, 0.0}) {
                coeffs[{u, v}] = value;
                coeffs[{v, u}] = value;
            }
        }
    }
    return FourierSymbol::from_coefficients(std::move(coeffs));
}

CheckReport certify_gamma_unitary(const FinitePair& pair, double tol) {
    require_pair(pair);
    const Eigen::MatrixXcd& R = pair.T;
    const Eigen::MatrixXcd& U = pair.V;
    const Eigen::Index n = R.rows();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    std::vector<SubCheck> details{
        {"commute", max_abs(R * U - U * R)},
        {"unitary_left", max_abs(U.adjoint() * U - I)},
        {"unitary_right", max_abs(U * U.adjoint() - I)},
        {"bh_symmetry", max_abs(R - R.adjoint() * U)},
        {"spectral_radius_excess", std::max(0.0, spectral_radius(R) - 2.0)},
        {"joint_spectrum_boundary", boundary_deviation(joint_eigenvalues(R, U))}};
    return finalize("gamma_unitary", tol, std::nullopt, std::move(details));
}

CheckReport certify_gamma_isometry(const FinitePair& pair, double tol) {
    require_pair(pair);
    const Eigen::MatrixXcd& T = pair.T;
    const Eigen::MatrixXcd& V = pair.V;
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(T.rows(), T.cols());
    std::vector<SubCheck> details{
        {"commute", max_abs(T * V - V * T)},
        {"isometry", max_abs(V.adjoint() * V - I)},
        {"bh_symmetry", max_abs(T - T.adjoint() * V)},
        {"spectral_radius_excess", std::max(0.0, spectral_radius(T) - 2.0)}};
    return finalize("gamma_isometry", tol, std::nullopt, std::move(details));
}

CheckReport certify_gamma_isometry_windowed(const OperatorMatrix& T,
                                            const OperatorMatrix& V, int margin,
                                            double tol) {
    if (!T.square() || !(T.rows == V.rows) || !(T.cols == V.cols))
        throw std::invalid_argument("certify_gamma_isometry_windowed: window mismatch");
    const IndexWindow sub = exact_subwindow(T.rows, margin);
    const auto I = identity_on(T.rows);
    std::vector<SubCheck> details{
        {"commute",
         max_abs(compress(subtract(multiply(T, V), multiply(V, T)), sub, sub).entries)},
        {"isometry",
         max_abs(compress(subtract(multiply(adjoint(V), V), I), sub, sub).entries)},
        {"bh_symmetry",
         max_abs(compress(subtract(T, multiply(adjoint(T), V)), sub, sub).entries)},
        {"spectral_radius_excess",
         std::max(0.0, spectral_radius(compress(T, sub, sub).entries) - 2.0)}};
    return finalize("gamma_isometry_windowed", tol, sub, std::move(details));
}

CheckReport check_analyticity_equivalences(const FourierSymbol& f, int D) {
    const int beta = f.bandwidth();
    if (D < std::max(2, 4 * beta + 2))
        throw std::invalid_argument("check_analyticity_equivalences: window too small");
    constexpr double kExact = 1e-12;
    const auto Tf = build_toeplitz(f, D);
    const auto Ts = build_toeplitz(FourierSymbol::s(), D);
    const auto Tp = build_toeplitz(FourierSymbol::p(), D);
    const auto I = identity_on(Tf.rows);
    const IndexWindow sub = exact_subwindow(Tf.rows, beta + 1);
    const bool analytic = is_analytic(f);
    const double r_p = max_abs(
        compress(subtract(multiply(Tf, Tp), multiply(Tp, Tf)), sub, sub).entries);
    const double r_range = max_abs(
        compress(multiply(multiply(subtract(I, multiply(Tp, adjoint(Tp))), Tf), Tp), sub,
                 sub)
            .entries);
    const double r_s = max_abs(
        compress(subtract(multiply(Tf, Ts), multiply(Ts, Tf)), sub, sub).entries);
    const auto agree = [&](double r) { return ((r <= kExact) == analytic) ? 0.0 : 1.0; };
    std::vector<SubCheck> details{{"commutes_p_vs_analytic", agree(r_p)},
                                  {"range_invariant_vs_analytic", agree(r_range)},
                                  {"commutes_s_vs_analytic", agree(r_s)}};
    return finalize("analyticity_equivalences", kExact, sub, std::move(details));
}

std::vector<std::pair<int, double>> compactness_profile(const OperatorMatrix& T) {
    const int D = require_hardy(T, "compactness_profile");
    if (D < 8) throw std::invalid_argument("compactness_profile: D must be at least 8");
    std::vector<std::pair<int, double>> out;
    for (int n = 1; 2 * n <= D; ++n) out.emplace_back(n, eta(T, n));
    return out;
}

CheckReport check_asymptotic_toeplitz(const OperatorMatrix& T, const FourierSymbol& f,
                                      int D, double tol) {
    if (require_hardy(T, "check_asymptotic_toeplitz") != D)
        throw std::invalid_argument("check_asymptotic_toeplitz: window does not match D");
    if (D < 4)
        throw std::invalid_argument("check_asymptotic_toeplitz: window too small");
    const int n = D / 2;
    const auto Ts = build_toeplitz(FourierSymbol::s(), D);
    const auto Tf = build_toeplitz(f, D);

    const auto C = subtract(multiply(T, Ts), multiply(Ts, T));
    const IndexWindow wa = exact_subwindow(T.rows, n + 1);
    const double tail_a = spectral_norm(translate_gather(C, n, wa));

    const IndexWindow wb = exact_subwindow(T.rows, n);
    const double tail_b =
        spectral_norm(translate_gather(T, n, wb) - compress(Tf, wb, wb).entries);

    const double tail_c = eta(subtract(T, Tf), n);

    std::vector<SubCheck> details{{"shift_commutator_tail", tail_a},
                                  {"compression_limit_tail", tail_b},
                                  {"eta_remainder_tail", tail_c}};
    return finalize("asymptotic_toeplitz", tol, wb, std::move(details));
}

CheckReport check_dual_toeplitz_bh(const OperatorMatrix& T, int margin, double tol) {
    const int D = require_co_hardy(T, "check_dual_toeplitz_bh");
    const IndexWindow sub = exact_subwindow(T.rows, margin);
    const auto Ds = build_dual_toeplitz(conjugate(FourierSymbol::s()), D);
    const auto Dp = build_dual_toeplitz(conjugate(FourierSymbol::p()), D);
    const auto r1 = subtract(multiply(multiply(adjoint(Ds), T), Dp), multiply(T, Ds));
    const auto r2 = subtract(multiply(multiply(adjoint(Dp), T), Dp), T);
    std::vector<SubCheck> details{
        {"first_relation", max_abs(compress(r1, sub, sub).entries)},
        {"second_relation", max_abs(compress(r2, sub, sub).entries)}};
    return finalize("dual_toeplitz_brown_halmos", tol, sub, std::move(details));
}

CheckReport check_fundamental_operator(int D, double tol) {
    if (D < 4)
        throw std::invalid_argument("check_fundamental_operator: D must be at least 4");
    const auto Ts = build_toeplitz(FourierSymbol::s(), D);
    const auto Tp = build_toeplitz(FourierSymbol::p(), D);
    const auto X = build_X(D);
    const auto I = identity_on(Ts.rows);
    const auto Q = subtract(I, multiply(Tp, adjoint(Tp)));
    const auto lhs = subtract(adjoint(Ts), multiply(Ts, adjoint(Tp)));
    const auto rhs = multiply(multiply(Q, adjoint(X)), Q);
    const IndexWindow sub = exact_subwindow(Ts.rows, 1);
    std::vector<SubCheck> details{
        {"fundamental_identity",
         max_abs(compress(subtract(lhs, rhs), sub, sub).entries)},
        {"Q_idempotent", max_abs(compress(subtract(multiply(Q, Q), Q), sub, sub).entries)},
        {"Q_selfadjoint", max_abs(compress(subtract(adjoint(Q), Q), sub, sub).entries)},
        {"Q_annihilates_Tp", max_abs(compress(multiply(Q, Tp), sub, sub).entries)}};
    return finalize("fundamental_operator", tol, sub, std::move(details));
}

}  // namespace symtoep
