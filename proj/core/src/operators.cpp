#include "symtoep/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace symtoep {

namespace {

constexpr int kAmaxCap = 256;  // dense storage stays manageable below this

void check_window(const IndexWindow& w, const char* who) {
    if (!w.well_formed())
        throw std::invalid_argument(std::string(who) + ": empty or inverted window");
    if (w.a_max > kAmaxCap)
        throw std::invalid_argument(std::string(who) + ": window exceeds a_max cap 256");
}

OperatorMatrix build_symbol_operator(const FourierSymbol& f, const IndexWindow& rows,
                                     const IndexWindow& cols, std::string label) {
    check_window(rows, label.c_str());
    check_window(cols, label.c_str());
    const auto ri = enumerate(rows);
    const auto ci = enumerate(cols);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(ri.size()),
                       static_cast<Eigen::Index>(ci.size()));
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                symbol_entry(f, ri[i], ci[j]);
    return {rows, cols, std::move(m), std::move(label)};
}

Eigen::MatrixXcd mat_power(const Eigen::MatrixXcd& A, int n) {
    Eigen::MatrixXcd out = A;
    for (int k = 1; k < n; ++k) out = out * A;
    return out;
}

}  // namespace

Complex OperatorMatrix::at(const AntiIndex& row, const AntiIndex& col) const {
    return entries(static_cast<Eigen::Index>(rows.position(row)),
                   static_cast<Eigen::Index>(cols.position(col)));
}

Complex symbol_entry(const FourierSymbol& f, const AntiIndex& row, const AntiIndex& col) {
    return f.at(row.a - col.a, row.b - col.b) - f.at(row.a - col.b, row.b - col.a);
}

OperatorMatrix build_laurent(const FourierSymbol& f, const IndexWindow& window) {
    return build_symbol_operator(f, window, window, "laurent");
}

OperatorMatrix build_toeplitz(const FourierSymbol& f, int D) {
    if (D < 1) throw std::invalid_argument("D must be positive");
    const IndexWindow w = IndexWindow::hardy(D);
    return build_symbol_operator(f, w, w, "toeplitz");
}

OperatorMatrix build_hankel(const FourierSymbol& f, int D) {
    if (D < 1) throw std::invalid_argument("D must be positive");
    // Row padding by the bandwidth: nothing an in-window column maps to is
    // lost, so Hankel identities need no row-side safety margin.
    return build_symbol_operator(f, IndexWindow::co_hardy(D + f.bandwidth()),
                                 IndexWindow::hardy(D), "hankel");
}

OperatorMatrix build_dual_toeplitz(const FourierSymbol& f, int D) {
    if (D < 1) throw std::invalid_argument("D must be positive");
    const IndexWindow w = IndexWindow::co_hardy(D);
    return build_symbol_operator(f, w, w, "dual_toeplitz");
}

LaurentBlocks assemble_M_blocks(const FourierSymbol& f, int D) {
    LaurentBlocks out{build_toeplitz(f, D), adjoint(build_hankel(conjugate(f), D)),
                      build_hankel(f, D), build_dual_toeplitz(f, D)};
    out.hankel_conj_adjoint.label = "hankel_conj_adjoint";
    return out;
}

OperatorMatrix build_X(int D) {
    if (D < 2) throw std::invalid_argument("D must be at least 2");
    const IndexWindow w = IndexWindow::hardy(D);
    check_window(w, "X");
    const auto ci = enumerate(w);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(w.size()),
                                                static_cast<Eigen::Index>(w.size()));
    for (std::size_t j = 0; j < ci.size(); ++j) {
        const AntiIndex target{ci[j].a + 1, ci[j].b};
        if (w.contains(target))  // overflow at a = a_max is dropped
            m(static_cast<Eigen::Index>(w.position(target)),
              static_cast<Eigen::Index>(j)) = 1.0;
    }
    return {w, w, std::move(m), "X"};
}

OperatorMatrix build_X0(int D) {
    if (D < 2) throw std::invalid_argument("D must be at least 2");
    const IndexWindow w = IndexWindow::hardy(D);
    check_window(w, "X0");
    const auto ci = enumerate(w);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(w.size()),
                                                static_cast<Eigen::Index>(w.size()));
    for (std::size_t j = 0; j < ci.size(); ++j) {
        if (ci[j].b != 0) continue;
        const AntiIndex target{ci[j].a + 1, 0};
        if (w.contains(target))
            m(static_cast<Eigen::Index>(w.position(target)),
              static_cast<Eigen::Index>(j)) = 1.0;
    }
    return {w, w, std::move(m), "X0"};
}

OperatorMatrix build_Fn(int n, int D) {
    if (D < 2) throw std::invalid_argument("D must be at least 2");
    if (n < 1 || 2 * n > D) throw std::invalid_argument("n out of range");
    const auto Tp = build_toeplitz(FourierSymbol::p(), D);
    const auto X0 = build_X0(D);
    const Eigen::Index dim = Tp.entries.rows();

    // Finite sections of these shifts compose exactly: an image escapes the
    // window iff the final index does, so the power formula holds verbatim.
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd Tpn = mat_power(Tp.entries, n);
    acc -= Tpn * Tpn.adjoint();
    const Eigen::MatrixXcd X0n = mat_power(X0.entries, n);
    const Eigen::MatrixXcd core = X0n * X0n.adjoint();
    Eigen::MatrixXcd Tpj = Eigen::MatrixXcd::Identity(dim, dim);
    for (int j = 0; j < n; ++j) {
        acc -= Tpj * core * Tpj.adjoint();
        Tpj = Tp.entries * Tpj;
    }
    return {IndexWindow::hardy(D), IndexWindow::hardy(D), std::move(acc),
            "F" + std::to_string(n)};
}

double eta(const OperatorMatrix& T, int n) {
    if (!T.square() || !(T.rows == IndexWindow::hardy(T.rows.a_max)))
        throw std::invalid_argument("eta expects a section on a hardy window");
    const int D = T.rows.a_max;
    if (n < 1 || 2 * n > D) throw std::invalid_argument("n out of range");

    // Top-shrunk window: translating (a,b) by (n,0) or (n,n) stays in
    // hardy(D), so each block is an exact submatrix gather of T.
    const IndexWindow w{0, D - 1 - n, D - n};
    const auto idx = enumerate(w);
    const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
    const auto translate = [n](const AntiIndex& q, int kind) {
        return kind == 0 ? AntiIndex{q.a + n, q.b} : AntiIndex{q.a + n, q.b + n};
    };
    double out = 0.0;
    for (int rk : {0, 1}) {
        std::vector<std::size_t> rpos(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            rpos[i] = T.rows.position(translate(idx[i], rk));
        for (int ck : {0, 1}) {
            Eigen::MatrixXcd block(m, m);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const std::size_t cp = T.cols.position(translate(idx[j], ck));
                for (std::size_t i = 0; i < idx.size(); ++i)
                    block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        T.entries(static_cast<Eigen::Index>(rpos[i]),
                                  static_cast<Eigen::Index>(cp));
            }
            out = std::max(out, spectral_norm(block));
        }
    }
    return out;
}

OperatorMatrix identity_on(const IndexWindow& window) {
    check_window(window, "identity");
    const Eigen::Index n = static_cast<Eigen::Index>(window.size());
    return {window, window, Eigen::MatrixXcd::Identity(n, n), "I"};
}

OperatorMatrix adjoint(const OperatorMatrix& A) {
    return {A.cols, A.rows, A.entries.adjoint(), A.label + "*"};
}

OperatorMatrix multiply(const OperatorMatrix& A, const OperatorMatrix& B) {
    if (!(A.cols == B.rows)) throw std::invalid_argument("window mismatch in product");
    return {A.rows, B.cols, A.entries * B.entries, A.label + " " + B.label};
}

OperatorMatrix add(const OperatorMatrix& A, const OperatorMatrix& B) {
    if (!(A.rows == B.rows && A.cols == B.cols))
        throw std::invalid_argument("window mismatch in sum");
    return {A.rows, A.cols, A.entries + B.entries, A.label + "+" + B.label};
}

OperatorMatrix subtract(const OperatorMatrix& A, const OperatorMatrix& B) {
    if (!(A.rows == B.rows && A.cols == B.cols))
        throw std::invalid_argument("window mismatch in sum");
    return {A.rows, A.cols, A.entries - B.entries, A.label + "-" + B.label};
}

OperatorMatrix compress(const OperatorMatrix& A, const IndexWindow& rows,
                        const IndexWindow& cols) {
    const auto ri = enumerate(rows);
    const auto ci = enumerate(cols);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(ri.size()),
                       static_cast<Eigen::Index>(ci.size()));
    for (std::size_t j = 0; j < ci.size(); ++j) {
        const std::size_t cp = A.cols.position(ci[j]);  // throws if not contained
        for (std::size_t i = 0; i < ri.size(); ++i)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                A.entries(static_cast<Eigen::Index>(A.rows.position(ri[i])),
                          static_cast<Eigen::Index>(cp));
    }
    return {rows, cols, std::move(m), A.label};
}

double spectral_norm(const Eigen::MatrixXcd& A) {
    if (A.size() == 0) return 0.0;
    double top = 0.0;
    if (A.imag().isZero(0.0)) {
        const Eigen::MatrixXd R = A.real();
        const Eigen::MatrixXd G = R.transpose() * R;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
        top = es.eigenvalues().maxCoeff();
    } else {
        const Eigen::MatrixXcd G = A.adjoint() * A;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
        top = es.eigenvalues().maxCoeff();
    }
    return std::sqrt(std::max(top, 0.0));
}

double spectral_radius(const Eigen::MatrixXcd& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("non-square matrix");
    if (A.size() == 0) return 0.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

double max_abs(const Eigen::MatrixXcd& A) {
    return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

}  // namespace symtoep
