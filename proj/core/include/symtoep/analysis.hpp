#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symtoep/lattice.hpp"
#include "symtoep/operators.hpp"
#include "symtoep/symbols.hpp"

namespace symtoep {

struct SubCheck {
    std::string name;
    double residual = 0.0;
};

// Outcome of one certifier run. passed is equivalent to every sub-check
// residual being <= tolerance; residual is the max over sub-checks.
struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    std::optional<IndexWindow> window_used;
    bool passed = false;
    std::vector<SubCheck> details;
};

// Abstract operator pair (R,U) or (T,V): plain square matrices, same size.
struct FinitePair {
    Eigen::MatrixXcd T;
    Eigen::MatrixXcd V;
};

// Residuals of T_s* T T_p - T T_s and T_p* T T_p - T compressed to the
// symmetric safe sub-window with the given margin. T must sit on a hardy
// window; margin should cover the band of T plus 1.
CheckReport check_brown_halmos(const OperatorMatrix& T, int margin, double tol = 1e-12);

// Translation readout of the symbol of a banded Toeplitz section: for each
// (u,v) with |u|,|v| <= beta the entry at rows/cols placed 2 beta + 1 apart
// isolates alpha_{u,v} exactly. Requires a hardy window with D >= 4 beta + 2.
FourierSymbol recover_symbol(const OperatorMatrix& T, int beta);

// Certifies (R,U): U unitary, RU = UR, R = R* U, r(R) <= 2 + tol, and every
// joint eigenvalue pair lies on the distinguished boundary (root moduli 1).
CheckReport certify_gamma_unitary(const FinitePair& pair, double tol = 1e-6);

// Certifies (T,V): V isometry, TV = VT, T = T* V, r(T) <= 2 + tol.
CheckReport certify_gamma_isometry(const FinitePair& pair, double tol = 1e-6);

// Windowed variant for finite sections: residuals are compressed to the
// exact sub-window with the given margin before taking magnitudes, so
// truncation rows do not count against the identities.
CheckReport certify_gamma_isometry_windowed(const OperatorMatrix& T,
                                            const OperatorMatrix& V, int margin,
                                            double tol = 1e-12);

// Boolean outcomes of: symbol support analytic; T_f commutes with T_p;
// T_f leaves the range of T_p invariant; T_f commutes with T_s — reported
// as pairwise agreement residuals (0 agree, 1 disagree) against the first.
CheckReport check_analyticity_equivalences(const FourierSymbol& f, int D);

// eta(T, n) for n = 1 .. D/2. Requires a hardy window with D >= 8.
std::vector<std::pair<int, double>> compactness_profile(const OperatorMatrix& T);

// Tail values at n = D/2 of the three decay profiles that characterize
// "compact + Toeplitz with symbol f": the compressed shift commutator,
// the compression limit against build_toeplitz(f, D), and eta of T - T_f.
CheckReport check_asymptotic_toeplitz(const OperatorMatrix& T, const FourierSymbol& f,
                                      int D, double tol = 1e-6);

// Brown-Halmos relations with respect to the pair (DT_sbar, DT_pbar) for a
// section on a co-hardy window, compressed to the exact sub-window.
CheckReport check_dual_toeplitz_bh(const OperatorMatrix& T, int margin,
                                   double tol = 1e-12);

// The identity T_s* - T_s T_p* = Q X* Q with Q = I - T_p T_p*, together
// with Q being the orthogonal projection annihilating the range of T_p.
CheckReport check_fundamental_operator(int D, double tol = 1e-12);

}  // namespace symtoep
