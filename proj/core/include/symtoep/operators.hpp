#pragma once

#include <string>

#include <Eigen/Dense>

#include "symtoep/lattice.hpp"
#include "symtoep/symbols.hpp"

namespace symtoep {

// Finite section of an operator between windowed spans of the e_hat basis.
// Entries are exact matrix elements of the infinite operator; the only
// approximation anywhere is the window itself (images falling outside the
// row window are dropped), so identities are stated on safe sub-windows.
struct OperatorMatrix {
    IndexWindow rows;
    IndexWindow cols;
    Eigen::MatrixXcd entries;
    std::string label;

    bool square() const { return rows == cols; }
    Complex at(const AntiIndex& row, const AntiIndex& col) const;
};

// <M_f e_hat(col), e_hat(row)> for a symmetric symbol f with canonical
// indices: alpha_{c-a, d-b} - alpha_{c-b, d-a} for rows (c,d), cols (a,b).
Complex symbol_entry(const FourierSymbol& f, const AntiIndex& row, const AntiIndex& col);

// Multiplication operator compressed to rows = cols = window.
OperatorMatrix build_laurent(const FourierSymbol& f, const IndexWindow& window);

// Toeplitz operator: rows = cols = hardy window of size D.
OperatorMatrix build_toeplitz(const FourierSymbol& f, int D);

// Hankel operator: cols = hardy(D), rows = co_hardy(D + bandwidth) so no
// image of a column index is lost to row truncation.
OperatorMatrix build_hankel(const FourierSymbol& f, int D);

// Dual Toeplitz operator: rows = cols = co_hardy(D).
OperatorMatrix build_dual_toeplitz(const FourierSymbol& f, int D);

// The four blocks of the multiplication operator with respect to the
// Hardy/co-Hardy splitting: [[toeplitz, hankel_conj_adjoint],
//                           [hankel,   dual]].
struct LaurentBlocks {
    OperatorMatrix toeplitz;
    OperatorMatrix hankel_conj_adjoint;  // adjoint of the Hankel of conjugate(f)
    OperatorMatrix hankel;
    OperatorMatrix dual;
};
LaurentBlocks assemble_M_blocks(const FourierSymbol& f, int D);

// X: e_hat(a,b) -> e_hat(a+1,b) and X0: e_hat(a,0) -> e_hat(a+1,0), zero on
// b >= 1; both on hardy(D), D >= 2.
OperatorMatrix build_X(int D);
OperatorMatrix build_X0(int D);

// F_n = I - T_p^n T_p*^n - sum_{j<n} T_p^j X0^n X0*^n T_p*^j on hardy(D);
// an orthogonal projection of rank n^2. Requires 1 <= n <= D/2.
OperatorMatrix build_Fn(int n, int D);

// Block compactness functional: the max over the four compressions
// X*^n T X^n, X*^n T T_p^n, T_p*^n T X^n, T_p*^n T T_p^n of the operator
// norm, evaluated on the top-shrunk window where the index translations
// stay inside hardy(D). Requires T on a hardy window and n <= D/2.
double eta(const OperatorMatrix& T, int n);

// Plumbing over windows.
OperatorMatrix identity_on(const IndexWindow& window);
OperatorMatrix adjoint(const OperatorMatrix& A);
OperatorMatrix multiply(const OperatorMatrix& A, const OperatorMatrix& B);
inline OperatorMatrix operator*(const OperatorMatrix& A, const OperatorMatrix& B) {
    return multiply(A, B);
}
OperatorMatrix add(const OperatorMatrix& A, const OperatorMatrix& B);
OperatorMatrix subtract(const OperatorMatrix& A, const OperatorMatrix& B);

// Sub-matrix on windows contained in A's windows (position gather).
OperatorMatrix compress(const OperatorMatrix& A, const IndexWindow& rows,
                        const IndexWindow& cols);

// Largest singular value via the dense self-adjoint eigensolver of A^H A
// (real fast path when the matrix has no imaginary part).
double spectral_norm(const Eigen::MatrixXcd& A);

// Largest eigenvalue modulus via the dense eigensolver.
double spectral_radius(const Eigen::MatrixXcd& A);

// Max entry magnitude; 0 for empty matrices.
double max_abs(const Eigen::MatrixXcd& A);

}  // namespace symtoep
