#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>

#include "bjw/ncpoly.hpp"

namespace bjw {

// Dense operator on the N-dimensional truncation of Fock space. Entries are
// checked finite on construction; hbar is the numeric value used to build it.
struct MatrixOperator {
    Eigen::MatrixXcd mat;
    double hbar = 1.0;

    MatrixOperator() = default;
    MatrixOperator(Eigen::MatrixXcd m, double hbar_value);

    int dim() const { return static_cast<int>(mat.rows()); }
};

// Unit-norm state on the truncated space (normalized on construction).
struct StateVector {
    Eigen::VectorXcd amps;

    StateVector() = default;
    explicit StateVector(Eigen::VectorXcd a);

    int dim() const { return static_cast<int>(amps.size()); }
};

// Position and momentum in the harmonic-oscillator (Fock) basis:
// q = sqrt(hbar/2)(a + a*), p = i sqrt(hbar/2)(a* - a), with a the lowering
// matrix a[n-1, n] = sqrt(n). Both Hermitian and nonzero only one off the
// diagonal. The truncated commutator is [q, p] = i hbar (I - N E_{N-1,N-1}).
std::pair<MatrixOperator, MatrixOperator> fock_generators(int n, double hbar);

// Each word becomes the product of the truncated generators in word order;
// coefficients are evaluated at the numeric hbar. Linear over terms.
MatrixOperator to_matrix(const NCPoly& a, int n, double hbar);

// ((H + H*)/2, max-abs entry of (H - H*)/2). Truncation can spoil exact
// self-adjointness at edge modes; the deviation is always reported.
std::pair<MatrixOperator, double> hermitize(const MatrixOperator& h);

// Equal superposition of Fock modes 0..3, the default experiment state.
StateVector default_low_mode_state(int n);

// Debug dumps, row-major with "re,im" entry pairs.
void write_matrix_csv(std::ostream& os, const MatrixOperator& m);
void write_matrix_json(std::ostream& os, const MatrixOperator& m);

}  // namespace bjw
