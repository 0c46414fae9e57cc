#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bjw/classical.hpp"
#include "bjw/matrixrep.hpp"

namespace bjw {

// U(t0, t) = exp(-i H (t - t0) / hbar) for a time-independent Hermitian H.
struct Propagator {
    double t0 = 0.0;
    double t = 0.0;
    Eigen::MatrixXcd mat;

    int dim() const { return static_cast<int>(mat.rows()); }
};

// Holds one eigendecomposition of a Hamiltonian and evolves states or builds
// propagators from it. Construction rejects inputs whose hermiticity deviation
// exceeds the tolerance, naming the deviation.
class SpectralEvolver {
public:
    explicit SpectralEvolver(const MatrixOperator& h, double herm_tol = 1e-8);

    int dim() const { return static_cast<int>(evals_.size()); }
    double hbar() const { return hbar_; }

    Propagator propagator(double t0, double t) const;
    Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi0, double t0, double t) const;

private:
    Eigen::VectorXd evals_;
    Eigen::MatrixXcd evecs_;
    double hbar_ = 1.0;
};

Propagator propagator(const MatrixOperator& h, double t0, double t);

StateVector schrodinger_evolve(const StateVector& psi0, const Propagator& u);

// A_H(t) = U* A U.
MatrixOperator heisenberg_observable(const MatrixOperator& a, const Propagator& u);

std::complex<double> expectation(const MatrixOperator& a, const StateVector& psi);

// State supported away from the truncation edge: max amplitude over the top
// quarter of modes below 1e-8.
bool low_mode_supported(const StateVector& psi);

struct PictureCheck {
    double max_delta = 0.0;  // max_t |<psi_S(t)|A|psi_S(t)> - <psi_0|A_H(t)|psi_0>|
    bool low_mode_ok = true;
};

PictureCheck picture_equivalence_check(const StateVector& psi0, const MatrixOperator& a,
                                       const MatrixOperator& h, const std::vector<double>& t_grid);

struct EomConvergence {
    std::vector<double> dt;
    std::vector<double> residual;  // max-abs entry of the finite-difference defect
    double slope = 0.0;            // least-squares slope of log residual vs log dt
};

// Central finite difference of A_H at t against (i/hbar)[H, A_H(t)]; the
// defect should shrink like dt^2. dt_list must be descending, >= 2 entries.
EomConvergence heisenberg_eom_check(const MatrixOperator& a, const MatrixOperator& h, double t,
                                    const std::vector<double>& dt_list);

struct SimReport {
    std::vector<double> time_grid;
    // "A_bj", "A_weyl", "H_bj", "H_weyl" series on the grid.
    std::map<std::string, std::vector<std::complex<double>>> expectations;
    std::vector<double> divergence;  // |<A>_bj - <A>_weyl| per grid point
    double energy_drift = 0.0;       // max of the two relative drifts below
    double energy_drift_bj = 0.0;
    double energy_drift_weyl = 0.0;
    double picture_delta = 0.0;
    double hermitize_deviation_bj = 0.0;
    double hermitize_deviation_weyl = 0.0;
    bool low_mode_ok = true;
    std::string classical_input;
    std::string observable = "q";
    int dim = 0;
    double hbar = 1.0;
};

// Evolves psi0 under the Born-Jordan and the Weyl quantization of the same
// classical input and records how the two predictions for <A> separate.
SimReport divergence_experiment(const ClassicalPoly& h, const MatrixOperator& a,
                                const StateVector& psi0, const std::vector<double>& t_grid,
                                int n, double hbar);
SimReport divergence_experiment(const ClassicalMonomial& m, const MatrixOperator& a,
                                const StateVector& psi0, const std::vector<double>& t_grid,
                                int n, double hbar);

// steps uniform intervals over [0, t_max]: steps + 1 points.
std::vector<double> time_grid(double t_max, int steps);

// CSV schema: t, exp_bj_re, exp_bj_im, exp_weyl_re, exp_weyl_im, divergence,
// energy_bj, energy_weyl.
void write_report_csv(std::ostream& os, const SimReport& report);
void write_report_json(std::ostream& os, const SimReport& report);

}  // namespace bjw
