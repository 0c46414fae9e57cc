#include "bjw/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bjw/printer.hpp"
#include "bjw/quantize.hpp"

namespace bjw {

namespace {

void check_dims(int a, int b, const char* who) {
    if (a != b) {
        std::ostringstream oss;
        oss << who << ": dimension mismatch " << a << " vs " << b;
        throw std::invalid_argument(oss.str());
    }
}

Eigen::VectorXcd phases(const Eigen::VectorXd& evals, double dt_over_hbar) {
    return (std::complex<double>(0.0, -1.0) * dt_over_hbar * evals).array().exp();
}

// Relative energy drift; the scale is the larger of |E(0)| and the state's
// rms energy so near-zero mean energies do not blow the ratio up.
double relative_drift(const std::vector<double>& energy, double rms_scale) {
    if (energy.empty()) return 0.0;
    double e0 = energy.front();
    double drift = 0.0;
    for (double e : energy) drift = std::max(drift, std::abs(e - e0));
    double scale = std::max(std::abs(e0), rms_scale);
    if (scale == 0.0) return drift == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return drift / scale;
}

}  // namespace

SpectralEvolver::SpectralEvolver(const MatrixOperator& h, double herm_tol) : hbar_(h.hbar) {
    double deviation = hermitize(h).second;
    if (deviation > herm_tol) {
        std::ostringstream oss;
        oss << "SpectralEvolver: hermiticity deviation " << deviation << " exceeds tolerance "
            << herm_tol;
        throw std::invalid_argument(oss.str());
    }
    Eigen::MatrixXcd sym = (h.mat + h.mat.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("SpectralEvolver: eigendecomposition failed");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
}

Propagator SpectralEvolver::propagator(double t0, double t) const {
    Propagator u;
    u.t0 = t0;
    u.t = t;
    u.mat = evecs_ * phases(evals_, (t - t0) / hbar_).asDiagonal() * evecs_.adjoint();
    return u;
}

Eigen::VectorXcd SpectralEvolver::evolve(const Eigen::VectorXcd& psi0, double t0, double t) const {
    check_dims(static_cast<int>(psi0.size()), dim(), "SpectralEvolver::evolve");
    Eigen::VectorXcd c = evecs_.adjoint() * psi0;
    c.array() *= phases(evals_, (t - t0) / hbar_).array();
    return evecs_ * c;
}

Propagator propagator(const MatrixOperator& h, double t0, double t) {
    return SpectralEvolver(h).propagator(t0, t);
}

StateVector schrodinger_evolve(const StateVector& psi0, const Propagator& u) {
    check_dims(psi0.dim(), u.dim(), "schrodinger_evolve");
    return StateVector(u.mat * psi0.amps);
}

MatrixOperator heisenberg_observable(const MatrixOperator& a, const Propagator& u) {
    check_dims(a.dim(), u.dim(), "heisenberg_observable");
    return MatrixOperator(u.mat.adjoint() * a.mat * u.mat, a.hbar);
}

std::complex<double> expectation(const MatrixOperator& a, const StateVector& psi) {
    check_dims(a.dim(), psi.dim(), "expectation");
    return (psi.amps.adjoint() * a.mat * psi.amps)(0);
}

bool low_mode_supported(const StateVector& psi) {
    int n = psi.dim();
    int start = n - n / 4;
    double top = 0.0;
    for (int k = start; k < n; ++k) top = std::max(top, std::abs(psi.amps(k)));
    return top < 1e-8;
}

PictureCheck picture_equivalence_check(const StateVector& psi0, const MatrixOperator& a,
                                       const MatrixOperator& h, const std::vector<double>& t_grid) {
    check_dims(psi0.dim(), a.dim(), "picture_equivalence_check");
    check_dims(a.dim(), h.dim(), "picture_equivalence_check");
    PictureCheck out;
    out.low_mode_ok = low_mode_supported(psi0);
    SpectralEvolver evolver(h);
    for (double t : t_grid) {
        Eigen::VectorXcd psi_t = evolver.evolve(psi0.amps, 0.0, t);
        std::complex<double> lhs = (psi_t.adjoint() * a.mat * psi_t)(0);
        Propagator u = evolver.propagator(0.0, t);
        Eigen::VectorXcd a_h_psi0 = u.mat.adjoint() * (a.mat * (u.mat * psi0.amps));
        std::complex<double> rhs = psi0.amps.dot(a_h_psi0);
        out.max_delta = std::max(out.max_delta, std::abs(lhs - rhs));
    }
    return out;
}

EomConvergence heisenberg_eom_check(const MatrixOperator& a, const MatrixOperator& h, double t,
                                    const std::vector<double>& dt_list) {
    check_dims(a.dim(), h.dim(), "heisenberg_eom_check");
    if (dt_list.size() < 2) throw std::invalid_argument("heisenberg_eom_check: need >= 2 step sizes");
    for (std::size_t i = 0; i + 1 < dt_list.size(); ++i) {
        if (!(dt_list[i] > dt_list[i + 1]) || !(dt_list[i + 1] > 0.0))
            throw std::invalid_argument("heisenberg_eom_check: dt_list must be positive descending");
    }

    SpectralEvolver evolver(h);
    auto a_h = [&](double s) {
        Propagator u = evolver.propagator(0.0, s);
        return Eigen::MatrixXcd(u.mat.adjoint() * a.mat * u.mat);
    };
    Eigen::MatrixXcd at_t = a_h(t);
    std::complex<double> i_over_hbar(0.0, 1.0 / h.hbar);
    Eigen::MatrixXcd exact = i_over_hbar * (h.mat * at_t - at_t * h.mat);

    EomConvergence out;
    out.dt = dt_list;
    for (double dt : dt_list) {
        Eigen::MatrixXcd diff = (a_h(t + dt) - a_h(t - dt)) / (2.0 * dt);
        out.residual.push_back((diff - exact).cwiseAbs().maxCoeff());
    }

    // Least-squares slope of log(residual) against log(dt).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = dt_list.size();
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::log(out.dt[i]);
        double y = std::log(std::max(out.residual[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

SimReport divergence_experiment(const ClassicalPoly& h, const MatrixOperator& a,
                                const StateVector& psi0, const std::vector<double>& t_grid,
                                int n, double hbar) {
    check_dims(a.dim(), n, "divergence_experiment");
    check_dims(psi0.dim(), n, "divergence_experiment");

    SimReport report;
    report.time_grid = t_grid;
    report.classical_input = to_string(h);
    report.dim = n;
    report.hbar = hbar;
    report.low_mode_ok = low_mode_supported(psi0);

    auto [h_bj, dev_bj] = hermitize(to_matrix(bj_quantize(h), n, hbar));
    auto [h_w, dev_w] = hermitize(to_matrix(weyl_quantize(h), n, hbar));
    report.hermitize_deviation_bj = dev_bj;
    report.hermitize_deviation_weyl = dev_w;

    SpectralEvolver ev_bj(h_bj);
    SpectralEvolver ev_w(h_w);

    std::vector<std::complex<double>> a_bj, a_w, e_bj, e_w;
    std::vector<double> energy_bj, energy_w;
    for (double t : t_grid) {
        Eigen::VectorXcd psi_b = ev_bj.evolve(psi0.amps, 0.0, t);
        Eigen::VectorXcd psi_w = ev_w.evolve(psi0.amps, 0.0, t);
        std::complex<double> ab = (psi_b.adjoint() * a.mat * psi_b)(0);
        std::complex<double> aw = (psi_w.adjoint() * a.mat * psi_w)(0);
        a_bj.push_back(ab);
        a_w.push_back(aw);
        std::complex<double> eb = (psi_b.adjoint() * h_bj.mat * psi_b)(0);
        std::complex<double> ew = (psi_w.adjoint() * h_w.mat * psi_w)(0);
        e_bj.push_back(eb);
        e_w.push_back(ew);
        energy_bj.push_back(eb.real());
        energy_w.push_back(ew.real());
        report.divergence.push_back(std::abs(ab - aw));
    }
    report.expectations["A_bj"] = std::move(a_bj);
    report.expectations["A_weyl"] = std::move(a_w);
    report.expectations["H_bj"] = std::move(e_bj);
    report.expectations["H_weyl"] = std::move(e_w);

    report.energy_drift_bj = relative_drift(energy_bj, (h_bj.mat * psi0.amps).norm());
    report.energy_drift_weyl = relative_drift(energy_w, (h_w.mat * psi0.amps).norm());
    report.energy_drift = std::max(report.energy_drift_bj, report.energy_drift_weyl);

    // Picture-equivalence consistency under the BJ Hamiltonian, on a coarse
    // subgrid (dense propagators are O(N^3) per point).
    if (!t_grid.empty()) {
        std::vector<double> coarse;
        std::size_t stride = std::max<std::size_t>(1, t_grid.size() / 10);
        for (std::size_t i = 0; i < t_grid.size(); i += stride) coarse.push_back(t_grid[i]);
        coarse.push_back(t_grid.back());
        report.picture_delta = picture_equivalence_check(psi0, a, h_bj, coarse).max_delta;
    }
    return report;
}

SimReport divergence_experiment(const ClassicalMonomial& m, const MatrixOperator& a,
                                const StateVector& psi0, const std::vector<double>& t_grid,
                                int n, double hbar) {
    return divergence_experiment(ClassicalPoly::monomial(m), a, psi0, t_grid, n, hbar);
}

std::vector<double> time_grid(double t_max, int steps) {
    if (!(t_max > 0.0) || steps < 1) throw std::invalid_argument("time_grid: need t_max > 0, steps >= 1");
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) grid.push_back(t_max * k / steps);
    return grid;
}

void write_report_csv(std::ostream& os, const SimReport& report) {
    os.precision(17);
    os << "t,exp_bj_re,exp_bj_im,exp_weyl_re,exp_weyl_im,divergence,energy_bj,energy_weyl\n";
    const auto& ab = report.expectations.at("A_bj");
    const auto& aw = report.expectations.at("A_weyl");
    const auto& eb = report.expectations.at("H_bj");
    const auto& ew = report.expectations.at("H_weyl");
    for (std::size_t i = 0; i < report.time_grid.size(); ++i) {
        os << report.time_grid[i] << "," << ab[i].real() << "," << ab[i].imag() << ","
           << aw[i].real() << "," << aw[i].imag() << "," << report.divergence[i] << ","
           << eb[i].real() << "," << ew[i].real() << "\n";
    }
}

void write_report_json(std::ostream& os, const SimReport& report) {
    nlohmann::json j;
    j["classical_input"] = report.classical_input;
    j["observable"] = report.observable;
    j["N"] = report.dim;
    j["hbar"] = report.hbar;
    j["low_mode_ok"] = report.low_mode_ok;
    j["hermitize_deviation"] = {{"bj", report.hermitize_deviation_bj},
                                {"weyl", report.hermitize_deviation_weyl}};
    j["energy_drift"] = {{"bj", report.energy_drift_bj},
                         {"weyl", report.energy_drift_weyl},
                         {"max", report.energy_drift}};
    j["picture_delta"] = report.picture_delta;
    j["time"] = report.time_grid;
    j["divergence"] = report.divergence;
    for (const auto& [label, series] : report.expectations) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& z : series) arr.push_back({z.real(), z.imag()});
        j["expectations"][label] = std::move(arr);
    }
    os << j.dump(2) << "\n";
}

}  // namespace bjw
