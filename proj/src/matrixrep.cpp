#include "bjw/matrixrep.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bjw {

namespace {

void check_finite(const Eigen::MatrixXcd& m, const char* who) {
    if (!m.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

}  // namespace

MatrixOperator::MatrixOperator(Eigen::MatrixXcd m, double hbar_value)
    : mat(std::move(m)), hbar(hbar_value) {
    if (mat.rows() != mat.cols() || mat.rows() < 1)
        throw std::invalid_argument("MatrixOperator: need a square matrix, dim >= 1");
    check_finite(mat, "MatrixOperator");
}

StateVector::StateVector(Eigen::VectorXcd a) : amps(std::move(a)) {
    if (amps.size() < 1) throw std::invalid_argument("StateVector: empty");
    if (!amps.allFinite()) throw std::invalid_argument("StateVector: non-finite entries");
    double norm = amps.norm();
    if (norm <= 0.0) throw std::invalid_argument("StateVector: zero vector");
    amps /= norm;
}

std::pair<MatrixOperator, MatrixOperator> fock_generators(int n, double hbar) {
    if (n < 1) throw std::invalid_argument("fock_generators: N must be >= 1");
    if (hbar <= 0.0) throw std::invalid_argument("fock_generators: hbar must be positive");
    Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) lower(k - 1, k) = std::sqrt(static_cast<double>(k));
    Eigen::MatrixXcd raise = lower.adjoint();
    double scale = std::sqrt(hbar / 2.0);
    Eigen::MatrixXcd q = scale * (lower + raise);
    Eigen::MatrixXcd p = std::complex<double>(0.0, 1.0) * scale * (raise - lower);
    return {MatrixOperator(std::move(q), hbar), MatrixOperator(std::move(p), hbar)};
}

MatrixOperator to_matrix(const NCPoly& a, int n, double hbar) {
    auto [q, p] = fock_generators(n, hbar);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [w, c] : a.terms()) {
        Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(n, n);
        for (Var v : w.letters()) prod = prod * (v == Var::Q ? q.mat : p.mat);
        acc += c.eval(hbar) * prod;
    }
    return MatrixOperator(std::move(acc), hbar);
}

std::pair<MatrixOperator, double> hermitize(const MatrixOperator& h) {
    Eigen::MatrixXcd sym = (h.mat + h.mat.adjoint()) / 2.0;
    Eigen::MatrixXcd skew = (h.mat - h.mat.adjoint()) / 2.0;
    double deviation = skew.cwiseAbs().maxCoeff();
    return {MatrixOperator(std::move(sym), h.hbar), deviation};
}

StateVector default_low_mode_state(int n) {
    if (n < 4) throw std::invalid_argument("default_low_mode_state: need N >= 4");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n);
    for (int k = 0; k < 4; ++k) a(k) = 0.5;
    return StateVector(std::move(a));
}

void write_matrix_csv(std::ostream& os, const MatrixOperator& m) {
    os.precision(17);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j > 0) os << ",";
            os << m.mat(i, j).real() << "," << m.mat(i, j).imag();
        }
        os << "\n";
    }
}

void write_matrix_json(std::ostream& os, const MatrixOperator& m) {
    os.precision(17);
    os << "{\"dim\": " << m.dim() << ", \"hbar\": " << m.hbar << ", \"entries\": [";
    bool first = true;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (!first) os << ", ";
            first = false;
            os << "[" << m.mat(i, j).real() << ", " << m.mat(i, j).imag() << "]";
        }
    }
    os << "]}\n";
}

}  // namespace bjw
