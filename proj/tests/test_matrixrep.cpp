#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "bjw/matrixrep.hpp"
#include "bjw/quantize.hpp"
#include "oracle.hpp"

using namespace bjw;
using bjw::testing::random_ncpoly;

namespace {

Eigen::MatrixXcd commutator_matrix(const MatrixOperator& a, const MatrixOperator& b) {
    return a.mat * b.mat - b.mat * a.mat;
}

}  // namespace

TEST_CASE("fock generators: smallest truncations") {
    auto [q1, p1] = fock_generators(1, 1.0);
    CHECK(q1.mat.cwiseAbs().maxCoeff() == 0.0);
    CHECK(p1.mat.cwiseAbs().maxCoeff() == 0.0);

    auto [q2, p2] = fock_generators(2, 1.0);
    double root_half = std::sqrt(0.5);
    CHECK(std::abs(q2.mat(0, 1).real() - root_half) < 1e-15);
    CHECK(std::abs(q2.mat(1, 0).real() - root_half) < 1e-15);
    CHECK(std::abs(q2.mat(0, 0)) == 0.0);
    CHECK(std::abs(p2.mat(0, 1) - std::complex<double>(0, -root_half)) < 1e-15);
    CHECK(std::abs(p2.mat(1, 0) - std::complex<double>(0, root_half)) < 1e-15);

    CHECK_THROWS_AS(fock_generators(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fock_generators(4, -1.0), std::invalid_argument);
}

TEST_CASE("fock generators are hermitian with single-offdiagonal support") {
    auto [q, p] = fock_generators(16, 0.7);
    CHECK((q.mat - q.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((p.mat - p.mat.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            if (std::abs(i - j) != 1) {
                CHECK(std::abs(q.mat(i, j)) == 0.0);
                CHECK(std::abs(p.mat(i, j)) == 0.0);
            }
        }
    }
}

TEST_CASE("truncated commutation relation") {
    for (int n : {2, 8, 32}) {
        for (double hbar : {1.0, 0.5}) {
            auto [q, p] = fock_generators(n, hbar);
            Eigen::MatrixXcd c = commutator_matrix(q, p);
            Eigen::MatrixXcd expected = std::complex<double>(0, hbar) * Eigen::MatrixXcd::Identity(n, n);
            expected(n - 1, n - 1) = std::complex<double>(0, hbar * (1.0 - n));
            REQUIRE((c - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("to_matrix basics") {
    CHECK((to_matrix(NCPoly::one(), 5, 1.0).mat - Eigen::MatrixXcd::Identity(5, 5))
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // p^2 as a word equals the squared generator.
    auto [q, p] = fock_generators(6, 1.0);
    MatrixOperator p2 = to_matrix(bj_quantize(ClassicalPoly::monomial({2, 0})), 6, 1.0);
    CHECK((p2.mat - p.mat * p.mat).cwiseAbs().maxCoeff() < 1e-14);

    // Scalar coefficients evaluate with the numeric hbar.
    MatrixOperator h = to_matrix(NCPoly::scalar(ScalarCoeff::hbar(2)), 3, 0.5);
    CHECK(std::abs(h.mat(0, 0).real() - 0.25) < 1e-15);
}

TEST_CASE("qp - i hbar and pq agree away from the truncation corner") {
    int n = 12;
    NCPoly lhs = NCPoly::from_word(Word::from_letters("qp")) -
                 NCPoly::scalar(ScalarCoeff::i() * ScalarCoeff::hbar());
    NCPoly rhs = NCPoly::from_word(Word::from_letters("pq"));
    Eigen::MatrixXcd d = to_matrix(lhs, n, 1.0).mat - to_matrix(rhs, n, 1.0).mat;
    // The mismatch is confined to the last diagonal entry.
    CHECK(std::abs(d(n - 1, n - 1)) > 1.0);
    d(n - 1, n - 1) = 0.0;
    CHECK(d.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("normal form and original agree on the interior block") {
    std::mt19937 rng(2024);
    int n = 16;
    for (int trial = 0; trial < 25; ++trial) {
        NCPoly a = random_ncpoly(rng, 3, 4);
        unsigned d = a.degree();
        MatrixOperator raw = to_matrix(a, n, 1.0);
        MatrixOperator nf = to_matrix(normal_form(a), n, 1.0);
        int keep = n - static_cast<int>(d);
        REQUIRE(keep > 0);
        Eigen::MatrixXcd diff =
            raw.mat.topLeftCorner(keep, keep) - nf.mat.topLeftCorner(keep, keep);
        REQUIRE(diff.cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("hermitize") {
    auto [q, p] = fock_generators(8, 1.0);
    auto [hq, dev] = hermitize(q);
    CHECK(dev == 0.0);
    CHECK((hq.mat - q.mat).cwiseAbs().maxCoeff() == 0.0);

    // Adjoint-symmetric word expansions give Hermitian matrices directly.
    NCPoly weyl22 = weyl_quantize(ClassicalPoly::monomial({2, 2}));
    auto [h_raw, dev_raw] = hermitize(to_matrix(weyl22, 32, 1.0));
    CHECK(dev_raw < 1e-12);

    // The normal form trades word symmetry for edge-mode deviation.
    auto [h_nf, dev_nf] = hermitize(to_matrix(normal_form(weyl22), 32, 1.0));
    CHECK(dev_nf > 1.0);
    Eigen::MatrixXcd skew =
        (to_matrix(normal_form(weyl22), 32, 1.0).mat -
         to_matrix(normal_form(weyl22), 32, 1.0).mat.adjoint()) /
        2.0;
    CHECK(skew.topLeftCorner(27, 27).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(dev_nf < 250.0);  // measured 243.967 at N=32; edge modes only

    // 1x1 matrices are always scalars.
    auto [h1, dev1] = hermitize(to_matrix(normal_form(weyl22), 1, 1.0));
    CHECK(dev1 == 0.0);
}

TEST_CASE("state vectors normalize and validate") {
    Eigen::VectorXcd v(3);
    v << 3.0, 4.0, 0.0;
    StateVector s(v);
    CHECK(std::abs(s.amps.norm() - 1.0) < 1e-12);
    CHECK(std::abs(s.amps(0).real() - 0.6) < 1e-15);

    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(3);
    CHECK_THROWS_AS((void)StateVector(zero), std::invalid_argument);
    Eigen::VectorXcd bad(2);
    bad << std::nan(""), 1.0;
    CHECK_THROWS_AS((void)StateVector(bad), std::invalid_argument);

    StateVector low = default_low_mode_state(16);
    CHECK(std::abs(low.amps(0).real() - 0.5) < 1e-15);
    CHECK(std::abs(low.amps(4)) == 0.0);
    CHECK_THROWS_AS(default_low_mode_state(3), std::invalid_argument);
}

TEST_CASE("matrix operators must be square and finite") {
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS((void)MatrixOperator(bad, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)MatrixOperator(Eigen::MatrixXcd::Zero(2, 3), 1.0), std::invalid_argument);
}

TEST_CASE("matrix dumps") {
    auto [q, p] = fock_generators(2, 1.0);
    std::ostringstream csv;
    write_matrix_csv(csv, q);
    std::string line;
    std::istringstream in(csv.str());
    std::getline(in, line);
    CHECK(line == "0,0,0.70710678118654757,0");

    std::ostringstream js;
    write_matrix_json(js, q);
    nlohmann::json parsed = nlohmann::json::parse(js.str());
    CHECK(parsed["dim"] == 2);
    CHECK(parsed["entries"].size() == 4);
    CHECK(std::abs(parsed["entries"][1][0].get<double>() - std::sqrt(0.5)) < 1e-15);
}
