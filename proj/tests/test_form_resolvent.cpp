#include "hypspec/error.hpp"
#include "hypspec/frobenius.hpp"
#include "hypspec/psi.hpp"
#include "hypspec/radial_operator.hpp"
#include "hypspec/scalar_green.hpp"

#include <doctest.h>

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <random>

using namespace hypspec;

namespace {

Eigen::MatrixXcd random_matrix(int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> nd;
    Eigen::MatrixXcd X(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) X(i, j) = cplx(nd(rng), nd(rng));
    return X;
}

std::vector<double> grid(double a, double b, int count) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back(a + (b - a) * i / (count - 1));
    return out;
}

} // namespace

TEST_CASE("operator assembly") {
    for (int n = 2; n <= 7; ++n)
        for (int p = 0; p <= n; ++p) {
            const auto op = build_radial_operator(n, p, 30);
            CHECK(op.end_dim == op.tau.dim_v * op.tau.dim_v);
            CHECK(op.alpha_p == alpha_p(make_space(Field::Real, n), p));
            for (int i = 0; i < op.e_diag.size(); ++i) CHECK(op.e_diag(i) >= 0);
            CHECK(e_spectrum(op).front() == 0.0);
            for (int k = 1; k <= 30; ++k) {
                const bool listed = std::find(op.q_powers.begin(), op.q_powers.end(), k) != op.q_powers.end();
                CHECK(listed == !op.w_coeffs[k - 1].is_zero());
            }
        }
    // Functions and top-degree forms carry only even powers of q.
    for (int k : build_radial_operator(5, 0, 30).q_powers) CHECK(k % 2 == 0);
    for (int k : build_radial_operator(5, 5, 30).q_powers) CHECK(k % 2 == 0);
}

TEST_CASE("series and closed-form coefficients agree") {
    for (auto [n, p] : {std::pair{5, 1}, {4, 2}, {6, 3}, {3, 0}}) {
        const auto op = build_radial_operator(n, p, 30);
        const Eigen::MatrixXcd X = random_matrix(op.tau.dim_v, 7u + n);
        for (double t : {2.0, 3.0, 5.0}) {
            const Eigen::MatrixXcd a = op.w_series(t, X), b = op.w_direct(t, X);
            CHECK((a - b).norm() <= 1e-10 * b.norm());
        }
    }
}

TEST_CASE("E spectrum is c(sigma_max) - c(sigma)") {
    const auto op = build_radial_operator(7, 2, 10);
    const auto e = e_spectrum(op);
    REQUIRE(e.size() == 2);
    CHECK(e[1] == doctest::Approx(3.0));
}

TEST_CASE("cover points") {
    auto pt = cover_point(5, 1, 1.0);
    REQUIRE(pt.branch_values.size() == 1);
    CHECK(std::abs(pt.branch_values[0] - 2.0) < 1e-14);
    CHECK(pt.h == doctest::Approx(1.0));
    CHECK(pt.physical_sheet);

    pt = cover_point(5, 1, 1.0, {-1});
    CHECK(std::abs(pt.branch_values[0] + 2.0) < 1e-14);
    CHECK(pt.h == doctest::Approx(-2.0));
    CHECK_FALSE(pt.physical_sheet);

    const cplx s(0.5, 0.1);
    pt = cover_point(7, 2, s);
    REQUIRE(pt.e_values.size() == 1);
    CHECK(pt.e_values[0] == doctest::Approx(3.0));
    CHECK(std::abs(pt.branch_values[0] * pt.branch_values[0] - (s * s + 3.0)) < 1e-12);
    CHECK(pt.h == doctest::Approx(0.5));

    CHECK_THROWS_AS(cover_point(5, 1, cplx(0, std::sqrt(3.0))), BranchPoint);
    CHECK_THROWS_AS(cover_point(5, 1, 1.0, {1, 1}), DomainError);
}

TEST_CASE("resonances") {
    // At s = 1 on n = 5, p = 1 the exponent s + 2 of the function block meets the branch value 2.
    const auto op = build_radial_operator(5, 1, 40);
    FrobeniusConfig strict;
    strict.policy = ResonancePolicy::Reject;
    CHECK_THROWS_AS(frobenius_solve(op, cover_point(op, 1.0), strict), ResonanceDetected);
    const auto K = frobenius_solve(op, cover_point(op, 1.0));
    CHECK(K.log_terms > 0);
    for (double t : {2.0, 4.0, 8.0}) CHECK(kernel_ode_residual(op, K, t) < 1e-6);
    // A generic point is resonance free.
    CHECK_NOTHROW(frobenius_solve(op, cover_point(op, cplx(1.0, 0.5)), strict));
}

TEST_CASE("Frobenius kernel: leading coefficients, residual and decay") {
    for (int n : {3, 4, 5, 6})
        for (int p = 0; 2 * p <= n; ++p)
            for (cplx s : {cplx(0.5, 0), cplx(1, 0), cplx(1, 0.5)}) {
                INFO("n=" << n << " p=" << p << " s=" << s);
                const auto op = build_radial_operator(n, p, 40);
                const auto pt = cover_point(op, s);
                const auto K = frobenius_solve(op, pt);
                Eigen::VectorXd sum = Eigen::VectorXd::Zero(op.tau.dim_v);
                for (const auto& B : K.blocks) {
                    sum += B.projector;
                    CHECK((B.coeffs[0][0] - Eigen::MatrixXcd(B.projector.cast<cplx>().asDiagonal())).norm() < 1e-14);
                }
                CHECK((sum - Eigen::VectorXd::Ones(op.tau.dim_v)).norm() == 0.0);
                CHECK(K.valid_from <= 2.0);
                for (double t : grid(2, 8, 13)) CHECK(kernel_ode_residual(op, K, t) < 1e-6);
                const double rate = decay_check(K, grid(8, 16, 17));
                CHECK(rate >= to_double(op.rho) + s.real() - 1e-2);
                CHECK(pt.h == s.real());
            }
}

TEST_CASE("off-sheet decay follows rho + h") {
    const auto op = build_radial_operator(5, 2, 40);
    const auto pt = cover_point(op, 1.0, {-1});
    const auto K = frobenius_solve(op, pt);
    CHECK(decay_check(K, grid(8, 16, 17)) == doctest::Approx(to_double(op.rho) + pt.h).epsilon(2e-2));
}

TEST_CASE("functions reduce to the scalar kernel") {
    for (int n : {2, 3, 4, 5}) {
        const auto sp = make_space(Field::Real, n);
        const auto op = build_radial_operator(n, 0, 40);
        for (cplx s : {cplx(1, 0), cplx(0.7, 0.3)}) {
            const auto K = frobenius_solve(op, cover_point(op, s));
            const cplx ref = kernel_eval(K, 2.0)(0, 0) / green0_eval(sp, s, 2.0);
            for (double t : grid(2, 10, 17)) {
                const cplx ratio = kernel_eval(K, t)(0, 0) / green0_eval(sp, s, t);
                CHECK(std::abs(ratio / ref - 1.0) < 1e-8);
            }
        }
    }
}

TEST_CASE("tail bound") {
    const auto op = build_radial_operator(4, 1, 40);
    const auto K = frobenius_solve(op, cover_point(op, 1.0));
    CHECK_THROWS_AS(kernel_eval(K, 0.5 * K.valid_from), TailBoundExceeded);
    CHECK_FALSE(K.truncation_warning);
}

TEST_CASE("psi extraction") {
    for (int n : {4, 5}) {
        const auto op = build_radial_operator(n, 1, 40);
        const auto K = frobenius_solve(op, cover_point(op, 1.0));
        const auto rep = psi_extract(op, K);
        INFO("n=" << n);
        CHECK(rep.singularity_exponent == doctest::Approx(n - 2).epsilon(0.01));
        CHECK(rep.sigma_min > 0);
        CHECK(std::abs(rep.combination.at(0) - 1.0) == 0.0);
    }
    // For functions on H^3 psi is the far-field ratio F / g_0.
    const auto op = build_radial_operator(3, 0, 40);
    const auto K = frobenius_solve(op, cover_point(op, 1.0));
    const auto rep = psi_extract(op, K);
    const cplx far = kernel_eval(K, 5.0)(0, 0) / green0_eval(make_space(Field::Real, 3), 1.0, 5.0);
    CHECK(std::abs(rep.psi(0, 0) / far - 1.0) < 1e-2);
    CHECK(rep.singularity_exponent == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("Frobenius coefficients grow at most polynomially") {
    // ||a_l|| ~ l^k with k < n - 1, so the terms ||a_l|| e^{-l t} decay geometrically for t > 0.
    for (auto [n, p] : {std::pair{3, 1}, {5, 1}, {4, 2}, {6, 2}, {6, 3}}) {
        const auto op = build_radial_operator(n, p, 40);
        const auto K = frobenius_solve(op, cover_point(op, cplx(1, 0.5)));
        for (const auto& B : K.blocks) {
            auto coefficient_norm = [&](int l) {
                Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(op.tau.dim_v, op.tau.dim_v);
                for (std::size_t m = 0; m < B.coeffs[l].size(); ++m) a += B.coeffs[l][m] * std::pow(2.0, double(m));
                return a.norm();
            };
            const double slope = std::log(coefficient_norm(40) / coefficient_norm(20)) / std::log(2.0);
            INFO("n=" << n << " p=" << p << " slope=" << slope);
            CHECK(slope < n - 1);
            CHECK(coefficient_norm(40) * std::exp(-40.0 * 2.0) < 1e-25);
        }
    }
}
