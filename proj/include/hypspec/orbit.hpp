#pragma once

#include "hypspec/hypergeometric.hpp"
#include "hypspec/space.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hypspec {

enum class ModelKind {
    RealHyperboloid,  ///< R^{n,1}, form diag(1,...,1,-1), curvature -1
    ComplexProjective ///< C^{n,1}, Hermitian form diag(1,...,1,-1), holomorphic curvature -4
};

struct IsometryModel {
    ModelKind kind = ModelKind::RealHyperboloid;
    int n = 2;

    int ambient_dim() const { return n + 1; }
    Eigen::MatrixXd form() const;
    /// The symmetric space this model realizes (real or complex hyperbolic n-space).
    SpaceDescriptor space() const;
    /// Base point (0, ..., 0, 1).
    Eigen::VectorXcd origin() const;
};

struct GroupGenerators {
    IsometryModel model;
    std::vector<Eigen::MatrixXcd> generators;
    std::vector<Eigen::MatrixXcd> inverses;
    std::vector<std::string> labels;
    bool assumed_free = true;
};

/// Validates form preservation (to 1e-10 relative) and attaches inverses J g^* J.
GroupGenerators make_generators(const IsometryModel& model, std::vector<Eigen::MatrixXcd> gens,
                                std::vector<std::string> labels = {});

/// Hermitian (or bilinear) form of the model.
cplx model_form(const IsometryModel& model, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

double distance(const IsometryModel& model, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

enum class DedupPolicy { FreeReduction, MatrixHash };

struct EnumerationConfig {
    DedupPolicy dedup = DedupPolicy::FreeReduction;
    std::uint64_t max_words = 50'000'000; ///< overridden by HYPSPEC_MAX_WORDS
    int threads = 0;                      ///< 0 = hardware concurrency
};

struct OrbitSample {
    Eigen::VectorXcd base_point;
    IsometryModel model;
    int max_word_length = 0;
    DedupPolicy dedup_policy = DedupPolicy::FreeReduction;
    std::uint64_t word_count = 0;
    std::vector<std::vector<double>> shells; ///< shells[k]: sorted distances of words of length k

    /// All distances, sorted.
    std::vector<double> distances() const;
    /// N(R) = #{words with distance <= R}.
    std::uint64_t count_by_radius(double R) const;
};

/// Number of freely reduced words of length <= max_len on k generators.
std::uint64_t free_word_count(int generators, int max_len);

OrbitSample enumerate_orbit(const GroupGenerators& gens, const Eigen::VectorXcd& base, int max_len,
                            const EnumerationConfig& cfg = {});

double poincare_partial_sum(const OrbitSample& sample, double s);

struct DeltaEstimate {
    double growth_fit = 0;
    double bisection = 0;
    double spread = 0;
    double fit_radius_min = 0;
    double fit_radius_max = 0;
};

/// growth_fit: slope of log N(R) over [R_c/2, R_c], where R_c is the smallest distance among
/// maximal-length words (the ball of radius R_c is then essentially complete).
/// bisection: zero of log of the geometric-mean ratio of the last three shell sums
/// S_k(s)/S_{k-1}(s), i.e. the abscissa where the geometric tail switches from growth to decay.
DeltaEstimate estimate_delta(const OrbitSample& sample);

/// Sum of g_0(s, d) over recorded distances d > 0.
double pullback_green_partial_sum(const SpaceDescriptor& space, double s, const OrbitSample& sample,
                                  const GreenEvalConfig& cfg = {});

/// Sum of e^{-(s + rho) d} over recorded distances d > 0.
double shifted_poincare_sum(const SpaceDescriptor& space, double s, const OrbitSample& sample);

/// Boosts along a spacelike axis of the real model: cosh/sinh mixing of coordinate `axis` with time.
Eigen::MatrixXd hyperboloid_boost(int n, int axis, double length);
/// Image of A in SL(2,R) in SO(2,1) acting on (x, y, t).
Eigen::MatrixXd sl2_to_so21(const Eigen::Matrix2d& A);

} // namespace hypspec
