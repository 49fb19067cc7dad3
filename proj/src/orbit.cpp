#include "hypspec/orbit.hpp"

#include "hypspec/error.hpp"
#include "hypspec/scalar_green.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

namespace hypspec {

Eigen::MatrixXd IsometryModel::form() const {
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(n + 1, n + 1);
    J(n, n) = -1.0;
    return J;
}

SpaceDescriptor IsometryModel::space() const {
    return make_space(kind == ModelKind::RealHyperboloid ? Field::Real : Field::Complex, n);
}

Eigen::VectorXcd IsometryModel::origin() const {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n + 1);
    x(n) = 1.0;
    return x;
}

cplx model_form(const IsometryModel& model, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    const int n = model.n;
    cplx s = 0;
    for (int i = 0; i < n; ++i) s += x(i) * std::conj(y(i));
    return s - x(n) * std::conj(y(n));
}

GroupGenerators make_generators(const IsometryModel& model, std::vector<Eigen::MatrixXcd> gens,
                                std::vector<std::string> labels) {
    if (model.n < 1) throw DomainError("model dimension must be positive");
    if (gens.empty()) throw DomainError("at least one generator is required");
    const int N = model.ambient_dim();
    const Eigen::MatrixXcd J = model.form().cast<cplx>();
    GroupGenerators out;
    out.model = model;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        if (g.rows() != N || g.cols() != N)
            throw DomainError("generator " + std::to_string(i) + " has the wrong size for the model");
        if (model.kind == ModelKind::RealHyperboloid && g.imag().cwiseAbs().maxCoeff() > 0)
            throw DomainError("generators of the real model must be real");
        const Eigen::MatrixXcd defect = g.adjoint() * J * g - J;
        const double scale = std::max(1.0, g.cwiseAbs2().sum());
        if (defect.cwiseAbs().maxCoeff() > 1e-10 * scale)
            throw DomainError("generator " + std::to_string(i) + " does not preserve the model's form");
        out.generators.push_back(g);
        out.inverses.push_back(J * g.adjoint() * J);
    }
    if (labels.empty())
        for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("g" + std::to_string(i));
    if (labels.size() != gens.size()) throw DomainError("label count does not match generator count");
    out.labels = std::move(labels);
    return out;
}

double distance(const IsometryModel& model, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    const cplx qx = model_form(model, x, x), qy = model_form(model, y, y);
    if (!(qx.real() < 0) || !(qy.real() < 0)) throw DomainError("points must have negative norm");
    const Eigen::VectorXcd xh = x / std::sqrt(-qx.real());
    Eigen::VectorXcd yh = y / std::sqrt(-qy.real());
    if (model.kind == ModelKind::ComplexProjective) {
        // Rotate y within its line so that <x, y> is real and negative.
        const cplx ip = model_form(model, xh, yh);
        if (std::abs(ip) > 0) yh *= -ip / std::abs(ip);
    } else if (model_form(model, xh, yh).real() > 0) {
        yh = -yh; // opposite sheet of the hyperboloid represents the same point
    }
    // u = cosh d - 1 = <x - y, x - y>/2, free of cancellation for nearby points.
    const double u = std::max(0.0, 0.5 * model_form(model, xh - yh, xh - yh).real());
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

std::uint64_t free_word_count(int k, int max_len) {
    std::uint64_t total = 1, shell = 2 * std::uint64_t(k);
    for (int L = 1; L <= max_len; ++L) {
        total += shell;
        if (total > (std::uint64_t(1) << 62)) return total;
        shell *= 2 * std::uint64_t(k) - 1;
    }
    return total;
}

std::vector<double> OrbitSample::distances() const {
    std::vector<double> all;
    for (const auto& s : shells) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::uint64_t OrbitSample::count_by_radius(double R) const {
    std::uint64_t c = 0;
    for (const auto& s : shells) c += std::upper_bound(s.begin(), s.end(), R) - s.begin();
    return c;
}

namespace {

std::uint64_t word_cap(const EnumerationConfig& cfg) {
    if (const char* env = std::getenv("HYPSPEC_MAX_WORDS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return cfg.max_words;
}

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Distance from the normalized base point, specialized per scalar type.
template <class Scalar>
struct DistanceKernel {
    Vec<Scalar> base; // normalized, <base, base> = -1
    int n;

    double operator()(const Vec<Scalar>& y) const {
        // y = gamma base is already normalized since gamma preserves the form.
        Scalar ip = Scalar(0);
        for (int i = 0; i < n; ++i) ip += base(i) * conj_(y(i));
        ip -= base(n) * conj_(y(n));
        const double c = std::abs(ip); // cosh d
        double u = c - 1.0;
        if (u < 1e-4) {
            // Near the base point use the difference vector to avoid cancellation.
            Scalar phase = ip == Scalar(0) ? Scalar(1) : Scalar(-1) * ip / std::abs(ip);
            Vec<Scalar> dlt = base - phase * y;
            double q = 0;
            for (int i = 0; i < n; ++i) q += std::norm(dlt(i));
            q -= std::norm(dlt(n));
            u = std::max(0.0, 0.5 * q);
        }
        return std::log1p(u + std::sqrt(u * (u + 2.0)));
    }

    static Scalar conj_(const Scalar& z) {
        if constexpr (std::is_same_v<Scalar, double>)
            return z;
        else
            return std::conj(z);
    }
};

struct QuantizedKey {
    std::vector<std::int64_t> v;
    bool operator<(const QuantizedKey& o) const { return v < o.v; }
};

template <class Scalar>
QuantizedKey quantize(const Mat<Scalar>& M) {
    const double scale = M.cwiseAbs().maxCoeff();
    QuantizedKey k;
    for (Eigen::Index i = 0; i < M.size(); ++i) {
        const std::complex<double> z(M.data()[i]);
        k.v.push_back(std::llround(z.real() / scale / 1e-9));
        k.v.push_back(std::llround(z.imag() / scale / 1e-9));
    }
    return k;
}

template <class Scalar>
struct Enumerator {
    std::vector<Mat<Scalar>> letters; // generators then inverses
    int k;
    int max_len;
    DistanceKernel<Scalar> dist;

    int inverse_of(int a) const { return a < k ? a + k : a - k; }

    // Depth-first over words extended on the left: the orbit point of l w is l (w x).
    void dfs(const Vec<Scalar>& point, int first, int len, std::vector<std::vector<double>>& shells) const {
        shells[len].push_back(dist(point));
        if (len == max_len) return;
        for (int a = 0; a < 2 * k; ++a) {
            if (a == inverse_of(first)) continue;
            dfs(letters[a] * point, a, len + 1, shells);
        }
    }

    void dfs_hash(const Mat<Scalar>& word, const Vec<Scalar>& base, int first, int len,
                  std::vector<std::vector<double>>& shells, std::set<QuantizedKey>& seen) const {
        if (seen.insert(quantize<Scalar>(word)).second) shells[len].push_back(dist(word * base));
        if (len == max_len) return;
        for (int a = 0; a < 2 * k; ++a) {
            if (len > 0 && a == inverse_of(first)) continue;
            dfs_hash(letters[a] * word, base, a, len + 1, shells, seen);
        }
    }
};

template <class Scalar>
Mat<Scalar> convert(const Eigen::MatrixXcd& M) {
    if constexpr (std::is_same_v<Scalar, double>)
        return M.real();
    else
        return M;
}

template <class Scalar>
OrbitSample run_enumeration(const GroupGenerators& gens, const Eigen::VectorXcd& base, int max_len,
                            const EnumerationConfig& cfg) {
    const IsometryModel& model = gens.model;
    const cplx q = model_form(model, base, base);
    if (!(q.real() < 0)) throw DomainError("base point must have negative norm");
    const Eigen::VectorXcd xh = base / std::sqrt(-q.real());

    Enumerator<Scalar> en;
    en.k = int(gens.generators.size());
    en.max_len = max_len;
    for (const auto& g : gens.generators) en.letters.push_back(convert<Scalar>(g));
    for (const auto& g : gens.inverses) en.letters.push_back(convert<Scalar>(g));
    en.dist.base = convert<Scalar>(xh);
    en.dist.n = model.n;

    OrbitSample out;
    out.base_point = xh;
    out.model = model;
    out.max_word_length = max_len;
    out.dedup_policy = cfg.dedup;
    out.shells.assign(max_len + 1, {});
    const Vec<Scalar> x0 = en.dist.base;

    if (cfg.dedup == DedupPolicy::MatrixHash) {
        std::set<QuantizedKey> seen;
        const int N = model.ambient_dim();
        en.dfs_hash(Mat<Scalar>::Identity(N, N), x0, -1, 0, out.shells, seen);
    } else {
        // Identity, then one independent subtree per first letter; merged in letter order.
        const int branches = 2 * en.k;
        std::vector<std::vector<std::vector<double>>> parts(branches,
                                                            std::vector<std::vector<double>>(max_len + 1));
        out.shells[0].push_back(en.dist(x0));
        auto work = [&](int a) { en.dfs(en.letters[a] * x0, a, 1, parts[a]); };
        int threads = cfg.threads > 0 ? cfg.threads : int(std::max(1u, std::thread::hardware_concurrency()));
        threads = std::min(threads, branches);
        if (threads <= 1) {
            for (int a = 0; a < branches; ++a) work(a);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w)
                pool.emplace_back([&, w] {
                    for (int a = w; a < branches; a += threads) work(a);
                });
            for (auto& th : pool) th.join();
        }
        for (int a = 0; a < branches; ++a)
            for (int L = 1; L <= max_len; ++L)
                out.shells[L].insert(out.shells[L].end(), parts[a][L].begin(), parts[a][L].end());
    }
    std::uint64_t total = 0;
    for (auto& s : out.shells) {
        std::sort(s.begin(), s.end());
        total += s.size();
    }
    out.word_count = total;
    return out;
}

} // namespace

OrbitSample enumerate_orbit(const GroupGenerators& gens, const Eigen::VectorXcd& base, int max_len,
                            const EnumerationConfig& cfg) {
    if (max_len < 1) throw DomainError("max_len must be >= 1");
    if (base.size() != gens.model.ambient_dim()) throw DomainError("base point has the wrong dimension");
    const std::uint64_t expected = free_word_count(int(gens.generators.size()), max_len);
    const std::uint64_t cap = word_cap(cfg);
    if (expected > cap)
        throw CombinatorialBlowup(std::to_string(expected) + " words exceed the enumeration cap of " +
                                  std::to_string(cap) + " (set HYPSPEC_MAX_WORDS to raise it)");
    if (gens.model.kind == ModelKind::RealHyperboloid) {
        if (base.imag().cwiseAbs().maxCoeff() > 0) throw DomainError("base point of the real model must be real");
        return run_enumeration<double>(gens, base, max_len, cfg);
    }
    return run_enumeration<cplx>(gens, base, max_len, cfg);
}

double poincare_partial_sum(const OrbitSample& sample, double s) {
    double sum = 0;
    // Largest distances first keeps the summation order fixed and accurate.
    for (const auto& shell : sample.shells)
        for (auto it = shell.rbegin(); it != shell.rend(); ++it) sum += std::exp(-s * *it);
    return sum;
}

namespace {

double shell_sum(const std::vector<double>& shell, double s) {
    double sum = 0;
    for (auto it = shell.rbegin(); it != shell.rend(); ++it) sum += std::exp(-s * *it);
    return sum;
}

} // namespace

DeltaEstimate estimate_delta(const OrbitSample& sample) {
    const int L = sample.max_word_length;
    std::set<double> radii;
    for (const auto& s : sample.shells)
        for (double d : s) {
            radii.insert(d);
            if (radii.size() >= 3) break;
        }
    if (radii.size() < 3 || L < 4) throw DegenerateFit("delta estimation needs >= 3 distinct radii and max_len >= 4");
    const double rho2 = 2.0 * to_double(sample.model.space().rho);

    DeltaEstimate est;
    const double Rc = sample.shells[L].front();
    if (!(Rc > 0)) throw DegenerateFit("outermost shell has zero radius");
    est.fit_radius_min = 0.5 * Rc;
    est.fit_radius_max = Rc;
    constexpr int grid = 40;
    double mx = 0, my = 0;
    std::vector<double> xs(grid), ys(grid);
    for (int i = 0; i < grid; ++i) {
        xs[i] = est.fit_radius_min + (Rc - est.fit_radius_min) * i / (grid - 1);
        ys[i] = std::log(double(sample.count_by_radius(xs[i])));
        mx += xs[i];
        my += ys[i];
    }
    mx /= grid;
    my /= grid;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < grid; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    est.growth_fit = sxy / sxx;

    // log of the geometric mean of S_k/S_{k-1} over the last three shells; decreasing in s.
    auto log_ratio = [&](double s) {
        double acc = 0;
        for (int k = L - 2; k <= L; ++k) acc += std::log(shell_sum(sample.shells[k], s) / shell_sum(sample.shells[k - 1], s));
        return acc / 3.0;
    };
    double lo = 0, hi = rho2;
    if (log_ratio(lo) <= 0) {
        est.bisection = 0;
    } else if (log_ratio(hi) >= 0) {
        est.bisection = hi;
    } else {
        for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            (log_ratio(mid) > 0 ? lo : hi) = mid;
        }
        est.bisection = 0.5 * (lo + hi);
    }
    est.spread = std::abs(est.growth_fit - est.bisection);
    return est;
}

double pullback_green_partial_sum(const SpaceDescriptor& space, double s, const OrbitSample& sample,
                                  const GreenEvalConfig& cfg) {
    if (!(s > 0)) throw DomainError("pullback Green sum requires real s > 0");
    const SpaceDescriptor ms = sample.model.space();
    if (ms.field != space.field || ms.n != space.n) throw DomainError("space does not match the orbit model");
    double sum = 0;
    for (const auto& shell : sample.shells)
        for (auto it = shell.rbegin(); it != shell.rend(); ++it)
            if (*it > 1e-9) sum += green0_eval(space, s, *it, cfg).real();
    return sum;
}

double shifted_poincare_sum(const SpaceDescriptor& space, double s, const OrbitSample& sample) {
    const double rate = s + to_double(space.rho);
    double sum = 0;
    for (const auto& shell : sample.shells)
        for (auto it = shell.rbegin(); it != shell.rend(); ++it)
            if (*it > 1e-9) sum += std::exp(-rate * *it);
    return sum;
}

Eigen::MatrixXd hyperboloid_boost(int n, int axis, double length) {
    if (axis < 0 || axis >= n) throw DomainError("boost axis out of range");
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n + 1, n + 1);
    M(axis, axis) = M(n, n) = std::cosh(length);
    M(axis, n) = M(n, axis) = std::sinh(length);
    return M;
}

Eigen::MatrixXd sl2_to_so21(const Eigen::Matrix2d& A) {
    // A acts on symmetric X = [[t + x, y], [y, t - x]] by X -> A X A^T, preserving det X = t^2 - x^2 - y^2.
    const Eigen::Matrix2d basis[3] = {(Eigen::Matrix2d() << 1, 0, 0, -1).finished(),
                                      (Eigen::Matrix2d() << 0, 1, 1, 0).finished(),
                                      Eigen::Matrix2d::Identity()};
    Eigen::MatrixXd M(3, 3);
    for (int i = 0; i < 3; ++i) {
        const Eigen::Matrix2d X = A * basis[i] * A.transpose();
        M(0, i) = 0.5 * (X(0, 0) - X(1, 1));
        M(1, i) = X(0, 1);
        M(2, i) = 0.5 * (X(0, 0) + X(1, 1));
    }
    return M;
}

} // namespace hypspec
