#include "hypspec/psi.hpp"

#include "hypspec/error.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <complex>
#include <string>

namespace hypspec {

namespace {

using State = std::vector<cplx>;
namespace ode = boost::numeric::odeint;

struct Trajectory {
    std::vector<double> t;             // decreasing
    std::vector<Eigen::MatrixXcd> F;
};

Trajectory integrate_down(const RadialOperator& op, cplx s, const KernelJet& init, const PsiConfig& cfg,
                          const std::vector<double>& xs) {
    const int dv = op.tau.dim_v;
    const int nn = dv * dv;
    // State (F, t F') in the variable x = -log t.
    State y(2 * nn);
    for (int i = 0; i < nn; ++i) {
        y[i] = init.F.data()[i];
        y[nn + i] = cfg.T * init.dF.data()[i];
    }
    auto rhs = [&](const State& u, State& du, double x) {
        const double t = std::exp(-x);
        const Eigen::Map<const Eigen::MatrixXcd> F(u.data(), dv, dv);
        const Eigen::Map<const Eigen::MatrixXcd> G(u.data() + nn, dv, dv);
        const Eigen::MatrixXcd t2F2 = op.scaled_second_derivative(s, t, F, G);
        for (int i = 0; i < nn; ++i) {
            du[i] = -G.data()[i];
            du[nn + i] = -G.data()[i] - t2F2.data()[i];
        }
    };
    Trajectory out;
    auto observer = [&](const State& u, double x) {
        out.t.push_back(std::exp(-x));
        out.F.push_back(Eigen::Map<const Eigen::MatrixXcd>(u.data(), dv, dv));
    };
    auto stepper = ode::make_controlled(1e-300, cfg.rtol, ode::runge_kutta_fehlberg78<State>());
    try {
        ode::integrate_times(stepper, rhs, y, xs.begin(), xs.end(), 1e-3, observer, ode::max_step_checker(200000));
    } catch (const std::exception& e) {
        throw StiffIntegration(std::string("downward integration failed: ") + e.what());
    }
    return out;
}

Eigen::VectorXcd traceless_part(const Eigen::MatrixXcd& F) {
    const int N = int(F.rows());
    Eigen::MatrixXcd T = F - F.trace() / double(N) * Eigen::MatrixXcd::Identity(N, N);
    return Eigen::Map<Eigen::VectorXcd>(T.data(), T.size());
}

struct LogFit {
    double slope;
    double rms;
};

LogFit loglog_fit(const std::vector<double>& t, const std::vector<double>& v) {
    const std::size_t n = t.size();
    if (n < 3) throw FitFailure("too few samples in the fit window");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(t[i]);
        my += std::log(v[i]);
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (std::log(t[i]) - mx) * (std::log(t[i]) - mx);
        sxy += (std::log(t[i]) - mx) * (std::log(v[i]) - my);
    }
    const double slope = sxy / sxx;
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::log(v[i]) - my - slope * (std::log(t[i]) - mx);
        rss += r * r;
    }
    return {slope, std::sqrt(rss / n)};
}

} // namespace

PsiReport psi_extract(const RadialOperator& op, const FrobeniusKernel& kernel, const PsiConfig& cfg) {
    if (!(cfg.t0 > 0 && cfg.t0 < cfg.T)) throw DomainError("psi extraction requires 0 < t0 < T");
    if (cfg.T < kernel.valid_from) throw TailBoundExceeded("matching point T lies below the series validity threshold");
    const int n = op.n;
    const std::size_t nb = kernel.blocks.size();

    std::vector<double> xs(cfg.samples);
    for (int i = 0; i < cfg.samples; ++i)
        xs[i] = -std::log(cfg.T) + (std::log(cfg.T) - std::log(cfg.t0)) * i / (cfg.samples - 1);

    std::vector<Trajectory> traj;
    for (std::size_t j = 0; j < nb; ++j)
        traj.push_back(integrate_down(op, kernel.point.s, kernel_jet(kernel, cfg.T, int(j)), cfg, xs));
    const auto& ts = traj[0].t;
    const std::size_t last = ts.size() - 1;
    if (traj[0].t.size() != xs.size()) throw StiffIntegration("integrator did not reach t0");

    // Pick the combination whose traceless t^{-n} coefficient vanishes. The coefficient is read
    // at two inner points and extrapolated in t^2 to remove the subleading t^{2-n} term.
    PsiReport rep;
    rep.combination.assign(nb, 1.0);
    const std::size_t second = last - std::max<std::size_t>(1, cfg.samples / 16);
    if (nb > 1) {
        const double ta = ts[last], tb = ts[second];
        Eigen::MatrixXcd A(traj[0].F[0].size(), nb);
        for (std::size_t j = 0; j < nb; ++j) {
            const Eigen::VectorXcd a = traceless_part(traj[j].F[last]) * std::pow(ta, n);
            const Eigen::VectorXcd b = traceless_part(traj[j].F[second]) * std::pow(tb, n);
            A.col(j) = (a * tb * tb - b * ta * ta) / (tb * tb - ta * ta);
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
        Eigen::VectorXcd c = svd.matrixV().col(nb - 1);
        std::size_t pivot = 0;
        if (std::abs(c(0)) < 1e-8 * c.norm()) c.cwiseAbs().maxCoeff(&pivot);
        c /= c(pivot);
        for (std::size_t j = 0; j < nb; ++j) rep.combination[j] = c(j);
    }

    std::vector<Eigen::MatrixXcd> G(ts.size()), raw(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        G[i] = Eigen::MatrixXcd::Zero(traj[0].F[i].rows(), traj[0].F[i].cols());
        raw[i] = G[i];
        for (std::size_t j = 0; j < nb; ++j) {
            G[i] += rep.combination[j] * traj[j].F[i];
            raw[i] += traj[j].F[i];
        }
    }

    std::vector<double> wt, wg, wr;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] <= cfg.fit_span * cfg.t0 * (1 + 1e-12)) {
            wt.push_back(ts[i]);
            wg.push_back(operator_norm(G[i]));
            wr.push_back(operator_norm(raw[i]));
        }
    const LogFit fg = loglog_fit(wt, wg);
    const LogFit fr = loglog_fit(wt, wr);
    rep.singularity_exponent = -fg.slope;
    rep.raw_exponent = -fr.slope;
    rep.fit_residual = fg.rms;
    if (!std::isfinite(fg.slope) || fg.rms > cfg.fit_tolerance)
        throw FitFailure("power-law fit near t0 failed (rms " + std::to_string(fg.rms) + ")");

    // psi = lim vol t^{n-2} G(t); extrapolate with a {1, t, t^2} model through three inner points.
    const double vol = unit_sphere_area(n);
    const std::size_t third = second - (last - second);
    const std::size_t idx[3] = {last, second, third};
    Eigen::Matrix3d V;
    for (int k = 0; k < 3; ++k) V.row(k) << 1.0, ts[idx[k]], ts[idx[k]] * ts[idx[k]];
    const Eigen::Vector3d w = V.transpose().inverse().col(0); // weights reproducing the constant term
    rep.psi = Eigen::MatrixXcd::Zero(G[last].rows(), G[last].cols());
    for (int k = 0; k < 3; ++k) rep.psi += w(k) * vol * std::pow(ts[idx[k]], n - 2) * G[idx[k]];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rep.psi);
    rep.sigma_max = svd.singularValues()(0);
    rep.sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
    return rep;
}

} // namespace hypspec
