#include "hypspec/exterior.hpp"

#include "hypspec/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hypspec {

std::vector<std::vector<int>> exterior_basis(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int k = p - 1;
        while (k >= 0 && idx[k] == n - p + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int m = k + 1; m < p; ++m) idx[m] = idx[m - 1] + 1;
    }
    return out;
}

namespace {

// Sign of the permutation sorting `v` (entries distinct), computed by counting inversions.
int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) sign = -sign;
    std::sort(v.begin(), v.end());
    return sign;
}

} // namespace

Eigen::MatrixXd exterior_action(int n, int p, const Eigen::MatrixXd& A) {
    const auto basis = exterior_basis(n, p);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& I = basis[col];
        for (int k = 0; k < p; ++k)
            for (int j = 0; j < n; ++j) {
                const double a = A(j, I[k]);
                if (a == 0.0) continue;
                std::vector<int> J = I;
                J[k] = j;
                if (std::find(I.begin(), I.end(), j) != I.end() && j != I[k]) continue;
                const int sign = sort_sign(J);
                M(index.at(J), col) += sign * a;
            }
    }
    return M;
}

Eigen::MatrixXd rotation_generator(int n, int i, int j) {
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
    R(j, i) = 1.0;
    R(i, j) = -1.0;
    return R;
}

double normalized_killing(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    // The Killing form of so(n,1) is a multiple of tr(XY); tr(h0 h0) = 2.
    return (X * Y).trace() / 2.0;
}

SoN1RootData so_n1_root_data(int n) {
    if (n < 2) throw DomainError("so(n,1) root data requires n >= 2");
    SoN1RootData out;
    const int N = n + 1;
    out.h0 = Eigen::MatrixXd::Zero(N, N);
    out.h0(0, n) = out.h0(n, 0) = 1.0;
    for (int r = 1; r < n; ++r) {
        Eigen::MatrixXd X = Eigen::MatrixXd::Zero(N, N);
        X(r, 0) = 1.0;
        X(0, r) = -1.0;
        X(r, n) = -1.0;
        X(n, r) = -1.0;
        out.root_vectors.push_back(X);
        // Cartan involution theta(X) = -X^T; the k-part lives in the upper-left so(n) block.
        Eigen::MatrixXd K = 0.5 * (X - X.transpose());
        const double nrm = std::sqrt(-normalized_killing(K, K));
        out.k_parts.push_back(K.topLeftCorner(n, n) / nrm);
    }
    return out;
}

TauPAction build_tau_p_action(int n, int p) {
    if (n < 2) throw DomainError("tau_p action requires n >= 2");
    if (p < 0 || p > n) throw DomainError("form degree p = " + std::to_string(p) + " outside [0, n]");
    TauPAction t;
    t.n = n;
    t.p = p;
    t.dim_v = int(exterior_basis(n, p).size());
    const auto roots = so_n1_root_data(n);
    for (const auto& K : roots.k_parts) t.y_matrices.push_back(exterior_action(n, p, K));
    t.omega_k = Eigen::MatrixXd::Zero(t.dim_v, t.dim_v);
    t.omega_m = Eigen::MatrixXd::Zero(t.dim_v, t.dim_v);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Eigen::MatrixXd R = exterior_action(n, p, rotation_generator(n, i, j));
            const Eigen::MatrixXd R2 = R * R;
            t.omega_k += R2;
            if (i >= 1) t.omega_m += R2;
        }
    t.y_square_sum = Eigen::MatrixXd::Zero(t.dim_v, t.dim_v);
    for (const auto& Y : t.y_matrices) t.y_square_sum += Y * Y;
    return t;
}

} // namespace hypspec
