#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "mgdiv/error_minmax.hpp"
#include "mgdiv/errors.hpp"

namespace mgdiv {

namespace {

using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b) {
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Greedy (Edmonds) vertex of the base polytope B(F) minimizing <x, .>:
// marginals along the ground set sorted by ascending x (ties by index).
Vec greedy_vertex(int n, const std::function<Rat(unsigned long long)>& F, const Vec& x) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
    Vec v(n);
    unsigned long long mask = 0;
    Rat prev;
    for (int i : order) {
        mask |= 1ULL << i;
        Rat cur = F(mask);
        v[i] = cur - prev;
        prev = cur;
    }
    return v;
}

// Affine minimizer of ||sum alpha_i corral_i||^2 subject to sum alpha = 1,
// via the KKT system [G 1; 1^T 0] [alpha; mu] = [0; 1] solved exactly.
// Returns false if the system is singular (affinely dependent corral).
bool affine_minimizer(const std::vector<Vec>& corral, Vec& alpha) {
    const int k = static_cast<int>(corral.size());
    std::vector<Vec> a(k + 1, Vec(k + 2));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = dot(corral[i], corral[j]);
        a[i][k] = Rat(1);
        a[i][k + 1] = Rat();
    }
    for (int j = 0; j < k; ++j) a[k][j] = Rat(1);
    a[k][k] = Rat();
    a[k][k + 1] = Rat(1);

    const int dim = k + 1;
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = col; row < dim; ++row)
            if (!a[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) return false;
        std::swap(a[col], a[pivot]);
        Rat inv = Rat(1) / a[col][col];
        for (int j = col; j <= dim; ++j) a[col][j] *= inv;
        for (int row = 0; row < dim; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rat f = a[row][col];
            for (int j = col; j <= dim; ++j) a[row][j] -= f * a[col][j];
        }
    }
    alpha.assign(k, Rat());
    for (int i = 0; i < k; ++i) alpha[i] = a[i][dim];
    return true;
}

} // namespace

unsigned long long min_norm_smallest_minimizer(
    int n, const std::function<Rat(unsigned long long)>& F) {
    require(n >= 1 && n <= 63, errc::ground_set_too_large,
            "min-norm solver supports 1..63 elements");
    require(F(0).is_zero(), errc::malformed_input, "min-norm solver needs F(empty) = 0");

    std::vector<Vec> corral;
    Vec lambda;
    Vec x = greedy_vertex(n, F, Vec(n));
    corral.push_back(x);
    lambda.push_back(Rat(1));

    int guard = 0;
    for (;;) {
        require(++guard <= 100000, errc::internal_invariant,
                "min-norm point iteration did not terminate");
        Vec q = greedy_vertex(n, F, x);
        if (dot(x, q) >= dot(x, x)) break; // Wolfe optimality criterion, exact
        bool dup = false;
        for (auto& v : corral)
            if (v == q) { dup = true; break; }
        require(!dup, errc::internal_invariant, "min-norm corral repeated a vertex");
        corral.push_back(q);
        lambda.push_back(Rat());

        // Minor cycle: shrink the corral until the affine minimizer is a
        // convex combination.
        for (;;) {
            require(++guard <= 100000, errc::internal_invariant,
                    "min-norm minor cycle did not terminate");
            Vec alpha;
            require(affine_minimizer(corral, alpha), errc::internal_invariant,
                    "min-norm corral became affinely dependent");
            bool interior = true;
            for (auto& av : alpha)
                if (!av.is_positive()) { interior = false; break; }
            if (interior) {
                lambda = alpha;
                break;
            }
            // Step towards alpha until the first coefficient hits zero.
            Rat theta(1);
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i].is_positive()) continue;
                Rat t = lambda[i] / (lambda[i] - alpha[i]);
                theta = min(theta, t);
            }
            for (std::size_t i = 0; i < alpha.size(); ++i)
                lambda[i] = theta * alpha[i] + (Rat(1) - theta) * lambda[i];
            std::vector<Vec> keep_c;
            Vec keep_l;
            for (std::size_t i = 0; i < lambda.size(); ++i)
                if (lambda[i].is_positive()) {
                    keep_c.push_back(std::move(corral[i]));
                    keep_l.push_back(lambda[i]);
                }
            corral = std::move(keep_c);
            lambda = std::move(keep_l);
        }
        x.assign(n, Rat());
        for (std::size_t i = 0; i < corral.size(); ++i)
            for (int j = 0; j < n; ++j) x[j] += lambda[i] * corral[i][j];
    }

    unsigned long long mask = 0;
    for (int i = 0; i < n; ++i)
        if (x[i].is_negative()) mask |= 1ULL << i;
    return mask;
}

} // namespace mgdiv
