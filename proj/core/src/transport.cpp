#include "steval/transport.hpp"

#include <cmath>
#include <deque>
#include <limits>

namespace steval {

namespace {
constexpr double kMassTol = 1e-9;
constexpr double kPivotTol = 1e-12;
}  // namespace

void Distribution::validate() const {
    double sum = 0.0;
    for (double m : masses) {
        if (!(m >= 0.0) || !std::isfinite(m))
            throw InputError("distribution mass must be finite and non-negative");
        sum += m;
    }
    if (std::fabs(sum - 1.0) > kMassTol)
        throw InputError("distribution is not normalized");
}

GroundDistance GroundDistance::unit(int n) {
    GroundDistance d;
    d.rows = d.cols = n;
    d.costs.assign(static_cast<size_t>(n) * n, 1.0);
    for (int i = 0; i < n; ++i) d.costs[static_cast<size_t>(i) * n + i] = 0.0;
    return d;
}

namespace {

// Transportation simplex state over an n x m problem. Basis cells form a
// spanning tree of the bipartite row/column graph (n + m - 1 cells).
struct Simplex {
    int n, m;
    const GroundDistance& d;
    std::vector<double> flow;    // n*m
    std::vector<char> basic;     // n*m
    std::vector<double> u, v;

    Simplex(const Distribution& p, const Distribution& q, const GroundDistance& dd)
        : n(p.size()), m(q.size()), d(dd),
          flow(static_cast<size_t>(n) * m, 0.0),
          basic(static_cast<size_t>(n) * m, 0),
          u(n), v(m) {
        northwest_corner(p, q);
    }

    size_t idx(int i, int j) const { return static_cast<size_t>(i) * m + j; }

    void northwest_corner(const Distribution& p, const Distribution& q) {
        std::vector<double> supply = p.masses, demand = q.masses;
        int i = 0, j = 0;
        // Advancing one axis at a time keeps exactly n+m-1 basic cells,
        // with zero-flow cells on degenerate steps.
        while (i < n && j < m) {
            double t = std::min(supply[i], demand[j]);
            flow[idx(i, j)] = t;
            basic[idx(i, j)] = 1;
            supply[i] -= t;
            demand[j] -= t;
            if (i == n - 1 && j == m - 1) break;
            if (supply[i] <= demand[j] && i < n - 1) {
                demand[j] -= 0;
                ++i;
            } else if (j < m - 1) {
                ++j;
            } else {
                ++i;
            }
        }
    }

    // Solve u_i + v_j = d_ij over basic cells by walking the basis tree.
    void compute_potentials() {
        std::vector<char> row_done(n, 0), col_done(m, 0);
        u[0] = 0.0;
        row_done[0] = 1;
        std::deque<int> queue{0};  // rows as 0..n-1, cols as n..n+m-1
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            if (node < n) {
                for (int j = 0; j < m; ++j)
                    if (basic[idx(node, j)] && !col_done[j]) {
                        v[j] = d.at(node, j) - u[node];
                        col_done[j] = 1;
                        queue.push_back(n + j);
                    }
            } else {
                int j = node - n;
                for (int i = 0; i < n; ++i)
                    if (basic[idx(i, j)] && !row_done[i]) {
                        u[i] = d.at(i, j) - v[j];
                        row_done[i] = 1;
                        queue.push_back(i);
                    }
            }
        }
    }

    // Bland's rule: lowest-index cell with reduced cost below -kPivotTol.
    bool find_entering(int& ei, int& ej) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                if (basic[idx(i, j)]) continue;
                if (d.at(i, j) - u[i] - v[j] < -kPivotTol) {
                    ei = i;
                    ej = j;
                    return true;
                }
            }
        return false;
    }

    // Unique alternating cycle created by adding (ei,ej): the tree path
    // from row ei to column ej plus the entering edge.
    std::vector<std::pair<int, int>> find_cycle(int ei, int ej) {
        int total = n + m;
        std::vector<int> parent(total, -1);
        std::vector<char> seen(total, 0);
        std::deque<int> queue{ei};
        seen[ei] = 1;
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            if (node == n + ej) break;
            if (node < n) {
                for (int j = 0; j < m; ++j)
                    if (basic[idx(node, j)] && !seen[n + j]) {
                        seen[n + j] = 1;
                        parent[n + j] = node;
                        queue.push_back(n + j);
                    }
            } else {
                int j = node - n;
                for (int i = 0; i < n; ++i)
                    if (basic[idx(i, j)] && !seen[i]) {
                        seen[i] = 1;
                        parent[i] = n + j;
                        queue.push_back(i);
                    }
            }
        }
        // Path col ej -> ... -> row ei, then close with the entering edge.
        std::vector<int> path;
        for (int node = n + ej; node != -1; node = parent[node]) path.push_back(node);
        // path is [col ej, ..., row ei]; cells along the cycle start at the
        // entering cell (row ei, col ej) and alternate sign.
        std::vector<std::pair<int, int>> cycle;
        cycle.emplace_back(ei, ej);
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            int a = path[k], b = path[k + 1];
            int row = a < n ? a : b;
            int col = a < n ? b - n : a - n;
            cycle.emplace_back(row, col);
        }
        return cycle;
    }

    void pivot(int ei, int ej) {
        auto cycle = find_cycle(ei, ej);
        // Odd positions in the cycle lose flow.
        double theta = std::numeric_limits<double>::infinity();
        for (size_t k = 1; k < cycle.size(); k += 2)
            theta = std::min(theta, flow[idx(cycle[k].first, cycle[k].second)]);
        int leave_i = -1, leave_j = -1;
        size_t leave_index = 0;
        for (size_t k = 1; k < cycle.size(); k += 2) {
            auto [i, j] = cycle[k];
            if (flow[idx(i, j)] <= theta + kPivotTol) {
                size_t cell = idx(i, j);
                if (leave_i < 0 || cell < leave_index) {
                    leave_i = i;
                    leave_j = j;
                    leave_index = cell;
                }
            }
        }
        for (size_t k = 0; k < cycle.size(); ++k) {
            auto [i, j] = cycle[k];
            flow[idx(i, j)] += (k % 2 == 0) ? theta : -theta;
        }
        basic[idx(ei, ej)] = 1;
        basic[idx(leave_i, leave_j)] = 0;
        flow[idx(leave_i, leave_j)] = 0.0;
    }

    double solve() {
        // Perfectly degenerate 1x1 and similar shapes still loop fine.
        for (;;) {
            compute_potentials();
            int ei, ej;
            if (!find_entering(ei, ej)) break;
            pivot(ei, ej);
        }
        double total = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) total += flow[idx(i, j)] * d.at(i, j);
        return total;
    }
};

}  // namespace

double emd(const Distribution& p, const Distribution& q, const GroundDistance& d) {
    p.validate();
    q.validate();
    if (p.size() != d.rows || q.size() != d.cols)
        throw InputError("ground distance dimensions do not match distributions");
    for (double c : d.costs)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw InputError("ground distance entries must be finite and non-negative");
    if (p.size() == 0) throw InputError("empty distribution");
    Simplex s(p, q, d);
    double value = s.solve();
    return value < 0.0 ? 0.0 : value;
}

double emd_binary(double p1, double q1) {
    if (!(p1 >= 0.0 && p1 <= 1.0) || !(q1 >= 0.0 && q1 <= 1.0))
        throw InputError("probability out of [0,1]");
    return std::fabs(p1 - q1);
}

}  // namespace steval
