#ifndef STEVAL_TRANSPORT_HPP
#define STEVAL_TRANSPORT_HPP

#include <vector>

#include "steval/types.hpp"

namespace steval {

// Discrete probability distribution; masses must be >= 0 and sum to 1
// within 1e-9. validate() throws InputError otherwise.
struct Distribution {
    std::vector<double> masses;

    void validate() const;
    int size() const { return static_cast<int>(masses.size()); }
};

// Non-negative finite cost matrix, rows(p) x cols(q), row-major.
struct GroundDistance {
    int rows = 0;
    int cols = 0;
    std::vector<double> costs;

    double at(int i, int j) const { return costs[static_cast<size_t>(i) * cols + j]; }
    static GroundDistance unit(int n);  // 0 on the diagonal, 1 off
};

// Exact optimal value of the balanced transportation problem
//   min sum f_ij d_ij   s.t. row sums = p, col sums = q, f >= 0
// via transportation simplex with northwest-corner start and Bland's rule.
double emd(const Distribution& p, const Distribution& q, const GroundDistance& d);

// Closed form |p1 - q1| for two-point distributions under unit ground distance.
double emd_binary(double p1, double q1);

}  // namespace steval

#endif
