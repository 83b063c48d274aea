#pragma once

#include <vector>

#include "para_racah/exact.hpp"
#include "para_racah/parameters.hpp"
#include "para_racah/recurrence.hpp"

namespace pararacah {

// Quadratic bi-lattice: lambda_{2s} = -(s+a)^2 and lambda_{2s+1} = -(s+c)^2,
// with the c-family running one index shorter for even N. Nodes are stored in
// interleaved index order (a-family at even slots); sorted_order is a permutation into
// increasing lambda.
struct BiLattice {
    enum class Family { a_family, c_family };
    struct Node {
        Family family;
        int s;
        Rational lambda;
    };

    std::vector<Node> nodes;
    std::vector<int> sorted_order;

    int size() const { return static_cast<int>(nodes.size()); }
};

const char* family_name(BiLattice::Family f);

BiLattice bi_lattice(const ParamSet& params); // throws CollidingNodes on a degenerate grid

// Discrete orthogonality weights aligned with the bi-lattice node order.
// Closed form: the parity-specific product displays (valid for all alpha,
// including the endpoints where one family's weights vanish).
std::vector<Rational> weights_closed_form(const ParamSet& params);

// Spectral formula w_s = u_1...u_N / (P_N(x_s) P'_{N+1}(x_s)) with P_N from
// the recurrence and P'_{N+1} differentiated exactly from the node product.
// Requires 0 < alpha < 1; throws ZeroAtNode when P_N vanishes at a node.
std::vector<Rational> weights_spectral(const ParamSet& params);
std::vector<Rational> weights_spectral(const ParamSet& params, const RecurrenceTable& table);

// Full exact Gram matrix sum_s P_n(x_s) P_m(x_s) w_s.
std::vector<std::vector<Rational>> gram_matrix(const ParamSet& params);
std::vector<std::vector<Rational>> gram_matrix(const ParamSet& params, const RecurrenceTable& table);

struct OrthogonalityReport {
    bool offdiag_zero = false;      // every n != m entry is exactly 0
    bool diag_match = false;        // every diagonal entry equals u_1...u_n exactly
    Rational max_offdiag_abs;       // exact max |gram_{nm}|, n != m
    Rational max_diag_ratio_error;  // exact max |gram_{nn}/(u_1...u_n) - 1|
    int first_bad_row = -1;
    int first_bad_col = -1;

    bool exact() const { return offdiag_zero && diag_match; }
};

OrthogonalityReport orthogonality_check(const ParamSet& params);
OrthogonalityReport orthogonality_check(const ParamSet& params, const RecurrenceTable& table);

// The persymmetric (alpha = 1/2) values of P_N on the grid:
// P_N(x_s)^2 = u_1...u_N with signs alternating along the sorted view.
// The ordering that realizes strict alternation is increasing lambda, with
// sign (-1)^(N-r) at sorted rank r (equivalently (-1)^(r+1) for odd N).
struct PersymmetricNodeValues {
    bool squares_match = false;
    bool alternating_sorted = false;
    int sign_at_top = 0; // sign of P_N at the largest node
};

PersymmetricNodeValues persymmetric_node_values(const ParamSet& params);
PersymmetricNodeValues persymmetric_node_values(const ParamSet& params, const RecurrenceTable& table);

} // namespace pararacah
