#pragma once

#include "surgery/lattice.hpp"
#include "surgery/matrix.hpp"

namespace surgery {

// Hirzebruch-Jung expansion of p^2/(pq-1) for coprime p > q >= 1:
// returns [r_k, ..., r_1], all r_i >= 2, where
//   p^2/(pq-1) = r_k - 1/(r_{k-1} - 1/(... - 1/r_1)).
// The recursion is r = ceil(num/den), continue with (den, r*den - num).
std::vector<Int> hj_expansion(const Int& p, const Int& q);

// Value of a continued fraction [r_k, ..., r_1] under the nesting above.
Rat cf_value(const std::vector<Int>& rs);

// The linear plumbing C_{p,q}: spheres of squares -r_k, ..., -r_1 (left to
// right, as drawn), intersecting consecutively once. Its boundary is the
// lens space L(p^2, 1-pq).
struct plumbing {
    Int p, q;
    std::vector<Int> rs;   // [r_k, ..., r_1]
    int length() const { return static_cast<int>(rs.size()); }
};

plumbing make_plumbing(const Int& p, const Int& q);

std::vector<Int> weights(const plumbing& c);          // [-r_k, ..., -r_1]
int_matrix chain_matrix(const plumbing& c);           // tridiagonal Gram
// "L(p^2,r)" with r the least non-negative residue of 1 - p*q mod p^2.
std::string boundary_lens(const plumbing& c);

// Rational blowdown of a k-vertex negative-definite chain: e drops by k,
// sigma rises by k, b2+ and b1 are untouched, parity stays odd.
manifold blowdown_invariants(const manifold& m, int k);

// A declared embedding of the chain into an ambient lattice: vertex i is
// represented by the class u[i]. Never searched for, only validated:
// the Gram of the u-classes must equal chain_matrix exactly.
struct embedding {
    std::vector<divisor> u;
};

void validate_embedding(const lattice& l, const plumbing& c, const embedding& emb);

// The descent conditions a class L must satisfy to induce a Seiberg-Witten
// basic class downstairs:
//   - L.u_i = r_i - 2 for every vertex i (or the all-negated variant);
//   - the restriction of L to the plumbing has square -k, computed through
//     the dual basis: (L|_C)^2 = kappa^T M^{-1} kappa with kappa_i = L.u_i.
struct descent_report {
    std::vector<Int> pairings;   // L.u_i in chain order
    bool all_plus = false;       // L.u_i == r_i - 2 for all i
    bool all_minus = false;      // L.u_i == -(r_i - 2) for all i
    Rat restricted_square;
    bool square_ok = false;      // restricted_square == -length
};

descent_report descent_check(const lattice& l, const divisor& L, const plumbing& c,
                             const embedding& emb);

} // namespace surgery
