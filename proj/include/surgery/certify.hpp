#pragma once

#include "surgery/blowdown.hpp"

#include <map>

namespace surgery {

// A rational linear form in the symbols a, b1, ..., bk describing pairings
// against the symplectic class w = a*h - b1*e1 - ... - bk*ek on a blow-up
// lattice.
struct linform {
    Rat a;
    std::vector<Rat> b;

    int symbols() const { return static_cast<int>(b.size()); }
    bool is_zero() const;
    bool operator==(const linform& o) const { return a == o.a && b == o.b; }
};

linform form_add(const linform& x, const linform& y);
linform form_sub(const linform& x, const linform& y);
linform form_scale(const Rat& c, const linform& x);

// Factored rendering over the least common denominator:
// "1/121*(517a-319b1-...)" or plain "517a-319b1-..." when integral.
std::string show_form(const linform& f);

// D.w as a linear form: for D = d0 h + sum d_i e_i this is d0*a + sum d_i b_i.
linform pair_with_w(const lattice& l, const divisor& d);

// K.w for the blow-up lattice: -3a + b1 + ... + bk.
linform canonical_dot_w(const lattice& l);

// (L|_C).(w|_C) through the dual basis of an embedded chain:
// kappa^T M^{-1} omega with kappa_i = L.u_i (integers) and
// omega_i = w.u_i (linear forms).
linform restrict_and_pair(const lattice& l, const divisor& L, const plumbing& c,
                          const embedding& emb);

// L.w - (L|_C).(w|_C): the pairing on the complement Y.
linform exotic_functional(const lattice& l, const divisor& L, const plumbing& c,
                          const embedding& emb);

// Decides f > 0 on the open cone a > b1 > ... > bk > 0, a > b1 + ... + bk.
// On the slice a = 1 the closure of the constraint polytope is the convex
// hull of the origin and the vertices v_m = (b1 = ... = bm = 1/m, rest 0),
// m = 1..k; a nonnegative linear functional vanishing at an interior point
// would vanish identically, so f > 0 on the open cone iff f >= 0 at every
// vertex and f is not the zero form.
struct positivity_report {
    bool positive = false;
    std::vector<Rat> vertex_values;   // origin first, then m = 1..k
    int witness = -1;                 // index of a negative vertex, or -1
};

positivity_report positivity_over_cone(const linform& f);

// Seiberg-Witten basic-class bookkeeping. Three shapes arise:
//   vectors:    formal sums of exceptional symbols over a fixed base with
//               trivial SW class set (the K3 here); squares are computed
//               from e_i^2 = -1, e_i.e_j = 0.
//   abstract_k: after a rational-blowdown descent the set is {+Kbar, -Kbar}
//               with Kbar^2 recorded (the target's c1^2).
//   empty:      SW-trivial (connected sums with at least two positive-
//               definite summands).
struct sw_state {
    enum mode_t { vectors, abstract_k, empty } mode = vectors;
    std::vector<std::map<std::string, Int>> classes;   // vectors mode
    Int ksq = 0;                                       // abstract_k mode
};

sw_state sw_trivial();                                  // {0}
sw_state sw_blowup(const sw_state& s, const std::string& ename);
sw_state sw_taubes(const Int& c1sq);                    // {+-K}
sw_state sw_descend(const Int& new_c1sq);               // {+-Kbar}
sw_state sw_sum_trivial(int m);                         // m >= 2 -> empty

struct minimality_report {
    bool minimal = false;
    std::string witness;   // description of an offending pair when not minimal
};

// Not minimal iff some pair of basic classes differs by a square -4 class.
minimality_report sw_minimality(const sw_state& s);

std::string show_sw(const sw_state& s);

} // namespace surgery
