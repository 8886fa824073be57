#pragma once

#include "surgery/lattice.hpp"

namespace surgery {

// Work on the Hirzebruch surface F_n happens in the (Cinf, F) basis of
// make_ruled(n), optionally blown up. C0 = Cinf - nF is the negative section
// (C0^2 = -n).
divisor ruled_C0(const lattice& l);

// Very-ampleness of aC0 + bF on F_n: a > 0 and b > a*n.
bool very_ample(int n, const Int& a, const Int& b);

// Existence of an irreducible curve in |aC0 + bF| on F_n: the fiber (0,1),
// the negative section (1,0), the very ample range, and on F_n with n > 0
// the classes with a > 0, b = a*n (pullbacks of degree-a rational normal
// curves missing C0).
bool irreducible_curve_exists(int n, const Int& a, const Int& b);

// Change of basis identifying F_n # (k+1) CPbar^2 with CP^2 # (k+1) CPbar^2
// for n = 2, 3. The input lattice is make_ruled(n) blown up k times with
// user-named exceptionals; the result lives in the blowup lattice whose
// generators are h, e1 [, e2 for n = 2] followed by the surviving user
// names.
//   n = 2 (k >= 1):  F -> h - e1, Cinf -> 2h - e1 - e2, and the *first*
//                    user exceptional -> h - e1 - e2 (its name disappears);
//   n = 3 (k >= 0):  F -> h - e1, Cinf -> 2h - e1; all user exceptionals
//                    keep their names.
// Both maps send canonical class to canonical class and preserve all
// pairings; to_blowup_lattice gives the target, to_blowup_basis the image
// of a class.
lattice to_blowup_lattice(const lattice& ruled_plus);
divisor to_blowup_basis(const lattice& ruled_plus, const divisor& d);

// The genus-g pencil |2Cinf + kF| on F_n with k = g + 1 - n (requires
// k > 0): base_points = (2Cinf+kF)^2 = 4g + 4 - 4n + ... computed exactly,
// and the adjunction genus of a member, which must come out to g.
struct pencil_info {
    Int k;
    Int base_points;
    divisor member;   // in the ruled basis
    Rat g;
};
pencil_info genus_pencil(int n, int g);

// Invariants of the total space of a relatively minimal genus-g fibration
// over a genus-b base with fiber-sum data Kf2 = K_f^2 and chif = chi_f:
//   c1^2 = Kf2 + 8(g-1)(b-1),  chi(O) = chif + (g-1)(b-1),
//   e = 12 chi - c1^2,         sigma = c1^2 - 8 chi.
struct fibration_data {
    Int Kf2, chif;
    int g = 0, b = 0;
};
struct fibration_totals_t {
    Int c1sq, chiO, e, sigma;
};
fibration_totals_t fibration_totals(const fibration_data& fd);

} // namespace surgery
