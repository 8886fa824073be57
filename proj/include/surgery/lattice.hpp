#pragma once

#include "surgery/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surgery {

// A divisor class is a coefficient vector over the generators of a lattice.
// Classes carry no back-pointer; every operation takes the lattice explicitly
// and rejects dimension mismatches.
using divisor = std::vector<Int>;

enum class surface_kind {
    blowup,         // CP^2 # k CPbar^2: generators h, e1..ek, gram diag(+1,-1,...,-1)
    ruled,          // Hirzebruch F_n: generators Cinf, F, gram [[n,1],[1,0]]
    abstract_gram,  // user-declared generators and pairings (possibly degenerate)
};

struct lattice {
    surface_kind kind = surface_kind::abstract_gram;
    int param = 0;                        // k for blowup, n for ruled
    std::vector<std::string> gens;
    std::vector<Int> gram;                // symmetric, row-major rank x rank
    std::optional<divisor> K;             // canonical class, when the model has one

    int rank() const { return static_cast<int>(gens.size()); }
    const Int& g(int i, int j) const { return gram[static_cast<size_t>(i) * gens.size() + j]; }
    Int& g(int i, int j) { return gram[static_cast<size_t>(i) * gens.size() + j]; }
    // -1 when absent.
    int gen_index(const std::string& name) const;
};

// CP^2 blown up k times. h is the line class; the canonical class is
// -3h + e1 + ... + ek.
lattice make_blowup(int k);

// The Hirzebruch surface F_n in the basis (Cinf, F) where Cinf is the
// positive section (Cinf^2 = n) and F the fiber. K = -2Cinf + (n-2)F.
lattice make_ruled(int n);

// Zero-initialized Gram; fill pairings with set_pair. No canonical class.
lattice make_abstract(std::vector<std::string> gens);

void set_pair(lattice& l, const std::string& g1, const std::string& g2, const Int& v);

// Appends a fresh exceptional generator of square -1, orthogonal to
// everything; the canonical class (if present) gains +e_new. Existing
// divisors extend by a zero coefficient (see pad).
lattice blow_up(const lattice& l, const std::string& name);

divisor pad(const divisor& d, int rank);

Int pair(const lattice& l, const divisor& x, const divisor& y);

divisor canonical(const lattice& l);   // throws when the lattice has none

divisor add(const divisor& x, const divisor& y);
divisor sub(const divisor& x, const divisor& y);
divisor scale(const Int& c, const divisor& x);
bool is_zero(const divisor& d);

// Adjunction: g(D) = (K.D + D.D)/2 + 1, exact rational (integral for classes
// represented by embedded curves; callers decide whether to demand that).
Rat genus(const lattice& l, const divisor& d);

// K is characteristic: x.x = K.x mod 2 for all x; checking generators
// suffices by bilinearity.
bool is_characteristic(const lattice& l, const divisor& d);

// "4h-2e1-e2", "-Cinf+3F", "0". Monomial grammar: sign, optional positive
// integer, generator name. No '*'.
divisor parse_class(const lattice& l, const std::string& text);
std::string show_class(const lattice& l, const divisor& d);

// Topological bookkeeping for closed oriented 4-manifolds, tracked through
// connected sums, blow-ups and rational blowdowns.
struct manifold {
    Int e;              // Euler characteristic
    Int sigma;          // signature
    int b1 = 0;
    bool odd = true;    // intersection form parity (odd = non-spin)
    bool sc = false;    // simple connectivity, asserted by the user with a note
    std::string sc_note;
};

Int b2(const manifold& m);
Int b2plus(const manifold& m);
Int b2minus(const manifold& m);
Int c1sq(const manifold& m);   // 3*sigma + 2*e

manifold connected_sum(const manifold& x, const manifold& y);
manifold blow_up_invariants(const manifold& x);   // (e+1, sigma-1), odd

// Freedman label for a simply connected odd-form manifold with b1 = 0:
// "CP2#7CP2bar", "3CP2#18CP2bar". Everything else is refused rather than
// guessed.
std::string homeo_label(const manifold& m);

} // namespace surgery
