#pragma once

#include "surgery/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace surgery {

// Words in the Dehn-twist generators a_1, ..., a_{2g+1} along the standard
// chain of curves on a genus-g surface. Letters are (index, exponent) with
// exponent +1 or -1; tokens read/print as "a3" and "a3^-1".
struct letter {
    int idx = 0;
    int exp = 1;
    bool operator==(const letter& o) const { return idx == o.idx && exp == o.exp; }
};

using word = std::vector<letter>;

word parse_word(const std::string& text, int g);
std::string show_word(const word& w);
word inverse_word(const word& w);
word reduce(word w);   // free reduction
Int exponent_sum(const word& w);

// Relators that are trivial in the mapping class group:
//   H(g) = (a_1 ... a_{2g} a_{2g+1}^2 a_{2g} ... a_1)^2   (hyperelliptic)
//   I(g) = (a_1 ... a_{2g+1})^{2g+2}
word h_relator(int g);
word i_relator(int g);

// Elementary rewriting moves, all provably neutral in the mapping class
// group. Positions are 1-based.
//   HR i     : x y -> (x y x^-1) x          on letters i, i+1
//   HL i     : x y -> y (y^-1 x y)          on letters i, i+1
//   BRAID i  : braid-relation rewrites on letters i, i+1, i+2 for adjacent
//              generators g, h (|g-h| = 1); the six derivable sign patterns
//              g^s h^t g^u with (s,t,u) != (+,-,+), (-,+,-):
//                g  h  g    -> h  g  h        g~ h~ g~ -> h~ g~ h~
//                g  h  g~   -> h~ g  h        g~ h  g  -> h  g  h~
//                g  h~ g~   -> h~ g~ h        g~ h~ g  -> h  g~ h~
//              (x~ denotes x^-1)
//   COMM i   : x y -> y x when |idx(x) - idx(y)| >= 2
//   INS i t  : insert t^-1 t before position i (i may be length+1)
//   CANCEL i : delete letters i, i+1 when they are an inverse pair
struct move {
    enum kind_t { HR, HL, BRAID, COMM, INS, CANCEL } kind = HR;
    int pos = 0;
    letter t{};   // INS only
    bool operator==(const move& o) const {
        return kind == o.kind && pos == o.pos && (kind != INS || t == o.t);
    }
};

move parse_move(const std::string& line, int g);
std::string show_move(const move& m);
word apply_move(const word& w, const move& m, int g);

// A replayable rewriting certificate: start word, move list, end word.
// File format, line oriented with '#' comments:
//   genus 2
//   start a1 a2 a3 a4
//   HR 3
//   ...
//   end a4^-1 a1 a3 a4 ...
struct derivation {
    int g = 0;
    word start, end;
    std::vector<move> moves;
};

derivation parse_derivation(std::istream& in);
derivation parse_derivation_file(const std::string& path);

// Replays the moves from start; throws check_error naming the first failing
// step if the replay diverges or the final word differs from end. Also
// checks that start and end act identically on homology.
void verify_derivation(const derivation& d);

// Homology classes of the chain curves in Z^{2g} with the standard
// symplectic basis x_1, y_1, ..., x_g, y_g:
//   c_{2j-1} = x_j (j <= g),   c_{2g+1} = x_1 + ... + x_g,
//   c_{2j}   = y_j - y_{j+1} (j < g),   c_{2g} = y_g.
// Validated at construction: consecutive curves pair to +-1, distant ones
// to 0, none are zero.
struct chain_homology {
    int g = 0;
    std::vector<std::vector<Int>> c;   // c[i-1] is the class of a_i
};

chain_homology standard_chain(int g);

// <u,v> under the standard symplectic form (x_i, y_i dual pairs).
Int sympl(const std::vector<Int>& u, const std::vector<Int>& v);

// The transvection T_c(x) = x + sign * <x,c> c as a 2g x 2g matrix. The
// default sign (+1) is the library's positive-twist convention; tests pin
// it, and the opposite convention is available for comparison.
int_matrix transvection(const std::vector<Int>& c, int sign = 1);

// Product of transvections, leftmost letter outermost (so conjugates behave
// as M(w c w^-1) = M(w) M(c) M(w)^-1).
int_matrix word_to_matrix(const word& w, const chain_homology& hom, int sign = 1);

// Classification of a monodromy block as a singular-fiber type. The parser
// peels factors u c u^-1 with positive core letters c off the left of the
// freely reduced word (depth-first over the split point, undoing any
// cancellation between factors). With cores c_1..c_n conjugated by u_1..u_n:
//   n_nodal_spherical: n == g, every class M(u_i) c_i nonzero, pairwise
//                      symplectic pairing 0;
//   lefschetz_nodal:   exactly one core;
//   other:             anything else.
struct block_class {
    enum kind_t { n_nodal_spherical, lefschetz_nodal, other } kind = other;
    int n = 0;
    std::vector<std::vector<Int>> classes;   // deformed vanishing cycles
};

block_class classify_block(const word& w, const chain_homology& hom);

} // namespace surgery
