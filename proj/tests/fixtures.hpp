#pragma once

// The two worked rational-blowdown certificates that the presets, unit
// tests and the acceptance suite all share: an 11-sphere C(11,1) chain in
// CP^2 # 17 CPbar^2 and a 12-sphere C(23,11) chain in CP^2 # 18 CPbar^2,
// together with the externally quoted inverse-column vectors and functional
// coefficient tables the computed results are compared against.

#include "surgery/blowdown.hpp"
#include "surgery/certify.hpp"

#include <vector>

namespace fixtures {

using surgery::divisor;
using surgery::embedding;
using surgery::Int;
using surgery::lattice;
using surgery::linform;
using surgery::plumbing;
using surgery::Rat;

struct chain_case {
    lattice lat;
    divisor s;          // the long sphere carrying the chain head or tail
    plumbing chain;
    embedding emb;
};

// CP^2 # 17 CPbar^2, s = 8h-4e1-2e2-..-2e12-e13-2e14-..-2e17, chain
// C(11,1) embedded as u1 = s, u_j = e_{14-j} - e_{15-j} for j = 2..10.
inline chain_case case1() {
    chain_case c;
    c.lat = surgery::make_blowup(17);
    c.s = surgery::parse_class(c.lat,
                               "8h-4e1-2e2-2e3-2e4-2e5-2e6-2e7-2e8-2e9-2e10-2e11-2e12-e13"
                               "-2e14-2e15-2e16-2e17");
    c.chain = surgery::make_plumbing(11, 1);
    c.emb.u.push_back(c.s);
    for (int j = 2; j <= 10; ++j) {
        std::string hi = "e" + std::to_string(14 - j), lo = "e" + std::to_string(15 - j);
        c.emb.u.push_back(surgery::parse_class(c.lat, hi + "-" + lo));
    }
    return c;
}

// CP^2 # 18 CPbar^2, s' = s - e18 after one more blow-up, chain C(23,11)
// embedded with the nodal sphere t = e1-e2-e4 first and s' at slot 11.
inline chain_case case2() {
    chain_case c;
    c.lat = surgery::make_blowup(18);
    c.s = surgery::parse_class(c.lat,
                               "8h-4e1-2e2-2e3-2e4-2e5-2e6-2e7-2e8-2e9-2e10-2e11-2e12-e13"
                               "-2e14-2e15-2e16-2e17-e18");
    c.chain = surgery::make_plumbing(23, 11);
    c.emb.u.push_back(surgery::parse_class(c.lat, "e1-e2-e4"));
    for (int j = 2; j <= 10; ++j) {
        std::string lo = "e" + std::to_string(j + 2), hi = "e" + std::to_string(j + 3);
        c.emb.u.push_back(surgery::parse_class(c.lat, lo + "-" + hi));
    }
    c.emb.u.push_back(c.s);
    c.emb.u.push_back(surgery::parse_class(c.lat, "e14-e18"));
    return c;
}

// Externally quoted exact columns of the chain-Gram inverses.
// Case 1, column 1 of M^-1: -1/121 * (10, 9, ..., 1).
inline std::vector<Rat> case1_inverse_col1() {
    std::vector<Rat> v;
    for (int i = 10; i >= 1; --i) v.push_back(Rat(-i, 121));
    return v;
}

// Case 2, columns 1 and 11 of M'^-1.
inline std::vector<Rat> case2_inverse_col1() {
    static const int n[] = {252, 227, 202, 177, 152, 127, 102, 77, 52, 27, 2, 1};
    std::vector<Rat> v;
    for (int x : n) v.push_back(Rat(-x, 529));
    return v;
}

inline std::vector<Rat> case2_inverse_col11() {
    static const int n[] = {2, 6, 10, 14, 18, 22, 26, 30, 34, 38, 42, 21};
    std::vector<Rat> v;
    for (int x : n) v.push_back(Rat(-x, 529));
    return v;
}

// Builds a linear form scale * (c_a * a + c_1 b_1 + ... + c_k b_k) from an
// integer coefficient table.
inline linform make_form(const Rat& scale, Int ca, const std::vector<Int>& cb) {
    linform f;
    f.a = scale * ca;
    for (const Int& c : cb) f.b.push_back(scale * c);
    return f;
}

// Quoted functional tables. Case 1 restriction: -11/121 * (80a - 40b1
// - 20b2 - 20b3 - 19b4..b13 - 20b14..b17); complement: 1/121 * (517a
// - 319b1 - 99b2 - 99b3 - 88b4..b13 - 99b14..b17).
inline linform case1_restricted_form() {
    std::vector<Int> cb = {-40, -20, -20, -19, -19, -19, -19, -19, -19,
                           -19, -19, -19, -19, -20, -20, -20, -20};
    return make_form(Rat(-11, 121), 80, cb);
}

inline linform case1_exotic_form() {
    std::vector<Int> cb = {-319, -99, -99, -88, -88, -88, -88, -88, -88,
                           -88,  -88, -88, -88, -99, -99, -99, -99};
    return make_form(Rat(1, 121), 517, cb);
}

// Case 2 restriction: -1/529 * (4048a - 1748b1 - 1288b2 - 1012b3
// - 989b4..b13 - 759b14 - 1012b15..b17 - 759b18); complement: 1/529 *
// (2461a - 1219b1 - 759b2 - 483b3 - 460b4..b13 - 230b14 - 483b15..b17
// - 230b18).
inline linform case2_restricted_form() {
    std::vector<Int> cb = {-1748, -1288, -1012, -989, -989, -989,  -989,  -989,  -989,
                           -989,  -989,  -989,  -989, -759, -1012, -1012, -1012, -759};
    return make_form(Rat(-1, 529), 4048, cb);
}

inline linform case2_exotic_form() {
    std::vector<Int> cb = {-1219, -759, -483, -460, -460, -460, -460, -460, -460,
                           -460,  -460, -460, -460, -230, -483, -483, -483, -230};
    return make_form(Rat(1, 529), 2461, cb);
}

} // namespace fixtures
