#include "surgery/blowdown.hpp"

#include <numeric>
#include <sstream>

namespace surgery {

std::vector<Int> hj_expansion(const Int& p, const Int& q) {
    if (p < 1 || q < 1 || p <= q || gcd(p, q) != 1)
        throw std::invalid_argument("hj_expansion needs coprime p > q >= 1");
    Int num = p * p, den = p * q - 1;
    // den >= 1 since p >= 2. Ceiling division keeps every partial quotient
    // >= 2 because num/den > 1 at each stage.
    std::vector<Int> rs;
    while (den > 0) {
        Int r = (num + den - 1) / den;
        rs.push_back(r);
        Int next = r * den - num;
        num = den;
        den = next;
    }
    return rs;
}

Rat cf_value(const std::vector<Int>& rs) {
    if (rs.empty()) throw std::invalid_argument("empty continued fraction");
    Rat v = rs.back();
    for (size_t i = rs.size() - 1; i-- > 0;) v = Rat(rs[i]) - 1 / v;
    return v;
}

plumbing make_plumbing(const Int& p, const Int& q) {
    plumbing c;
    c.p = p;
    c.q = q;
    c.rs = hj_expansion(p, q);
    return c;
}

std::vector<Int> weights(const plumbing& c) {
    std::vector<Int> w;
    w.reserve(c.rs.size());
    for (const auto& r : c.rs) w.push_back(-r);
    return w;
}

int_matrix chain_matrix(const plumbing& c) {
    int k = c.length();
    int_matrix m(k, k);
    for (int i = 0; i < k; ++i) {
        m.at(i, i) = -c.rs[static_cast<size_t>(i)];
        if (i + 1 < k) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    return m;
}

std::string boundary_lens(const plumbing& c) {
    Int mod = c.p * c.p;
    Int r = (1 - c.p * c.q) % mod;
    if (r < 0) r += mod;
    return "L(" + mod.str() + "," + r.str() + ")";
}

manifold blowdown_invariants(const manifold& m, int k) {
    if (k < 0) throw std::invalid_argument("blowdown length must be >= 0");
    manifold r = m;
    r.e = m.e - k;
    r.sigma = m.sigma + k;
    // b2+ preservation is an identity here; recompute both sides to catch
    // invalid inputs (e.g. dropping more classes than b2- provides).
    if (b2plus(r) != b2plus(m)) throw check_error("blowdown changed b2+");
    (void)b2minus(r);
    return r;
}

void validate_embedding(const lattice& l, const plumbing& c, const embedding& emb) {
    int k = c.length();
    if (static_cast<int>(emb.u.size()) != k)
        throw check_error("embedding has " + std::to_string(emb.u.size()) +
                          " classes, chain has " + std::to_string(k) + " vertices");
    int_matrix m = chain_matrix(c);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Int got = pair(l, emb.u[static_cast<size_t>(i)], emb.u[static_cast<size_t>(j)]);
            if (got != m.at(i, j)) {
                std::ostringstream msg;
                msg << "embedding Gram mismatch at (u" << i + 1 << ",u" << j + 1 << "): got "
                    << got.str() << ", chain requires " << m.at(i, j).str();
                throw check_error(msg.str());
            }
        }
}

descent_report descent_check(const lattice& l, const divisor& L, const plumbing& c,
                             const embedding& emb) {
    validate_embedding(l, c, emb);
    int k = c.length();
    descent_report rep;
    rep.pairings.reserve(static_cast<size_t>(k));
    rep.all_plus = rep.all_minus = true;
    for (int i = 0; i < k; ++i) {
        Int v = pair(l, L, emb.u[static_cast<size_t>(i)]);
        rep.pairings.push_back(v);
        Int want = c.rs[static_cast<size_t>(i)] - 2;
        if (v != want) rep.all_plus = false;
        if (v != -want) rep.all_minus = false;
    }
    rat_matrix minv = inverse(chain_matrix(c));
    Rat sq = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sq += Rat(rep.pairings[static_cast<size_t>(i)]) * minv.at(i, j) *
                  Rat(rep.pairings[static_cast<size_t>(j)]);
    rep.restricted_square = sq;
    rep.square_ok = (sq == Rat(-k));
    return rep;
}

} // namespace surgery
