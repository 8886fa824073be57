#include "surgery/certify.hpp"

#include <sstream>

namespace surgery {

bool linform::is_zero() const {
    if (a != 0) return false;
    for (const auto& v : b)
        if (v != 0) return false;
    return true;
}

static void match_symbols(linform& x, linform& y) {
    size_t n = std::max(x.b.size(), y.b.size());
    x.b.resize(n, Rat(0));
    y.b.resize(n, Rat(0));
}

linform form_add(const linform& x, const linform& y) {
    linform a = x, b = y;
    match_symbols(a, b);
    a.a += b.a;
    for (size_t i = 0; i < a.b.size(); ++i) a.b[i] += b.b[i];
    return a;
}

linform form_sub(const linform& x, const linform& y) {
    return form_add(x, form_scale(Rat(-1), y));
}

linform form_scale(const Rat& c, const linform& x) {
    linform r = x;
    r.a *= c;
    for (auto& v : r.b) v *= c;
    return r;
}

std::string show_form(const linform& f) {
    // Least common denominator, factored out front.
    Int lcd = denominator(f.a);
    for (const auto& v : f.b) lcd = lcm(lcd, denominator(v));
    std::ostringstream body;
    bool first = true;
    auto emit = [&](const Rat& coef, const std::string& sym) {
        if (coef == 0) return;
        Int c = numerator(Rat(coef * lcd));
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) body << "-";
            first = false;
        } else {
            body << (c < 0 ? "-" : "+");
        }
        if (mag != 1) body << mag.str();
        body << sym;
    };
    emit(f.a, "a");
    for (size_t i = 0; i < f.b.size(); ++i) emit(f.b[i], "b" + std::to_string(i + 1));
    if (first) return "0";
    if (lcd == 1) return body.str();
    return "1/" + lcd.str() + "*(" + body.str() + ")";
}

linform pair_with_w(const lattice& l, const divisor& d) {
    if (l.kind != surface_kind::blowup)
        throw std::invalid_argument("symbolic pairing with w needs a blow-up lattice");
    if (static_cast<int>(d.size()) != l.rank())
        throw std::invalid_argument("pair_with_w: class/lattice rank mismatch");
    linform f;
    f.a = d[0];
    f.b.assign(static_cast<size_t>(l.param), Rat(0));
    // (sum d_i e_i).(-sum b_j e_j) = + sum d_i b_i  since e_i^2 = -1.
    for (int i = 1; i <= l.param; ++i) f.b[static_cast<size_t>(i - 1)] = d[static_cast<size_t>(i)];
    return f;
}

linform canonical_dot_w(const lattice& l) {
    return pair_with_w(l, canonical(l));
}

linform restrict_and_pair(const lattice& l, const divisor& L, const plumbing& c,
                          const embedding& emb) {
    validate_embedding(l, c, emb);
    int k = c.length();
    std::vector<Int> kappa;
    std::vector<linform> omega;
    kappa.reserve(static_cast<size_t>(k));
    omega.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        kappa.push_back(pair(l, L, emb.u[static_cast<size_t>(i)]));
        omega.push_back(pair_with_w(l, emb.u[static_cast<size_t>(i)]));
    }
    rat_matrix minv = inverse(chain_matrix(c));
    linform out;
    out.b.assign(static_cast<size_t>(l.param), Rat(0));
    for (int i = 0; i < k; ++i) {
        if (kappa[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < k; ++j) {
            Rat coef = Rat(kappa[static_cast<size_t>(i)]) * minv.at(i, j);
            if (coef == 0) continue;
            out = form_add(out, form_scale(coef, omega[static_cast<size_t>(j)]));
        }
    }
    return out;
}

linform exotic_functional(const lattice& l, const divisor& L, const plumbing& c,
                          const embedding& emb) {
    return form_sub(pair_with_w(l, L), restrict_and_pair(l, L, c, emb));
}

positivity_report positivity_over_cone(const linform& f) {
    positivity_report rep;
    int k = f.symbols();
    rep.vertex_values.reserve(static_cast<size_t>(k) + 1);
    rep.vertex_values.push_back(f.a);   // origin vertex: a = 1, all b = 0
    for (int m = 1; m <= k; ++m) {
        Rat v = f.a;
        for (int i = 0; i < m; ++i) v += f.b[static_cast<size_t>(i)] / m;
        rep.vertex_values.push_back(v);
    }
    for (size_t i = 0; i < rep.vertex_values.size(); ++i)
        if (rep.vertex_values[i] < 0) {
            rep.witness = static_cast<int>(i);
            return rep;
        }
    rep.positive = !f.is_zero();
    return rep;
}

sw_state sw_trivial() {
    sw_state s;
    s.mode = sw_state::vectors;
    s.classes.push_back({});
    return s;
}

sw_state sw_blowup(const sw_state& s, const std::string& ename) {
    if (s.mode != sw_state::vectors)
        throw std::invalid_argument("sw blow-up formula needs an explicit class set");
    sw_state r;
    r.mode = sw_state::vectors;
    for (const auto& cls : s.classes) {
        if (cls.count(ename))
            throw std::invalid_argument("sw blow-up symbol already in use: " + ename);
        auto plus = cls;
        plus[ename] = 1;
        auto minus = cls;
        minus[ename] = -1;
        r.classes.push_back(plus);
        r.classes.push_back(minus);
    }
    return r;
}

sw_state sw_taubes(const Int& c1sq) {
    sw_state s;
    s.mode = sw_state::abstract_k;
    s.ksq = c1sq;
    return s;
}

sw_state sw_descend(const Int& new_c1sq) {
    sw_state s;
    s.mode = sw_state::abstract_k;
    s.ksq = new_c1sq;
    return s;
}

sw_state sw_sum_trivial(int m) {
    if (m < 2)
        throw std::invalid_argument("SW vanishing for connected sums needs at least two summands");
    sw_state s;
    s.mode = sw_state::empty;
    return s;
}

static std::string show_sw_class(const std::map<std::string, Int>& cls) {
    if (cls.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [name, c] : cls) {
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? "-" : "+";
        }
        if (mag != 1) s += mag.str();
        s += name;
    }
    return s.empty() ? "0" : s;
}

minimality_report sw_minimality(const sw_state& s) {
    minimality_report rep;
    switch (s.mode) {
    case sw_state::empty:
        // No basic classes, no (-1)-sphere certificate: vacuously minimal
        // by this criterion.
        rep.minimal = true;
        return rep;
    case sw_state::abstract_k: {
        // Pairs are {K, -K}: (K - (-K))^2 = 4 K^2.
        if (4 * s.ksq == -4) {
            rep.minimal = false;
            rep.witness = "(Kbar-(-Kbar))^2 = 4*Kbar^2 = -4";
        } else {
            rep.minimal = true;
        }
        return rep;
    }
    case sw_state::vectors: {
        for (size_t i = 0; i < s.classes.size(); ++i)
            for (size_t j = i + 1; j < s.classes.size(); ++j) {
                // (K - K')^2 with orthogonal square -1 symbols.
                Int sq = 0;
                std::map<std::string, Int> diff = s.classes[i];
                for (const auto& [name, c] : s.classes[j]) diff[name] -= c;
                for (const auto& [name, c] : diff) sq -= c * c;
                if (sq == -4) {
                    rep.minimal = false;
                    rep.witness = "(" + show_sw_class(s.classes[i]) + ") - (" +
                                  show_sw_class(s.classes[j]) + ") has square -4";
                    return rep;
                }
            }
        rep.minimal = true;
        return rep;
    }
    }
    return rep;
}

std::string show_sw(const sw_state& s) {
    switch (s.mode) {
    case sw_state::empty:
        return "{}";
    case sw_state::abstract_k:
        return "{+Kbar,-Kbar} Kbar^2=" + s.ksq.str();
    case sw_state::vectors: {
        std::vector<std::string> items;
        items.reserve(s.classes.size());
        for (const auto& cls : s.classes) items.push_back(show_sw_class(cls));
        std::sort(items.begin(), items.end());
        std::string out = "{";
        for (size_t i = 0; i < items.size(); ++i) {
            if (i) out += ",";
            out += items[i];
        }
        out += "}";
        return out;
    }
    }
    return "{}";
}

} // namespace surgery
