#include "surgery/lattice.hpp"

#include <cctype>
#include <sstream>

namespace surgery {

int lattice::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i);
    return -1;
}

lattice make_blowup(int k) {
    if (k < 0) throw std::invalid_argument("blowup count must be >= 0");
    lattice l;
    l.kind = surface_kind::blowup;
    l.param = k;
    l.gens.push_back("h");
    for (int i = 1; i <= k; ++i) l.gens.push_back("e" + std::to_string(i));
    int n = l.rank();
    l.gram.assign(static_cast<size_t>(n) * n, Int(0));
    l.g(0, 0) = 1;
    for (int i = 1; i < n; ++i) l.g(i, i) = -1;
    divisor K(n, Int(0));
    K[0] = -3;
    for (int i = 1; i < n; ++i) K[i] = 1;
    l.K = K;
    return l;
}

lattice make_ruled(int n) {
    if (n < 0) throw std::invalid_argument("ruled surface index must be >= 0");
    lattice l;
    l.kind = surface_kind::ruled;
    l.param = n;
    l.gens = {"Cinf", "F"};
    l.gram = {Int(n), Int(1), Int(1), Int(0)};
    l.K = divisor{Int(-2), Int(n - 2)};
    return l;
}

lattice make_abstract(std::vector<std::string> gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j])
                throw std::invalid_argument("duplicate generator name: " + gens[i]);
    lattice l;
    l.kind = surface_kind::abstract_gram;
    l.gens = std::move(gens);
    l.gram.assign(l.gens.size() * l.gens.size(), Int(0));
    return l;
}

void set_pair(lattice& l, const std::string& g1, const std::string& g2, const Int& v) {
    int i = l.gen_index(g1), j = l.gen_index(g2);
    if (i < 0) throw std::invalid_argument("unknown generator: " + g1);
    if (j < 0) throw std::invalid_argument("unknown generator: " + g2);
    l.g(i, j) = v;
    l.g(j, i) = v;
}

lattice blow_up(const lattice& l, const std::string& name) {
    if (l.gen_index(name) >= 0)
        throw std::invalid_argument("generator already exists: " + name);
    lattice r;
    r.kind = l.kind;
    r.param = l.kind == surface_kind::blowup ? l.param + 1 : l.param;
    r.gens = l.gens;
    r.gens.push_back(name);
    int n = l.rank(), m = r.rank();
    r.gram.assign(static_cast<size_t>(m) * m, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.g(i, j) = l.g(i, j);
    r.g(m - 1, m - 1) = -1;
    if (l.K) {
        divisor K = pad(*l.K, m);
        K[m - 1] = 1;
        r.K = K;
    }
    return r;
}

divisor pad(const divisor& d, int rank) {
    if (static_cast<int>(d.size()) > rank)
        throw std::invalid_argument("class has more coefficients than the lattice has generators");
    divisor r = d;
    r.resize(static_cast<size_t>(rank), Int(0));
    return r;
}

static void require_rank(const lattice& l, const divisor& x, const char* what) {
    if (static_cast<int>(x.size()) != l.rank())
        throw std::invalid_argument(std::string(what) + ": class/lattice rank mismatch");
}

Int pair(const lattice& l, const divisor& x, const divisor& y) {
    require_rank(l, x, "pair");
    require_rank(l, y, "pair");
    Int s = 0;
    int n = l.rank();
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            s += x[i] * l.g(i, j) * y[j];
        }
    }
    return s;
}

divisor canonical(const lattice& l) {
    if (!l.K) throw check_error("lattice has no canonical class");
    return *l.K;
}

divisor add(const divisor& x, const divisor& y) {
    if (x.size() != y.size()) throw std::invalid_argument("add: rank mismatch");
    divisor r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

divisor sub(const divisor& x, const divisor& y) {
    if (x.size() != y.size()) throw std::invalid_argument("sub: rank mismatch");
    divisor r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

divisor scale(const Int& c, const divisor& x) {
    divisor r = x;
    for (auto& v : r) v *= c;
    return r;
}

bool is_zero(const divisor& d) {
    for (const auto& v : d)
        if (v != 0) return false;
    return true;
}

Rat genus(const lattice& l, const divisor& d) {
    Int kd = pair(l, canonical(l), d);
    Int dd = pair(l, d, d);
    return Rat(kd + dd, 2) + 1;
}

bool is_characteristic(const lattice& l, const divisor& d) {
    require_rank(l, d, "is_characteristic");
    int n = l.rank();
    for (int i = 0; i < n; ++i) {
        divisor gi(static_cast<size_t>(n), Int(0));
        gi[i] = 1;
        if ((pair(l, d, gi) - l.g(i, i)) % 2 != 0) return false;
    }
    return true;
}

divisor parse_class(const lattice& l, const std::string& text) {
    // Delegate to a symbol-free resolver: every name must be a generator.
    divisor r(static_cast<size_t>(l.rank()), Int(0));
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw parse_error("empty class expression");
    bool first = true;
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw parse_error("expected '+' or '-' in class expression near \"" + text.substr(i) + "\"");
        }
        first = false;
        if (i == text.size()) throw parse_error("dangling sign in class expression");
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        std::string name;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\''))
            name += text[i++];
        if (name.empty()) {
            if (digits == "0" && sign == 1) { // the zero class
                skip_ws();
                any = true;
                continue;
            }
            throw parse_error("expected generator name in class expression near position " +
                              std::to_string(i));
        }
        // "2e14" tokenizes as coefficient 2, name e14 only if "e14" is a
        // generator; otherwise the whole token may itself be a name ("2nd"
        // style names are not used, so this is unambiguous here).
        int gi = l.gen_index(name);
        if (gi < 0) throw parse_error("unknown generator: " + name);
        Int coef = digits.empty() ? Int(1) : Int(digits);
        r[static_cast<size_t>(gi)] += sign * coef;
        any = true;
        skip_ws();
    }
    if (!any) throw parse_error("empty class expression");
    return r;
}

std::string show_class(const lattice& l, const divisor& d) {
    require_rank(l, d, "show_class");
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < l.rank(); ++i) {
        const Int& c = d[static_cast<size_t>(i)];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (a != 1) out << a.str();
        out << l.gens[static_cast<size_t>(i)];
    }
    if (first) return "0";
    return out.str();
}

Int b2(const manifold& m) { return m.e - 2 + 2 * m.b1; }

Int b2plus(const manifold& m) {
    Int t = b2(m) + m.sigma;
    if (t % 2 != 0 || t < 0) throw check_error("b2+ is not a non-negative integer");
    return t / 2;
}

Int b2minus(const manifold& m) {
    Int t = b2(m) - m.sigma;
    if (t % 2 != 0 || t < 0) throw check_error("b2- is not a non-negative integer");
    return t / 2;
}

Int c1sq(const manifold& m) { return 3 * m.sigma + 2 * m.e; }

manifold connected_sum(const manifold& x, const manifold& y) {
    manifold r;
    r.e = x.e + y.e - 2;
    r.sigma = x.sigma + y.sigma;
    r.b1 = x.b1 + y.b1;
    r.odd = x.odd || y.odd;
    r.sc = x.sc && y.sc;
    return r;
}

manifold blow_up_invariants(const manifold& x) {
    manifold r = x;
    r.e = x.e + 1;
    r.sigma = x.sigma - 1;
    r.odd = true;   // the new (-1)-class is odd
    return r;
}

std::string homeo_label(const manifold& m) {
    if (!m.sc) throw check_error("homeo label requires the simply-connected flag (assume sc)");
    if (m.b1 != 0) throw check_error("homeo label requires b1 = 0");
    if (!m.odd) throw check_error("homeo label supports only odd intersection forms");
    Int p = b2plus(m), n = b2minus(m);
    std::string out;
    if (p != 1) out += p.str();
    out += "CP2#" + n.str() + "CP2bar";
    return out;
}

} // namespace surgery
