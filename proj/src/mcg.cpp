#include "surgery/mcg.hpp"

#include "surgery/lattice.hpp"   // is_zero on coefficient vectors

#include <fstream>
#include <sstream>

namespace surgery {

static void require_genus(int g) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
}

static void require_letter(const letter& t, int g) {
    if (t.idx < 1 || t.idx > 2 * g + 1)
        throw parse_error("generator a" + std::to_string(t.idx) + " out of range for genus " +
                          std::to_string(g));
    if (t.exp != 1 && t.exp != -1) throw parse_error("letter exponent must be +-1");
}

static letter parse_letter(const std::string& tok, int g) {
    size_t i = 0;
    if (i >= tok.size() || tok[i] != 'a') throw parse_error("bad letter token: " + tok);
    ++i;
    size_t d0 = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == d0) throw parse_error("bad letter token: " + tok);
    letter t;
    t.idx = std::stoi(tok.substr(d0, i - d0));
    if (i == tok.size()) {
        t.exp = 1;
    } else if (tok.substr(i) == "^-1") {
        t.exp = -1;
    } else {
        throw parse_error("bad letter token: " + tok);
    }
    require_letter(t, g);
    return t;
}

static std::string show_letter(const letter& t) {
    std::string s = "a" + std::to_string(t.idx);
    if (t.exp < 0) s += "^-1";
    return s;
}

word parse_word(const std::string& text, int g) {
    require_genus(g);
    std::istringstream in(text);
    word w;
    std::string tok;
    while (in >> tok) w.push_back(parse_letter(tok, g));
    return w;
}

std::string show_word(const word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += show_letter(w[i]);
    }
    return s;
}

word inverse_word(const word& w) {
    word r;
    r.reserve(w.size());
    for (size_t i = w.size(); i-- > 0;) r.push_back({w[i].idx, -w[i].exp});
    return r;
}

word reduce(word w) {
    word out;
    for (const letter& t : w) {
        if (!out.empty() && out.back().idx == t.idx && out.back().exp == -t.exp)
            out.pop_back();
        else
            out.push_back(t);
    }
    return out;
}

Int exponent_sum(const word& w) {
    Int s = 0;
    for (const letter& t : w) s += t.exp;
    return s;
}

word h_relator(int g) {
    require_genus(g);
    word half;
    for (int i = 1; i <= 2 * g; ++i) half.push_back({i, 1});
    half.push_back({2 * g + 1, 1});
    half.push_back({2 * g + 1, 1});
    for (int i = 2 * g; i >= 1; --i) half.push_back({i, 1});
    word w = half;
    w.insert(w.end(), half.begin(), half.end());
    return w;
}

word i_relator(int g) {
    require_genus(g);
    word w;
    for (int rep = 0; rep < 2 * g + 2; ++rep)
        for (int i = 1; i <= 2 * g + 1; ++i) w.push_back({i, 1});
    return w;
}

move parse_move(const std::string& line, int g) {
    std::istringstream in(line);
    std::string kw;
    if (!(in >> kw)) throw parse_error("empty move line");
    move m;
    if (kw == "HR") m.kind = move::HR;
    else if (kw == "HL") m.kind = move::HL;
    else if (kw == "BRAID") m.kind = move::BRAID;
    else if (kw == "COMM") m.kind = move::COMM;
    else if (kw == "INS") m.kind = move::INS;
    else if (kw == "CANCEL") m.kind = move::CANCEL;
    else throw parse_error("unknown move: " + kw);
    if (!(in >> m.pos)) throw parse_error("move needs a position: " + line);
    if (m.kind == move::INS) {
        std::string tok;
        if (!(in >> tok)) throw parse_error("INS needs a letter token: " + line);
        m.t = parse_letter(tok, g);
    }
    std::string extra;
    if (in >> extra) throw parse_error("trailing input in move: " + line);
    return m;
}

std::string show_move(const move& m) {
    static const char* names[] = {"HR", "HL", "BRAID", "COMM", "INS", "CANCEL"};
    std::string s = std::string(names[m.kind]) + " " + std::to_string(m.pos);
    if (m.kind == move::INS) s += " " + show_letter(m.t);
    return s;
}

static void require_span(const word& w, int pos, int count, const move& m) {
    if (pos < 1 || pos + count - 1 > static_cast<int>(w.size()))
        throw check_error("move " + show_move(m) + " out of range on a word of length " +
                          std::to_string(w.size()));
}

word apply_move(const word& w, const move& m, int g) {
    require_genus(g);
    word r = w;
    switch (m.kind) {
    case move::HR: {
        // (x)(y) -> (x y x^-1)(x): the word grows by the conjugating pair.
        require_span(w, m.pos, 2, m);
        letter x = r[m.pos - 1];
        r.insert(r.begin() + m.pos + 1, {x.idx, -x.exp});
        r.insert(r.begin() + m.pos + 2, x);
        break;
    }
    case move::HL: {
        // (x)(y) -> (y)(y^-1 x y)
        require_span(w, m.pos, 2, m);
        letter x = r[m.pos - 1], y = r[m.pos];
        r[m.pos - 1] = y;
        r[m.pos] = {y.idx, -y.exp};
        r.insert(r.begin() + m.pos + 1, x);
        r.insert(r.begin() + m.pos + 2, y);
        break;
    }
    case move::BRAID: {
        require_span(w, m.pos, 3, m);
        letter x = r[m.pos - 1], y = r[m.pos], z = r[m.pos + 1];
        if (x.idx != z.idx || std::abs(x.idx - y.idx) != 1)
            throw check_error("move " + show_move(m) + ": letters are not a braid triple");
        int s = x.exp, t = y.exp, u = z.exp;
        int gi = x.idx, hi = y.idx;
        // Six consequences of g h g = h g h; (+,-,+) and (-,+,-) are not
        // words of this shape and are refused.
        if ((s == 1 && t == -1 && u == 1) || (s == -1 && t == 1 && u == -1))
            throw check_error("move " + show_move(m) + ": sign pattern is not a braid rewrite");
        int n1e, n2e, n3e;
        if (s == 1 && t == 1 && u == 1) { n1e = 1; n2e = 1; n3e = 1; }          // ghg = hgh
        else if (s == -1 && t == -1 && u == -1) { n1e = -1; n2e = -1; n3e = -1; } // g~h~g~ = h~g~h~
        else if (s == 1 && t == 1 && u == -1) { n1e = -1; n2e = 1; n3e = 1; }   // ghg~ = h~gh
        else if (s == -1 && t == 1 && u == 1) { n1e = 1; n2e = 1; n3e = -1; }   // g~hg = hgh~
        else if (s == 1 && t == -1 && u == -1) { n1e = -1; n2e = -1; n3e = 1; } // gh~g~ = h~g~h
        else { n1e = 1; n2e = -1; n3e = -1; }                                   // g~h~g = hg~h~
        r[m.pos - 1] = {hi, n1e};
        r[m.pos] = {gi, n2e};
        r[m.pos + 1] = {hi, n3e};
        break;
    }
    case move::COMM: {
        require_span(w, m.pos, 2, m);
        letter x = r[m.pos - 1], y = r[m.pos];
        if (std::abs(x.idx - y.idx) < 2)
            throw check_error("move " + show_move(m) + ": generators a" + std::to_string(x.idx) +
                              ", a" + std::to_string(y.idx) + " do not commute");
        r[m.pos - 1] = y;
        r[m.pos] = x;
        break;
    }
    case move::INS: {
        if (m.pos < 1 || m.pos > static_cast<int>(w.size()) + 1)
            throw check_error("move " + show_move(m) + " out of range on a word of length " +
                              std::to_string(w.size()));
        require_letter(m.t, g);
        r.insert(r.begin() + m.pos - 1, {m.t.idx, -m.t.exp});
        r.insert(r.begin() + m.pos, m.t);
        break;
    }
    case move::CANCEL: {
        require_span(w, m.pos, 2, m);
        letter x = r[m.pos - 1], y = r[m.pos];
        if (x.idx != y.idx || x.exp != -y.exp)
            throw check_error("move " + show_move(m) + ": letters are not an inverse pair");
        r.erase(r.begin() + m.pos - 1, r.begin() + m.pos + 1);
        break;
    }
    }
    return r;
}

derivation parse_derivation(std::istream& in) {
    derivation d;
    std::string line;
    int lineno = 0;
    bool have_genus = false, have_start = false, have_end = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string kw;
        if (!(probe >> kw)) continue;
        std::string rest;
        std::getline(probe, rest);
        try {
            if (kw == "genus") {
                d.g = std::stoi(rest);
                require_genus(d.g);
                have_genus = true;
            } else if (kw == "start") {
                if (!have_genus) throw parse_error("start before genus");
                d.start = parse_word(rest, d.g);
                have_start = true;
            } else if (kw == "end") {
                if (!have_genus) throw parse_error("end before genus");
                d.end = parse_word(rest, d.g);
                have_end = true;
            } else {
                if (!have_genus) throw parse_error("move before genus");
                d.moves.push_back(parse_move(line, d.g));
            }
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_genus || !have_start || !have_end)
        throw parse_error("derivation needs genus, start and end lines");
    return d;
}

derivation parse_derivation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open derivation file: " + path);
    return parse_derivation(in);
}

void verify_derivation(const derivation& d) {
    word w = d.start;
    for (size_t i = 0; i < d.moves.size(); ++i) {
        try {
            w = apply_move(w, d.moves[i], d.g);
        } catch (const check_error& e) {
            throw check_error("step " + std::to_string(i + 1) + " (" + show_move(d.moves[i]) +
                              "): " + e.what());
        }
    }
    if (!(w == d.end))
        throw check_error("replay ended at \"" + show_word(w) + "\", expected \"" +
                          show_word(d.end) + "\"");
    chain_homology hom = standard_chain(d.g);
    if (!(word_to_matrix(d.start, hom) == word_to_matrix(d.end, hom)))
        throw check_error("start and end words act differently on homology");
}

chain_homology standard_chain(int g) {
    require_genus(g);
    // Basis order x_1, y_1, x_2, y_2, ..., x_g, y_g.
    auto basis = [&](int pos) {
        std::vector<Int> v(static_cast<size_t>(2 * g), Int(0));
        v[static_cast<size_t>(pos)] = 1;
        return v;
    };
    chain_homology hom;
    hom.g = g;
    hom.c.resize(static_cast<size_t>(2 * g + 1));
    for (int j = 1; j <= g; ++j) hom.c[static_cast<size_t>(2 * j - 2)] = basis(2 * (j - 1));
    for (int j = 1; j < g; ++j) {
        auto v = basis(2 * (j - 1) + 1);
        v[static_cast<size_t>(2 * j + 1)] -= 1;   // y_j - y_{j+1}
        hom.c[static_cast<size_t>(2 * j - 1)] = v;
    }
    hom.c[static_cast<size_t>(2 * g - 1)] = basis(2 * (g - 1) + 1);   // y_g
    std::vector<Int> top(static_cast<size_t>(2 * g), Int(0));
    for (int j = 1; j <= g; ++j) top[static_cast<size_t>(2 * (j - 1))] = 1;   // x_1+...+x_g
    hom.c[static_cast<size_t>(2 * g)] = top;
    // The assignment is a choice; the chain-intersection pattern is not.
    for (int i = 1; i <= 2 * g + 1; ++i) {
        if (is_zero(hom.c[static_cast<size_t>(i - 1)]))
            throw std::logic_error("chain curve class is zero");
        for (int j = i + 1; j <= 2 * g + 1; ++j) {
            Int p = sympl(hom.c[static_cast<size_t>(i - 1)], hom.c[static_cast<size_t>(j - 1)]);
            if (j == i + 1) {
                if (p != 1 && p != -1)
                    throw std::logic_error("consecutive chain curves must pair to +-1");
            } else if (p != 0) {
                throw std::logic_error("distant chain curves must pair to 0");
            }
        }
    }
    return hom;
}

Int sympl(const std::vector<Int>& u, const std::vector<Int>& v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw std::invalid_argument("symplectic pairing needs equal even-dimensional vectors");
    Int s = 0;
    for (size_t i = 0; i + 1 < u.size(); i += 2)
        s += u[i] * v[i + 1] - u[i + 1] * v[i];
    return s;
}

int_matrix transvection(const std::vector<Int>& c, int sign) {
    int n = static_cast<int>(c.size());
    int_matrix m = int_matrix::identity(n);
    // Column j is T(b_j) = b_j + sign*<b_j,c> c.
    for (int j = 0; j < n; ++j) {
        std::vector<Int> bj(static_cast<size_t>(n), Int(0));
        bj[static_cast<size_t>(j)] = 1;
        Int f = sympl(bj, c) * sign;
        if (f == 0) continue;
        for (int i = 0; i < n; ++i) m.at(i, j) += f * c[static_cast<size_t>(i)];
    }
    return m;
}

int_matrix word_to_matrix(const word& w, const chain_homology& hom, int sign) {
    int n = 2 * hom.g;
    int_matrix m = int_matrix::identity(n);
    for (const letter& t : w) {
        if (t.idx < 1 || t.idx > 2 * hom.g + 1)
            throw std::invalid_argument("letter out of range for the chain homology");
        m = mul(m, transvection(hom.c[static_cast<size_t>(t.idx - 1)], sign * t.exp));
    }
    return m;
}

namespace {

std::vector<Int> apply_matrix(const int_matrix& m, const std::vector<Int>& v) {
    std::vector<Int> r(v.size(), Int(0));
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            r[i] += m.at(static_cast<int>(i), static_cast<int>(j)) * v[j];
    return r;
}

// Depth-first peeling of factors u c u^-1 (c a positive letter) off the
// left of a reduced word, undoing cancellation between factors by
// multiplying the factor's inverse back in. `spherical` additionally prunes
// on the n-nodal conditions (classes nonzero, pairwise pairing 0), so a
// successful full peel is already a certificate.
bool peel(const word& w, int budget, const chain_homology& hom, bool spherical,
          std::vector<std::vector<Int>>& classes) {
    if (w.empty()) return budget == 0;
    if (budget <= 0) return false;
    int n = static_cast<int>(w.size());
    for (int k = 0; k < n; ++k) {
        const letter& c = w[static_cast<size_t>(k)];
        if (c.exp != 1) continue;
        word u(w.begin(), w.begin() + k);
        if (spherical) {
            std::vector<Int> cls = apply_matrix(word_to_matrix(u, hom),
                                                hom.c[static_cast<size_t>(c.idx - 1)]);
            bool ok = !is_zero(cls);
            for (const auto& prev : classes)
                if (ok && sympl(prev, cls) != 0) ok = false;
            if (!ok) continue;
            classes.push_back(std::move(cls));
        }
        // remainder = reduce(f^-1 w) with f = u c u^-1
        word rest = u;
        rest.push_back({c.idx, -1});
        word uinv = inverse_word(u);
        rest.insert(rest.end(), uinv.begin(), uinv.end());
        rest.insert(rest.end(), w.begin(), w.end());
        rest = reduce(rest);
        if (peel(rest, budget - 1, hom, spherical, classes)) return true;
        if (spherical) classes.pop_back();
    }
    return false;
}

} // namespace

block_class classify_block(const word& w, const chain_homology& hom) {
    block_class out;
    word r = reduce(w);
    Int msum = exponent_sum(r);
    if (msum < 1 || msum > Int(static_cast<int>(r.size()))) return out;
    int n = static_cast<int>(msum);
    if (n != 1 && n != hom.g) return out;
    std::vector<std::vector<Int>> classes;
    if (peel(r, n, hom, true, classes)) {
        out.kind = n == 1 ? block_class::lefschetz_nodal : block_class::n_nodal_spherical;
        out.n = n;
        out.classes = std::move(classes);
    }
    return out;
}

} // namespace surgery
