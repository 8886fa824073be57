#include "surgery/plan.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace surgery {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Split on whitespace after padding the separators ',' ':' '=' (keeping
// "==" as a single token).
std::vector<std::string> tokenize(const std::string& s) {
    std::string padded;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == ',' || c == ':') {
            padded += ' ';
            padded += c;
            padded += ' ';
        } else if (c == '=') {
            if (i + 1 < s.size() && s[i + 1] == '=') {
                padded += " == ";
                ++i;
            } else {
                padded += " = ";
            }
        } else {
            padded += c;
        }
    }
    std::vector<std::string> out;
    std::istringstream in(padded);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_integer(const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

struct cursor {
    const std::vector<std::string>& toks;
    size_t i = 0;
    int line;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("line " + std::to_string(line) + ": " + msg);
    }
    bool done() const { return i >= toks.size(); }
    const std::string& peek() const {
        if (done()) fail("unexpected end of statement");
        return toks[i];
    }
    std::string next() {
        if (done()) fail("unexpected end of statement");
        return toks[i++];
    }
    void expect(const std::string& lit) {
        std::string t = next();
        if (t != lit) fail("expected '" + lit + "', got '" + t + "'");
    }
    Int next_int() {
        std::string t = next();
        if (!is_integer(t)) fail("expected an integer, got '" + t + "'");
        return Int(t);
    }
    std::string next_name() {
        std::string t = next();
        if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_'))
            fail("expected a name, got '" + t + "'");
        return t;
    }
    // Join tokens [i, stop) with single spaces; used for class expressions.
    std::string join_until(const std::vector<std::string>& stops) {
        std::string out;
        while (!done()) {
            bool hit = false;
            for (const auto& s : stops)
                if (toks[i] == s) hit = true;
            if (hit) break;
            if (!out.empty()) out += ' ';
            out += toks[i++];
        }
        if (out.empty()) fail("expected an expression");
        return out;
    }
    void end() {
        if (!done()) fail("trailing tokens starting at '" + toks[i] + "'");
    }
};

// Extract the content of a double-quoted string from the raw line.
std::string quoted_text(const std::string& line, int lineno) {
    size_t b = line.find('"');
    if (b == std::string::npos)
        throw parse_error("line " + std::to_string(lineno) + ": expected a quoted string");
    size_t e = line.find('"', b + 1);
    if (e == std::string::npos)
        throw parse_error("line " + std::to_string(lineno) + ": unterminated quoted string");
    std::string rest = trim(line.substr(e + 1));
    if (!rest.empty())
        throw parse_error("line " + std::to_string(lineno) + ": trailing text after quoted string");
    return line.substr(b + 1, e - b - 1);
}

// Strip a trailing comment. A '#' opens a comment only at the start of the
// line or after whitespace (labels such as CP2#7CP2bar keep their '#'), and
// never inside a quoted string.
std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
            quoted = !quoted;
        } else if (line[i] == '#' && !quoted &&
                   (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
            return line.substr(0, i);
        }
    }
    return line;
}

// The remainder of the line after its first `words` whitespace-delimited
// words, with surrounding whitespace trimmed; used for literal values.
std::string raw_tail(const std::string& s, int words) {
    size_t i = 0;
    for (int w = 0; w < words; ++w) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t e = s.size();
    while (e > i && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(i, e - i);
}

statement parse_statement(const std::string& raw, int lineno) {
    statement st;
    st.line = lineno;
    std::vector<std::string> toks = tokenize(raw);
    cursor c{toks, 0, lineno};
    std::string head = c.next();

    if (head == "note") {
        st.kind = statement::note;
        st.text = quoted_text(raw, lineno);
        return st;
    }
    if (head == "surface") {
        std::string sub = c.next();
        if (sub == "blowup") {
            st.kind = statement::surface_blowup;
            st.ints.push_back(c.next_int());
        } else if (sub == "ruled") {
            st.kind = statement::surface_ruled;
            st.ints.push_back(c.next_int());
        } else if (sub == "abstract") {
            st.kind = statement::surface_abstract;
            while (!c.done()) st.names.push_back(c.next_name());
            if (st.names.empty()) c.fail("surface abstract needs at least one generator");
        } else {
            c.fail("unknown surface kind '" + sub + "'");
        }
        c.end();
        return st;
    }
    if (head == "pair") {
        st.kind = statement::pair_decl;
        st.names.push_back(c.next_name());
        st.names.push_back(c.next_name());
        st.ints.push_back(c.next_int());
        c.end();
        return st;
    }
    if (head == "class") {
        st.kind = statement::class_def;
        st.names.push_back(c.next_name());
        c.expect("=");
        st.text = c.join_until({});
        return st;
    }
    if (head == "fibration") {
        st.kind = statement::fibration_stmt;
        c.expect("kf2");
        st.ints.push_back(c.next_int());
        c.expect("chif");
        st.ints.push_back(c.next_int());
        c.expect("g");
        st.ints.push_back(c.next_int());
        c.expect("b");
        st.ints.push_back(c.next_int());
        c.end();
        return st;
    }
    if (head == "pencil") {
        st.kind = statement::pencil_stmt;
        c.expect("g");
        st.ints.push_back(c.next_int());
        c.end();
        return st;
    }
    if (head == "ledger") {
        st.kind = statement::ledger_decl;
        st.text = c.join_until({":"});
        c.expect(":");
        while (true) {
            Int mult = c.next_int();
            std::string name = c.next_name();
            st.pairs.emplace_back(name, mult);
            if (c.done()) break;
            c.expect(",");
        }
        return st;
    }
    if (head == "step") {
        st.kind = statement::step_stmt;
        c.expect("as");
        st.names.push_back(c.next_name());
        c.expect("drops");
        while (true) {
            std::string name = c.next_name();
            Int d = c.next_int();
            st.pairs.emplace_back(name, d);
            if (c.peek() == ",") {
                c.next();
                continue;
            }
            break;
        }
        c.expect("mult");
        st.ints.push_back(c.next_int());
        c.end();
        return st;
    }
    if (head == "finalize") {
        st.kind = statement::finalize_stmt;
        c.expect("as");
        st.names.push_back(c.next_name());
        c.end();
        return st;
    }
    if (head == "tobasis") {
        st.kind = statement::tobasis_stmt;
        c.expect("blowup");
        c.end();
        return st;
    }
    if (head == "blowup") {
        st.kind = statement::blowup_stmt;
        while (!c.done()) st.names.push_back(c.next_name());
        if (st.names.empty()) c.fail("blowup needs at least one exceptional name");
        return st;
    }
    if (head == "resolve") {
        st.kind = statement::resolve_stmt;
        st.names.push_back(c.next_name());
        c.expect("=");
        while (true) {
            st.names.push_back(c.join_until({","}));
            if (c.done()) break;
            c.expect(",");
        }
        if (st.names.size() < 2) c.fail("resolve needs at least one class");
        return st;
    }
    if (head == "plumbing") {
        st.kind = statement::plumbing_stmt;
        st.ints.push_back(c.next_int());
        st.ints.push_back(c.next_int());
        c.end();
        return st;
    }
    if (head == "embed") {
        st.kind = statement::embed_stmt;
        std::string slot = c.next();
        if (slot.size() < 2 || slot[0] != 'u' || !is_integer(slot.substr(1)) || slot[1] == '-')
            c.fail("expected an embedding slot u<i>, got '" + slot + "'");
        st.ints.push_back(Int(slot.substr(1)));
        if (st.ints[0] <= 0) c.fail("embedding slots are numbered from 1");
        c.expect("=");
        st.text = c.join_until({});
        return st;
    }
    if (head == "certify") {
        st.kind = statement::certify_stmt;
        c.expect("kw");
        c.end();
        return st;
    }
    if (head == "paperform") {
        st.kind = statement::paperform_stmt;
        std::string which = c.next();
        if (which != "restricted" && which != "exotic")
            c.fail("paperform target must be 'restricted' or 'exotic'");
        st.names.push_back(which);
        std::string frac = c.next();
        size_t slash = frac.find('/');
        if (slash == std::string::npos || !is_integer(frac.substr(0, slash)) ||
            !is_integer(frac.substr(slash + 1)))
            c.fail("expected a prefactor <num>/<den>, got '" + frac + "'");
        st.scale = Rat(Int(frac.substr(0, slash)), Int(frac.substr(slash + 1)));
        while (!c.done()) st.names.push_back(c.next());
        if (st.names.size() < 2) c.fail("paperform needs at least one term");
        return st;
    }
    if (head == "paperclaim") {
        st.kind = statement::paperclaim_stmt;
        st.names.push_back(c.next());
        st.text = raw_tail(raw, 2);
        if (st.text.empty()) c.fail("paperclaim needs a value");
        return st;
    }
    if (head == "verify") {
        st.kind = statement::verify_stmt;
        st.names.push_back(c.next_name());
        c.expect(":");
        st.text = c.join_until({"=="});
        c.expect("==");
        st.text2 = c.join_until({});
        return st;
    }
    if (head == "invariants") {
        st.kind = statement::invariants_stmt;
        c.expect("e");
        st.ints.push_back(c.next_int());
        c.expect("sigma");
        st.ints.push_back(c.next_int());
        c.expect("parity");
        std::string parity = c.next();
        if (parity != "odd" && parity != "even") c.fail("parity must be 'odd' or 'even'");
        st.names.push_back(parity);
        c.end();
        return st;
    }
    if (head == "assume") {
        st.kind = statement::assume_stmt;
        c.expect("sc");
        st.text = quoted_text(raw, lineno);
        return st;
    }
    if (head == "blowdown") {
        st.kind = statement::blowdown_stmt;
        if (!c.done()) {
            st.ints.push_back(c.next_int());
            st.ints.push_back(c.next_int());
        }
        c.end();
        return st;
    }
    if (head == "sw") {
        st.kind = statement::sw_stmt;
        std::string sub = c.next();
        st.names.push_back(sub);
        if (sub == "blowup") {
            st.names.push_back(c.next_name());
        } else if (sub == "sum_trivial") {
            st.ints.push_back(c.next_int());
        } else if (sub != "trivial" && sub != "taubes" && sub != "descend" &&
                   sub != "minimality") {
            c.fail("unknown sw operation '" + sub + "'");
        }
        c.end();
        return st;
    }
    if (head == "assert") {
        st.kind = statement::assert_stmt;
        st.names.push_back(c.next());
        st.text = raw_tail(raw, 2);
        if (st.text.empty()) c.fail("assert needs an expected value");
        return st;
    }
    if (head == "report") {
        st.kind = statement::report_stmt;
        c.end();
        return st;
    }
    c.fail("unknown statement '" + head + "'");
}

} // namespace

plan parse_plan(std::istream& in) {
    plan p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        p.stmts.push_back(parse_statement(body, lineno));
    }
    return p;
}

plan parse_plan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open plan file: " + path);
    return parse_plan(in);
}

std::string print_plan(const plan& p) {
    std::ostringstream out;
    for (const statement& st : p.stmts) {
        switch (st.kind) {
        case statement::note: out << "note \"" << st.text << "\""; break;
        case statement::surface_blowup: out << "surface blowup " << st.ints[0].str(); break;
        case statement::surface_ruled: out << "surface ruled " << st.ints[0].str(); break;
        case statement::surface_abstract:
            out << "surface abstract";
            for (const auto& n : st.names) out << ' ' << n;
            break;
        case statement::pair_decl:
            out << "pair " << st.names[0] << ' ' << st.names[1] << ' ' << st.ints[0].str();
            break;
        case statement::class_def: out << "class " << st.names[0] << " = " << st.text; break;
        case statement::fibration_stmt:
            out << "fibration kf2 " << st.ints[0].str() << " chif " << st.ints[1].str() << " g "
                << st.ints[2].str() << " b " << st.ints[3].str();
            break;
        case statement::pencil_stmt: out << "pencil g " << st.ints[0].str(); break;
        case statement::ledger_decl:
            out << "ledger " << st.text << " :";
            for (size_t i = 0; i < st.pairs.size(); ++i)
                out << (i ? ", " : " ") << st.pairs[i].second.str() << ' ' << st.pairs[i].first;
            break;
        case statement::step_stmt:
            out << "step as " << st.names[0] << " drops";
            for (size_t i = 0; i < st.pairs.size(); ++i)
                out << (i ? ", " : " ") << st.pairs[i].first << ' ' << st.pairs[i].second.str();
            out << " mult " << st.ints[0].str();
            break;
        case statement::finalize_stmt: out << "finalize as " << st.names[0]; break;
        case statement::tobasis_stmt: out << "tobasis blowup"; break;
        case statement::blowup_stmt:
            out << "blowup";
            for (const auto& n : st.names) out << ' ' << n;
            break;
        case statement::resolve_stmt:
            out << "resolve " << st.names[0] << " = ";
            for (size_t i = 1; i < st.names.size(); ++i) out << (i > 1 ? ", " : "") << st.names[i];
            break;
        case statement::plumbing_stmt:
            out << "plumbing " << st.ints[0].str() << ' ' << st.ints[1].str();
            break;
        case statement::embed_stmt:
            out << "embed u" << st.ints[0].str() << " = " << st.text;
            break;
        case statement::certify_stmt: out << "certify kw"; break;
        case statement::paperform_stmt: {
            out << "paperform " << st.names[0] << ' ' << show(st.scale);
            if (denominator(st.scale) == 1) out << "/1";
            for (size_t i = 1; i < st.names.size(); ++i) out << ' ' << st.names[i];
            break;
        }
        case statement::paperclaim_stmt:
            out << "paperclaim " << st.names[0] << ' ' << st.text;
            break;
        case statement::verify_stmt:
            out << "verify " << st.names[0] << " : " << st.text << " == " << st.text2;
            break;
        case statement::invariants_stmt:
            out << "invariants e " << st.ints[0].str() << " sigma " << st.ints[1].str()
                << " parity " << st.names[0];
            break;
        case statement::assume_stmt: out << "assume sc \"" << st.text << "\""; break;
        case statement::blowdown_stmt:
            out << "blowdown";
            if (!st.ints.empty()) out << ' ' << st.ints[0].str() << ' ' << st.ints[1].str();
            break;
        case statement::sw_stmt:
            out << "sw " << st.names[0];
            if (st.names.size() > 1) out << ' ' << st.names[1];
            if (!st.ints.empty()) out << ' ' << st.ints[0].str();
            break;
        case statement::assert_stmt: out << "assert " << st.names[0] << ' ' << st.text; break;
        case statement::report_stmt: out << "report"; break;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace surgery
