#include "surgery/run.hpp"

#include "surgery/blowdown.hpp"
#include "surgery/certify.hpp"
#include "surgery/hirzebruch.hpp"
#include "surgery/lattice.hpp"
#include "surgery/pencilscript.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace surgery {

const std::string* report::find_last(const std::string& key) const {
    for (auto it = kv.rbegin(); it != kv.rend(); ++it)
        if (it->first == key) return &it->second;
    return nullptr;
}

std::string render_kv(const report& r) {
    std::string out;
    for (const auto& [k, v] : r.kv) {
        out += k;
        out += '=';
        out += v;
        out += '\n';
    }
    return out;
}

std::string render_text(const report& r) {
    size_t w = 0;
    for (const auto& [k, v] : r.kv) w = std::max(w, k.size());
    std::ostringstream out;
    for (const auto& [k, v] : r.kv) {
        out << k << std::string(w - k.size(), ' ') << "  " << v << '\n';
    }
    return out.str();
}

namespace {

struct executor {
    report rep;

    std::optional<lattice> lat;
    std::map<std::string, divisor> defs;   // named classes, padded on use
    std::optional<ledger> led;
    std::optional<fiber_config> fib;
    std::optional<plumbing> plumb;
    std::map<int, divisor> embeds;
    std::optional<manifold> inv;
    std::optional<sw_state> sw;
    std::optional<linform> last_restricted, last_exotic;
    bool sc = false;
    std::string sc_note;

    void emit(const std::string& key, const std::string& value) {
        rep.kv.emplace_back(key, value);
    }

    [[noreturn]] void fail(const statement& st, const std::string& msg) {
        throw check_error("line " + std::to_string(st.line) + ": " + msg);
    }

    lattice& need_lat(const statement& st) {
        if (!lat) fail(st, "no surface is active (use a 'surface' statement first)");
        return *lat;
    }

    std::string describe(const lattice& l) {
        switch (l.kind) {
        case surface_kind::blowup: return "blowup(" + std::to_string(l.param) + ")";
        case surface_kind::ruled: {
            std::string s = "ruled(" + std::to_string(l.param) + ")";
            if (l.rank() > 2) s += "+" + std::to_string(l.rank() - 2);
            return s;
        }
        case surface_kind::abstract_gram: return "abstract(" + std::to_string(l.rank()) + ")";
        }
        return "?";
    }

    // Class expressions may reference generators and previously defined
    // classes; same term grammar as the plain generator-only parser.
    divisor eval_expr(const statement& st, const std::string& text) {
        const lattice& l = need_lat(st);
        divisor r(static_cast<size_t>(l.rank()), Int(0));
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_ws();
        bool first = true, any = false;
        while (i < text.size()) {
            int sign = 1;
            skip_ws();
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                if (text[i] == '-') sign = -1;
                ++i;
                skip_ws();
            } else if (!first) {
                fail(st, "expected '+' or '-' in class expression \"" + text + "\"");
            }
            first = false;
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            std::string name;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_' || text[i] == '\''))
                name += text[i++];
            if (name.empty()) {
                if (digits == "0" && sign == 1) {
                    skip_ws();
                    any = true;
                    continue;
                }
                fail(st, "malformed class expression \"" + text + "\"");
            }
            Int coef = digits.empty() ? Int(1) : Int(digits);
            if (sign < 0) coef = -coef;
            int gi = l.gen_index(name);
            if (gi >= 0) {
                r[static_cast<size_t>(gi)] += coef;
            } else {
                auto it = defs.find(name);
                if (it == defs.end())
                    fail(st, "unknown class or generator '" + name + "' in \"" + text + "\"");
                divisor d = pad(it->second, l.rank());
                for (size_t j = 0; j < r.size(); ++j) r[j] += coef * d[j];
            }
            any = true;
            skip_ws();
        }
        if (!any) fail(st, "empty class expression");
        return r;
    }

    std::string show(const divisor& d) { return show_class(*lat, pad(d, lat->rank())); }

    void define(const statement& st, const std::string& name, const divisor& d) {
        if (lat->gen_index(name) >= 0)
            fail(st, "'" + name + "' is already a generator");
        defs[name] = d;
    }

    void emit_manifold(const statement& st) {
        const manifold& m = *inv;
        emit("manifold.e", m.e.str());
        emit("manifold.sigma", m.sigma.str());
        emit("manifold.b2plus", b2plus(m).str());
        emit("manifold.b2minus", b2minus(m).str());
        emit("manifold.c1sq", c1sq(m).str());
        emit("manifold.parity", m.odd ? "odd" : "even");
        if (m.sc) emit("manifold.label", homeo_label(m));
        (void)st;
    }

    void reset_surface_state() {
        defs.clear();
        led.reset();
        fib.reset();
        plumb.reset();
        embeds.clear();
        last_restricted.reset();
        last_exotic.reset();
    }

    embedding collect_embedding(const statement& st) {
        if (!plumb) fail(st, "no plumbing chain is active");
        embedding emb;
        for (int i = 1; i <= plumb->length(); ++i) {
            auto it = embeds.find(i);
            if (it == embeds.end())
                fail(st, "embedding slot u" + std::to_string(i) + " is missing");
            emb.u.push_back(pad(it->second, lat->rank()));
        }
        return emb;
    }

    linform paper_terms(const statement& st, int k) {
        linform f;
        f.a = 0;
        f.b.assign(static_cast<size_t>(k), Rat(0));
        for (size_t t = 1; t < st.names.size(); ++t) {
            const std::string& term = st.names[t];
            size_t i = 0;
            int sign = 1;
            if (i < term.size() && (term[i] == '+' || term[i] == '-')) {
                if (term[i] == '-') sign = -1;
                ++i;
            }
            std::string digits;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                digits += term[i++];
            Rat coef = st.scale * Rat(digits.empty() ? Int(1) : Int(digits)) * sign;
            auto bad = [&]() { fail(st, "malformed paperform term '" + term + "'"); };
            if (i >= term.size()) bad();
            if (term[i] == 'a') {
                if (i + 1 != term.size()) bad();
                f.a += coef;
                continue;
            }
            if (term[i] != 'b') bad();
            ++i;
            std::string lo;
            while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                lo += term[i++];
            if (lo.empty()) bad();
            std::string hi = lo;
            if (i != term.size()) {
                if (i + 2 >= term.size() || term.substr(i, 2) != ".." || term[i + 2] != 'b')
                    bad();
                i += 3;
                hi.clear();
                while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
                    hi += term[i++];
                if (hi.empty() || i != term.size()) bad();
            }
            int a = std::stoi(lo), b = std::stoi(hi);
            if (a < 1 || b < a || b > k)
                fail(st, "paperform range b" + lo + "..b" + hi + " is out of bounds");
            for (int s = a; s <= b; ++s) f.b[static_cast<size_t>(s - 1)] += coef;
        }
        return f;
    }

    void run(const statement& st) {
        switch (st.kind) {
        case statement::note:
            emit("note", st.text);
            return;

        case statement::surface_blowup: {
            if (st.ints[0] < 0 || st.ints[0] > 1000) fail(st, "unreasonable blow-up count");
            lat = make_blowup(static_cast<int>(st.ints[0]));
            reset_surface_state();
            emit("surface", describe(*lat));
            return;
        }
        case statement::surface_ruled: {
            if (st.ints[0] < 0 || st.ints[0] > 1000) fail(st, "unreasonable ruling index");
            lat = make_ruled(static_cast<int>(st.ints[0]));
            reset_surface_state();
            emit("surface", describe(*lat));
            return;
        }
        case statement::surface_abstract: {
            lat = make_abstract(st.names);
            reset_surface_state();
            emit("surface", describe(*lat));
            return;
        }
        case statement::pair_decl: {
            lattice& l = need_lat(st);
            if (l.kind != surface_kind::abstract_gram)
                fail(st, "pair declarations only apply to abstract surfaces");
            set_pair(l, st.names[0], st.names[1], st.ints[0]);
            return;
        }
        case statement::class_def: {
            divisor d = eval_expr(st, st.text);
            define(st, st.names[0], d);
            emit("class." + st.names[0], show(d));
            return;
        }
        case statement::fibration_stmt: {
            fibration_data fd;
            fd.Kf2 = st.ints[0];
            fd.chif = st.ints[1];
            fd.g = static_cast<int>(st.ints[2]);
            fd.b = static_cast<int>(st.ints[3]);
            fibration_totals_t t = fibration_totals(fd);
            emit("fibration.c1sq", t.c1sq.str());
            emit("fibration.chi", t.chiO.str());
            emit("fibration.e", t.e.str());
            emit("fibration.sigma", t.sigma.str());
            // A homeomorphism label needs pi_1 = 1 (so base genus 0) and an
            // odd form; sigma not divisible by 16 forces odd via Rokhlin.
            if (sc && fd.b == 0 && t.sigma % 16 != 0) {
                manifold m{t.e, t.sigma, 0, true, true, sc_note};
                emit("fibration.label", homeo_label(m));
            }
            return;
        }
        case statement::pencil_stmt: {
            const lattice& l = need_lat(st);
            if (l.kind != surface_kind::ruled || l.rank() != 2)
                fail(st, "pencil statements need an unblown ruled surface");
            pencil_info pi = genus_pencil(l.param, static_cast<int>(st.ints[0]));
            emit("pencil.k", pi.k.str());
            emit("pencil.member", show_class(l, pi.member));
            emit("pencil.base_points", pi.base_points.str());
            emit("pencil.genus", surgery::show(pi.g));
            return;
        }
        case statement::ledger_decl: {
            lattice& l = need_lat(st);
            divisor b = eval_expr(st, st.text);
            std::vector<component> comps;
            for (const auto& [name, mult] : st.pairs) {
                component c;
                c.name = name;
                c.mult = mult;
                c.cls = eval_expr(st, name);
                comps.push_back(std::move(c));
            }
            led = make_ledger(l, std::move(comps), b);
            fib.reset();
            emit("ledger.b", show(b));
            emit("ledger.components", std::to_string(led->a_side.size()));
            emit("ledger.balance", "ok");
            return;
        }
        case statement::step_stmt: {
            if (!led) fail(st, "no ledger is active");
            step_spec s;
            s.name = st.names[0];
            s.drops = st.pairs;
            s.m = st.ints[0];
            ledger_step(*led, s);
            lat = led->lat;
            emit("step." + s.name + ".balance", "ok");
            return;
        }
        case statement::finalize_stmt: {
            if (!led) fail(st, "no ledger is active");
            fib = finalize(*led);
            lat = fib->lat;
            define(st, st.names[0], fib->fiber);
            emit("fiber", show(fib->fiber));
            emit("fiber.square", pair(*lat, fib->fiber, fib->fiber).str());
            emit("fiber.genus", surgery::show(fib->fiber_genus));
            emit("fiber.components", std::to_string(fib->comps.size()));
            for (const component& c : fib->comps) {
                emit("component." + c.name + ".class", show(c.cls));
                emit("component." + c.name + ".mult", c.mult.str());
                emit("component." + c.name + ".square", pair(*lat, c.cls, c.cls).str());
            }
            std::string secs;
            for (size_t i = 0; i < fib->sections.size(); ++i)
                secs += (i ? "," : "") + fib->sections[i];
            emit("sections", secs);
            led.reset();
            return;
        }
        case statement::tobasis_stmt: {
            const lattice& old = need_lat(st);
            lattice nl = to_blowup_lattice(old);
            auto remap = [&](const divisor& d) {
                return to_blowup_basis(old, pad(d, old.rank()));
            };
            for (auto& [name, d] : defs) d = remap(d);
            // Converted-away generator names stay usable as defined classes.
            for (int i = 0; i < old.rank(); ++i) {
                if (nl.gen_index(old.gens[static_cast<size_t>(i)]) >= 0) continue;
                divisor unit(static_cast<size_t>(old.rank()), Int(0));
                unit[static_cast<size_t>(i)] = 1;
                defs[old.gens[static_cast<size_t>(i)]] = remap(unit);
            }
            if (fib) {
                fib->fiber = remap(fib->fiber);
                for (component& c : fib->comps) c.cls = remap(c.cls);
                fib->lat = nl;
            }
            for (auto& [slot, d] : embeds) d = remap(d);
            lat = nl;
            emit("tobasis", describe(nl));
            if (fib) {
                emit("tobasis.fiber", show(fib->fiber));
                for (const component& c : fib->comps)
                    emit("tobasis.component." + c.name, show(c.cls));
            }
            return;
        }
        case statement::blowup_stmt: {
            lattice l = need_lat(st);
            for (const auto& name : st.names) {
                if (defs.count(name)) fail(st, "'" + name + "' is already a defined class");
                l = blow_up(l, name);
            }
            lat = l;
            std::string names;
            for (size_t i = 0; i < st.names.size(); ++i) names += (i ? "," : "") + st.names[i];
            emit("blowup", names);
            emit("surface", describe(l));
            return;
        }
        case statement::resolve_stmt: {
            std::vector<divisor> xs;
            for (size_t i = 1; i < st.names.size(); ++i) xs.push_back(eval_expr(st, st.names[i]));
            resolve_result rr = resolve_classes(*lat, xs);
            define(st, st.names[0], rr.cls);
            emit("resolve." + st.names[0] + ".class", show(rr.cls));
            emit("resolve." + st.names[0] + ".square", rr.square.str());
            if (!rr.pairwise.empty()) {
                std::string ps;
                for (size_t i = 0; i < rr.pairwise.size(); ++i)
                    ps += (i ? "," : "") + rr.pairwise[i].str();
                emit("resolve." + st.names[0] + ".pairings", ps);
            }
            return;
        }
        case statement::plumbing_stmt: {
            plumb = make_plumbing(st.ints[0], st.ints[1]);
            embeds.clear();
            emit("plumbing.p", plumb->p.str());
            emit("plumbing.q", plumb->q.str());
            emit("plumbing.length", std::to_string(plumb->length()));
            std::vector<Int> ws = weights(*plumb);
            std::string wstr;
            for (size_t i = 0; i < ws.size(); ++i) wstr += (i ? "," : "") + ws[i].str();
            emit("plumbing.weights", wstr);
            emit("plumbing.det", det(chain_matrix(*plumb)).str());
            emit("plumbing.boundary", boundary_lens(*plumb));
            return;
        }
        case statement::embed_stmt: {
            if (!plumb) fail(st, "no plumbing chain is active");
            int slot = static_cast<int>(st.ints[0]);
            if (slot > plumb->length())
                fail(st, "embedding slot u" + std::to_string(slot) + " exceeds the chain length");
            divisor d = eval_expr(st, st.text);
            embeds[slot] = d;
            emit("embed.u" + std::to_string(slot), show(d));
            return;
        }
        case statement::certify_stmt: {
            const lattice& l = need_lat(st);
            divisor K = canonical(l);
            embedding emb = collect_embedding(st);
            validate_embedding(l, *plumb, emb);
            emit("kw.embedding", "ok");
            linform kdotw = canonical_dot_w(l);
            linform restricted = restrict_and_pair(l, K, *plumb, emb);
            linform exotic = exotic_functional(l, K, *plumb, emb);
            emit("kw.K_dot_w", show_form(kdotw));
            emit("kw.restricted", show_form(restricted));
            emit("kw.exotic", show_form(exotic));
            positivity_report pos = positivity_over_cone(exotic);
            emit("kw.positive", pos.positive ? "true" : "false");
            std::string vs;
            for (size_t i = 0; i < pos.vertex_values.size(); ++i)
                vs += (i ? "," : "") + surgery::show(pos.vertex_values[i]);
            emit("kw.vertices", vs);
            if (pos.vertex_values.size() > 1)
                emit("kw.vertex_m1", surgery::show(pos.vertex_values[1]));
            if (pos.witness >= 0)
                emit("kw.positive.witness", "vertex " + std::to_string(pos.witness));
            descent_report dr = descent_check(l, K, *plumb, emb);
            std::string ps;
            for (size_t i = 0; i < dr.pairings.size(); ++i)
                ps += (i ? "," : "") + dr.pairings[i].str();
            emit("kw.descent.pairings", ps);
            emit("kw.descent.restricted_square", surgery::show(dr.restricted_square));
            emit("kw.descent.square_ok", dr.square_ok ? "true" : "false");
            last_restricted = restricted;
            last_exotic = exotic;
            return;
        }
        case statement::paperform_stmt: {
            const linform* computed =
                st.names[0] == "restricted" ? (last_restricted ? &*last_restricted : nullptr)
                                            : (last_exotic ? &*last_exotic : nullptr);
            if (!computed) fail(st, "paperform needs a preceding 'certify kw'");
            linform paper = paper_terms(st, computed->symbols());
            if (paper == *computed) {
                emit("paperform." + st.names[0], "match");
            } else {
                emit("paperform." + st.names[0], "mismatch");
                emit("paperform." + st.names[0] + ".delta",
                     show_form(form_sub(*computed, paper)));
            }
            return;
        }
        case statement::paperclaim_stmt: {
            const std::string* got = rep.find_last(st.names[0]);
            if (!got) fail(st, "paperclaim references unknown report key '" + st.names[0] + "'");
            emit("paperclaim." + st.names[0], st.text);
            emit("paperclaim." + st.names[0] + ".match", *got == st.text ? "true" : "false");
            return;
        }
        case statement::verify_stmt: {
            divisor lhs = eval_expr(st, st.text);
            divisor rhs = eval_expr(st, st.text2);
            relation_check rc = verify_relation(*lat, lhs, rhs);
            if (rc.consistent) {
                emit("verify." + st.names[0], "consistent");
            } else {
                emit("verify." + st.names[0],
                     "inconsistent(" + rc.witness + ":" + rc.defect.str() + ")");
                fail(st, "relation '" + st.names[0] + "' fails against generator " + rc.witness +
                             " with defect " + rc.defect.str());
            }
            return;
        }
        case statement::invariants_stmt: {
            manifold m;
            m.e = st.ints[0];
            m.sigma = st.ints[1];
            m.b1 = 0;
            m.odd = st.names[0] == "odd";
            m.sc = sc;
            m.sc_note = sc_note;
            inv = m;
            emit_manifold(st);
            return;
        }
        case statement::assume_stmt: {
            sc = true;
            sc_note = st.text;
            if (inv) {
                inv->sc = true;
                inv->sc_note = st.text;
            }
            emit("assume.sc", st.text);
            return;
        }
        case statement::blowdown_stmt: {
            int k = 0;
            if (st.ints.empty()) {
                // Validated form: the active plumbing chain must embed.
                const lattice& l = need_lat(st);
                embedding emb = collect_embedding(st);
                validate_embedding(l, *plumb, emb);
                k = plumb->length();
                if (!inv) {
                    if (l.kind != surface_kind::blowup)
                        fail(st, "no manifold invariants to blow down");
                    // Ambient CP2 # param CP2bar.
                    manifold m;
                    m.e = 3 + l.param;
                    m.sigma = 1 - l.param;
                    m.b1 = 0;
                    m.odd = true;
                    m.sc = sc;
                    m.sc_note = sc_note;
                    inv = m;
                    emit("ambient.e", m.e.str());
                    emit("ambient.sigma", m.sigma.str());
                }
            } else {
                if (!inv) fail(st, "no manifold invariants to blow down");
                plumbing c = make_plumbing(st.ints[0], st.ints[1]);
                k = c.length();
                emit("blowdown.p", c.p.str());
                emit("blowdown.q", c.q.str());
            }
            inv = blowdown_invariants(*inv, k);
            emit("blowdown.k", std::to_string(k));
            emit_manifold(st);
            return;
        }
        case statement::sw_stmt: {
            const std::string& sub = st.names[0];
            if (sub == "trivial") {
                sw = sw_trivial();
            } else if (sub == "blowup") {
                if (!sw) fail(st, "sw blowup needs a current basic-class set");
                sw = sw_blowup(*sw, st.names[1]);
            } else if (sub == "taubes") {
                if (!inv) fail(st, "sw taubes needs manifold invariants");
                sw = sw_taubes(c1sq(*inv));
            } else if (sub == "descend") {
                if (!sw) fail(st, "sw descend needs a current basic-class set");
                if (!inv) fail(st, "sw descend needs manifold invariants");
                sw = sw_descend(c1sq(*inv));
            } else if (sub == "sum_trivial") {
                sw = sw_sum_trivial(static_cast<int>(st.ints[0]));
            } else if (sub == "minimality") {
                if (!sw) fail(st, "sw minimality needs a current basic-class set");
                minimality_report mr = sw_minimality(*sw);
                emit("sw.minimal", mr.minimal ? "true" : "false");
                if (!mr.minimal) emit("sw.witness", mr.witness);
                return;
            }
            if (sw->mode == sw_state::abstract_k) {
                emit("sw.classes", "{+Kbar,-Kbar}");
                emit("sw.ksq", sw->ksq.str());
            } else {
                emit("sw.classes", show_sw(*sw));
            }
            size_t count = sw->mode == sw_state::vectors ? sw->classes.size()
                           : sw->mode == sw_state::abstract_k ? 2
                                                              : 0;
            emit("sw.count", std::to_string(count));
            return;
        }
        case statement::assert_stmt: {
            const std::string* got = rep.find_last(st.names[0]);
            if (!got) fail(st, "assert references unknown report key '" + st.names[0] + "'");
            if (*got != st.text)
                fail(st, "assert " + st.names[0] + ": expected \"" + st.text + "\", got \"" +
                             *got + "\"");
            return;
        }
        case statement::report_stmt:
            return;
        }
    }
};

} // namespace

report run_plan(const plan& p) {
    executor ex;
    for (size_t i = 0; i < p.stmts.size(); ++i) {
        const statement& st = p.stmts[i];
        if (st.kind == statement::report_stmt && i + 1 != p.stmts.size())
            throw check_error("line " + std::to_string(st.line) +
                              ": 'report' must be the last statement");
        ex.run(st);
    }
    return ex.rep;
}

} // namespace surgery
