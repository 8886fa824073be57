#include "surgery/pencilscript.hpp"

namespace surgery {

ledger make_ledger(lattice lat, std::vector<component> a, divisor b) {
    ledger led;
    led.lat = std::move(lat);
    led.a_side = std::move(a);
    led.b_side = std::move(b);
    for (auto& c : led.a_side) c.cls = pad(c.cls, led.lat.rank());
    led.b_side = pad(led.b_side, led.lat.rank());
    check_balance(led);
    return led;
}

void check_balance(const ledger& led) {
    divisor sum(static_cast<size_t>(led.lat.rank()), Int(0));
    for (const auto& c : led.a_side) sum = add(sum, scale(c.mult, c.cls));
    if (sum != led.b_side)
        throw check_error("ledger balance violated after step " + std::to_string(led.steps) +
                          ": components sum to " + show_class(led.lat, sum) + ", B side is " +
                          show_class(led.lat, led.b_side));
}

void ledger_step(ledger& led, const step_spec& s) {
    check_balance(led);
    led.lat = blow_up(led.lat, s.name);
    int n = led.lat.rank();
    for (auto& c : led.a_side) c.cls = pad(c.cls, n);
    led.b_side = pad(led.b_side, n);
    divisor e(static_cast<size_t>(n), Int(0));
    e[static_cast<size_t>(n - 1)] = 1;
    for (const auto& [name, d] : s.drops) {
        bool found = false;
        for (auto& c : led.a_side)
            if (c.name == name) {
                c.cls = sub(c.cls, scale(d, e));
                found = true;
                break;
            }
        if (!found) throw check_error("ledger step drops unknown component: " + name);
    }
    if (s.m != 0)
        led.a_side.push_back({s.name, s.m, e});
    else
        led.sections.push_back(s.name);
    led.b_side = sub(led.b_side, e);
    ++led.steps;
    check_balance(led);
}

fiber_config finalize(const ledger& led) {
    check_balance(led);
    fiber_config fc;
    fc.lat = led.lat;
    fc.comps = led.a_side;
    fc.fiber = led.b_side;
    fc.sections = led.sections;
    Int sq = pair(fc.lat, fc.fiber, fc.fiber);
    if (sq != 0)
        throw check_error("fiber class has square " + sq.str() + ", expected 0");
    fc.fiber_genus = genus(fc.lat, fc.fiber);
    if (denominator(fc.fiber_genus) != 1)
        throw check_error("fiber genus is not an integer");
    for (const auto& c : fc.comps) {
        Rat gc = genus(fc.lat, c.cls);
        if (gc != 0)
            throw check_error("component " + c.name + " has genus " + show(gc) + ", expected 0");
    }
    return fc;
}

resolve_result resolve_classes(const lattice& l, const std::vector<divisor>& xs) {
    if (xs.empty()) throw std::invalid_argument("resolve needs at least one class");
    resolve_result r;
    r.cls = divisor(static_cast<size_t>(l.rank()), Int(0));
    for (const auto& x : xs) r.cls = add(r.cls, x);
    r.square = pair(l, r.cls, r.cls);
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            r.pairwise.push_back(pair(l, xs[i], xs[j]));
    return r;
}

relation_check verify_relation(const lattice& l, const divisor& lhs, const divisor& rhs) {
    divisor d = sub(lhs, rhs);
    relation_check rc;
    rc.defect = 0;
    int n = l.rank();
    for (int i = 0; i < n; ++i) {
        divisor gi(static_cast<size_t>(n), Int(0));
        gi[static_cast<size_t>(i)] = 1;
        Int v = pair(l, d, gi);
        if (v != 0) {
            rc.consistent = false;
            rc.witness = l.gens[static_cast<size_t>(i)];
            rc.defect = v;
            return rc;
        }
    }
    rc.consistent = true;
    return rc;
}

lattice k3_pencil_case1() {
    std::vector<std::string> gens = {"E0"};
    for (int i = 1; i <= 5; ++i) gens.push_back("E" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) gens.push_back("F" + std::to_string(i));
    for (int i = 1; i <= 5; ++i) gens.push_back("G" + std::to_string(i));
    lattice l = make_abstract(gens);
    for (const auto& g : l.gens) set_pair(l, g, g, -2);
    for (int i = 1; i <= 5; ++i) {
        std::string E = "E" + std::to_string(i);
        std::string F = "F" + std::to_string(i);
        std::string G = "G" + std::to_string(i);
        set_pair(l, "E0", E, 1);
        set_pair(l, E, F, 1);
        set_pair(l, E, G, 1);
        set_pair(l, F, G, 2);   // same fiber, through both base points
        for (int j = i + 1; j <= 5; ++j) {
            set_pair(l, F, "F" + std::to_string(j), 1);
            set_pair(l, G, "G" + std::to_string(j), 1);
        }
    }
    return l;
}

lattice k3_pencil_case2() {
    std::vector<std::string> gens = {"E0"};
    for (int i = 1; i <= 7; ++i) gens.push_back("E" + std::to_string(i) + "'");
    gens.push_back("F");
    gens.push_back("G");
    lattice l = make_abstract(gens);
    for (const auto& g : l.gens) set_pair(l, g, g, -2);
    set_pair(l, "E0", "E1'", 1);
    for (int i = 1; i <= 4; ++i)
        set_pair(l, "E" + std::to_string(i) + "'", "E" + std::to_string(i + 1) + "'", 1);
    set_pair(l, "E5'", "E6'", 1);
    set_pair(l, "E5'", "E7'", 1);
    set_pair(l, "F", "E6'", 1);
    set_pair(l, "G", "E7'", 1);
    return l;
}

lattice ix2_config() {
    lattice l = make_abstract({"F", "G", "E"});
    set_pair(l, "F", "F", -3);
    set_pair(l, "G", "G", -3);
    set_pair(l, "E", "E", -2);
    set_pair(l, "F", "G", 1);
    set_pair(l, "E", "F", 1);
    set_pair(l, "E", "G", 1);
    return l;
}

lattice ix4_config() {
    std::vector<std::string> gens;
    for (int i = 1; i <= 7; ++i) gens.push_back("E" + std::to_string(i));
    gens.push_back("F");
    gens.push_back("G");
    lattice l = make_abstract(gens);
    for (int i = 1; i <= 7; ++i) set_pair(l, "E" + std::to_string(i), "E" + std::to_string(i), -2);
    for (int i = 1; i <= 4; ++i)
        set_pair(l, "E" + std::to_string(i), "E" + std::to_string(i + 1), 1);
    set_pair(l, "E5", "E6", 1);
    set_pair(l, "E5", "E7", 1);
    set_pair(l, "F", "F", -3);
    set_pair(l, "G", "G", -3);
    set_pair(l, "F", "E6", 1);
    set_pair(l, "G", "E7", 1);
    return l;
}

} // namespace surgery
