#pragma once

#include "surgery/lattice.hpp"

#include <string>
#include <vector>

namespace surgery {

// One curve in a pencil-elimination ledger: a named component of the
// degenerating member (the A side) with its multiplicity.
struct component {
    std::string name;
    Int mult;
    divisor cls;
};

// A blow-up ledger tracks the identity
//     sum_i mult_i * class_i  =  B
// through a scripted sequence of blow-ups at base points. Each step blows
// up once, proper-transforms the A-side components that pass through the
// point (scripted drops), appends the new exceptional to the A side with a
// scripted multiplicity m (m = 0 means it joins neither side: the final
// separating curve), and subtracts one copy of the exceptional from B. The
// engine never infers geometry; it checks the balance after every step.
struct ledger {
    lattice lat;
    std::vector<component> a_side;
    divisor b_side;
    std::vector<std::string> sections;   // names of m = 0 exceptionals
    int steps = 0;
};

ledger make_ledger(lattice lat, std::vector<component> a, divisor b);

void check_balance(const ledger& led);   // throws check_error with both classes

struct step_spec {
    std::string name;                                   // new exceptional
    std::vector<std::pair<std::string, Int>> drops;     // component -> multiplicity of the point
    Int m;                                              // multiplicity of the exceptional in A
};

void ledger_step(ledger& led, const step_spec& s);

// The finished configuration: the fiber class (what is left of B), the
// component classes/multiplicities, and the m = 0 sections. finalize checks
// the balance, fiber^2 = 0, integral fiber genus, and genus 0 for every
// component.
struct fiber_config {
    lattice lat;
    std::vector<component> comps;
    divisor fiber;
    Rat fiber_genus;
    std::vector<std::string> sections;
};

fiber_config finalize(const ledger& led);

// Symplectic resolution bookkeeping: the class of the resolved sphere is
// the sum; callers report the pairwise intersections alongside.
struct resolve_result {
    divisor cls;
    Int square;
    std::vector<Int> pairwise;   // pair(x_i, x_j) for i < j, row-major
};

resolve_result resolve_classes(const lattice& l, const std::vector<divisor>& xs);

// Necessary-condition relation check in a (possibly degenerate) abstract
// lattice: lhs = rhs is consistent iff (lhs - rhs) pairs to zero with every
// generator. Reports the first failing generator.
struct relation_check {
    bool consistent = false;
    std::string witness;   // failing generator when inconsistent
    Int defect;            // its pairing with lhs - rhs
};

relation_check verify_relation(const lattice& l, const divisor& lhs, const divisor& rhs);

// The genus-two pencil on the K3 double plane: abstract Gram of the
// configuration E0 (the branch-line preimage) plus, per singular member
// lambda_1..lambda_5 of the first kind, curves E_i, F_i, G_i. All sixteen
// curves are smooth rational (-2)-curves on the K3; F_i and G_i lie in one
// fiber through both base points (F_i.G_i = 2), distinct-index F/G curves
// meet only at the base points (F_i.F_j = G_i.G_j = 1, F_i.G_j = 0), and
// E_i joins E0 to F_i, G_i.
lattice k3_pencil_case1();

// Second kind: a D7 chain E1'..E7' hanging off E0, with F and G meeting the
// two short arms.
lattice k3_pencil_case2();

// Post-blow-up abstract fiber data. IX-2: three curves F, G, E through one
// point with F^2 = G^2 = -3, E^2 = -2, resolved sphere F+G of square -4.
lattice ix2_config();

// IX-4: D7 chain of (-2)-curves E1..E7 (E5 branches to E6, E7) plus F, G of
// square -3 with F.E6 = G.E7 = 1, F.G = 0. Negative semi-definite of rank 8;
// the kernel is the fiber multiplicity vector (1,2,3,4,5,3,3;1;1).
lattice ix4_config();

} // namespace surgery
