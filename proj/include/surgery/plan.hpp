#pragma once

#include "surgery/numeric.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace surgery {

// One line of a surgery plan. Line-oriented, one statement per line. A '#'
// at the start of a line or after whitespace opens a comment (a '#' inside
// a token, as in CP2#7CP2bar, does not). The value of `assert` and
// `paperclaim` is the literal remainder of the line:
//
//   note "<text>"
//   surface blowup <k> | surface ruled <n> | surface abstract <name>...
//   pair <g1> <g2> <int>                   (abstract Gram entry, symmetric)
//   class <name> = <class expression>
//   fibration kf2 <int> chif <int> g <int> b <int>
//   pencil g <int>
//   ledger <B expression> : <mult> <name> [, <mult> <name>]...
//   step as <name> drops <name> <int> [, <name> <int>]... mult <int>
//   finalize as <name>
//   tobasis blowup
//   blowup <name> [<name>]...
//   resolve <name> = <expr> [, <expr>]...
//   plumbing <p> <q>
//   embed u<i> = <expr>
//   certify kw
//   paperform <restricted|exotic> <num>/<den> <term>...   (terms like 80a,
//       -40b1, -19b4..b13; ranges may overlap, coefficients accumulate)
//   paperclaim <key> <value>
//   verify <name> : <expr> == <expr>
//   invariants e <int> sigma <int> parity <odd|even>
//   assume sc "<justification>"
//   blowdown            (validated: uses the active plumbing + embedding)
//   blowdown <p> <q>    (abstract invariant bookkeeping)
//   sw trivial | sw blowup <name> | sw taubes | sw descend
//       | sw sum_trivial <m> | sw minimality
//   assert <key> <value>
//   report
struct statement {
    enum kind_t {
        note,
        surface_blowup,
        surface_ruled,
        surface_abstract,
        pair_decl,
        class_def,
        fibration_stmt,
        pencil_stmt,
        ledger_decl,
        step_stmt,
        finalize_stmt,
        tobasis_stmt,
        blowup_stmt,
        resolve_stmt,
        plumbing_stmt,
        embed_stmt,
        certify_stmt,
        paperform_stmt,
        paperclaim_stmt,
        verify_stmt,
        invariants_stmt,
        assume_stmt,
        blowdown_stmt,
        sw_stmt,
        assert_stmt,
        report_stmt,
    };

    kind_t kind = report_stmt;
    int line = 0;

    std::vector<std::string> names;                   // identifiers / terms
    std::vector<Int> ints;                            // numeric arguments
    std::vector<std::pair<std::string, Int>> pairs;   // drops / ledger entries
    std::string text;                                 // expression or value
    std::string text2;                                // second expression
    Rat scale;                                        // paperform prefactor

    bool operator==(const statement& o) const {
        return kind == o.kind && names == o.names && ints == o.ints && pairs == o.pairs &&
               text == o.text && text2 == o.text2 && scale == o.scale;
    }
};

struct plan {
    std::vector<statement> stmts;
    bool operator==(const plan& o) const { return stmts == o.stmts; }
};

plan parse_plan(std::istream& in);
plan parse_plan_file(const std::string& path);

// Canonical re-rendering; parse_plan(print_plan(p)) == p.
std::string print_plan(const plan& p);

} // namespace surgery
