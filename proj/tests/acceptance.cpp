// Acceptance gate: ten end-to-end checks, one line of output each. Every
// check recomputes its target from scratch (library result against an
// independent oracle or a frozen value) and throws on the first discrepancy;
// the process exits nonzero if any criterion fails.

#include "surgery/blowdown.hpp"
#include "surgery/certify.hpp"
#include "surgery/hirzebruch.hpp"
#include "surgery/mcg.hpp"
#include "surgery/pencilscript.hpp"
#include "surgery/run.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "property_drivers.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace surgery;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] " << n << ": " << what << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "[FAIL] " << n << ": " << what << " -- " << e.what() << "\n";
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

report run_preset(const std::string& name) {
    return run_plan(parse_plan_file(std::string(SURGERY_SOURCE_DIR "/presets/") + name + ".plan"));
}

std::string last(const report& r, const std::string& key) {
    const std::string* v = r.find_last(key);
    require(v != nullptr, "missing report key " + key);
    return *v;
}

std::vector<std::string> all_values(const report& r, const std::string& key) {
    std::vector<std::string> out;
    for (const auto& [k, v] : r.kv)
        if (k == key) out.push_back(v);
    return out;
}

void check_chain(const Int& p, const Int& q, const std::vector<Int>& want_rs, const Rat& want_cf) {
    std::vector<Int> rs = hj_expansion(p, q);
    require(rs == want_rs, "hj_expansion(" + p.str() + "," + q.str() + ")");
    require(cf_value(rs) == want_cf, "cf_value(" + p.str() + "," + q.str() + ")");
    require(oracle::convergent_cf(rs) == want_cf,
            "oracle continued fraction (" + p.str() + "," + q.str() + ")");
}

void check_inverse_column(const int_matrix& m, const rat_matrix& inv, int col,
                          const std::vector<Rat>& want) {
    require(inv.rows == static_cast<int>(want.size()), "inverse size");
    for (int i = 0; i < inv.rows; ++i)
        require(inv.at(i, col) == want[static_cast<size_t>(i)],
                "inverse entry (" + std::to_string(i + 1) + "," + std::to_string(col + 1) + ")");
    // The quoted column really solves M x = e_col.
    for (int i = 0; i < m.rows; ++i) {
        Rat dot(0);
        for (int j = 0; j < m.cols; ++j) dot += Rat(m.at(i, j)) * want[static_cast<size_t>(j)];
        require(dot == (i == col ? 1 : 0), "M * column != e");
    }
}

} // namespace

int main() {
    criterion(1, "Hirzebruch-Jung expansions and continued-fraction values", [] {
        check_chain(11, 1, {13, 2, 2, 2, 2, 2, 2, 2, 2, 2}, Rat(121, 10));
        check_chain(23, 11, {3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 14, 2}, Rat(529, 252));
    });

    criterion(2, "chain determinants against the cofactor oracle; quoted inverse columns", [] {
        int_matrix m1 = chain_matrix(make_plumbing(11, 1));
        require(det(m1) == 121, "det M");
        require(oracle::cofactor_det(m1) == 121, "cofactor det M");
        int_matrix m2 = chain_matrix(make_plumbing(23, 11));
        require(det(m2) == 529, "det M'");
        require(oracle::cofactor_det(m2) == 529, "cofactor det M'");
        check_inverse_column(m1, inverse(m1), 0, fixtures::case1_inverse_col1());
        rat_matrix inv2 = inverse(m2);
        check_inverse_column(m2, inv2, 0, fixtures::case2_inverse_col1());
        check_inverse_column(m2, inv2, 10, fixtures::case2_inverse_col11());
    });

    criterion(3, "restriction and exotic functionals with cone positivity", [] {
        fixtures::chain_case c1 = fixtures::case1();
        divisor k1 = canonical(c1.lat);
        require(restrict_and_pair(c1.lat, k1, c1.chain, c1.emb) == fixtures::case1_restricted_form(),
                "case 1 restricted form");
        linform x1 = exotic_functional(c1.lat, k1, c1.chain, c1.emb);
        require(x1 == fixtures::case1_exotic_form(), "case 1 exotic form");

        fixtures::chain_case c2 = fixtures::case2();
        divisor k2 = canonical(c2.lat);
        require(restrict_and_pair(c2.lat, k2, c2.chain, c2.emb) == fixtures::case2_restricted_form(),
                "case 2 restricted form");
        linform x2 = exotic_functional(c2.lat, k2, c2.chain, c2.emb);
        require(x2 == fixtures::case2_exotic_form(), "case 2 exotic form");

        positivity_report p1 = positivity_over_cone(x1);
        require(p1.positive && p1.witness == -1, "case 1 positivity");
        require(p1.vertex_values.size() == 18, "case 1 vertex count");
        for (const auto& v : p1.vertex_values) require(v >= 0, "case 1 vertex sign");
        require(p1.vertex_values[1] == Rat(198, 121), "case 1 m=1 vertex");

        positivity_report p2 = positivity_over_cone(x2);
        require(p2.positive && p2.witness == -1, "case 2 positivity");
        require(p2.vertex_values.size() == 19, "case 2 vertex count");
        for (const auto& v : p2.vertex_values) require(v >= 0, "case 2 vertex sign");
        require(p2.vertex_values[1] == Rat(1242, 529), "case 2 m=1 vertex");
    });

    criterion(4, "invariant pipelines land on the expected homeomorphism types", [] {
        report a = run_preset("viii_case1");
        require(last(a, "manifold.e") == "10" && last(a, "manifold.sigma") == "-6" &&
                    last(a, "manifold.label") == "CP2#7CP2bar",
                "case 1 pipeline");
        report b = run_preset("viii_case2");
        require(last(b, "manifold.e") == "9" && last(b, "manifold.sigma") == "-5" &&
                    last(b, "manifold.label") == "CP2#6CP2bar",
                "case 2 pipeline");

        report c = run_preset("ix2_five");
        std::vector<std::string> es = all_values(c, "manifold.e");
        std::vector<std::string> sigmas = all_values(c, "manifold.sigma");
        std::vector<std::string> labels = all_values(c, "manifold.label");
        require(es.size() == 6 && sigmas.size() == 6 && labels.size() == 5, "M(i) emission count");
        for (int i = 2; i <= 5; ++i) {
            require(es[static_cast<size_t>(i)] == Int(26 - i).str(), "M(i) Euler number");
            require(sigmas[static_cast<size_t>(i)] == Int(-18 + i).str(), "M(i) signature");
            require(labels[static_cast<size_t>(i - 1)] ==
                        "3CP2#" + Int(21 - i).str() + "CP2bar",
                    "M(i) label");
        }

        report d = run_preset("double_c8");
        require(last(d, "manifold.e") == "18" && last(d, "manifold.sigma") == "-10" &&
                    last(d, "manifold.label") == "3CP2#13CP2bar",
                "two-chain pipeline");
    });

    criterion(5, "monodromy derivations replay; relators act trivially; blocks classify", [] {
        const char* lemmas[] = {"twonodal_pair_g2", "twonodal_pair_nodal_g2",
                                "threenodal_pair_nodal_g3"};
        for (const char* name : lemmas) {
            derivation d = parse_derivation_file(
                std::string(SURGERY_SOURCE_DIR "/derivations/") + name + ".deriv");
            verify_derivation(d);
            chain_homology hom = standard_chain(d.g);
            require(word_to_matrix(d.start, hom) == word_to_matrix(d.end, hom),
                    std::string(name) + " homology action");
        }

        chain_homology h2 = standard_chain(2);
        require(word_to_matrix(h_relator(2), h2) == int_matrix::identity(4), "H(2) identity");
        require(word_to_matrix(i_relator(2), h2) == int_matrix::identity(4), "I(2) identity");

        auto kind_of = [&](const std::string& text) {
            return classify_block(parse_word(text, 2), h2);
        };
        for (const char* text : {"a4^-1 a1 a3 a4", "a4^-1 a3^-1 a2 a4 a3 a4", "a1 a4", "a2 a5"}) {
            block_class bc = kind_of(text);
            require(bc.kind == block_class::n_nodal_spherical && bc.n == 2,
                    std::string("2-nodal block: ") + text);
        }
        block_class nodal = kind_of("a5^-1 a3 a4 a3^-1 a5");
        require(nodal.kind == block_class::lefschetz_nodal, "nodal block");
    });

    criterion(6, "pencil ledgers finalize; resolved spheres have the pinned squares", [] {
        for (const char* name : {"viii_case1", "v_vstar"}) {
            report r = run_preset(name);
            require(last(r, "tobasis.fiber") ==
                        "4h-2e1-e2-e3-e4-e5-e6-e7-e8-e9-e10-e11-e12-e13",
                    std::string(name) + " fiber class");
            require(last(r, "fiber.square") == "0", std::string(name) + " fiber square");
            require(last(r, "fiber.genus") == "2", std::string(name) + " fiber genus");
            int balanced = 0;
            for (const auto& [k, v] : r.kv)
                if (v == "ok" && (k == "ledger.balance" ||
                                  (k.rfind("step.", 0) == 0 &&
                                   k.size() > 8 && k.compare(k.size() - 8, 8, ".balance") == 0)))
                    ++balanced;
            require(balanced == 13, std::string(name) + " balance count");
            require(last(r, "resolve.s.square") == "-13", std::string(name) + " s square");
        }
        require(last(run_preset("viii_case2"), "resolve.sp.square") == "-14", "s' square");
        require(last(run_preset("ix_mixed"), "resolve.S.square") == "-8", "mixed-fiber square");
        require(last(run_preset("ix2_five"), "resolve.S.square") == "-4", "F+G square");
    });

    criterion(7, "K3 pencil relations hold and every single-coefficient mutation is caught", [] {
        lattice l = k3_pencil_case1();
        struct rel {
            divisor lhs, rhs;
        };
        std::vector<rel> rels = {
            {parse_class(l, "5E0"), parse_class(l, "F1-2E1+F2-2E2+F3-2E3+F4-2E4+F5-2E5")},
            {parse_class(l, "G1+F1"), parse_class(l, "2E0+E2+E3+E4+E5")},
        };
        for (const rel& r : rels)
            require(verify_relation(l, r.lhs, r.rhs).consistent, "relation consistency");
        int caught = 0;
        for (const rel& r : rels)
            for (int i = 0; i < l.rank(); ++i) {
                divisor bad = r.lhs;
                bad[static_cast<size_t>(i)] += 1;
                if (!verify_relation(l, bad, r.rhs).consistent) ++caught;
            }
        require(caught == 2 * l.rank(), "mutation detection");
    });

    criterion(8, "fibration totals and the Freedman label of the total space", [] {
        fibration_totals_t t = fibration_totals({Int(4), Int(2), 2, 0});
        require(t.c1sq == -4 && t.chiO == 1 && t.e == 16 && t.sigma == -12, "totals");
        manifold m;
        m.e = t.e;
        m.sigma = t.sigma;
        m.odd = true;
        m.sc = true;
        m.sc_note = "genus-2 fibration with a section";
        require(homeo_label(m) == "CP2#13CP2bar", "label");
    });

    criterion(9, "descent pairings and restricted squares on both chains", [] {
        fixtures::chain_case c1 = fixtures::case1();
        divisor k1 = canonical(c1.lat);
        require(pair(c1.lat, k1, c1.emb.u[0]) == 11, "K.u1");
        require(c1.chain.rs[0] - 2 == 11, "r1 - 2");
        descent_report d1 = descent_check(c1.lat, k1, c1.chain, c1.emb);
        require(d1.all_plus, "case 1 all_plus");
        require(d1.restricted_square == Rat(-10), "case 1 restricted square");
        require(d1.square_ok, "case 1 square_ok");

        fixtures::chain_case c2 = fixtures::case2();
        divisor k2 = canonical(c2.lat);
        require(pair(c2.lat, k2, c2.emb.u[0]) == 1, "K'.u1");
        require(pair(c2.lat, k2, c2.emb.u[10]) == 12, "K'.u11");
        descent_report d2 = descent_check(c2.lat, k2, c2.chain, c2.emb);
        require(d2.all_plus, "case 2 all_plus");
        require(d2.restricted_square == Rat(-12), "case 2 restricted square");
        require(d2.square_ok, "case 2 square_ok");
    });

    criterion(10, "fixed-seed property suites run 1000 cases without failure", [] {
        struct suite {
            const char* name;
            props::result (*run)(unsigned, int);
            unsigned seed;
        };
        const suite suites[] = {
            {"pairing", props::pairing_properties, 20260814u},
            {"moves", props::move_matrix_preservation, 20260815u},
            {"round-trip", props::roundtrip_properties, 20260816u},
            {"blowdown", props::blowdown_b2plus, 20260817u},
        };
        for (const suite& s : suites) {
            props::result r = s.run(s.seed, 1000);
            require(r.cases == 1000 && r.failures == 0,
                    std::string(s.name) + ": " + r.first_failure);
        }
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 acceptance criteria passed\n";
    return 0;
}
