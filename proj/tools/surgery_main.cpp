#include "surgery/blowdown.hpp"
#include "surgery/matrix.hpp"
#include "surgery/mcg.hpp"
#include "surgery/plan.hpp"
#include "surgery/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#ifndef SURGERY_PRESET_DIR
#define SURGERY_PRESET_DIR "presets"
#endif

namespace {

int run_plan_file(const std::string& path, const std::string& format) {
    surgery::plan p = surgery::parse_plan_file(path);
    surgery::report rep = surgery::run_plan(p);
    if (format == "kv")
        std::cout << surgery::render_kv(rep);
    else
        std::cout << surgery::render_text(rep);
    return 0;
}

std::string normalize_case_name(std::string name) {
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
}

void list_presets(const std::string& dir) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".plan") names.push_back(entry.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    for (const auto& n : names) std::cout << n << '\n';
}

int mcg_verify(const std::string& path) {
    surgery::derivation d = surgery::parse_derivation_file(path);
    surgery::verify_derivation(d);
    std::cout << "genus     " << d.g << '\n';
    std::cout << "moves     " << d.moves.size() << '\n';
    std::cout << "start     " << surgery::show_word(d.start) << '\n';
    std::cout << "end       " << surgery::show_word(d.end) << '\n';
    std::cout << "replay    ok\n";
    std::cout << "homology  preserved\n";
    return 0;
}

int blowdown_info(const surgery::Int& p, const surgery::Int& q) {
    surgery::plumbing c = surgery::make_plumbing(p, q);
    std::vector<surgery::Int> ws = surgery::weights(c);
    std::cout << "p          " << c.p.str() << '\n';
    std::cout << "q          " << c.q.str() << '\n';
    std::cout << "length     " << c.length() << '\n';
    std::string expansion, wstr;
    for (size_t i = 0; i < c.rs.size(); ++i) {
        expansion += (i ? "," : "") + c.rs[i].str();
        wstr += (i ? "," : "") + ws[i].str();
    }
    std::cout << "expansion  " << expansion << '\n';
    std::cout << "weights    " << wstr << '\n';
    std::cout << "cf         " << surgery::show(surgery::cf_value(c.rs)) << '\n';
    std::cout << "det        " << surgery::det(surgery::chain_matrix(c)).str() << '\n';
    std::cout << "boundary   " << surgery::boundary_lens(c) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surgery calculus for blow-up ledgers, mapping-class rewriting, "
                 "and rational blowdown certificates"};
    app.require_subcommand(1);

    std::string plan_path, case_name, deriv_path, kv_path;
    std::string format = "text";
    std::string presets_dir = SURGERY_PRESET_DIR;
    bool list = false;
    std::string p_str, q_str;

    CLI::App* run = app.add_subcommand("run", "execute a plan file and print its report");
    run->add_option("plan", plan_path, "path to a .plan file")->required();
    run->add_option("--format", format, "output format: text or kv")
        ->check(CLI::IsMember({"text", "kv"}));

    CLI::App* cs = app.add_subcommand("case", "execute a named built-in case");
    cs->add_option("name", case_name, "case name (see --list)");
    cs->add_option("--format", format, "output format: text or kv")
        ->check(CLI::IsMember({"text", "kv"}));
    cs->add_option("--presets", presets_dir, "directory containing .plan files");
    cs->add_flag("--list", list, "list available cases");

    CLI::App* mcg = app.add_subcommand("mcg", "mapping class group utilities");
    CLI::App* mcg_v = mcg->add_subcommand("verify", "replay a derivation file");
    mcg_v->add_option("derivation", deriv_path, "path to a .deriv file")->required();
    mcg->require_subcommand(1);

    CLI::App* bd = app.add_subcommand("blowdown", "print the linear chain for C(p,q)");
    bd->add_option("p", p_str, "p > q >= 1, chain for L(p^2, pq-1)")->required();
    bd->add_option("q", q_str, "")->required();

    CLI::App* rp = app.add_subcommand("report", "re-render a key=value report file");
    rp->add_option("file", kv_path, "path to a kv report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return run_plan_file(plan_path, format);
        if (cs->parsed()) {
            if (list) {
                list_presets(presets_dir);
                return 0;
            }
            if (case_name.empty()) throw surgery::parse_error("case: missing case name");
            std::string file = presets_dir + "/" + normalize_case_name(case_name) + ".plan";
            if (!std::filesystem::exists(file))
                throw surgery::parse_error("unknown case: " + case_name);
            return run_plan_file(file, format);
        }
        if (mcg_v->parsed()) return mcg_verify(deriv_path);
        if (bd->parsed()) {
            auto digits = [](const std::string& s) {
                return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
                    return std::isdigit(c) != 0;
                });
            };
            if (!digits(p_str) || !digits(q_str))
                throw surgery::parse_error("blowdown: p and q must be positive integers");
            return blowdown_info(surgery::Int(p_str), surgery::Int(q_str));
        }
        if (rp->parsed()) {
            std::ifstream in(kv_path);
            if (!in) throw surgery::parse_error("cannot open report file: " + kv_path);
            surgery::report rep;
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty()) continue;
                size_t eq = line.find('=');
                if (eq == std::string::npos)
                    throw surgery::parse_error("line " + std::to_string(lineno) +
                                               ": expected key=value");
                rep.kv.emplace_back(line.substr(0, eq), line.substr(eq + 1));
            }
            std::cout << surgery::render_text(rep);
            return 0;
        }
    } catch (const surgery::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const surgery::check_error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
