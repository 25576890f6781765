#include "subneg/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "subneg/algebra.hpp"
#include "subneg/g3.hpp"
#include "subneg/hist.hpp"
#include "subneg/interpolate.hpp"
#include "subneg/proof.hpp"
#include "subneg/transforms.hpp"

namespace subneg {

namespace {

constexpr int kExitProvable = 0;
constexpr int kExitUnprovable = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

using nlohmann::json;

Logic require_logic(const std::string& name) {
    auto l = parse_logic(name);
    if (!l) throw CLI::ValidationError("--logic", "unknown logic '" + name + "'");
    return *l;
}

double wall_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct ProveOpts {
    std::string logic;
    std::string input;
    std::string proof_file;
    bool naive = false;
    bool stats = false;
    bool as_json = false;
    int fuel = 30;
};

int cmd_prove(const ProveOpts& opt, std::ostream& out, std::ostream& err) {
    Logic logic = require_logic(opt.logic);
    Sequent seq = parse_sequent(opt.input);
    auto t0 = std::chrono::steady_clock::now();

    std::string verdict;
    int code;
    json jstats;
    std::optional<ProofTree> proof;

    if (opt.naive) {
        NaiveResult r = naive_prove(seq, logic, opt.fuel);
        verdict = r.provable() ? "PROVABLE" : "EXHAUSTED";
        code = r.provable() ? kExitProvable : kExitExhausted;
        proof = std::move(r.proof);
        jstats["fuel"] = opt.fuel;
    } else {
        Decision d = decide(seq, logic);
        verdict = d.provable() ? "PROVABLE" : "UNPROVABLE";
        code = d.provable() ? kExitProvable : kExitUnprovable;
        proof = std::move(d.proof);
        jstats["nodes_expanded"] = d.stats.nodes_expanded;
        jstats["max_branch_length"] = d.stats.max_branch_length;
        jstats["max_sequent_size"] = d.stats.max_sequent_size;
    }
    jstats["wall_ms"] = wall_ms(t0);

    if (!opt.proof_file.empty() && proof) {
        std::ofstream f(opt.proof_file, std::ios::binary);
        if (!f) {
            err << "cannot write proof file '" << opt.proof_file << "'\n";
            return kExitUsage;
        }
        f << serialize(*proof);
    }

    if (opt.as_json) {
        json j;
        j["verdict"] = verdict;
        if (opt.stats) j["stats"] = jstats;
        out << j.dump() << "\n";
    } else {
        out << verdict << "\n";
        if (opt.stats)
            for (auto& [k, v] : jstats.items()) out << k << ": " << v.dump() << "\n";
    }
    return code;
}

int cmd_check(const std::string& logic_name, const std::string& file, bool as_json,
              std::ostream& out, std::ostream& err) {
    Logic logic = require_logic(logic_name);
    std::ifstream f(file, std::ios::binary);
    if (!f) {
        err << "cannot read proof file '" << file << "'\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    ProofTree t = deserialize(buf.str());
    CheckResult r = check(t, logic);
    if (as_json) {
        json j;
        j["ok"] = r.ok;
        if (!r.ok) {
            j["path"] = r.path;
            j["reason"] = r.reason;
        }
        out << j.dump() << "\n";
    } else {
        out << (r.ok ? "OK" : "INVALID") << "\n";
        if (!r.ok) err << "at " << r.path << ": " << r.reason << "\n";
    }
    return r.ok ? 0 : 1;
}

int cmd_interpolate(const std::string& logic_name, const std::string& input, bool as_json,
                    std::ostream& out) {
    Logic logic = require_logic(logic_name);
    SplitSequent split = parse_split_sequent(input);
    auto result = interpolate(split, logic);
    if (as_json) {
        json j;
        if (result) {
            j["interpolant"] = to_string(result->interpolant);
            j["left"] = "PROVABLE";
            j["right"] = "PROVABLE";
        } else {
            j["verdict"] = "NOT_PROVABLE";
        }
        out << j.dump() << "\n";
        return result ? kExitProvable : kExitUnprovable;
    }
    if (!result) {
        out << "NOT_PROVABLE\n";
        return kExitUnprovable;
    }
    out << "interpolant: " << to_string(result->interpolant) << "\n";
    out << "left: PROVABLE\n";
    out << "right: PROVABLE\n";
    return kExitProvable;
}

int cmd_countermodel(const std::string& logic_name, int max_size, const std::string& input,
                     bool as_json, std::ostream& out) {
    Logic logic = require_logic(logic_name);
    Sequent seq = parse_sequent(input);
    auto cm = find_countermodel(seq, logic, max_size);
    if (as_json) {
        json j;
        if (cm) {
            j["size"] = cm->algebra.size;
            j["top"] = cm->algebra.top;
            json leq = json::array();
            for (int a = 0; a < cm->algebra.size; a++) {
                json row = json::array();
                for (int b = 0; b < cm->algebra.size; b++)
                    row.push_back(cm->algebra.le(a, b) ? 1 : 0);
                leq.push_back(row);
            }
            j["leq"] = leq;
            j["neg"] = cm->algebra.neg;
            json val;
            for (auto& [atom, x] : cm->valuation) val[atom] = x;
            j["valuation"] = val;
        } else {
            j["countermodel"] = nullptr;
        }
        out << j.dump() << "\n";
        return cm ? 0 : 1;
    }
    if (!cm) {
        out << "NONE\n";
        return 1;
    }
    out << to_string(cm->algebra);
    out << "valuation:";
    for (auto& [atom, x] : cm->valuation) out << " " << atom << "=" << x;
    out << "\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decision procedures for positive logic with weak negations (n, nef, copc, mpc)"};
    app.require_subcommand(1);

    ProveOpts prove;
    auto* p = app.add_subcommand("prove", "decide a sequent or formula");
    p->add_option("--logic", prove.logic, "n | nef | copc | mpc")->required();
    auto* naive_flag =
        p->add_flag("--naive", prove.naive, "fuel-bounded search in the plain calculus");
    p->add_option("--fuel", prove.fuel, "naive search height bound")
        ->check(CLI::PositiveNumber)
        ->needs(naive_flag);
    p->add_option("--proof", prove.proof_file, "write the proof as JSON");
    p->add_flag("--stats", prove.stats, "print search statistics");
    p->add_flag("--json", prove.as_json, "structured output");
    p->add_option("input", prove.input, "sequent `g1, g2 => f` or formula")->required();

    std::string check_logic, check_file;
    bool check_json = false;
    auto* c = app.add_subcommand("check", "validate a serialized proof");
    c->add_option("--logic", check_logic, "n | nef | copc | mpc")->required();
    c->add_flag("--json", check_json, "structured output");
    c->add_option("proof", check_file, "proof JSON file")->required();

    std::string ip_logic, ip_input;
    bool ip_json = false;
    auto* i = app.add_subcommand("interpolate", "extract a Craig interpolant");
    i->add_option("--logic", ip_logic, "n | nef | copc | mpc")->required();
    i->add_flag("--json", ip_json, "structured output");
    i->add_option("input", ip_input, "split sequent `g1 ; d1, d2 => f`")->required();

    std::string tr_input;
    bool tr_json = false;
    auto* t = app.add_subcommand("translate", "translate mpc negation away (~f to f~ -> ~f~)");
    t->add_flag("--json", tr_json, "structured output");
    t->add_option("input", tr_input, "formula")->required();

    std::string si_logic, si_input;
    bool si_json = false;
    auto* si = app.add_subcommand("simplify", "reduce negation towers (copc/mpc only)");
    si->add_option("--logic", si_logic, "copc | mpc")->required();
    si->add_flag("--json", si_json, "structured output");
    si->add_option("input", si_input, "formula")->required();

    std::string cm_logic, cm_input;
    int cm_max = 4;
    bool cm_json = false;
    auto* cm = app.add_subcommand("countermodel", "search finite refuting algebras");
    cm->add_option("--logic", cm_logic, "n | nef | copc | mpc")->required();
    cm->add_option("--max-size", cm_max, "largest algebra size to try")
        ->check(CLI::Range(1, 6));
    cm->add_flag("--json", cm_json, "structured output");
    cm->add_option("input", cm_input, "sequent or formula")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (p->parsed()) return cmd_prove(prove, out, err);
        if (c->parsed()) return cmd_check(check_logic, check_file, check_json, out, err);
        if (i->parsed()) return cmd_interpolate(ip_logic, ip_input, ip_json, out);
        if (t->parsed()) {
            FormulaPtr f = parse_formula(tr_input);
            if (tr_json)
                out << json{{"result", to_string(tilde(f))}}.dump() << "\n";
            else
                out << to_string(tilde(f)) << "\n";
            return 0;
        }
        if (si->parsed()) {
            Logic l = require_logic(si_logic);
            if (l != Logic::CoPC && l != Logic::MPC) {
                err << "simplify needs --logic copc or mpc\n";
                return kExitUsage;
            }
            FormulaPtr f = parse_formula(si_input);
            if (si_json)
                out << json{{"result", to_string(reduce_negations(f))}}.dump() << "\n";
            else
                out << to_string(reduce_negations(f)) << "\n";
            return 0;
        }
        if (cm->parsed()) return cmd_countermodel(cm_logic, cm_max, cm_input, cm_json, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ProofFormatError& e) {
        err << "proof format error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const SplitError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}

}  // namespace subneg
