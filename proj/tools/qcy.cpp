// qcy: exact classification of four-vertex quivers supporting twisted graded
// Calabi-Yau algebras of dimension 3, plus the constructions realizing them.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcy/catalog.hpp"
#include "qcy/classify.hpp"
#include "qcy/equiv.hpp"
#include "qcy/errors.hpp"
#include "qcy/mckay.hpp"
#include "qcy/report.hpp"
#include "qcy/transforms.hpp"
#include "qcy/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitUsage = 2;

struct FormatOpt {
    std::string value = "table";
    bool json() const { return value == "json"; }
};

void add_format(CLI::App* cmd, FormatOpt& fmt) {
    cmd->add_option("--format", fmt.value, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
}

qcy::QuiverType parse_type(const std::string& m, const std::string& p, int s) {
    qcy::QuiverType t{qcy::parse_adjacency(m), qcy::parse_permutation(p), s};
    qcy::validate_type(t);
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"four-vertex quiver classification for twisted graded Calabi-Yau algebras"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "run one enumeration engine");
    std::string perm_name;
    int cls_s = 3;
    std::string stage = "full";
    int bound = 0;
    int hilbert_terms = 12;
    FormatOpt cls_fmt;
    classify_cmd->add_option("--perm", perm_name, "permutation class")
        ->required()
        ->check(CLI::IsMember({"four", "three", "two-two"}));
    classify_cmd->add_option("--s", cls_s, "superpotential degree")->required()
        ->check(CLI::IsMember({3, 4}));
    classify_cmd->add_option("--stage", stage, "pre: stop after the determinant stage")
        ->check(CLI::IsMember({"pre", "full"}))
        ->capture_default_str();
    classify_cmd->add_option("--bound", bound, "entry bound for the two-two enumeration");
    classify_cmd->add_option("--hilbert-terms", hilbert_terms, "Hilbert expansion depth")
        ->capture_default_str();
    add_format(classify_cmd, cls_fmt);

    // check
    auto* check_cmd = app.add_subcommand("check", "full report for a single type");
    std::string check_m, check_p;
    int check_s = 3;
    int check_terms = 12;
    FormatOpt check_fmt;
    check_cmd->add_option("--M", check_m, "adjacency matrix")->required();
    check_cmd->add_option("--P", check_p, "vertex permutation")->required();
    check_cmd->add_option("--s", check_s, "superpotential degree")->required();
    check_cmd->add_option("--hilbert-terms", check_terms, "Hilbert expansion depth")
        ->capture_default_str();
    add_format(check_cmd, check_fmt);

    // hilbert
    auto* hilbert_cmd = app.add_subcommand("hilbert", "print H_0..H_N of the matrix Hilbert series");
    std::string hil_m, hil_p;
    int hil_s = 3;
    int hil_terms = 12;
    hilbert_cmd->add_option("--M", hil_m, "adjacency matrix")->required();
    hilbert_cmd->add_option("--P", hil_p, "vertex permutation")->required();
    hilbert_cmd->add_option("--s", hil_s, "superpotential degree")->required();
    hilbert_cmd->add_option("--terms", hil_terms, "expansion depth")->capture_default_str();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "run a construction step");
    construct_cmd->require_subcommand(1);
    auto* mckay_cmd = construct_cmd->add_subcommand("mckay", "skew group ring quiver + winding");
    std::string group_file, action_name;
    int mckay_s = 0;
    FormatOpt mckay_fmt;
    mckay_cmd->add_option("--group", group_file, "group data file")->required();
    mckay_cmd->add_option("--action", action_name, "named action in the file")->required();
    mckay_cmd->add_option("--s", mckay_s, "relation degree of the base algebra (0: report only M and P)");
    add_format(mckay_cmd, mckay_fmt);

    auto* ore_cmd = construct_cmd->add_subcommand("ore", "Ore-extension type transform (s = 2 input)");
    std::string ore_m, ore_p, ore_pprime;
    int ore_s = 2;
    FormatOpt ore_fmt;
    ore_cmd->add_option("--M", ore_m)->required();
    ore_cmd->add_option("--P", ore_p)->required();
    ore_cmd->add_option("--s", ore_s, "relation degree of the input (must be 2)")
        ->check(CLI::IsMember({2}))
        ->capture_default_str();
    ore_cmd->add_option("--Pprime", ore_pprime, "vertex permutation of the twisting automorphism")
        ->required();
    add_format(ore_cmd, ore_fmt);

    auto* twist_cmd = construct_cmd->add_subcommand("twist", "graded-twist type transform");
    std::string tw_m, tw_p, tw_n;
    int tw_s = 3;
    FormatOpt tw_fmt;
    twist_cmd->add_option("--M", tw_m)->required();
    twist_cmd->add_option("--P", tw_p)->required();
    twist_cmd->add_option("--s", tw_s)->required();
    twist_cmd->add_option("--N", tw_n, "vertex permutation of the twisting automorphism")->required();
    add_format(twist_cmd, tw_fmt);

    // gamma-table
    auto* gamma_cmd = app.add_subcommand("gamma-table", "diagonal-pair gamma bounds");
    int gamma_s = 3;
    FormatOpt gamma_fmt;
    gamma_cmd->add_option("--s", gamma_s, "superpotential degree")->required()
        ->check(CLI::IsMember({3, 4}));
    add_format(gamma_cmd, gamma_fmt);

    // verify-paper
    auto* verify_cmd =
        app.add_subcommand("verify-paper", "replay the classification against the golden tables");
    FormatOpt verify_fmt;
    add_format(verify_cmd, verify_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            qcy::ClassifyOptions opts;
            opts.bound = bound;
            opts.hilbert_terms = hilbert_terms;
            opts.stage_full = stage == "full";
            auto cls = *qcy::perm_class_from_string(perm_name);
            auto result = qcy::classify(cls, cls_s, opts);
            if (cls_fmt.json())
                std::cout << qcy::to_json(result).dump(2) << "\n";
            else
                std::cout << qcy::to_table(result);
        } else if (check_cmd->parsed()) {
            auto report = qcy::check_type(parse_type(check_m, check_p, check_s), check_terms);
            if (check_fmt.json())
                std::cout << qcy::to_json(report).dump(2) << "\n";
            else
                std::cout << qcy::to_table(report);
        } else if (hilbert_cmd->parsed()) {
            auto t = parse_type(hil_m, hil_p, hil_s);
            auto h = qcy::hilbert_prefix(t, hil_terms);
            for (size_t k = 0; k < h.terms.size(); ++k)
                std::cout << "H_" << k << " = " << qcy::matrix_to_string(h.terms[k]) << "\n";
            if (h.first_negative) {
                auto [d, i, j] = *h.first_negative;
                std::cout << "first negative entry: degree " << d << ", entry (" << (i + 1) << ","
                          << (j + 1) << ")\n";
            }
        } else if (mckay_cmd->parsed()) {
            auto gd = qcy::parse_group_file(group_file);
            auto mc = qcy::mckay_construction(gd, action_name);
            if (mckay_fmt.json()) {
                nlohmann::json j;
                j["group"] = gd.name;
                j["action"] = action_name;
                j["order"] = mc.group.order();
                j["M"] = qcy::matrix_to_string(mc.M);
                j["P"] = qcy::perm_to_cycles(qcy::perm_of_matrix(mc.P));
                if (mckay_s > 0) j["s"] = mckay_s;
                nlohmann::json defects = nlohmann::json::array();
                for (const auto& d : mc.mckay.completeness_defect) defects.push_back(d.str());
                j["completeness_defect"] = defects;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "group " << gd.name << " (order " << mc.group.order() << "), action "
                          << action_name << "\n";
                std::cout << "M = " << qcy::matrix_to_string(mc.M) << "\n";
                std::cout << "P = " << qcy::perm_to_cycles(qcy::perm_of_matrix(mc.P)) << "\n";
                std::cout << "completeness defect per column:";
                for (const auto& d : mc.mckay.completeness_defect) std::cout << " " << d;
                std::cout << "\n";
                if (mckay_s > 0)
                    std::cout << "type: (M, P, " << mckay_s << ")\n";
            }
        } else if (ore_cmd->parsed()) {
            auto out = qcy::ore_type(parse_type(ore_m, ore_p, 2), qcy::parse_permutation(ore_pprime));
            if (ore_fmt.json()) {
                nlohmann::json j;
                j["M"] = qcy::matrix_to_string(out.M);
                j["P"] = qcy::perm_to_cycles(qcy::perm_of_matrix(out.P));
                j["s"] = out.s;
                j["commutes"] = qcy::commutes(out);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "M = " << qcy::matrix_to_string(out.M) << "\n"
                          << "P = " << qcy::matrix_to_string(out.P) << "\n"
                          << "s = " << out.s << (qcy::commutes(out) ? "" : "  (MP != PM)") << "\n";
            }
        } else if (twist_cmd->parsed()) {
            auto out = qcy::twist_type(parse_type(tw_m, tw_p, tw_s), qcy::parse_permutation(tw_n));
            if (tw_fmt.json()) {
                nlohmann::json j;
                j["M"] = qcy::matrix_to_string(out.M);
                j["P"] = qcy::perm_to_cycles(qcy::perm_of_matrix(out.P));
                j["s"] = out.s;
                j["commutes"] = qcy::commutes(out);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "M = " << qcy::matrix_to_string(out.M) << "\n"
                          << "P = " << qcy::matrix_to_string(out.P) << "\n"
                          << "s = " << out.s << (qcy::commutes(out) ? "" : "  (MP != PM)") << "\n";
            }
        } else if (gamma_cmd->parsed()) {
            if (gamma_fmt.json())
                std::cout << qcy::gamma_json(gamma_s).dump(2) << "\n";
            else
                std::cout << qcy::gamma_table_text(gamma_s);
        } else if (verify_cmd->parsed()) {
            auto checks = qcy::verify_paper(qcy::default_data_dir());
            if (verify_fmt.json()) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : checks) {
                    nlohmann::json e;
                    e["name"] = c.name;
                    e["ok"] = c.ok;
                    e["diffs"] = c.diffs;
                    j.push_back(e);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << qcy::render_verify(checks);
            }
            return qcy::all_ok(checks) ? kExitOk : kExitDiff;
        }
    } catch (const qcy::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
