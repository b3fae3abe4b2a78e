#include "qcy/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qcy/catalog.hpp"
#include "qcy/equiv.hpp"
#include "qcy/errors.hpp"
#include "qcy/mckay.hpp"
#include "qcy/transforms.hpp"

namespace qcy {

std::vector<GoldenEntry> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open golden file " + path);
    std::vector<GoldenEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string mat_text;
        if (!(ls >> mat_text)) continue;
        GoldenEntry e;
        e.M = parse_matrix(mat_text);
        std::string tok;
        while (ls >> tok) {
            if (tok == "*")
                e.starred = true;
            else if (tok == "|") {
                if (!(ls >> e.reason)) throw std::invalid_argument("missing reason in " + path);
            } else {
                throw std::invalid_argument("unexpected token '" + tok + "' in " + path);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

std::map<std::string, std::string> load_labeled(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open golden file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key)) continue;
        if (!(ls >> value)) throw std::invalid_argument("missing value for '" + key + "' in " + path);
        out[key] = value;
    }
    return out;
}

struct Keyed {
    std::string key;
    bool starred;
    std::string display;
};

std::vector<Keyed> keyed_golden(const std::vector<GoldenEntry>& entries) {
    std::vector<Keyed> out;
    for (const auto& e : entries)
        out.push_back({canonical_matrix_key(e.M), e.starred, matrix_to_string(e.M)});
    return out;
}

std::vector<Keyed> keyed_reports(const std::vector<CandidateReport>& reports) {
    std::vector<Keyed> out;
    for (const auto& c : reports) out.push_back({c.orbit_key, c.starred, matrix_to_string(c.type.M)});
    return out;
}

/// Orbit-level set comparison, optionally with star placement (the
/// pre-lists carry no star markings); diffs are verbatim lines.
VerifyCheck compare_lists(const std::string& name, const std::vector<Keyed>& expected,
                          const std::vector<Keyed>& actual, bool compare_stars = true) {
    VerifyCheck check;
    check.name = name;
    std::map<std::string, Keyed> exp, act;
    for (const auto& e : expected) exp.emplace(e.key, e);
    for (const auto& a : actual) act.emplace(a.key, a);
    for (const auto& [key, e] : exp) {
        auto it = act.find(key);
        if (it == act.end())
            check.diffs.push_back("missing: " + e.display + (e.starred ? " *" : ""));
        else if (compare_stars && it->second.starred != e.starred)
            check.diffs.push_back("star mismatch: " + e.display + " expected " +
                                  (e.starred ? "starred" : "unstarred"));
    }
    for (const auto& [key, a] : act)
        if (!exp.count(key)) check.diffs.push_back("extra: " + a.display + (a.starred ? " *" : ""));
    check.ok = check.diffs.empty();
    return check;
}

VerifyCheck compare_ruleouts(const std::string& name, const std::vector<GoldenEntry>& expected,
                             const std::vector<RemovedCandidate>& removed) {
    VerifyCheck check;
    check.name = name;
    std::map<std::string, std::string> exp, act;
    for (const auto& e : expected) exp[canonical_matrix_key(e.M)] = e.reason;
    for (const auto& rm : removed) act[rm.report.orbit_key] = to_string(rm.primary);
    for (const auto& e : expected) {
        std::string key = canonical_matrix_key(e.M);
        auto it = act.find(key);
        if (it == act.end())
            check.diffs.push_back("missing rule-out: " + matrix_to_string(e.M) + " | " + e.reason);
        else if (it->second != e.reason)
            check.diffs.push_back("reason mismatch for " + matrix_to_string(e.M) + ": expected " +
                                  e.reason + ", computed " + it->second);
    }
    for (const auto& rm : removed)
        if (!exp.count(rm.report.orbit_key))
            check.diffs.push_back("extra rule-out: " + matrix_to_string(rm.report.type.M) + " | " +
                                  to_string(rm.primary));
    check.ok = check.diffs.empty();
    return check;
}

VerifyCheck compare_gamma(const std::string& name, const std::string& path, int s) {
    VerifyCheck check;
    check.name = name;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open golden file " + path);
    std::vector<GammaRow> expected;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        GammaRow row;
        std::string g;
        if (!(ls >> row.a)) continue;
        if (!(ls >> row.g >> g)) throw std::invalid_argument("bad gamma golden line in " + path);
        row.gamma_max = Int(g);
        expected.push_back(row);
    }
    auto actual = gamma_max_table(s);
    auto fmt = [](const GammaRow& r) {
        std::ostringstream os;
        os << "(" << r.a << "," << r.g << ") -> " << r.gamma_max;
        return os.str();
    };
    size_t n = std::max(expected.size(), actual.size());
    for (size_t k = 0; k < n; ++k) {
        if (k >= expected.size())
            check.diffs.push_back("extra row: " + fmt(actual[k]));
        else if (k >= actual.size())
            check.diffs.push_back("missing row: " + fmt(expected[k]));
        else if (expected[k].a != actual[k].a || expected[k].g != actual[k].g ||
                 expected[k].gamma_max != actual[k].gamma_max)
            check.diffs.push_back("row mismatch: expected " + fmt(expected[k]) + ", computed " +
                                  fmt(actual[k]));
    }
    check.ok = check.diffs.empty();
    return check;
}

void expect_eq(VerifyCheck& check, const std::string& what, const Mat4& expected,
               const Mat4& actual) {
    if (expected != actual)
        check.diffs.push_back(what + ": expected " + matrix_to_string(expected) + ", computed " +
                              matrix_to_string(actual));
}

}  // namespace

std::vector<VerifyCheck> verify_paper(const std::string& data_dir) {
    std::vector<VerifyCheck> checks;
    const std::string gold = data_dir + "/golden/";

    auto four3 = enumerate_four_cycle(3);
    auto four4 = enumerate_four_cycle(4);
    auto three3 = enumerate_three_cycle(3);
    auto three4 = enumerate_three_cycle(4);
    auto tt3 = enumerate_two_two(3);
    auto tt4 = enumerate_two_two(4);

    checks.push_back(compare_lists("four-cycle s=3 classification",
                                   keyed_golden(load_golden(gold + "four_cycle_s3.txt")),
                                   keyed_reports(four3.final)));
    checks.push_back(compare_lists("four-cycle s=4 classification (empty)", {},
                                   keyed_reports(four4.final)));
    checks.push_back(compare_lists("three-cycle s=3 classification",
                                   keyed_golden(load_golden(gold + "three_cycle_s3.txt")),
                                   keyed_reports(three3.final)));
    checks.push_back(compare_lists("three-cycle s=4 classification (empty)", {},
                                   keyed_reports(three4.final)));
    checks.push_back(compare_lists("two-two s=3 pre-list",
                                   keyed_golden(load_golden(gold + "two_two_pre_s3.txt")),
                                   keyed_reports(tt3.stage_a), /*compare_stars=*/false));
    checks.push_back(compare_lists("two-two s=4 pre-list",
                                   keyed_golden(load_golden(gold + "two_two_pre_s4.txt")),
                                   keyed_reports(tt4.stage_a), /*compare_stars=*/false));
    checks.push_back(compare_lists("two-two s=3 classification",
                                   keyed_golden(load_golden(gold + "two_two_final_s3.txt")),
                                   keyed_reports(tt3.final)));
    checks.push_back(compare_lists("two-two s=4 classification",
                                   keyed_golden(load_golden(gold + "two_two_final_s4.txt")),
                                   keyed_reports(tt4.final)));
    checks.push_back(
        compare_ruleouts("two-two s=3 rule-outs", load_golden(gold + "rule_out_s3.txt"), tt3.removed));
    checks.push_back(
        compare_ruleouts("two-two s=4 rule-outs", load_golden(gold + "rule_out_s4.txt"), tt4.removed));
    checks.push_back(compare_gamma("gamma table s=3", gold + "gamma_s3.txt", 3));
    checks.push_back(compare_gamma("gamma table s=4", gold + "gamma_s4.txt", 4));

    checks.push_back(compare_lists("headline four-cycle s=3 row",
                                   keyed_golden(load_golden(gold + "headline_four_s3.txt")),
                                   keyed_reports(four3.final)));
    checks.push_back(compare_lists("headline three-cycle s=3 row",
                                   keyed_golden(load_golden(gold + "headline_three_s3.txt")),
                                   keyed_reports(three3.final)));
    checks.push_back(compare_lists("headline two-two s=3 row",
                                   keyed_golden(load_golden(gold + "headline_two_two_s3.txt")),
                                   keyed_reports(tt3.final)));
    checks.push_back(compare_lists("headline two-two s=4 row",
                                   keyed_golden(load_golden(gold + "headline_two_two_s4.txt")),
                                   keyed_reports(tt4.final)));

    {
        VerifyCheck check;
        check.name = "construction catalog";
        for (const auto& c : execute_catalog(data_dir, /*throw_on_mismatch=*/false))
            if (!c.ok) check.diffs.push_back(c.name + ": " + c.detail);
        check.ok = check.diffs.empty();
        checks.push_back(std::move(check));
    }

    {  // skew group ring of the Klein action on three variables
        VerifyCheck check;
        check.name = "skew example: Klein action (all-ones quiver, identity winding)";
        auto mc = mckay_construction(parse_group_file(data_dir + "/groups/klein.group"),
                                     "V_allones");
        expect_eq(check, "McKay matrix",
                  parse_matrix("0,1,1,1;1,0,1,1;1,1,0,1;1,1,1,0"), mc.M);
        expect_eq(check, "winding permutation", identity4(), mc.P);
        check.ok = check.diffs.empty();
        checks.push_back(std::move(check));
    }

    {  // alternating-group skew ring and its graded twist
        VerifyCheck check;
        check.name = "twist example: alternating-group action";
        auto mc = mckay_construction(parse_group_file(data_dir + "/groups/a4.group"), "V3act");
        Mat4 expected_m = parse_matrix("0,0,0,1;0,0,0,1;0,0,0,1;1,1,1,2");
        expect_eq(check, "McKay matrix", expected_m, mc.M);
        expect_eq(check, "winding permutation", identity4(), mc.P);
        Mat4 n = parse_matrix("0,0,1,0;1,0,0,0;0,1,0,0;0,0,0,1");
        QuiverType twisted = twist_type({mc.M, mc.P, 3}, n);
        expect_eq(check, "twisted adjacency (N M = M)", expected_m, twisted.M);
        expect_eq(check, "twisted permutation (N)", n, twisted.P);
        check.ok = check.diffs.empty();
        checks.push_back(std::move(check));
    }

    {  // the two displayed Ore transforms, replayed on their stated inputs
        VerifyCheck check;
        check.name = "Ore examples: displayed transforms";
        auto kv = load_labeled(gold + "ore_example.txt");
        QuiverType base{parse_matrix(kv.at("base_M")), parse_matrix(kv.at("base_P")), 2};
        QuiverType out1 = ore_type(base, parse_matrix(kv.at("pprime_1")));
        expect_eq(check, "first transform M + (P')^{-1}", parse_matrix(kv.at("out_M_1")), out1.M);
        expect_eq(check, "first transform P (P')^{-1}", parse_matrix(kv.at("out_P_1")), out1.P);
        if (out1.s != 3) check.diffs.push_back("first transform s: expected 3");
        QuiverType out2 = ore_type(base, parse_matrix(kv.at("pprime_2")));
        expect_eq(check, "second transform M + (P')^{-1}", parse_matrix(kv.at("out_M_2")), out2.M);
        expect_eq(check, "second transform P (P')^{-1}", parse_matrix(kv.at("out_P_2")), out2.P);
        if (!commutes(out1)) check.diffs.push_back("first transformed type does not commute");
        check.ok = check.diffs.empty();
        checks.push_back(std::move(check));
    }

    {  // diagonal-plus-swap construction: sub-block, defect, full chain
        VerifyCheck check;
        check.name = "diagonal-plus-swap example: sub-block and Ore chain";
        auto gd = parse_group_file(data_dir + "/groups/diagswap.group");
        auto mc = mckay_construction(gd, "V");
        expect_eq(check, "sub-block McKay matrix",
                  parse_matrix("1,1,0,0;1,0,1,0;0,1,0,1;0,0,1,1"), mc.M);
        for (const auto& d : mc.mckay.completeness_defect)
            if (d != 0) check.diffs.push_back("nonzero completeness defect on the sub-block");
        expect_eq(check, "winding permutation", identity4(), mc.P);
        QuiverType after = ore_type({mc.M, mc.P, 2}, matrix_of_perm({3, 2, 1, 0}));
        QuiverType target{parse_matrix("1,1,1,0;1,1,0,1;1,0,0,2;0,1,2,0"),
                          class_reference_perm(PermClass::TwoTwo), 3};
        if (!types_equivalent(after, target))
            check.diffs.push_back("Ore chain does not land on the sixth two-two s=3 matrix");
        check.ok = check.diffs.empty();
        checks.push_back(std::move(check));
    }

    {  // quartic superpotential homological determinants
        VerifyCheck check;
        check.name = "quartic superpotential hdet values";
        Superpotential w1 =
            load_superpotential_file(data_dir + "/superpotentials/quartic1.sp");
        CycMat g1(2);
        g1.at(0, 0) = Cyc24::integer(1);
        g1.at(1, 1) = Cyc24::i();
        if (!(hdet_of_superpotential_action(w1, g1) == Cyc24::integer(-1)))
            check.diffs.push_back("first quartic action: hdet != -1");
        Superpotential w2 =
            load_superpotential_file(data_dir + "/superpotentials/quartic2.sp");
        CycMat g2(2);
        g2.at(0, 1) = Cyc24::integer(1);
        g2.at(1, 0) = Cyc24::integer(-1);
        if (!(hdet_of_superpotential_action(w2, g2) == Cyc24::integer(-1)))
            check.diffs.push_back("second quartic action: hdet != -1");
        check.ok = check.diffs.empty();
        checks.push_back(std::move(check));
    }

    return checks;
}

std::string render_verify(const std::vector<VerifyCheck>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.ok ? "PASS" : "FAIL") << "  " << c.name << "\n";
        for (const auto& d : c.diffs) os << "      " << d << "\n";
    }
    size_t failed = 0;
    for (const auto& c : checks)
        if (!c.ok) ++failed;
    os << checks.size() << " checks, " << (checks.size() - failed) << " passed, " << failed
       << " failed\n";
    return os.str();
}

bool all_ok(const std::vector<VerifyCheck>& checks) {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

}  // namespace qcy
