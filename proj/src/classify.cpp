#include "qcy/classify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

#include "qcy/equiv.hpp"
#include "qcy/spectral.hpp"

namespace qcy {

std::string to_string(PermClass c) {
    switch (c) {
        case PermClass::FourCycle: return "four";
        case PermClass::ThreeCycle: return "three";
        default: return "two-two";
    }
}

std::optional<PermClass> perm_class_from_string(const std::string& name) {
    if (name == "four") return PermClass::FourCycle;
    if (name == "three") return PermClass::ThreeCycle;
    if (name == "two-two") return PermClass::TwoTwo;
    return std::nullopt;
}

Mat4 class_reference_perm(PermClass c) {
    switch (c) {
        case PermClass::FourCycle:
            return matrix_of_perm({1, 2, 3, 0});
        case PermClass::ThreeCycle:
            // vertex 4 fixed, 1 -> 3 -> 2 -> 1
            return matrix_of_perm({2, 0, 1, 3});
        default:
            return matrix_of_perm({1, 0, 3, 2});
    }
}

std::string to_string(RuleOutReason r) {
    switch (r) {
        case RuleOutReason::SpectralRadius: return "SpectralRadius";
        case RuleOutReason::NegativeHilbert: return "NegativeHilbert";
        default: return "NotStronglyConnected";
    }
}

bool FilterEvidence::stage_b_pass() const {
    if (!stage_a_pass()) return false;
    if (!connected) return false;
    if (spectral_ok && !*spectral_ok) return false;
    if (hilbert_checked && hilbert_first_negative) return false;
    return true;
}

namespace {

void evaluate_stage_a(const QuiverType& t, FilterEvidence& ev) {
    IntPoly det = det_matrix_polynomial(t);
    ev.factorization = factor_into_cyclotomics(det);
    ev.det_cyclotomic = ev.factorization.has_value();
    ev.root1_mult = ev.det_cyclotomic ? ev.factorization->multiplicity(1) : root1_multiplicity(det);
    ev.mult_ok = ev.root1_mult >= 3;
}

void evaluate_stage_b(const QuiverType& t, int target_radius, bool run_hilbert, int hilbert_terms,
                      FilterEvidence& ev) {
    ev.connected = strongly_connected(t.M);
    ev.normal = is_normal(t.M);
    if (ev.normal)
        ev.spectral_ok = spectral_radius_equals(t.M, target_radius);
    else
        ev.spectral_ok = std::nullopt;  // criterion not applicable
    if (run_hilbert) {
        ev.hilbert_checked = true;
        ev.hilbert_first_negative = hilbert_prefix(t, hilbert_terms).first_negative;
    }
}

std::vector<RuleOutReason> failing_reasons(const FilterEvidence& ev) {
    std::vector<RuleOutReason> out;
    if (ev.spectral_ok && !*ev.spectral_ok) out.push_back(RuleOutReason::SpectralRadius);
    if (ev.hilbert_checked && ev.hilbert_first_negative) out.push_back(RuleOutReason::NegativeHilbert);
    if (!ev.connected) out.push_back(RuleOutReason::NotStronglyConnected);
    return out;
}

struct OrbitBucket {
    std::string key;
    std::vector<std::pair<QuiverType, FilterEvidence>> members;  // stage-A passers
};

/// Shared engine tail: bucket stage-A passers by adjacency orbit (the
/// published lists identify candidates by M up to relabeling), then run the
/// stage-B filters. An orbit survives when any of its enumerated members
/// passes; the report shows the first passing member.
ClassifyResult assemble(PermClass cls, int s, const ClassifyOptions& opts, int bound_used,
                        bool run_hilbert, std::vector<std::pair<QuiverType, FilterEvidence>> passers) {
    ClassifyResult res;
    res.perm_class = cls;
    res.s = s;
    res.options = opts;
    res.bound_used = bound_used;

    std::vector<OrbitBucket> buckets;
    std::map<std::string, size_t> index_of;
    for (auto& [t, ev] : passers) {
        std::string key = canonical_matrix_key(t.M);
        auto it = index_of.find(key);
        if (it == index_of.end()) {
            index_of.emplace(key, buckets.size());
            buckets.push_back({key, {}});
            buckets.back().members.emplace_back(std::move(t), std::move(ev));
        } else {
            buckets[it->second].members.emplace_back(std::move(t), std::move(ev));
        }
    }

    auto make_report = [&](const QuiverType& t, const FilterEvidence& ev,
                           const std::string& key) {
        CandidateReport rep;
        rep.type = t;
        rep.evidence = ev;
        rep.orbit_key = key;
        const auto& stars = starred_orbit_keys(cls, s);
        rep.starred = std::find(stars.begin(), stars.end(), key) != stars.end();
        rep.realization = realization_note(cls, s, key);
        return rep;
    };

    const int target_radius = 6 - s;
    for (auto& bucket : buckets) {
        res.stage_a.push_back(
            make_report(bucket.members.front().first, bucket.members.front().second, bucket.key));
        if (!opts.stage_full) continue;
        bool orbit_pass = false;
        for (auto& [t, ev] : bucket.members) {
            evaluate_stage_b(t, target_radius, run_hilbert, opts.hilbert_terms, ev);
            if (ev.stage_b_pass()) {
                res.final.push_back(make_report(t, ev, bucket.key));
                orbit_pass = true;
                break;
            }
        }
        if (!orbit_pass) {
            const auto& [t, ev] = bucket.members.front();
            RemovedCandidate rm;
            rm.report = make_report(t, ev, bucket.key);
            rm.reasons = failing_reasons(ev);
            rm.primary = rm.reasons.empty() ? RuleOutReason::NotStronglyConnected : rm.reasons.front();
            res.removed.push_back(std::move(rm));
        }
    }

    auto by_key = [](const auto& x, const auto& y) { return x.orbit_key < y.orbit_key; };
    std::sort(res.stage_a.begin(), res.stage_a.end(), by_key);
    std::sort(res.final.begin(), res.final.end(), by_key);
    std::sort(res.removed.begin(), res.removed.end(),
              [](const auto& x, const auto& y) { return x.report.orbit_key < y.report.orbit_key; });
    return res;
}

std::vector<std::pair<QuiverType, FilterEvidence>> stage_a_scan(
    const std::vector<QuiverType>& candidates, unsigned workers) {
    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = candidates.size() > 256 ? std::min(4u, hw ? hw : 1u) : 1u;
    }
    auto scan_range = [&](size_t lo, size_t hi) {
        std::vector<std::pair<QuiverType, FilterEvidence>> out;
        for (size_t i = lo; i < hi; ++i) {
            FilterEvidence ev;
            evaluate_stage_a(candidates[i], ev);
            if (ev.stage_a_pass()) out.emplace_back(candidates[i], std::move(ev));
        }
        return out;
    };
    if (workers <= 1 || candidates.size() < 2) return scan_range(0, candidates.size());
    // disjoint contiguous ranges merged in order: identical output for any
    // worker count
    std::vector<std::future<std::vector<std::pair<QuiverType, FilterEvidence>>>> futs;
    size_t chunk = (candidates.size() + workers - 1) / workers;
    for (size_t lo = 0; lo < candidates.size(); lo += chunk) {
        size_t hi = std::min(lo + chunk, candidates.size());
        futs.push_back(std::async(std::launch::async, scan_range, lo, hi));
    }
    std::vector<std::pair<QuiverType, FilterEvidence>> merged;
    for (auto& f : futs) {
        auto part = f.get();
        for (auto& x : part) merged.push_back(std::move(x));
    }
    return merged;
}

void require_s(int s) {
    if (s != 3 && s != 4) throw std::invalid_argument("s must be 3 or 4");
}

}  // namespace

ClassifyResult enumerate_four_cycle(int s, const ClassifyOptions& opts) {
    require_s(s);
    const Mat4 P = class_reference_perm(PermClass::FourCycle);
    const int rowsum = 6 - s;
    std::vector<QuiverType> candidates;
    for (int a = 0; a <= rowsum; ++a)
        for (int b = 0; a + b <= rowsum; ++b)
            for (int c = 0; a + b + c <= rowsum; ++c) {
                int d = rowsum - a - b - c;
                // b = d = 0 splits the quiver into the vertex pairs {1,3} and
                // {2,4}; the hypothesis requires a connected quiver.
                if (b == 0 && d == 0) continue;
                Mat4 m = zero4();
                long long row[4] = {a, b, c, d};
                for (int i = 0; i < 4; ++i)
                    for (int k = 0; k < 4; ++k) m[i][(i + k) % 4] = row[k];
                candidates.push_back({m, P, s});
            }
    auto passers = stage_a_scan(candidates, opts.workers);
    return assemble(PermClass::FourCycle, s, opts, rowsum, /*run_hilbert=*/false,
                    std::move(passers));
}

ClassifyResult enumerate_three_cycle(int s, const ClassifyOptions& opts) {
    require_s(s);
    const Mat4 P = class_reference_perm(PermClass::ThreeCycle);
    const int w_max = s == 3 ? 4 : 5;
    const int r_max = 6 - s;
    const int sum_max = 2 * (6 - s);
    std::vector<QuiverType> candidates;
    // u = 0 splits off vertex 4; the hypothesis requires a connected quiver.
    for (int u = 1; u <= 1; ++u)
        for (int w = 0; w <= w_max; ++w)
            for (int r = 0; r <= r_max; ++r)
                for (int x = 0; w + x + r <= sum_max; ++x)
                    for (int y = 0; w + x + y + r <= sum_max; ++y) {
                        Mat4 m = {{{w, x, y, u}, {y, w, x, u}, {x, y, w, u},
                                   {u, u, u, r}}};
                        candidates.push_back({m, P, s});
                    }
    // spectral radius first: it is the cheap closed-form prune here
    std::vector<QuiverType> spectral_pass;
    for (const auto& t : candidates)
        if (spectral_radius_equals(t.M, 6 - s)) spectral_pass.push_back(t);
    auto passers = stage_a_scan(spectral_pass, opts.workers);
    return assemble(PermClass::ThreeCycle, s, opts, r_max, /*run_hilbert=*/true,
                    std::move(passers));
}

ClassifyResult enumerate_two_two(int s, const ClassifyOptions& opts) {
    require_s(s);
    const Mat4 P = class_reference_perm(PermClass::TwoTwo);
    const int bound = opts.bound > 0 ? opts.bound : 6 - s;
    const auto& table = gamma_max_table(s);
    std::vector<std::pair<int, int>> diag_pairs;
    for (const auto& row : table) {
        if (row.a <= bound && row.g <= bound) {
            diag_pairs.emplace_back(row.a, row.g);
            if (row.a != row.g) diag_pairs.emplace_back(row.g, row.a);  // both orientations
        }
    }
    auto gamma_cap = [&](int a, int g) -> const Int& {
        int hi = std::max(a, g), lo = std::min(a, g);
        for (const auto& row : table)
            if (row.a == hi && row.g == lo) return row.gamma_max;
        throw std::logic_error("diagonal pair missing from gamma table");
    };
    std::vector<QuiverType> candidates;
    for (const auto& [a, g] : diag_pairs) {
        const Int& cap = gamma_cap(a, g);
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c)
                for (int d = 0; d <= bound; ++d)
                    for (int e = 0; e <= bound; ++e)
                        for (int f = 0; f <= bound; ++f)
                            for (int h = 0; h <= bound; ++h) {
                                // c = d = e = f = 0 splits the quiver into the
                                // pairs {1,2} and {3,4}; the hypothesis
                                // requires a connected quiver.
                                if (c == 0 && d == 0 && e == 0 && f == 0) continue;
                                long long gamma = (b - 1LL) * (b - 1) + (h - 1LL) * (h - 1) +
                                                  2LL * c * e + 2LL * d * f - 2;
                                if (Int(gamma) > cap) continue;
                                Mat4 m = {{{a, b, c, d},
                                           {b, a, d, c},
                                           {e, f, g, h},
                                           {f, e, h, g}}};
                                candidates.push_back({m, P, s});
                            }
    }
    auto passers = stage_a_scan(candidates, opts.workers);
    return assemble(PermClass::TwoTwo, s, opts, bound, /*run_hilbert=*/true, std::move(passers));
}

ClassifyResult classify(PermClass c, int s, const ClassifyOptions& opts) {
    switch (c) {
        case PermClass::FourCycle: return enumerate_four_cycle(s, opts);
        case PermClass::ThreeCycle: return enumerate_three_cycle(s, opts);
        default: return enumerate_two_two(s, opts);
    }
}

std::vector<GammaRow> gamma_max_table(int s) {
    require_s(s);
    static std::map<int, std::vector<GammaRow>> cache;
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    // All palindromic cyclotomic products of degree 4s divisible by (1-t)^4,
    // bucketed by t-coefficient; the t^2 coefficient drives gamma.
    ProductConstraint pc;
    pc.total_degree = 4 * s;
    pc.min_root1_mult = 4;
    pc.palindromy = Palindromy::Palindromic;
    std::map<Int, Int> min_c2_by_t1;
    for (const auto& fac : enumerate_cyclotomic_products(pc)) {
        IntPoly d = fac.expand();
        auto itb = min_c2_by_t1.find(d.coeff(1));
        if (itb == min_c2_by_t1.end())
            min_c2_by_t1.emplace(d.coeff(1), d.coeff(2));
        else if (d.coeff(2) < itb->second)
            itb->second = d.coeff(2);
    }

    std::vector<GammaRow> rows;
    for (int a = 0; a <= 2 * s; ++a)
        for (int g = 0; g <= a && a + g <= 2 * s; ++g) {
            Int lambda = 2 * (a + g);
            auto itb = min_c2_by_t1.find(-lambda);
            if (itb == min_c2_by_t1.end()) continue;
            Int beta = Int(a) * a + Int(g) * g + 4 * Int(a) * g;
            Int gamma_max = beta - itb->second;
            if (gamma_max >= -2) rows.push_back({a, g, gamma_max});
        }
    std::sort(rows.begin(), rows.end(), [](const GammaRow& x, const GammaRow& y) {
        return x.a != y.a ? x.a < y.a : x.g < y.g;
    });
    cache.emplace(s, rows);
    return rows;
}

std::vector<RemovedCandidate> rule_out_report(int s) {
    return enumerate_two_two(s, {}).removed;
}

namespace {

std::string key_of(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat4 m = zero4();
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long long v : r) m[i][j++] = v;
        ++i;
    }
    return canonical_matrix_key(m);
}

struct AnnotationTables {
    std::map<std::pair<int, int>, std::vector<std::string>> stars;  // (class, s)
    std::map<std::pair<int, int>, std::map<std::string, std::string>> notes;

    AnnotationTables() {
        const int FOUR = 0, THREE = 1, TWOTWO = 2;
        auto J_minus_I = key_of({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});

        stars[{FOUR, 3}] = {J_minus_I};
        stars[{THREE, 3}] = {J_minus_I};
        stars[{TWOTWO, 3}] = {key_of({{1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}})};
        stars[{TWOTWO, 4}] = {key_of({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}}),
                              key_of({{0, 0, 2, 0}, {0, 0, 0, 2}, {1, 1, 0, 0}, {1, 1, 0, 0}})};

        auto& four3 = notes[{FOUR, 3}];
        four3[key_of({{0, 0, 0, 3}, {3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}})] =
            "skew group ring k[x,y,z]#kC4, action diag(i,i,i)";
        four3[key_of({{0, 1, 0, 2}, {2, 0, 1, 0}, {0, 2, 0, 1}, {1, 0, 2, 0}})] =
            "skew group ring k[x,y,z]#kC4, action diag(i,i,-i)";
        four3[key_of({{0, 1, 2, 0}, {0, 0, 1, 2}, {2, 0, 0, 1}, {1, 2, 0, 0}})] =
            "skew group ring k[x,y,z]#kC4, action diag(-1,-1,-i)";
        four3[key_of({{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}})] =
            "skew group ring k[x,y,z]#kC4, action diag(1,-1,i); also an Ore extension of "
            "k[x,y]#kC4";
        four3[key_of({{2, 1, 0, 0}, {0, 2, 1, 0}, {0, 0, 2, 1}, {1, 0, 0, 2}})] =
            "skew group ring k[x,y,z]#kC4, action diag(1,1,i)";

        auto& three3 = notes[{THREE, 3}];
        three3[key_of({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 2}})] =
            "graded twist of k[x,y,z]#kA4";
        three3[key_of({{1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}})] =
            "graded twist of k[x,y,z]#k(C2xC2)";

        auto& tt3 = notes[{TWOTWO, 3}];
        tt3[key_of({{1, 0, 2, 0}, {0, 1, 0, 2}, {0, 2, 1, 0}, {2, 0, 0, 1}})] =
            "skew group ring k[x,y,z]#kC4, action diag(1,-i,-i)";
        tt3[J_minus_I] = "skew group ring k[x,y,z]#kC4, action diag(-1,i,-i)";
        tt3[key_of({{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}})] =
            "skew group ring k[x,y,z]#k(C2xC2), action (diag(1,-1,1), diag(1,1,-1)); also a "
            "graded twist of k[x,y,z]#k(C2xC2)";
        tt3[key_of({{0, 1, 2, 0}, {1, 0, 0, 2}, {2, 0, 0, 1}, {0, 2, 1, 0}})] =
            "skew group ring k[x,y,z]#k(C2xC2), action (diag(-1,-1,1), diag(1,1,-1))";
        tt3[key_of({{1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 0, 2}, {0, 1, 2, 0}})] =
            "Ore extension of a skew group ring of k_{-1}[x,y]";

        auto& tt4 = notes[{TWOTWO, 4}];
        tt4[key_of({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}})] =
            "skew group ring R#kC4, R AS-regular with quartic superpotential, action diag(1,i)";
        tt4[key_of({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}})] =
            "skew group ring R#kC4, R AS-regular with quartic superpotential, action "
            "x->y, y->-x";
    }
};

const AnnotationTables& annotations() {
    static const AnnotationTables tables;
    return tables;
}

}  // namespace

const std::vector<std::string>& starred_orbit_keys(PermClass c, int s) {
    static const std::vector<std::string> empty;
    auto it = annotations().stars.find({static_cast<int>(c), s});
    return it == annotations().stars.end() ? empty : it->second;
}

std::optional<std::string> realization_note(PermClass c, int s, const std::string& orbit_key) {
    auto it = annotations().notes.find({static_cast<int>(c), s});
    if (it == annotations().notes.end()) return std::nullopt;
    auto jt = it->second.find(orbit_key);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

}  // namespace qcy
