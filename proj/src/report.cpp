#include "qcy/report.hpp"

#include <iomanip>
#include <sstream>

#include "qcy/spectral.hpp"

namespace qcy {

using nlohmann::json;

TypeCheckReport check_type(const QuiverType& t, int hilbert_terms) {
    validate_type(t);
    TypeCheckReport r;
    r.type = t;
    r.hilbert_terms = hilbert_terms;
    r.commutes = commutes(t);
    r.det = det_matrix_polynomial(t);
    r.factorization = factor_into_cyclotomics(r.det);
    r.palindromy = palindromicity(r.det);
    r.root1_mult = r.factorization ? r.factorization->multiplicity(1) : root1_multiplicity(r.det);
    r.connected = strongly_connected(t.M);
    r.normal = is_normal(t.M);
    r.spectral_target = 6 - t.s;
    if (r.normal && (t.s == 3 || t.s == 4))
        r.spectral_ok = spectral_radius_equals(t.M, r.spectral_target);
    r.hilbert_first_negative = hilbert_prefix(t, hilbert_terms).first_negative;
    return r;
}

namespace {

json matrix_json(const Mat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(m[i][j]);
        rows.push_back(row);
    }
    return rows;
}

json filters_json(const FilterEvidence& ev) {
    json f;
    f["det_cyclotomic"] = ev.det_cyclotomic;
    f["factorization"] = ev.factorization ? json(ev.factorization->to_string()) : json(nullptr);
    f["root1_multiplicity"] = ev.root1_mult;
    f["strongly_connected"] = ev.connected;
    f["normal"] = ev.normal;
    f["spectral_radius_ok"] = ev.spectral_ok ? json(*ev.spectral_ok) : json(nullptr);
    if (ev.hilbert_checked) {
        if (ev.hilbert_first_negative) {
            auto [d, i, j] = *ev.hilbert_first_negative;
            f["hilbert_first_negative"] = {{"degree", d}, {"row", i}, {"col", j}};
        } else {
            f["hilbert_first_negative"] = nullptr;
        }
    }
    return f;
}

json candidate_json(const CandidateReport& c) {
    json j;
    j["M"] = matrix_json(c.type.M);
    j["P"] = perm_to_cycles(perm_of_matrix(c.type.P));
    j["s"] = c.type.s;
    j["filters"] = filters_json(c.evidence);
    j["realization"] = c.realization ? json(*c.realization) : json(nullptr);
    j["starred"] = c.starred;
    return j;
}

std::optional<std::array<long long, 4>> circulant_tuple(const Mat4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] != m[(i + 1) % 4][(j + 1) % 4]) return std::nullopt;
    return std::array<long long, 4>{m[0][0], m[0][1], m[0][2], m[0][3]};
}

}  // namespace

json to_json(const ClassifyResult& r) {
    json j;
    j["perm_class"] = to_string(r.perm_class);
    j["s"] = r.s;
    j["stage"] = r.options.stage_full ? "full" : "pre";
    j["bound"] = r.perm_class == PermClass::TwoTwo ? json(r.bound_used) : json(nullptr);
    j["hilbert_terms"] = r.options.hilbert_terms;
    json cands = json::array();
    for (const auto& c : r.output()) cands.push_back(candidate_json(c));
    j["candidates"] = cands;
    if (r.options.stage_full) {
        json pre = json::array();
        for (const auto& c : r.stage_a) pre.push_back(candidate_json(c));
        j["pre_candidates"] = pre;
        json removed = json::array();
        for (const auto& rm : r.removed) {
            json e = candidate_json(rm.report);
            e["primary_reason"] = to_string(rm.primary);
            json reasons = json::array();
            for (auto& reason : rm.reasons) reasons.push_back(to_string(reason));
            e["reasons"] = reasons;
            removed.push_back(e);
        }
        j["removed"] = removed;
    }
    return j;
}

std::string to_table(const ClassifyResult& r) {
    std::ostringstream os;
    os << "class=" << to_string(r.perm_class) << " s=" << r.s
       << " stage=" << (r.options.stage_full ? "full" : "pre");
    if (r.perm_class == PermClass::TwoTwo) os << " bound=" << r.bound_used;
    os << "\n";
    const auto& list = r.output();
    os << list.size() << " candidate(s)\n";
    int idx = 0;
    for (const auto& c : list) {
        os << std::setw(3) << ++idx << ". " << matrix_to_string(c.type.M);
        if (auto tup = circulant_tuple(c.type.M)) {
            os << "  C(" << (*tup)[0] << "," << (*tup)[1] << "," << (*tup)[2] << "," << (*tup)[3]
               << ")";
        }
        if (c.starred) os << "  *";
        os << "\n     P=" << perm_to_cycles(perm_of_matrix(c.type.P))
           << " det=" << (c.evidence.factorization ? c.evidence.factorization->to_string() : "-")
           << " mult@1=" << c.evidence.root1_mult;
        if (c.realization) os << "\n     realized by: " << *c.realization;
        os << "\n";
    }
    if (r.options.stage_full && !r.removed.empty()) {
        os << "removed after the determinant stage:\n";
        for (const auto& rm : r.removed) {
            os << "  - " << matrix_to_string(rm.report.type.M) << "  " << to_string(rm.primary);
            if (rm.reasons.size() > 1) {
                os << " (also:";
                for (size_t k = 1; k < rm.reasons.size(); ++k) os << " " << to_string(rm.reasons[k]);
                os << ")";
            }
            os << "\n";
        }
    }
    return os.str();
}

json to_json(const TypeCheckReport& r) {
    json j;
    j["M"] = matrix_json(r.type.M);
    j["P"] = perm_to_cycles(perm_of_matrix(r.type.P));
    j["s"] = r.type.s;
    j["commutes"] = r.commutes;
    j["det"] = r.det.to_string();
    j["factorization"] = r.factorization ? json(r.factorization->to_string()) : json(nullptr);
    j["palindromy"] = to_string(r.palindromy);
    j["root1_multiplicity"] = r.root1_mult;
    j["strongly_connected"] = r.connected;
    j["normal"] = r.normal;
    j["spectral_target"] = r.spectral_target;
    j["spectral_radius_ok"] = r.spectral_ok ? json(*r.spectral_ok) : json(nullptr);
    j["hilbert_terms"] = r.hilbert_terms;
    if (r.hilbert_first_negative) {
        auto [d, i, jj] = *r.hilbert_first_negative;
        j["hilbert_first_negative"] = {{"degree", d}, {"row", i}, {"col", jj}};
    } else {
        j["hilbert_first_negative"] = nullptr;
    }
    return j;
}

std::string to_table(const TypeCheckReport& r) {
    std::ostringstream os;
    os << "type: M=" << matrix_to_string(r.type.M)
       << " P=" << perm_to_cycles(perm_of_matrix(r.type.P)) << " s=" << r.type.s << "\n";
    os << "MP = PM:             " << (r.commutes ? "yes" : "NO") << "\n";
    os << "det p(t):            " << r.det.pretty() << "\n";
    os << "factorization:       "
       << (r.factorization ? r.factorization->to_string() : "NotCyclotomicProduct") << "\n";
    os << "palindromy:          " << to_string(r.palindromy) << "\n";
    os << "multiplicity at t=1: " << r.root1_mult << "\n";
    os << "strongly connected:  " << (r.connected ? "yes" : "no") << "\n";
    os << "normal:              " << (r.normal ? "yes" : "no") << "\n";
    os << "spectral radius = " << r.spectral_target << ": "
       << (r.spectral_ok ? (*r.spectral_ok ? "yes" : "no") : "n/a (criterion needs a normal matrix)")
       << "\n";
    os << "Hilbert expansion:   ";
    if (r.hilbert_first_negative) {
        auto [d, i, j] = *r.hilbert_first_negative;
        os << "first negative entry at degree " << d << ", entry (" << (i + 1) << "," << (j + 1)
           << ")";
    } else {
        os << "nonnegative through degree " << r.hilbert_terms;
    }
    os << "\n";
    return os.str();
}

json gamma_json(int s) {
    json rows = json::array();
    for (const auto& row : gamma_max_table(s))
        rows.push_back({{"a", row.a}, {"g", row.g}, {"gamma_max", row.gamma_max.str()}});
    json j;
    j["s"] = s;
    j["rows"] = rows;
    return j;
}

std::string gamma_table_text(int s) {
    std::ostringstream os;
    os << "(a,g) -> gamma_max for s = " << s << "\n";
    for (const auto& row : gamma_max_table(s))
        os << "  (" << row.a << "," << row.g << ")  " << row.gamma_max << "\n";
    return os.str();
}

}  // namespace qcy
