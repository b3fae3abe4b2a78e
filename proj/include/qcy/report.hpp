#ifndef QCY_REPORT_HPP
#define QCY_REPORT_HPP

#include <string>

#include "qcy/classify.hpp"

// vendored single-header json
#include "json.hpp"

namespace qcy {

/// Full single-type report behind the `check` command.
struct TypeCheckReport {
    QuiverType type;
    bool commutes = false;
    IntPoly det;
    std::optional<CycFactorization> factorization;
    Palindromy palindromy = Palindromy::Neither;
    int root1_mult = 0;
    bool connected = false;
    bool normal = false;
    int spectral_target = 0;
    std::optional<bool> spectral_ok;  // absent when criterion not applicable
    int hilbert_terms = 12;
    std::optional<std::tuple<int, int, int>> hilbert_first_negative;
};

TypeCheckReport check_type(const QuiverType& t, int hilbert_terms);

nlohmann::json to_json(const ClassifyResult& r);
std::string to_table(const ClassifyResult& r);

nlohmann::json to_json(const TypeCheckReport& r);
std::string to_table(const TypeCheckReport& r);

nlohmann::json gamma_json(int s);
std::string gamma_table_text(int s);

}  // namespace qcy

#endif
