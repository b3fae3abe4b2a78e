#ifndef QCY_VERIFY_HPP
#define QCY_VERIFY_HPP

#include <string>
#include <vector>

#include "qcy/classify.hpp"

namespace qcy {

struct GoldenEntry {
    Mat4 M;
    bool starred = false;
    std::string reason;  // rule-out files only
};

/// Golden list format: one matrix per line ("a,b,c,d;e,f,g,h;..."), an
/// optional trailing " *" marking unresolved entries, and for rule-out files
/// " | <reason>". '#' starts a comment.
std::vector<GoldenEntry> load_golden(const std::string& path);

struct VerifyCheck {
    std::string name;
    bool ok = false;
    std::vector<std::string> diffs;
};

/// Replays the whole classification and every catalogued construction
/// against the bundled golden tables. Deterministic: two runs produce
/// byte-identical reports.
std::vector<VerifyCheck> verify_paper(const std::string& data_dir);

std::string render_verify(const std::vector<VerifyCheck>& checks);
bool all_ok(const std::vector<VerifyCheck>& checks);

}  // namespace qcy

#endif
