#ifndef QCY_CLASSIFY_HPP
#define QCY_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcy/cycpoly.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

/// The three Nakayama-permutation classes treated by the engines, each with
/// a fixed reference permutation the enumeration is written against.
enum class PermClass { FourCycle, ThreeCycle, TwoTwo };

std::string to_string(PermClass c);
std::optional<PermClass> perm_class_from_string(const std::string& name);
Mat4 class_reference_perm(PermClass c);

enum class RuleOutReason { SpectralRadius, NegativeHilbert, NotStronglyConnected };
std::string to_string(RuleOutReason r);

/// Per-filter verdicts with the evidence the filter was decided on.
struct FilterEvidence {
    std::optional<CycFactorization> factorization;  // nullopt: not a cyclotomic product
    int root1_mult = 0;
    bool det_cyclotomic = false;
    bool mult_ok = false;
    bool connected = false;
    bool normal = false;
    std::optional<bool> spectral_ok;  // nullopt when the criterion does not apply (non-normal)
    bool hilbert_checked = false;
    std::optional<std::tuple<int, int, int>> hilbert_first_negative;

    bool stage_a_pass() const { return det_cyclotomic && mult_ok; }
    bool stage_b_pass() const;
};

struct CandidateReport {
    QuiverType type;
    FilterEvidence evidence;
    std::optional<std::string> realization;
    bool starred = false;
    std::string orbit_key;  // canonical_matrix_key(type.M)
};

struct RemovedCandidate {
    CandidateReport report;
    RuleOutReason primary;
    std::vector<RuleOutReason> reasons;  // every failing stage-B filter
};

struct ClassifyOptions {
    int bound = 0;          // two-two entry bound; 0 means the default 6 - s
    int hilbert_terms = 12;
    bool stage_full = true;  // false: stop after the det/multiplicity stage
    unsigned workers = 0;    // 0: pick automatically; output is identical for any value
};

struct ClassifyResult {
    PermClass perm_class;
    int s = 3;
    ClassifyOptions options;
    int bound_used = 0;
    /// Candidates surviving the determinant-level stage (deduplicated up to
    /// relabeling of the adjacency matrix, sorted canonically).
    std::vector<CandidateReport> stage_a;
    /// Candidates surviving every filter.
    std::vector<CandidateReport> final;
    /// Stage-A candidates removed by the later filters, with reasons.
    std::vector<RemovedCandidate> removed;

    const std::vector<CandidateReport>& output() const {
        return options.stage_full ? final : stage_a;
    }
};

/// All circulants C(a,b,c,d) with a+b+c+d = 6-s, filtered by: det p(t) a
/// cyclotomic product, multiplicity >= 3 at t = 1, strong connectivity, and
/// spectral radius 6-s (the criterion applies since circulants are normal).
ClassifyResult enumerate_four_cycle(int s, const ClassifyOptions& opts = {});

/// Bordered-circulant forms (rows (w,x,y,u),(y,w,x,u),(x,y,w,u),(u,u,u,r))
/// with u in {0,1}, w <= 4 (s=3) or 5 (s=4), r <= 6-s, w+x+y+r <= 2(6-s),
/// filtered by spectral radius (closed forms), connectivity, det, root
/// multiplicity and Hilbert nonnegativity.
ClassifyResult enumerate_three_cycle(int s, const ClassifyOptions& opts = {});

/// Paired-block forms (rows (a,b,c,d),(b,a,d,c),(e,f,g,h),(f,e,h,g)).
/// Stage A: entries <= bound, (a,g) and gamma pruned by the gamma table
/// (both orientations), det cyclotomic with multiplicity >= 3 at 1.
/// Stage B: adds connectivity, normal => spectral radius, and Hilbert
/// nonnegativity to depth hilbert_terms.
ClassifyResult enumerate_two_two(int s, const ClassifyOptions& opts = {});

ClassifyResult classify(PermClass c, int s, const ClassifyOptions& opts = {});

struct GammaRow {
    int a = 0, g = 0;
    Int gamma_max;
};

/// For each diagonal pair (a,g) with g <= a and a+g <= 2s: the largest value
/// of gamma = (b-1)^2 + (h-1)^2 + 2ce + 2df - 2 compatible with some
/// palindromic cyclotomic product of degree 4s with t-coefficient -2(a+g)
/// and a root of order >= 4 at t = 1. Pairs whose maximum drops below -2
/// are excluded (gamma >= -2 always holds).
std::vector<GammaRow> gamma_max_table(int s);

/// Stage-A candidates removed by Stage B at the default bound, with the
/// removing filters. The primary reason checks spectral radius first, then
/// Hilbert negativity, then connectivity.
std::vector<RemovedCandidate> rule_out_report(int s);

/// Candidates the published classification marks as unresolved (data, never
/// inferred): canonical matrix keys per class and s.
const std::vector<std::string>& starred_orbit_keys(PermClass c, int s);

/// Short description of the construction realizing a candidate, if one is
/// catalogued; keyed by canonical matrix key.
std::optional<std::string> realization_note(PermClass c, int s, const std::string& orbit_key);

}  // namespace qcy

#endif
