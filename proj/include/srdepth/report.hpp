#ifndef SRDEPTH_REPORT_HPP
#define SRDEPTH_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "srdepth/complex.hpp"
#include "srdepth/depth.hpp"
#include "srdepth/field.hpp"
#include "srdepth/limits.hpp"

namespace srdepth {

/// Everything the CLI prints, as plain exact integers so that the JSON form
/// round-trips without loss.
struct AnalysisReport {
    int m = 0;
    int dim = -1;
    std::vector<long long> f_vector;
    std::string field;

    int depth_reisner = 0;
    int depth_topological = 0;
    int depth_auslander_buchsbaum = 0;
    bool agree = true;
    bool cohen_macaulay = false;

    /// degree → dim H̃^degree
    std::map<int, long long> reduced_cohomology;

    /// i → (internal degree → dim lim^i)
    std::optional<std::map<int, std::map<int, long long>>> limits;
    /// i ∈ {-1, 0} → (internal degree → dim L^i)
    std::optional<std::map<int, std::map<int, long long>>> rho;

    /// harness → "pass" | "fail"
    std::optional<std::map<std::string, std::string>> verdicts;
    std::map<std::string, std::string> verdict_details;

    bool all_pass() const;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
    bool limits = false;
    bool verify = false;
    /// Only the lim/H comparison; implied by `verify`.
    bool srdec = false;
    int d_max = -1;  ///< -1: 4m
};

AnalysisReport analyze(const SimplicialComplex& K, const FieldSpec& field, const AnalysisOptions& options);

nlohmann::json to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& doc);
std::string to_text(const AnalysisReport& report);

}  // namespace srdepth

#endif  // SRDEPTH_REPORT_HPP
