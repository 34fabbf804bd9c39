#ifndef SRDEPTH_VERDICT_HPP
#define SRDEPTH_VERDICT_HPP

#include <string>

namespace srdepth {

/// Outcome of one verification harness. `detail` names the first witness on
/// failure, or why the check was vacuous.
struct Verdict {
    bool pass = true;
    std::string detail;

    static Verdict ok(std::string detail = {}) { return {true, std::move(detail)}; }
    static Verdict fail(std::string detail) { return {false, std::move(detail)}; }
};

inline const char* verdict_word(const Verdict& v) { return v.pass ? "pass" : "fail"; }

}  // namespace srdepth

#endif  // SRDEPTH_VERDICT_HPP
