#ifndef SRDEPTH_DEPTH_HPP
#define SRDEPTH_DEPTH_HPP

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "srdepth/cohomology.hpp"
#include "srdepth/complex.hpp"
#include "srdepth/error.hpp"
#include "srdepth/field.hpp"
#include "srdepth/limits.hpp"
#include "srdepth/verdict.hpp"

namespace srdepth {

/// Graded Betti numbers of F(K) over F[V]: beta(i, j) for homological degree
/// i and squarefree degree j, 0 ≤ i, j ≤ m.
struct BettiTable {
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> beta;

    int m() const { return static_cast<int>(beta.cols()) - 1; }
    long long operator()(int i, int j) const { return beta(i, j); }
    /// Largest i with a nonzero beta(i, j).
    int projective_dimension() const;
};

inline constexpr int default_betti_bound = 14;

/// Hochster: beta(i, j) = Σ_{|W| = j} dim H̃^{j-i-1}(K_W; F).
/// Throws TooLarge when m exceeds `max_vertices`.
BettiTable betti_table(const SimplicialComplex& K, const FieldSpec& field, int max_vertices = default_betti_bound);

/// Reduced cohomology of every link, the input of the link criterion.
struct LinkData {
    std::vector<std::pair<Face, CohomologyProfile>> links;  ///< over all faces, ∅ first
};
LinkData link_data(const SimplicialComplex& K, const FieldSpec& field);

/// Which computation supplies H^i(|K|, |K| - x) for x inside a face.
enum class LocalRoute { link_shift, relative_pair };

struct TopologicalData {
    CohomologyProfile global;
    std::vector<std::pair<Face, CohomologyProfile>> local;  ///< nonempty faces
};
TopologicalData topological_data(const SimplicialComplex& K, const FieldSpec& field, LocalRoute route);

/// For every face σ: H̃^i(link σ) = 0 for i ≤ r - ♯σ - 2.
bool link_condition(const LinkData& data, int r);
/// H̃^i(K) = 0 and every local group vanishes for i ≤ r - 2.
bool topological_condition(const TopologicalData& data, int r);

int depth_reisner(const SimplicialComplex& K, const FieldSpec& field);
int depth_topological(const SimplicialComplex& K, const FieldSpec& field);
/// m - pd(F(K)); 0 for {∅}.
int depth_ab(const SimplicialComplex& K, const FieldSpec& field, int max_vertices = default_betti_bound);

struct DepthReport {
    FieldSpec field = FieldSpec::rationals();
    int r_reisner = 0;
    int r_topological = 0;
    int r_ab = 0;
    int krull = 0;
    bool cohen_macaulay = false;
    bool agree = true;
    std::string witness;

    int depth() const { return r_reisner; }
};

/// Raised when the engines disagree; this indicates a bug.
class EngineDisagreement : public Error {
public:
    EngineDisagreement(const DepthReport& report, const std::string& complex_text);
    const DepthReport& report() const { return report_; }

private:
    DepthReport report_;
};

/// Runs all three engines and cross-checks them.
DepthReport depth(const SimplicialComplex& K, const FieldSpec& field);

/// Conditions (ii) and (iii) agree for every r in [0, dim K + 1], with (iii)
/// evaluated through relative cohomology of (K, cost σ).
Verdict verify_link_topology_equivalence(const SimplicialComplex& K, const FieldSpec& field);

/// local_cohomology(K, σ) = H^*(K, cost σ) for every nonempty face.
Verdict verify_munkres(const SimplicialComplex& K, const FieldSpec& field);

/// depth F(link σ) + ♯σ = depth F(st σ) ≥ depth F(K) for every face σ.
Verdict verify_star_link(const SimplicialComplex& K, const FieldSpec& field);

struct KeyLemmaReport {
    Verdict verdict;
    int depth = 0;
    /// Minimum depth of F(st σ) over nonempty faces.
    int r_min = 0;
    /// Total dimension of L^i for i = -1 .. dim K, at index i + 1.
    std::vector<Index> totals;
    bool almost_trivial = true;
    bool corollary_applies = false;
};

/// With M = F(K) and the star functor: checks that every L^i is finite
/// dimensional, that L^{-1} = 0, and that for r ≤ r_min
/// depth ≥ r ⇔ L^i = 0 for -1 ≤ i ≤ r - 2; and if every L^i vanishes, depth ≥ r_min.
KeyLemmaReport verify_key_lemma(const SimplicialComplex& K, const FieldSpec& field, int d_max);
KeyLemmaReport verify_key_lemma(const SimplicialComplex& K, const LimitsProfile& profile, int depth_of_k);

}  // namespace srdepth

#endif  // SRDEPTH_DEPTH_HPP
