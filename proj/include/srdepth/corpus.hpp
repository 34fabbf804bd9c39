#ifndef SRDEPTH_CORPUS_HPP
#define SRDEPTH_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srdepth/complex.hpp"

namespace srdepth {

inline constexpr std::uint64_t default_corpus_seed = 20240101;

struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
    /// Generator call that produced the complex, e.g. "cone(rp2_minimal())".
    std::string recipe;
};

/// Fixed list: simplex 2..5, boundary_simplex 2..4, cycle 3..8,
/// disjoint_points 2..4, rp2, and cone/suspension/join combinations.
std::vector<CorpusEntry> named_corpus();

/// `count` complexes on at most `m_max` vertices (m_max ≥ 3). Entry i uses
/// the seed derived from (seed, i), so prefixes of a corpus are stable.
std::vector<CorpusEntry> random_corpus(int count, int m_max, std::uint64_t seed);

/// Writes <name>.facets per entry plus manifest.json. Output is a pure
/// function of the entries.
void write_corpus(const std::vector<CorpusEntry>& entries, const std::string& directory);

}  // namespace srdepth

#endif  // SRDEPTH_CORPUS_HPP
