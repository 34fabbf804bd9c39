#include "srdepth/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "srdepth/error.hpp"

namespace srdepth {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<CorpusEntry> named_corpus()
{
    std::vector<CorpusEntry> out;
    const auto add = [&out](std::string name, SimplicialComplex K, std::string recipe) {
        out.push_back({std::move(name), std::move(K), std::move(recipe)});
    };
    for (int m = 2; m <= 5; ++m)
        add("simplex" + std::to_string(m), simplex(m), "simplex(" + std::to_string(m) + ")");
    for (int n = 2; n <= 4; ++n)
        add("boundary_simplex" + std::to_string(n), boundary_simplex(n), "boundary_simplex(" + std::to_string(n) + ")");
    for (int n = 3; n <= 8; ++n) add("cycle" + std::to_string(n), cycle(n), "cycle(" + std::to_string(n) + ")");
    for (int k = 2; k <= 4; ++k)
        add("points" + std::to_string(k), disjoint_points(k), "disjoint_points(" + std::to_string(k) + ")");
    add("rp2", rp2_minimal(), "rp2_minimal()");
    add("cone_rp2", cone(rp2_minimal()), "cone(rp2_minimal())");
    add("cone_cycle5", cone(cycle(5)), "cone(cycle(5))");
    add("cone_points2", cone(disjoint_points(2)), "cone(disjoint_points(2))");
    add("suspension_rp2", suspension(rp2_minimal()), "suspension(rp2_minimal())");
    add("suspension_cycle4", suspension(cycle(4)), "suspension(cycle(4))");
    add("join_cycle3_points2", join(cycle(3), disjoint_points(2)), "join(cycle(3), disjoint_points(2))");
    add("join_points2_points3", join(disjoint_points(2), disjoint_points(3)),
        "join(disjoint_points(2), disjoint_points(3))");
    add("join_cycle4_cycle4", join(cycle(4), cycle(4)), "join(cycle(4), cycle(4))");
    add("join_points2_simplex2", join(disjoint_points(2), simplex(2)), "join(disjoint_points(2), simplex(2))");
    return out;
}

std::vector<CorpusEntry> random_corpus(int count, int m_max, std::uint64_t seed)
{
    if (count < 0) throw Error(ErrorCode::BadParameter, "negative corpus size");
    if (m_max < 3 || m_max > 20) throw Error(ErrorCode::BadParameter, "random corpus needs 3 <= m <= 20");
    static constexpr double densities[] = {0.3, 0.5, 0.7};
    std::vector<CorpusEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const std::uint64_t sub_seed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)));
        std::mt19937_64 rng(sub_seed);
        const int m = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(m_max - 2));
        const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, m - 1)));
        const double density = densities[rng() % 3];
        std::ostringstream recipe;
        recipe << "random_complex(" << m << ", " << d << ", " << density << ", " << sub_seed << ")";
        char name[32];
        std::snprintf(name, sizeof name, "random_%03d", i);
        out.push_back({name, random_complex(m, d, density, sub_seed), recipe.str()});
    }
    return out;
}

void write_corpus(const std::vector<CorpusEntry>& entries, const std::string& directory)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot create " + directory + ": " + ec.message());
    nlohmann::json manifest = nlohmann::json::array();
    for (const auto& entry : entries) {
        const fs::path path = fs::path(directory) / (entry.name + ".facets");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
        out << "# " << entry.recipe << '\n' << to_facet_text(entry.complex);
        if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
        manifest.push_back({{"name", entry.name}, {"file", entry.name + ".facets"}, {"recipe", entry.recipe},
                            {"m", entry.complex.m()}, {"dim", entry.complex.dim()}});
    }
    const fs::path path = fs::path(directory) / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << manifest.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace srdepth
