#include "srdepth/complex.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "srdepth/error.hpp"

namespace srdepth {

namespace {

constexpr int max_facet_size = 30;

std::vector<Face> maximal_faces(std::vector<Face> candidates)
{
    std::sort(candidates.begin(), candidates.end(),
              [](Face a, Face b) { return a.cardinality() != b.cardinality()
                                              ? a.cardinality() > b.cardinality()
                                              : a.bits() < b.bits(); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Face> maximal;
    for (Face f : candidates) {
        const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                         [f](Face g) { return f.is_subset_of(g); });
        if (!covered) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), face_less);
    return maximal;
}

}  // namespace

std::vector<int> Face::positions() const
{
    std::vector<int> out;
    out.reserve(cardinality());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

SimplicialComplex::SimplicialComplex() : SimplicialComplex({}, std::span<const Face>{}) {}

SimplicialComplex::SimplicialComplex(std::vector<int> labels, std::span<const Face> facets)
    : labels_(std::move(labels))
{
    if (labels_.size() > static_cast<std::size_t>(max_vertices))
        throw Error(ErrorCode::TooLarge, "at most 64 vertices are supported");
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw Error(ErrorCode::BadParameter, "vertex labels must be strictly increasing");

    const std::uint64_t all = labels_.empty() ? 0 : (~std::uint64_t{0} >> (64 - labels_.size()));
    std::uint64_t covered = 0;
    for (Face f : facets) {
        if ((f.bits() & ~all) != 0)
            throw Error(ErrorCode::VertexOutOfRange, "facet uses a position outside the vertex set");
        if (f.cardinality() > max_facet_size)
            throw Error(ErrorCode::TooLarge, "facet with more than 30 vertices");
        covered |= f.bits();
    }
    if (covered != all) throw Error(ErrorCode::UnusedVertex, "some vertex lies in no facet");

    facets_ = maximal_faces(std::vector<Face>(facets.begin(), facets.end()));
    if (facets_.empty()) facets_.push_back(Face{});

    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets_) {
        // Enumerate all submasks of f, including f and ∅.
        const std::uint64_t top = f.bits();
        std::uint64_t sub = top;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & top;
        }
    }
    faces_.reserve(seen.size());
    for (std::uint64_t b : seen) faces_.emplace_back(b);
    std::sort(faces_.begin(), faces_.end(), face_less);

    dim_ = faces_.back().cardinality() - 1;
    card_offsets_.assign(static_cast<std::size_t>(dim_) + 3, faces_.size());
    for (std::size_t i = faces_.size(); i-- > 0;)
        card_offsets_[faces_[i].cardinality()] = i;

    std::vector<std::pair<std::uint64_t, long>> keyed;
    keyed.reserve(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i)
        keyed.emplace_back(faces_[i].bits(),
                           static_cast<long>(i - card_offsets_[faces_[i].cardinality()]));
    std::sort(keyed.begin(), keyed.end());
    sorted_bits_.reserve(keyed.size());
    sorted_rank_.reserve(keyed.size());
    for (auto [bits, rank] : keyed) {
        sorted_bits_.push_back(bits);
        sorted_rank_.push_back(rank);
    }
}

std::span<const Face> SimplicialComplex::faces_of_cardinality(int k) const
{
    if (k < 0 || k > dim_ + 1) return {};
    const std::size_t begin = card_offsets_[k];
    const std::size_t end = card_offsets_[k + 1];
    return std::span<const Face>(faces_).subspan(begin, end - begin);
}

long SimplicialComplex::index_of(Face f) const
{
    const auto it = std::lower_bound(sorted_bits_.begin(), sorted_bits_.end(), f.bits());
    if (it == sorted_bits_.end() || *it != f.bits()) return -1;
    return sorted_rank_[static_cast<std::size_t>(it - sorted_bits_.begin())];
}

std::vector<long long> SimplicialComplex::f_vector() const
{
    std::vector<long long> f;
    for (int k = 0; k <= dim_ + 1; ++k)
        f.push_back(static_cast<long long>(faces_of_cardinality(k).size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (int k = 1; k <= dim_ + 1; ++k)
        chi += (k % 2 == 1 ? 1 : -1) * static_cast<long long>(faces_of_cardinality(k).size());
    return chi;
}

Face SimplicialComplex::vertex_set() const
{
    return Face(labels_.empty() ? 0 : (~std::uint64_t{0} >> (64 - labels_.size())));
}

Face SimplicialComplex::face_from_labels(std::span<const int> labels) const
{
    std::uint64_t bits = 0;
    for (int label : labels) {
        const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label)
            throw Error(ErrorCode::FaceNotInComplex,
                        "vertex " + std::to_string(label) + " is not a vertex of the complex");
        bits |= std::uint64_t{1} << (it - labels_.begin());
    }
    return Face(bits);
}

std::vector<int> SimplicialComplex::labels_of(Face f) const
{
    std::vector<int> out;
    for (int i : f.positions()) out.push_back(labels_[i]);
    return out;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.labels_ == b.labels_ && a.facets_ == b.facets_;
}

SimplicialComplex validate(const std::vector<std::vector<int>>& raw_facets, int m)
{
    if (m < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
    if (raw_facets.empty()) throw Error(ErrorCode::EmptyInput, "no facets given");
    if (m > SimplicialComplex::max_vertices)
        throw Error(ErrorCode::TooLarge, "at most 64 vertices are supported");
    std::vector<Face> facets;
    facets.reserve(raw_facets.size());
    for (const auto& raw : raw_facets) {
        std::uint64_t bits = 0;
        for (int v : raw) {
            if (v < 1 || v > m)
                throw Error(ErrorCode::VertexOutOfRange,
                            "vertex " + std::to_string(v) + " not in [1, " + std::to_string(m) + "]");
            bits |= std::uint64_t{1} << (v - 1);
        }
        facets.emplace_back(bits);
    }
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels[i] = i + 1;
    std::uint64_t covered = 0;
    for (Face f : facets) covered |= f.bits();
    for (int i = 0; i < m; ++i)
        if (!((covered >> i) & 1U))
            throw Error(ErrorCode::UnusedVertex, "vertex " + std::to_string(i + 1) + " lies in no facet");
    return SimplicialComplex(std::move(labels), facets);
}

namespace {

void require_face(const SimplicialComplex& K, Face sigma)
{
    if (!K.contains(sigma)) throw Error(ErrorCode::FaceNotInComplex, "face is not in the complex");
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& K, Face sigma)
{
    require_face(K, sigma);
    return subcomplex(K, [&](Face tau) { return K.contains(sigma | tau); });
}

SimplicialComplex link(const SimplicialComplex& K, Face sigma)
{
    require_face(K, sigma);
    return subcomplex(K, [&](Face tau) { return tau.disjoint_from(sigma) && K.contains(sigma | tau); });
}

SimplicialComplex induced(const SimplicialComplex& K, Face W)
{
    return subcomplex(K, [&](Face tau) { return tau.is_subset_of(W); });
}

SimplicialComplex contrastar(const SimplicialComplex& K, Face sigma)
{
    require_face(K, sigma);
    if (sigma.empty()) throw Error(ErrorCode::EmptyFace, "contrastar of the empty face is void");
    return subcomplex(K, [&](Face tau) { return !sigma.is_subset_of(tau); });
}

std::vector<Face> embed_faces(const SimplicialComplex& K, const SimplicialComplex& L)
{
    std::vector<Face> out;
    out.reserve(L.faces().size());
    for (Face f : L.faces()) {
        const auto labels = L.labels_of(f);
        Face g;
        try {
            g = K.face_from_labels(labels);
        } catch (const Error&) {
            throw Error(ErrorCode::NotASubcomplex, "vertex of the subcomplex missing from the complex");
        }
        if (!K.contains(g)) throw Error(ErrorCode::NotASubcomplex, "face of the subcomplex missing from the complex");
        out.push_back(g);
    }
    return out;
}

bool isomorphic_by_order(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.m() == b.m() && a.facets() == b.facets();
}

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& K)
{
    os << "K(m=" << K.m() << ", facets=[";
    bool first = true;
    for (Face f : K.facets()) {
        if (!first) os << ' ';
        first = false;
        os << '{';
        bool inner = true;
        for (int v : K.labels_of(f)) {
            if (!inner) os << ',';
            inner = false;
            os << v;
        }
        os << '}';
    }
    return os << "])";
}

}  // namespace srdepth
