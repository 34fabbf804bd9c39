#include "srdepth/depth.hpp"

#include <algorithm>
#include <sstream>

namespace srdepth {

namespace {

std::string describe_face(const SimplicialComplex& K, Face f)
{
    std::ostringstream out;
    out << '{';
    const auto labels = K.labels_of(f);
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
    out << '}';
    return out.str();
}

template <typename Condition>
int largest_r(int top, Condition holds)
{
    for (int r = top; r > 0; --r)
        if (holds(r)) return r;
    return 0;
}

}  // namespace

int BettiTable::projective_dimension() const
{
    int pd = 0;
    for (Eigen::Index i = 0; i < beta.rows(); ++i)
        if ((beta.row(i).array() != 0).any()) pd = static_cast<int>(i);
    return pd;
}

BettiTable betti_table(const SimplicialComplex& K, const FieldSpec& field, int max_vertices)
{
    const int m = K.m();
    if (m > max_vertices)
        throw Error(ErrorCode::TooLarge, "Betti table needs m <= " + std::to_string(max_vertices) + ", got " +
                                             std::to_string(m));
    BettiTable table;
    table.beta.setZero(m + 1, m + 1);
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t w = 0; w < subsets; ++w) {
        const int j = std::popcount(w);
        const CohomologyProfile h = reduced_cohomology(induced(K, Face(w)), field);
        for (int degree = h.min_degree; degree <= h.max_degree(); ++degree) {
            const int i = j - 1 - degree;
            if (i >= 0 && i <= m) table.beta(i, j) += h.at(degree);
        }
    }
    return table;
}

LinkData link_data(const SimplicialComplex& K, const FieldSpec& field)
{
    LinkData data;
    data.links.reserve(K.faces().size());
    for (Face sigma : K.faces()) data.links.emplace_back(sigma, reduced_cohomology(link(K, sigma), field));
    return data;
}

TopologicalData topological_data(const SimplicialComplex& K, const FieldSpec& field, LocalRoute route)
{
    TopologicalData data{reduced_cohomology(K, field), {}};
    for (Face sigma : K.faces()) {
        if (sigma.empty()) continue;
        data.local.emplace_back(sigma, route == LocalRoute::link_shift
                                           ? local_cohomology(K, sigma, field)
                                           : local_cohomology_relative(K, sigma, field));
    }
    return data;
}

bool link_condition(const LinkData& data, int r)
{
    return std::all_of(data.links.begin(), data.links.end(), [r](const auto& entry) {
        return entry.second.vanishes_through(r - entry.first.cardinality() - 2);
    });
}

bool topological_condition(const TopologicalData& data, int r)
{
    if (!data.global.vanishes_through(r - 2)) return false;
    return std::all_of(data.local.begin(), data.local.end(),
                       [r](const auto& entry) { return entry.second.vanishes_through(r - 2); });
}

int depth_reisner(const SimplicialComplex& K, const FieldSpec& field)
{
    const LinkData data = link_data(K, field);
    return largest_r(K.dim() + 1, [&](int r) { return link_condition(data, r); });
}

int depth_topological(const SimplicialComplex& K, const FieldSpec& field)
{
    const TopologicalData data = topological_data(K, field, LocalRoute::link_shift);
    return largest_r(K.dim() + 1, [&](int r) { return topological_condition(data, r); });
}

int depth_ab(const SimplicialComplex& K, const FieldSpec& field, int max_vertices)
{
    if (K.is_empty_complex()) return 0;
    return K.m() - betti_table(K, field, max_vertices).projective_dimension();
}

EngineDisagreement::EngineDisagreement(const DepthReport& report, const std::string& complex_text)
    : Error(ErrorCode::EngineDisagreement,
            "reisner=" + std::to_string(report.r_reisner) + " topological=" + std::to_string(report.r_topological) +
                " auslander_buchsbaum=" + std::to_string(report.r_ab) + " over " + report.field.name() + " for " +
                complex_text + (report.witness.empty() ? "" : "; " + report.witness)),
      report_(report)
{
}

DepthReport depth(const SimplicialComplex& K, const FieldSpec& field)
{
    DepthReport report;
    report.field = field;
    report.krull = K.dim() + 1;
    const LinkData links = link_data(K, field);
    const TopologicalData topology = topological_data(K, field, LocalRoute::link_shift);
    report.r_reisner = largest_r(report.krull, [&](int r) { return link_condition(links, r); });
    report.r_topological = largest_r(report.krull, [&](int r) { return topological_condition(topology, r); });
    report.r_ab = depth_ab(K, field);
    report.agree = report.r_reisner == report.r_topological && report.r_reisner == report.r_ab;
    report.cohen_macaulay = report.r_reisner == report.krull;
    if (!report.agree) {
        std::ostringstream witness;
        for (int r = 0; r <= report.krull; ++r) {
            const bool ii = link_condition(links, r);
            const bool iii = topological_condition(topology, r);
            if (ii != iii) {
                witness << "link and topological criteria first differ at r=" << r;
                break;
            }
        }
        for (const auto& [sigma, h] : links.links) {
            if (!h.vanishes_through(report.r_ab - sigma.cardinality() - 2)) {
                witness << (witness.tellp() > 0 ? "; " : "") << "link of " << describe_face(K, sigma)
                        << " blocks r=" << report.r_ab;
                break;
            }
        }
        report.witness = witness.str();
        std::ostringstream text;
        text << K;
        throw EngineDisagreement(report, text.str());
    }
    return report;
}

Verdict verify_link_topology_equivalence(const SimplicialComplex& K, const FieldSpec& field)
{
    const LinkData links = link_data(K, field);
    const TopologicalData topology = topological_data(K, field, LocalRoute::relative_pair);
    for (int r = 0; r <= K.dim() + 1; ++r) {
        const bool ii = link_condition(links, r);
        const bool iii = topological_condition(topology, r);
        if (ii != iii)
            return Verdict::fail("r=" + std::to_string(r) + ": link condition " + (ii ? "holds" : "fails") +
                                 ", topological condition " + (iii ? "holds" : "fails"));
    }
    return Verdict::ok();
}

Verdict verify_munkres(const SimplicialComplex& K, const FieldSpec& field)
{
    for (Face sigma : K.faces()) {
        if (sigma.empty()) continue;
        const CohomologyProfile shifted = local_cohomology(K, sigma, field);
        const CohomologyProfile relative = local_cohomology_relative(K, sigma, field);
        for (int i = 0; i <= K.dim(); ++i)
            if (shifted.at(i) != relative.at(i))
                return Verdict::fail("face " + describe_face(K, sigma) + ", degree " + std::to_string(i) + ": shift " +
                                     std::to_string(shifted.at(i)) + " vs relative " + std::to_string(relative.at(i)));
    }
    return Verdict::ok(K.is_empty_complex() ? "vacuous: no nonempty faces" : "");
}

Verdict verify_star_link(const SimplicialComplex& K, const FieldSpec& field)
{
    const int depth_k = depth(K, field).depth();
    for (Face sigma : K.faces()) {
        const int d_link = depth(link(K, sigma), field).depth();
        const int d_star = depth(star(K, sigma), field).depth();
        if (d_link + sigma.cardinality() != d_star || d_star < depth_k)
            return Verdict::fail("face " + describe_face(K, sigma) + ": depth link " + std::to_string(d_link) +
                                 " + " + std::to_string(sigma.cardinality()) + ", depth star " +
                                 std::to_string(d_star) + ", depth K " + std::to_string(depth_k));
    }
    return Verdict::ok();
}

KeyLemmaReport verify_key_lemma(const SimplicialComplex& K, const LimitsProfile& profile, int depth_of_k)
{
    KeyLemmaReport report;
    report.depth = depth_of_k;
    if (K.is_empty_complex()) {
        report.verdict = Verdict::ok("vacuous: the face category is empty");
        return report;
    }
    const int top = K.dim();
    for (int i = -1; i <= top; ++i) report.totals.push_back(profile.total_L(i));

    // Per support s the summand of L^i in degree d has the weight
    // #monomials with support s, which is positive for every d ≥ 2♯s. So
    // vanishing in one degree above 2m forces every positive-support summand
    // to vanish, leaving a finite-dimensional L^i.
    const int m = K.m();
    if (profile.d_max <= 2 * m)
        throw Error(ErrorCode::BadParameter, "key lemma check needs d_max > 2m");
    for (int i = -1; i <= top && report.almost_trivial; ++i)
        for (int d = 2 * m + 2; d <= profile.d_max; d += 2)
            if (profile.L(i, d) != 0) {
                report.almost_trivial = false;
                report.verdict = Verdict::fail("L^" + std::to_string(i) + " is nonzero in degree " +
                                               std::to_string(d) + ", so it is not finite dimensional");
                break;
            }
    if (!report.almost_trivial) return report;
    if (report.totals.front() != 0) {
        report.verdict = Verdict::fail("L^-1 = ker rho is nonzero");
        return report;
    }

    report.r_min = K.dim() + 1;
    for (Face sigma : K.faces())
        if (!sigma.empty()) report.r_min = std::min(report.r_min, depth(star(K, sigma), profile.field).depth());

    for (int r = 0; r <= report.r_min; ++r) {
        bool vanishing = true;
        for (int i = -1; i <= r - 2; ++i)
            if (i + 1 < static_cast<int>(report.totals.size()) && report.totals[static_cast<std::size_t>(i + 1)] != 0)
                vanishing = false;
        if ((depth_of_k >= r) != vanishing) {
            report.verdict = Verdict::fail("r=" + std::to_string(r) + ": depth " + std::to_string(depth_of_k) +
                                           " but L^i " + (vanishing ? "vanish" : "do not vanish") +
                                           " for i <= r-2");
            return report;
        }
    }

    report.corollary_applies = std::all_of(report.totals.begin(), report.totals.end(), [](Index v) { return v == 0; });
    if (report.corollary_applies && depth_of_k < report.r_min) {
        report.verdict = Verdict::fail("all L^i vanish but depth " + std::to_string(depth_of_k) + " < min star depth " +
                                       std::to_string(report.r_min));
        return report;
    }
    report.verdict = Verdict::ok();
    return report;
}

KeyLemmaReport verify_key_lemma(const SimplicialComplex& K, const FieldSpec& field, int d_max)
{
    return verify_key_lemma(K, derived_limit_dims(K, field, d_max), depth(K, field).depth());
}

}  // namespace srdepth
