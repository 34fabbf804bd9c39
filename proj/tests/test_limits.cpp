#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "srdepth/cohomology.hpp"
#include "srdepth/error.hpp"
#include "srdepth/face_ring.hpp"
#include "srdepth/limits.hpp"

using namespace srdepth;

namespace {

/// lim^i from the dense assembled complex, one degree at a time.
std::vector<Index> dense_limits(const SimplicialComplex& K, const FieldSpec& F, int d)
{
    auto dims = cohomology_dims(limits_complex(K, d), F);
    if (!dims.empty()) dims.pop_back();
    return dims;
}

}  // namespace

TEST_CASE("chains")
{
    const auto E = simplex(2);
    const std::vector<Face> elements(E.faces().begin() + 1, E.faces().end());
    CHECK(chains(elements, 1, Chains::normalized).size() == 3);
    CHECK(chains(elements, 2, Chains::normalized) ==
          std::vector<Flag>{{Face(1), Face(3)}, {Face(2), Face(3)}});
    CHECK(chains(elements, 3, Chains::normalized).empty());
    // Unnormalized: the 2 strict pairs plus 3 identities.
    CHECK(chains(elements, 2, Chains::unnormalized).size() == 5);
}

TEST_CASE("limit complex examples")
{
    const auto F = FieldSpec::rationals();
    const auto P = disjoint_points(2);
    const auto cp = limits_complex(P, 0);
    REQUIRE(cp.size() == 1);
    CHECK(cp[0].cols() == 2);
    CHECK(cp[0].rows() == 0);

    // Single edge, degree 0: C^0 = F^3 on {1},{2},{12}; C^1 = F^2 on 1⊂12, 2⊂12.
    const auto E = simplex(2);
    const auto ce = limits_complex(E, 0);
    REQUIRE(ce.size() == 2);
    CHECK(ce[0].rows() == 2);
    CHECK(ce[0].cols() == 3);
    // Hand assembly: each row is ±(e_{12} - e_v), so the two rows are independent.
    for (Index r = 0; r < 2; ++r) {
        CHECK(ce[0].row(r).nonZeros() == 2);
        CHECK(ce[0].row(r).sum() == 0);
    }
    for (const auto& G : test_support::all_fields()) CHECK(rank(ce[0], G) == 2);

    const auto c3 = cycle(3);
    const auto lim = dense_limits(c3, F, 0);
    CHECK(lim == std::vector<Index>{1, 1});
}

TEST_CASE("d∘d = 0 for assembled complexes")
{
    for (const auto& K : {rp2_minimal(), cone(cycle(4)), validate({{1, 2, 3}, {3, 4, 5}}, 5)})
        for (int d : {0, 2, 4}) {
            const auto ds = limits_complex(K, d);
            for (std::size_t n = 0; n + 1 < ds.size(); ++n) CHECK(IntMatrix(ds[n + 1] * ds[n]).cwiseAbs().sum() == 0);
        }
}

TEST_CASE("block decomposition agrees with the dense complex")
{
    for (const auto& F : test_support::all_fields())
        for (const auto& K : {cycle(3), disjoint_points(2), simplex(2), rp2_minimal(), cone(cycle(4)),
                              validate({{1, 2, 3}, {3, 4, 5}}, 5), random_complex(6, 2, 0.5, 17)}) {
            const int d_max = K.m() <= 4 ? 6 : 4;
            const auto profile = derived_limit_dims(K, F, d_max);
            for (int d = 0; d <= d_max; d += 2) {
                const auto dense = dense_limits(K, F, d);
                for (int i = 0; i <= K.dim(); ++i) CHECK(profile.lim(i, d) == dense[static_cast<std::size_t>(i)]);
                const auto [ker, coker] = rho(K, F, d);
                CHECK(profile.L(-1, d) == ker);
                CHECK(profile.L(0, d) == coker);
            }
        }
}

TEST_CASE("normalized and unnormalized complexes have the same H^0 and H^1")
{
    const auto F = FieldSpec::prime(3);
    for (const auto& K : {cycle(3), simplex(2), validate({{1, 2, 3}, {3, 4}}, 4)})
        for (int d : {0, 2}) {
            const auto normalized = dense_limits(K, F, d);
            const auto full = cohomology_dims(limits_complex(K, d, Chains::unnormalized, 2), F);
            CHECK(full[0] == normalized[0]);
            CHECK(full[1] == (normalized.size() > 1 ? normalized[1] : 0));
        }
}

TEST_CASE("limit values")
{
    const auto F = FieldSpec::rationals();
    const auto P = derived_limit_dims(disjoint_points(2), F, 8);
    CHECK(P.lim(0, 0) == 2);
    CHECK(P.L(0, 0) == 1);
    CHECK(P.L(-1, 0) == 0);

    const auto E = simplex(2);
    const auto pe = derived_limit_dims(E, F, 10);
    for (int d = 0; d <= 10; d += 2) {
        CHECK(pe.lim(0, d) == graded_dim(E, d));
        CHECK(pe.lim(1, d) == 0);
        CHECK(pe.L(0, d) == 0);
    }

    const auto S = simplex(4);
    const auto ps = derived_limit_dims(S, FieldSpec::prime(2), 8);
    for (int d = 0; d <= 8; d += 2) {
        CHECK(ps.L(-1, d) == 0);
        CHECK(ps.L(0, d) == 0);
        for (int i = 1; i <= S.dim(); ++i) CHECK(ps.lim(i, d) == 0);
    }

    try {
        derived_limit_dims(E, F, 3);
        FAIL("odd d_max accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OddDegree);
    }
}

TEST_CASE("verify_srdec")
{
    const auto c3 = verify_srdec(cycle(3), FieldSpec::rationals(), 12);
    CHECK(c3.verdict.pass);
    CHECK(c3.profile.lim(1, 0) == 1);
    CHECK(c3.profile.total_lim(1) == 1);

    const auto p2 = verify_srdec(rp2_minimal(), FieldSpec::prime(2), 24);
    CHECK(p2.verdict.pass);
    CHECK(p2.profile.total_lim(1) == 1);
    CHECK(p2.profile.total_lim(2) == 1);
    CHECK(p2.profile.lim(1, 0) == 1);
    CHECK(p2.profile.lim(2, 0) == 1);

    const auto s = verify_srdec(simplex(3), FieldSpec::prime(5), 12);
    CHECK(s.verdict.pass);
    CHECK(s.profile.total_lim(1) == 0);
    CHECK(s.profile.total_lim(2) == 0);

    CHECK(verify_srdec(SimplicialComplex(), FieldSpec::rationals(), 0).verdict.pass);

    // A tampered profile must be reported, with the failing position.
    auto tampered = p2.profile;
    tampered.by_degree[4].lim[1] = 1;
    const auto bad = verify_srdec(tampered, rp2_minimal());
    CHECK_FALSE(bad.verdict.pass);
    CHECK(bad.first_failure == std::make_pair(1, 4));
}
