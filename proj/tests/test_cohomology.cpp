#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "srdepth/cohomology.hpp"

using namespace srdepth;

namespace {

void check_against_oracle(const SimplicialComplex& K, const FieldSpec& F)
{
    const auto h = reduced_cohomology(K, F);
    const auto expected = oracle::cohomology(test_support::faces_of(K), F.characteristic());
    CHECK(h.min_degree == -1);
    for (const auto& [i, v] : expected) CHECK(h.at(i) == v);
    CHECK(h.max_degree() == K.dim());
}

}  // namespace

TEST_CASE("reduced cohomology examples")
{
    for (const auto& F : test_support::all_fields()) {
        const auto h = reduced_cohomology(disjoint_points(2), F);
        CHECK(h.at(-1) == 0);
        CHECK(h.at(0) == 1);
    }
    const auto p2 = reduced_cohomology(rp2_minimal(), FieldSpec::prime(2));
    CHECK(p2.at(0) == 0);
    CHECK(p2.at(1) == 1);
    CHECK(p2.at(2) == 1);
    // Reduced Euler characteristic χ - 1 = 0 for RP².
    CHECK(p2.alternating_sum() == rp2_minimal().euler_characteristic() - 1);
    for (const auto& F : {FieldSpec::rationals(), FieldSpec::prime(3)}) {
        const auto q = reduced_cohomology(rp2_minimal(), F);
        CHECK(q.at(0) == 0);
        CHECK(q.at(1) == 0);
        CHECK(q.at(2) == 0);
    }
    const auto empty = reduced_cohomology(SimplicialComplex(), FieldSpec::rationals());
    CHECK(empty.at(-1) == 1);
    CHECK(empty.first_nonzero() == -1);
    CHECK(reduced_cohomology(simplex(4), FieldSpec::rationals()).first_nonzero() == std::nullopt);
}

TEST_CASE("reduced cohomology agrees with the dense oracle")
{
    for (const auto& F : test_support::all_fields())
        for (const auto& K : {rp2_minimal(), cycle(5), suspension(rp2_minimal()), join(cycle(3), disjoint_points(3)),
                              random_complex(8, 2, 0.3, 5), random_complex(7, 3, 0.5, 9)})
            check_against_oracle(K, F);
}

TEST_CASE("coboundary squares to zero")
{
    const auto K = cone(rp2_minimal());
    for (int c = 0; c + 1 <= K.dim() + 1; ++c) {
        const IntMatrix product = coboundary(K, c + 1) * coboundary(K, c);
        CHECK(product.cwiseAbs().sum() == 0);
    }
}

TEST_CASE("relative cohomology")
{
    const auto F = FieldSpec::rationals();
    const auto C = cycle(5);
    const auto self = relative_cohomology(C, C, F);
    for (int i = 0; i <= 1; ++i) CHECK(self.at(i) == 0);

    // |{∅}| is the empty space, so the pair gives unreduced cohomology: the
    // reduced groups plus one in degree 0.
    const auto with_empty = relative_cohomology(rp2_minimal(), SimplicialComplex(), FieldSpec::prime(2));
    const auto reduced = reduced_cohomology(rp2_minimal(), FieldSpec::prime(2));
    for (int i = 0; i <= 2; ++i) CHECK(with_empty.at(i) == reduced.at(i) + (i == 0 ? 1 : 0));
    // A point: H^0(|K|, ∅) = 1 is what the local cohomology at the point needs.
    CHECK(relative_cohomology(simplex(1), SimplicialComplex(), FieldSpec::rationals()).at(0) == 1);
    CHECK(local_cohomology(simplex(1), Face::vertex(0), FieldSpec::rationals()).at(0) == 1);

    const auto S = simplex(3);
    const auto pair = relative_cohomology(S, boundary_simplex(2), F);
    CHECK(pair.at(0) == 0);
    CHECK(pair.at(1) == 0);
    CHECK(pair.at(2) == 1);
}

TEST_CASE("relative cohomology agrees with the dense oracle")
{
    const auto K = random_complex(7, 2, 0.5, 21);
    const auto faces = test_support::faces_of(K);
    for (Face s : K.faces()) {
        if (s.empty()) continue;
        const auto L = contrastar(K, s);
        oracle::FaceSet excluded;
        for (const auto& f : faces) {
            const auto sl = K.labels_of(s);
            if (!std::includes(f.begin(), f.end(), sl.begin(), sl.end())) excluded.insert(f);
        }
        for (const auto& F : test_support::all_fields()) {
            const auto h = relative_cohomology(K, L, F);
            for (const auto& [i, v] : oracle::cohomology(faces, F.characteristic(), excluded))
                if (i >= 0) CHECK(h.at(i) == v);
        }
    }
}

TEST_CASE("local cohomology via the link shift")
{
    const auto F = FieldSpec::rationals();
    const auto C4 = cycle(4);
    const auto h = local_cohomology(C4, test_support::face(C4, {1}), F);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 1);

    const auto S = simplex(3);
    const auto top = local_cohomology(S, S.vertex_set(), F);
    CHECK(top.at(0) == 0);
    CHECK(top.at(1) == 0);
    CHECK(top.at(2) == 1);

    // Cone apex: link is the base, shifted by one.
    const auto base = rp2_minimal();
    const auto K = cone(base);
    const auto apex = local_cohomology(K, test_support::face(K, {1}), FieldSpec::prime(2));
    const auto hb = reduced_cohomology(base, FieldSpec::prime(2));
    for (int i = 0; i <= K.dim(); ++i) CHECK(apex.at(i) == hb.at(i - 1));

    for (Face s : K.faces())
        if (!s.empty()) {
            const auto a = local_cohomology(K, s, FieldSpec::prime(2));
            const auto b = local_cohomology_relative(K, s, FieldSpec::prime(2));
            for (int i = 0; i <= K.dim(); ++i) CHECK(a.at(i) == b.at(i));
        }
}
