#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "srdepth/error.hpp"
#include "srdepth/linalg.hpp"

using namespace srdepth;

namespace {

DenseIntMatrix dense(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    DenseIntMatrix a(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (auto v : r) a(i, j++) = v;
        ++i;
    }
    return a;
}

oracle::Dense to_oracle(const DenseIntMatrix& a)
{
    oracle::Dense out(static_cast<std::size_t>(a.rows()), std::vector<long long>(static_cast<std::size_t>(a.cols())));
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    return out;
}

DenseIntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols)
{
    DenseIntMatrix a(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) a(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
    // Plant dependencies so that ranks are not always full.
    if (rows > 2) a.row(rows - 1) = 2 * a.row(0) - a.row(1);
    return a;
}

}  // namespace

TEST_CASE("rank examples")
{
    for (const auto& F : test_support::all_fields()) CHECK(rank(DenseIntMatrix::Identity(3, 3), F) == 3);
    CHECK(rank(dense({{2, 4}, {1, 2}}), FieldSpec::rationals()) == 1);
    CHECK(rank(dense({{1, 1}, {1, 1}}), FieldSpec::prime(2)) == 1);
    CHECK(rank(dense({{2, 0}, {0, 3}}), FieldSpec::prime(2)) == 1);
    CHECK(rank(dense({{2, 0}, {0, 3}}), FieldSpec::rationals()) == 2);
    CHECK(rank(IntMatrix(0, 5), FieldSpec::rationals()) == 0);
}

TEST_CASE("kernel and cokernel")
{
    const auto F = FieldSpec::rationals();
    CHECK(kernel_dim(to_sparse(DenseIntMatrix::Zero(2, 3)), F) == 3);
    CHECK(kernel_dim(to_sparse(DenseIntMatrix::Identity(4, 4)), F) == 0);
    CHECK(cokernel_dim(to_sparse(DenseIntMatrix::Identity(4, 4)), F) == 0);
    CHECK(kernel_dim(to_sparse(dense({{1, 1}})), FieldSpec::prime(2)) == 1);
}

TEST_CASE("rank agrees with the dense oracle, is transpose- and permutation-invariant")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Index rows = 1 + static_cast<Index>(rng() % 9), cols = 1 + static_cast<Index>(rng() % 9);
        DenseIntMatrix a = random_matrix(rng, rows, cols);
        Eigen::PermutationMatrix<Eigen::Dynamic> P(rows);
        P.setIdentity();
        std::shuffle(P.indices().data(), P.indices().data() + rows, rng);
        const DenseIntMatrix pa = P * a;
        const Index over_q = rank(a, FieldSpec::rationals());
        for (const auto& F : test_support::all_fields()) {
            const Index r = rank(a, F);
            CHECK(r == oracle::rank(to_oracle(a), F.characteristic()));
            CHECK(r == rank(DenseIntMatrix(a.transpose()), F));
            CHECK(r == rank(pa, F));
            CHECK(r <= over_q);
        }
    }
}

TEST_CASE("cohomology_dims")
{
    const auto F = FieldSpec::rationals();
    const std::vector<IntMatrix> zero{IntMatrix(3, 2), IntMatrix(1, 3)};
    CHECK(cohomology_dims(zero, F) == std::vector<Index>{2, 3, 1});
    const std::vector<IntMatrix> id{to_sparse(DenseIntMatrix::Identity(1, 1))};
    CHECK(cohomology_dims(id, F) == std::vector<Index>{0, 0});

    // Augmented cochains of the 3-cycle: ∅ → 3 vertices → 3 edges.
    // Hand elimination: δ_0 has rank 1, δ_1 rank 2, so H̃^0 = 3-1-2 = 0, H̃^1 = 3-2 = 1.
    const DenseIntMatrix d_minus = dense({{1}, {1}, {1}});
    const DenseIntMatrix d_0 = dense({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}});
    const std::vector<IntMatrix> triangle{to_sparse(d_minus), to_sparse(d_0)};
    CHECK(cohomology_dims(triangle, F) == std::vector<Index>{0, 0, 1});

    const std::vector<IntMatrix> bad{to_sparse(DenseIntMatrix::Identity(2, 2)), to_sparse(DenseIntMatrix::Identity(2, 2))};
    try {
        cohomology_dims(bad, F);
        FAIL("expected NotAComplex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAComplex);
        CHECK(std::string(e.what()).find("d_1") != std::string::npos);
    }
    // 2·I squares to 4·I, which is zero only in characteristic 2.
    const std::vector<IntMatrix> twice{to_sparse(DenseIntMatrix(2 * DenseIntMatrix::Identity(2, 2))),
                                       to_sparse(DenseIntMatrix(2 * DenseIntMatrix::Identity(2, 2)))};
    CHECK(cohomology_dims(twice, FieldSpec::prime(2)) == std::vector<Index>{2, 2, 2});
}

TEST_CASE("field parsing")
{
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("p=7").characteristic() == 7);
    CHECK(FieldSpec::parse("p=3").name() == "p=3");
    for (const char* bad : {"p=4", "p=1", "p=", "r", "p=2147483648", "p=-3"}) {
        try {
            FieldSpec::parse(bad);
            FAIL(bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadParameter);
        }
    }
}
