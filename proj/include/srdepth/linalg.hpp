#ifndef SRDEPTH_LINALG_HPP
#define SRDEPTH_LINALG_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "srdepth/field.hpp"

namespace srdepth {

using Index = Eigen::Index;

/// Integer matrices are the common currency: every coboundary, restriction
/// and limit differential has small integer entries, and is reduced into a
/// field only when a rank is needed.
using IntMatrix = Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor>;
using DenseIntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
IntMatrix to_sparse(const Eigen::MatrixBase<Derived>& dense)
{
    return dense.template cast<std::int64_t>().sparseView();
}

/// Matrix over a field given by an arithmetic policy (PrimeField or
/// RationalField). Stored as sorted sparse rows whose entries are always in
/// canonical form.
template <typename Field>
class ExactMatrix {
public:
    using Element = typename Field::Element;
    using Row = std::vector<std::pair<Index, Element>>;

    ExactMatrix(const IntMatrix& a, Field field);

    Index rows() const { return static_cast<Index>(rows_.size()); }
    Index cols() const { return cols_; }
    const Row& row(Index i) const { return rows_[static_cast<std::size_t>(i)]; }

    /// Row echelon elimination, pivoting on the first nonzero column of each
    /// incoming row. Deterministic.
    Index rank() const;

private:
    Field field_;
    std::vector<Row> rows_;
    Index cols_ = 0;
};

Index rank(const IntMatrix& a, const FieldSpec& field);

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a, const FieldSpec& field)
{
    return rank(to_sparse(a), field);
}

inline Index kernel_dim(const IntMatrix& a, const FieldSpec& field) { return a.cols() - rank(a, field); }
inline Index cokernel_dim(const IntMatrix& a, const FieldSpec& field) { return a.rows() - rank(a, field); }

/// True if every entry of `a` vanishes in the field.
bool is_zero_over(const IntMatrix& a, const FieldSpec& field);

/// Dimensions of H^0..H^{N+1} of 0 → C^0 →d_0 C^1 → ... →d_N C^{N+1} → 0.
/// Throws NotAComplex (naming n) if d_{n+1}·d_n ≠ 0 over the field or the
/// shapes do not compose. An empty list yields an empty result.
std::vector<Index> cohomology_dims(std::span<const IntMatrix> differentials, const FieldSpec& field);

extern template class ExactMatrix<PrimeField>;
extern template class ExactMatrix<RationalField>;

}  // namespace srdepth

#endif  // SRDEPTH_LINALG_HPP
