#pragma once

#include <optional>
#include <vector>

#include "cartankit/field.hpp"

namespace cartankit {

// Dense square matrix of FieldScalars sharing one descriptor. Immutable use
// is intended; all operations return fresh matrices.
class ExactMatrix {
public:
    static constexpr int kMaxDim = 64;

    ExactMatrix(int n, const FieldDescriptor& d);
    static ExactMatrix identity(int n, const FieldDescriptor& d);

    int dim() const { return n_; }
    const FieldDescriptor& descriptor() const { return desc_; }

    FieldScalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const FieldScalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const ExactMatrix& o) const;
    bool is_identity() const;

    ExactMatrix transpose() const;
    ExactMatrix scale_rows(const std::vector<FieldScalar>& d) const;
    ExactMatrix scale(const FieldScalar& s) const;

    // Exact two-sided inverse by Gauss-Jordan elimination; the product
    // M * M^-1 is checked internally before returning.
    ExactMatrix inverse() const;
    FieldScalar determinant() const;
    ExactMatrix principal_submatrix(const std::vector<int>& keep) const;

    // Diagonal D (first entry 1) with D*M symmetric, for indecomposable M.
    std::optional<std::vector<FieldScalar>> symmetrizer() const;
    bool indecomposable() const;

private:
    int n_;
    FieldDescriptor desc_;
    std::vector<FieldScalar> e_;
};

ExactMatrix matmul(const ExactMatrix& lhs, const ExactMatrix& rhs);

} // namespace cartankit
