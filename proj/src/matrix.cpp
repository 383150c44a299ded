#include "cartankit/matrix.hpp"

#include <algorithm>

namespace cartankit {

ExactMatrix::ExactMatrix(int n, const FieldDescriptor& d) : n_(n), desc_(d) {
    if (n < 1 || n > kMaxDim)
        throw DimensionMismatch("dimension " + std::to_string(n) + " outside [1, 64]");
    e_.assign(static_cast<std::size_t>(n) * n, FieldScalar::zero(d));
}

ExactMatrix ExactMatrix::identity(int n, const FieldDescriptor& d) {
    ExactMatrix m(n, d);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldScalar::one(d);
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (n_ != o.n_ || !(desc_ == o.desc_)) return false;
    return e_ == o.e_;
}

bool ExactMatrix::is_identity() const { return *this == identity(n_, desc_); }

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(n_, desc_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::scale_rows(const std::vector<FieldScalar>& d) const {
    if (static_cast<int>(d.size()) != n_) throw DimensionMismatch("row-scale vector length");
    ExactMatrix r(n_, desc_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = d[i] * at(i, j);
    return r;
}

ExactMatrix ExactMatrix::scale(const FieldScalar& s) const {
    ExactMatrix r(n_, desc_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = s * at(i, j);
    return r;
}

ExactMatrix matmul(const ExactMatrix& lhs, const ExactMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw DimensionMismatch("matmul dimensions differ");
    if (!(lhs.descriptor() == rhs.descriptor()))
        throw DescriptorMismatch("matmul over " + lhs.descriptor().str() + " and " +
                                 rhs.descriptor().str());
    int n = lhs.dim();
    ExactMatrix r(n, lhs.descriptor());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            FieldScalar acc = FieldScalar::zero(lhs.descriptor());
            for (int k = 0; k < n; ++k) acc = acc + lhs.at(i, k) * rhs.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

namespace {

// Pivot preference over function fields: smallest num+den degree keeps
// expression swell down; elsewhere any nonzero pivot works.
int pivot_weight(const FieldScalar& s) {
    return static_cast<int>(s.num().size() + s.den().size());
}

} // namespace

ExactMatrix ExactMatrix::inverse() const {
    int n = n_;
    ExactMatrix a = *this;
    ExactMatrix inv = identity(n, desc_);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            if (pivot < 0 ||
                (desc_.is_function_field() &&
                 pivot_weight(a.at(r, col)) < pivot_weight(a.at(pivot, col))))
                pivot = r;
        }
        if (pivot < 0) throw SingularMatrix("matrix is singular", rank);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        FieldScalar pinv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = pinv * a.at(col, j);
            inv.at(col, j) = pinv * inv.at(col, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            FieldScalar f = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
        ++rank;
    }
    if (!matmul(*this, inv).is_identity())
        throw Error("internal: inverse verification failed");
    return inv;
}

FieldScalar ExactMatrix::determinant() const {
    int n = n_;
    ExactMatrix a = *this;
    FieldScalar det = FieldScalar::one(desc_);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            if (pivot < 0 ||
                (desc_.is_function_field() &&
                 pivot_weight(a.at(r, col)) < pivot_weight(a.at(pivot, col))))
                pivot = r;
        }
        if (pivot < 0) return FieldScalar::zero(desc_);
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det = det * a.at(col, col);
        FieldScalar pinv = a.at(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            FieldScalar f = a.at(r, col) * pinv;
            for (int j = col; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        }
    }
    return det;
}

ExactMatrix ExactMatrix::principal_submatrix(const std::vector<int>& keep) const {
    if (keep.empty()) throw IndexOutOfRange("empty index set");
    for (int k : keep)
        if (k < 0 || k >= n_) throw IndexOutOfRange("index " + std::to_string(k));
    ExactMatrix r(static_cast<int>(keep.size()), desc_);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(keep[i], keep[j]);
    return r;
}

bool ExactMatrix::indecomposable() const {
    // connectivity of the graph with edge (i,j) iff M_ij != 0 or M_ji != 0
    std::vector<int> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
            if (v == u || seen[v]) continue;
            if (!at(u, v).is_zero() || !at(v, u).is_zero()) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

std::optional<std::vector<FieldScalar>> ExactMatrix::symmetrizer() const {
    if (!indecomposable()) throw DecomposableInput("symmetrizer needs an indecomposable matrix");
    // propagate d_i M_ij = d_j M_ji over the support graph from d_0 = 1
    std::vector<FieldScalar> d(n_, FieldScalar::zero(desc_));
    d[0] = FieldScalar::one(desc_);
    std::vector<int> done(n_, 0);
    done[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
            if (v == u || done[v]) continue;
            if (at(u, v).is_zero() && at(v, u).is_zero()) continue;
            // need d_v M_vu = d_u M_uv
            if (at(v, u).is_zero() || at(u, v).is_zero()) return std::nullopt;
            d[v] = d[u] * at(u, v) / at(v, u);
            if (d[v].is_zero()) return std::nullopt;
            done[v] = 1;
            stack.push_back(v);
        }
    }
    ExactMatrix s = scale_rows(d);
    if (!(s == s.transpose())) return std::nullopt;
    return d;
}

} // namespace cartankit
