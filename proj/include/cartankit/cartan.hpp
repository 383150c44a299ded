#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cartankit/matrix.hpp"

namespace cartankit {

enum class Parity : std::uint8_t { Even, Odd };

inline char parity_char(Parity p) { return p == Parity::Even ? 'e' : 'o'; }

// The pair (A, I): a square matrix together with the parity of each simple
// root. Carries any matrix, normalized or not.
struct CartanSpec {
    ExactMatrix matrix;
    std::vector<Parity> parities;
    std::optional<std::string> name;

    CartanSpec(ExactMatrix m, std::vector<Parity> p, std::optional<std::string> nm = std::nullopt);
    int dim() const { return matrix.dim(); }
    const FieldDescriptor& descriptor() const { return matrix.descriptor(); }
};

// Data of one odd reflection at index k: the k-th column of B, the k-th row
// of C, and the induced parity flips. Enough to rebuild (E+B) and (E+C).
struct ReflectionFactors {
    int k;
    std::vector<FieldScalar> b;
    std::vector<FieldScalar> c;
    std::vector<int> parity_delta;  // residues mod 2

    ExactMatrix e_plus_b(const FieldDescriptor& d) const;
    ExactMatrix e_plus_c(const FieldDescriptor& d) const;
};

struct NormalizeResult {
    CartanSpec normalized;
    std::vector<FieldScalar> row_scales;  // normalized.matrix = D * input.matrix
};

// Rescale rows so each diagonal entry is the embedded 2 (even parity) or 1
// (odd parity); rows with zero diagonal are scaled so their first nonzero
// off-diagonal entry is -1.
NormalizeResult normalize(const CartanSpec& spec);

struct EquivalenceWitness {
    std::vector<int> perm;               // old index i -> new index perm[i]
    std::vector<FieldScalar> row_scales; // indexed by new position
};

// Permutation + row rescaling carrying s1 to s2 (parities permuted along),
// if one exists.
std::optional<EquivalenceWitness> equivalent(const CartanSpec& s1, const CartanSpec& s2);

bool is_isotropic(const CartanSpec& spec, int k);

// The odd (isotropic) reflection r_k: entrywise
// (r_k(A))_ij = A_ij + b_i A_kj + c_j A_ik, parities flipped where c_j = 1.
// The result is not normalized.
std::pair<CartanSpec, ReflectionFactors> odd_reflect(const CartanSpec& spec, int k);

// Inverse of the reflected (unnormalized) matrix from the inverse of the
// original: (E+C) A^-1 (E+B). (E+B) and (E+C) are involutions.
ExactMatrix inverse_update(const ExactMatrix& prev_inverse, const ReflectionFactors& f);

// Reflection coefficient B_kj: the smallest non-negative integer congruent
// to -2 A_kj / A_kk, with the odd-isotropic and characteristic-2 special
// cases.
long long reflection_coefficient(const CartanSpec& spec, int k, int j);

// Permutation minimizing the bandwidth max{|i-j| : A_{s(i)s(j)} != 0};
// ties broken by the lexicographically smallest permuted zero-pattern.
std::vector<int> canonical_order(const CartanSpec& spec);

} // namespace cartankit
