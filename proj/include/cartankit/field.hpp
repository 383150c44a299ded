#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartankit/errors.hpp"

namespace cartankit {

enum class FieldKind { Rational, PrimeField, FunctionField };

bool is_prime(long long p);

// Coefficient domain + optional indeterminate. A FunctionField is a field of
// univariate rational functions over Q (base_char 0) or F_p; nesting is not
// allowed.
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    long long p = 0;       // characteristic (0 for Q; prime otherwise)
    std::string variable;  // nonempty iff kind == FunctionField

    static FieldDescriptor rational() { return {}; }
    static FieldDescriptor prime_field(long long p);
    static FieldDescriptor function_field(std::string variable, long long base_char = 0);

    long long characteristic() const { return p; }
    bool is_function_field() const { return kind == FieldKind::FunctionField; }
    bool operator==(const FieldDescriptor&) const = default;
    std::string str() const;
};

// Exact field element, stored reduced: numerator/denominator polynomials in
// the descriptor's variable (degree 0 unless FunctionField). Denominator is
// monic over a function field; rationals live in a single canonical
// mpq_class coefficient; F_p residues are the least non-negative
// representatives. Immutable after construction.
class FieldScalar {
public:
    FieldScalar() : FieldScalar(FieldDescriptor::rational()) {}
    explicit FieldScalar(const FieldDescriptor& d);  // zero of the field

    static FieldScalar zero(const FieldDescriptor& d) { return FieldScalar(d); }
    static FieldScalar one(const FieldDescriptor& d) { return integer(1, d); }
    static FieldScalar integer(long long n, const FieldDescriptor& d);
    static FieldScalar from_mpq(const mpq_class& q, const FieldDescriptor& d);
    static FieldScalar variable(const FieldDescriptor& d);  // the indeterminate
    static FieldScalar parse(std::string_view text, const FieldDescriptor& d);

    const FieldDescriptor& descriptor() const { return desc_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar inverse() const;
    friend FieldScalar operator+(const FieldScalar&, const FieldScalar&);
    friend FieldScalar operator-(const FieldScalar&, const FieldScalar&);
    friend FieldScalar operator*(const FieldScalar&, const FieldScalar&);
    friend FieldScalar operator/(const FieldScalar&, const FieldScalar&);
    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    std::string str() const;

    // Degree-0 numerator and denominator (every Rational/PrimeField value;
    // a function-field value only when it lies in the base field).
    bool is_constant() const;
    // Constant characteristic-0 value as a rational number.
    mpq_class rational_value() const;
    // Constant F_p value as the least non-negative residue.
    long long residue() const;
    // Least non-negative integer representative: the residue in F_p, or the
    // value itself for an integer rational (throws otherwise).
    long long integer_lift() const;
    // Sign of a constant value in an ordered field (characteristic 0).
    int sign() const;
    bool equals_integer(long long n) const;

    // Internal access used by the matrix/polynomial layer.
    const std::vector<mpq_class>& num() const { return num_; }
    const std::vector<mpq_class>& den() const { return den_; }

private:
    FieldDescriptor desc_;
    std::vector<mpq_class> num_;  // coefficient i of x^i; empty == 0
    std::vector<mpq_class> den_;  // never empty; {1} unless function field

    void canonicalize();
    static void check_same(const FieldScalar& a, const FieldScalar& b);
};

} // namespace cartankit
