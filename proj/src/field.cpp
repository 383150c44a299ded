#include "cartankit/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cartankit {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::prime_field(long long p) {
    if (!is_prime(p)) throw Error("characteristic must be prime, got " + std::to_string(p));
    FieldDescriptor d;
    d.kind = FieldKind::PrimeField;
    d.p = p;
    return d;
}

FieldDescriptor FieldDescriptor::function_field(std::string variable, long long base_char) {
    if (base_char != 0 && !is_prime(base_char))
        throw Error("base characteristic must be 0 or prime, got " + std::to_string(base_char));
    if (variable.empty() || !std::isalpha(static_cast<unsigned char>(variable[0])))
        throw Error("function-field variable must start with a letter");
    FieldDescriptor d;
    d.kind = FieldKind::FunctionField;
    d.p = base_char;
    d.variable = std::move(variable);
    return d;
}

std::string FieldDescriptor::str() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::PrimeField: return "F" + std::to_string(p);
        case FieldKind::FunctionField:
            return (p ? "F" + std::to_string(p) : std::string("Q")) + "(" + variable + ")";
    }
    return "?";
}

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

mpq_class coef_canon(const mpq_class& c, long long p) {
    if (p == 0) return c;
    // residues: inputs always have denominator 1 except when embedding a
    // rational literal n/d, handled by explicit inversion in the callers
    mpz_class r = c.get_num() % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

mpz_class residue_inverse(const mpz_class& a, long long p) {
    mpz_class r, g;
    mpz_class pz(p);
    mpz_class av = a % pz;
    if (av < 0) av += pz;
    if (av == 0) throw DivisionByZero("division by zero residue mod " + std::to_string(p));
    mpz_invert(r.get_mpz_t(), av.get_mpz_t(), pz.get_mpz_t());
    return r;
}

mpq_class coef_inv(const mpq_class& c, long long p) {
    if (c == 0) throw DivisionByZero("division by zero coefficient");
    if (p == 0) return 1 / c;
    mpz_class inv = residue_inverse(c.get_num(), p);
    return mpq_class(inv);
}

Poly poly_add(const Poly& a, const Poly& b, long long p) {
    Poly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = coef_canon(r[i] + b[i], p);
    trim(r);
    return r;
}

Poly poly_neg(const Poly& a, long long p) {
    Poly r = a;
    for (auto& c : r) c = coef_canon(-c, p);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, long long p) { return poly_add(a, poly_neg(b, p), p); }

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = coef_canon(r[i + j] + a[i] * b[j], p);
    trim(r);
    return r;
}

// Remainder of a by monic-scaled b (b != 0); also used for exact division.
void poly_divmod(const Poly& a, const Poly& b, long long p, Poly& q, Poly& r) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    r = a;
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, mpq_class(0));
    mpq_class lead_inv = coef_inv(b.back(), p);
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        mpq_class f = coef_canon(r.back() * lead_inv, p);
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] = coef_canon(r[shift + i] - f * b[i], p);
        trim(r);
        if (r.size() > shift + b.size() - 1) throw Error("polynomial division did not reduce");
    }
    trim(q);
}

Poly poly_gcd(Poly a, Poly b, long long p) {
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {  // make monic
        mpq_class inv = coef_inv(a.back(), p);
        for (auto& c : a) c = coef_canon(c * inv, p);
    }
    return a;
}

} // namespace

FieldScalar::FieldScalar(const FieldDescriptor& d) : desc_(d), num_{}, den_{mpq_class(1)} {}

FieldScalar FieldScalar::integer(long long n, const FieldDescriptor& d) {
    return from_mpq(mpq_class(n), d);
}

FieldScalar FieldScalar::from_mpq(const mpq_class& q, const FieldDescriptor& d) {
    FieldScalar s(d);
    if (d.p == 0) {
        if (q != 0) s.num_ = {q};
    } else {
        mpz_class num = q.get_num() % d.p;
        if (num < 0) num += d.p;
        if (q.get_den() != 1) {
            mpz_class den = q.get_den() % d.p;
            if (den == 0) throw DivisionByZero("denominator divisible by characteristic");
            num = (num * residue_inverse(den, d.p)) % d.p;
        }
        if (num != 0) s.num_ = {mpq_class(num)};
    }
    return s;
}

FieldScalar FieldScalar::variable(const FieldDescriptor& d) {
    if (!d.is_function_field()) throw Error("no indeterminate in " + d.str());
    FieldScalar s(d);
    s.num_ = {mpq_class(0), mpq_class(1)};
    return s;
}

bool FieldScalar::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_[0] == den_[0];
}

void FieldScalar::canonicalize() {
    long long p = desc_.p;
    trim(num_);
    trim(den_);
    if (den_.empty()) throw DivisionByZero("zero denominator in " + desc_.str());
    if (num_.empty()) {
        den_ = {mpq_class(1)};
        return;
    }
    if (desc_.is_function_field()) {
        Poly g = poly_gcd(num_, den_, p);
        if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
            Poly q, r;
            poly_divmod(num_, g, p, q, r);
            num_ = q;
            poly_divmod(den_, g, p, q, r);
            den_ = q;
        }
        mpq_class inv = coef_inv(den_.back(), p);
        for (auto& c : den_) c = coef_canon(c * inv, p);
        for (auto& c : num_) c = coef_canon(c * inv, p);
    } else {
        // degree 0: fold denominator into the single numerator coefficient
        mpq_class v = num_[0] / den_[0];
        if (p) {
            mpz_class den = v.get_den() % p;
            if (den == 0) throw DivisionByZero("denominator divisible by characteristic");
            mpz_class num = v.get_num() % p;
            if (num < 0) num += p;
            v = mpq_class((num * residue_inverse(den, p)) % p);
        }
        num_ = v == 0 ? Poly{} : Poly{v};
        den_ = {mpq_class(1)};
    }
}

void FieldScalar::check_same(const FieldScalar& a, const FieldScalar& b) {
    if (!(a.desc_ == b.desc_))
        throw DescriptorMismatch("operands live in " + a.desc_.str() + " and " + b.desc_.str());
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r = *this;
    r.num_ = poly_neg(r.num_, desc_.p);
    return r;
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + desc_.str());
    FieldScalar r(desc_);
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    FieldScalar::check_same(a, b);
    long long p = a.desc_.p;
    FieldScalar r(a.desc_);
    r.num_ = poly_add(poly_mul(a.num_, b.den_, p), poly_mul(b.num_, a.den_, p), p);
    r.den_ = poly_mul(a.den_, b.den_, p);
    r.canonicalize();
    return r;
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    FieldScalar::check_same(a, b);
    long long p = a.desc_.p;
    FieldScalar r(a.desc_);
    r.num_ = poly_sub(poly_mul(a.num_, b.den_, p), poly_mul(b.num_, a.den_, p), p);
    r.den_ = poly_mul(a.den_, b.den_, p);
    r.canonicalize();
    return r;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    FieldScalar::check_same(a, b);
    long long p = a.desc_.p;
    FieldScalar r(a.desc_);
    r.num_ = poly_mul(a.num_, b.num_, p);
    r.den_ = poly_mul(a.den_, b.den_, p);
    r.canonicalize();
    return r;
}

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    FieldScalar::check_same(a, b);
    if (b.is_zero()) throw DivisionByZero("division by zero in " + a.desc_.str());
    long long p = a.desc_.p;
    FieldScalar r(a.desc_);
    r.num_ = poly_mul(a.num_, b.den_, p);
    r.den_ = poly_mul(a.den_, b.num_, p);
    r.canonicalize();
    return r;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    check_same(*this, o);
    return num_ == o.num_ && den_ == o.den_;
}

bool FieldScalar::is_constant() const { return num_.size() <= 1 && den_.size() == 1 && den_[0] == 1; }

mpq_class FieldScalar::rational_value() const {
    if (desc_.p != 0) throw Error("rational_value in characteristic " + std::to_string(desc_.p));
    if (!is_constant()) throw Error("rational_value of a non-constant function");
    return num_.empty() ? mpq_class(0) : num_[0];
}

long long FieldScalar::residue() const {
    if (desc_.p == 0) throw Error("residue of a characteristic-0 value");
    if (!is_constant()) throw Error("residue of a non-constant function");
    return num_.empty() ? 0 : static_cast<long long>(num_[0].get_num().get_si());
}

long long FieldScalar::integer_lift() const {
    if (desc_.p != 0) return residue();
    mpq_class q = rational_value();
    if (q.get_den() != 1) throw Error("integer_lift of non-integer " + q.get_str());
    return static_cast<long long>(q.get_num().get_si());
}

int FieldScalar::sign() const {
    mpq_class q = rational_value();
    return sgn(q);
}

bool FieldScalar::equals_integer(long long n) const {
    return *this == integer(n, desc_);
}

// ------------------------------------------------------------ rendering

namespace {

std::string poly_str(const std::vector<mpz_class>& c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        mpz_class v = c[k];
        if (first) {
            if (v < 0) { os << '-'; v = -v; }
            first = false;
        } else {
            os << (v < 0 ? '-' : '+');
            if (v < 0) v = -v;
        }
        if (k == 0) {
            os << v.get_str();
        } else {
            if (v != 1) os << v.get_str() << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace

std::string FieldScalar::str() const {
    if (!desc_.is_function_field()) {
        if (num_.empty()) return "0";
        mpq_class v = num_[0];
        if (desc_.p) return v.get_num().get_str();
        std::string s = v.get_num().get_str();
        if (v.get_den() != 1) s += "/" + v.get_den().get_str();
        return s;
    }
    // clear coefficient denominators, strip integer content, fix sign
    mpz_class l(1);
    for (const auto& c : num_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ni, di;
    ni.reserve(num_.size());
    di.reserve(den_.size());
    for (const auto& c : num_) ni.push_back(mpq_class(c * l).get_num());
    for (const auto& c : den_) di.push_back(mpq_class(c * l).get_num());
    mpz_class g(0);
    for (const auto& c : ni) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (const auto& c : di) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
        for (auto& c : ni) c /= g;
        for (auto& c : di) c /= g;
    }
    if (!di.empty() && di.back() < 0) {
        for (auto& c : ni) c = -c;
        for (auto& c : di) c = -c;
    }
    std::string ns = poly_str(ni, desc_.variable);
    std::string ds = poly_str(di, desc_.variable);
    if (ds == "1") return ns;
    return "(" + ns + ")/(" + ds + ")";
}

// ------------------------------------------------------------ parsing

namespace {

struct Parser {
    std::string s;
    std::size_t i = 0;
    const FieldDescriptor& d;

    explicit Parser(std::string_view text, const FieldDescriptor& desc) : d(desc) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }

    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i); }

    mpz_class parse_uint() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s[i++]);
        return mpz_class(digits);
    }

    // monomial := INT ['*' VAR ['^' INT]] | VAR ['^' INT]
    FieldScalar parse_monomial(bool negate) {
        mpz_class coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_uint();
            have_coef = true;
            if (peek() == '*') ++i;
            else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                // plain integer term
                FieldScalar v = FieldScalar::from_mpq(mpq_class(negate ? -coef : coef), d);
                return v;
            }
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string var;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                var.push_back(s[i++]);
            if (!d.is_function_field() || var != d.variable)
                fail("unknown symbol '" + var + "' in " + d.str());
            long long exp = 1;
            if (peek() == '^') {
                ++i;
                exp = static_cast<long long>(parse_uint().get_si());
            }
            FieldScalar v = FieldScalar::from_mpq(mpq_class(negate ? -coef : coef), d);
            FieldScalar x = FieldScalar::variable(d);
            for (long long k = 0; k < exp; ++k) v = v * x;
            return v;
        }
        if (have_coef) return FieldScalar::from_mpq(mpq_class(negate ? -coef : coef), d);
        fail("expected number or variable");
    }

    // polynomial := ['-'] monomial (('+'|'-') monomial)*
    FieldScalar parse_poly_until(const char* stops) {
        bool neg = false;
        if (peek() == '-') { neg = true; ++i; }
        else if (peek() == '+') ++i;
        FieldScalar acc = parse_monomial(neg);
        while (!eof() && !strchr_any(stops, peek())) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++i;
            FieldScalar t = parse_monomial(op == '-');
            acc = acc + t;
        }
        return acc;
    }

    static bool strchr_any(const char* stops, char c) {
        for (const char* q = stops; *q; ++q)
            if (*q == c) return true;
        return false;
    }

    // side := '(' poly ')' | poly
    FieldScalar parse_side() {
        if (peek() == '(') {
            ++i;
            FieldScalar v = parse_poly_until(")");
            if (peek() != ')') fail("expected ')'");
            ++i;
            return v;
        }
        return parse_poly_until("/)");
    }

    FieldScalar parse_scalar() {
        FieldScalar numerator = parse_side();
        if (peek() == '/') {
            ++i;
            FieldScalar denominator = parse_side();
            if (!eof()) fail("trailing input");
            if (denominator.is_zero()) throw DivisionByZero("zero denominator polynomial");
            return numerator / denominator;
        }
        if (!eof()) fail("trailing input");
        return numerator;
    }
};

} // namespace

FieldScalar FieldScalar::parse(std::string_view text, const FieldDescriptor& d) {
    Parser p(text, d);
    if (p.s.empty()) throw ParseError("empty scalar", 0);
    return p.parse_scalar();
}

} // namespace cartankit
