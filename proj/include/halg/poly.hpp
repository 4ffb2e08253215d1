#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "halg/params.hpp"
#include "halg/rational.hpp"

namespace halg {

// Power product of parameters: factors sorted by VarId, exponents positive.
struct Monomial {
    std::vector<std::pair<VarId, unsigned>> factors;

    unsigned degree() const;
    bool is_one() const { return factors.empty(); }
    unsigned exponent_of(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    // Exact quotient; the caller must know o divides *this.
    Monomial operator/(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return factors == o.factors; }

    static Monomial one() { return {}; }
    static Monomial var(VarId v, unsigned e = 1);
};

// Graded lexicographic: total degree first, then the earlier-interned
// parameter with the larger exponent wins. Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial over the rationals. The term map is kept in
// descending grlex order so begin() is always the leading term, and no zero
// coefficient is ever stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    Poly() = default;
    Poly(long v) { if (v != 0) terms_[Monomial::one()] = Rat(v); }
    explicit Poly(const Rat& v) { if (v != 0) terms_[Monomial::one()] = v; }
    static Poly variable(VarId v);
    static Poly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Zero polynomial reports constant value 0.
    Rat constant_value() const;
    unsigned degree() const;
    unsigned degree_in(VarId v) const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rat& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Total order usable as a map key ordering; compares term lists
    // lexicographically in grlex term order.
    static int cmp(const Poly& a, const Poly& b);

    Rat eval(const std::map<VarId, Rat>& point) const;

    // Canonical rendering, grlex-descending, parseable by the literal grammar.
    std::string str() const;

    void add_term(const Monomial& m, const Rat& c);

private:
    TermMap terms_;
};

// Gcd normalized to integer-primitive form with positive leading coefficient;
// gcd(0, p) is that normalization of p, and the gcd of two nonzero constants
// is 1 (we work over a field of coefficients).
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient. Throws std::logic_error when the division is not exact;
// callers only use it on known divisors.
Poly divide_exact(const Poly& num, const Poly& den);

} // namespace halg
