#pragma once

#include <string>

#include "halg/errors.hpp"
#include "halg/poly.hpp"

namespace halg {

// Element of the rational function field over the declared parameters.
// Invariant after every operation: numerator and denominator are coprime and
// the denominator is monic with respect to the grlex order (parameters in
// interning order), so equal values have equal representations and equality
// is plain structural comparison.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const Rat& v) : num_(v), den_(1) {}
    explicit Scalar(const Poly& p) : num_(p), den_(1) {}
    Scalar(const Poly& num, const Poly& den);

    static Scalar param(const std::string& name);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }
    bool is_rational() const { return num_.is_constant() && den_ == Poly(1); }
    Rat rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // ZeroDenominator on o == 0
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
    Scalar pow(int e) const;

    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    static int cmp(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const {
        return Scalar::cmp(a, b) < 0;
    }
};

inline Scalar operator*(long c, const Scalar& s) { return Scalar(c) * s; }

} // namespace halg
