#include "halg/scalar.hpp"

namespace halg {

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ZeroDenominator("scalar with zero denominator");
    normalize();
}

Scalar Scalar::param(const std::string& name) {
    Scalar s;
    s.num_ = Poly::variable(params::intern(name));
    s.den_ = Poly(1);
    return s;
}

Rat Scalar::rational_value() const {
    if (!is_rational()) throw Error("scalar '" + str() + "' is not a plain rational");
    return num_.constant_value();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!(g == Poly(1))) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r;
    r.num_ = num_ * o.den_ - o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw ZeroDenominator("scalar division by zero");
    Scalar r;
    r.num_ = num_ * o.den_;
    r.den_ = den_ * o.num_;
    r.normalize();
    return r;
}

Scalar Scalar::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw ZeroDenominator("zero scalar to a negative power");
        return Scalar(1) / pow(-e);
    }
    Scalar r(1);
    Scalar base(*this);
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1u) r *= base;
        base *= base;
        u >>= 1u;
    }
    return r;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    int c = Poly::cmp(a.num_, b.num_);
    if (c != 0) return c;
    return Poly::cmp(a.den_, b.den_);
}

std::string Scalar::str() const {
    if (den_ == Poly(1)) return num_.str();
    std::string n = num_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

} // namespace halg
