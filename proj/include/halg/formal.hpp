#pragma once

#include <map>
#include <string>

#include "halg/scalar.hpp"

namespace halg {

// The three formal variables used by conformal brackets: D is the
// translation generator, Lm and Mu are the two bracket parameters.
enum class FVar { D, Lm, Mu };

const char* fvar_name(FVar v);

struct FMono {
    unsigned d = 0;
    unsigned l = 0;
    unsigned m = 0;

    unsigned degree() const { return d + l + m; }
    bool is_one() const { return d == 0 && l == 0 && m == 0; }
    FMono operator*(const FMono& o) const { return {d + o.d, l + o.l, m + o.m}; }
    bool operator==(const FMono& o) const = default;
};

// Degree first, then D-heavier, then Lm-heavier monomials compare larger.
struct FMonoGreater {
    bool operator()(const FMono& a, const FMono& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        if (a.d != b.d) return a.d > b.d;
        if (a.l != b.l) return a.l > b.l;
        return a.m > b.m;
    }
};

// Polynomial in D, Lm, Mu whose coefficients are Scalars. Zero
// coefficients are never stored, so is_zero() means terms_ is empty.
class FormalPoly {
public:
    FormalPoly() = default;
    explicit FormalPoly(const Scalar& c);
    FormalPoly(long v) : FormalPoly(Scalar(v)) {}
    static FormalPoly variable(FVar v);
    static FormalPoly term(const Scalar& c, const FMono& mono);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;
    unsigned degree() const;
    unsigned degree_in(FVar v) const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<FMono, Scalar, FMonoGreater>& terms() const { return terms_; }
    Scalar coeff(const FMono& mono) const;

    FormalPoly operator-() const;
    FormalPoly operator+(const FormalPoly& o) const;
    FormalPoly operator-(const FormalPoly& o) const;
    FormalPoly operator*(const FormalPoly& o) const;
    FormalPoly operator*(const Scalar& c) const;
    FormalPoly& operator+=(const FormalPoly& o) { *this = *this + o; return *this; }
    FormalPoly& operator-=(const FormalPoly& o) { *this = *this - o; return *this; }
    FormalPoly& operator*=(const FormalPoly& o) { *this = *this * o; return *this; }
    FormalPoly pow(unsigned e) const;

    bool operator==(const FormalPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const FormalPoly& o) const { return !(*this == o); }

    // Replaces every occurrence of each variable by its image, all at
    // once, so substitute(Lm -> -Lm-D) composed with itself is the
    // identity. Variables missing from the map stay fixed.
    FormalPoly substitute(const std::map<FVar, FormalPoly>& images) const;

    std::string str() const;

    void add_term(const FMono& mono, const Scalar& c);

private:
    std::map<FMono, Scalar, FMonoGreater> terms_;
};

inline FormalPoly operator*(const Scalar& c, const FormalPoly& p) { return p * c; }

} // namespace halg
