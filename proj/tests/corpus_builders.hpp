#pragma once

// Hand-typed fixture algebras shared by the suites. The tables here are
// the frozen reference values; they are written out literally instead of
// being loaded through the parser so that a parser bug cannot silently
// shift what the math tests assert.

#include "halg/conformal.hpp"
#include "halg/superalgebra.hpp"

namespace fixtures {

using namespace halg;

inline Vec unit(std::size_t dim, std::size_t i, const Scalar& c = Scalar(1)) {
    Vec v = zero_vec(dim);
    v[i] = c;
    return v;
}

// 3-dim twisted Novikov superalgebra: circ has x1 x1 = x2, x2 x2 = x1,
// x1 y = x2 y = y; alpha swaps x1 and x2 and kills y.
inline SuperAlgebra exam32() {
    SuperAlgebra A;
    A.basis = {{"x1", "x2", "y"}, {0, 0, 1}};
    ProductTable circ(3);
    circ.set(0, 0, unit(3, 1));
    circ.set(1, 1, unit(3, 0));
    circ.set(0, 2, unit(3, 2));
    circ.set(1, 2, unit(3, 2));
    A.products.emplace("circ", std::move(circ));
    EvenMap alpha(3);
    alpha.set_column(0, unit(3, 1));
    alpha.set_column(1, unit(3, 0));
    alpha.set_column(2, zero_vec(3));
    A.maps.emplace("alpha", std::move(alpha));
    A.validate();
    return A;
}

// The graded commutator bracket of exam32, written out by hand.
inline GDStructure exam32_gd() {
    GDStructure S{exam32()};
    ProductTable bracket(3);
    bracket.set(0, 2, unit(3, 2));
    bracket.set(1, 2, unit(3, 2));
    bracket.set(2, 0, unit(3, 2, Scalar(-1)));
    bracket.set(2, 1, unit(3, 2, Scalar(-1)));
    S.algebra.products.emplace("bracket", std::move(bracket));
    S.algebra.validate();
    return S;
}

// Parametric Novikov superalgebra with an endomorphism scaling by powers
// of lam.
inline SuperAlgebra exam33() {
    const Scalar lam = Scalar::param("lam");
    const Scalar half = Scalar(1) / Scalar(2);
    SuperAlgebra A;
    A.basis = {{"x1", "x2", "y"}, {0, 0, 1}};
    A.params = {"lam"};
    ProductTable circ(3);
    circ.set(0, 1, unit(3, 0, half));
    circ.set(1, 0, unit(3, 0, -half));
    circ.set(1, 1, unit(3, 1, half));
    circ.set(2, 1, unit(3, 2, half));
    circ.set(2, 2, unit(3, 0, half));
    A.products.emplace("circ", std::move(circ));
    EvenMap alpha(3);
    alpha.set_column(0, unit(3, 0, lam * lam));
    alpha.set_column(1, unit(3, 1));
    alpha.set_column(2, unit(3, 2, lam));
    A.maps.emplace("alpha", std::move(alpha));
    A.validate();
    return A;
}

// Twist of exam33 through its alpha plus the graded commutator bracket,
// both written out by hand.
inline GDStructure exam33_twisted_gd() {
    const Scalar lam = Scalar::param("lam");
    const Scalar half = Scalar(1) / Scalar(2);
    SuperAlgebra A = exam33();
    ProductTable circ(3);
    circ.set(0, 1, unit(3, 0, half * lam * lam));
    circ.set(1, 0, unit(3, 0, -half * lam * lam));
    circ.set(1, 1, unit(3, 1, half));
    circ.set(2, 1, unit(3, 2, half * lam));
    circ.set(2, 2, unit(3, 0, half * lam * lam));
    A.products["circ"] = std::move(circ);
    ProductTable bracket(3);
    bracket.set(0, 1, unit(3, 0, lam * lam));
    bracket.set(1, 0, unit(3, 0, -lam * lam));
    bracket.set(1, 2, unit(3, 2, -half * lam));
    bracket.set(2, 1, unit(3, 2, half * lam));
    bracket.set(2, 2, unit(3, 0, lam * lam));
    A.products.emplace("bracket", std::move(bracket));
    A.validate();
    return GDStructure{A};
}

// 6-dim doubled algebra: the even half is a truncated polynomial algebra
// with derivation (x + x^2) d/dx, the odd half has zero products and D
// acts on it as the identity. alpha scales the halves by c and p.
inline SuperAlgebra exam35() {
    const Scalar c = Scalar::param("c");
    const Scalar p = Scalar::param("p");
    SuperAlgebra A;
    A.basis = {{"e1", "e2", "e3", "o1", "o2", "o3"}, {0, 0, 0, 1, 1, 1}};
    A.params = {"c", "p", "t"};
    ProductTable mul(6);
    mul.set(0, 0, unit(6, 0));
    mul.set(0, 1, unit(6, 1));
    mul.set(1, 0, unit(6, 1));
    mul.set(0, 2, unit(6, 2));
    mul.set(2, 0, unit(6, 2));
    mul.set(1, 1, unit(6, 2));
    A.products.emplace("mul", std::move(mul));
    EvenMap alpha(6);
    for (std::size_t i = 0; i < 3; ++i) alpha.set_column(i, unit(6, i, c));
    for (std::size_t i = 3; i < 6; ++i) alpha.set_column(i, unit(6, i, p));
    A.maps.emplace("alpha", std::move(alpha));
    EvenMap d(6);
    d.set_column(0, zero_vec(6));
    Vec de2 = unit(6, 1);
    de2[2] = Scalar(1);
    d.set_column(1, std::move(de2));
    d.set_column(2, unit(6, 2, Scalar(2)));
    for (std::size_t i = 3; i < 6; ++i) d.set_column(i, unit(6, i));
    A.maps.emplace("D", std::move(d));
    A.validate();
    return A;
}

// The 3-dim candidate Poisson structure with its twist map and candidate
// derivation, defects included.
inline SuperAlgebra poisson_example() {
    const Scalar a = Scalar::param("a");
    const Scalar mu = Scalar::param("mu");
    const Scalar b = Scalar::param("b");
    const Scalar c = Scalar::param("c");
    SuperAlgebra A;
    A.basis = {{"e1", "e2", "e3"}, {0, 0, 0}};
    A.params = {"a", "mu", "b", "c"};
    ProductTable mul(3);
    mul.set(0, 1, unit(3, 0, a));
    mul.set(1, 0, unit(3, 0, a));
    Vec e2e2 = unit(3, 0);
    e2e2[1] = Scalar(1);
    mul.set(1, 1, std::move(e2e2));
    mul.set(1, 2, unit(3, 2, mu));
    mul.set(2, 1, unit(3, 2, mu));
    A.products.emplace("mul", std::move(mul));
    ProductTable bracket(3);
    bracket.set(0, 1, unit(3, 0, a * a));
    bracket.set(1, 0, unit(3, 0, -a * a));
    A.products.emplace("bracket", std::move(bracket));
    EvenMap alpha(3);
    alpha.set_column(0, unit(3, 0, a));
    Vec ae2 = unit(3, 0);
    ae2[1] = Scalar(1);
    alpha.set_column(1, std::move(ae2));
    alpha.set_column(2, unit(3, 2, mu));
    A.maps.emplace("alpha", std::move(alpha));
    EvenMap d(3);
    d.set_column(0, unit(3, 0, (a - Scalar(1)) * b));
    d.set_column(1, unit(3, 0, b));
    d.set_column(2, unit(3, 2, c));
    A.maps.emplace("D", std::move(d));
    A.validate();
    return A;
}

inline FormalPoly fD() { return FormalPoly::variable(FVar::D); }
inline FormalPoly fL() { return FormalPoly::variable(FVar::Lm); }

inline CVec centry(std::size_t dim, std::size_t i, const FormalPoly& p) {
    CVec v = czero(dim);
    v[i] = p;
    return v;
}

// Rank-one conformal algebra of Virasoro type, identity twist.
inline ConformalAlgebra vir() {
    ConformalAlgebra R =
        ConformalAlgebra::make({{"L"}, {0}}, {});
    R.set_entry(0, 0, centry(1, 0, fD() + Scalar(2) * fL()));
    R.set_alpha({cgen(1, 0)});
    R.validate();
    return R;
}

// Three-generator conformal superalgebra of super Virasoro type with
// twist a * id.
inline ConformalAlgebra svir() {
    const Scalar a = Scalar::param("a");
    ConformalAlgebra R =
        ConformalAlgebra::make({{"L", "F", "G"}, {0, 0, 1}}, {"a"});
    const FormalPoly d2l = fD() + Scalar(2) * fL();
    R.set_entry(0, 0, centry(3, 0, d2l));
    R.set_entry(0, 2, centry(3, 2, d2l));
    R.set_entry(2, 0, centry(3, 2, d2l));
    R.set_entry(1, 2, centry(3, 2, FormalPoly(1)));
    R.set_entry(2, 1, centry(3, 2, FormalPoly(-1)));
    R.set_entry(0, 1, centry(3, 1, fD() + fL()));
    R.set_entry(1, 0, centry(3, 1, fL()));
    R.set_alpha({centry(3, 0, FormalPoly(a)), centry(3, 1, FormalPoly(a)),
                 centry(3, 2, FormalPoly(a))});
    R.validate();
    return R;
}

// Quadratic table of exam32_gd, written out by hand.
inline ConformalAlgebra quadratic32() {
    ConformalAlgebra R =
        ConformalAlgebra::make({{"x1", "x2", "y"}, {0, 0, 1}}, {});
    const FormalPoly d2l = fD() + Scalar(2) * fL();
    R.set_entry(0, 0, centry(3, 1, d2l));
    R.set_entry(1, 1, centry(3, 0, d2l));
    R.set_entry(0, 2, centry(3, 2, fL() - FormalPoly(1)));
    R.set_entry(1, 2, centry(3, 2, fL() - FormalPoly(1)));
    R.set_entry(2, 0, centry(3, 2, fD() + fL() + FormalPoly(1)));
    R.set_entry(2, 1, centry(3, 2, fD() + fL() + FormalPoly(1)));
    R.set_alpha({cgen(3, 1), cgen(3, 0), czero(3)});
    R.validate();
    return R;
}

// Constant-bracket conformal superalgebra over the exam32 commutator.
inline ConformalAlgebra current32() {
    ConformalAlgebra R =
        ConformalAlgebra::make({{"x1", "x2", "y"}, {0, 0, 1}}, {});
    R.set_entry(0, 2, centry(3, 2, FormalPoly(1)));
    R.set_entry(1, 2, centry(3, 2, FormalPoly(1)));
    R.set_entry(2, 0, centry(3, 2, FormalPoly(-1)));
    R.set_entry(2, 1, centry(3, 2, FormalPoly(-1)));
    R.set_alpha({cgen(3, 1), cgen(3, 0), czero(3)});
    R.validate();
    return R;
}

} // namespace fixtures
