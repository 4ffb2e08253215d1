#pragma once

#include "halg/superalgebra.hpp"

namespace halg {

// Adjoins the graded commutator of circ as a new product named
// bracket_name and returns the certified compatible triple. Requires circ
// to pass the Hom-Novikov checks.
GDStructure supercommutator_gd(const SuperAlgebra& A,
                               const std::string& circ = "circ",
                               const std::string& alpha = "alpha",
                               const std::string& bracket_name = "bracket");

// Replaces every product p by (x, y) -> p(m(x), m(y)) where m is the named
// map, which must be an endomorphism of each product.
SuperAlgebra yau_twist(const SuperAlgebra& A, const std::string& map_name);

// From a commutative Hom-associative product and an even derivation d
// commuting with alpha: circ(x, y) = x * d(y) + shift * x * y, bracket its
// graded commutator.
GDStructure derivation_construction(const SuperAlgebra& A,
                                    const std::string& mul_name,
                                    const std::string& d_name,
                                    const std::string& alpha,
                                    const Scalar& shift);

// From a Hom-Poisson structure and an even derivation d of the product
// that twists the bracket by shift: same circ as above, bracket kept.
GDStructure poisson_construction(const SuperAlgebra& A,
                                 const std::string& mul_name,
                                 const std::string& bracket,
                                 const std::string& d_name,
                                 const std::string& alpha,
                                 const Scalar& shift);

// Star operations built from a Hom-Lie bracket and a commuting even map f:
// star(x, y) = [f(x), y] and starp(x, y) = [x, f(y)]. Compatibility of the
// result is equivalent to a finite set of conditions on f; both the
// condition check and the direct check of the built structure are
// reported, and they must agree.
struct StarVerdict {
    bool conditions_hold = false;
    CheckReport conditions;
    CheckReport direct;
    GDStructure structure;
};

StarVerdict star_construction(const SuperAlgebra& A,
                              const std::string& bracket,
                              const std::string& alpha,
                              const std::string& f_name,
                              bool prime);

} // namespace halg
