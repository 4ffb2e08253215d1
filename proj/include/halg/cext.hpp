#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "halg/conformal.hpp"

namespace halg {

// Polynomial-valued bilinear form on the generators: comp[d] is the
// dim x dim coefficient matrix of Lm^d, row major, so the full value at
// a generator pair is value(i, j) = sum_d Lm^d * comp[d][i*dim+j].
struct Cocycle {
    std::size_t dim = 0;
    std::vector<std::vector<Scalar>> comp;

    static Cocycle zero(std::size_t dim, std::size_t max_degree);

    std::size_t max_degree() const { return comp.empty() ? 0 : comp.size() - 1; }
    const Scalar& at(std::size_t d, std::size_t i, std::size_t j) const;
    Scalar& at(std::size_t d, std::size_t i, std::size_t j);
    // Like at, but degrees beyond the stored range read as zero.
    Scalar get(std::size_t d, std::size_t i, std::size_t j) const;
    FormalPoly value(std::size_t i, std::size_t j) const;
    bool is_zero() const;
    // Largest degree whose matrix is nonzero; 0 for the zero form.
    std::size_t top_degree() const;
};

// f_t(x, y) for module elements: coefficients of x see D -> -t, those of
// y see D -> t (the form takes values in the D-torsion line, so the usual
// D + t collapses), and the form's own Lm becomes t.
FormalPoly cocycle_eval(const Cocycle& f, const CVec& x, const CVec& y,
                        const FormalPoly& t);

// Bilinear evaluation of the degree-d component on plain vectors.
Scalar component_eval(const Cocycle& f, std::size_t d, const Vec& x,
                      const Vec& y);

// Direct check of the 2-cocycle conditions over R: values only on pairs
// of equal total parity, skew-symmetry under t -> -t, and the twisted
// Jacobi identity against R's bracket and twist map.
CheckReport check_cocycle(const ConformalAlgebra& R, const Cocycle& f);

// Unknown (degree, row, col) is the coefficient of Lm^degree at the
// generator pair (row, col).
struct CocycleCoord {
    std::size_t degree = 0, row = 0, col = 0;
};

struct CocycleSpace {
    std::size_t dim = 0;
    std::size_t max_degree = 0;
    std::vector<CocycleCoord> coords;
    std::vector<std::string> unknowns;
    LinearSolution space;

    std::size_t dimension() const { return space.kernel.size(); }
    Cocycle basis_cocycle(std::size_t which) const;
};

// Cuts out the cocycle conditions as a homogeneous linear system in the
// component coefficients up to max_degree and solves it. The bracket
// table must be quadratic and carry a twist map.
CocycleSpace solve_cocycle_space(const ConformalAlgebra& R,
                                 std::size_t max_degree);

// Degree relations every cocycle over the quadratic algebra of S must
// satisfy. With n the top degree of f: n > 3 forces the top component to
// vanish on (u circ v, alpha(w)); n <= 3 forces a per-degree symmetry
// pattern plus seven mixed relations tying consecutive components over
// circ and bracket values. HypothesisFailed when f is not a cocycle over
// that algebra in the first place.
CheckReport verify_degree_relations(const GDStructure& S, const Cocycle& f);

// One-dimensional central extension: the base bracket plus a central
// component given by the cocycle.
struct CentralExtension {
    ConformalAlgebra base;
    Cocycle cocycle;
    std::string center;
    ConformalAlgebra extended;
};

// Extension table built without any cocycle gate: base entries gain the
// central coordinate value(i, j), rows and columns of the center vanish,
// and the twist map sends the center to center_scale times itself.
ConformalAlgebra central_extension_table(const ConformalAlgebra& R,
                                         const Cocycle& f,
                                         const std::string& center = "c",
                                         const Scalar& center_scale = Scalar(1));

// Gated and certified extension; NotACocycle when f fails check_cocycle.
CentralExtension extend_by_cocycle(const ConformalAlgebra& R,
                                   const Cocycle& f,
                                   const std::string& center = "c",
                                   const Scalar& center_scale = Scalar(1));

// Reads the form back off an extension with exactly one central
// generator, indexed by the remaining generators in order.
Cocycle extract_cocycle(const ConformalAlgebra& ext);

} // namespace halg
