#pragma once

#include <tuple>
#include <vector>

#include "halg/formal.hpp"
#include "halg/linsolve.hpp"
#include "halg/superalgebra.hpp"

namespace halg {

// Element of the free D-module on the basis: one polynomial coefficient
// per generator. Bracket values may also involve Lm and Mu.
using CVec = std::vector<FormalPoly>;

// Finitely generated conformal algebra with structure polynomials. Entry
// (i, j) holds the coordinates of the Lm-bracket of generators i and j as
// polynomials in D and Lm. The twist map alpha sends generator i to a
// D-polynomial combination of generators; an empty alpha means the file
// declared none. Generators flagged central are annihilated by D, so their
// coordinate polynomials are reduced by D -> 0 everywhere.
struct ConformalAlgebra {
    SuperBasis basis;
    std::vector<std::string> params;
    std::vector<char> central;
    std::vector<CVec> table;
    std::vector<CVec> alpha;

    static ConformalAlgebra make(SuperBasis b, std::vector<std::string> params);

    std::size_t dim() const { return basis.dim(); }
    bool has_alpha() const { return !alpha.empty(); }
    const CVec& entry(std::size_t i, std::size_t j) const;
    void set_entry(std::size_t i, std::size_t j, CVec value);
    const CVec& alpha_column(std::size_t i) const;
    void set_alpha(std::vector<CVec> columns);

    // Shape, parity, variable usage, and central-generator constraints.
    void validate() const;
};

CVec czero(std::size_t dim);
CVec cgen(std::size_t dim, std::size_t i);
bool cvec_is_zero(const CVec& v);
std::string cvec_str(const SuperBasis& basis, const CVec& v);

// Kills D on central coordinates.
void central_reduce(const ConformalAlgebra& R, CVec& v);

// The bracket of two module elements with bracket parameter t, which may
// be any polynomial in D, Lm, Mu. Coefficient polynomials of x see their D
// replaced by -t, those of y by D + t, and the structure polynomials get
// their Lm replaced by t. Spectator variables ride along untouched.
CVec lambda_bracket(const ConformalAlgebra& R, const CVec& x, const CVec& y,
                    const FormalPoly& t);

// alpha extended D-linearly.
CVec apply_alpha(const ConformalAlgebra& R, const CVec& x);

// Skew-symmetry under Lm -> -Lm-D and the twisted Jacobi identity in the
// two-parameter polynomial ring.
CheckReport check_conformal_axioms(const ConformalAlgebra& R);

// Quadratic conformal algebra of a compatible pair:
// bracket(u, v) = [v,u] + (D+Lm)(v circ u) + (-1)^{|u||v|} Lm (u circ v).
ConformalAlgebra quadratic_from_gd(const GDStructure& S);

// Inverse of the above; NotQuadratic when the table has degree above one,
// inconsistent Lm coefficients, or a non-constant alpha.
GDStructure gd_from_quadratic(const ConformalAlgebra& R);

// Constant brackets from a Hom-Lie structure.
ConformalAlgebra current_conformal(const SuperAlgebra& A,
                                   const std::string& bracket,
                                   const std::string& alpha);

// Solution space of the twisted Jacobi identity, viewed as a homogeneous
// linear system in the coefficients of an unknown alpha with entries of
// D-degree at most degree_bound.
struct AlphaSpace {
    unsigned degree_bound = 0;
    // Unknown q is the coefficient of D^d in the component of alpha(gen i)
    // on gen k.
    std::vector<std::tuple<std::size_t, std::size_t, unsigned>> coords;
    std::vector<std::string> unknowns;
    LinearSolution space;

    std::size_t dimension() const { return space.kernel.size(); }
    std::vector<CVec> materialize(const ConformalAlgebra& R,
                                  std::size_t which) const;
};

AlphaSpace solve_alpha(const ConformalAlgebra& R, unsigned degree_bound);
unsigned default_alpha_degree_bound(const ConformalAlgebra& R);

} // namespace halg
