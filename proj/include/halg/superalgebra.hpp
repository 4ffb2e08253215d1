#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "halg/report.hpp"
#include "halg/scalar.hpp"

namespace halg {

// Ordered list of named basis elements, each even (0) or odd (1).
struct SuperBasis {
    std::vector<std::string> names;
    std::vector<int> parities;

    std::size_t dim() const { return names.size(); }
    int parity(std::size_t i) const { return parities.at(i); }
    bool has(const std::string& name) const;
    std::size_t index_of(const std::string& name) const; // UnknownName
    void validate() const;                               // ValidationError
};

// Coordinate vector over the scalar field, indexed like the basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t dim);
Vec basis_vec(std::size_t dim, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
// a += c * b, returning a.
Vec& axpy(Vec& a, const Scalar& c, const Vec& b);

// Bilinear product given by structure constants: entry (i, j) holds the
// coordinates of (basis_i * basis_j).
class ProductTable {
public:
    ProductTable() = default;
    explicit ProductTable(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Vec& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Vec value);

private:
    std::size_t dim_ = 0;
    std::vector<Vec> entries_;
};

// Parity-preserving linear map stored column-wise: column i is the image
// of basis_i.
class EvenMap {
public:
    EvenMap() = default;
    explicit EvenMap(std::size_t dim);
    static EvenMap identity(std::size_t dim);

    std::size_t dim() const { return columns_.size(); }
    const Vec& column(std::size_t i) const { return columns_.at(i); }
    void set_column(std::size_t i, Vec image);
    Vec apply(const Vec& v) const;

private:
    std::vector<Vec> columns_;
};

// Finite-dimensional graded algebra carrier: a basis plus any number of
// named products and named parity-preserving maps over shared parameters.
struct SuperAlgebra {
    SuperBasis basis;
    std::vector<std::string> params;
    std::map<std::string, ProductTable> products;
    std::map<std::string, EvenMap> maps;

    std::size_t dim() const { return basis.dim(); }
    bool has_product(const std::string& name) const;
    bool has_map(const std::string& name) const;
    const ProductTable& product(const std::string& name) const; // UnknownName
    const EvenMap& map(const std::string& name) const;          // UnknownName

    // Shape and grading checks: table sizes match the basis, products are
    // parity-additive, maps are parity-preserving. ParityError on a graded
    // violation, ValidationError on a shape mismatch.
    void validate() const;
};

// Names the (bracket, circ, alpha) triple inside a SuperAlgebra that a
// compatible pair of operations lives under.
struct GDStructure {
    SuperAlgebra algebra;
    std::string bracket = "bracket";
    std::string circ = "circ";
    std::string alpha = "alpha";
};

// x * y extended bilinearly from the table.
Vec mul(const ProductTable& table, const Vec& x, const Vec& y);

// Graded antisymmetry plus the twisted Jacobi identity.
CheckReport check_hom_lie_super(const SuperAlgebra& A,
                                const std::string& bracket,
                                const std::string& alpha);

// mu(alpha(x), mu(y, z)) == mu(mu(x, y), alpha(z)), optionally together
// with graded commutativity.
CheckReport check_hom_associative(const SuperAlgebra& A,
                                  const std::string& mul_name,
                                  const std::string& alpha,
                                  bool require_commutative);

// Twisted left-symmetry and twisted right-commutativity of circ.
CheckReport check_hom_novikov_super(const SuperAlgebra& A,
                                    const std::string& circ,
                                    const std::string& alpha);

// The five-term compatibility identity tying bracket and circ.
CheckReport check_gd_compatibility(const SuperAlgebra& A,
                                   const std::string& bracket,
                                   const std::string& circ,
                                   const std::string& alpha);

// Bracket Hom-Lie + circ Hom-Novikov + compatibility, merged.
CheckReport check_gd(const SuperAlgebra& A,
                     const std::string& bracket,
                     const std::string& circ,
                     const std::string& alpha);
CheckReport check_gd(const GDStructure& S);

// Commutative Hom-associative product + Hom-Lie bracket + the graded
// Leibniz identity twisted by alpha.
CheckReport check_hom_poisson(const SuperAlgebra& A,
                              const std::string& mul_name,
                              const std::string& bracket,
                              const std::string& alpha);

// Properties a named map can be checked for.
struct EndomorphismOf {
    std::vector<std::string> products;
};
struct DerivationOf {
    std::string product;
};
struct CommutesWith {
    std::string other_map;
};
// D[x, y] == [Dx, y] + [x, Dy] + shift * [x, y].
struct TwistedDerivationOf {
    std::string bracket;
    Scalar shift;
};
using MapProperty =
    std::variant<EndomorphismOf, DerivationOf, CommutesWith, TwistedDerivationOf>;

CheckReport check_map_property(const SuperAlgebra& A,
                               const std::string& map_name,
                               const MapProperty& property);

// Basis of { x : [x, alpha(b)] == 0 for every basis element b }; every
// returned vector is parity-homogeneous.
std::vector<Vec> centralizer_of_alpha_image(const SuperAlgebra& A,
                                            const std::string& bracket,
                                            const std::string& alpha);

// Membership of v in the span of the given vectors.
bool in_span(const std::vector<Vec>& span, const Vec& v);

// Parity of a homogeneous vector; ParityError if components of both
// parities are present. Zero vectors report even.
int vec_parity(const SuperBasis& basis, const Vec& v);

// Rendering helpers shared by checkers and the CLI.
std::string vec_str(const SuperBasis& basis, const Vec& v);
std::vector<std::pair<std::string, std::string>> residual_entries(
    const SuperBasis& basis, const Vec& v);

} // namespace halg
