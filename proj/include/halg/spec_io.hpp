#pragma once

#include <string>

#include "halg/cext.hpp"
#include "halg/conformal.hpp"
#include "halg/superalgebra.hpp"

namespace halg {

// Algebra files hold either a finite-dimensional structure-constant
// description (products plus maps) or a conformal bracket table, never
// both at once.
enum class FileKind { FiniteDimensional, Conformal };

struct AlgebraFile {
    FileKind kind = FileKind::FiniteDimensional;
    SuperAlgebra algebra;
    ConformalAlgebra conformal;
};

// JSON object notation, name-based entries, omitted entries read as zero:
//   {"schema": 1,
//    "params": ["lam"],
//    "basis": [["x1", 0], ["y", 1]],
//    "products": {"circ": [["x1", "x1", [["x1", "lam/2"]]]]},
//    "maps": {"alpha": [["x1", [["x1", "lam^2"]]]]}}
// Conformal files replace products/maps with
//   {"conformal": {"bracket": [["L", "L", [["L", "D + 2*Lm"]]]],
//                  "alpha": [["L", [["L", "1"]]]]}}
// and may flag torsion generators as ["c", 0, "central"]. ParseError for
// malformed syntax, ValidationError with an entry path otherwise.
AlgebraFile parse_algebra_text(const std::string& text,
                               const std::string& origin);
AlgebraFile read_algebra_file(const std::string& path);

std::string serialize(const SuperAlgebra& A);
std::string serialize(const ConformalAlgebra& R);
void write_algebra_file(const std::string& path, const SuperAlgebra& A);
void write_algebra_file(const std::string& path, const ConformalAlgebra& R);

// Cocycle files name the same generators as the algebra they accompany:
//   {"schema": 1,
//    "cocycle": {"max_degree": 3, "entries": [["L", "L", "Lm^3"]]}}
// Entry values are polynomials in Lm alone.
Cocycle parse_cocycle_text(const std::string& text, const SuperBasis& basis,
                           const std::vector<std::string>& params,
                           const std::string& origin);
Cocycle read_cocycle_file(const std::string& path, const SuperBasis& basis,
                          const std::vector<std::string>& params);
std::string serialize_cocycle(const Cocycle& f, const SuperBasis& basis);
void write_cocycle_file(const std::string& path, const Cocycle& f,
                        const SuperBasis& basis);

} // namespace halg
