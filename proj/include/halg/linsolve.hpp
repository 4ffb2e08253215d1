#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "halg/formal.hpp"
#include "halg/scalar.hpp"

namespace halg {

// Dense system A x = rhs over the scalar field, row major.
struct LinearSystem {
    std::size_t cols = 0;
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;

    explicit LinearSystem(std::size_t unknowns) : cols(unknowns) {}
    void add_row(std::vector<Scalar> coeffs, Scalar b);
    std::size_t row_count() const { return rows.size(); }
};

struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    // One solution with every free unknown set to zero. Empty when the
    // system is inconsistent.
    std::vector<Scalar> particular;
    // Basis of the homogeneous solution space, one vector per free
    // unknown, in unknown order. Canonical for a fixed column order.
    std::vector<std::vector<Scalar>> kernel;
};

// Gauss-Jordan elimination with exact arithmetic. The pivot choice
// prefers structurally small entries to limit expression growth.
LinearSolution solve_linear(LinearSystem sys);

// Accumulates named unknowns and affine equations sum(c_i x_i) + k = 0,
// then lowers them to a LinearSystem with rhs -k.
class EquationBuilder {
public:
    std::size_t unknown(const std::string& name);
    bool has_unknown(const std::string& name) const { return index_.count(name) != 0; }
    std::size_t count() const { return names_.size(); }
    const std::string& name(std::size_t idx) const { return names_.at(idx); }
    const std::vector<std::string>& names() const { return names_; }

    void add_equation(const std::map<std::size_t, Scalar>& coeffs, const Scalar& konst);
    std::size_t equation_count() const { return eqs_.size(); }

    LinearSystem build() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::map<std::size_t, Scalar>, Scalar>> eqs_;
};

// Splits a scalar that is affine in the parameters listed in unknown_of
// (param id -> builder unknown index) into per-unknown coefficients plus
// a constant part and adds the equation "value = 0". The denominator must
// be free of unknowns; std::logic_error otherwise, and likewise when the
// numerator is quadratic or worse in them.
void add_affine_equation(EquationBuilder& eb, const Scalar& value,
                         const std::map<VarId, std::size_t>& unknown_of);

// Same, with one equation per formal monomial of r.
void add_affine_equations(EquationBuilder& eb, const FormalPoly& r,
                          const std::map<VarId, std::size_t>& unknown_of);

} // namespace halg
