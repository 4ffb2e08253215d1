#pragma once

#include <map>

#include "halg/superalgebra.hpp"

namespace halg {

// Basis element tensored with a power of the loop variable. Powers are
// stored doubled so odd elements can sit at half-integer exponents: an even
// u at power m has degree2 == 2m, an odd u at power m + 1/2 has 2m + 1.
// The degree may involve parameters, which is how the whole power lattice
// is checked at once.
struct LoopKey {
    std::size_t base;
    Scalar degree2;
};

struct LoopKeyLess {
    bool operator()(const LoopKey& a, const LoopKey& b) const {
        if (a.base != b.base) return a.base < b.base;
        return Scalar::cmp(a.degree2, b.degree2) < 0;
    }
};

// Finite sum of loop terms with scalar coefficients.
using LoopSum = std::map<LoopKey, Scalar, LoopKeyLess>;

LoopSum loop_term(std::size_t base, const Scalar& degree2);
void loop_add(LoopSum& s, std::size_t base, const Scalar& degree2,
              const Scalar& coeff);
bool loop_is_zero(const LoopSum& s);
std::string loop_label(const SuperBasis& basis, const LoopKey& key);

// Bracket on the loop space: writing p and q for the actual (halved)
// powers of the two terms,
//   [u t^p, v t^q] = [u,v] t^{p+q} + p (u circ v) t^{p+q-1}
//                    - (-1)^{|u||v|} q (v circ u) t^{p+q-1}.
LoopSum loop_bracket(const GDStructure& S, const LoopSum& x, const LoopSum& y);

// The twist map on the loop space: alpha on the base, power kept.
LoopSum loop_phi(const GDStructure& S, const LoopSum& x);

// Skew-symmetry and the twisted Jacobi identity of the loop bracket on all
// powers inside [lo, hi] (integer part; odd elements carry the extra half).
CheckReport check_affinization(const GDStructure& S, long lo, long hi);

// Same identities with symbolic powers, so a pass covers the whole
// lattice. The Jacobi residual is split by how far the power dropped below
// the top; each group must vanish separately.
CheckReport check_affinization_delta(const GDStructure& S);

} // namespace halg
