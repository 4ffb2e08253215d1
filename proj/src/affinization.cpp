#include "halg/affinization.hpp"

#include <sstream>
#include <stdexcept>

namespace halg {

namespace {

int sign_of(int a, int b) { return (a & b & 1) ? -1 : 1; }

const Scalar& half() {
    static const Scalar h = Scalar(1) / Scalar(2);
    return h;
}

// Jacobi sum with the cyclic sign pattern, combined from precomputed
// double brackets.
LoopSum jacobi_sum(const GDStructure& S, const LoopSum& X, const LoopSum& Y,
                   const LoopSum& Z, int pu, int pv, int pw) {
    LoopSum total;
    auto accumulate = [&total](const LoopSum& part, int sgn) {
        for (const auto& [key, coeff] : part)
            loop_add(total, key.base, key.degree2, Scalar(sgn) * coeff);
    };
    accumulate(loop_bracket(S, loop_bracket(S, X, Y), loop_phi(S, Z)),
               sign_of(pu, pw));
    accumulate(loop_bracket(S, loop_bracket(S, Y, Z), loop_phi(S, X)),
               sign_of(pu, pv));
    accumulate(loop_bracket(S, loop_bracket(S, Z, X), loop_phi(S, Y)),
               sign_of(pv, pw));
    return total;
}

std::vector<std::pair<std::string, std::string>> loop_entries(
    const SuperBasis& basis, const LoopSum& s) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, coeff] : s)
        out.emplace_back(loop_label(basis, key), coeff.str());
    return out;
}

} // namespace

LoopSum loop_term(std::size_t base, const Scalar& degree2) {
    LoopSum s;
    s[{base, degree2}] = Scalar(1);
    return s;
}

void loop_add(LoopSum& s, std::size_t base, const Scalar& degree2,
              const Scalar& coeff) {
    if (coeff.is_zero()) return;
    LoopKey key{base, degree2};
    auto it = s.find(key);
    if (it == s.end()) {
        s.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) s.erase(it);
}

bool loop_is_zero(const LoopSum& s) { return s.empty(); }

std::string loop_label(const SuperBasis& basis, const LoopKey& key) {
    std::ostringstream out;
    out << basis.names.at(key.base) << "["
        << (key.degree2 * half()).str() << "]";
    return out.str();
}

LoopSum loop_bracket(const GDStructure& S, const LoopSum& x, const LoopSum& y) {
    const ProductTable& br = S.algebra.product(S.bracket);
    const ProductTable& c = S.algebra.product(S.circ);
    const std::size_t n = S.algebra.dim();

    LoopSum out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const Scalar coeff = cx * cy;
            const Scalar top = kx.degree2 + ky.degree2;
            const Scalar low = top - Scalar(2);
            const Scalar p = kx.degree2 * half();
            const Scalar q = ky.degree2 * half();
            const int sgn =
                sign_of(S.algebra.basis.parity(kx.base),
                        S.algebra.basis.parity(ky.base));

            const Vec& b = br.at(kx.base, ky.base);
            for (std::size_t l = 0; l < n; ++l)
                loop_add(out, l, top, coeff * b[l]);
            const Vec& uv = c.at(kx.base, ky.base);
            for (std::size_t l = 0; l < n; ++l)
                loop_add(out, l, low, coeff * p * uv[l]);
            const Vec& vu = c.at(ky.base, kx.base);
            for (std::size_t l = 0; l < n; ++l)
                loop_add(out, l, low, Scalar(-sgn) * coeff * q * vu[l]);
        }
    return out;
}

LoopSum loop_phi(const GDStructure& S, const LoopSum& x) {
    const EvenMap& al = S.algebra.map(S.alpha);
    LoopSum out;
    for (const auto& [key, coeff] : x) {
        const Vec& img = al.column(key.base);
        for (std::size_t l = 0; l < img.size(); ++l)
            loop_add(out, l, key.degree2, coeff * img[l]);
    }
    return out;
}

CheckReport check_affinization(const GDStructure& S, long lo, long hi) {
    CheckReport rep;
    rep.check = "loop-hom-lie";
    if (lo > hi) throw ValidationError("empty power window");
    const SuperBasis& basis = S.algebra.basis;
    const std::size_t n = basis.dim();

    auto term_at = [&](std::size_t i, long m) {
        return loop_term(i, Scalar(2 * m + basis.parity(i)));
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (long m = lo; m <= hi; ++m)
                for (long nn = lo; nn <= hi; ++nn) {
                    LoopSum X = term_at(i, m), Y = term_at(j, nn);
                    LoopSum r = loop_bracket(S, X, Y);
                    const int sgn = sign_of(basis.parity(i), basis.parity(j));
                    for (const auto& [key, coeff] : loop_bracket(S, Y, X))
                        loop_add(r, key.base, key.degree2, Scalar(sgn) * coeff);
                    if (!loop_is_zero(r))
                        rep.add_failure({"loop-skew",
                                         {loop_label(basis, X.begin()->first),
                                          loop_label(basis, Y.begin()->first)},
                                         loop_entries(basis, r)});
                }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (long m = lo; m <= hi; ++m)
                    for (long nn = lo; nn <= hi; ++nn)
                        for (long kk = lo; kk <= hi; ++kk) {
                            LoopSum X = term_at(i, m);
                            LoopSum Y = term_at(j, nn);
                            LoopSum Z = term_at(k, kk);
                            LoopSum r =
                                jacobi_sum(S, X, Y, Z, basis.parity(i),
                                           basis.parity(j), basis.parity(k));
                            if (!loop_is_zero(r))
                                rep.add_failure(
                                    {"loop-jacobi",
                                     {loop_label(basis, X.begin()->first),
                                      loop_label(basis, Y.begin()->first),
                                      loop_label(basis, Z.begin()->first)},
                                     loop_entries(basis, r)});
                        }
    return rep;
}

CheckReport check_affinization_delta(const GDStructure& S) {
    CheckReport rep;
    rep.check = "loop-hom-lie-delta";
    const SuperBasis& basis = S.algebra.basis;
    const std::size_t n = basis.dim();
    const Scalar m = Scalar::param("_m");
    const Scalar nn = Scalar::param("_n");
    const Scalar kk = Scalar::param("_k");

    auto term_at = [&](std::size_t i, const Scalar& power) {
        return loop_term(i, Scalar(2) * power + Scalar(basis.parity(i)));
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LoopSum X = term_at(i, m), Y = term_at(j, nn);
            LoopSum r = loop_bracket(S, X, Y);
            const int sgn = sign_of(basis.parity(i), basis.parity(j));
            for (const auto& [key, coeff] : loop_bracket(S, Y, X))
                loop_add(r, key.base, key.degree2, Scalar(sgn) * coeff);
            if (!loop_is_zero(r))
                rep.add_failure({"loop-skew",
                                 {loop_label(basis, X.begin()->first),
                                  loop_label(basis, Y.begin()->first)},
                                 loop_entries(basis, r)});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                LoopSum X = term_at(i, m);
                LoopSum Y = term_at(j, nn);
                LoopSum Z = term_at(k, kk);
                LoopSum r = jacobi_sum(S, X, Y, Z, basis.parity(i),
                                       basis.parity(j), basis.parity(k));
                if (loop_is_zero(r)) continue;

                const Scalar top =
                    X.begin()->first.degree2 + Y.begin()->first.degree2 +
                    Z.begin()->first.degree2;
                // Split the residual by how many whole powers of the loop
                // variable it sits below the top.
                std::map<long, LoopSum> by_drop;
                for (const auto& [key, coeff] : r) {
                    const Scalar gap = top - key.degree2;
                    if (!gap.is_rational())
                        throw std::logic_error("non-constant power gap");
                    const Rat g = gap.rational_value();
                    if (rat_den(g) != 1 || rat_num(g) % 2 != 0)
                        throw std::logic_error("fractional power gap");
                    by_drop[static_cast<long>(rat_num(g) / 2)]
                           [key] = coeff;
                }
                for (const auto& [drop, part] : by_drop)
                    rep.add_failure(
                        {"loop-jacobi-drop" + std::to_string(drop),
                         {loop_label(basis, X.begin()->first),
                          loop_label(basis, Y.begin()->first),
                          loop_label(basis, Z.begin()->first)},
                         loop_entries(basis, part)});
            }
    return rep;
}

} // namespace halg
