#include "halg/conformal.hpp"

#include <sstream>
#include <stdexcept>

namespace halg {

namespace {

int sign_of(int a, int b) { return (a & b & 1) ? -1 : 1; }

std::map<FVar, FormalPoly> lm_to_mu() {
    return {{FVar::Lm, FormalPoly::variable(FVar::Mu)}};
}

CVec substituted(CVec v, const std::map<FVar, FormalPoly>& sub) {
    for (auto& p : v) p = p.substitute(sub);
    return v;
}

std::vector<std::pair<std::string, std::string>> cvec_entries(
    const SuperBasis& basis, const CVec& v) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out.emplace_back(basis.names[k], v[k].str());
    return out;
}

void skew_into(const ConformalAlgebra& R, CheckReport& rep) {
    const std::size_t n = R.dim();
    const std::map<FVar, FormalPoly> flip = {
        {FVar::Lm, -FormalPoly::variable(FVar::Lm) - FormalPoly::variable(FVar::D)}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            CVec r = R.entry(i, j);
            const CVec other = substituted(R.entry(j, i), flip);
            const Scalar s(sign_of(R.basis.parity(i), R.basis.parity(j)));
            for (std::size_t l = 0; l < n; ++l) r[l] += other[l] * s;
            central_reduce(R, r);
            if (!cvec_is_zero(r))
                rep.add_failure({"conformal-skew",
                                 {R.basis.names[i], R.basis.names[j]},
                                 cvec_entries(R.basis, r)});
        }
}

CVec jacobi_residual(const ConformalAlgebra& R, std::size_t i, std::size_t j,
                     std::size_t k) {
    const FormalPoly lm = FormalPoly::variable(FVar::Lm);
    const FormalPoly mu = FormalPoly::variable(FVar::Mu);
    const CVec inner = substituted(R.entry(j, k), lm_to_mu());
    const CVec A = lambda_bracket(R, R.alpha_column(i), inner, lm);
    const CVec B = lambda_bracket(R, R.entry(i, j), R.alpha_column(k), lm + mu);
    const CVec C = lambda_bracket(R, R.alpha_column(j), R.entry(i, k), mu);
    const Scalar s(sign_of(R.basis.parity(i), R.basis.parity(j)));
    CVec r = czero(R.dim());
    for (std::size_t l = 0; l < r.size(); ++l)
        r[l] = A[l] - B[l] - C[l] * s;
    return r;
}

} // namespace

ConformalAlgebra ConformalAlgebra::make(SuperBasis b,
                                        std::vector<std::string> params) {
    ConformalAlgebra R;
    R.basis = std::move(b);
    R.params = std::move(params);
    const std::size_t n = R.basis.dim();
    R.central.assign(n, 0);
    R.table.assign(n * n, czero(n));
    return R;
}

const CVec& ConformalAlgebra::entry(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim())
        throw ValidationError("bracket table index out of range");
    return table[i * dim() + j];
}

void ConformalAlgebra::set_entry(std::size_t i, std::size_t j, CVec value) {
    if (i >= dim() || j >= dim())
        throw ValidationError("bracket table index out of range");
    if (value.size() != dim())
        throw ValidationError("bracket table entry has wrong dimension");
    central_reduce(*this, value);
    table[i * dim() + j] = std::move(value);
}

const CVec& ConformalAlgebra::alpha_column(std::size_t i) const {
    if (!has_alpha()) throw ValidationError("no twist map declared");
    return alpha.at(i);
}

void ConformalAlgebra::set_alpha(std::vector<CVec> columns) {
    if (columns.size() != dim())
        throw ValidationError("twist map has wrong dimension");
    for (auto& col : columns) {
        if (col.size() != dim())
            throw ValidationError("twist map column has wrong dimension");
        central_reduce(*this, col);
    }
    alpha = std::move(columns);
}

void ConformalAlgebra::validate() const {
    basis.validate();
    const std::size_t n = dim();
    if (central.size() != n)
        throw ValidationError("central flag list has wrong length");
    if (table.size() != n * n)
        throw ValidationError("bracket table has wrong shape");

    for (std::size_t k = 0; k < n; ++k)
        if (central[k] && basis.parity(k) != 0)
            throw ParityError("central generator '" + basis.names[k] +
                              "' must be even");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const CVec& e = entry(i, j);
            if (e.size() != n)
                throw ValidationError("bracket table entry has wrong dimension");
            const int want = (basis.parity(i) + basis.parity(j)) & 1;
            for (std::size_t k = 0; k < n; ++k) {
                const FormalPoly& p = e[k];
                if (p.is_zero()) continue;
                if ((central[i] || central[j]))
                    throw ValidationError("central generator '" +
                                          basis.names[central[i] ? i : j] +
                                          "' has a nonzero bracket");
                if (p.degree_in(FVar::Mu) != 0)
                    throw ValidationError("bracket entry uses Mu");
                if (basis.parity(k) != want)
                    throw ParityError("bracket of " + basis.names[i] + " and " +
                                      basis.names[j] +
                                      " has a component of wrong parity on " +
                                      basis.names[k]);
                if (central[k] && p.degree_in(FVar::D) != 0)
                    throw ValidationError(
                        "component on central generator '" + basis.names[k] +
                        "' must be constant in D");
            }
        }

    if (has_alpha()) {
        if (alpha.size() != n)
            throw ValidationError("twist map has wrong dimension");
        for (std::size_t i = 0; i < n; ++i) {
            const CVec& col = alpha[i];
            if (col.size() != n)
                throw ValidationError("twist map column has wrong dimension");
            for (std::size_t k = 0; k < n; ++k) {
                const FormalPoly& p = col[k];
                if (p.is_zero()) continue;
                if (p.degree_in(FVar::Lm) != 0 || p.degree_in(FVar::Mu) != 0)
                    throw ValidationError("twist map entry uses Lm or Mu");
                if (basis.parity(k) != basis.parity(i))
                    throw ParityError("twist image of " + basis.names[i] +
                                      " has a component of wrong parity on " +
                                      basis.names[k]);
                if (central[k] && p.degree_in(FVar::D) != 0)
                    throw ValidationError(
                        "component on central generator '" + basis.names[k] +
                        "' must be constant in D");
            }
        }
    }
}

CVec czero(std::size_t dim) { return CVec(dim); }

CVec cgen(std::size_t dim, std::size_t i) {
    CVec v(dim);
    v.at(i) = FormalPoly(1);
    return v;
}

bool cvec_is_zero(const CVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

std::string cvec_str(const SuperBasis& basis, const CVec& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (v[k] == FormalPoly(1)) out << basis.names[k];
        else if (v[k].term_count() == 1) out << v[k].str() << "*" << basis.names[k];
        else out << "(" << v[k].str() << ")*" << basis.names[k];
    }
    if (first) out << "0";
    return out.str();
}

void central_reduce(const ConformalAlgebra& R, CVec& v) {
    const std::map<FVar, FormalPoly> kill_d = {{FVar::D, FormalPoly()}};
    for (std::size_t k = 0; k < v.size(); ++k)
        if (R.central[k] && v[k].degree_in(FVar::D) != 0)
            v[k] = v[k].substitute(kill_d);
}

CVec lambda_bracket(const ConformalAlgebra& R, const CVec& x, const CVec& y,
                    const FormalPoly& t) {
    const std::size_t n = R.dim();
    const std::map<FVar, FormalPoly> left_sub = {{FVar::D, -t}};
    const std::map<FVar, FormalPoly> right_sub = {
        {FVar::D, FormalPoly::variable(FVar::D) + t}};
    const std::map<FVar, FormalPoly> entry_sub = {{FVar::Lm, t}};

    CVec out = czero(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        const FormalPoly fx = x[i].substitute(left_sub);
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const FormalPoly scale = fx * y[j].substitute(right_sub);
            const CVec& e = R.entry(i, j);
            for (std::size_t l = 0; l < n; ++l) {
                if (e[l].is_zero()) continue;
                out[l] += scale * e[l].substitute(entry_sub);
            }
        }
    }
    central_reduce(R, out);
    return out;
}

CVec apply_alpha(const ConformalAlgebra& R, const CVec& x) {
    const std::size_t n = R.dim();
    CVec out = czero(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        const CVec& col = R.alpha_column(i);
        for (std::size_t k = 0; k < n; ++k) {
            if (col[k].is_zero()) continue;
            out[k] += x[i] * col[k];
        }
    }
    central_reduce(R, out);
    return out;
}

CheckReport check_conformal_axioms(const ConformalAlgebra& R) {
    CheckReport rep;
    rep.check = "conformal-hom-lie";
    if (!R.has_alpha()) throw ValidationError("no twist map declared");
    const std::size_t n = R.dim();

    skew_into(R, rep);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                CVec r = jacobi_residual(R, i, j, k);
                if (!cvec_is_zero(r))
                    rep.add_failure({"conformal-jacobi",
                                     {R.basis.names[i], R.basis.names[j],
                                      R.basis.names[k]},
                                     cvec_entries(R.basis, r)});
            }
    return rep;
}

ConformalAlgebra quadratic_from_gd(const GDStructure& S) {
    CheckReport pre = check_gd(S);
    if (!pre.ok)
        throw PreconditionFailed("input is not a compatible pair", pre);

    const SuperAlgebra& A = S.algebra;
    const ProductTable& br = A.product(S.bracket);
    const ProductTable& c = A.product(S.circ);
    const EvenMap& al = A.map(S.alpha);
    const std::size_t n = A.dim();

    ConformalAlgebra R = ConformalAlgebra::make(A.basis, A.params);
    const FormalPoly d_plus_lm =
        FormalPoly::variable(FVar::D) + FormalPoly::variable(FVar::Lm);
    const FormalPoly lm = FormalPoly::variable(FVar::Lm);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar s(sign_of(A.basis.parity(i), A.basis.parity(j)));
            CVec e = czero(n);
            for (std::size_t l = 0; l < n; ++l) {
                e[l] = FormalPoly(br.at(j, i)[l]);
                e[l] += d_plus_lm * c.at(j, i)[l];
                e[l] += lm * (s * c.at(i, j)[l]);
            }
            R.set_entry(i, j, std::move(e));
        }

    std::vector<CVec> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CVec col = czero(n);
        for (std::size_t k = 0; k < n; ++k)
            col[k] = FormalPoly(al.column(i)[k]);
        cols.push_back(std::move(col));
    }
    R.set_alpha(std::move(cols));

    CheckReport cert = check_conformal_axioms(R);
    if (!cert.ok)
        throw std::logic_error("certificate failed for quadratic table:\n" +
                               cert.summary());
    return R;
}

GDStructure gd_from_quadratic(const ConformalAlgebra& R) {
    if (!R.has_alpha()) throw ValidationError("no twist map declared");
    const std::size_t n = R.dim();
    for (std::size_t k = 0; k < n; ++k)
        if (R.central[k])
            throw NotQuadratic("torsion generator '" + R.basis.names[k] +
                               "' has no structure-constant counterpart");

    const FMono one{0, 0, 0}, just_d{1, 0, 0}, just_lm{0, 1, 0};

    // Coefficient grids of the constant, D, and Lm parts.
    std::vector<Vec> C(n * n, zero_vec(n)), Ad(n * n, zero_vec(n)),
        B(n * n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const CVec& e = R.entry(i, j);
            for (std::size_t l = 0; l < n; ++l) {
                for (const auto& [mono, coeff] : e[l].terms())
                    if (!(mono == one) && !(mono == just_d) && !(mono == just_lm))
                        throw NotQuadratic(
                            "bracket of " + R.basis.names[i] + " and " +
                            R.basis.names[j] + " has degree above one");
                C[i * n + j][l] = e[l].coeff(one);
                Ad[i * n + j][l] = e[l].coeff(just_d);
                B[i * n + j][l] = e[l].coeff(just_lm);
            }
        }

    SuperAlgebra A;
    A.basis = R.basis;
    A.params = R.params;
    ProductTable bracket(n), circ(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bracket.set(j, i, C[i * n + j]);
            circ.set(j, i, Ad[i * n + j]);
        }
    // The Lm coefficient must be the D coefficient plus the signed
    // transposed circ, or the table is not of quadratic shape.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar s(sign_of(R.basis.parity(i), R.basis.parity(j)));
            Vec want = Ad[i * n + j];
            axpy(want, s, Ad[j * n + i]);
            if (!(want == B[i * n + j]))
                throw NotQuadratic("Lm coefficient of the bracket of " +
                                   R.basis.names[i] + " and " +
                                   R.basis.names[j] +
                                   " is inconsistent with the transposed entry");
        }

    EvenMap al(n);
    for (std::size_t i = 0; i < n; ++i) {
        const CVec& col = R.alpha_column(i);
        Vec image = zero_vec(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (col[k].is_zero()) continue;
            if (!col[k].is_constant())
                throw NotQuadratic("twist map is not constant on generators");
            image[k] = col[k].constant_value();
        }
        al.set_column(i, std::move(image));
    }

    A.products.emplace("bracket", std::move(bracket));
    A.products.emplace("circ", std::move(circ));
    A.maps.emplace("alpha", std::move(al));
    return GDStructure{std::move(A), "bracket", "circ", "alpha"};
}

ConformalAlgebra current_conformal(const SuperAlgebra& A,
                                   const std::string& bracket,
                                   const std::string& alpha) {
    CheckReport pre = check_hom_lie_super(A, bracket, alpha);
    if (!pre.ok)
        throw PreconditionFailed("bracket is not Hom-Lie", pre);

    const ProductTable& br = A.product(bracket);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    ConformalAlgebra R = ConformalAlgebra::make(A.basis, A.params);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CVec e = czero(n);
            for (std::size_t l = 0; l < n; ++l)
                e[l] = FormalPoly(br.at(i, j)[l]);
            R.set_entry(i, j, std::move(e));
        }
    std::vector<CVec> cols;
    cols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CVec col = czero(n);
        for (std::size_t k = 0; k < n; ++k)
            col[k] = FormalPoly(al.column(i)[k]);
        cols.push_back(std::move(col));
    }
    R.set_alpha(std::move(cols));

    CheckReport cert = check_conformal_axioms(R);
    if (!cert.ok)
        throw std::logic_error("certificate failed for current table:\n" +
                               cert.summary());
    return R;
}

unsigned default_alpha_degree_bound(const ConformalAlgebra& R) {
    unsigned deg = 0;
    for (const auto& e : R.table)
        for (const auto& p : e)
            deg = std::max(deg, p.degree_in(FVar::D));
    return deg + 1;
}

AlphaSpace solve_alpha(const ConformalAlgebra& R, unsigned degree_bound) {
    for (std::size_t k = 0; k < R.dim(); ++k)
        if (R.central[k])
            throw ValidationError("torsion generators are not supported here");

    CheckReport skew;
    skew.check = "conformal-skew";
    skew_into(R, skew);
    if (!skew.ok)
        throw PreconditionFailed("bracket table is not skew-symmetric", skew);

    const std::size_t n = R.dim();
    AlphaSpace out;
    out.degree_bound = degree_bound;

    EquationBuilder eb;
    std::map<VarId, std::size_t> var_to_unknown;
    std::vector<CVec> cols(n, czero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (R.basis.parity(i) != R.basis.parity(k)) continue;
            for (unsigned d = 0; d <= degree_bound; ++d) {
                const std::size_t q =
                    eb.unknown(R.basis.names[i] + "->" + R.basis.names[k] +
                               ":D^" + std::to_string(d));
                out.coords.emplace_back(i, k, d);
                const std::string pname = "_a" + std::to_string(i) + "_" +
                                          std::to_string(k) + "_" +
                                          std::to_string(d);
                var_to_unknown[params::intern(pname)] = q;
                cols[i][k].add_term(FMono{d, 0, 0}, Scalar::param(pname));
            }
        }

    ConformalAlgebra W = R;
    W.set_alpha(std::move(cols));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const CVec r = jacobi_residual(W, i, j, k);
                for (std::size_t l = 0; l < n; ++l)
                    add_affine_equations(eb, r[l], var_to_unknown);
            }

    out.unknowns = eb.names();
    out.space = solve_linear(eb.build());
    return out;
}

std::vector<CVec> AlphaSpace::materialize(const ConformalAlgebra& R,
                                          std::size_t which) const {
    const std::size_t n = R.dim();
    std::vector<CVec> cols(n, czero(n));
    const std::vector<Scalar>& v = space.kernel.at(which);
    for (std::size_t q = 0; q < coords.size(); ++q) {
        if (v.at(q).is_zero()) continue;
        const auto& [i, k, d] = coords[q];
        cols[i][k].add_term(FMono{d, 0, 0}, v[q]);
    }
    return cols;
}

} // namespace halg
