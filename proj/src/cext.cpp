#include "halg/cext.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "halg/errors.hpp"
#include "halg/params.hpp"

namespace halg {

namespace {

long sgn(int a, int b) { return (a & b & 1) ? -1 : 1; }

std::string pair_label(const SuperBasis& basis, std::size_t i, std::size_t j) {
    return basis.names[i] + "," + basis.names[j];
}

// Skew condition with the torsion reduction already applied: the value at
// (i, j) plus the sign-adjusted value at (j, i) under t -> -t.
FormalPoly skew_residual(const SuperBasis& basis, const Cocycle& f,
                         std::size_t i, std::size_t j) {
    const std::map<FVar, FormalPoly> flip = {
        {FVar::Lm, -FormalPoly::variable(FVar::Lm)}};
    const Scalar s(sgn(basis.parity(i), basis.parity(j)));
    return f.value(i, j) + f.value(j, i).substitute(flip) * s;
}

// Twisted Jacobi residual of the form over R at the generator triple.
FormalPoly jacobi_residual(const ConformalAlgebra& R, const Cocycle& f,
                           std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = R.dim();
    const FormalPoly lm = FormalPoly::variable(FVar::Lm);
    const FormalPoly mu = FormalPoly::variable(FVar::Mu);

    const CVec left = lambda_bracket(R, cgen(n, i), cgen(n, j), lm);
    const FormalPoly A = cocycle_eval(f, left, R.alpha_column(k), lm + mu);

    const CVec right1 = lambda_bracket(R, cgen(n, j), cgen(n, k), mu);
    const FormalPoly B = cocycle_eval(f, R.alpha_column(i), right1, lm);

    const CVec right2 = lambda_bracket(R, cgen(n, i), cgen(n, k), lm);
    const FormalPoly C = cocycle_eval(f, R.alpha_column(j), right2, mu);

    const Scalar s(sgn(R.basis.parity(i), R.basis.parity(j)));
    return A - B + C * s;
}

void require_free(const ConformalAlgebra& R) {
    for (std::size_t k = 0; k < R.dim(); ++k)
        if (R.central[k])
            throw ValidationError("torsion generators are not supported here");
}

} // namespace

Cocycle Cocycle::zero(std::size_t dim, std::size_t max_degree) {
    Cocycle f;
    f.dim = dim;
    f.comp.assign(max_degree + 1, std::vector<Scalar>(dim * dim, Scalar(0)));
    return f;
}

const Scalar& Cocycle::at(std::size_t d, std::size_t i, std::size_t j) const {
    return comp.at(d).at(i * dim + j);
}

Scalar& Cocycle::at(std::size_t d, std::size_t i, std::size_t j) {
    return comp.at(d).at(i * dim + j);
}

Scalar Cocycle::get(std::size_t d, std::size_t i, std::size_t j) const {
    if (d >= comp.size()) return Scalar(0);
    return comp[d].at(i * dim + j);
}

FormalPoly Cocycle::value(std::size_t i, std::size_t j) const {
    FormalPoly out;
    for (std::size_t d = 0; d < comp.size(); ++d) {
        const Scalar& c = comp[d].at(i * dim + j);
        if (c.is_zero()) continue;
        out.add_term(FMono{0, static_cast<unsigned>(d), 0}, c);
    }
    return out;
}

bool Cocycle::is_zero() const {
    for (const auto& m : comp)
        for (const auto& c : m)
            if (!c.is_zero()) return false;
    return true;
}

std::size_t Cocycle::top_degree() const {
    for (std::size_t d = comp.size(); d-- > 0;)
        for (const auto& c : comp[d])
            if (!c.is_zero()) return d;
    return 0;
}

FormalPoly cocycle_eval(const Cocycle& f, const CVec& x, const CVec& y,
                        const FormalPoly& t) {
    const std::map<FVar, FormalPoly> left_sub = {{FVar::D, -t}};
    const std::map<FVar, FormalPoly> right_sub = {{FVar::D, t}};
    const std::map<FVar, FormalPoly> form_sub = {{FVar::Lm, t}};

    FormalPoly out;
    for (std::size_t i = 0; i < f.dim; ++i) {
        if (x.at(i).is_zero()) continue;
        const FormalPoly fx = x[i].substitute(left_sub);
        for (std::size_t j = 0; j < f.dim; ++j) {
            if (y.at(j).is_zero()) continue;
            const FormalPoly v = f.value(i, j);
            if (v.is_zero()) continue;
            out = out + fx * y[j].substitute(right_sub) * v.substitute(form_sub);
        }
    }
    return out;
}

Scalar component_eval(const Cocycle& f, std::size_t d, const Vec& x,
                      const Vec& y) {
    Scalar out(0);
    for (std::size_t i = 0; i < f.dim; ++i) {
        if (x.at(i).is_zero()) continue;
        for (std::size_t j = 0; j < f.dim; ++j) {
            if (y.at(j).is_zero()) continue;
            const Scalar c = f.get(d, i, j);
            if (c.is_zero()) continue;
            out += x[i] * y[j] * c;
        }
    }
    return out;
}

CheckReport check_cocycle(const ConformalAlgebra& R, const Cocycle& f) {
    if (f.dim != R.dim())
        throw ValidationError("form shape does not match the algebra");
    require_free(R);
    if (!R.has_alpha())
        throw ValidationError("no twist map declared");

    CheckReport report;
    report.check = "cocycle";
    const std::size_t n = R.dim();

    for (std::size_t d = 0; d < f.comp.size(); ++d)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (((R.basis.parity(i) + R.basis.parity(j)) & 1) == 0) continue;
                const Scalar& c = f.at(d, i, j);
                if (c.is_zero()) continue;
                report.add_failure(
                    {"cocycle-parity",
                     {R.basis.names[i], R.basis.names[j]},
                     {{"Lm^" + std::to_string(d) + " coefficient", c.str()}}});
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const FormalPoly r = skew_residual(R.basis, f, i, j);
            if (r.is_zero()) continue;
            report.add_failure({"cocycle-skew",
                                {R.basis.names[i], R.basis.names[j]},
                                {{"value", r.str()}}});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const FormalPoly r = jacobi_residual(R, f, i, j, k);
                if (r.is_zero()) continue;
                report.add_failure(
                    {"cocycle-jacobi",
                     {R.basis.names[i], R.basis.names[j], R.basis.names[k]},
                     {{"value", r.str()}}});
            }

    return report;
}

Cocycle CocycleSpace::basis_cocycle(std::size_t which) const {
    const std::vector<Scalar>& v = space.kernel.at(which);
    Cocycle f = Cocycle::zero(dim, max_degree);
    for (std::size_t q = 0; q < coords.size(); ++q) {
        const CocycleCoord& c = coords[q];
        f.at(c.degree, c.row, c.col) = v.at(q);
    }
    return f;
}

CocycleSpace solve_cocycle_space(const ConformalAlgebra& R,
                                 std::size_t max_degree) {
    require_free(R);
    if (!R.has_alpha())
        throw ValidationError("no twist map declared");
    (void)gd_from_quadratic(R);

    const std::size_t n = R.dim();
    CocycleSpace out;
    out.dim = n;
    out.max_degree = max_degree;

    EquationBuilder eb;
    std::map<VarId, std::size_t> var_to_unknown;
    Cocycle F = Cocycle::zero(n, max_degree);
    for (std::size_t d = 0; d <= max_degree; ++d)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if ((R.basis.parity(i) + R.basis.parity(j)) & 1) continue;
                const std::size_t q =
                    eb.unknown("f" + std::to_string(d) + "(" +
                               pair_label(R.basis, i, j) + ")");
                out.coords.push_back({d, i, j});
                const std::string pname = "_f" + std::to_string(d) + "_" +
                                          std::to_string(i) + "_" +
                                          std::to_string(j);
                var_to_unknown[params::intern(pname)] = q;
                F.at(d, i, j) = Scalar::param(pname);
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            add_affine_equations(eb, skew_residual(R.basis, F, i, j),
                                 var_to_unknown);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                add_affine_equations(eb, jacobi_residual(R, F, i, j, k),
                                     var_to_unknown);

    out.unknowns = eb.names();
    out.space = solve_linear(eb.build());
    return out;
}

CheckReport verify_degree_relations(const GDStructure& S, const Cocycle& f) {
    const ConformalAlgebra R = quadratic_from_gd(S);
    CheckReport hyp = check_cocycle(R, f);
    if (!hyp.ok)
        throw HypothesisFailed("the form is not a 2-cocycle over this structure",
                               hyp);

    CheckReport report;
    report.check = "degree-relations";

    const SuperAlgebra& A = S.algebra;
    const ProductTable& circ = A.product(S.circ);
    const ProductTable& br = A.product(S.bracket);
    const EvenMap& al = A.map(S.alpha);
    const std::size_t n = A.dim();
    const std::size_t top = f.top_degree();

    if (top > 3) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Vec uv = mul(circ, basis_vec(n, i), basis_vec(n, j));
                    const Scalar r =
                        component_eval(f, top, uv, al.apply(basis_vec(n, k)));
                    if (r.is_zero()) continue;
                    report.add_failure(
                        {"top-degree-vanishing",
                         {A.basis.names[i], A.basis.names[j], A.basis.names[k]},
                         {{"f" + std::to_string(top) + " value", r.str()}}});
                }
        return report;
    }

    for (std::size_t d = 0; d <= 3; ++d)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const long s = sgn(A.basis.parity(i), A.basis.parity(j)) *
                               ((d % 2 == 0) ? 1 : -1);
                const Scalar r = f.get(d, i, j) + Scalar(s) * f.get(d, j, i);
                if (r.is_zero()) continue;
                report.add_failure({"degree-skew",
                                    {A.basis.names[i], A.basis.names[j]},
                                    {{"f" + std::to_string(d) + " pattern",
                                      r.str()}}});
            }

    auto F = [&](std::size_t d, const Vec& x, const Vec& y) {
        return component_eval(f, d, x, y);
    };
    auto emit = [&](const char* axiom, std::size_t i, std::size_t j,
                    std::size_t k, const Scalar& r) {
        if (r.is_zero()) return;
        report.add_failure(
            {axiom,
             {A.basis.names[i], A.basis.names[j], A.basis.names[k]},
             {{"value", r.str()}}});
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec u = basis_vec(n, i);
                const Vec v = basis_vec(n, j);
                const Vec w = basis_vec(n, k);
                const Vec au = al.apply(u), av = al.apply(v), aw = al.apply(w);
                const Vec uv = mul(circ, u, v), vu = mul(circ, v, u);
                const Vec wv = mul(circ, w, v), vw = mul(circ, v, w);
                const Vec wu = mul(circ, w, u), uw = mul(circ, u, w);
                const Vec bvu = mul(br, v, u), bwv = mul(br, w, v);
                const Vec bwu = mul(br, w, u);
                const Scalar suv(sgn(A.basis.parity(i), A.basis.parity(j)));
                const Scalar suw(sgn(A.basis.parity(i), A.basis.parity(k)));
                const Scalar svw(sgn(A.basis.parity(j), A.basis.parity(k)));
                const Vec wu_uw = add(wu, scale(suw, uw));
                const Vec wv_vw = add(wv, scale(svw, vw));

                emit("degree3-circ-exchange", i, j, k,
                     suv * F(3, uv, aw) - F(3, au, wv));
                emit("degree3-circ-transpose", i, j, k,
                     suv * F(3, uv, aw) - F(3, vu, aw));
                emit("degree32-bracket-exchange", i, j, k,
                     F(3, bvu, aw) + suv * F(2, uv, aw) - F(3, au, bwv) -
                         F(2, au, wv));
                emit("degree32-circ-mix", i, j, k,
                     Scalar(3) * F(3, bvu, aw) - Scalar(2) * F(2, vu, aw) +
                         suv * F(2, uv, aw) + suv * F(2, av, wu_uw));
                emit("degree21-bracket-exchange", i, j, k,
                     F(2, bvu, aw) + suv * F(1, uv, aw) - F(2, au, bwv) -
                         F(1, au, wv));
                emit("degree21-circ-mix", i, j, k,
                     F(1, au, wv_vw) - suv * F(1, av, wu_uw) -
                         Scalar(2) * F(2, bvu, aw) + F(1, vu, aw) -
                         suv * F(1, uv, aw));
                emit("degree10-bracket-exchange", i, j, k,
                     F(1, au, bwv) + F(0, au, wv) - suv * F(0, av, wu_uw) -
                         F(1, bvu, aw) - suv * F(0, uv, aw));
                emit("degree0-bracket-cocycle", i, j, k,
                     F(0, au, bwv) - suv * F(0, av, bwu) - F(0, bvu, aw));
            }

    return report;
}

ConformalAlgebra central_extension_table(const ConformalAlgebra& R,
                                         const Cocycle& f,
                                         const std::string& center,
                                         const Scalar& center_scale) {
    if (f.dim != R.dim())
        throw ValidationError("form shape does not match the algebra");
    require_free(R);

    const std::size_t n = R.dim();
    SuperBasis b = R.basis;
    b.names.push_back(center);
    b.parities.push_back(0);
    b.validate();

    ConformalAlgebra E = ConformalAlgebra::make(std::move(b), R.params);
    E.central[n] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CVec v = czero(n + 1);
            for (std::size_t l = 0; l < n; ++l) v[l] = R.entry(i, j)[l];
            v[n] = f.value(i, j);
            E.set_entry(i, j, std::move(v));
        }

    if (R.has_alpha()) {
        std::vector<CVec> cols;
        cols.reserve(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            CVec col = czero(n + 1);
            for (std::size_t k = 0; k < n; ++k) col[k] = R.alpha_column(i)[k];
            cols.push_back(std::move(col));
        }
        CVec ccol = czero(n + 1);
        ccol[n] = FormalPoly(center_scale);
        cols.push_back(std::move(ccol));
        E.set_alpha(std::move(cols));
    }

    E.validate();
    return E;
}

CentralExtension extend_by_cocycle(const ConformalAlgebra& R, const Cocycle& f,
                                   const std::string& center,
                                   const Scalar& center_scale) {
    (void)gd_from_quadratic(R);
    CheckReport rep = check_cocycle(R, f);
    if (!rep.ok)
        throw NotACocycle("the form fails the 2-cocycle conditions", rep);

    CentralExtension out{R, f, center,
                         central_extension_table(R, f, center, center_scale)};
    const CheckReport cert = check_conformal_axioms(out.extended);
    if (!cert.ok)
        throw std::logic_error("certificate failed for the central extension:\n" +
                               cert.summary());
    return out;
}

Cocycle extract_cocycle(const ConformalAlgebra& ext) {
    ext.validate();
    std::size_t center = ext.dim();
    std::size_t found = 0;
    for (std::size_t k = 0; k < ext.dim(); ++k)
        if (ext.central[k]) {
            center = k;
            ++found;
        }
    if (found != 1)
        throw ValidationError("expected exactly one central generator");

    std::vector<std::size_t> base;
    for (std::size_t k = 0; k < ext.dim(); ++k)
        if (k != center) base.push_back(k);

    const std::size_t n = base.size();
    std::size_t max_degree = 0;
    for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj)
            max_degree = std::max(
                max_degree,
                static_cast<std::size_t>(
                    ext.entry(base[bi], base[bj])[center].degree_in(FVar::Lm)));

    Cocycle f = Cocycle::zero(n, max_degree);
    for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj)
            for (const auto& [mono, c] :
                 ext.entry(base[bi], base[bj])[center].terms()) {
                if (mono.d != 0 || mono.m != 0)
                    throw ValidationError(
                        "central component is not a polynomial in the bracket variable");
                f.at(mono.l, bi, bj) = c;
            }
    return f;
}

} // namespace halg
