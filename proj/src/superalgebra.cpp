#include "halg/superalgebra.hpp"

#include <set>
#include <sstream>

#include "halg/linsolve.hpp"

namespace halg {

namespace {

// (-1)^{ab} for parities a, b.
int sign_of(int a, int b) { return (a & b & 1) ? -1 : 1; }

std::string coeff_str(const Scalar& c) {
    if (c.den() == Poly(1) && c.num().term_count() > 1)
        return "(" + c.str() + ")";
    return c.str();
}

} // namespace

bool SuperBasis::has(const std::string& name) const {
    for (const auto& n : names)
        if (n == name) return true;
    return false;
}

std::size_t SuperBasis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw UnknownName("unknown basis element '" + name + "'");
}

void SuperBasis::validate() const {
    if (names.empty()) throw ValidationError("basis is empty");
    if (names.size() != parities.size())
        throw ValidationError("basis names and parities differ in length");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw ValidationError("basis element with empty name");
        if (!seen.insert(names[i]).second)
            throw ValidationError("duplicate basis element '" + names[i] + "'");
        if (parities[i] != 0 && parities[i] != 1)
            throw ValidationError("parity of '" + names[i] + "' must be 0 or 1");
    }
}

Vec zero_vec(std::size_t dim) { return Vec(dim, Scalar(0)); }

Vec basis_vec(std::size_t dim, std::size_t i) {
    Vec v = zero_vec(dim);
    v.at(i) = Scalar(1);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Vec& axpy(Vec& a, const Scalar& c, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b.at(i);
    return a;
}

ProductTable::ProductTable(std::size_t dim)
    : dim_(dim), entries_(dim * dim, zero_vec(dim)) {}

const Vec& ProductTable::at(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_)
        throw ValidationError("product table index out of range");
    return entries_[i * dim_ + j];
}

void ProductTable::set(std::size_t i, std::size_t j, Vec value) {
    if (i >= dim_ || j >= dim_)
        throw ValidationError("product table index out of range");
    if (value.size() != dim_)
        throw ValidationError("product table entry has wrong dimension");
    entries_[i * dim_ + j] = std::move(value);
}

EvenMap::EvenMap(std::size_t dim) : columns_(dim, zero_vec(dim)) {}

EvenMap EvenMap::identity(std::size_t dim) {
    EvenMap m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.columns_[i] = basis_vec(dim, i);
    return m;
}

void EvenMap::set_column(std::size_t i, Vec image) {
    if (image.size() != columns_.size())
        throw ValidationError("map column has wrong dimension");
    columns_.at(i) = std::move(image);
}

Vec EvenMap::apply(const Vec& v) const {
    Vec r = zero_vec(columns_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        axpy(r, v[i], columns_.at(i));
    }
    return r;
}

bool SuperAlgebra::has_product(const std::string& name) const {
    return products.count(name) != 0;
}

bool SuperAlgebra::has_map(const std::string& name) const {
    return maps.count(name) != 0;
}

const ProductTable& SuperAlgebra::product(const std::string& name) const {
    auto it = products.find(name);
    if (it == products.end()) throw UnknownName("no product named '" + name + "'");
    return it->second;
}

const EvenMap& SuperAlgebra::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw UnknownName("no map named '" + name + "'");
    return it->second;
}

void SuperAlgebra::validate() const {
    basis.validate();
    const std::size_t n = basis.dim();
    for (const auto& [name, table] : products) {
        if (table.dim() != n)
            throw ValidationError("product '" + name + "' has wrong dimension");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vec& v = table.at(i, j);
                const int want = (basis.parity(i) + basis.parity(j)) & 1;
                for (std::size_t k = 0; k < n; ++k)
                    if (!v[k].is_zero() && basis.parity(k) != want)
                        throw ParityError("product '" + name + "' entry (" +
                                          basis.names[i] + ", " + basis.names[j] +
                                          ") has a component of wrong parity on " +
                                          basis.names[k]);
            }
    }
    for (const auto& [name, m] : maps) {
        if (m.dim() != n)
            throw ValidationError("map '" + name + "' has wrong dimension");
        for (std::size_t i = 0; i < n; ++i) {
            const Vec& v = m.column(i);
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero() && basis.parity(k) != basis.parity(i))
                    throw ParityError("map '" + name + "' image of " +
                                      basis.names[i] +
                                      " has a component of wrong parity on " +
                                      basis.names[k]);
        }
    }
}

Vec mul(const ProductTable& table, const Vec& x, const Vec& y) {
    Vec r = zero_vec(table.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            axpy(r, x[i] * y[j], table.at(i, j));
        }
    }
    return r;
}

CheckReport check_hom_lie_super(const SuperAlgebra& A,
                                const std::string& bracket,
                                const std::string& alpha) {
    CheckReport rep;
    rep.check = "hom-lie-super";
    const ProductTable& br = A.product(bracket);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec r = br.at(i, j);
            axpy(r, Scalar(sign_of(A.basis.parity(i), A.basis.parity(j))),
                 br.at(j, i));
            if (!is_zero_vec(r))
                rep.add_failure({"skew-symmetry",
                                 {A.basis.names[i], A.basis.names[j]},
                                 residual_entries(A.basis, r)});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int pi = A.basis.parity(i);
                const int pj = A.basis.parity(j);
                const int pk = A.basis.parity(k);
                Vec r = zero_vec(n);
                axpy(r, Scalar(sign_of(pi, pk)),
                     mul(br, br.at(i, j), al.column(k)));
                axpy(r, Scalar(sign_of(pi, pj)),
                     mul(br, br.at(j, k), al.column(i)));
                axpy(r, Scalar(sign_of(pj, pk)),
                     mul(br, br.at(k, i), al.column(j)));
                if (!is_zero_vec(r))
                    rep.add_failure({"hom-jacobi",
                                     {A.basis.names[i], A.basis.names[j],
                                      A.basis.names[k]},
                                     residual_entries(A.basis, r)});
            }
    return rep;
}

CheckReport check_hom_associative(const SuperAlgebra& A,
                                  const std::string& mul_name,
                                  const std::string& alpha,
                                  bool require_commutative) {
    CheckReport rep;
    rep.check = "hom-assoc";
    const ProductTable& m = A.product(mul_name);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    if (require_commutative)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Vec r = m.at(i, j);
                axpy(r, Scalar(-sign_of(A.basis.parity(i), A.basis.parity(j))),
                     m.at(j, i));
                if (!is_zero_vec(r))
                    rep.add_failure({"supercommutativity",
                                     {A.basis.names[i], A.basis.names[j]},
                                     residual_entries(A.basis, r)});
            }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec r = mul(m, al.column(i), m.at(j, k));
                axpy(r, Scalar(-1), mul(m, m.at(i, j), al.column(k)));
                if (!is_zero_vec(r))
                    rep.add_failure({"hom-associativity",
                                     {A.basis.names[i], A.basis.names[j],
                                      A.basis.names[k]},
                                     residual_entries(A.basis, r)});
            }
    return rep;
}

CheckReport check_hom_novikov_super(const SuperAlgebra& A,
                                    const std::string& circ,
                                    const std::string& alpha) {
    CheckReport rep;
    rep.check = "hom-novikov-super";
    const ProductTable& c = A.product(circ);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int pi = A.basis.parity(i);
                const int pj = A.basis.parity(j);
                const int pk = A.basis.parity(k);

                Vec left = mul(c, c.at(i, j), al.column(k));
                axpy(left, Scalar(-1), mul(c, al.column(i), c.at(j, k)));
                axpy(left, Scalar(-sign_of(pi, pj)),
                     mul(c, c.at(j, i), al.column(k)));
                axpy(left, Scalar(sign_of(pi, pj)),
                     mul(c, al.column(j), c.at(i, k)));
                if (!is_zero_vec(left))
                    rep.add_failure({"hom-left-symmetry",
                                     {A.basis.names[i], A.basis.names[j],
                                      A.basis.names[k]},
                                     residual_entries(A.basis, left)});

                Vec right = mul(c, c.at(i, j), al.column(k));
                axpy(right, Scalar(-sign_of(pj, pk)),
                     mul(c, c.at(i, k), al.column(j)));
                if (!is_zero_vec(right))
                    rep.add_failure({"hom-right-commutativity",
                                     {A.basis.names[i], A.basis.names[j],
                                      A.basis.names[k]},
                                     residual_entries(A.basis, right)});
            }
    return rep;
}

CheckReport check_gd_compatibility(const SuperAlgebra& A,
                                   const std::string& bracket,
                                   const std::string& circ,
                                   const std::string& alpha) {
    CheckReport rep;
    rep.check = "gd-compatibility";
    const ProductTable& br = A.product(bracket);
    const ProductTable& c = A.product(circ);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar s(sign_of(A.basis.parity(j), A.basis.parity(k)));
                Vec r = mul(br, c.at(i, j), al.column(k));
                axpy(r, -s, mul(br, c.at(i, k), al.column(j)));
                r = add(r, mul(c, br.at(i, j), al.column(k)));
                axpy(r, -s, mul(c, br.at(i, k), al.column(j)));
                axpy(r, Scalar(-1), mul(c, al.column(i), br.at(j, k)));
                if (!is_zero_vec(r))
                    rep.add_failure({"gd-compatibility",
                                     {A.basis.names[i], A.basis.names[j],
                                      A.basis.names[k]},
                                     residual_entries(A.basis, r)});
            }
    return rep;
}

CheckReport check_gd(const SuperAlgebra& A,
                     const std::string& bracket,
                     const std::string& circ,
                     const std::string& alpha) {
    CheckReport rep;
    rep.check = "gd";
    rep.merge(check_hom_lie_super(A, bracket, alpha));
    rep.merge(check_hom_novikov_super(A, circ, alpha));
    rep.merge(check_gd_compatibility(A, bracket, circ, alpha));
    return rep;
}

CheckReport check_gd(const GDStructure& S) {
    return check_gd(S.algebra, S.bracket, S.circ, S.alpha);
}

CheckReport check_hom_poisson(const SuperAlgebra& A,
                              const std::string& mul_name,
                              const std::string& bracket,
                              const std::string& alpha) {
    CheckReport rep;
    rep.check = "hom-poisson";
    rep.merge(check_hom_associative(A, mul_name, alpha, true));
    rep.merge(check_hom_lie_super(A, bracket, alpha));

    const ProductTable& m = A.product(mul_name);
    const ProductTable& br = A.product(bracket);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int pi = A.basis.parity(i);
                const int pj = A.basis.parity(j);
                const int pk = A.basis.parity(k);
                Vec r = mul(br, al.column(i), m.at(j, k));
                axpy(r, Scalar(-sign_of(pi, pj)),
                     mul(m, al.column(j), br.at(i, k)));
                axpy(r, Scalar(-sign_of(pk, (pi + pj) & 1)),
                     mul(m, al.column(k), br.at(i, j)));
                if (!is_zero_vec(r))
                    rep.add_failure({"hom-leibniz",
                                     {A.basis.names[i], A.basis.names[j],
                                      A.basis.names[k]},
                                     residual_entries(A.basis, r)});
            }
    return rep;
}

CheckReport check_map_property(const SuperAlgebra& A,
                               const std::string& map_name,
                               const MapProperty& property) {
    CheckReport rep;
    rep.check = "map:" + map_name;
    const EvenMap& f = A.map(map_name);
    const std::size_t n = A.dim();

    if (const auto* endo = std::get_if<EndomorphismOf>(&property)) {
        for (const auto& pname : endo->products) {
            const ProductTable& p = A.product(pname);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Vec r = f.apply(p.at(i, j));
                    axpy(r, Scalar(-1), mul(p, f.column(i), f.column(j)));
                    if (!is_zero_vec(r))
                        rep.add_failure({"endomorphism(" + pname + ")",
                                         {A.basis.names[i], A.basis.names[j]},
                                         residual_entries(A.basis, r)});
                }
        }
    } else if (const auto* der = std::get_if<DerivationOf>(&property)) {
        const ProductTable& p = A.product(der->product);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec r = f.apply(p.at(i, j));
                axpy(r, Scalar(-1), mul(p, f.column(i), basis_vec(n, j)));
                axpy(r, Scalar(-1), mul(p, basis_vec(n, i), f.column(j)));
                if (!is_zero_vec(r))
                    rep.add_failure({"derivation(" + der->product + ")",
                                     {A.basis.names[i], A.basis.names[j]},
                                     residual_entries(A.basis, r)});
            }
    } else if (const auto* com = std::get_if<CommutesWith>(&property)) {
        const EvenMap& g = A.map(com->other_map);
        for (std::size_t i = 0; i < n; ++i) {
            Vec r = f.apply(g.column(i));
            axpy(r, Scalar(-1), g.apply(f.column(i)));
            if (!is_zero_vec(r))
                rep.add_failure({"commutes(" + com->other_map + ")",
                                 {A.basis.names[i]},
                                 residual_entries(A.basis, r)});
        }
    } else if (const auto* tw = std::get_if<TwistedDerivationOf>(&property)) {
        const ProductTable& br = A.product(tw->bracket);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec r = f.apply(br.at(i, j));
                axpy(r, Scalar(-1), mul(br, f.column(i), basis_vec(n, j)));
                axpy(r, Scalar(-1), mul(br, basis_vec(n, i), f.column(j)));
                axpy(r, -tw->shift, br.at(i, j));
                if (!is_zero_vec(r))
                    rep.add_failure({"twisted-derivation(" + tw->bracket + ")",
                                     {A.basis.names[i], A.basis.names[j]},
                                     residual_entries(A.basis, r)});
            }
    }
    return rep;
}

std::vector<Vec> centralizer_of_alpha_image(const SuperAlgebra& A,
                                            const std::string& bracket,
                                            const std::string& alpha) {
    const ProductTable& br = A.product(bracket);
    const EvenMap& al = A.map(alpha);
    const std::size_t n = A.dim();

    LinearSystem sys(n);
    for (std::size_t j = 0; j < n; ++j) {
        // columns[i] = [basis_i, alpha(basis_j)]
        std::vector<Vec> cols;
        cols.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            cols.push_back(mul(br, basis_vec(n, i), al.column(j)));
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> row(n, Scalar(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                row[i] = cols[i][k];
                nonzero = nonzero || !row[i].is_zero();
            }
            if (nonzero) sys.add_row(std::move(row), Scalar(0));
        }
    }
    LinearSolution sol = solve_linear(std::move(sys));
    return sol.kernel;
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
    if (is_zero_vec(v)) return true;
    if (span.empty()) return false;
    LinearSystem sys(span.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        std::vector<Scalar> row(span.size(), Scalar(0));
        for (std::size_t r = 0; r < span.size(); ++r) row[r] = span[r].at(k);
        sys.add_row(std::move(row), v[k]);
    }
    return solve_linear(std::move(sys)).consistent;
}

int vec_parity(const SuperBasis& basis, const Vec& v) {
    int parity = -1;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const int p = basis.parity(k);
        if (parity == -1) parity = p;
        else if (parity != p)
            throw ParityError("vector mixes parities: " + vec_str(basis, v));
    }
    return parity == -1 ? 0 : parity;
}

std::string vec_str(const SuperBasis& basis, const Vec& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (v[k].is_one()) out << basis.names[k];
        else out << coeff_str(v[k]) << "*" << basis.names[k];
    }
    if (first) out << "0";
    return out.str();
}

std::vector<std::pair<std::string, std::string>> residual_entries(
    const SuperBasis& basis, const Vec& v) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out.emplace_back(basis.names[k], v[k].str());
    return out;
}

} // namespace halg
