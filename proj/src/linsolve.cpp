#include "halg/linsolve.hpp"

#include <stdexcept>

namespace halg {

void LinearSystem::add_row(std::vector<Scalar> coeffs, Scalar b) {
    if (coeffs.size() != cols) throw std::logic_error("row width does not match unknown count");
    rows.push_back(std::move(coeffs));
    rhs.push_back(std::move(b));
}

namespace {

// Rough size of a scalar, used only to pick pivots that keep the
// intermediate fractions small.
std::size_t weight(const Scalar& s) {
    return s.num().term_count() + s.den().term_count() + s.num().degree() + s.den().degree();
}

} // namespace

LinearSolution solve_linear(LinearSystem sys) {
    const std::size_t m = sys.row_count();
    const std::size_t n = sys.cols;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t best = m;
        std::size_t best_w = 0;
        for (std::size_t r = row; r < m; ++r) {
            if (sys.rows[r][col].is_zero()) continue;
            std::size_t w = weight(sys.rows[r][col]);
            if (best == m || w < best_w) { best = r; best_w = w; }
        }
        if (best == m) continue;
        std::swap(sys.rows[row], sys.rows[best]);
        std::swap(sys.rhs[row], sys.rhs[best]);
        Scalar inv = Scalar(1) / sys.rows[row][col];
        for (std::size_t c = col; c < n; ++c) sys.rows[row][c] *= inv;
        sys.rhs[row] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row) continue;
            Scalar f = sys.rows[r][col];
            if (f.is_zero()) continue;
            for (std::size_t c = col; c < n; ++c)
                sys.rows[r][c] -= f * sys.rows[row][c];
            sys.rhs[r] -= f * sys.rhs[row];
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution sol;
    sol.rank = pivot_col.size();
    for (std::size_t r = sol.rank; r < m; ++r) {
        if (!sys.rhs[r].is_zero()) {
            sol.consistent = false;
            return sol;
        }
    }
    sol.consistent = true;

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    sol.particular.assign(n, Scalar(0));
    for (std::size_t r = 0; r < sol.rank; ++r) sol.particular[pivot_col[r]] = sys.rhs[r];

    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < sol.rank; ++r)
            v[pivot_col[r]] = -sys.rows[r][f];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::size_t EquationBuilder::unknown(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    std::size_t idx = names_.size();
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
}

void EquationBuilder::add_equation(const std::map<std::size_t, Scalar>& coeffs, const Scalar& konst) {
    for (const auto& [idx, c] : coeffs)
        if (idx >= names_.size()) throw std::logic_error("equation references unknown index out of range");
    eqs_.emplace_back(coeffs, konst);
}

LinearSystem EquationBuilder::build() const {
    LinearSystem sys(count());
    for (const auto& [coeffs, konst] : eqs_) {
        bool all_zero = konst.is_zero();
        std::vector<Scalar> coeff_row(count(), Scalar(0));
        for (const auto& [idx, c] : coeffs) {
            coeff_row[idx] = c;
            if (!c.is_zero()) all_zero = false;
        }
        if (all_zero) continue;
        sys.add_row(std::move(coeff_row), -konst);
    }
    return sys;
}

void add_affine_equation(EquationBuilder& eb, const Scalar& value,
                         const std::map<VarId, std::size_t>& unknown_of) {
    for (const auto& [pm, rat] : value.den().terms()) {
        (void)rat;
        for (const auto& [vid, exp] : pm.factors) {
            (void)exp;
            if (unknown_of.count(vid))
                throw std::logic_error("unknown appears in a denominator");
        }
    }
    std::map<std::size_t, Scalar> coeffs;
    Scalar konst(0);
    for (const auto& [pm, rat] : value.num().terms()) {
        const VarId* hit = nullptr;
        unsigned hit_exp = 0;
        for (const auto& [vid, exp] : pm.factors) {
            auto it = unknown_of.find(vid);
            if (it == unknown_of.end()) continue;
            if (hit) throw std::logic_error("system is not affine in its unknowns");
            hit = &it->first;
            hit_exp = exp;
        }
        if (!hit) {
            konst += Scalar(Poly::term(pm, rat));
            continue;
        }
        if (hit_exp != 1) throw std::logic_error("system is not affine in its unknowns");
        coeffs[unknown_of.at(*hit)] += Scalar(Poly::term(pm / Monomial::var(*hit), rat));
    }
    eb.add_equation(coeffs, konst);
}

void add_affine_equations(EquationBuilder& eb, const FormalPoly& r,
                          const std::map<VarId, std::size_t>& unknown_of) {
    for (const auto& [mono, c] : r.terms()) {
        (void)mono;
        add_affine_equation(eb, c, unknown_of);
    }
}

} // namespace halg
