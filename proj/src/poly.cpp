#include "halg/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace halg {

namespace params {

namespace {
std::mutex reg_mutex;
std::vector<std::string> reg_names;
std::unordered_map<std::string, VarId> reg_ids;
} // namespace

VarId intern(const std::string& name) {
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = reg_ids.find(name);
    if (it != reg_ids.end()) return it->second;
    VarId id = static_cast<VarId>(reg_names.size());
    reg_names.push_back(name);
    reg_ids.emplace(name, id);
    return id;
}

const std::string& name(VarId id) {
    std::lock_guard<std::mutex> lock(reg_mutex);
    return reg_names.at(id);
}

} // namespace params

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

unsigned Monomial::exponent_of(VarId v) const {
    for (auto& [var, e] : factors)
        if (var == v) return e;
    return 0;
}

Monomial Monomial::var(VarId v, unsigned e) {
    Monomial m;
    if (e > 0) m.factors.emplace_back(v, e);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
        if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) {
            r.factors.push_back(*a++);
        } else if (a == factors.end() || b->first < a->first) {
            r.factors.push_back(*b++);
        } else {
            r.factors.emplace_back(a->first, a->second + b->second);
            ++a; ++b;
        }
    }
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (auto& [v, e] : o.factors)
        if (exponent_of(v) < e) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (auto& [v, e] : factors) {
        unsigned oe = o.exponent_of(v);
        if (oe > e) throw std::logic_error("monomial division not exact");
        if (e > oe) r.factors.emplace_back(v, e - oe);
    }
    return r;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first != ib->first) {
            // The one holding a positive exponent on the earlier variable
            // is the larger monomial.
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia; ++ib;
    }
    if (ia != a.factors.end()) return 1;
    if (ib != b.factors.end()) return -1;
    return 0;
}

Poly Poly::variable(VarId v) {
    Poly p;
    p.terms_[Monomial::var(v)] = Rat(1);
    return p;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant");
    return terms_.begin()->second;
}

unsigned Poly::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Poly::degree_in(VarId v) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
    return d;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1);
    Poly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        int c = grlex_cmp(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Rat Poly::eval(const std::map<VarId, Rat>& point) const {
    Rat acc(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, e] : m.factors) {
            auto it = point.find(v);
            if (it == point.end()) throw std::logic_error("eval missing variable");
            Rat p(1);
            for (unsigned i = 0; i < e; ++i) p *= it->second;
            t *= p;
        }
        acc += t;
    }
    return acc;
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << "/" << rat_den(r);
    return os.str();
}

std::string monomial_str(const Monomial& m) {
    std::string s;
    bool first = true;
    for (auto& [v, e] : m.factors) {
        if (!first) s += "*";
        first = false;
        s += params::name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? "-" : "+";
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            s += rat_str(a);
        } else {
            if (a != 1) s += rat_str(a) + "*";
            s += monomial_str(m);
        }
    }
    return s;
}

// Division and gcd support.

namespace {

// Scale to integer coefficients and divide out the integer content; sign fixed
// so the leading coefficient is positive. This is the canonical representative
// we use for gcds (unique up to nothing, since units are +-1 after this).
Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Int lcm_den(1);
    for (auto& [m, c] : p.terms())
        lcm_den = lcm(lcm_den, rat_den(c));
    Int content(0);
    for (auto& [m, c] : p.terms())
        content = gcd(content, rat_num(c) * (lcm_den / rat_den(c)));
    if (content == 0) content = 1;
    Rat scale(lcm_den, content);
    if (p.leading_coeff() < 0) scale = -scale;
    return p * scale;
}

// View of p as a univariate polynomial in v with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& p, VarId v) {
    std::vector<Poly> out(p.degree_in(v) + 1);
    for (auto& [m, c] : p.terms()) {
        unsigned e = m.exponent_of(v);
        Monomial rest;
        for (auto& [var, ex] : m.factors)
            if (var != v) rest.factors.emplace_back(var, ex);
        out[e].add_term(rest, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

Poly from_coeffs(const std::vector<Poly>& cs, VarId v) {
    Poly r;
    for (unsigned e = 0; e < cs.size(); ++e) {
        Poly pe = cs[e] * Poly::term(Monomial::var(v, e), Rat(1));
        r += pe;
    }
    return r;
}

unsigned udeg(const std::vector<Poly>& cs) {
    return static_cast<unsigned>(cs.size()) - 1;
}

// Pseudo-remainder of f by g as univariate polynomials in a common variable.
std::vector<Poly> pseudo_rem(std::vector<Poly> f, const std::vector<Poly>& g) {
    const Poly& lg = g.back();
    while (f.size() >= g.size() && !(f.size() == 1 && f[0].is_zero())) {
        unsigned shift = udeg(f) - udeg(g);
        Poly lf = f.back();
        for (auto& c : f) c *= lg;
        for (unsigned i = 0; i < g.size(); ++i)
            f[i + shift] -= lf * g[i];
        while (f.size() > 1 && f.back().is_zero()) f.pop_back();
        if (f.size() == 1 && f[0].is_zero()) break;
    }
    return f;
}

VarId max_var(const Poly& p, bool& any) {
    VarId best = 0;
    for (auto& [m, c] : p.terms())
        for (auto& [v, e] : m.factors) {
            if (!any || v > best) best = v;
            any = true;
        }
    return best;
}

} // namespace

Poly divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::logic_error("divide_exact by zero");
    Poly q, r(num);
    while (!r.is_zero()) {
        if (!r.leading_monomial().divisible_by(den.leading_monomial()))
            throw std::logic_error("divide_exact: not divisible");
        Monomial m = r.leading_monomial() / den.leading_monomial();
        Rat c = r.leading_coeff() / den.leading_coeff();
        Poly t = Poly::term(m, c);
        q += t;
        r -= t * den;
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);

    // Single-term inputs: gcd of monomials, the frequent case for the
    // fractions that show up in structure constants.
    if (a.term_count() == 1 && b.term_count() == 1) {
        Monomial g;
        for (auto& [v, e] : a.leading_monomial().factors) {
            unsigned eb = b.leading_monomial().exponent_of(v);
            unsigned ge = std::min(e, eb);
            if (ge > 0) g.factors.emplace_back(v, ge);
        }
        return Poly::term(g, Rat(1));
    }

    bool any = false;
    VarId v = max_var(a, any);
    VarId vb = max_var(b, any);
    v = std::max(v, vb);

    auto fa = coeffs_in(a, v);
    auto fb = coeffs_in(b, v);

    Poly cont_a, cont_b;
    for (auto& c : fa) cont_a = poly_gcd(cont_a, c);
    for (auto& c : fb) cont_b = poly_gcd(cont_b, c);
    Poly cont = poly_gcd(cont_a, cont_b);

    Poly pa = divide_exact(a, cont_a);
    Poly pb = divide_exact(b, cont_b);

    auto F = coeffs_in(pa, v);
    auto G = coeffs_in(pb, v);
    if (udeg(F) < udeg(G)) std::swap(F, G);
    while (true) {
        auto R = pseudo_rem(F, G);
        if (R.size() == 1 && R[0].is_zero()) break;
        // Primitive part with respect to v keeps coefficient growth in check.
        Poly rp = from_coeffs(R, v);
        Poly rc;
        for (auto& c : R) rc = poly_gcd(rc, c);
        rp = divide_exact(rp, rc);
        F = G;
        G = coeffs_in(rp, v);
        if (udeg(G) == 0) return make_primitive(cont);
    }
    Poly g = from_coeffs(G, v);
    Poly gc;
    for (auto& c : G) gc = poly_gcd(gc, c);
    g = divide_exact(g, gc);
    return make_primitive(g * cont);
}

} // namespace halg
