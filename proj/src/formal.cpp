#include "halg/formal.hpp"

#include <sstream>

namespace halg {

const char* fvar_name(FVar v) {
    switch (v) {
        case FVar::D: return "D";
        case FVar::Lm: return "Lm";
        case FVar::Mu: return "Mu";
    }
    return "?";
}

FormalPoly::FormalPoly(const Scalar& c) {
    if (!c.is_zero()) terms_[FMono{}] = c;
}

FormalPoly FormalPoly::variable(FVar v) {
    FMono mono;
    switch (v) {
        case FVar::D: mono.d = 1; break;
        case FVar::Lm: mono.l = 1; break;
        case FVar::Mu: mono.m = 1; break;
    }
    return term(Scalar(1), mono);
}

FormalPoly FormalPoly::term(const Scalar& c, const FMono& mono) {
    FormalPoly p;
    if (!c.is_zero()) p.terms_[mono] = c;
    return p;
}

bool FormalPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar FormalPoly::constant_value() const {
    if (!is_constant()) throw Error("formal polynomial '" + str() + "' is not constant");
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

unsigned FormalPoly::degree() const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

unsigned FormalPoly::degree_in(FVar v) const {
    unsigned d = 0;
    for (const auto& [mono, c] : terms_) {
        switch (v) {
            case FVar::D: d = std::max(d, mono.d); break;
            case FVar::Lm: d = std::max(d, mono.l); break;
            case FVar::Mu: d = std::max(d, mono.m); break;
        }
    }
    return d;
}

Scalar FormalPoly::coeff(const FMono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void FormalPoly::add_term(const FMono& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FormalPoly FormalPoly::operator-() const {
    FormalPoly r;
    for (const auto& [mono, c] : terms_) r.terms_[mono] = -c;
    return r;
}

FormalPoly FormalPoly::operator+(const FormalPoly& o) const {
    FormalPoly r(*this);
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

FormalPoly FormalPoly::operator-(const FormalPoly& o) const {
    FormalPoly r(*this);
    for (const auto& [mono, c] : o.terms_) r.add_term(mono, -c);
    return r;
}

FormalPoly FormalPoly::operator*(const FormalPoly& o) const {
    FormalPoly r;
    for (const auto& [am, ac] : terms_)
        for (const auto& [bm, bc] : o.terms_)
            r.add_term(am * bm, ac * bc);
    return r;
}

FormalPoly FormalPoly::operator*(const Scalar& c) const {
    FormalPoly r;
    if (c.is_zero()) return r;
    for (const auto& [mono, tc] : terms_) r.add_term(mono, tc * c);
    return r;
}

FormalPoly FormalPoly::pow(unsigned e) const {
    FormalPoly r(Scalar(1));
    FormalPoly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

FormalPoly FormalPoly::substitute(const std::map<FVar, FormalPoly>& images) const {
    auto image_of = [&](FVar v) {
        auto it = images.find(v);
        return it == images.end() ? FormalPoly::variable(v) : it->second;
    };
    FormalPoly img_d = image_of(FVar::D);
    FormalPoly img_l = image_of(FVar::Lm);
    FormalPoly img_m = image_of(FVar::Mu);
    FormalPoly r;
    for (const auto& [mono, c] : terms_) {
        FormalPoly t(c);
        if (mono.d) t *= img_d.pow(mono.d);
        if (mono.l) t *= img_l.pow(mono.l);
        if (mono.m) t *= img_m.pow(mono.m);
        r += t;
    }
    return r;
}

std::string FormalPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        Scalar a = c;
        bool neg = a.num().term_count() == 1 && a.num().leading_coeff() < 0;
        if (neg) a = -a;
        if (first) {
            first = false;
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string vars;
        auto append_var = [&](const char* nm, unsigned e) {
            if (!e) return;
            if (!vars.empty()) vars += "*";
            vars += nm;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        append_var("D", mono.d);
        append_var("Lm", mono.l);
        append_var("Mu", mono.m);
        bool paren = a.num().term_count() > 1 && a.den() == Poly(1);
        std::string cs = a.str();
        if (paren) cs = "(" + cs + ")";
        if (vars.empty()) out << cs;
        else if (a == Scalar(1)) out << vars;
        else out << cs << "*" << vars;
    }
    return out.str();
}

} // namespace halg
