#include "halg/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "halg/errors.hpp"
#include "halg/expr.hpp"

namespace halg {

namespace {

using Json = nlohmann::ordered_json;

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            return false;
    return true;
}

bool is_reserved(const std::string& s) {
    return s == "D" || s == "Lm" || s == "Mu";
}

std::string identifier_at(const Json& v, const std::string& path) {
    if (!v.is_string())
        throw ValidationError(path + ": expected a name string");
    const std::string s = v.get<std::string>();
    if (!is_identifier(s))
        throw ValidationError(path + ": '" + s + "' is not a valid name");
    if (is_reserved(s))
        throw ValidationError(path + ": '" + s + "' is a reserved name");
    return s;
}

std::string string_at(const Json& v, const std::string& path) {
    if (!v.is_string())
        throw ValidationError(path + ": expected a string");
    return v.get<std::string>();
}

Scalar scalar_at(const Json& v, const std::string& path,
                 const std::set<std::string>& params) {
    ExprOptions opts;
    opts.allowed_params = &params;
    opts.allow_formal = false;
    try {
        return parse_scalar(string_at(v, path), opts);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const UnknownName& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

FormalPoly formal_at(const Json& v, const std::string& path,
                     const std::set<std::string>& params) {
    ExprOptions opts;
    opts.allowed_params = &params;
    opts.allow_formal = true;
    try {
        return parse_formal(string_at(v, path), opts);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const UnknownName& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::size_t basis_index(const SuperBasis& basis, const Json& v,
                        const std::string& path) {
    const std::string name = string_at(v, path);
    if (!basis.has(name))
        throw ValidationError(path + ": unknown basis name '" + name + "'");
    return basis.index_of(name);
}

// [[target, expr], ...] lowered to a coordinate vector.
Vec vec_at(const Json& v, const std::string& path, const SuperBasis& basis,
           const std::set<std::string>& params) {
    if (!v.is_array())
        throw ValidationError(path + ": expected a list of [name, value] pairs");
    Vec out = zero_vec(basis.dim());
    for (std::size_t e = 0; e < v.size(); ++e) {
        const std::string epath = path + "[" + std::to_string(e) + "]";
        const Json& pair = v[e];
        if (!pair.is_array() || pair.size() != 2)
            throw ValidationError(epath + ": expected [name, value]");
        const std::size_t t = basis_index(basis, pair[0], epath);
        out[t] += scalar_at(pair[1], epath, params);
    }
    return out;
}

CVec cvec_at(const Json& v, const std::string& path, const SuperBasis& basis,
             const std::set<std::string>& params) {
    if (!v.is_array())
        throw ValidationError(path + ": expected a list of [name, value] pairs");
    CVec out = czero(basis.dim());
    for (std::size_t e = 0; e < v.size(); ++e) {
        const std::string epath = path + "[" + std::to_string(e) + "]";
        const Json& pair = v[e];
        if (!pair.is_array() || pair.size() != 2)
            throw ValidationError(epath + ": expected [name, value]");
        const std::size_t t = basis_index(basis, pair[0], epath);
        out[t] = out[t] + formal_at(pair[1], epath, params);
    }
    return out;
}

void check_keys(const Json& obj, const std::set<std::string>& allowed,
                const std::string& path) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw ValidationError(path + ": unknown key '" + item.key() + "'");
}

Json parse_document(const std::string& text, const std::string& origin) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object())
        throw ValidationError(origin + ": top level must be an object");
    if (doc.contains("schema") &&
        (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1))
        throw ValidationError(origin + ": unsupported schema version");
    return doc;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ValidationError("cannot write '" + path + "'");
}

Json vec_json(const SuperBasis& basis, const Vec& v) {
    Json out = Json::array();
    for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero())
            out.push_back(Json::array({basis.names[t], v[t].str()}));
    return out;
}

Json cvec_json(const SuperBasis& basis, const CVec& v) {
    Json out = Json::array();
    for (std::size_t t = 0; t < v.size(); ++t)
        if (!v[t].is_zero())
            out.push_back(Json::array({basis.names[t], v[t].str()}));
    return out;
}

Json header_json(const SuperBasis& basis,
                 const std::vector<std::string>& params,
                 const std::vector<char>* central) {
    Json doc = Json::object();
    doc["schema"] = 1;
    if (!params.empty()) doc["params"] = params;
    Json b = Json::array();
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        if (central && (*central)[i])
            b.push_back(Json::array(
                {basis.names[i], basis.parities[i], "central"}));
        else
            b.push_back(Json::array({basis.names[i], basis.parities[i]}));
    }
    doc["basis"] = b;
    return doc;
}

} // namespace

AlgebraFile parse_algebra_text(const std::string& text,
                               const std::string& origin) {
    const Json doc = parse_document(text, origin);
    check_keys(doc,
               {"schema", "comment", "params", "basis", "products", "maps",
                "conformal"},
               origin);

    std::vector<std::string> params;
    std::set<std::string> param_set;
    if (doc.contains("params")) {
        if (!doc["params"].is_array())
            throw ValidationError(origin + ": params must be a list");
        for (std::size_t i = 0; i < doc["params"].size(); ++i) {
            const std::string p = identifier_at(
                doc["params"][i], "params[" + std::to_string(i) + "]");
            if (!param_set.insert(p).second)
                throw ValidationError("params: duplicate name '" + p + "'");
            params.push_back(p);
        }
    }

    if (!doc.contains("basis"))
        throw ValidationError(origin + ": missing basis");
    if (!doc["basis"].is_array() || doc["basis"].empty())
        throw ValidationError("basis: expected a nonempty list");

    const bool is_conformal = doc.contains("conformal");
    if (is_conformal && (doc.contains("products") || doc.contains("maps")))
        throw ValidationError(
            origin + ": a conformal file cannot also declare products or maps");
    if (!is_conformal && !doc.contains("products") && !doc.contains("maps"))
        throw ValidationError(
            origin + ": file declares neither products nor a conformal bracket");

    SuperBasis basis;
    std::vector<char> central;
    for (std::size_t i = 0; i < doc["basis"].size(); ++i) {
        const std::string path = "basis[" + std::to_string(i) + "]";
        const Json& entry = doc["basis"][i];
        if (!entry.is_array() || entry.size() < 2 || entry.size() > 3)
            throw ValidationError(path +
                                  ": expected [name, parity] or "
                                  "[name, parity, \"central\"]");
        const std::string name = identifier_at(entry[0], path);
        if (param_set.count(name))
            throw ValidationError(path + ": '" + name +
                                  "' is already a parameter name");
        if (!entry[1].is_number_integer() ||
            (entry[1].get<int>() != 0 && entry[1].get<int>() != 1))
            throw ValidationError(path + ": parity must be 0 or 1");
        char c = 0;
        if (entry.size() == 3) {
            if (!entry[2].is_string() ||
                entry[2].get<std::string>() != "central")
                throw ValidationError(path + ": third entry must be \"central\"");
            if (!is_conformal)
                throw ValidationError(
                    path + ": central markers require a conformal file");
            c = 1;
        }
        basis.names.push_back(name);
        basis.parities.push_back(entry[1].get<int>());
        central.push_back(c);
    }
    basis.validate();

    AlgebraFile out;
    if (is_conformal) {
        out.kind = FileKind::Conformal;
        const Json& conf = doc["conformal"];
        if (!conf.is_object())
            throw ValidationError("conformal: expected an object");
        check_keys(conf, {"bracket", "alpha"}, "conformal");

        ConformalAlgebra R = ConformalAlgebra::make(basis, params);
        R.central = central;
        if (conf.contains("bracket")) {
            const Json& table = conf["bracket"];
            if (!table.is_array())
                throw ValidationError("conformal.bracket: expected a list");
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t e = 0; e < table.size(); ++e) {
                const std::string path =
                    "conformal.bracket[" + std::to_string(e) + "]";
                const Json& entry = table[e];
                if (!entry.is_array() || entry.size() != 3)
                    throw ValidationError(path +
                                          ": expected [left, right, value]");
                const std::size_t i = basis_index(basis, entry[0], path);
                const std::size_t j = basis_index(basis, entry[1], path);
                if (!seen.insert({i, j}).second)
                    throw ValidationError(path + ": duplicate entry");
                R.set_entry(i, j, cvec_at(entry[2], path, basis, param_set));
            }
        }
        if (conf.contains("alpha")) {
            const Json& table = conf["alpha"];
            if (!table.is_array())
                throw ValidationError("conformal.alpha: expected a list");
            std::vector<CVec> cols(basis.dim(), czero(basis.dim()));
            std::set<std::size_t> seen;
            for (std::size_t e = 0; e < table.size(); ++e) {
                const std::string path =
                    "conformal.alpha[" + std::to_string(e) + "]";
                const Json& entry = table[e];
                if (!entry.is_array() || entry.size() != 2)
                    throw ValidationError(path + ": expected [source, value]");
                const std::size_t i = basis_index(basis, entry[0], path);
                if (!seen.insert(i).second)
                    throw ValidationError(path + ": duplicate entry");
                cols[i] = cvec_at(entry[1], path, basis, param_set);
            }
            R.set_alpha(std::move(cols));
        }
        R.validate();
        out.conformal = std::move(R);
        return out;
    }

    out.kind = FileKind::FiniteDimensional;
    SuperAlgebra A;
    A.basis = basis;
    A.params = params;
    if (doc.contains("products")) {
        if (!doc["products"].is_object())
            throw ValidationError("products: expected an object");
        for (const auto& item : doc["products"].items()) {
            const std::string pname = item.key();
            const std::string ppath = "products." + pname;
            if (!is_identifier(pname))
                throw ValidationError(ppath + ": invalid product name");
            if (!item.value().is_array())
                throw ValidationError(ppath + ": expected a list");
            ProductTable table(basis.dim());
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t e = 0; e < item.value().size(); ++e) {
                const std::string path = ppath + "[" + std::to_string(e) + "]";
                const Json& entry = item.value()[e];
                if (!entry.is_array() || entry.size() != 3)
                    throw ValidationError(path +
                                          ": expected [left, right, value]");
                const std::size_t i = basis_index(basis, entry[0], path);
                const std::size_t j = basis_index(basis, entry[1], path);
                if (!seen.insert({i, j}).second)
                    throw ValidationError(path + ": duplicate entry");
                table.set(i, j, vec_at(entry[2], path, basis, param_set));
            }
            A.products.emplace(pname, std::move(table));
        }
    }
    if (doc.contains("maps")) {
        if (!doc["maps"].is_object())
            throw ValidationError("maps: expected an object");
        for (const auto& item : doc["maps"].items()) {
            const std::string mname = item.key();
            const std::string mpath = "maps." + mname;
            if (!is_identifier(mname))
                throw ValidationError(mpath + ": invalid map name");
            if (!item.value().is_array())
                throw ValidationError(mpath + ": expected a list");
            EvenMap map(basis.dim());
            std::set<std::size_t> seen;
            for (std::size_t e = 0; e < item.value().size(); ++e) {
                const std::string path = mpath + "[" + std::to_string(e) + "]";
                const Json& entry = item.value()[e];
                if (!entry.is_array() || entry.size() != 2)
                    throw ValidationError(path + ": expected [source, value]");
                const std::size_t i = basis_index(basis, entry[0], path);
                if (!seen.insert(i).second)
                    throw ValidationError(path + ": duplicate entry");
                map.set_column(i, vec_at(entry[1], path, basis, param_set));
            }
            A.maps.emplace(mname, std::move(map));
        }
    }
    try {
        A.validate();
    } catch (const ParityError& e) {
        throw ParityError(origin + ": " + e.what());
    }
    out.algebra = std::move(A);
    return out;
}

AlgebraFile read_algebra_file(const std::string& path) {
    return parse_algebra_text(read_text(path), path);
}

std::string serialize(const SuperAlgebra& A) {
    Json doc = header_json(A.basis, A.params, nullptr);
    Json products = Json::object();
    for (const auto& [name, table] : A.products) {
        Json list = Json::array();
        for (std::size_t i = 0; i < A.dim(); ++i)
            for (std::size_t j = 0; j < A.dim(); ++j) {
                const Vec& v = table.at(i, j);
                if (is_zero_vec(v)) continue;
                list.push_back(Json::array(
                    {A.basis.names[i], A.basis.names[j], vec_json(A.basis, v)}));
            }
        products[name] = std::move(list);
    }
    doc["products"] = std::move(products);
    if (!A.maps.empty()) {
        Json maps = Json::object();
        for (const auto& [name, map] : A.maps) {
            Json list = Json::array();
            for (std::size_t i = 0; i < A.dim(); ++i) {
                const Vec& v = map.column(i);
                if (is_zero_vec(v)) continue;
                list.push_back(
                    Json::array({A.basis.names[i], vec_json(A.basis, v)}));
            }
            maps[name] = std::move(list);
        }
        doc["maps"] = std::move(maps);
    }
    return doc.dump(2) + "\n";
}

std::string serialize(const ConformalAlgebra& R) {
    Json doc = header_json(R.basis, R.params, &R.central);
    Json conf = Json::object();
    Json list = Json::array();
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j) {
            const CVec& v = R.entry(i, j);
            if (cvec_is_zero(v)) continue;
            list.push_back(Json::array(
                {R.basis.names[i], R.basis.names[j], cvec_json(R.basis, v)}));
        }
    conf["bracket"] = std::move(list);
    if (R.has_alpha()) {
        Json alpha = Json::array();
        for (std::size_t i = 0; i < R.dim(); ++i) {
            const CVec& v = R.alpha_column(i);
            if (cvec_is_zero(v)) continue;
            alpha.push_back(
                Json::array({R.basis.names[i], cvec_json(R.basis, v)}));
        }
        conf["alpha"] = std::move(alpha);
    }
    doc["conformal"] = std::move(conf);
    return doc.dump(2) + "\n";
}

void write_algebra_file(const std::string& path, const SuperAlgebra& A) {
    write_text(path, serialize(A));
}

void write_algebra_file(const std::string& path, const ConformalAlgebra& R) {
    write_text(path, serialize(R));
}

Cocycle parse_cocycle_text(const std::string& text, const SuperBasis& basis,
                           const std::vector<std::string>& params,
                           const std::string& origin) {
    const Json doc = parse_document(text, origin);
    check_keys(doc, {"schema", "comment", "cocycle"}, origin);
    if (!doc.contains("cocycle") || !doc["cocycle"].is_object())
        throw ValidationError(origin + ": missing cocycle object");
    const Json& c = doc["cocycle"];
    check_keys(c, {"max_degree", "entries"}, "cocycle");

    const std::set<std::string> param_set(params.begin(), params.end());
    std::vector<std::tuple<std::size_t, std::size_t, FormalPoly>> entries;
    std::size_t top = 0;
    if (c.contains("entries")) {
        if (!c["entries"].is_array())
            throw ValidationError("cocycle.entries: expected a list");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < c["entries"].size(); ++e) {
            const std::string path =
                "cocycle.entries[" + std::to_string(e) + "]";
            const Json& entry = c["entries"][e];
            if (!entry.is_array() || entry.size() != 3)
                throw ValidationError(path + ": expected [left, right, value]");
            const std::size_t i = basis_index(basis, entry[0], path);
            const std::size_t j = basis_index(basis, entry[1], path);
            if (!seen.insert({i, j}).second)
                throw ValidationError(path + ": duplicate entry");
            FormalPoly v = formal_at(entry[2], path, param_set);
            if (v.degree_in(FVar::D) > 0 || v.degree_in(FVar::Mu) > 0)
                throw ValidationError(path +
                                      ": value must be a polynomial in Lm");
            top = std::max(top,
                           static_cast<std::size_t>(v.degree_in(FVar::Lm)));
            entries.emplace_back(i, j, std::move(v));
        }
    }
    std::size_t max_degree = top;
    if (c.contains("max_degree")) {
        if (!c["max_degree"].is_number_integer() ||
            c["max_degree"].get<long>() < 0)
            throw ValidationError("cocycle.max_degree: expected a nonnegative integer");
        max_degree = c["max_degree"].get<std::size_t>();
        if (max_degree < top)
            throw ValidationError(
                "cocycle.max_degree: smaller than the degree of the entries");
    }

    Cocycle f = Cocycle::zero(basis.dim(), max_degree);
    for (const auto& [i, j, v] : entries)
        for (const auto& [mono, coeff] : v.terms())
            f.at(mono.l, i, j) = coeff;
    return f;
}

Cocycle read_cocycle_file(const std::string& path, const SuperBasis& basis,
                          const std::vector<std::string>& params) {
    return parse_cocycle_text(read_text(path), basis, params, path);
}

std::string serialize_cocycle(const Cocycle& f, const SuperBasis& basis) {
    if (f.dim != basis.dim())
        throw ValidationError("form shape does not match the basis");
    Json doc = Json::object();
    doc["schema"] = 1;
    Json c = Json::object();
    c["max_degree"] = f.max_degree();
    Json entries = Json::array();
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j) {
            const FormalPoly v = f.value(i, j);
            if (v.is_zero()) continue;
            entries.push_back(
                Json::array({basis.names[i], basis.names[j], v.str()}));
        }
    c["entries"] = std::move(entries);
    doc["cocycle"] = std::move(c);
    return doc.dump(2) + "\n";
}

void write_cocycle_file(const std::string& path, const Cocycle& f,
                        const SuperBasis& basis) {
    write_text(path, serialize_cocycle(f, basis));
}

} // namespace halg
