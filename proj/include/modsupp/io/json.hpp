#pragma once

/// @file json.hpp
/// @brief JSON reading and writing of rings, elements, vectors, supports and
/// problem files.
///
/// Elements of Z/m rings and of single-factor rings are integers (the element
/// code; for GF(p^m) the base-p digits of the code are the polynomial
/// coefficients, constant term least significant). A GF element may also be
/// given as its coefficient array. Elements of other product rings are arrays
/// with one residue per factor.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/module/code.hpp"
#include "modsupp/monomial/ideal.hpp"
#include "modsupp/support/support.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace modsupp::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string(what) + " is missing the '" + key + "' field");
    return j.at(key);
}

inline std::uint64_t as_uint(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ValidationError(what + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

inline std::int64_t as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ValidationError(what + " must be an integer");
    return j.get<std::int64_t>();
}

inline std::vector<std::uint32_t> as_uint_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError(what + " must be an array of nonnegative integers");
    std::vector<std::uint32_t> out;
    for (const json& x : j) out.push_back(static_cast<std::uint32_t>(as_uint(x, what + " entry")));
    return out;
}

inline ChainFactor parse_factor(const json& j) {
    const std::string kind = field(j, "kind", "ring factor").get<std::string>();
    if (kind == "Zpe") {
        return ChainFactor::zpe(static_cast<std::uint32_t>(as_uint(field(j, "p", "Zpe factor"), "p")),
                                static_cast<std::uint32_t>(as_uint(field(j, "e", "Zpe factor"), "e")));
    }
    if (kind == "GF") {
        std::uint32_t p = 0, m = 0;
        if (j.contains("q")) {
            const auto [pp, mm] = prime_power(as_uint(j.at("q"), "q"));
            if (pp == 0) throw ValidationError("GF q is not a prime power");
            p = static_cast<std::uint32_t>(pp);
            m = mm;
        } else {
            p = static_cast<std::uint32_t>(as_uint(field(j, "p", "GF factor"), "p"));
            m = static_cast<std::uint32_t>(as_uint(field(j, "m", "GF factor"), "m"));
        }
        if (j.contains("modulus")) return ChainFactor::gf(p, m, as_uint_list(j.at("modulus"), "modulus"));
        return ChainFactor::gf_default(p, m);
    }
    throw ValidationError("unknown ring factor kind '" + kind + "' (expected Zpe or GF)");
}

inline std::uint32_t parse_residue(const ChainFactor& f, const json& j) {
    if (j.is_array()) {
        if (f.kind() != FactorKind::GF) throw ValidationError("coefficient arrays are only allowed for GF elements");
        const auto coeffs = as_uint_list(j, "GF coefficient");
        if (coeffs.size() > f.spec().m) throw ValidationError("GF element has more coefficients than the extension degree");
        std::uint64_t code = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            if (coeffs[k] >= f.p()) throw ValidationError("GF coefficient out of range 0.." + std::to_string(f.p() - 1));
            code = code * f.p() + coeffs[k];
        }
        return static_cast<std::uint32_t>(code);
    }
    const std::uint64_t x = as_uint(j, "ring element");
    if (x >= f.size()) throw ValidationError("element " + std::to_string(x) + " is out of range for " + f.name());
    return static_cast<std::uint32_t>(x);
}

/// True when elements of R are written as plain integers.
inline bool scalar_elements(const Ring& R) { return R.integer_form() || R.factor_count() == 1; }

}  // namespace detail

inline Ring parse_ring(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            if (s.rfind("GF", 0) == 0) return Ring::field(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
            if (s.rfind("Z", 0) == 0) return Ring::zm(std::stoull(s.substr(1)));
        } catch (const std::invalid_argument&) {
        }
        throw ValidationError("ring shorthand '" + s + "' is not of the form Z<m> or GF<q>");
    }
    const std::string kind = detail::field(j, "kind", "ring").get<std::string>();
    if (kind == "Zm") return Ring::zm(detail::as_uint(detail::field(j, "m", "Zm ring"), "m"));
    if (kind == "Zpe" || kind == "GF") return Ring::product({detail::parse_factor(j)});
    if (kind == "product") {
        std::vector<ChainFactor> factors;
        const json& list = detail::field(j, "factors", "product ring");
        if (!list.is_array()) throw ValidationError("product ring factors must be an array");
        for (const json& f : list) factors.push_back(detail::parse_factor(f));
        return Ring::product(std::move(factors));
    }
    throw ValidationError("unknown ring kind '" + kind + "' (expected Zm, Zpe, GF or product)");
}

inline json ring_to_json(const Ring& R) {
    if (R.integer_form()) return json{{"kind", "Zm"}, {"m", R.size()}};
    json factors = json::array();
    for (const ChainFactor& f : R.factors()) {
        if (f.kind() == FactorKind::Zpe) {
            factors.push_back(json{{"kind", "Zpe"}, {"p", f.p()}, {"e", f.chain_length()}});
        } else {
            factors.push_back(json{{"kind", "GF"}, {"p", f.p()}, {"m", f.spec().m}, {"modulus", f.spec().modulus}});
        }
    }
    if (factors.size() == 1) return factors.front();
    return json{{"kind", "product"}, {"factors", factors}};
}

inline RingElem parse_element(const Ring& R, const json& j) {
    if (R.integer_form()) {
        const std::int64_t x = detail::as_int(j, "element of " + R.name());
        if (x < 0 || static_cast<std::uint64_t>(x) >= R.size()) {
            throw ValidationError("element " + std::to_string(x) + " is out of range for " + R.name());
        }
        return RingElem{static_cast<std::uint32_t>(x)};
    }
    if (R.factor_count() == 1) {
        const std::uint32_t r = detail::parse_residue(R.factor(0), j);
        return R.from_residues(std::span<const std::uint32_t>(&r, 1));
    }
    if (!j.is_array() || j.size() != R.factor_count()) {
        throw ValidationError("element of " + R.name() + " must be an array of " + std::to_string(R.factor_count()) + " residues");
    }
    std::vector<std::uint32_t> residues;
    for (std::size_t i = 0; i < R.factor_count(); ++i) residues.push_back(detail::parse_residue(R.factor(i), j[i]));
    return R.from_residues(residues);
}

inline json element_to_json(const Ring& R, RingElem a) {
    if (detail::scalar_elements(R)) return a.code;
    json out = json::array();
    for (std::size_t i = 0; i < R.factor_count(); ++i) out.push_back(R.residue(a, i));
    return out;
}

inline Vector parse_vector(const Ring& R, const json& j, std::optional<std::size_t> n = std::nullopt) {
    if (!j.is_array()) throw ValidationError("vector must be a JSON array");
    if (n && j.size() != *n) throw ValidationError("vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(*n));
    Vector v;
    for (const json& x : j) v.push_back(parse_element(R, x));
    return v;
}

inline json vector_to_json(const Ring& R, const Vector& v) {
    json out = json::array();
    for (const RingElem x : v) out.push_back(element_to_json(R, x));
    return out;
}

inline json vectors_to_json(const Ring& R, const std::vector<Vector>& vs) {
    json out = json::array();
    for (const Vector& v : vs) out.push_back(vector_to_json(R, v));
    return out;
}

// ---- support tables ----

/// "1,0,2" for rings with scalar elements, otherwise the JSON text of the vector.
inline std::string table_key(const Ring& R, const Vector& v) {
    if (!detail::scalar_elements(R)) return vector_to_json(R, v).dump();
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k].code);
    return out;
}

inline Vector parse_table_key(const Ring& R, const std::string& key) {
    if (!key.empty() && key.front() == '[') {
        try {
            return parse_vector(R, json::parse(key));
        } catch (const json::exception&) {
            throw ValidationError("table key '" + key + "' is not valid JSON");
        }
    }
    if (!detail::scalar_elements(R)) throw ValidationError("table keys over " + R.name() + " must be JSON arrays of elements");
    json list = json::array();
    std::stringstream in(key);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            const long long x = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument("trailing");
            list.push_back(x);
        } catch (const std::exception&) {
            throw ValidationError("table key '" + key + "' is not a comma-separated list of integers");
        }
    }
    return parse_vector(R, list);
}

namespace detail {

inline std::optional<std::size_t> intrinsic_n(const json& j, const Ring& R) {
    if (j.contains("n")) return as_uint(j.at("n"), "support n");
    const std::string kind = field(j, "kind", "support").get<std::string>();
    if (kind == "table") {
        const json& entries = field(j, "entries", "table support");
        if (!entries.is_object() || entries.empty()) throw ValidationError("table support entries must be a nonempty object");
        return parse_table_key(R, entries.begin().key()).size();
    }
    if (kind == "compose_linear") {
        const json& matrix = field(j, "matrix", "compose_linear support");
        if (!matrix.is_array() || matrix.empty() || !matrix.front().is_array()) throw ValidationError("compose_linear matrix must be a nonempty array of rows");
        return matrix.front().size();
    }
    if (kind == "permute" || kind == "scale" || kind == "duplicate" || kind == "drop" || kind == "insert_zero") {
        return intrinsic_n(field(j, "inner", "support combinator"), R);
    }
    if (kind == "concat") {
        for (const json& p : field(j, "parts", "concat support")) {
            if (auto n = intrinsic_n(p, R)) return n;
        }
        return std::nullopt;
    }
    if (kind == "product") {
        std::size_t total = 0;
        for (const json& p : field(j, "parts", "product support")) {
            const auto n = intrinsic_n(p, R);
            if (!n) return std::nullopt;
            total += *n;
        }
        return total;
    }
    return std::nullopt;
}

inline std::size_t as_index(const json& j, const char* key, const char* what) { return as_uint(field(j, key, what), std::string(what) + " " + key); }

}  // namespace detail

inline Support parse_support(const json& j, const Ring& R, std::size_t n, const Limits& limits) {
    if (j.contains("n") && detail::as_uint(j.at("n"), "support n") != n) {
        throw ValidationError("support declares n = " + std::to_string(j.at("n").get<std::uint64_t>()) + " but is used at length " + std::to_string(n));
    }
    const std::string kind = detail::field(j, "kind", "support").get<std::string>();
    if (kind == "hamming") return Support::hamming(R, n);
    if (kind == "chain_ring") return Support::chain_ring(R, n);
    if (kind == "lee") return Support::lee(R, n);
    if (kind == "chain") {
        std::vector<std::vector<RingElem>> ideals;
        const json& list = detail::field(j, "ideals", "chain support");
        if (!list.is_array()) throw ValidationError("chain ideals must be an array of generator lists");
        for (const json& gens : list) {
            if (!gens.is_array()) throw ValidationError("each chain ideal must be a list of generators");
            std::vector<RingElem> g;
            for (const json& x : gens) g.push_back(parse_element(R, x));
            ideals.push_back(std::move(g));
        }
        return Support::chain(R, n, ideals);
    }
    if (kind == "pir") {
        const json& values = detail::field(j, "values", "pir support");
        std::vector<std::vector<std::vector<std::uint32_t>>> v;
        if (!values.is_array()) throw ValidationError("pir values must be nested arrays [factor][j][k]");
        for (const json& factor : values) {
            if (!factor.is_array() || factor.empty()) throw ValidationError("pir values must list value vectors per factor");
            std::vector<std::vector<std::uint32_t>> per;
            for (const json& vec : factor) per.push_back(detail::as_uint_list(vec, "pir value"));
            v.push_back(std::move(per));
        }
        return Support::pir(R, n, std::move(v));
    }
    if (kind == "table") {
        const json& entries = detail::field(j, "entries", "table support");
        if (!entries.is_object()) throw ValidationError("table support entries must be an object");
        const Ambient amb(R, n);
        std::vector<std::optional<SupportValue>> rows(amb.size());
        for (const auto& [key, value] : entries.items()) {
            const Vector v = parse_table_key(R, key);
            if (v.size() != n) throw ValidationError("table key '" + key + "' does not have length " + std::to_string(n));
            auto& slot = rows[amb.encode(v)];
            if (slot) throw ValidationError("table key '" + key + "' is listed twice");
            slot = detail::as_uint_list(value, "table value");
        }
        std::vector<SupportValue> dense;
        for (std::uint64_t c = 0; c < rows.size(); ++c) {
            if (!rows[c]) throw ValidationError("table support has no entry for " + table_key(R, amb.decode(c)));
            dense.push_back(std::move(*rows[c]));
        }
        return Support::table(R, n, dense);
    }
    if (kind == "compose_linear") {
        const json& matrix = detail::field(j, "matrix", "compose_linear support");
        std::vector<Vector> rows;
        for (const json& row : matrix) rows.push_back(parse_vector(R, row, n));
        return Support::compose_linear(parse_support(detail::field(j, "inner", "compose_linear support"), R, rows.size(), limits), rows, limits);
    }
    if (kind == "permute" || kind == "scale" || kind == "duplicate" || kind == "drop" || kind == "insert_zero") {
        const Support inner = parse_support(detail::field(j, "inner", "support combinator"), R, n, limits);
        if (kind == "permute") {
            std::vector<std::size_t> perm;
            for (const std::uint32_t k : detail::as_uint_list(detail::field(j, "perm", "permute support"), "permutation")) perm.push_back(k);
            return Support::permute(inner, perm);
        }
        const std::size_t i = detail::as_index(j, "index", "support combinator");
        if (kind == "scale") return Support::scale(inner, i, static_cast<std::uint32_t>(detail::as_index(j, "factor", "scale support")));
        if (kind == "duplicate") return Support::duplicate(inner, i);
        if (kind == "drop") return Support::drop(inner, i);
        return Support::insert_zero(inner, i);
    }
    if (kind == "concat") {
        std::vector<Support> parts;
        for (const json& p : detail::field(j, "parts", "concat support")) parts.push_back(parse_support(p, R, n, limits));
        return Support::concat(parts);
    }
    if (kind == "product") {
        const json& list = detail::field(j, "parts", "product support");
        if (!list.is_array() || list.empty()) throw ValidationError("product support needs a nonempty parts array");
        std::vector<std::optional<std::size_t>> lengths;
        std::size_t known = 0, unknown = 0;
        for (const json& p : list) {
            lengths.push_back(detail::intrinsic_n(p, R));
            if (lengths.back()) known += *lengths.back();
            else ++unknown;
        }
        if (known > n || (unknown == 0 && known != n) || (unknown > 0 && (n - known) % unknown != 0)) {
            throw ValidationError("product support parts cannot be fitted to length " + std::to_string(n) + "; give each part an explicit \"n\"");
        }
        const std::size_t share = unknown == 0 ? 0 : (n - known) / unknown;
        std::vector<Support> parts;
        for (std::size_t k = 0; k < list.size(); ++k) parts.push_back(parse_support(list[k], R, lengths[k] ? *lengths[k] : share, limits));
        return Support::product(parts);
    }
    throw ValidationError("unknown support kind '" + kind + "'");
}

/// Serializes a support tree in the same schema parse_support reads.
inline json support_to_json(const Support& sigma) {
    const Ring& R = sigma.ring();
    const modsupp::detail::SupportNode& node = sigma.node();
    json out{{"kind", std::string(to_string(node.kind))}};
    const auto children = sigma.children();
    switch (node.kind) {
        case SupportKind::hamming:
        case SupportKind::chain_ring:
        case SupportKind::lee:
            out["n"] = node.n;
            break;
        case SupportKind::chain: {
            json ideals = json::array();
            for (const auto& gens : node.ideal_generators) {
                json g = json::array();
                for (const RingElem x : gens) g.push_back(element_to_json(R, x));
                ideals.push_back(g);
            }
            out["n"] = node.n;
            out["ideals"] = ideals;
            break;
        }
        case SupportKind::pir:
            out["n"] = node.n;
            out["values"] = node.values;
            break;
        case SupportKind::table: {
            const Ambient amb(R, node.n);
            json entries = json::object();
            for (std::uint64_t c = 0; c < amb.size(); ++c) {
                const auto first = node.table.begin() + static_cast<std::ptrdiff_t>(c * node.u);
                entries[table_key(R, amb.decode(c))] = std::vector<std::uint32_t>(first, first + static_cast<std::ptrdiff_t>(node.u));
            }
            out["entries"] = entries;
            break;
        }
        case SupportKind::permute:
            out["perm"] = node.perm;
            out["inner"] = support_to_json(children.front());
            break;
        case SupportKind::scale:
            out["index"] = node.index;
            out["factor"] = node.factor;
            out["inner"] = support_to_json(children.front());
            break;
        case SupportKind::duplicate:
        case SupportKind::drop:
        case SupportKind::insert_zero:
            out["index"] = node.index;
            out["inner"] = support_to_json(children.front());
            break;
        case SupportKind::compose_linear:
            out["matrix"] = vectors_to_json(R, node.matrix);
            out["inner"] = support_to_json(children.front());
            break;
        case SupportKind::product:
        case SupportKind::concat: {
            json parts = json::array();
            for (const Support& c : children) parts.push_back(support_to_json(c));
            out["parts"] = parts;
            break;
        }
    }
    return out;
}

// ---- problem files ----

struct ProblemOptions {
    std::optional<std::uint64_t> characteristic;
    std::optional<std::uint64_t> seed;
    std::optional<bool> unchecked;
};

struct Problem {
    Ring ring = Ring::zm(2);
    std::size_t n = 0;
    std::optional<Support> support;
    std::optional<Code> code;
    Limits limits;
    ProblemOptions options;
};

/// Reads {"ring", "n"?, "support"?, "code": {"generators"}?, "options"?}. The
/// length comes from "n", else the first generator, else the support.
/// options.caps ("key=value,..." or an object) is applied over base, then overrides.
inline Problem parse_problem(const json& j, Limits base, std::string_view overrides = {}) {
    if (!j.is_object()) throw ValidationError("problem file must be a JSON object");
    Problem out;
    out.ring = parse_ring(detail::field(j, "ring", "problem"));
    out.limits = base;
    if (j.contains("options")) {
        const json& o = j.at("options");
        if (!o.is_object()) throw ValidationError("options must be an object");
        if (o.contains("caps")) {
            const json& caps = o.at("caps");
            if (caps.is_string()) {
                out.limits.apply_overrides(caps.get<std::string>());
            } else if (caps.is_object()) {
                for (const auto& [key, value] : caps.items()) out.limits.set(key, std::to_string(detail::as_uint(value, "cap " + key)));
            } else {
                throw ValidationError("options.caps must be a string or an object");
            }
        }
        if (o.contains("char")) out.options.characteristic = detail::as_uint(o.at("char"), "options.char");
        if (o.contains("seed")) out.options.seed = detail::as_uint(o.at("seed"), "options.seed");
        if (o.contains("threads")) out.limits.threads = static_cast<unsigned>(detail::as_uint(o.at("threads"), "options.threads"));
        if (o.contains("unchecked")) {
            if (!o.at("unchecked").is_boolean()) throw ValidationError("options.unchecked must be a boolean");
            out.options.unchecked = o.at("unchecked").get<bool>();
        }
    }
    out.limits.apply_overrides(overrides);
    const json* gens = nullptr;
    if (j.contains("code")) {
        gens = &detail::field(j.at("code"), "generators", "code");
        if (!gens->is_array()) throw ValidationError("code generators must be an array of vectors");
    }
    if (j.contains("n")) {
        out.n = detail::as_uint(j.at("n"), "n");
    } else if (gens && !gens->empty() && gens->front().is_array()) {
        out.n = gens->front().size();
    } else if (j.contains("support") && detail::intrinsic_n(j.at("support"), out.ring)) {
        out.n = *detail::intrinsic_n(j.at("support"), out.ring);
    } else {
        throw ValidationError("cannot determine the length n; add an \"n\" field");
    }
    if (out.n == 0) throw ValidationError("length n must be at least 1");
    if (j.contains("support")) out.support = parse_support(j.at("support"), out.ring, out.n, out.limits);
    if (gens) {
        std::vector<Vector> vs;
        for (const json& g : *gens) vs.push_back(parse_vector(out.ring, g, out.n));
        out.code = Code(out.ring, out.n, vs, out.limits);
    }
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw ValidationError("cannot open '" + path + "'");
        in = &file;
    }
    try {
        return json::parse(*in);
    } catch (const json::parse_error& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// One monomial per line as space-separated exponents; blank lines and lines
/// starting with '#' are ignored. Every line must have the same length.
inline MonomialIdeal parse_ideal_text(std::istream& in) {
    std::vector<Monomial> gens;
    std::optional<std::size_t> u;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        Monomial m;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                const unsigned long x = std::stoul(token, &used);
                if (used != token.size()) throw std::invalid_argument("trailing");
                m.push_back(static_cast<std::uint32_t>(x));
            } catch (const std::exception&) {
                throw ValidationError("ideal line " + std::to_string(number) + ": '" + token + "' is not a nonnegative integer");
            }
        }
        if (u && m.size() != *u) throw ValidationError("ideal line " + std::to_string(number) + " has " + std::to_string(m.size()) + " exponents, expected " + std::to_string(*u));
        u = m.size();
        gens.push_back(std::move(m));
    }
    if (!u) throw ValidationError("ideal file lists no monomials");
    return MonomialIdeal(*u, std::move(gens));
}

}  // namespace modsupp::io
