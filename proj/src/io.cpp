#include "plethyx/io.hpp"

#include <charconv>

#include "plethyx/errors.hpp"

namespace plethyx {

namespace {

std::string term_body(const Partition& lam, const BigInt& abs_coeff) {
    std::string body;
    bool unit = abs_coeff == BigInt(1);
    if (lam.empty()) return abs_coeff.to_string();
    if (!unit) body += abs_coeff.to_string() + "*";
    body += "s[" + lam.to_string() + "]";
    return body;
}

} // namespace

std::string to_text(const SchurPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [lam, c] : p.terms()) {
        bool neg = c.is_negative();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_body(lam, neg ? -c : c);
    }
    return out;
}

std::string to_text(const HPrefixedSeries& s) {
    return "H*(" + to_text(s.factor()) + ")";
}

std::string to_text(const TruncatedSeries& s) {
    return to_text(s.value);
}

std::string bracketed(const Partition& p) {
    return p.empty() ? "[]" : "[" + p.to_string() + "]";
}

namespace {

nlohmann::json coeff_to_json(const BigInt& c) {
    if (c.fits_long_long()) return c.to_long_long();
    return c.to_string();
}

BigInt coeff_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) {
        // decimal string fallback for coefficients beyond 64 bits
        std::string s = j.get<std::string>();
        bool neg = !s.empty() && s[0] == '-';
        BigInt v = 0;
        for (size_t i = neg ? 1 : 0; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw parse_error("bad coefficient: " + s);
            v = v * BigInt(10) + BigInt(s[i] - '0');
        }
        return neg ? -v : v;
    }
    throw parse_error("bad coefficient in JSON");
}

} // namespace

nlohmann::json to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

nlohmann::json to_json(const SchurPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : p.terms())
        terms.push_back({{"partition", to_json(lam)}, {"coeff", coeff_to_json(c)}});
    return {{"terms", terms}};
}

nlohmann::json to_json(const HPrefixedSeries& s) {
    nlohmann::json j = to_json(s.factor());
    j["h_prefixed"] = true;
    return j;
}

nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json j = to_json(s.value);
    j["truncated_at"] = s.max_degree;
    return j;
}

nlohmann::json to_json(const SweepReport& r) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"input", m.input}, {"closed", m.closed}, {"oracle", m.oracle}});
    nlohmann::json config;
    config["suite"] = r.suite;
    for (const auto& [k, v] : r.config) config[k] = v;
    return {{"checked", r.checked},
            {"mismatches", mismatches},
            {"elapsed_ms", r.elapsed_ms},
            {"config", config}};
}

SchurPoly schur_from_json(const nlohmann::json& j) {
    try {
        SchurPoly out;
        for (const auto& term : j.at("terms")) {
            std::vector<int> parts = term.at("partition").get<std::vector<int>>();
            out.add_term(Partition(std::move(parts)), coeff_from_json(term.at("coeff")));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad SchurPoly JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad SchurPoly JSON: ") + e.what());
    }
}

BasisSpec parse_basis_spec(std::string_view text) {
    if (text.size() < 2 || text[1] != ':')
        throw parse_error("basis spec must look like s:3,1 or h:2 or e:2,1: " +
                          std::string(text));
    char basis = text[0];
    if (basis != 's' && basis != 'h' && basis != 'e')
        throw parse_error("unknown basis '" + std::string(1, basis) + "' in: " + std::string(text));
    std::string_view body = text.substr(2);
    BasisSpec spec;
    spec.basis = basis;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw parse_error("unbalanced '[' in: " + std::string(text));
        body.remove_prefix(1);
        body.remove_suffix(1);
    }
    if (!body.empty()) {
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string_view tok =
                body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            int value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || p != tok.data() + tok.size() || value < 0)
                throw parse_error("bad index '" + std::string(tok) + "' in: " + std::string(text));
            spec.index.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return spec;
}

SchurPoly to_schur(const BasisSpec& spec) {
    switch (spec.basis) {
    case 'h':
        return h_to_schur(spec.index);
    case 'e':
        return e_to_schur(spec.index);
    default:
        try {
            return SchurPoly::single(Partition(spec.index));
        } catch (const std::invalid_argument& e) {
            throw parse_error(std::string("s-spec index must be a partition: ") + e.what());
        }
    }
}

} // namespace plethyx
