#include "mmmcalc/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "mmmcalc/error.hpp"

namespace mmm {

namespace {

std::string print_monomial(const GeneratorTable& t, const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += t[i].name;
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const RingPresentation& ring) : s_(text), ring_(ring) {}

    Poly parse() {
        Poly p = expr();
        skip();
        require(pos_ >= s_.size(),
                "parse_poly: trailing input at '" + std::string(s_.substr(pos_)) + "'");
        return ring_.reduce(p);
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Rational number() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        require(pos_ > start, "parse_poly: expected a number");
        if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        return parse_rational(s_.substr(start, pos_ - start));
    }

    std::string name() {
        skip();
        size_t start = pos_;
        auto body = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        };
        while (pos_ < s_.size() && body(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            require(consume(')'), "parse_poly: expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring_.table(), number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string n = name();
            auto idx = ring_.table()->index_of(n);
            require(idx.has_value(), "parse_poly: unknown generator '" + n + "'");
            return ring_.gen(*idx);
        }
        throw Error(std::string("parse_poly: unexpected character '") + c + "'");
    }

    Poly factor() {
        Poly base = atom();
        while (consume('^')) {
            Rational e = number();
            require(denominator(e) == 1 && e >= 0 && e <= 4096,
                    "parse_poly: exponent must be a small nonnegative integer");
            base = pow(base, numerator(e).convert_to<unsigned>());
        }
        return base;
    }

    Poly term() {
        int sign = 1;
        while (true) {
            if (consume('-')) {
                sign = -sign;
                continue;
            }
            if (consume('+')) continue;
            break;
        }
        Poly p = factor();
        while (consume('*')) p = p * factor();
        return sign < 0 ? -p : p;
    }

    Poly expr() {
        Poly p = term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            p += term();  // term() absorbs the sign
        }
        return p;
    }

    std::string_view s_;
    size_t pos_ = 0;
    const RingPresentation& ring_;
};

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
}

RingPtr ring_from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("generators"),
            "ring JSON must be an object with a 'generators' array");
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    RingPtr free = RingPresentation::free_ring(gens);
    if (!j.contains("relations") || j.at("relations").empty()) return free;
    std::vector<Poly> relations;
    for (const auto& r : j.at("relations"))
        relations.push_back(parse_poly(r.get<std::string>(), *free));
    return RingPresentation::quotient_ring(free->table(), std::move(relations));
}

}  // namespace

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const GeneratorTable& t = *p.table();
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& term : p.terms()) terms.push_back(&term);
    std::sort(terms.begin(), terms.end(),
              [&](const auto* a, const auto* b) { return monomial_less(t, b->first, a->first); });
    std::string out;
    for (const auto* term : terms) {
        const Rational& c = term->second;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        const std::string mono = print_monomial(t, term->first);
        std::string body;
        if (mono.empty())
            body = to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = to_string(mag) + "*" + mono;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

Poly parse_poly(std::string_view text, const RingPresentation& ring) {
    return Parser(text, ring).parse();
}

RingPtr parse_ring_json(const std::string& text) {
    try {
        return ring_from_json(parse_json(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed ring JSON: ") + e.what());
    }
}

BundleSpec parse_bundle_json(const std::string& text) {
    try {
        nlohmann::json j = parse_json(text);
        require(j.is_object() && j.contains("base") && j.contains("rank"),
                "bundle JSON must be an object with 'base' and 'rank'");
        BundleSpec spec;
        spec.base = ring_from_json(j.at("base"));
        spec.rank = j.at("rank").get<int>();
        require(spec.rank >= 1, "bundle JSON: rank must be positive");
        if (j.contains("chern"))
            for (const auto& c : j.at("chern"))
                spec.chern.push_back(parse_poly(c.get<std::string>(), *spec.base));
        require(spec.chern.size() <= static_cast<size_t>(spec.rank),
                "bundle JSON: more Chern classes than the rank allows");
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed bundle JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mmm
