#include "mixchrom/polynomial.hpp"

#include "json_detail.hpp"
#include "mixchrom/errors.hpp"

#include <algorithm>

namespace mixchrom {

Polynomial Polynomial::constant(const Rational& c) {
    return monomial(0, 0, c);
}

Polynomial Polynomial::monomial(unsigned dx, unsigned dy, const Rational& c) {
    Polynomial p;
    p.add_term({dx, dy}, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational Polynomial::coefficient(unsigned dx, unsigned dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree_x() const noexcept {
    return terms_.empty() ? 0 : terms_.begin()->first.dx;
}

unsigned Polynomial::degree_y() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.dy);
    }
    return d;
}

namespace {

std::vector<Rational> powers(const Rational& base, unsigned max_exponent) {
    std::vector<Rational> out(max_exponent + 1);
    out[0] = 1;
    for (unsigned i = 1; i <= max_exponent; ++i) {
        out[i] = out[i - 1] * base;
    }
    return out;
}

} // namespace

Rational Polynomial::eval(const Rational& x, const Rational& y) const {
    const auto xs = powers(x, degree_x());
    const auto ys = powers(y, degree_y());
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        sum += c * xs[m.dx] * ys[m.dy];
    }
    return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    Polynomial product;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            product.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
        }
    }
    return *this = std::move(product);
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= factor;
    }
    return *this;
}

Polynomial scale(const Polynomial& p, const Rational& r) {
    return p * r;
}

Polynomial negate_vars(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        out += Polynomial::monomial(m.dx, m.dy, (m.dx + m.dy) % 2 ? Rational(-c) : c);
    }
    return out;
}

Polynomial substitute_y_equals_x(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        out += Polynomial::monomial(m.dx + m.dy, 0, c);
    }
    return out;
}

Polynomial shift_y(const Polynomial& p, const Rational& shift) {
    // (y + s)^k = sum_j C(k, j) s^(k-j) y^j
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Integer choose = 1;
        for (unsigned j = 0; j <= m.dy; ++j) {
            if (j > 0) {
                choose = choose * (m.dy - j + 1) / j;
            }
            Rational s_power = 1;
            for (unsigned i = 0; i < m.dy - j; ++i) {
                s_power *= shift;
            }
            out += Polynomial::monomial(m.dx, j, c * Rational(choose) * s_power);
        }
    }
    return out;
}

Polynomial binomial(const Polynomial& p, unsigned k) {
    Polynomial out = Polynomial::constant(1);
    Integer factorial = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= p - Polynomial::constant(i);
        factorial *= i + 1;
    }
    return out * Rational(Integer(1), factorial);
}

std::vector<Rational> interpolate_univariate(std::span<const Rational> nodes,
                                             std::span<const Rational> values) {
    const std::size_t n = nodes.size();
    if (values.size() != n) {
        throw DomainError("interpolation needs one value per node");
    }
    // Newton divided differences, then expand the Newton form.
    std::vector<Rational> diff(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = nodes[i] - nodes[i - level];
            if (span == 0) {
                throw DomainError("interpolation nodes must be distinct");
            }
            diff[i] = (diff[i] - diff[i - 1]) / span;
        }
    }
    std::vector<Rational> coeffs(n, Rational(0));
    // Horner on the Newton form: c = diff[k] + (t - nodes[k]) * c
    for (std::size_t k = n; k-- > 0;) {
        std::vector<Rational> next(n, Rational(0));
        for (std::size_t i = 0; i + 1 < n; ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= nodes[k] * coeffs[i];
        }
        next[0] += diff[k];
        coeffs = std::move(next);
    }
    return coeffs;
}

namespace {

std::string power(char var, unsigned exponent, bool braces) {
    if (exponent == 0) {
        return {};
    }
    std::string out(1, var);
    if (exponent > 1) {
        const auto e = std::to_string(exponent);
        out += '^';
        out += braces && e.size() > 1 ? "{" + e + "}" : e;
    }
    return out;
}

// coef renders a positive coefficient; it is applied alone to constant terms
// and followed by a separator otherwise.
template <class CoefFn, class MonoFn>
std::string join_terms(const Polynomial& p, CoefFn coef, const std::string& separator, MonoFn mono) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string monomial = mono(m);
        if (monomial.empty()) {
            out += coef(magnitude);
        } else if (magnitude == 1) {
            out += monomial;
        } else {
            out += coef(magnitude) + separator + monomial;
        }
    }
    return out;
}

} // namespace

std::string to_plain(const Polynomial& p) {
    return join_terms(
        p, [](const Rational& c) { return c.get_str(); }, " ",
        [](const Monomial& m) {
            std::string x = power('x', m.dx, false);
            std::string y = power('y', m.dy, false);
            return x.empty() || y.empty() ? x + y : x + " " + y;
        });
}

std::string to_latex(const Polynomial& p) {
    return join_terms(
        p,
        [](const Rational& c) {
            if (c.get_den() == 1) {
                return c.get_num().get_str();
            }
            return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
        },
        "", [](const Monomial& m) { return power('x', m.dx, true) + power('y', m.dy, true); });
}

namespace detail {

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"dx", m.dx}, {"dy", m.dy}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"variables", {"x", "y"}}, {"terms", std::move(terms)}};
}

namespace {

Integer integer_field(const nlohmann::ordered_json& term, const char* key) {
    const auto& v = term.at(key);
    if (v.is_string()) {
        Integer out;
        if (out.set_str(v.get<std::string>(), 10) != 0) {
            throw DomainError(std::string("malformed integer in field ") + key);
        }
        return out;
    }
    if (v.is_number_integer()) {
        return Integer(v.dump());
    }
    throw DomainError(std::string("field ") + key + " must be a decimal string or integer");
}

} // namespace

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
    try {
        if (j.contains("variables") && j.at("variables") != nlohmann::ordered_json({"x", "y"})) {
            throw DomainError("polynomial variables must be [\"x\",\"y\"]");
        }
        Polynomial p;
        for (const auto& term : j.at("terms")) {
            const Integer den = integer_field(term, "den");
            if (den == 0) {
                throw DomainError("zero denominator");
            }
            Rational c(integer_field(term, "num"), den);
            c.canonicalize();
            p += Polynomial::monomial(term.at("dx").get<unsigned>(), term.at("dy").get<unsigned>(), c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

} // namespace detail

std::string to_json(const Polynomial& p) {
    return detail::polynomial_to_json(p).dump();
}

Polynomial polynomial_from_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    }
    return detail::polynomial_from_json(j);
}

std::string render(const Polynomial& p, Format format) {
    switch (format) {
    case Format::plain:
        return to_plain(p);
    case Format::latex:
        return to_latex(p);
    case Format::json:
        return to_json(p);
    }
    return {};
}

Format parse_format(std::string_view name) {
    if (name == "plain") {
        return Format::plain;
    }
    if (name == "latex") {
        return Format::latex;
    }
    if (name == "json") {
        return Format::json;
    }
    throw DomainError("unknown format '" + std::string(name) + "'");
}

} // namespace mixchrom
