#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixchrom {

using Integer = mpz_class;
using Rational = mpq_class;

struct Monomial {
    unsigned dx = 0;
    unsigned dy = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Terms are kept in rendering order: x-degree descending, then y-degree descending.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return a.dx != b.dx ? a.dx > b.dx : a.dy > b.dy;
    }
};

/// Sparse polynomial in x and y with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(unsigned dx, unsigned dy, const Rational& c = 1);
    static Polynomial x() { return monomial(1, 0); }
    static Polynomial y() { return monomial(0, 1); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(unsigned dx, unsigned dy) const;
    unsigned degree_x() const noexcept;
    unsigned degree_y() const noexcept;

    Rational eval(const Rational& x, const Rational& y) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& factor);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
    friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

Polynomial scale(const Polynomial& p, const Rational& r);

// x -> -x, y -> -y
Polynomial negate_vars(const Polynomial& p);

// Result has y-degree 0.
Polynomial substitute_y_equals_x(const Polynomial& p);

// y -> y + shift
Polynomial shift_y(const Polynomial& p, const Rational& shift);

// p (p - 1) ... (p - k + 1) / k!
Polynomial binomial(const Polynomial& p, unsigned k);

/// Coefficients (ascending powers) of the unique polynomial of degree
/// < nodes.size() through (nodes[i], values[i]). Nodes must be distinct.
std::vector<Rational> interpolate_univariate(std::span<const Rational> nodes,
                                             std::span<const Rational> values);

enum class Format { plain, latex, json };

std::string to_plain(const Polynomial& p);
std::string to_latex(const Polynomial& p);
std::string to_json(const Polynomial& p);
std::string render(const Polynomial& p, Format format);

/// Inverse of to_json. Accepts num/den as decimal strings or JSON integers.
Polynomial polynomial_from_json(std::string_view text);

Format parse_format(std::string_view name);

} // namespace mixchrom
