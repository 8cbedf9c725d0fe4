#pragma once

// Sparse exact arithmetic for monomials, binomials and integer polynomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nashtoric {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::int32_t;

class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<Exponent> init);
    explicit ExponentVector(std::vector<Exponent> e);

    static ExponentVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    std::span<const Exponent> view() const { return e_; }

    std::int64_t degree() const;
    bool is_zero() const;
    /// True iff this divides `other` componentwise.
    bool divides(const ExponentVector& other) const;

    /// Checked addition; throws ExponentOverflow.
    ExponentVector operator+(const ExponentVector& o) const;
    /// Requires o to divide *this.
    ExponentVector operator-(const ExponentVector& o) const;

    /// Storage order (plain lexicographic on the raw vector); not a term order.
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<Exponent> e_;
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
bool coprime(const ExponentVector& a, const ExponentVector& b);

/// Monomial order on exponent vectors. `ranking[0]` is the most significant variable.
class TermOrder {
public:
    enum class Kind { Lex, DegRevLex };

    static TermOrder lex(std::size_t n);
    static TermOrder lex(std::vector<std::size_t> ranking);
    static TermOrder degrevlex(std::size_t n);
    /// Weighted degree first (weights empty means all ones), then reverse lex on the ranking.
    static TermOrder degrevlex(std::vector<std::size_t> ranking, std::vector<std::int64_t> weights = {});

    std::weak_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
    bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& ranking() const { return ranking_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::size_t num_vars() const { return ranking_.size(); }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    TermOrder(Kind k, std::vector<std::size_t> ranking, std::vector<std::int64_t> weights);

    Kind kind_;
    std::vector<std::size_t> ranking_;
    std::vector<std::int64_t> weights_;
};

struct Monomial {
    Integer coeff;
    ExponentVector exp;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Integer>;

    Polynomial() = default;
    static Polynomial constant(std::size_t nvars, const Integer& c);
    static Polynomial monomial(const ExponentVector& e, const Integer& c = 1);

    /// Adds c*x^e, removing the term if it cancels.
    void add_term(const ExponentVector& e, const Integer& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// The single term, if this is a (nonzero) monomial.
    std::optional<Monomial> as_monomial() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Integer& c) const;
    Polynomial operator-() const { return *this * Integer(-1); }

    Polynomial derivative(std::size_t var) const;
    Integer evaluate(std::span<const std::int64_t> point) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

/// x^plus - x^minus, oriented so that plus is the leading exponent.
struct Binomial {
    ExponentVector plus;
    ExponentVector minus;

    /// Orients a - b under `order`; nullopt when a == b (the zero polynomial).
    static std::optional<Binomial> make(const ExponentVector& a, const ExponentVector& b, const TermOrder& order);

    std::size_t num_vars() const { return plus.size(); }
    Polynomial to_polynomial() const;
    Polynomial derivative(std::size_t var) const;
    /// plus - minus as a signed integer vector.
    std::vector<std::int64_t> difference() const;

    friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Cofactor expansion along the first row, memoised on the remaining column set.
Polynomial determinant(const PolyMatrix& m);
Integer determinant(const IntMatrix& m);
std::size_t rank(IntMatrix m);

// ---- rendering and parsing ------------------------------------------------

/// x1..xl, y1..ym, z1..zn.
std::vector<std::string> default_names(std::size_t l, std::size_t m, std::size_t n);

std::string render(const ExponentVector& e, std::span<const std::string> names);
std::string render(const Monomial& mono, std::span<const std::string> names);
/// Terms listed from largest to smallest under `order`.
std::string render(const Polynomial& p, std::span<const std::string> names, const TermOrder& order);
std::string render(const Binomial& b, std::span<const std::string> names);

/// Parses "x^2*z*w" or "1" against a name table.
ExponentVector parse_monomial(const std::string& text, std::span<const std::string> names);
/// Parses "lhs - rhs" where both sides are monomials.
std::pair<ExponentVector, ExponentVector> parse_binomial(const std::string& text, std::span<const std::string> names);

}  // namespace nashtoric
