#pragma once

// Buchberger's algorithm specialised to pure binomials x^a - x^b.
//
// S-polynomials and reductions of pure binomials are again pure binomials
// (or zero), so the whole computation stays inside exponent-vector pairs and
// the normal form of a monomial is a single monomial.

#include "nashtoric/algebra.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nashtoric {

struct GroebnerBasis {
    TermOrder order;
    /// Reduced basis, sorted by increasing leading exponent.
    std::vector<Binomial> elements;

    std::size_t num_vars() const { return order.num_vars(); }
    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// Reduced Groebner basis of the ideal generated by `gens`. Input orientation is ignored.
GroebnerBasis buchberger(std::span<const Binomial> gens, const TermOrder& order);

/// Normal form of the monomial x^e: repeatedly rewrite x^e by any leading term dividing it.
ExponentVector normal_form(const ExponentVector& e, std::span<const Binomial> basis);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
/// Normal form of a binomial; nullopt when it reduces to zero.
std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

/// Groebner basis (under gb.order) of (I : x_var^inf).
///
/// `grading` must be a positive grading for which I is homogeneous; an empty
/// span means the standard grading. The basis is recomputed under a weighted
/// reverse-lex order with x_var ranked last, each element is divided by the
/// largest power of x_var dividing both of its terms, and the result is
/// re-reduced under gb.order.
GroebnerBasis saturate_variable(const GroebnerBasis& gb, std::size_t var, std::span<const std::int64_t> grading = {});

/// (I : (x_1 ... x_N)^inf), one variable at a time under reverse-lex orders,
/// then a single conversion to `order`. `gens` need not be a Groebner basis.
GroebnerBasis saturate(std::span<const Binomial> gens, const TermOrder& order, std::span<const std::int64_t> grading = {});
inline GroebnerBasis saturate(const GroebnerBasis& gb, std::span<const std::int64_t> grading = {}) {
    return saturate(gb.elements, gb.order, grading);
}

}  // namespace nashtoric
