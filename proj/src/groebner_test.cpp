#include "nashtoric/groebner.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace nashtoric;

namespace {

const std::vector<std::string> kNames{"x1", "x2", "x3", "x4"};

Binomial bin(const std::string& text, const TermOrder& order) {
    auto [a, b] = parse_binomial(text, kNames);
    return *Binomial::make(a, b, order);
}

std::vector<Binomial> bins(std::initializer_list<const char*> texts, const TermOrder& order) {
    std::vector<Binomial> out;
    for (auto t : texts) out.push_back(bin(t, order));
    return out;
}

ExponentVector mono(const std::string& s) { return parse_monomial(s, kNames); }

bool is_reduced(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = 0; j < gb.elements.size(); ++j)
            if (i != j && gb.elements[j].plus.divides(gb.elements[i].plus)) return false;
        if (normal_form(gb.elements[i].minus, gb.elements) != gb.elements[i].minus) return false;
    }
    return true;
}

// Buchberger's criterion checked directly: every S-binomial reduces to zero.
bool s_pairs_reduce(const GroebnerBasis& gb) {
    const auto& g = gb.elements;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            auto l = lcm(g[i].plus, g[j].plus);
            auto a = (l - g[i].plus) + g[i].minus;
            auto b = (l - g[j].plus) + g[j].minus;
            if (normal_form(a, g) != normal_form(b, g)) return false;
        }
    return true;
}

bool contains_all(const GroebnerBasis& gb, std::span<const Binomial> gens) {
    return std::all_of(gens.begin(), gens.end(), [&](const Binomial& b) { return ideal_member(b.to_polynomial(), gb); });
}

}  // namespace

TEST_CASE("buchberger: small cases") {
    auto lex = TermOrder::lex(4);
    auto quartic = bins({"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}, lex);
    auto gb = buchberger(quartic, lex);
    auto sorted = quartic;
    std::sort(sorted.begin(), sorted.end(), [&](const Binomial& a, const Binomial& b) { return lex.less(a.plus, b.plus); });
    CHECK(gb.elements == sorted);

    auto single = bins({"x1^2*x3 - x4^3"}, lex);
    CHECK(buchberger(single, lex).elements == single);

    auto chain = buchberger(bins({"x1 - x2", "x2 - x3"}, lex), lex);
    auto expect = bins({"x2 - x3", "x1 - x3"}, lex);
    CHECK(chain.elements == expect);
}

TEST_CASE("buchberger keeps inputs whose leading term another input divides") {
    auto lex = TermOrder::lex(4);
    auto gb = buchberger(bins({"x1^2 - x2", "x1^3 - x3"}, lex), lex);
    CHECK(ideal_member(bin("x1*x2 - x3", lex).to_polynomial(), gb));
    CHECK(ideal_member(bin("x1^3 - x3", lex).to_polynomial(), gb));
    CHECK(s_pairs_reduce(gb));
}

TEST_CASE("normal forms and membership") {
    auto lex = TermOrder::lex(4);
    auto gb = buchberger(bins({"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}, lex), lex);
    CHECK(normal_form(mono("x1*x3"), gb.elements) == mono("x2^2"));
    for (const auto& g : gb.elements) CHECK(normal_form(g.to_polynomial(), gb).is_zero());
    auto one = Polynomial::constant(4, 1);
    CHECK(normal_form(one, gb) == one);

    CHECK(ideal_member(bin("x2*x4 - x3^2", lex).to_polynomial(), gb));
    CHECK_FALSE(ideal_member(Polynomial::monomial(mono("x1")), gb));
    CHECK(ideal_member(Polynomial{}, gb));
    CHECK_FALSE(normal_form(bin("x2*x4 - x3^2", lex), gb).has_value());
}

TEST_CASE("saturation") {
    auto lex = TermOrder::lex(3);
    const std::vector<std::string> n3{"x1", "x2", "x3"};
    auto [a, b] = parse_binomial("x1*x2 - x1*x3", n3);
    std::vector<Binomial> gens{*Binomial::make(a, b, lex)};
    auto sat = saturate_variable(buchberger(gens, lex), 0);
    auto [c, d] = parse_binomial("x2 - x3", n3);
    REQUIRE(sat.elements.size() == 1);
    CHECK(sat.elements[0] == *Binomial::make(c, d, lex));

    auto again = saturate_variable(sat, 0);
    CHECK(again == sat);
    CHECK(saturate(sat) == sat);

    // Lattice-basis ideal of {(1,0),(1,1),(1,2),(1,3)}: kernel vectors (1,-2,1,0), (0,1,-2,1).
    auto lex4 = TermOrder::lex(4);
    auto basis = bins({"x1*x3 - x2^2", "x2*x4 - x3^2"}, lex4);
    std::vector<std::int64_t> grading{1, 1, 1, 1};
    auto full = saturate(basis, lex4, grading);
    auto expect = buchberger(bins({"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}, lex4), lex4);
    CHECK(full == expect);
}

TEST_CASE("random binomial inputs give reduced Groebner bases of the same ideal") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> e(0, 2), count(1, 3);
    for (int t = 0; t < 60; ++t) {
        auto order = (t % 2 == 0) ? TermOrder::lex(4) : TermOrder::degrevlex(4);
        std::vector<Binomial> gens;
        int k = count(rng);
        while (static_cast<int>(gens.size()) < k) {
            ExponentVector a(4), b(4);
            for (std::size_t i = 0; i < 4; ++i) {
                a[i] = e(rng);
                b[i] = e(rng);
            }
            if (auto f = Binomial::make(a, b, order)) gens.push_back(*f);
        }
        auto gb = buchberger(gens, order);
        CHECK(is_reduced(gb));
        CHECK(s_pairs_reduce(gb));
        CHECK(contains_all(gb, gens));

        auto other_order = (t % 2 == 0) ? TermOrder::degrevlex(4) : TermOrder::lex(4);
        auto other = buchberger(gens, other_order);
        CHECK(contains_all(gb, other.elements));
        CHECK(contains_all(other, gb.elements));

        // Canonical: recomputing from a redundant, shuffled generating set changes nothing.
        auto more = gb.elements;
        for (const auto& g : gb.elements) {
            ExponentVector m(4);
            m[static_cast<std::size_t>(t % 4)] = 1;
            more.push_back(Binomial{g.plus + m, g.minus + m});
        }
        std::shuffle(more.begin(), more.end(), rng);
        CHECK(buchberger(more, order) == gb);
    }
}
