#include "nashtoric/error.hpp"
#include "nashtoric/nash.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace nashtoric;

namespace {

ToricIdeal ideal_of(const GeneratorSet& g) {
    auto vs = validate(g);
    return toric_ideal(vs, default_order(vs.N()));
}

const GeneratorSet kA{{1, 0}, {1, 1}, {1, 2}, {1, 3}};
const GeneratorSet kB{{2, 0}, {3, 0}, {2, 6}, {0, 4}, {0, 5}};
const GeneratorSet kC{{2, 0}, {1, 2}, {0, 3}, {0, 5}};

std::vector<std::string> names_of(const ToricIdeal& t) {
    const auto& c = t.semigroup.classification;
    return default_names(c.l(), c.m(), c.n());
}

std::vector<Binomial> bins(const ToricIdeal& t, std::initializer_list<const char*> texts) {
    std::vector<Binomial> out;
    for (auto s : texts) {
        auto [a, b] = parse_binomial(s, names_of(t));
        out.push_back(*Binomial::make(a, b, t.gb.order));
    }
    return out;
}

// Minor ideal as a set of normal-form exponent vectors; coefficients are ignored.
std::set<ExponentVector> reduced_set(std::span<const MinorValue> minors, const ToricIdeal& t) {
    std::set<ExponentVector> out;
    for (const auto& m : minors) out.insert(normal_form(m.monomial.exp, t.gb.elements));
    return out;
}

std::set<ExponentVector> reduced_set(std::initializer_list<const char*> monos, const ToricIdeal& t) {
    std::set<ExponentVector> out;
    for (auto s : monos) out.insert(normal_form(parse_monomial(s, names_of(t)), t.gb.elements));
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Precondition;
}

}  // namespace

TEST_CASE("difference matrix") {
    auto a = ideal_of(kA);
    auto fam = bins(a, {"x1*y2 - y1^2", "x1*z1 - y1*y2", "y1*z1 - y2^2"});
    auto d = difference_matrix(fam, a.semigroup.gens);
    using Row = std::vector<std::int64_t>;
    REQUIRE(d.rows.size() == 3);
    // Rows follow the binomials' orientation; compare up to sign.
    auto up_to_sign = [](Row r, Row e) {
        if (r == e) return true;
        for (auto& x : r) x = -x;
        return r == e;
    };
    CHECK(up_to_sign(d.rows[0], Row{1, -2, 1, 0}));
    CHECK(up_to_sign(d.rows[1], Row{1, -1, -1, 1}));
    CHECK(up_to_sign(d.rows[2], Row{0, 1, -2, 1}));
    CHECK(difference_matrix({}, a.semigroup.gens).rows.empty());

    auto bad = bins(a, {"x1 - y1"});
    CHECK(code_of([&] { difference_matrix(bad, a.semigroup.gens); }) == ErrorCode::NotARelation);
}

TEST_CASE("family rank") {
    auto a = ideal_of(kA);
    auto fam = bins(a, {"x1*y2 - y1^2", "x1*z1 - y1*y2", "y1*z1 - y2^2"});
    CHECK(family_rank(fam) == 2);
    CHECK(family_rank(std::span(fam).first(2)) == 2);
    std::vector<Binomial> twice{fam[0], fam[0]};
    CHECK(family_rank(twice) == 1);
    CHECK(family_rank(relation_family(a, RelationFamily::Minimal)) == a.r());
}

TEST_CASE("minor formula against the symbolic determinant") {
    auto a = ideal_of(kA);
    auto fam = bins(a, {"x1*y2 - y1^2", "x1*z1 - y1*y2", "y1*z1 - y2^2"});
    std::vector<Binomial> rows12{fam[0], fam[1]};
    auto v = minor_monomial_formula(rows12, {2, 3}, a);
    REQUIRE(v.has_value());
    CHECK(v->det_rk == 1);
    CHECK(v->monomial.coeff == 1);
    CHECK(normal_form(v->monomial.exp, a.gb.elements) == normal_form(parse_monomial("y1*z1", names_of(a)), a.gb.elements));

    auto sym = minor_symbolic(rows12, {2, 3}, a);
    CHECK(sym == normal_form(Polynomial::monomial(v->monomial.exp), a.gb));

    std::vector<Binomial> twice{fam[0], fam[0]};
    for (const auto& k : all_selections(4)) CHECK_FALSE(minor_monomial_formula(twice, k, a).has_value());

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            std::vector<Binomial> sub{fam[i], fam[j]};
            for (const auto& k : all_selections(4)) {
                auto f = minor_monomial_formula(sub, k, a);
                auto s = minor_symbolic(sub, k, a);
                if (!f) {
                    CHECK(s.is_zero());
                    continue;
                }
                CHECK(s == normal_form(Polynomial::monomial(f->monomial.exp, f->monomial.coeff), a.gb));
            }
        }
}

TEST_CASE("selections") {
    auto s = all_selections(4);
    CHECK(s.size() == 6);
    CHECK(s.front() == MinorSelection{0, 1});
    CHECK(s.back() == MinorSelection{2, 3});
}

TEST_CASE("minor ideals of the rational normal quartic cone") {
    auto a = ideal_of(kA);
    auto fam = bins(a, {"x1*y2 - y1^2", "x1*z1 - y1*y2", "y1*z1 - y2^2"});
    std::vector<Binomial> r12{fam[0], fam[1]}, r13{fam[0], fam[2]}, r23{fam[1], fam[2]};
    CHECK(reduced_set(nash_ideal(r12, a), a) ==
          reduced_set({"x1^2", "x1*y1", "x1*y2", "x1*z1", "y1*z1"}, a));
    CHECK(reduced_set(nash_ideal(r13, a), a) ==
          reduced_set({"x1*y1", "x1*y2", "x1*z1", "y1*z1", "y2*z1"}, a));
    CHECK(reduced_set(nash_ideal(r23, a), a) ==
          reduced_set({"x1*y2", "x1*z1", "y1*z1", "y2*z1", "z1^2"}, a));

    auto j12 = nash_ideal(r12, a);
    CHECK(zero_locus(j12, a.semigroup) == OrbitSet{true, false, true});

    std::vector<Binomial> twice{fam[0], fam[0]};
    CHECK(code_of([&] { nash_ideal(twice, a); }) == ErrorCode::RankDeficient);
}

TEST_CASE("zero loci of monomial lists") {
    auto a = ideal_of(kA);
    auto n = names_of(a);
    std::vector<Monomial> xa{{1, parse_monomial("x1^3", n)}};
    CHECK(zero_locus(xa, a.semigroup) == OrbitSet{true, false, true});
    std::vector<Monomial> xz{{1, parse_monomial("x1", n)}, {1, parse_monomial("z1", n)}};
    CHECK(zero_locus(xz, a.semigroup) == OrbitSet{false, false, true});
    std::vector<Monomial> y{{2, parse_monomial("y1", n)}};
    CHECK(zero_locus(y, a.semigroup) == OrbitSet{true, true, true});
    std::vector<Monomial> none;
    CHECK(code_of([&] { zero_locus(none, a.semigroup); }) == ErrorCode::EmptyIdeal);

    CHECK(OrbitSet{true, false, true}.dimension() == 1);
    CHECK(OrbitSet{false, false, true}.dimension() == 0);
    CHECK(OrbitSet{false, false, true}.subset_of(OrbitSet{true, true, true}));
    CHECK_FALSE(OrbitSet{true, false, true}.subset_of(OrbitSet{false, true, true}));
}

TEST_CASE("orbit representatives") {
    auto c = ideal_of(kC);
    auto reps = orbit_representatives(c.semigroup);
    CHECK(reps.torus == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(reps.o1 == std::vector<std::int64_t>{0, 0, 1, 1});
    CHECK(reps.o2 == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(reps.origin == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("singular loci") {
    auto a = ideal_of(kA);
    auto b = ideal_of(kB);
    auto c = ideal_of(kC);
    CHECK(singular_locus(a) == OrbitSet{false, false, true});
    CHECK(singular_locus(b) == OrbitSet{true, true, true});
    CHECK(singular_locus(c) == OrbitSet{false, true, true});
    CHECK(singular_locus_from_minors(a) == singular_locus(a));
    CHECK(singular_locus_from_minors(b) == singular_locus(b));
    CHECK(singular_locus_from_minors(c) == singular_locus(c));

    auto a1 = ideal_of({{1, 0}, {1, 1}, {1, 2}});
    CHECK(singular_locus(a1) == OrbitSet{false, false, true});
}

TEST_CASE("exhaustive search") {
    auto a = ideal_of(kA);
    auto reports = search_all_subsets(a);
    CHECK(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.rank_ok);
        CHECK_FALSE(r.equals_sigma);
        CHECK(r.zero_locus.dimension() == 1);
    }

    auto c = ideal_of(kC);
    auto rc = search_all_subsets(c);
    CHECK(rc.size() == 6);
    CHECK(std::any_of(rc.begin(), rc.end(), [](const NashReport& r) { return r.equals_sigma; }));
    CHECK_FALSE(std::all_of(rc.begin(), rc.end(), [](const NashReport& r) { return !r.rank_ok || r.equals_sigma; }));
}

TEST_CASE("search output does not depend on the thread count") {
    auto b = ideal_of(kB);
    auto one = search_all_subsets(b, RelationFamily::Minimal, 1);
    auto many = search_all_subsets(b, RelationFamily::Minimal, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].subset == many[i].subset);
        CHECK(one[i].rank_ok == many[i].rank_ok);
        CHECK(one[i].zero_locus == many[i].zero_locus);
        CHECK(one[i].equals_sigma == many[i].equals_sigma);
        REQUIRE(one[i].minors.size() == many[i].minors.size());
        for (std::size_t k = 0; k < one[i].minors.size(); ++k) {
            CHECK(one[i].minors[k].excluded == many[i].minors[k].excluded);
            CHECK(one[i].minors[k].monomial == many[i].minors[k].monomial);
        }
    }
}

TEST_CASE("dim-1 selector") {
    auto c = ideal_of(kC);
    auto w = dim1_selector(c);
    CHECK(w.equals_sigma);
    CHECK(w.zero_locus == OrbitSet{false, true, true});
    std::vector<Binomial> chosen;
    auto fam = relation_family(c, RelationFamily::Minimal);
    for (auto i : w.subset) chosen.push_back(fam[i]);
    CHECK(zero_locus(nash_ideal(chosen, c), c.semigroup) == singular_locus(c));

    auto b = ideal_of(kB);
    CHECK(dim1_selector(b).equals_sigma);

    auto a = ideal_of(kA);
    CHECK(code_of([&] { dim1_selector(a); }) == ErrorCode::Precondition);
}

TEST_CASE("hypersurface and complete-intersection flags") {
    auto h = classify_ci(ideal_of({{2, 0}, {0, 1}, {1, 1}}));
    CHECK(h.is_hypersurface);
    CHECK(h.is_complete_intersection);
    auto a = classify_ci(ideal_of(kA));
    CHECK_FALSE(a.is_hypersurface);
    CHECK_FALSE(a.is_complete_intersection);
    CHECK_FALSE(classify_ci(ideal_of(kB)).is_complete_intersection);
    CHECK_FALSE(classify_ci(ideal_of(kC)).is_complete_intersection);
}

TEST_CASE("theorem verdicts") {
    auto va = verify_main_theorem(ideal_of(kA));
    CHECK(va.predicted == Outcome::NeverEqual);
    CHECK(va.observed == Outcome::NeverEqual);
    CHECK(va.holds());

    auto vb = verify_main_theorem(ideal_of(kB));
    CHECK(vb.predicted == Outcome::AlwaysEqual);
    CHECK(vb.observed == Outcome::AlwaysEqual);

    auto vc = verify_main_theorem(ideal_of(kC));
    CHECK(vc.predicted == Outcome::ExistsEqual);
    CHECK(vc.observed == Outcome::ExistsEqual);
    REQUIRE(vc.witness.has_value());
    CHECK(vc.holds());

    auto vh = verify_main_theorem(ideal_of({{2, 0}, {0, 1}, {1, 1}}));
    CHECK(vh.is_hypersurface);
    CHECK(vh.holds());

    TheoremVerdict broken;
    broken.predicted = Outcome::AlwaysEqual;
    broken.observed = Outcome::NeverEqual;
    CHECK_FALSE(broken.holds());
    broken.predicted = Outcome::ExistsEqual;
    broken.observed = Outcome::AlwaysEqual;
    broken.witness = std::vector<std::size_t>{0, 1};
    CHECK(broken.holds());
    broken.witness.reset();
    CHECK_FALSE(broken.holds());

    CHECK(to_string(Outcome::ExistsEqual) == "exists_equal");
}

TEST_CASE("minimal and Groebner families give the same singular locus and verdict") {
    auto b = ideal_of(kB);
    auto m = analyze_family(b, RelationFamily::Minimal);
    auto g = analyze_family(b, RelationFamily::Groebner, 4);
    CHECK(m.sigma == g.sigma);
    CHECK(m.verdict.observed == g.verdict.observed);
    CHECK(g.verdict.holds());
}
