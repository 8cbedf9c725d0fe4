// Cross-module properties over seeded random semigroups.

#include "nashtoric/nash.hpp"

#include "random_semigroups.hpp"

#include <doctest.h>

#include <boost/math/special_functions/binomial.hpp>

#include <vector>

using namespace nashtoric;

namespace {

struct Case {
    ToricIdeal ideal;
    OrbitSet sigma;
    std::vector<NashReport> reports;
};

const std::vector<Case>& population() {
    static const std::vector<Case> cases = [] {
        std::vector<Case> out;
        for (const auto& vs : testsupport::random_semigroups(2024, 50)) {
            auto ideal = toric_ideal(vs, default_order(vs.N()));
            auto sigma = singular_locus(ideal);
            auto reports = search_all_subsets(ideal, RelationFamily::Minimal, sigma);
            out.push_back({std::move(ideal), sigma, std::move(reports)});
        }
        return out;
    }();
    return cases;
}

std::vector<Binomial> chosen(const ToricIdeal& ideal, const NashReport& r) {
    auto family = relation_family(ideal, RelationFamily::Minimal);
    std::vector<Binomial> out;
    for (auto i : r.subset) out.push_back(family[i]);
    return out;
}

bool vanishes(const ExponentVector& e, const std::vector<std::int64_t>& p) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && p[i] == 0) return true;
    return false;
}

bool pure(const ExponentVector& e, const ValidatedSemigroup& vs, Block b) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && vs.block_of(i) != b) return false;
    return true;
}

}  // namespace

TEST_CASE("fast minor formula agrees with the symbolic determinant") {
    for (const auto& c : population()) {
        for (const auto& r : c.reports) {
            auto sub = chosen(c.ideal, r);
            for (const auto& k : all_selections(c.ideal.N())) {
                auto fast = minor_monomial_formula(sub, k, c.ideal);
                auto slow = minor_symbolic(sub, k, c.ideal);
                if (!fast) {
                    CHECK(slow.is_zero());
                    continue;
                }
                CHECK(slow == normal_form(Polynomial::monomial(fast->monomial.exp, fast->monomial.coeff), c.ideal.gb));
            }
        }
    }
}

TEST_CASE("rank r exactly when some minor survives") {
    for (const auto& c : population()) {
        for (const auto& r : c.reports) {
            auto sub = chosen(c.ideal, r);
            bool some = false;
            for (const auto& k : all_selections(c.ideal.N())) some = some || !minor_symbolic(sub, k, c.ideal).is_zero();
            CHECK((family_rank(sub) == c.ideal.r()) == some);
            CHECK(r.rank_ok == some);
            if (r.rank_ok) CHECK_FALSE(r.minors.empty());
        }
    }
}

TEST_CASE("singular locus lies inside every minor zero locus") {
    for (const auto& c : population())
        for (const auto& r : c.reports)
            if (r.rank_ok) CHECK(c.sigma.subset_of(r.zero_locus));
}

TEST_CASE("vanishing at orbit representatives does not depend on the representative monomial") {
    for (const auto& c : population()) {
        auto reps = orbit_representatives(c.ideal.semigroup);
        for (const auto& r : c.reports)
            for (const auto& m : r.minors) {
                auto nf = normal_form(m.monomial.exp, c.ideal.gb.elements);
                for (const auto* p : {&reps.torus, &reps.o1, &reps.o2, &reps.origin})
                    CHECK(vanishes(m.monomial.exp, *p) == vanishes(nf, *p));
            }
    }
}

TEST_CASE("isolated singularities: no minor ideal has both pure edge monomials") {
    for (const auto& c : population()) {
        if (c.sigma.dimension() != 0 || c.ideal.s_min() == 1) continue;
        const auto& vs = c.ideal.semigroup;
        for (const auto& r : c.reports) {
            if (!r.rank_ok) continue;
            bool x = false, z = false;
            for (const auto& m : r.minors) {
                x = x || pure(m.monomial.exp, vs, Block::Edge1);
                z = z || pure(m.monomial.exp, vs, Block::Edge2);
            }
            CHECK_FALSE((x && z));
        }
    }
}

TEST_CASE("orbit representatives lie on the surface") {
    for (const auto& c : population()) {
        auto reps = orbit_representatives(c.ideal.semigroup);
        for (const auto& g : c.ideal.gb.elements)
            for (const auto* p : {&reps.torus, &reps.o1, &reps.o2, &reps.origin})
                CHECK(g.to_polynomial().evaluate(*p) == 0);
    }
}

TEST_CASE("singular locus does not depend on the relation family") {
    for (const auto& c : population()) {
        auto subsets = boost::math::binomial_coefficient<double>(static_cast<unsigned>(c.ideal.gb.elements.size()),
                                                                 static_cast<unsigned>(c.ideal.r()));
        if (subsets > 3000) continue;
        CHECK(singular_locus(c.ideal, RelationFamily::Groebner) == c.sigma);
        CHECK(singular_locus_from_minors(c.ideal, RelationFamily::Groebner) == c.sigma);
    }
}
