#include "nashtoric/nash.hpp"

#include "nashtoric/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace nashtoric {

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::size_t> kept_columns(std::size_t nvars, MinorSelection k) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < nvars; ++c)
        if (c != k.first && c != k.second) cols.push_back(c);
    return cols;
}

// Over the integers a monomial vanishes exactly when a variable it uses does.
bool nonzero_at(const Monomial& m, std::span<const std::int64_t> point) {
    if (m.coeff == 0) return false;
    for (std::size_t i = 0; i < point.size(); ++i)
        if (m.exp[i] > 0 && point[i] == 0) return false;
    return true;
}

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

// Every minor is bounded by the product of the row norms (Hadamard). Below
// 2^62 all fraction-free elimination intermediates fit in int64.
bool hadamard_fits(const SmallMatrix& m) {
    long double bound = 1;
    for (const auto& row : m) {
        long double sq = 0;
        for (auto x : row) sq += static_cast<long double>(x) * static_cast<long double>(x);
        bound *= std::sqrt(sq);
    }
    return bound < 0x1p62L;
}

std::int64_t bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t prev) {
    __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    return static_cast<std::int64_t>(v / prev);
}

std::int64_t small_determinant(SmallMatrix a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = bareiss_step(a[i][j], a[k][k], a[i][k], a[k][j], prev);
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t small_rank(SmallMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a.front().size();
    std::size_t r = 0;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = bareiss_step(a[i][j], a[r][c], a[i][c], a[r][j], prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

Integer exact_determinant(const SmallMatrix& m) {
    if (hadamard_fits(m)) return small_determinant(m);
    IntMatrix big;
    for (const auto& row : m) big.emplace_back(row.begin(), row.end());
    return determinant(big);
}

std::vector<Binomial> pick(std::span<const Binomial> family, std::span<const std::size_t> subset) {
    std::vector<Binomial> out;
    out.reserve(subset.size());
    for (auto i : subset) out.push_back(family[i]);
    return out;
}

NashReport evaluate_subset(const ToricIdeal& ideal, std::span<const Binomial> family, std::vector<std::size_t> subset,
                           const OrbitSet& sigma) {
    NashReport rep;
    rep.subset = std::move(subset);
    auto rows = pick(family, rep.subset);
    rep.rank_ok = family_rank(rows) == ideal.r();
    if (!rep.rank_ok) return rep;
    rep.minors = nash_ideal(rows, ideal);
    for (const auto& mv : rep.minors) rep.fallbacks += mv.used_fallback ? 1 : 0;
    rep.zero_locus = zero_locus(std::span<const MinorValue>(rep.minors), ideal.semigroup);
    rep.equals_sigma = rep.zero_locus == sigma;
    return rep;
}

// A rank-valid subset with a minor that survives on the orbit missing from sigma.
bool qualifies_for_dim1(const NashReport& rep, const OrbitSet& sigma, const OrbitRepresentatives& reps) {
    if (!rep.rank_ok) return false;
    if (sigma.has_O1 && sigma.has_O2) return true;
    const auto& target = sigma.has_O1 ? reps.o2 : reps.o1;
    return std::any_of(rep.minors.begin(), rep.minors.end(),
                       [&](const MinorValue& mv) { return nonzero_at(mv.monomial, target); });
}

}  // namespace

std::vector<Binomial> relation_family(const ToricIdeal& ideal, RelationFamily family) {
    return family == RelationFamily::Minimal ? ideal.minimal_gens : ideal.gb.elements;
}

DifferenceMatrix difference_matrix(std::span<const Binomial> family, std::span<const LatticePoint> gens) {
    DifferenceMatrix dm;
    for (const auto& b : family) {
        auto row = b.difference();
        if (row.size() != gens.size()) throw Error(ErrorCode::LengthMismatch, "binomial length vs generator count");
        if (!semigroup_image(row, gens).is_zero()) throw Error(ErrorCode::NotARelation, "row is not a kernel vector");
        if (std::all_of(row.begin(), row.end(), [](std::int64_t x) { return x == 0; }))
            throw Error(ErrorCode::NotARelation, "zero row");
        dm.rows.push_back(std::move(row));
    }
    return dm;
}

std::size_t family_rank(std::span<const Binomial> family) {
    SmallMatrix m;
    for (const auto& b : family) m.push_back(b.difference());
    if (hadamard_fits(m)) return small_rank(std::move(m));
    IntMatrix big;
    for (const auto& row : m) big.emplace_back(row.begin(), row.end());
    return rank(std::move(big));
}

std::vector<MinorSelection> all_selections(std::size_t nvars) {
    std::vector<MinorSelection> out;
    for (std::size_t a = 0; a < nvars; ++a)
        for (std::size_t b = a + 1; b < nvars; ++b) out.push_back({a, b});
    return out;
}

Polynomial minor_symbolic(std::span<const Binomial> subset, MinorSelection excluded, const ToricIdeal& ideal) {
    const std::size_t n = ideal.N();
    auto cols = kept_columns(n, excluded);
    if (cols.size() != subset.size()) throw Error(ErrorCode::NotSquare, "subset size must be N - 2");
    PolyMatrix jac;
    for (const auto& b : subset) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(b.derivative(c));
        jac.push_back(std::move(row));
    }
    auto reduced = normal_form(determinant(jac), ideal.gb);
    if (reduced.size() > 1) throw Error(ErrorCode::NonMonomialResidue, "minor did not reduce to a single monomial");
    return reduced;
}

std::optional<MinorValue> minor_monomial_formula(std::span<const Binomial> subset, MinorSelection excluded,
                                                 const ToricIdeal& ideal) {
    const std::size_t n = ideal.N();
    auto cols = kept_columns(n, excluded);
    if (cols.size() != subset.size()) throw Error(ErrorCode::NotSquare, "subset size must be N - 2");

    SmallMatrix rk;
    for (const auto& b : subset) {
        auto d = b.difference();
        std::vector<std::int64_t> row;
        for (auto c : cols) row.push_back(d[c]);
        rk.push_back(std::move(row));
    }
    Integer det_rk = exact_determinant(rk);
    if (det_rk == 0) return std::nullopt;

    std::vector<std::int64_t> e(n, -1);
    for (const auto& b : subset)
        for (std::size_t i = 0; i < n; ++i) e[i] += b.plus[i];
    e[excluded.first] += 1;
    e[excluded.second] += 1;

    if (std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x >= 0; })) {
        ExponentVector ev(n);
        for (std::size_t i = 0; i < n; ++i) ev[i] = static_cast<Exponent>(e[i]);
        return MinorValue{excluded, det_rk, Monomial{det_rk, ev}, false};
    }

    auto sym = minor_symbolic(subset, excluded, ideal);
    auto mono = sym.as_monomial();
    if (!mono || mono->coeff != det_rk)
        throw Error(ErrorCode::TheoremViolation, "symbolic minor disagrees with det(R_K)");
    return MinorValue{excluded, det_rk, *mono, true};
}

std::vector<MinorValue> nash_ideal(std::span<const Binomial> subset, const ToricIdeal& ideal) {
    if (subset.size() != ideal.r()) throw Error(ErrorCode::Precondition, "subset must contain r binomials");
    if (family_rank(subset) != ideal.r()) throw Error(ErrorCode::RankDeficient, "Jacobian of the subset has rank < r");
    std::vector<MinorValue> out;
    for (auto k : all_selections(ideal.N()))
        if (auto mv = minor_monomial_formula(subset, k, ideal)) out.push_back(std::move(*mv));
    return out;
}

std::string describe(const OrbitSet& s) {
    if (!s.has_origin && !s.has_O1 && !s.has_O2) return "empty";
    if (s.has_O1 && s.has_O2) return "closure(O1) u closure(O2)";
    if (s.has_O1) return "closure(O1)";
    if (s.has_O2) return "closure(O2)";
    return "{0}";
}

OrbitRepresentatives orbit_representatives(const ValidatedSemigroup& vs) {
    const std::size_t n = vs.N();
    OrbitRepresentatives r;
    r.torus.assign(n, 1);
    r.origin.assign(n, 0);
    r.o1.assign(n, 0);
    r.o2.assign(n, 0);
    for (std::size_t i = 0; i < vs.l(); ++i) r.o2[i] = 1;
    for (std::size_t i = vs.l() + vs.m(); i < n; ++i) r.o1[i] = 1;
    return r;
}

OrbitSet zero_locus(std::span<const Monomial> monomials, const ValidatedSemigroup& vs) {
    if (monomials.empty()) throw Error(ErrorCode::EmptyIdeal, "no monomials");
    auto reps = orbit_representatives(vs);
    auto vanishes_everywhere_at = [&](const std::vector<std::int64_t>& p) {
        return std::none_of(monomials.begin(), monomials.end(), [&](const Monomial& m) { return nonzero_at(m, p); });
    };
    OrbitSet s;
    s.has_O1 = vanishes_everywhere_at(reps.o1);
    s.has_O2 = vanishes_everywhere_at(reps.o2);
    s.has_origin = vanishes_everywhere_at(reps.origin);
    return s;
}

OrbitSet zero_locus(std::span<const MinorValue> minors, const ValidatedSemigroup& vs) {
    std::vector<Monomial> monos;
    monos.reserve(minors.size());
    for (const auto& mv : minors) monos.push_back(mv.monomial);
    return zero_locus(std::span<const Monomial>(monos), vs);
}

OrbitSet singular_locus_from_minors(const ToricIdeal& ideal, RelationFamily family) {
    auto fam = relation_family(ideal, family);
    std::vector<Monomial> all;
    for (const auto& subset : combinations(fam.size(), ideal.r())) {
        auto rows = pick(fam, subset);
        if (family_rank(rows) != ideal.r()) continue;
        for (auto& mv : nash_ideal(rows, ideal)) all.push_back(std::move(mv.monomial));
    }
    if (all.empty()) throw Error(ErrorCode::TorusSingular, "every r x r minor vanishes on X");
    return zero_locus(std::span<const Monomial>(all), ideal.semigroup);
}

namespace {

OrbitSet jacobian_singular_locus(const ToricIdeal& ideal, std::span<const Binomial> fam) {
    auto reps = orbit_representatives(ideal.semigroup);
    const std::size_t n = ideal.N();

    auto jacobian_rank_at = [&](const std::vector<std::int64_t>& p) {
        IntMatrix m;
        for (const auto& b : fam) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < n; ++c) row.push_back(b.derivative(c).evaluate(p));
            m.push_back(std::move(row));
        }
        return rank(std::move(m));
    };

    if (jacobian_rank_at(reps.torus) < ideal.r())
        throw Error(ErrorCode::TorusSingular, "Jacobian rank drops at (1,...,1)");
    OrbitSet s;
    s.has_O1 = jacobian_rank_at(reps.o1) < ideal.r();
    s.has_O2 = jacobian_rank_at(reps.o2) < ideal.r();
    s.has_origin = jacobian_rank_at(reps.origin) < ideal.r();
    return s;
}

void check_against_minors(const OrbitSet& jacobian, const OrbitSet& minors) {
    if (!(jacobian == minors))
        throw Error(ErrorCode::TheoremViolation, "Jacobian-rank singular locus " + describe(jacobian) +
                                                     " differs from minor zero locus " + describe(minors));
}

// The zero locus of all minors of all subsets is the intersection of the per-subset loci.
OrbitSet intersect_loci(std::span<const NashReport> reports) {
    OrbitSet acc{true, true, true};
    bool any = false;
    for (const auto& r : reports) {
        if (!r.rank_ok) continue;
        any = true;
        acc.has_O1 = acc.has_O1 && r.zero_locus.has_O1;
        acc.has_O2 = acc.has_O2 && r.zero_locus.has_O2;
        acc.has_origin = acc.has_origin && r.zero_locus.has_origin;
    }
    if (!any) throw Error(ErrorCode::TorusSingular, "every r x r minor vanishes on X");
    return acc;
}

}  // namespace

OrbitSet singular_locus(const ToricIdeal& ideal, RelationFamily family) {
    auto fam = relation_family(ideal, family);
    auto s = jacobian_singular_locus(ideal, fam);
    check_against_minors(s, singular_locus_from_minors(ideal, family));
    return s;
}

std::vector<NashReport> search_all_subsets(const ToricIdeal& ideal, RelationFamily family, const OrbitSet& sigma,
                                           unsigned jobs) {
    auto fam = relation_family(ideal, family);
    auto subsets = combinations(fam.size(), ideal.r());
    std::vector<NashReport> out(subsets.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, subsets.size()))));

    if (jobs == 1) {
        for (std::size_t i = 0; i < subsets.size(); ++i) out[i] = evaluate_subset(ideal, fam, subsets[i], sigma);
        return out;
    }
    std::vector<std::exception_ptr> errors(jobs);
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < subsets.size(); i += jobs)
                        out[i] = evaluate_subset(ideal, fam, subsets[i], sigma);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<NashReport> search_all_subsets(const ToricIdeal& ideal, RelationFamily family, unsigned jobs) {
    auto sigma = jacobian_singular_locus(ideal, relation_family(ideal, family));
    auto reports = search_all_subsets(ideal, family, sigma, jobs);
    check_against_minors(sigma, intersect_loci(reports));
    return reports;
}

NashReport dim1_selector(const ToricIdeal& ideal, RelationFamily family) {
    auto sigma = singular_locus(ideal, family);
    if (sigma.dimension() != 1) throw Error(ErrorCode::Precondition, "singular locus is not one-dimensional");
    auto fam = relation_family(ideal, family);
    auto reps = orbit_representatives(ideal.semigroup);
    for (auto& subset : combinations(fam.size(), ideal.r())) {
        auto rep = evaluate_subset(ideal, fam, std::move(subset), sigma);
        if (!qualifies_for_dim1(rep, sigma, reps)) continue;
        if (!rep.equals_sigma)
            throw Error(ErrorCode::TheoremViolation, "selected subset does not cut out the singular locus");
        return rep;
    }
    throw Error(ErrorCode::NotFound, "no r-subset has a minor supported on a single edge block");
}

CiClassification classify_ci(const ToricIdeal& ideal) {
    return {ideal.N() == 3, ideal.s_min() == ideal.N() - 2};
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::AlwaysEqual: return "always_equal";
        case Outcome::ExistsEqual: return "exists_equal";
        case Outcome::NeverEqual: return "never_equal";
        case Outcome::OutOfScope: return "out_of_scope";
    }
    return "unknown";
}

bool TheoremVerdict::holds() const {
    if (!containment_ok || ci_anomaly) return false;
    switch (predicted) {
        case Outcome::OutOfScope: return true;
        case Outcome::AlwaysEqual: return observed == Outcome::AlwaysEqual;
        case Outcome::ExistsEqual:
            return witness.has_value() && (observed == Outcome::ExistsEqual || observed == Outcome::AlwaysEqual);
        case Outcome::NeverEqual: return observed == Outcome::NeverEqual;
    }
    return false;
}

TheoremVerdict evaluate_main_theorem(const ToricIdeal& ideal, const OrbitSet& sigma,
                                     std::span<const NashReport> reports) {
    TheoremVerdict v;
    v.sigma = sigma;
    auto ci = classify_ci(ideal);
    v.is_hypersurface = ci.is_hypersurface;
    v.is_complete_intersection = ci.is_complete_intersection;

    std::size_t valid = 0, equal = 0;
    for (const auto& rep : reports) {
        if (!rep.rank_ok) continue;
        ++valid;
        equal += rep.equals_sigma ? 1 : 0;
        if (!sigma.subset_of(rep.zero_locus)) v.containment_ok = false;
    }
    v.observed = (valid > 0 && equal == valid) ? Outcome::AlwaysEqual
                 : equal > 0                   ? Outcome::ExistsEqual
                                               : Outcome::NeverEqual;
    if (!v.containment_ok) v.notes.push_back("singular locus not contained in some zero locus");

    if (!sigma.has_origin) {
        v.predicted = Outcome::OutOfScope;
        v.notes.push_back("origin is a smooth point: standing hypothesis (vii) fails");
    } else if (sigma.has_O1 && sigma.has_O2) {
        v.predicted = Outcome::AlwaysEqual;
        auto it = std::find_if(reports.begin(), reports.end(), [](const NashReport& r) { return r.rank_ok; });
        if (it != reports.end()) v.witness = it->subset;
    } else if (sigma.dimension() == 1) {
        v.predicted = Outcome::ExistsEqual;
        auto reps = orbit_representatives(ideal.semigroup);
        auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const NashReport& r) { return qualifies_for_dim1(r, sigma, reps); });
        if (it != reports.end() && it->equals_sigma) v.witness = it->subset;
        if (!v.witness) v.notes.push_back("no subset with a minor supported on a single edge block");
    } else if (ci.is_complete_intersection) {
        v.predicted = Outcome::OutOfScope;
        v.notes.push_back("complete intersection with isolated singularity");
        if (!ci.is_hypersurface) {
            v.ci_anomaly = true;
            v.notes.push_back("complete intersection with isolated singularity that is not a hypersurface");
        }
    } else {
        v.predicted = Outcome::NeverEqual;
    }
    return v;
}

FamilyAnalysis analyze_family(const ToricIdeal& ideal, RelationFamily family, unsigned jobs) {
    FamilyAnalysis a;
    a.sigma = jacobian_singular_locus(ideal, relation_family(ideal, family));
    a.reports = search_all_subsets(ideal, family, a.sigma, jobs);
    check_against_minors(a.sigma, intersect_loci(a.reports));
    a.verdict = evaluate_main_theorem(ideal, a.sigma, a.reports);
    return a;
}

TheoremVerdict verify_main_theorem(const ToricIdeal& ideal, RelationFamily family, unsigned jobs) {
    auto v = analyze_family(ideal, family, jobs).verdict;
    if (!v.holds())
        throw Error(ErrorCode::TheoremViolation, "predicted " + std::string(to_string(v.predicted)) + ", observed " +
                                                     std::string(to_string(v.observed)));
    return v;
}

}  // namespace nashtoric
