#pragma once

// Jacobian minors of toric surface equations, their zero loci as unions of
// torus-orbit closures, the singular locus, and the exhaustive check of which
// r-subsets of a relation family cut out exactly the singular locus.

#include "nashtoric/algebra.hpp"
#include "nashtoric/toric_ideal.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nashtoric {

enum class RelationFamily { Minimal, Groebner };

/// The relation family f_1..f_s searched over.
std::vector<Binomial> relation_family(const ToricIdeal& ideal, RelationFamily family);

/// Row per binomial: plus - minus.
struct DifferenceMatrix {
    std::vector<std::vector<std::int64_t>> rows;
};

/// Throws NotARelation if some row is not in the kernel of the generator matrix.
DifferenceMatrix difference_matrix(std::span<const Binomial> family, std::span<const LatticePoint> gens);

/// Rank over Q of the difference matrix; equals the generic rank of the Jacobian.
std::size_t family_rank(std::span<const Binomial> family);

/// The two deleted Jacobian columns, first < second.
struct MinorSelection {
    std::size_t first = 0;
    std::size_t second = 1;

    friend auto operator<=>(const MinorSelection&, const MinorSelection&) = default;
};

std::vector<MinorSelection> all_selections(std::size_t nvars);

struct MinorValue {
    MinorSelection excluded;
    Integer det_rk;     // det of the difference matrix with the excluded columns deleted
    Monomial monomial;  // det_rk * x^E, a representative of the minor modulo the toric ideal
    bool used_fallback = false;
};

/// Fast path: det(R_K) * x^(sum of leading exponents - 1 + indicator(K)).
/// Falls back to `minor_symbolic` when that exponent has a negative entry.
/// Returns nullopt when det(R_K) = 0.
std::optional<MinorValue> minor_monomial_formula(std::span<const Binomial> subset, MinorSelection excluded,
                                                 const ToricIdeal& ideal);

/// Oracle path: symbolic Jacobian minor reduced to normal form. Throws
/// NonMonomialResidue if the residue has more than one term.
Polynomial minor_symbolic(std::span<const Binomial> subset, MinorSelection excluded, const ToricIdeal& ideal);

/// All nonzero minors of an r-subset; throws RankDeficient if its rank is below r.
std::vector<MinorValue> nash_ideal(std::span<const Binomial> subset, const ToricIdeal& ideal);

/// Union of orbit closures. The dense torus is never part of a proper zero locus.
struct OrbitSet {
    bool has_O1 = false;  // closure of the orbit through (0_l, 0_m, 1_n)
    bool has_O2 = false;  // closure of the orbit through (1_l, 0_m, 0_n)
    bool has_origin = true;

    int dimension() const { return (has_O1 || has_O2) ? 1 : (has_origin ? 0 : -1); }
    bool subset_of(const OrbitSet& o) const {
        return (!has_O1 || o.has_O1) && (!has_O2 || o.has_O2) && (!has_origin || o.has_origin);
    }
    friend bool operator==(const OrbitSet&, const OrbitSet&) = default;
};

std::string describe(const OrbitSet& s);

/// Representative points of the four orbits.
struct OrbitRepresentatives {
    std::vector<std::int64_t> torus;   // (1, ..., 1)
    std::vector<std::int64_t> o1;      // (0_l, 0_m, 1_n)
    std::vector<std::int64_t> o2;      // (1_l, 0_m, 0_n)
    std::vector<std::int64_t> origin;  // (0, ..., 0)
};
OrbitRepresentatives orbit_representatives(const ValidatedSemigroup& vs);

/// Throws EmptyIdeal for an empty list.
OrbitSet zero_locus(std::span<const Monomial> monomials, const ValidatedSemigroup& vs);
OrbitSet zero_locus(std::span<const MinorValue> minors, const ValidatedSemigroup& vs);

/// Jacobian rank test at the orbit representatives, cross-checked against the
/// zero locus of all r x r minors. Throws TorusSingular or TheoremViolation.
OrbitSet singular_locus(const ToricIdeal& ideal, RelationFamily family = RelationFamily::Minimal);
/// The minors-only path used as the cross-check above.
OrbitSet singular_locus_from_minors(const ToricIdeal& ideal, RelationFamily family = RelationFamily::Minimal);

struct NashReport {
    std::vector<std::size_t> subset;  // 0-based indices into the relation family
    bool rank_ok = false;
    std::vector<MinorValue> minors;
    OrbitSet zero_locus;
    bool equals_sigma = false;
    std::size_t fallbacks = 0;
};

/// Evaluates every r-subset, in lexicographic index order. `jobs` > 1 spreads
/// subsets over threads; the output order does not depend on it.
std::vector<NashReport> search_all_subsets(const ToricIdeal& ideal, RelationFamily family, const OrbitSet& sigma,
                                           unsigned jobs = 1);
std::vector<NashReport> search_all_subsets(const ToricIdeal& ideal, RelationFamily family = RelationFamily::Minimal,
                                           unsigned jobs = 1);

/// Constructive choice for dim(sigma) = 1. Throws Precondition when dim(sigma) = 0
/// and NotFound if no subset qualifies.
NashReport dim1_selector(const ToricIdeal& ideal, RelationFamily family = RelationFamily::Minimal);

struct CiClassification {
    bool is_hypersurface = false;
    bool is_complete_intersection = false;
};
CiClassification classify_ci(const ToricIdeal& ideal);

enum class Outcome { AlwaysEqual, ExistsEqual, NeverEqual, OutOfScope };
std::string_view to_string(Outcome o);

struct TheoremVerdict {
    OrbitSet sigma;
    bool is_hypersurface = false;
    bool is_complete_intersection = false;
    Outcome predicted = Outcome::OutOfScope;
    Outcome observed = Outcome::NeverEqual;
    std::optional<std::vector<std::size_t>> witness;
    bool containment_ok = true;  // sigma inside every rank-valid zero locus
    bool ci_anomaly = false;     // isolated-singularity complete intersection with N > 3
    std::vector<std::string> notes;

    /// predicted agrees with observed (every subset equal also satisfies "some subset equal").
    bool holds() const;
};

TheoremVerdict evaluate_main_theorem(const ToricIdeal& ideal, const OrbitSet& sigma,
                                     std::span<const NashReport> reports);

struct FamilyAnalysis {
    OrbitSet sigma;
    std::vector<NashReport> reports;
    TheoremVerdict verdict;
};

/// Singular locus, exhaustive search and verdict in one pass. Throws
/// TheoremViolation only if the Jacobian-rank and minor descriptions of the
/// singular locus disagree; a failed verdict is left for the caller.
FamilyAnalysis analyze_family(const ToricIdeal& ideal, RelationFamily family = RelationFamily::Minimal,
                              unsigned jobs = 1);

/// Full check; throws TheoremViolation when the verdict does not hold.
TheoremVerdict verify_main_theorem(const ToricIdeal& ideal, RelationFamily family = RelationFamily::Minimal,
                                   unsigned jobs = 1);

}  // namespace nashtoric
