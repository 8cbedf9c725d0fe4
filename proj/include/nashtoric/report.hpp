#pragma once

// Batch front end: input documents, the run report, and its two renderings.

#include "nashtoric/nash.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nashtoric {

enum class OrderKind { Lex, DegRevLex };

struct InputSpec {
    GeneratorSet generators;
    OrderKind order = OrderKind::Lex;
    /// One name per generator, in input order.
    std::optional<std::vector<std::string>> names;
    RelationFamily family = RelationFamily::Minimal;
};

/// JSON document {"generators": [[u,v],...], "order": "lex"|"degrevlex",
/// "names": [...], "family": "minimal"|"groebner"}. Only "generators" is
/// required. Integers must be exact; floats, unknown keys and malformed
/// values throw Error(Parse).
InputSpec parse_input(std::string_view text);

std::string_view to_string(OrderKind k);
std::string_view to_string(RelationFamily f);
OrderKind parse_order(std::string_view s);
RelationFamily parse_family(std::string_view s);

TermOrder make_order(OrderKind k, std::size_t nvars);

/// Variable names in canonical order: user names permuted along with the
/// generators, or x1.. y1.. z1.. by default.
std::vector<std::string> canonical_names(const ValidatedSemigroup& vs, const std::optional<std::vector<std::string>>& input_names);

struct RunReport {
    InputSpec input;
    ValidatedSemigroup semigroup;
    std::vector<std::string> names;  // canonical order
    ToricIdeal ideal;
    OrbitSet sigma;
    CiClassification ci;
    std::vector<NashReport> subsets;
    TheoremVerdict verdict;
    std::vector<std::string> warnings;

    /// The minimal and Groebner families disagreed (only checked with --family groebner).
    bool family_mismatch = false;
    bool violation() const { return !verdict.holds() || family_mismatch; }
};

/// Throws on validation failure; a theorem mismatch is recorded, not thrown.
RunReport analyze(const InputSpec& input, unsigned jobs = 1);

/// Validation summary, e.g. "l=1 m=2 n=1 N=4 r=2" followed by the canonical order.
std::string render_validation(const ValidatedSemigroup& vs, const std::vector<std::string>& names);

std::string render_human(const RunReport& report);
/// Deterministic JSON (2-space indent, fixed key order).
std::string render_json(const RunReport& report);

}  // namespace nashtoric
