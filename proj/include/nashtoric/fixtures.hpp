#pragma once

// Regression fixtures: an input plus expected ideal, orbit sets and verdicts.
//
// Expected binomials and monomials are written with the fixture's variable
// names. Rows are 1-based positions in the expected ideal list. Monomial sets
// are compared after reduction modulo the computed ideal, so any congruent
// representative may be listed.

#include "nashtoric/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nashtoric {

struct ExpectedMinors {
    std::vector<std::size_t> rows;
    std::optional<std::vector<std::string>> monomials;
    std::optional<OrbitSet> zero_locus;
};

struct FixtureExpectation {
    std::vector<std::string> ideal;
    std::optional<std::size_t> s_min;
    std::optional<OrbitSet> sigma;
    std::optional<bool> hypersurface;
    std::optional<bool> complete_intersection;
    std::optional<Outcome> predicted;
    std::optional<Outcome> observed;
    std::optional<std::vector<std::size_t>> witness;
    std::optional<std::size_t> subset_count;
    std::vector<ExpectedMinors> nash_ideals;
};

struct Fixture {
    std::string name;
    InputSpec input;
    FixtureExpectation expect;
};

/// {"name": ..., "input": {InputSpec keys}, "expect": {...}}; throws Error(Parse).
Fixture parse_fixture(std::string_view text);

std::vector<Fixture> builtin_fixtures();

/// Every *.json file in `dir`, by file name. Throws Error(Parse) if there are none.
std::vector<Fixture> load_corpus(const std::filesystem::path& dir);

struct FixtureResult {
    std::string name;
    std::vector<std::string> diffs;
    bool ok() const { return diffs.empty(); }
};

/// Compares a finished run against the fixture's expectations.
FixtureResult check_fixture(const Fixture& f, const RunReport& report);
/// analyze() followed by check_fixture(); errors become diffs.
FixtureResult run_fixture(const Fixture& f, unsigned jobs = 1);

}  // namespace nashtoric
