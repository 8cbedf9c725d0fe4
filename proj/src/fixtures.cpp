#include "nashtoric/fixtures.hpp"

#include "nashtoric/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nashtoric {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const char* const kFixtureA = R"({
  "name": "A",
  "input": {"generators": [[1,0],[1,1],[1,2],[1,3]], "names": ["x1","x2","x3","x4"]},
  "expect": {
    "ideal": ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"],
    "s_min": 3,
    "sigma": {"O1": false, "O2": false},
    "hypersurface": false,
    "complete_intersection": false,
    "predicted": "never_equal",
    "observed": "never_equal",
    "subset_count": 3,
    "nash_ideals": [
      {"rows": [1,2], "monomials": ["x1^2", "x1*x2", "x1*x3", "x1*x4", "x2*x4"]},
      {"rows": [1,3], "monomials": ["x1*x2", "x1*x3", "x1*x4", "x2*x4", "x3*x4"]},
      {"rows": [2,3], "monomials": ["x1*x3", "x1*x4", "x2*x4", "x3*x4", "x4^2"]}
    ]
  }
})";

const char* const kFixtureB = R"({
  "name": "B",
  "input": {"generators": [[2,0],[3,0],[2,6],[0,4],[0,5]], "names": ["x","y","z","w","t"]},
  "expect": {
    "ideal": ["w^5 - t^4", "y^2*t^6 - z^3*w^3", "y^2*w^2*t^2 - z^3", "x*t^2 - z*w", "x*w^4 - z*t^2",
              "x*z^2 - y^2*w^3", "x^2*w^3 - z^2", "x^2*z*w - y^2*t^2", "x^3 - y^2"],
    "sigma": {"O1": true, "O2": true},
    "hypersurface": false,
    "complete_intersection": false,
    "predicted": "always_equal",
    "observed": "always_equal"
  }
})";

const char* const kFixtureC = R"({
  "name": "C",
  "input": {"generators": [[2,0],[1,2],[0,3],[0,5]], "names": ["x","y","z","w"]},
  "expect": {
    "ideal": ["z^5 - w^3", "x*w^2 - y^2*z^2", "x*z^3 - y^2*w", "x^2*z*w - y^4"],
    "s_min": 4,
    "sigma": {"O1": false, "O2": true},
    "hypersurface": false,
    "complete_intersection": false,
    "predicted": "exists_equal",
    "witness": [1,2],
    "nash_ideals": [
      {"rows": [1,2], "zero_locus": {"O1": false, "O2": true}}
    ]
  }
})";

Outcome parse_outcome(const std::string& s) {
    for (auto o : {Outcome::AlwaysEqual, Outcome::ExistsEqual, Outcome::NeverEqual, Outcome::OutOfScope})
        if (to_string(o) == s) return o;
    parse_error("unknown outcome '" + s + "'");
}

OrbitSet parse_orbits(const json& j) {
    if (!j.is_object()) parse_error("orbit set must be an object");
    OrbitSet s;
    s.has_O1 = j.value("O1", false);
    s.has_O2 = j.value("O2", false);
    s.has_origin = j.value("origin", true);
    return s;
}

std::vector<std::size_t> parse_rows(const json& j) {
    if (!j.is_array()) parse_error("rows must be an array");
    std::vector<std::size_t> rows;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1) parse_error("rows are positive integers");
        rows.push_back(v.get<std::size_t>());
    }
    return rows;
}

std::vector<std::string> parse_strings(const json& j, const char* what) {
    if (!j.is_array()) parse_error(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) parse_error(std::string(what) + " must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::string rows_text(const std::vector<std::size_t>& rows) {
    std::string out = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? "," : "") + std::to_string(rows[i]);
    return out + "}";
}

std::string list_text(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
    return out + "]";
}

bool same_binomial(const Binomial& a, const Binomial& b) {
    return (a.plus == b.plus && a.minus == b.minus) || (a.plus == b.minus && a.minus == b.plus);
}

class Checker {
public:
    Checker(const Fixture& f, const RunReport& r) : f_(f), r_(r) {}

    std::vector<std::string> run() {
        parse_expected_ideal();
        check_ideal();
        check_scalars();
        check_witness();
        for (const auto& m : f_.expect.nash_ideals) check_minors(m);
        return std::move(diffs_);
    }

private:
    void diff(std::string s) { diffs_.push_back(std::move(s)); }

    void parse_expected_ideal() {
        for (const auto& text : f_.expect.ideal) {
            auto [a, b] = parse_binomial(text, r_.names);
            auto bin = Binomial::make(a, b, r_.ideal.gb.order);
            if (!bin) parse_error("expected binomial '" + text + "' is zero");
            rows_.push_back(*bin);
        }
    }

    std::vector<std::string> rendered(const std::vector<Binomial>& bs) const {
        std::vector<std::string> out;
        for (const auto& b : bs) out.push_back(render(b, r_.names));
        return out;
    }

    void check_ideal() {
        if (rows_.empty()) return;
        auto expected = buchberger(rows_, r_.ideal.gb.order);
        if (!(expected == r_.ideal.gb))
            diff("ideal: expected reduced basis " + list_text(rendered(expected.elements)) + ", computed " +
                 list_text(rendered(r_.ideal.gb.elements)));
        if (f_.expect.s_min && *f_.expect.s_min != r_.ideal.s_min())
            diff("s_min: expected " + std::to_string(*f_.expect.s_min) + ", computed " + std::to_string(r_.ideal.s_min()));
    }

    void check_scalars() {
        const auto& e = f_.expect;
        if (e.sigma && !(*e.sigma == r_.sigma))
            diff("singular locus: expected " + describe(*e.sigma) + ", computed " + describe(r_.sigma));
        auto flag = [&](const char* name, std::optional<bool> want, bool got) {
            if (want && *want != got)
                diff(std::string(name) + ": expected " + (*want ? "true" : "false") + ", computed " + (got ? "true" : "false"));
        };
        flag("hypersurface", e.hypersurface, r_.ci.is_hypersurface);
        flag("complete_intersection", e.complete_intersection, r_.ci.is_complete_intersection);
        auto outcome = [&](const char* name, std::optional<Outcome> want, Outcome got) {
            if (want && *want != got)
                diff(std::string(name) + ": expected " + std::string(to_string(*want)) + ", computed " +
                     std::string(to_string(got)));
        };
        outcome("predicted", e.predicted, r_.verdict.predicted);
        outcome("observed", e.observed, r_.verdict.observed);
        if (!r_.verdict.holds()) diff("verdict does not hold");
        if (e.subset_count && *e.subset_count != r_.subsets.size())
            diff("subset count: expected " + std::to_string(*e.subset_count) + ", computed " +
                 std::to_string(r_.subsets.size()));
    }

    // The computed witness indexes the relation family; translate to expected rows.
    void check_witness() {
        if (!f_.expect.witness) return;
        if (!r_.verdict.witness) {
            diff("witness: expected " + rows_text(*f_.expect.witness) + ", none found");
            return;
        }
        auto family = relation_family(r_.ideal, r_.input.family);
        std::vector<std::size_t> rows;
        for (auto i : *r_.verdict.witness) {
            auto it = std::find_if(rows_.begin(), rows_.end(), [&](const Binomial& b) { return same_binomial(b, family[i]); });
            if (it == rows_.end()) {
                diff("witness: computed relation " + render(family[i], r_.names) + " is not an expected row");
                return;
            }
            rows.push_back(static_cast<std::size_t>(it - rows_.begin()) + 1);
        }
        std::sort(rows.begin(), rows.end());
        if (rows != *f_.expect.witness)
            diff("witness: expected " + rows_text(*f_.expect.witness) + ", computed " + rows_text(rows));
    }

    // Minors of the searched subset made of exactly these relations, if there is one.
    std::optional<std::vector<MinorValue>> reported_minors(const std::vector<Binomial>& subset) const {
        auto family = relation_family(r_.ideal, r_.input.family);
        for (const auto& rep : r_.subsets) {
            if (rep.subset.size() != subset.size() || !rep.rank_ok) continue;
            bool same = std::all_of(subset.begin(), subset.end(), [&](const Binomial& b) {
                return std::any_of(rep.subset.begin(), rep.subset.end(),
                                   [&](std::size_t i) { return same_binomial(b, family[i]); });
            });
            if (same) return rep.minors;
        }
        return std::nullopt;
    }

    void check_minors(const ExpectedMinors& m) {
        std::vector<Binomial> subset;
        for (auto row : m.rows) {
            if (row > rows_.size()) parse_error("row " + std::to_string(row) + " is out of range");
            subset.push_back(rows_[row - 1]);
        }
        const auto label = "J" + rows_text(m.rows);
        if (subset.size() != r_.ideal.r() || family_rank(subset) != r_.ideal.r()) {
            diff(label + ": rows do not form a rank-r subset");
            return;
        }
        auto minors = reported_minors(subset).value_or(std::vector<MinorValue>{});
        if (minors.empty()) minors = nash_ideal(subset, r_.ideal);
        const auto& gb = r_.ideal.gb.elements;

        if (m.monomials) {
            std::set<ExponentVector> got, want;
            for (const auto& mv : minors) got.insert(normal_form(mv.monomial.exp, gb));
            for (const auto& t : *m.monomials) want.insert(normal_form(parse_monomial(t, r_.names), gb));
            if (got != want) {
                std::vector<std::string> g, w;
                for (const auto& e : got) g.push_back(render(e, r_.names));
                for (const auto& e : want) w.push_back(render(e, r_.names));
                diff(label + ": expected monomials (reduced) " + list_text(w) + ", computed " + list_text(g));
            }
        }
        if (m.zero_locus) {
            auto z = zero_locus(std::span<const MinorValue>(minors), r_.semigroup);
            if (!(z == *m.zero_locus))
                diff(label + ": expected zero locus " + describe(*m.zero_locus) + ", computed " + describe(z));
        }
    }

    const Fixture& f_;
    const RunReport& r_;
    std::vector<Binomial> rows_;
    std::vector<std::string> diffs_;
};

Fixture parse_fixture_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed fixture JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("input") || !doc.contains("expect"))
        parse_error("fixture needs 'input' and 'expect' objects");

    Fixture f;
    f.name = doc.value("name", std::string("unnamed"));
    f.input = parse_input(doc["input"].dump());

    const auto& e = doc["expect"];
    if (!e.is_object()) parse_error("'expect' must be an object");
    auto& x = f.expect;
    if (e.contains("ideal")) x.ideal = parse_strings(e["ideal"], "ideal");
    if (e.contains("s_min")) x.s_min = e["s_min"].get<std::size_t>();
    if (e.contains("sigma")) x.sigma = parse_orbits(e["sigma"]);
    if (e.contains("hypersurface")) x.hypersurface = e["hypersurface"].get<bool>();
    if (e.contains("complete_intersection")) x.complete_intersection = e["complete_intersection"].get<bool>();
    if (e.contains("predicted")) x.predicted = parse_outcome(e["predicted"].get<std::string>());
    if (e.contains("observed")) x.observed = parse_outcome(e["observed"].get<std::string>());
    if (e.contains("witness")) x.witness = parse_rows(e["witness"]);
    if (e.contains("subset_count")) x.subset_count = e["subset_count"].get<std::size_t>();
    if (e.contains("nash_ideals")) {
        for (const auto& m : e["nash_ideals"]) {
            ExpectedMinors em;
            em.rows = parse_rows(m.at("rows"));
            if (m.contains("monomials")) em.monomials = parse_strings(m["monomials"], "monomials");
            if (m.contains("zero_locus")) em.zero_locus = parse_orbits(m["zero_locus"]);
            x.nash_ideals.push_back(std::move(em));
        }
    }
    return f;
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
    try {
        return parse_fixture_document(text);
    } catch (const json::exception& e) {
        parse_error(std::string("bad fixture field: ") + e.what());
    }
}

std::vector<Fixture> builtin_fixtures() {
    return {parse_fixture(kFixtureA), parse_fixture(kFixtureB), parse_fixture(kFixtureC)};
}

std::vector<Fixture> load_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) parse_error("corpus directory '" + dir.string() + "' does not exist");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    if (files.empty()) parse_error("corpus directory '" + dir.string() + "' has no .json fixtures");
    std::sort(files.begin(), files.end());

    std::vector<Fixture> out;
    for (const auto& p : files) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            out.push_back(parse_fixture(ss.str()));
        } catch (const Error& e) {
            parse_error(p.filename().string() + ": " + e.what());
        }
    }
    return out;
}

FixtureResult check_fixture(const Fixture& f, const RunReport& report) {
    FixtureResult res{f.name, {}};
    try {
        res.diffs = Checker(f, report).run();
    } catch (const Error& e) {
        res.diffs.push_back(std::string("check failed: ") + e.what());
    }
    return res;
}

FixtureResult run_fixture(const Fixture& f, unsigned jobs) {
    try {
        return check_fixture(f, analyze(f.input, jobs));
    } catch (const Error& e) {
        return FixtureResult{f.name, {std::string("analysis failed: ") + e.what()}};
    }
}

}  // namespace nashtoric
