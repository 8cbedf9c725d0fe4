#include "nashtoric/report.hpp"

#include "nashtoric/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace nashtoric {

using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kMaxCoordinate = 1'000'000;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

std::int64_t exact_integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxCoordinate))
            parse_error(where + " is out of range");
        auto x = v.get<std::int64_t>();
        if (x > kMaxCoordinate || x < -kMaxCoordinate) parse_error(where + " is out of range");
        return x;
    }
    if (v.is_number_float()) parse_error(where + " must be an integer, got a float");
    parse_error(where + " must be an integer");
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::size_t> one_based(std::span<const std::size_t> v) {
    std::vector<std::size_t> out;
    for (auto i : v) out.push_back(i + 1);
    return out;
}

json integer_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(x));
    return json(x.str());
}

json exponents_json(const ExponentVector& e) { return json(std::vector<Exponent>(e.begin(), e.end())); }

json binomial_json(const Binomial& b, const std::vector<std::string>& names) {
    return json{{"text", render(b, names)}, {"plus", exponents_json(b.plus)}, {"minus", exponents_json(b.minus)}};
}

json orbit_json(const OrbitSet& s) {
    return json{{"O1", s.has_O1}, {"O2", s.has_O2}, {"origin", s.has_origin}, {"text", describe(s)}};
}

std::string rows_text(std::span<const std::size_t> subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) out += (i ? "," : "") + std::to_string(subset[i] + 1);
    return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string_view to_string(OrderKind k) { return k == OrderKind::Lex ? "lex" : "degrevlex"; }
std::string_view to_string(RelationFamily f) { return f == RelationFamily::Minimal ? "minimal" : "groebner"; }

OrderKind parse_order(std::string_view s) {
    if (s == "lex") return OrderKind::Lex;
    if (s == "degrevlex") return OrderKind::DegRevLex;
    parse_error("order must be lex or degrevlex, got '" + std::string(s) + "'");
}

RelationFamily parse_family(std::string_view s) {
    if (s == "minimal") return RelationFamily::Minimal;
    if (s == "groebner") return RelationFamily::Groebner;
    parse_error("family must be minimal or groebner, got '" + std::string(s) + "'");
}

TermOrder make_order(OrderKind k, std::size_t nvars) {
    return k == OrderKind::Lex ? default_order(nvars) : TermOrder::degrevlex(nvars);
}

InputSpec parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) parse_error("top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "generators" && key != "order" && key != "names" && key != "family")
            parse_error("unknown key '" + key + "'");

    InputSpec in;
    if (!doc.contains("generators")) parse_error("missing key 'generators'");
    const auto& gens = doc["generators"];
    if (!gens.is_array()) parse_error("'generators' must be an array of integer pairs");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        auto where = "generators[" + std::to_string(i) + "]";
        if (!g.is_array() || g.size() != 2) parse_error(where + " must be a pair [u, v]");
        in.generators.push_back({exact_integer(g[0], where + "[0]"), exact_integer(g[1], where + "[1]")});
    }

    if (doc.contains("order")) {
        if (!doc["order"].is_string()) parse_error("'order' must be a string");
        in.order = parse_order(doc["order"].get<std::string>());
    }
    if (doc.contains("family")) {
        if (!doc["family"].is_string()) parse_error("'family' must be a string");
        in.family = parse_family(doc["family"].get<std::string>());
    }
    if (doc.contains("names")) {
        const auto& names = doc["names"];
        if (!names.is_array()) parse_error("'names' must be an array of strings");
        std::vector<std::string> out;
        std::set<std::string> seen;
        for (const auto& n : names) {
            if (!n.is_string()) parse_error("'names' must be an array of strings");
            auto s = n.get<std::string>();
            if (!is_identifier(s)) parse_error("variable name '" + s + "' is not an identifier");
            if (!seen.insert(s).second) parse_error("variable name '" + s + "' repeated");
            out.push_back(std::move(s));
        }
        if (out.size() != in.generators.size())
            parse_error("'names' has " + std::to_string(out.size()) + " entries for " +
                        std::to_string(in.generators.size()) + " generators");
        in.names = std::move(out);
    }
    return in;
}

std::vector<std::string> canonical_names(const ValidatedSemigroup& vs, const std::optional<std::vector<std::string>>& input_names) {
    if (!input_names) return default_names(vs.l(), vs.m(), vs.n());
    std::vector<std::string> out;
    for (auto k : vs.permutation) out.push_back((*input_names)[k]);
    return out;
}

RunReport analyze(const InputSpec& input, unsigned jobs) {
    auto vs = validate(input.generators);
    auto names = canonical_names(vs, input.names);
    auto ideal = toric_ideal(vs, make_order(input.order, vs.N()));
    auto fa = analyze_family(ideal, input.family, jobs);

    RunReport rep{input, vs, names, ideal, fa.sigma, classify_ci(ideal), std::move(fa.reports), fa.verdict, {}};
    for (const auto& note : rep.verdict.notes) rep.warnings.push_back(note);

    std::size_t fallbacks = 0, touched = 0;
    for (const auto& s : rep.subsets) {
        fallbacks += s.fallbacks;
        touched += s.fallbacks > 0 ? 1 : 0;
    }
    if (fallbacks > 0)
        rep.warnings.push_back("minor formula exponent negative for " + std::to_string(fallbacks) + " minors in " +
                               std::to_string(touched) + " subsets; symbolic determinant used");

    if (input.family == RelationFamily::Groebner) {
        auto other = analyze_family(ideal, RelationFamily::Minimal, jobs);
        if (!(other.sigma == rep.sigma) || other.verdict.predicted != rep.verdict.predicted ||
            other.verdict.holds() != rep.verdict.holds()) {
            rep.family_mismatch = true;
            rep.warnings.push_back("minimal and groebner families give different verdicts");
        }
    }
    return rep;
}

std::string render_validation(const ValidatedSemigroup& vs, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "l=" << vs.l() << " m=" << vs.m() << " n=" << vs.n() << " N=" << vs.N() << " r=" << vs.r() << "\n";
    const auto& c = vs.classification;
    os << "rays: (" << c.ray1.u << "," << c.ray1.v << ") (" << c.ray2.u << "," << c.ray2.v << ")\n";
    for (std::size_t k = 0; k < vs.N(); ++k) {
        const char* block = vs.block_of(k) == Block::Edge1 ? "edge1" : vs.block_of(k) == Block::Interior ? "interior" : "edge2";
        os << "  " << names[k] << " = (" << vs.gens[k].u << "," << vs.gens[k].v << ")  " << block << "  input #"
           << vs.permutation[k] + 1 << "\n";
    }
    return os.str();
}

std::string render_human(const RunReport& r) {
    std::ostringstream os;
    os << "semigroup: " << render_validation(r.semigroup, r.names);
    os << "ideal (" << to_string(r.input.order) << "), s_min=" << r.ideal.s_min() << ":\n";
    for (std::size_t i = 0; i < r.ideal.minimal_gens.size(); ++i)
        os << "  f" << i + 1 << " = " << render(r.ideal.minimal_gens[i], r.names) << "\n";
    os << "reduced Groebner basis, " << r.ideal.gb.elements.size() << " elements:\n";
    for (const auto& b : r.ideal.gb.elements) os << "  " << render(b, r.names) << "\n";
    os << "singular locus: " << describe(r.sigma) << "\n";
    os << "hypersurface: " << yes_no(r.ci.is_hypersurface)
       << "  complete intersection: " << yes_no(r.ci.is_complete_intersection) << "\n";

    std::size_t valid = 0, equal = 0;
    for (const auto& s : r.subsets) {
        valid += s.rank_ok;
        equal += s.rank_ok && s.equals_sigma;
    }
    os << "subsets of the " << to_string(r.input.family) << " family: " << r.subsets.size() << " (" << valid
       << " of rank r, " << equal << " with V(J) = singular locus)\n";
    for (const auto& s : r.subsets) {
        os << "  " << rows_text(s.subset) << ": ";
        if (!s.rank_ok) {
            os << "rank < r, skipped\n";
            continue;
        }
        os << "V(J) = " << describe(s.zero_locus) << (s.equals_sigma ? "  [equal]" : "") << "\n    J = <";
        for (std::size_t i = 0; i < s.minors.size(); ++i)
            os << (i ? ", " : "") << render(s.minors[i].monomial, r.names);
        os << ">\n";
    }

    const auto& v = r.verdict;
    os << "verdict: predicted " << to_string(v.predicted) << ", observed " << to_string(v.observed) << " -> "
       << (v.holds() ? "holds" : "VIOLATED") << "\n";
    if (v.witness) os << "witness: " << rows_text(*v.witness) << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string render_json(const RunReport& r) {
    json doc;
    json in;
    json gens = json::array();
    for (const auto& g : r.input.generators) gens.push_back({g.u, g.v});
    in["generators"] = gens;
    in["order"] = to_string(r.input.order);
    in["family"] = to_string(r.input.family);
    in["names"] = r.input.names ? json(*r.input.names) : json(nullptr);
    doc["input"] = in;

    const auto& vs = r.semigroup;
    json sg{{"l", vs.l()}, {"m", vs.m()}, {"n", vs.n()}, {"N", vs.N()}, {"r", vs.r()}};
    sg["rays"] = json::array({json::array({vs.classification.ray1.u, vs.classification.ray1.v}),
                              json::array({vs.classification.ray2.u, vs.classification.ray2.v})});
    sg["permutation"] = one_based(vs.permutation);
    json canon = json::array();
    for (std::size_t k = 0; k < vs.N(); ++k)
        canon.push_back({{"name", r.names[k]}, {"generator", {vs.gens[k].u, vs.gens[k].v}}});
    sg["canonical"] = canon;
    doc["semigroup"] = sg;

    json ideal;
    ideal["order"] = to_string(r.input.order);
    ideal["s_min"] = r.ideal.s_min();
    ideal["minimal_generators"] = json::array();
    for (const auto& b : r.ideal.minimal_gens) ideal["minimal_generators"].push_back(binomial_json(b, r.names));
    ideal["groebner_basis"] = json::array();
    for (const auto& b : r.ideal.gb.elements) ideal["groebner_basis"].push_back(binomial_json(b, r.names));
    doc["ideal"] = ideal;

    doc["sigma"] = orbit_json(r.sigma);
    doc["ci"] = {{"hypersurface", r.ci.is_hypersurface}, {"complete_intersection", r.ci.is_complete_intersection}};

    json subsets = json::array();
    for (const auto& s : r.subsets) {
        json js{{"rows", one_based(s.subset)}, {"rank_ok", s.rank_ok}};
        if (s.rank_ok) {
            json minors = json::array();
            for (const auto& mv : s.minors)
                minors.push_back({{"excluded", {mv.excluded.first + 1, mv.excluded.second + 1}},
                                  {"det_rk", integer_json(mv.det_rk)},
                                  {"exponents", exponents_json(mv.monomial.exp)},
                                  {"text", render(mv.monomial, r.names)},
                                  {"fallback", mv.used_fallback}});
            js["minors"] = minors;
            js["zero_locus"] = orbit_json(s.zero_locus);
            js["equals_sigma"] = s.equals_sigma;
        }
        subsets.push_back(js);
    }
    doc["subsets"] = subsets;

    const auto& v = r.verdict;
    doc["verdict"] = {{"predicted", to_string(v.predicted)},
                      {"observed", to_string(v.observed)},
                      {"holds", v.holds()},
                      {"witness", v.witness ? json(one_based(*v.witness)) : json(nullptr)},
                      {"containment", v.containment_ok},
                      {"ci_anomaly", v.ci_anomaly},
                      {"family_mismatch", r.family_mismatch},
                      {"notes", v.notes}};
    doc["warnings"] = r.warnings;
    return doc.dump(2) + "\n";
}

}  // namespace nashtoric
