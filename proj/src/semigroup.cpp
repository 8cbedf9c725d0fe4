#include "nashtoric/semigroup.hpp"

#include "nashtoric/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

namespace nashtoric {

namespace {

std::string point_str(const LatticePoint& p) {
    return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

// Same direction as `a` (positive multiple), or strictly counterclockwise within a half-turn.
bool weakly_ccw_of(const LatticePoint& a, const LatticePoint& b) {
    auto c = cross(a, b);
    return c > 0 || (c == 0 && dot(a, b) > 0);
}

// A vector with w . g > 0 for all gens, if one exists.
std::optional<LatticePoint> positive_dual(std::span<const LatticePoint> gens) {
    if (gens.empty()) return LatticePoint{1, 0};
    bool collinear = std::all_of(gens.begin(), gens.end(),
                                 [&](const LatticePoint& g) { return cross(gens.front(), g) == 0; });
    if (collinear) {
        if (std::all_of(gens.begin(), gens.end(), [&](const LatticePoint& g) { return dot(gens.front(), g) > 0; }))
            return primitive(gens.front());
        return std::nullopt;
    }
    try {
        auto rays = compute_cone_rays(gens);
        LatticePoint n1{-rays.ray1.v, rays.ray1.u};
        LatticePoint n2{rays.ray2.v, -rays.ray2.u};
        return n1 + n2;
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct MembershipSearch {
    std::span<const LatticePoint> gens;
    LatticePoint w;
    std::set<std::pair<std::size_t, LatticePoint>> dead;

    bool run(std::size_t i, const LatticePoint& p) {
        if (p.is_zero()) return true;
        if (i == gens.size()) return false;
        auto wp = dot(w, p);
        if (wp <= 0) return false;
        if (dead.contains({i, p})) return false;
        auto bound = wp / dot(w, gens[i]);
        for (std::int64_t k = 0; k <= bound; ++k) {
            if (run(i + 1, p - gens[i] * k)) return true;
        }
        dead.insert({i, p});
        return false;
    }
};

}  // namespace

LatticePoint primitive(const LatticePoint& p) {
    auto g = std::gcd(p.u, p.v);
    if (g == 0) return p;
    return {p.u / g, p.v / g};
}

LatticePoint semigroup_image(std::span<const std::int64_t> alpha, std::span<const LatticePoint> gens) {
    LatticePoint acc;
    for (std::size_t i = 0; i < gens.size() && i < alpha.size(); ++i) acc = acc + gens[i] * alpha[i];
    return acc;
}

ConeRays compute_cone_rays(std::span<const LatticePoint> gens) {
    if (gens.empty()) throw Error(ErrorCode::ConeNotTwoDimensional, "no generators");
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].is_zero()) throw Error(ErrorCode::Precondition, "zero generator", i);

    bool collinear = std::all_of(gens.begin(), gens.end(),
                                 [&](const LatticePoint& g) { return cross(gens.front(), g) == 0; });
    if (collinear) throw Error(ErrorCode::ConeNotTwoDimensional, "all generators are collinear");

    auto find_extreme = [&](bool clockwise_most) -> std::optional<LatticePoint> {
        for (const auto& g : gens) {
            bool ok = std::all_of(gens.begin(), gens.end(), [&](const LatticePoint& h) {
                return clockwise_most ? weakly_ccw_of(g, h) : weakly_ccw_of(h, g);
            });
            if (ok) return primitive(g);
        }
        return std::nullopt;
    };
    auto r1 = find_extreme(true);
    auto r2 = find_extreme(false);
    if (!r1 || !r2) throw Error(ErrorCode::ConeNotStrictlyConvex, "the cone contains a line");
    return {*r1, *r2};
}

ConeClassification classify_generators(std::span<const LatticePoint> gens) {
    auto rays = compute_cone_rays(gens);
    ConeClassification c;
    c.ray1 = rays.ray1;
    c.ray2 = rays.ray2;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (cross(rays.ray1, gens[i]) == 0)
            c.edge1_indices.push_back(i);
        else if (cross(gens[i], rays.ray2) == 0)
            c.edge2_indices.push_back(i);
        else
            c.interior_indices.push_back(i);
    }
    return c;
}

bool check_generates_Z2(std::span<const LatticePoint> gens) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) g = std::gcd(g, cross(gens[i], gens[j]));
    return g == 1;
}

bool semigroup_membership(const LatticePoint& p, std::span<const LatticePoint> gens) {
    auto w = positive_dual(gens);
    if (!w) throw Error(ErrorCode::UnboundedSearch, "no strictly positive dual vector for the generators");
    MembershipSearch search{gens, *w, {}};
    return search.run(0, p);
}

LatticePoint ValidatedSemigroup::dual_weight() const {
    const auto& c = classification;
    LatticePoint n1{-c.ray1.v, c.ray1.u};
    LatticePoint n2{c.ray2.v, -c.ray2.u};
    return n1 + n2;
}

std::vector<std::int64_t> ValidatedSemigroup::grading() const {
    auto w = dual_weight();
    std::vector<std::int64_t> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(dot(w, g));
    return out;
}

ValidatedSemigroup validate(std::span<const LatticePoint> gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) throw Error(ErrorCode::NotMinimal, "generator (0,0)", i);
        for (std::size_t j = 0; j < i; ++j)
            if (gens[i] == gens[j]) throw Error(ErrorCode::NotMinimal, "generator " + point_str(gens[i]) + " repeated", i);
    }

    auto cls = classify_generators(gens);
    if (cls.l() == 0 || cls.n() == 0) throw Error(ErrorCode::EmptyEdge, "an edge of the cone carries no generator");
    if (!check_generates_Z2(gens)) throw Error(ErrorCode::LatticeNotFull, "generators span a proper sublattice of Z^2");

    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<LatticePoint> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        if (semigroup_membership(gens[i], rest))
            throw Error(ErrorCode::NotMinimal, "generator " + point_str(gens[i]), i);
    }
    if (gens.size() < 3)
        throw Error(ErrorCode::TooFewGenerators, "need at least 3 generators (the surface is otherwise smooth)");

    auto by_norm = [&](std::size_t a, std::size_t b) { return dot(gens[a], gens[a]) < dot(gens[b], gens[b]); };
    auto by_lex = [&](std::size_t a, std::size_t b) { return gens[a] < gens[b]; };
    std::sort(cls.edge1_indices.begin(), cls.edge1_indices.end(), by_norm);
    std::sort(cls.interior_indices.begin(), cls.interior_indices.end(), by_lex);
    std::sort(cls.edge2_indices.begin(), cls.edge2_indices.end(), by_norm);

    ValidatedSemigroup vs;
    for (const auto* block : {&cls.edge1_indices, &cls.interior_indices, &cls.edge2_indices})
        for (auto idx : *block) {
            vs.permutation.push_back(idx);
            vs.gens.push_back(gens[idx]);
        }
    auto& out = vs.classification;
    out.ray1 = cls.ray1;
    out.ray2 = cls.ray2;
    std::size_t k = 0;
    for (std::size_t i = 0; i < cls.l(); ++i) out.edge1_indices.push_back(k++);
    for (std::size_t i = 0; i < cls.m(); ++i) out.interior_indices.push_back(k++);
    for (std::size_t i = 0; i < cls.n(); ++i) out.edge2_indices.push_back(k++);
    return vs;
}

}  // namespace nashtoric
