#pragma once

// Two-dimensional affine semigroups: cone rays, generator classification
// into the edge/interior blocks, and validation of the standing hypotheses.

#include <cstddef>
#include <cstdint>
#include <compare>
#include <span>
#include <vector>

namespace nashtoric {

struct LatticePoint {
    std::int64_t u = 0;
    std::int64_t v = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    bool is_zero() const { return u == 0 && v == 0; }
    LatticePoint operator+(const LatticePoint& o) const { return {u + o.u, v + o.v}; }
    LatticePoint operator-(const LatticePoint& o) const { return {u - o.u, v - o.v}; }
    LatticePoint operator*(std::int64_t k) const { return {u * k, v * k}; }
};

/// z-component of the 2D cross product.
inline std::int64_t cross(const LatticePoint& a, const LatticePoint& b) { return a.u * b.v - a.v * b.u; }
inline std::int64_t dot(const LatticePoint& a, const LatticePoint& b) { return a.u * b.u + a.v * b.v; }

/// Divides out the gcd of the coordinates.
LatticePoint primitive(const LatticePoint& p);

using GeneratorSet = std::vector<LatticePoint>;

enum class Block { Edge1, Interior, Edge2 };

struct ConeRays {
    LatticePoint ray1;  // clockwise-most extreme ray
    LatticePoint ray2;  // counterclockwise-most extreme ray
};

struct ConeClassification {
    LatticePoint ray1;
    LatticePoint ray2;
    std::vector<std::size_t> edge1_indices;
    std::vector<std::size_t> interior_indices;
    std::vector<std::size_t> edge2_indices;

    std::size_t l() const { return edge1_indices.size(); }
    std::size_t m() const { return interior_indices.size(); }
    std::size_t n() const { return edge2_indices.size(); }
};

/// A generator set satisfying the standing conditions, reordered into the
/// canonical block order: edge1 (by norm), interior (lexicographic), edge2 (by norm).
struct ValidatedSemigroup {
    GeneratorSet gens;
    ConeClassification classification;  // indices refer to `gens`
    /// permutation[k] is the input index of canonical generator k.
    std::vector<std::size_t> permutation;

    std::size_t l() const { return classification.l(); }
    std::size_t m() const { return classification.m(); }
    std::size_t n() const { return classification.n(); }
    std::size_t N() const { return gens.size(); }
    std::size_t r() const { return gens.size() - 2; }

    Block block_of(std::size_t var) const {
        if (var < l()) return Block::Edge1;
        if (var < l() + m()) return Block::Interior;
        return Block::Edge2;
    }

    /// Strictly positive integer dual vector: w . g > 0 for every generator.
    LatticePoint dual_weight() const;
    /// Degrees w . g_i; the toric ideal is homogeneous for this grading.
    std::vector<std::int64_t> grading() const;
};

ConeRays compute_cone_rays(std::span<const LatticePoint> gens);
ConeClassification classify_generators(std::span<const LatticePoint> gens);
bool check_generates_Z2(std::span<const LatticePoint> gens);

/// True iff p is a nonnegative integer combination of gens.
bool semigroup_membership(const LatticePoint& p, std::span<const LatticePoint> gens);

ValidatedSemigroup validate(std::span<const LatticePoint> gens);

/// pi(alpha) = sum alpha_i * g_i.
LatticePoint semigroup_image(std::span<const std::int64_t> alpha, std::span<const LatticePoint> gens);

}  // namespace nashtoric
