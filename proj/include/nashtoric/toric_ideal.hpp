#pragma once

#include "nashtoric/algebra.hpp"
#include "nashtoric/groebner.hpp"
#include "nashtoric/semigroup.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nashtoric {

/// Integer basis of ker(pi), pi(alpha) = sum alpha_i g_i. Rank s - 2.
struct LatticeBasis {
    std::vector<std::vector<std::int64_t>> vectors;
};

struct ToricIdeal {
    ValidatedSemigroup semigroup;
    GroebnerBasis gb;
    /// Irredundant generating set, in increasing leading-term order.
    std::vector<Binomial> minimal_gens;

    std::size_t N() const { return semigroup.N(); }
    std::size_t r() const { return semigroup.r(); }
    std::size_t s_min() const { return minimal_gens.size(); }
};

/// The default ranking x1 > ... > xl > y1 > ... > ym > z1 > ... > zn.
TermOrder default_order(std::size_t nvars);

LatticeBasis lattice_kernel(std::span<const LatticePoint> gens);
inline LatticeBasis lattice_kernel(const ValidatedSemigroup& vs) { return lattice_kernel(vs.gens); }

/// Binomials x^{v+} - x^{v-} for each kernel vector v.
std::vector<Binomial> lattice_basis_binomials(const LatticeBasis& basis, const TermOrder& order);

ToricIdeal toric_ideal(const ValidatedSemigroup& vs, const TermOrder& order);

/// Greedy pruning in increasing leading-term order: an element is dropped when
/// it lies in the ideal generated by the other remaining elements. `grading`
/// (empty for the standard one) must make the ideal homogeneous.
std::vector<Binomial> minimal_generators(const GroebnerBasis& gb, std::span<const std::int64_t> grading = {});

/// x_i^a - x_j^b with a*g_i = b*g_j for two generators on the same edge.
/// Indices are positions inside the named edge block.
Binomial edge_relation(const ToricIdeal& ideal, Block block, std::size_t i, std::size_t j);

/// pi(e) for an exponent vector over the canonical generators.
LatticePoint semigroup_image(const ExponentVector& e, std::span<const LatticePoint> gens);

}  // namespace nashtoric
