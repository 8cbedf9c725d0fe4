#include "nashtoric/toric_ideal.hpp"

#include "nashtoric/error.hpp"

#include <algorithm>
#include <numeric>

namespace nashtoric {

namespace {

using Column = std::vector<Integer>;  // one column of [A ; U]: two rows of A, then s rows of U

void sub_multiple(Column& dst, const Column& src, const Integer& q) {
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= q * src[k];
}

// Zero out row `row` of every column after `pivot` by Euclidean column operations.
void eliminate_row(std::vector<Column>& cols, std::size_t row, std::size_t pivot) {
    for (std::size_t j = pivot + 1; j < cols.size(); ++j) {
        while (cols[j][row] != 0) {
            Integer q = cols[pivot][row] / cols[j][row];
            sub_multiple(cols[pivot], cols[j], q);
            std::swap(cols[pivot], cols[j]);
        }
    }
}

std::int64_t norm2(const std::vector<std::int64_t>& v) {
    return std::inner_product(v.begin(), v.end(), v.begin(), std::int64_t{0});
}

// Pairwise size reduction; shorter kernel vectors make saturation cheaper.
void size_reduce(std::vector<std::vector<std::int64_t>>& vs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (i == j) continue;
                for (int sign : {-1, 1}) {
                    std::vector<std::int64_t> cand(vs[i].size());
                    for (std::size_t k = 0; k < cand.size(); ++k) cand[k] = vs[i][k] + sign * vs[j][k];
                    if (norm2(cand) < norm2(vs[i])) {
                        vs[i] = std::move(cand);
                        changed = true;
                    }
                }
            }
    }
}

}  // namespace

TermOrder default_order(std::size_t nvars) { return TermOrder::lex(nvars); }

LatticePoint semigroup_image(const ExponentVector& e, std::span<const LatticePoint> gens) {
    LatticePoint acc;
    for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + gens[i] * e[i];
    return acc;
}

LatticeBasis lattice_kernel(std::span<const LatticePoint> gens) {
    const std::size_t s = gens.size();
    std::vector<Column> cols(s, Column(2 + s, 0));
    for (std::size_t j = 0; j < s; ++j) {
        cols[j][0] = gens[j].u;
        cols[j][1] = gens[j].v;
        cols[j][2 + j] = 1;
    }
    // Column-style Hermite reduction of the 2 x s generator matrix.
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < 2 && pivot < s; ++row) {
        auto nz = std::find_if(cols.begin() + static_cast<std::ptrdiff_t>(pivot), cols.end(),
                               [&](const Column& c) { return c[row] != 0; });
        if (nz == cols.end()) continue;
        std::iter_swap(cols.begin() + static_cast<std::ptrdiff_t>(pivot), nz);
        eliminate_row(cols, row, pivot);
        ++pivot;
    }
    LatticeBasis out;
    for (std::size_t j = pivot; j < s; ++j) {
        std::vector<std::int64_t> v(s);
        Integer content = 0;
        for (std::size_t k = 0; k < s; ++k) content = boost::multiprecision::gcd(content, cols[j][2 + k]);
        for (std::size_t k = 0; k < s; ++k) v[k] = static_cast<std::int64_t>(cols[j][2 + k] / content);
        out.vectors.push_back(std::move(v));
    }
    size_reduce(out.vectors);
    return out;
}

std::vector<Binomial> lattice_basis_binomials(const LatticeBasis& basis, const TermOrder& order) {
    std::vector<Binomial> out;
    for (const auto& v : basis.vectors) {
        ExponentVector pos(v.size()), neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] > 0) pos[i] = static_cast<Exponent>(v[i]);
            if (v[i] < 0) neg[i] = static_cast<Exponent>(-v[i]);
        }
        if (auto b = Binomial::make(pos, neg, order)) out.push_back(*b);
    }
    return out;
}

std::vector<Binomial> minimal_generators(const GroebnerBasis& gb, std::span<const std::int64_t> grading) {
    // Membership does not depend on the order, and graded reverse lex is far cheaper than lex.
    std::vector<std::size_t> ranking(gb.num_vars());
    std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    auto work = TermOrder::degrevlex(std::move(ranking), std::vector<std::int64_t>(grading.begin(), grading.end()));
    std::vector<Binomial> kept = gb.elements;
    std::sort(kept.begin(), kept.end(), [&](const Binomial& a, const Binomial& b) { return gb.order.less(a.plus, b.plus); });
    std::size_t i = 0;
    while (i < kept.size()) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        bool redundant = false;
        if (!others.empty()) {
            auto g = buchberger(others, work);
            redundant = ideal_member(kept[i].to_polynomial(), g);
        }
        if (redundant)
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return kept;
}

ToricIdeal toric_ideal(const ValidatedSemigroup& vs, const TermOrder& order) {
    if (order.num_vars() != vs.N()) throw Error(ErrorCode::LengthMismatch, "term order variable count");
    auto kernel = lattice_kernel(vs);
    auto grading = vs.grading();
    auto gb = saturate(lattice_basis_binomials(kernel, order), order, grading);
    ToricIdeal ideal{vs, gb, minimal_generators(gb, grading)};
    return ideal;
}

Binomial edge_relation(const ToricIdeal& ideal, Block block, std::size_t i, std::size_t j) {
    const auto& vs = ideal.semigroup;
    const auto& cls = vs.classification;
    const std::vector<std::size_t>* indices = nullptr;
    LatticePoint ray;
    if (block == Block::Edge1) {
        indices = &cls.edge1_indices;
        ray = cls.ray1;
    } else if (block == Block::Edge2) {
        indices = &cls.edge2_indices;
        ray = cls.ray2;
    } else {
        throw Error(ErrorCode::NotSameEdge, "the interior block is not an edge");
    }
    if (i == j || i >= indices->size() || j >= indices->size())
        throw Error(ErrorCode::NotSameEdge, "need two distinct generators of the same edge");

    auto vi = (*indices)[i], vj = (*indices)[j];
    auto multiple = [&](const LatticePoint& g) { return ray.u != 0 ? g.u / ray.u : g.v / ray.v; };
    std::int64_t ki = multiple(vs.gens[vi]), kj = multiple(vs.gens[vj]);
    std::int64_t g = std::gcd(ki, kj);

    ExponentVector a(vs.N()), b(vs.N());
    a[vi] = static_cast<Exponent>(kj / g);
    b[vj] = static_cast<Exponent>(ki / g);
    auto rel = Binomial::make(a, b, ideal.gb.order);
    if (!rel || !ideal_member(rel->to_polynomial(), ideal.gb))
        throw Error(ErrorCode::TheoremViolation, "edge relation is not in the toric ideal");
    return *rel;
}

}  // namespace nashtoric
