#include "nashtoric/groebner.hpp"

#include "nashtoric/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nashtoric {

ExponentVector normal_form(const ExponentVector& e, std::span<const Binomial> basis) {
    ExponentVector cur = e;
    for (;;) {
        auto it = std::find_if(basis.begin(), basis.end(), [&](const Binomial& g) { return g.plus.divides(cur); });
        if (it == basis.end()) return cur;
        cur = (cur - it->plus) + it->minus;
    }
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) out.add_term(normal_form(e, gb.elements), c);
    return out;
}

std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb) {
    return Binomial::make(normal_form(b.plus, gb.elements), normal_form(b.minus, gb.elements), gb.order);
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) { return normal_form(p, gb).is_zero(); }

namespace {

struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
};

std::vector<Binomial> reduce_basis(std::vector<Binomial> g, const TermOrder& order) {
    std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) {
        auto c = order.compare(a.plus, b.plus);
        if (c != 0) return c < 0;
        return order.less(a.minus, b.minus);
    });
    std::vector<Binomial> kept;
    for (auto& b : g) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Binomial& k) { return k.plus.divides(b.plus); });
        if (!redundant) kept.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < kept.size(); ++i) kept[i].minus = normal_form(kept[i].minus, kept);
    return kept;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Binomial> gens, const TermOrder& order) {
    std::vector<Binomial> input;
    for (const auto& b : gens) {
        if (b.num_vars() != order.num_vars()) throw Error(ErrorCode::LengthMismatch, "binomial/order variable count");
        if (auto oriented = Binomial::make(b.plus, b.minus, order)) input.push_back(*oriented);
    }
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());

    std::vector<Binomial> g;
    std::vector<char> alive;

    auto reduce = [&](ExponentVector cur) {
        for (;;) {
            std::size_t k = 0;
            while (k < g.size() && !(alive[k] && g[k].plus.divides(cur))) ++k;
            if (k == g.size()) return cur;
            cur = (cur - g[k].plus) + g[k].minus;
        }
    };

    // Normal selection strategy: smallest lcm first.
    auto cmp = [&](const Pair& a, const Pair& b) {
        auto c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::set<Pair, decltype(cmp)> pending(cmp);
    std::set<std::pair<std::size_t, std::size_t>> pending_ids;
    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending_ids.contains({std::min(a, b), std::max(a, b)});
    };
    auto drop_pairs_of = [&](std::size_t k) {
        for (auto it = pending.begin(); it != pending.end();) {
            if (it->i == k || it->j == k) {
                pending_ids.erase({it->i, it->j});
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
    };

    // Adding h retires every element whose leading term h's leading term
    // divides; a retired element is reduced and re-inserted if nonzero.
    std::vector<Binomial> queue(input.rbegin(), input.rend());
    auto insert_queued = [&] {
        while (!queue.empty()) {
            Binomial b = std::move(queue.back());
            queue.pop_back();
            auto h = Binomial::make(reduce(b.plus), reduce(b.minus), order);
            if (!h) continue;
            const std::size_t j = g.size();
            for (std::size_t k = 0; k < j; ++k) {
                if (!alive[k] || !h->plus.divides(g[k].plus)) continue;
                alive[k] = 0;
                drop_pairs_of(k);
                queue.push_back(g[k]);
            }
            g.push_back(*h);
            alive.push_back(1);
            for (std::size_t i = 0; i < j; ++i) {
                if (!alive[i]) continue;
                pending.insert(Pair{i, j, lcm(g[i].plus, g[j].plus)});
                pending_ids.insert({i, j});
            }
        }
    };
    insert_queued();

    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());
        pending_ids.erase({p.i, p.j});

        if (coprime(g[p.i].plus, g[p.j].plus)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (!alive[k] || k == p.i || k == p.j) continue;
            chain = g[k].plus.divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
        }
        if (chain) continue;

        ExponentVector a = (p.lcm - g[p.i].plus) + g[p.i].minus;
        ExponentVector b = (p.lcm - g[p.j].plus) + g[p.j].minus;
        auto s = Binomial::make(reduce(a), reduce(b), order);
        if (!s) continue;
        queue.push_back(*s);
        insert_queued();
    }
    std::vector<Binomial> out;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (alive[k]) out.push_back(std::move(g[k]));
    return GroebnerBasis{order, reduce_basis(std::move(out), order)};
}

namespace {

// Generators of (I : x_var^infinity) from any generating set of I.
std::vector<Binomial> divide_out(std::span<const Binomial> gens, std::size_t var, std::span<const std::int64_t> grading) {
    if (gens.empty()) return {};
    const std::size_t n = gens.front().num_vars();
    if (var >= n) throw Error(ErrorCode::LengthMismatch, "variable index out of range");
    std::vector<std::size_t> ranking;
    for (std::size_t i = 0; i < n; ++i)
        if (i != var) ranking.push_back(i);
    ranking.push_back(var);
    std::vector<std::int64_t> weights(grading.begin(), grading.end());
    auto revlex = TermOrder::degrevlex(std::move(ranking), std::move(weights));

    auto g = buchberger(gens, revlex);
    std::vector<Binomial> divided;
    divided.reserve(g.elements.size());
    for (auto b : g.elements) {
        Exponent k = std::min(b.plus[var], b.minus[var]);
        b.plus[var] -= k;
        b.minus[var] -= k;
        divided.push_back(std::move(b));
    }
    return divided;
}

}  // namespace

GroebnerBasis saturate_variable(const GroebnerBasis& gb, std::size_t var, std::span<const std::int64_t> grading) {
    if (var >= gb.num_vars()) throw Error(ErrorCode::LengthMismatch, "variable index out of range");
    return buchberger(divide_out(gb.elements, var, grading), gb.order);
}

GroebnerBasis saturate(std::span<const Binomial> gens, const TermOrder& order, std::span<const std::int64_t> grading) {
    // (I : (x_1 ... x_n)^inf) = (...((I : x_1^inf) : x_2^inf) ...), so one pass suffices.
    std::vector<Binomial> cur(gens.begin(), gens.end());
    for (std::size_t v = 0; v < order.num_vars() && !cur.empty(); ++v) cur = divide_out(cur, v, grading);
    return buchberger(cur, order);
}

}  // namespace nashtoric
