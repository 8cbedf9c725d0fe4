#include "nashtoric/algebra.hpp"

#include "nashtoric/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace nashtoric {

// ---- ExponentVector --------------------------------------------------------

ExponentVector::ExponentVector(std::initializer_list<Exponent> init) : e_(init) {}
ExponentVector::ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) {}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
    ExponentVector e(n);
    e[i] = 1;
    return e;
}

std::int64_t ExponentVector::degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (o.size() != size()) throw Error(ErrorCode::LengthMismatch, "exponent vectors differ in length");
    ExponentVector out(size());
    for (std::size_t i = 0; i < size(); ++i)
        if (__builtin_add_overflow(e_[i], o.e_[i], &out.e_[i]))
            throw Error(ErrorCode::ExponentOverflow, "exponent addition overflowed");
    return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (o.size() != size()) throw Error(ErrorCode::LengthMismatch, "exponent vectors differ in length");
    ExponentVector out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.e_[i] = e_[i] - o.e_[i];
        if (out.e_[i] < 0) throw Error(ErrorCode::Precondition, "exponent subtraction went negative");
    }
    return out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// ---- TermOrder -------------------------------------------------------------

TermOrder::TermOrder(Kind k, std::vector<std::size_t> ranking, std::vector<std::int64_t> weights)
    : kind_(k), ranking_(std::move(ranking)), weights_(std::move(weights)) {
    std::vector<std::size_t> sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw Error(ErrorCode::Precondition, "ranking is not a permutation");
    if (!weights_.empty() && weights_.size() != ranking_.size())
        throw Error(ErrorCode::LengthMismatch, "weight vector length");
}

static std::vector<std::size_t> identity_ranking(std::size_t n) {
    std::vector<std::size_t> r(n);
    std::iota(r.begin(), r.end(), std::size_t{0});
    return r;
}

TermOrder TermOrder::lex(std::size_t n) { return TermOrder(Kind::Lex, identity_ranking(n), {}); }
TermOrder TermOrder::lex(std::vector<std::size_t> ranking) { return TermOrder(Kind::Lex, std::move(ranking), {}); }
TermOrder TermOrder::degrevlex(std::size_t n) { return TermOrder(Kind::DegRevLex, identity_ranking(n), {}); }
TermOrder TermOrder::degrevlex(std::vector<std::size_t> ranking, std::vector<std::int64_t> weights) {
    return TermOrder(Kind::DegRevLex, std::move(ranking), std::move(weights));
}

std::weak_ordering TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a.size() != ranking_.size() || b.size() != ranking_.size())
        throw Error(ErrorCode::LengthMismatch, "exponent vector length does not match the term order");
    if (kind_ == Kind::Lex) {
        for (auto v : ranking_)
            if (a[v] != b[v]) return a[v] <=> b[v];
        return std::weak_ordering::equivalent;
    }
    std::int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t w = weights_.empty() ? 1 : weights_[i];
        da += w * a[i];
        db += w * b[i];
    }
    if (da != db) return da <=> db;
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::weak_ordering::equivalent;
}

// ---- Polynomial ------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
    Polynomial p;
    p.add_term(ExponentVector(nvars), c);
    return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Integer& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const ExponentVector& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<Monomial> Polynomial::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return Monomial{terms_.begin()->second, terms_.begin()->first};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Integer& c) const {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (var >= e.size()) throw Error(ErrorCode::LengthMismatch, "variable index out of range");
        if (e[var] == 0) continue;
        ExponentVector d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

Integer Polynomial::evaluate(std::span<const std::int64_t> point) const {
    Integer acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e.size() != point.size()) throw Error(ErrorCode::LengthMismatch, "evaluation point length");
        Integer t = c;
        for (std::size_t i = 0; i < e.size() && t != 0; ++i)
            if (e[i] > 0) t *= boost::multiprecision::pow(Integer(point[i]), static_cast<unsigned>(e[i]));
        acc += t;
    }
    return acc;
}

// ---- Binomial --------------------------------------------------------------

std::optional<Binomial> Binomial::make(const ExponentVector& a, const ExponentVector& b, const TermOrder& order) {
    auto c = order.compare(a, b);
    if (c == 0) return std::nullopt;
    if (c > 0) return Binomial{a, b};
    return Binomial{b, a};
}

Polynomial Binomial::to_polynomial() const {
    Polynomial p = Polynomial::monomial(plus, 1);
    p.add_term(minus, -1);
    return p;
}

Polynomial Binomial::derivative(std::size_t var) const { return to_polynomial().derivative(var); }

std::vector<std::int64_t> Binomial::difference() const {
    std::vector<std::int64_t> d(plus.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::int64_t{plus[i]} - minus[i];
    return d;
}

// ---- determinants and rank --------------------------------------------------

namespace {

struct CofactorExpansion {
    const PolyMatrix& m;
    std::size_t nvars;
    std::unordered_map<std::uint32_t, Polynomial> memo;

    // Determinant of rows [row, n) restricted to the columns in `cols`.
    Polynomial det(std::size_t row, std::uint32_t cols) {
        if (row == m.size()) return Polynomial::constant(nvars, 1);
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Polynomial acc;
        int pos = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!(cols & (1u << j))) continue;
            const auto& a = m[row][j];
            if (!a.is_zero()) {
                Polynomial minor = det(row + 1, cols & ~(1u << j));
                if (!minor.is_zero()) {
                    Polynomial term = a * minor;
                    acc = (pos % 2 == 0) ? acc + term : acc - term;
                }
            }
            ++pos;
        }
        memo.emplace(cols, acc);
        return acc;
    }
};

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw Error(ErrorCode::NotSquare, "matrix is not square");
    if (m.size() > 31) throw Error(ErrorCode::Precondition, "matrix too large for cofactor expansion");
    std::size_t nvars = 0;
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_zero()) nvars = p.terms().begin()->first.size();
    CofactorExpansion ce{m, nvars, {}};
    std::uint32_t all = m.empty() ? 0u : static_cast<std::uint32_t>((1ull << m.size()) - 1);
    return ce.det(0, all);
}

Integer determinant(const IntMatrix& input) {
    const std::size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n) throw Error(ErrorCode::NotSquare, "matrix is not square");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = input;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t rank(IntMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Integer f = a[i][c], g = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
            Integer content = 0;
            for (std::size_t j = c; j < cols; ++j) content = boost::multiprecision::gcd(content, a[i][j]);
            if (content > 1)
                for (std::size_t j = c; j < cols; ++j) a[i][j] /= content;
        }
        ++r;
    }
    return r;
}

// ---- rendering and parsing -------------------------------------------------

std::vector<std::string> default_names(std::size_t l, std::size_t m, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= l; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

std::string render(const ExponentVector& e, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string render(const Monomial& mono, std::span<const std::string> names) {
    std::string body = render(mono.exp, names);
    if (mono.coeff == 1) return body;
    if (mono.coeff == -1) return "-" + body;
    if (body == "1") return mono.coeff.str();
    return mono.coeff.str() + "*" + body;
}

std::string render(const Polynomial& p, std::span<const std::string> names, const TermOrder& order) {
    if (p.is_zero()) return "0";
    std::vector<Monomial> terms;
    for (const auto& [e, c] : p.terms()) terms.push_back({c, e});
    std::sort(terms.begin(), terms.end(), [&](const Monomial& a, const Monomial& b) { return order.less(b.exp, a.exp); });
    std::string out;
    for (const auto& t : terms) {
        if (out.empty()) {
            out = render(t, names);
        } else if (t.coeff < 0) {
            out += " - " + render(Monomial{-t.coeff, t.exp}, names);
        } else {
            out += " + " + render(t, names);
        }
    }
    return out;
}

std::string render(const Binomial& b, std::span<const std::string> names) {
    return render(b.plus, names) + " - " + render(b.minus, names);
}

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

}  // namespace

ExponentVector parse_monomial(const std::string& text, std::span<const std::string> names) {
    std::string s = strip(text);
    ExponentVector e(names.size());
    if (s == "1") return e;
    if (s.empty()) throw Error(ErrorCode::Parse, "empty monomial");
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find('*', pos);
        std::string factor = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::string name = factor;
        Exponent power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string digits = factor.substr(caret + 1);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
                throw Error(ErrorCode::Parse, "bad exponent in '" + factor + "'");
            power = static_cast<Exponent>(std::stol(digits));
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw Error(ErrorCode::Parse, "unknown variable '" + name + "'");
        e[static_cast<std::size_t>(it - names.begin())] += power;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return e;
}

std::pair<ExponentVector, ExponentVector> parse_binomial(const std::string& text, std::span<const std::string> names) {
    auto minus = text.find('-');
    if (minus == std::string::npos || text.find('-', minus + 1) != std::string::npos)
        throw Error(ErrorCode::Parse, "expected 'lhs - rhs' in '" + text + "'");
    return {parse_monomial(text.substr(0, minus), names), parse_monomial(text.substr(minus + 1), names)};
}

}  // namespace nashtoric
