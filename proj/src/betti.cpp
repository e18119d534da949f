#include "qhilb/betti.hpp"

#include <algorithm>

#include "qhilb/castelnuovo.hpp"

namespace qhilb {

static void strip_zeros(std::map<int, long>& m)
{
    for (auto it = m.begin(); it != m.end();) {
        if (it->second < 0) throw BettiError(it->first, "negative Betti number in degree " + std::to_string(it->first));
        it = it->second == 0 ? m.erase(it) : std::next(it);
    }
}

BettiTable validate_betti(std::map<int, long> a, std::map<int, long> b)
{
    strip_zeros(a);
    strip_zeros(b);
    if (a.empty()) throw BettiError(0, "no generators");
    int sigma = a.begin()->first;
    if (!b.empty() && b.begin()->first <= sigma)
        throw BettiError(b.begin()->first, "relation in degree " + std::to_string(b.begin()->first) +
                                               " not above the generator degree " + std::to_string(sigma));
    int top = a.rbegin()->first;
    if (!b.empty()) top = std::max(top, b.rbegin()->first);
    long sum_b = 0, sum_a = 0;  // sum_{i<=l} b_i and sum_{i<l} a_i
    for (int l = sigma; l <= top; ++l) {
        if (l > sigma) {
            sum_a += a.count(l - 1) ? a.at(l - 1) : 0;
            sum_b += b.count(l) ? b.at(l) : 0;
            if (!(sum_b < sum_a))
                throw BettiError(l, "relations up to degree " + std::to_string(l) + " outnumber earlier generators");
        }
    }
    return {std::move(a), std::move(b)};
}

LaurentPoly char_poly(const BettiTable& t)
{
    LaurentPoly q;
    for (const auto& [d, v] : t.a) q.set(d, q.coeff(d) + v);
    for (const auto& [d, v] : t.b) q.set(d, q.coeff(d) - v);
    return q;
}

std::vector<BettiTable> enumerate_for(const LaurentPoly& q, std::optional<int> degree_bound)
{
    std::vector<BettiTable> out;
    if (q.is_zero()) return out;
    int sigma = q.min_degree(), top = q.max_degree();
    if (q.coeff(sigma) <= 0) return out;
    int bound = degree_bound.value_or(top);
    bound = std::max(bound, top);
    long rk = rank(q).get_si();

    // With Q_l = sum_{i<l} q_i, condition (3) at l reads b_l <= Q_l - 1, and
    // a_l = q_l + b_l >= 0 forces b_l >= -q_l.  The degrees are independent.
    std::vector<std::pair<long, long>> range;  // per degree sigma+1..bound
    long Q = q.coeff(sigma).get_si();
    for (int l = sigma + 1; l <= bound; ++l) {
        long ql = q.coeff(l).get_si();
        long lo = std::max(0L, -ql), hi = Q - 1;
        if (l > top) {
            lo = 0;
            hi = rk - 1;
            if (hi < 0) hi = 0;  // b_l = 0 beyond the support is never a violation
        }
        if (lo > hi) return out;
        range.push_back({lo, hi});
        Q += ql;
    }

    std::vector<long> bl(range.size());
    for (std::size_t i = 0; i < range.size(); ++i) bl[i] = range[i].first;
    while (true) {
        BettiTable t;
        t.a[sigma] = q.coeff(sigma).get_si();
        for (std::size_t i = 0; i < range.size(); ++i) {
            int l = sigma + 1 + (int)i;
            long av = q.coeff(l).get_si() + bl[i];
            if (av) t.a[l] = av;
            if (bl[i]) t.b[l] = bl[i];
        }
        out.push_back(validate_betti(t.a, t.b));
        std::size_t i = 0;
        while (i < range.size() && bl[i] == range[i].second) {
            bl[i] = range[i].first;
            ++i;
        }
        if (i == range.size()) break;
        ++bl[i];
    }
    auto key = [](const BettiTable& t) {
        long nb = 0;
        for (const auto& [d, v] : t.b) nb += v;
        std::vector<std::pair<int, long>> bv(t.b.begin(), t.b.end());
        return std::make_pair(nb, bv);
    };
    std::sort(out.begin(), out.end(), [&](const BettiTable& x, const BettiTable& y) { return key(x) < key(y); });
    return out;
}

BettiTable extremal_resolution(long ne, long no)
{
    auto m = n_membership(ne, no);
    if (!m) throw std::invalid_argument("invariants not in N");
    if (m->l != 0) throw std::invalid_argument("invariants are interior (l > 0); no extremal resolution");
    int c = (int)(m->which == 1 ? 2 * m->k : 2 * m->k + 1);
    BettiTable t;
    t.a[c] = c + 1;
    if (c > 0) t.b[c + 1] = c;
    return validate_betti(t.a, t.b);
}

mpz_class ext1_graded_dim(const BettiTable& t, const TruncatedSeries& h)
{
    LaurentPoly q = char_poly(t);
    int top = t.a.rbegin()->first;
    if (!t.b.empty()) top = std::max(top, t.b.rbegin()->first);
    if (h.order < top) throw std::invalid_argument("Hilbert series truncated below the resolution's degrees");
    mpz_class s = 0;
    for (const auto& [d, v] : q.terms()) s += v * h.at(d);
    return 1 - s;
}

static std::string sum_term(const std::map<int, long>& m)
{
    std::string s;
    for (const auto& [d, v] : m) {
        if (!s.empty()) s += " + ";
        s += d == 0 ? "A" : "A(" + std::to_string(-d) + ")";
        if (v != 1) s += "^" + std::to_string(v);
    }
    return s;
}

std::string resolution_string(const BettiTable& t)
{
    std::string s = "0 -> ";
    if (!t.b.empty()) s += sum_term(t.b) + " -> ";
    return s + sum_term(t.a) + " -> I -> 0";
}

} // namespace qhilb
