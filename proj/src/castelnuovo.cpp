#include "qhilb/castelnuovo.hpp"

#include <algorithm>

namespace qhilb {

CastelnuovoPoly validate(std::vector<long> s)
{
    while (!s.empty() && s.back() == 0) s.pop_back();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 0) throw CastelnuovoError(i, "negative coefficient at index " + std::to_string(i));
    std::size_t sigma = 0;
    while (sigma < s.size() && s[sigma] == (long)sigma + 1) ++sigma;
    // after the staircase the coefficients may not increase, starting from s_{sigma-1}
    long prev = (long)sigma;
    for (std::size_t i = sigma; i < s.size(); ++i) {
        if (s[i] > prev)
            throw CastelnuovoError(i, "coefficient " + std::to_string(s[i]) + " at index " + std::to_string(i) +
                                          " exceeds its predecessor " + std::to_string(prev));
        prev = s[i];
    }
    return {std::move(s), (int)sigma};
}

InvariantPair weights(const CastelnuovoPoly& s)
{
    InvariantPair w;
    for (std::size_t i = 0; i < s.s.size(); ++i) (i % 2 == 0 ? w.ne : w.no) += s.s[i];
    return w;
}

namespace {

void extend_tail(std::vector<long>& cur, long cap, long re, long ro, int sigma, std::vector<CastelnuovoPoly>& out)
{
    if (re == 0 && ro == 0) {
        out.push_back({cur, sigma});
        return;
    }
    bool even = cur.size() % 2 == 0;
    long room = even ? re : ro, other = even ? ro : re;
    // a nonincreasing tail v_1 >= v_2 >= ... has
    // 0 <= (v_1 + v_3 + ...) - (v_2 + v_4 + ...) <= v_1
    if (room < other || room - other > cap) return;
    for (long v = std::min(cap, room); v >= std::max(1L, room - other); --v) {
        cur.push_back(v);
        extend_tail(cur, v, even ? re - v : re, even ? ro : ro - v, sigma, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<CastelnuovoPoly> enumerate(long ne, long no)
{
    std::vector<CastelnuovoPoly> out;
    if (ne < 0 || no < 0) return out;
    std::vector<long> stair;
    long se = 0, so = 0;
    for (int sigma = 0;; ++sigma) {
        if (sigma > 0) {
            long v = sigma;
            stair.push_back(v);
            ((sigma - 1) % 2 == 0 ? se : so) += v;
        }
        if (se > ne || so > no) break;
        std::vector<long> cur = stair;
        extend_tail(cur, sigma, ne - se, no - so, sigma, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long count(long ne, long no) { return (long)enumerate(ne, no).size(); }

LaurentPoly char_poly(const CastelnuovoPoly& s)
{
    LaurentPoly sp = LaurentPoly::from_coeffs(s.s);
    return LaurentPoly(1) - sp * LaurentPoly::from_coeffs({1, -2, 1});
}

TruncatedSeries to_hilbert(const CastelnuovoPoly& s, int T)
{
    LaurentPoly q = char_poly(s);
    int top = q.is_zero() ? 0 : q.max_degree();
    if (T >= top) return expand_over_hA(q, T);
    // q has higher degree than requested; expand further and cut
    TruncatedSeries h = expand_over_hA(q, top);
    h.order = T;
    h.coeffs.resize(T - h.start + 1);
    return h;
}

CastelnuovoPoly from_char_poly(const LaurentPoly& q)
{
    LaurentPoly r = LaurentPoly(1) - q;
    LaurentPoly sp;
    try {
        sp = r.div_one_minus_t().div_one_minus_t();
    } catch (const std::domain_error&) {
        throw std::invalid_argument("1 - q is not divisible by (1-t)^2");
    }
    if (sp.is_zero()) return validate({});
    if (sp.min_degree() < 0) throw std::invalid_argument("s(t) has negative-degree terms");
    std::vector<long> coeffs(sp.max_degree() + 1, 0);
    for (const auto& [d, v] : sp.terms()) {
        if (!v.fits_slong_p()) throw std::invalid_argument("coefficient out of range");
        coeffs[d] = v.get_si();
    }
    return validate(coeffs);
}

DistinctPartition to_partition(const CastelnuovoPoly& s)
{
    DistinctPartition p;
    long top = s.s.empty() ? 0 : *std::max_element(s.s.begin(), s.s.end());
    for (long j = 1; j <= top; ++j) {
        long c = 0;
        for (long v : s.s)
            if (v >= j) ++c;
        p.parts.push_back(c);
    }
    return p;
}

InvariantPair chess_weights(const DistinctPartition& lambda)
{
    InvariantPair w;
    for (std::size_t j = 0; j < lambda.parts.size(); ++j)
        for (long i = 0; i < lambda.parts[j]; ++i) ((i + (long)j) % 2 == 0 ? w.ne : w.no) += 1;
    return w;
}

bool in_N(long ne, long no)
{
    if (ne < 0 || no < 0) return false;
    long d = ne - no;
    return ne - d * d >= 0;
}

std::optional<NMembership> n_membership(long ne, long no)
{
    if (!in_N(ne, no)) return std::nullopt;
    long d = ne - no;
    long l = ne - d * d;
    if (d <= 0) return NMembership{-d, l, 1};
    return NMembership{d - 1, l, 2};
}

CastelnuovoPoly extremal_castelnuovo(long k, int which)
{
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (which != 1 && which != 2) throw std::invalid_argument("case must be 1 or 2");
    long sigma = which == 1 ? 2 * k : 2 * k + 1;
    std::vector<long> s;
    for (long i = 0; i < sigma; ++i) s.push_back(i + 1);
    return validate(s);
}

std::string diagram(const CastelnuovoPoly& s)
{
    long top = s.s.empty() ? 0 : *std::max_element(s.s.begin(), s.s.end());
    std::string out;
    for (long row = top; row >= 1; --row) {
        std::string line;
        for (std::size_t i = 0; i < s.s.size(); ++i)
            line += s.s[i] >= row ? (i % 2 == 0 ? "#" : "·") : " ";
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string to_string(const CastelnuovoPoly& s)
{
    return LaurentPoly::from_coeffs(s.s).to_string();
}

} // namespace qhilb
