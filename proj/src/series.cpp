#include "qhilb/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <json.hpp>

namespace qhilb {

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int deg)
{
    LaurentPoly p;
    p.set(deg, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long>& c, int start)
{
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i) p.set(start + (int)i, mpz_class(c[i]));
    return p;
}

mpz_class LaurentPoly::coeff(int deg) const
{
    auto it = c_.find(deg);
    return it == c_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::set(int deg, const mpz_class& v)
{
    if (v == 0)
        c_.erase(deg);
    else
        c_[deg] = v;
}

int LaurentPoly::min_degree() const
{
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_degree() const
{
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.rbegin()->first;
}

mpz_class LaurentPoly::eval(long t) const
{
    if (t == 0) return coeff(0);  // only meaningful for honest polynomials
    mpq_class s = 0;
    for (const auto& [d, v] : c_) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(t).get_mpz_t(), (unsigned long)std::abs(d));
        if (d >= 0)
            s += mpq_class(v * pw);
        else {
            mpq_class term(v, pw);
            term.canonicalize();  // pw may be negative
            s += term;
        }
    }
    s.canonicalize();
    if (s.get_den() != 1) throw std::domain_error("non-integral evaluation");
    return s.get_num();
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    for (const auto& [d, v] : o.c_) r.set(d, r.coeff(d) + v);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (const auto& [d, v] : c_) r.c_[d] = -v;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r;
    for (const auto& [d1, v1] : c_)
        for (const auto& [d2, v2] : o.c_) r.set(d1 + d2, r.coeff(d1 + d2) + v1 * v2);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r;
    for (const auto& [d, v] : c_) r.c_[d + k] = v;
    return r;
}

LaurentPoly LaurentPoly::div_one_minus_t() const
{
    if (c_.empty()) return {};
    // quotient coefficients are the partial sums; the final one must vanish
    LaurentPoly r;
    mpz_class acc = 0;
    for (int d = min_degree(); d <= max_degree(); ++d) {
        acc += coeff(d);
        if (d < max_degree()) r.set(d, acc);
    }
    if (acc != 0) throw std::domain_error("not divisible by 1-t: " + to_string());
    return r;
}

LaurentPoly LaurentPoly::div_one_plus_t() const
{
    if (c_.empty()) return {};
    LaurentPoly r;
    mpz_class acc = 0;
    for (int d = min_degree(); d <= max_degree(); ++d) {
        acc = coeff(d) - acc;
        if (d < max_degree()) r.set(d, acc);
    }
    if (acc != 0) throw std::domain_error("not divisible by 1+t: " + to_string());
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [d, v] : c_) {
        mpz_class a = abs(v);
        if (s.empty())
            s += (v < 0 ? "-" : "");
        else
            s += (v < 0 ? " - " : " + ");
        bool unit = (a == 1 && d != 0);
        if (!unit) s += a.get_str();
        if (d != 0) {
            s += "t";
            if (d != 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

mpz_class TruncatedSeries::at(int deg) const
{
    if (deg > order) throw std::out_of_range("series truncated at degree " + std::to_string(order));
    if (deg < start) return 0;
    return coeffs[deg - start];
}

mpz_class hA_coefficient(long n)
{
    if (n < 0) return 0;
    mpz_class m(n);
    if (n % 2 == 0) return (m + 2) * (m + 2) / 4;
    return (m + 1) * (m + 3) / 4;
}

TruncatedSeries expand_over_hA(const LaurentPoly& q, int T)
{
    if (!q.is_zero() && T < q.max_degree())
        throw std::invalid_argument("truncation order below the degree of q");
    TruncatedSeries s;
    s.start = q.is_zero() ? 0 : std::min(0, q.min_degree());
    s.order = T;
    for (int n = s.start; n <= T; ++n) {
        mpz_class c = 0;
        for (const auto& [d, v] : q.terms()) c += v * hA_coefficient((long)n - d);
        s.coeffs.push_back(c);
    }
    return s;
}

GkMultiplicity gk_dim_and_multiplicity(const LaurentPoly& q)
{
    if (q.is_zero()) throw std::invalid_argument("the zero module has no dimension");
    int v = 0;
    LaurentPoly r = q;
    while (r.eval(1) == 0) {
        r = r.div_one_minus_t();
        ++v;
    }
    if (v > 3) throw std::invalid_argument("q vanishes to order > 3 at t=1; not a module series");
    // h = r (1-t)^v / ((1-t)^3 (1+t)), so (1-t)^(3-v) h -> r(1)/2
    mpq_class e(r.eval(1), 2);
    e.canonicalize();
    return {3 - v, e};
}

mpz_class rank(const LaurentPoly& q) { return q.eval(1); }

namespace {

LaurentPoly parse_expression(const std::string& text)
{
    LaurentPoly p;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto read_int = [&](std::string& out) {
        std::size_t b = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        out = text.substr(b, i - b);
        return !out.empty();
    };
    skip();
    if (i == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("expected + or - in polynomial at position " + std::to_string(i));
        }
        first = false;
        std::string num;
        mpz_class c = 1;
        if (read_int(num)) c = mpz_class(num);
        skip();
        if (i < text.size() && text[i] == '*') { ++i; skip(); }
        int deg = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            deg = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                int es = 1;
                if (i < text.size() && text[i] == '-') { es = -1; ++i; }
                std::string e;
                if (!read_int(e)) throw std::invalid_argument("bad exponent in polynomial");
                deg = es * std::stoi(e);
            }
        } else if (num.empty()) {
            throw std::invalid_argument("bad term in polynomial at position " + std::to_string(i));
        }
        p.set(deg, p.coeff(deg) + sign * c);
    }
    return p;
}

} // namespace

LaurentPoly parse_poly(const std::string& text)
{
    auto b = text.find_first_not_of(" \t\n");
    if (b != std::string::npos && text[b] == '{') {
        auto j = nlohmann::json::parse(text);
        LaurentPoly p;
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& v = it.value();
            mpz_class c = v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
            int d = std::stoi(it.key());
            p.set(d, p.coeff(d) + c);
        }
        return p;
    }
    return parse_expression(text);
}

} // namespace qhilb
