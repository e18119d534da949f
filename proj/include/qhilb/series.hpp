#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qhilb {

// Integer Laurent polynomial in t with finite support; zero coefficients
// are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { set(0, mpz_class(c)); }
    static LaurentPoly monomial(const mpz_class& c, int deg);
    // coefficients of t^start, t^(start+1), ...
    static LaurentPoly from_coeffs(const std::vector<long>& c, int start = 0);
    static LaurentPoly one_minus_t() { return from_coeffs({1, -1}); }
    static LaurentPoly one_minus_t2() { return from_coeffs({1, 0, -1}); }

    const std::map<int, mpz_class>& terms() const { return c_; }
    mpz_class coeff(int deg) const;
    void set(int deg, const mpz_class& v);
    bool is_zero() const { return c_.empty(); }
    int min_degree() const;  // requires nonzero
    int max_degree() const;

    mpz_class eval(long t) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(int k) const;  // multiply by t^k
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // exact quotient by (1 - t) resp. (1 + t); throws if not divisible
    LaurentPoly div_one_minus_t() const;
    LaurentPoly div_one_plus_t() const;

    std::string to_string() const;

private:
    std::map<int, mpz_class> c_;
};

// Coefficients of degrees start..order of a power series.
struct TruncatedSeries {
    int start = 0;
    int order = -1;
    std::vector<mpz_class> coeffs;

    mpz_class at(int deg) const;  // 0 below start; throws above order
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.start == b.start && a.order == b.order && a.coeffs == b.coeffs;
    }
};

mpz_class hA_coefficient(long n);

// coefficients of q / ((1-t)^2 (1-t^2)) from min(0, min deg q) through T
TruncatedSeries expand_over_hA(const LaurentPoly& q, int T);

struct GkMultiplicity {
    int gk;
    mpq_class e;
};
GkMultiplicity gk_dim_and_multiplicity(const LaurentPoly& q);

mpz_class rank(const LaurentPoly& q);

// Parses either a JSON object {"deg": "coeff"} or an expression such as
// "1 - 2t^2 + t^-1".
LaurentPoly parse_poly(const std::string& text);

} // namespace qhilb
