#include "qhilb/ktheory.hpp"

#include <sstream>
#include <stdexcept>

namespace qhilb {

const K0Matrices& matrices()
{
    static const K0Matrices m{
        {{{2, 1, 0, 0}, {0, 0, 1, 0}, {-2, 0, 0, 1}, {1, 0, 0, 0}}},
        {{{1, 0, 0, 0}, {2, 1, 0, 0}, {4, 2, 1, 0}, {6, 4, 2, 1}}},
        {{{1, 0, 0, 0}, {-1, -1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}}},
        {{{1, 1, 1, 1}, {-1, 0, -1, 0}, {-3, -1, -2, 0}, {1, 0, 0, 0}}},
    };
    return m;
}

Mat4 base_change_B_to_Bp()
{
    // O(-1) = O - S, O(-2) = O - Q, O(-3) = O - S - Q + P
    return {{{1, 1, 1, 1}, {0, -1, 0, -1}, {0, 0, -1, -1}, {0, 0, 0, 1}}};
}

Mat4 mat_mul(const Mat4& x, const Mat4& y)
{
    Mat4 z{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
}

static Mat4 transpose(const Mat4& x)
{
    Mat4 z{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z[i][j] = x[j][i];
    return z;
}

std::array<long long, 4> mat_apply(const Mat4& m, const std::array<long long, 4>& v)
{
    std::array<long long, 4> w{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w[i] += m[i][j] * v[j];
    return w;
}

long long bilinear(const Mat4& m, const std::array<long long, 4>& x, const std::array<long long, 4>& y)
{
    auto my = mat_apply(m, y);
    long long s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * my[i];
    return s;
}

bool check_base_change()
{
    const auto& m = matrices();
    Mat4 t = base_change_B_to_Bp();
    return mat_mul(m.sh_Bp, t) == mat_mul(t, m.sh_B) && m.chi_B == mat_mul(transpose(t), mat_mul(m.chi_Bp, t));
}

K0Class shift(const K0Class& x, long long d)
{
    if (d % 2 == 0) {
        long long l = d / 2;
        return {x.r, x.a, l * x.r + x.b, l * ((l + 1) * x.r + x.a + 2 * x.b) + x.c};
    }
    long long l = (d + 1) / 2;
    return {x.r, -(x.r + x.a), l * x.r + x.a + x.b, l * (l * x.r + x.a + 2 * x.b) - x.b + x.c};
}

K0Class shift_by_matrix(const K0Class& cls, long long d)
{
    // the inverse of sh_Bp, worked out once by hand and checked below
    static const Mat4 inv = {{{1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 1, 1, 0}, {0, 0, -1, 1}}};
    const Mat4& fwd = matrices().sh_Bp;
    if (mat_mul(fwd, inv) != Mat4{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}})
        throw std::logic_error("inverse shift matrix is wrong");
    auto v = cls.vec();
    for (long long i = 0; i < (d < 0 ? -d : d); ++i) v = mat_apply(d < 0 ? inv : fwd, v);
    return K0Class::from_vec(v);
}

long long euler_chi(const K0Class& x, const K0Class& y) { return bilinear(matrices().chi_Bp, x.vec(), y.vec()); }

static long long to_ll(const mpz_class& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("K0 coordinate out of range");
    return z.get_si();
}

K0Class class_from_char_poly(const LaurentPoly& q)
{
    // q = r + a(1-t) + b(1-t^2) + c(1-t^2)(1-t) + f(t)(1-t^2)(1-t)^2
    mpz_class r = q.eval(1);
    mpz_class qm1 = q.eval(-1) - r;
    if (qm1 % 2 != 0) throw std::logic_error("q(-1) - q(1) must be even");
    mpz_class a = qm1 / 2;
    LaurentPoly rest = q - LaurentPoly(1) * LaurentPoly::monomial(r, 0) - LaurentPoly::one_minus_t() * LaurentPoly::monomial(a, 0);
    LaurentPoly q1 = rest.div_one_minus_t().div_one_plus_t();
    mpz_class b = q1.eval(1);
    LaurentPoly q2 = (q1 - LaurentPoly::monomial(b, 0)).div_one_minus_t();
    mpz_class c = q2.eval(1);
    return {to_ll(r), to_ll(a), to_ll(b), to_ll(c)};
}

LaurentPoly char_poly_of_class(const K0Class& x)
{
    LaurentPoly s = LaurentPoly::one_minus_t(), q = LaurentPoly::one_minus_t2();
    auto k = [](long long v) { return LaurentPoly::monomial(mpz_class((long)v), 0); };
    return k(x.r) + k(x.a) * s + k(x.b) * q + k(x.c) * q * s;
}

std::optional<InvariantPair> invariants(const K0Class& x)
{
    if (x.r != 1 || x.a != -2 * x.b) return std::nullopt;
    return InvariantPair{(long)(x.b - x.c), (long)(-x.c)};
}

Normalized normalize(const K0Class& x)
{
    if (x.r != 1) throw std::invalid_argument("normalize requires rank one");
    long long d;
    if (x.a % 2 == 0)
        d = 2 * (-x.a / 2 - x.b);
    else
        d = 2 * ((1 - x.a - 2 * x.b) / 2) - 1;
    K0Class y = shift(x, d);
    if (y.a != -2 * y.b) throw std::logic_error("normalization failed");
    return {d, y};
}

K0Class normalized_class(long ne, long no)
{
    long long d = ne - no;
    return {1, -2 * d, d, -(long long)no};
}

std::array<long, 4> cohomology_dims(long ne, long no)
{
    if (ne == 0 && no == 0) throw std::invalid_argument("cohomology dimensions are not defined for (0,0)");
    if (!in_N(ne, no)) throw std::invalid_argument("invariants not in N");
    return {ne - 1, no, ne, no};
}

long chi_O_shift(long ne, long no, long l)
{
    if (l % 2 == 0) return (l + 2) * (l + 2) / 4 - ne;
    return (l + 1) * (l + 3) / 4 - no;
}

long ext1_selfdim(long ne, long no)
{
    long d = ne - no;
    return 2 * (ne - d * d);
}

Restriction restriction_data(const K0Class& x) { return {x.r, 2 * x.a + 4 * x.b}; }

K0Class linear_class(const LineBundleMN& mn)
{
    long long m = mn.m, n = mn.n;
    return {1, m - n, n, n * (m + 1)};
}

LinearNormalization linear_normalize(const LineBundleMN& mn)
{
    long diff = mn.m - mn.n;
    long u = (diff % 2 == 0) ? diff / 2 : (mn.n - mn.m - 1) / 2;
    return {-mn.m - mn.n, u, {u * u, u * (u + 1)}};
}

std::string to_string(const K0Class& c)
{
    std::ostringstream o;
    o << c.r << "," << c.a << "," << c.b << "," << c.c;
    return o.str();
}

K0Class parse_class(const std::string& text)
{
    std::array<long long, 4> v{};
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw std::invalid_argument("class needs exactly four coordinates");
        std::size_t pos = 0;
        v[i++] = std::stoll(item, &pos);
        while (pos < item.size() && item[pos] == ' ') ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad class coordinate: " + item);
    }
    if (i != 4) throw std::invalid_argument("class needs exactly four coordinates");
    return K0Class::from_vec(v);
}

} // namespace qhilb
