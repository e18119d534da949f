#pragma once

#include <array>
#include <optional>
#include <string>

#include "qhilb/castelnuovo.hpp"
#include "qhilb/series.hpp"

namespace qhilb {

// Coordinates in the basis [O], [S], [Q], [P] of K_0.
struct K0Class {
    long long r = 0, a = 0, b = 0, c = 0;

    std::array<long long, 4> vec() const { return {r, a, b, c}; }
    static K0Class from_vec(const std::array<long long, 4>& v) { return {v[0], v[1], v[2], v[3]}; }
    K0Class operator+(const K0Class& o) const { return {r + o.r, a + o.a, b + o.b, c + o.c}; }
    K0Class operator-(const K0Class& o) const { return {r - o.r, a - o.a, b - o.b, c - o.c}; }
    K0Class operator*(long long k) const { return {k * r, k * a, k * b, k * c}; }
    friend bool operator==(const K0Class& x, const K0Class& y) { return x.vec() == y.vec(); }
};

using Mat4 = std::array<std::array<long long, 4>, 4>;

struct K0Matrices {
    Mat4 sh_B;    // shift by one, basis O, O(-1), O(-2), O(-3)
    Mat4 chi_B;   // Euler form, same basis
    Mat4 sh_Bp;   // shift by one, basis O, S, Q, P
    Mat4 chi_Bp;  // Euler form, basis O, S, Q, P
};

const K0Matrices& matrices();
// columns: O, O(-1), O(-2), O(-3) written in the basis O, S, Q, P
Mat4 base_change_B_to_Bp();
// true iff sh_Bp = T sh_B T^-1 and chi_B = T^t chi_Bp T
bool check_base_change();

Mat4 mat_mul(const Mat4& x, const Mat4& y);
std::array<long long, 4> mat_apply(const Mat4& m, const std::array<long long, 4>& v);
long long bilinear(const Mat4& m, const std::array<long long, 4>& x, const std::array<long long, 4>& y);

K0Class shift(const K0Class& cls, long long d);
// d-fold application of sh_Bp (or its inverse); reference for shift()
K0Class shift_by_matrix(const K0Class& cls, long long d);

long long euler_chi(const K0Class& x, const K0Class& y);

K0Class class_from_char_poly(const LaurentPoly& q);
LaurentPoly char_poly_of_class(const K0Class& cls);

std::optional<InvariantPair> invariants(const K0Class& cls);
struct Normalized {
    long long d;
    K0Class cls;
};
Normalized normalize(const K0Class& cls);
K0Class normalized_class(long ne, long no);

std::array<long, 4> cohomology_dims(long ne, long no);
long chi_O_shift(long ne, long no, long l);
long ext1_selfdim(long ne, long no);

struct Restriction {
    long long rank;
    long long degree;
};
Restriction restriction_data(const K0Class& cls);

struct LineBundleMN {
    long m = 0, n = 0;
};
K0Class linear_class(const LineBundleMN& mn);
struct LinearNormalization {
    long d;
    long u;
    InvariantPair inv;
};
LinearNormalization linear_normalize(const LineBundleMN& mn);

std::string to_string(const K0Class& c);
K0Class parse_class(const std::string& text);  // "r,a,b,c"

} // namespace qhilb
