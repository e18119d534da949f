#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>
#include <vector>

#include "qhilb/castelnuovo.hpp"
#include "qhilb/matrix.hpp"
#include "qhilb/ncalgebra.hpp"
#include "qhilb/rep.hpp"

namespace qhilb {

// Simple representation concentrated at vertex index v (0 is vertex -3).
template <class F, std::size_t N>
DoubledRep<F, N> simple_rep(const F& f, std::size_t v)
{
    std::array<std::size_t, N> d{};
    d.at(v) = 1;
    return DoubledRep<F, N>::zero(f, d);
}

template <class F>
bool check_relations(const QuiverRep<F>& rep, const AlgebraSpec& spec)
{
    rep.check_shapes();
    Matrix<F> K = ma_substituted(spec, rep.X[0], rep.Y[0], rep.X[1], rep.Y[1]);
    return (Matrix<F>::hstack(rep.X[2], rep.Y[2]) * K).is_zero();
}

// Dimension of the space of morphisms F -> G.
template <class F, std::size_t N>
std::size_t hom_dim(const DoubledRep<F, N>& a, const DoubledRep<F, N>& b)
{
    a.check_shapes();
    b.check_shapes();
    if (!(a.field == b.field)) throw std::invalid_argument("hom_dim: representations over different fields");
    const F& f = a.field;
    std::array<std::size_t, N> off{};
    std::size_t unknowns = 0;
    for (std::size_t v = 0; v < N; ++v) {
        off[v] = unknowns;
        unknowns += b.dims[v] * a.dims[v];
    }
    // phi_v is dims_b[v] x dims_a[v], stored row-major at off[v]
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return off[v] + r * a.dims[v] + c; };
    std::size_t eqs = 0;
    for (std::size_t i = 0; i + 1 < N; ++i) eqs += 2 * b.dims[i + 1] * a.dims[i];
    Matrix<F> sys(f, eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        for (int which = 0; which < 2; ++which) {
            const Matrix<F>& Ga = which ? b.Y[i] : b.X[i];
            const Matrix<F>& Fa = which ? a.Y[i] : a.X[i];
            // G_arrow * phi_i - phi_{i+1} * F_arrow = 0
            for (std::size_t r = 0; r < b.dims[i + 1]; ++r)
                for (std::size_t c = 0; c < a.dims[i]; ++c, ++row) {
                    for (std::size_t k = 0; k < b.dims[i]; ++k) sys(row, var(i, k, c)) += Ga(r, k);
                    for (std::size_t k = 0; k < a.dims[i + 1]; ++k) sys(row, var(i + 1, r, k)) -= Fa(k, c);
                }
        }
    }
    return unknowns - rank(sys);
}

inline long chi_gamma(const std::array<long, 4>& d1, const std::array<long, 4>& d2)
{
    static const long m[4][4] = {{1, -2, 0, 2}, {0, 1, -2, 0}, {0, 0, 1, -2}, {0, 0, 0, 1}};
    long s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += d1[i] * m[i][j] * d2[j];
    return s;
}

inline long chi_gamma0(const std::array<long, 3>& d1, const std::array<long, 3>& d2)
{
    return chi_gamma({d1[0], d1[1], d1[2], 0}, {d2[0], d2[1], d2[2], 0});
}

template <class F>
long ext1_dim_gamma0(const QuiverRep0<F>& a, const QuiverRep0<F>& b)
{
    std::array<long, 3> d1{}, d2{};
    for (int i = 0; i < 3; ++i) {
        d1[i] = (long)a.dims[i];
        d2[i] = (long)b.dims[i];
    }
    return (long)hom_dim(a, b) - chi_gamma0(d1, d2);
}

template <class F>
QuiverRep0<F> res(const QuiverRep<F>& rep)
{
    rep.check_shapes();
    QuiverRep0<F> r;
    r.field = rep.field;
    for (int i = 0; i < 3; ++i) r.dims[i] = rep.dims[i];
    for (int i = 0; i < 2; ++i) {
        r.X[i] = rep.X[i];
        r.Y[i] = rep.Y[i];
    }
    return r;
}

// V_0 is the cokernel of the relation block V_{-3}^2 -> V_{-1}^2, and
// (X_{-1}, Y_{-1}) are the two halves of the projection.
template <class F>
QuiverRep<F> ind(const QuiverRep0<F>& F0, const AlgebraSpec& spec)
{
    F0.check_shapes();
    Matrix<F> K = ma_substituted(spec, F0.X[0], F0.Y[0], F0.X[1], F0.Y[1]);
    Matrix<F> pi = cokernel_projection(K);
    std::size_t d1 = F0.dims[2];
    QuiverRep<F> r;
    r.field = F0.field;
    r.dims = {F0.dims[0], F0.dims[1], F0.dims[2], pi.rows()};
    for (int i = 0; i < 2; ++i) {
        r.X[i] = F0.X[i];
        r.Y[i] = F0.Y[i];
    }
    r.X[2] = pi.block(0, 0, pi.rows(), d1);
    r.Y[2] = pi.block(0, d1, pi.rows(), d1);
    return r;
}

template <class F>
bool membership_C_Hc(const QuiverRep<F>& rep)
{
    rep.check_shapes();
    long no = (long)rep.dims[0], ne = (long)rep.dims[1];
    if ((long)rep.dims[2] != no || (long)rep.dims[3] != ne - 1) return false;
    if (!in_N(ne, no) || (ne == 0 && no == 0)) return false;
    if (!check_relations(rep, AlgebraSpec::hc())) return false;
    Matrix<F> z3 = rep.Y[1] * rep.X[0] - rep.X[1] * rep.Y[0];
    if (rank(z3) != (std::size_t)no) return false;
    Matrix<F> z2 = rep.Y[2] * rep.X[1] - rep.X[2] * rep.Y[1];
    return rank(z2) == rep.dims[3];
}

template <class F>
bool membership_D_Hc(const QuiverRep0<F>& F0)
{
    F0.check_shapes();
    long no = (long)F0.dims[0], ne = (long)F0.dims[1];
    if ((long)F0.dims[2] != no) return false;
    if (!in_N(ne, no) || (ne == 0 && no == 0)) return false;
    const Matrix<F>&X = F0.X[0], &Y = F0.Y[0], &Xp = F0.X[1], &Yp = F0.Y[1];
    auto zinv = inverse(Matrix<F>(Yp * X - Xp * Y));
    if (!zinv) return false;
    Matrix<F> W = Y * *zinv * Xp - X * *zinv * Yp - Matrix<F>::identity(F0.field, (std::size_t)ne);
    return rank(W) <= 1;
}

template <class F>
bool rank_condition_typeA(const QuiverRep0<F>& F0, const AlgebraSpec& spec)
{
    F0.check_shapes();
    long no = (long)F0.dims[0], ne = (long)F0.dims[1];
    if ((long)F0.dims[2] != no) throw std::invalid_argument("dimension vector must be (n_o, n_e, n_o)");
    Matrix<F> K = ma_substituted(spec, F0.X[0], F0.Y[0], F0.X[1], F0.Y[1]);
    return (long)rank(K) <= 2 * no - (ne - 1);
}

enum class Stability { Stable, Semistable, Unstable };

inline const char* to_string(Stability s)
{
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Semistable: return "semistable";
    default: return "unstable";
    }
}

namespace detail {

// All subspaces of F_p^n as row-reduced bases (k x n matrices).
std::vector<Matrix<PrimeField>> all_subspaces(const PrimeField& f, std::size_t n);
// Whether v (column) lies in the row span of an RREF basis.
bool in_span(const Matrix<PrimeField>& rref_basis, const Matrix<PrimeField>& v);
bool maps_into(const Matrix<PrimeField>& A, const Matrix<PrimeField>& U, const Matrix<PrimeField>& target);

struct StabilityScan {
    std::vector<Matrix<PrimeField>> s3, s2, s1;
};
StabilityScan prepare_scan(const QuiverRep0<PrimeField>& F0);
// minimum of theta over nonzero proper subrepresentations whose vertex -3
// part is s3[i]; LONG_MAX if there is none
long scan_one(const QuiverRep0<PrimeField>& F0, const StabilityScan& s, std::size_t i);
Stability classify(const QuiverRep0<PrimeField>& F0, long min_theta);

} // namespace detail

// theta = (-1, 0, 1); exhaustive over subspace triples, OpenMP-parallel over
// the vertex -3 component.
Stability theta_stable_bruteforce(const QuiverRep0<PrimeField>& F0);
// single-threaded reference
Stability theta_stable_serial(const QuiverRep0<PrimeField>& F0);

} // namespace qhilb
