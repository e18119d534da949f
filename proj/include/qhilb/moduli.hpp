#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhilb/castelnuovo.hpp"
#include "qhilb/matrix.hpp"
#include "qhilb/rep.hpp"

namespace qhilb {

// (X, Y, X', Y') with X, Y of shape n_e x n_o and X', Y' of shape n_o x n_e.
template <class F>
struct ModuliPoint {
    F field{};
    std::size_t ne = 0, no = 0;
    Matrix<F> X, Y, Xp, Yp;

    void check_shapes() const
    {
        for (const Matrix<F>* m : {&X, &Y})
            if (m->rows() != ne || m->cols() != no) throw std::invalid_argument("X, Y must be n_e x n_o");
        for (const Matrix<F>* m : {&Xp, &Yp})
            if (m->rows() != no || m->cols() != ne) throw std::invalid_argument("X', Y' must be n_o x n_e");
    }
};

template <class F>
Matrix<F> moduli_Z(const ModuliPoint<F>& p)
{
    return p.Yp * p.X - p.Xp * p.Y;
}

template <class F>
Matrix<F> moduli_M(const ModuliPoint<F>& p)
{
    return p.Y * p.Xp - p.X * p.Yp - Matrix<F>::identity(p.field, p.ne);
}

template <class F>
bool membership(const ModuliPoint<F>& p)
{
    p.check_shapes();
    if (moduli_Z(p) != Matrix<F>::identity(p.field, p.no)) return false;
    return rank(moduli_M(p)) <= 1;
}

template <class F>
QuiverRep0<F> to_rep0(const ModuliPoint<F>& p)
{
    QuiverRep0<F> r;
    r.field = p.field;
    r.dims = {p.no, p.ne, p.no};
    r.X = {p.X, p.Xp};
    r.Y = {p.Y, p.Yp};
    return r;
}

inline long expected_tangent_dim(long ne, long no)
{
    long d = ne - no;
    return 2 * (ne - d * d) + ne * ne + no * no - 1;
}

// 4 n_e n_o minus the rank of the Jacobian of the entries of Y'X - X'Y - I
// and the 2x2 minors of YX' - XY' - I.
template <class F>
long tangent_dim(const ModuliPoint<F>& p)
{
    if (!membership(p)) throw std::invalid_argument("tangent_dim: point is not a member");
    const F& f = p.field;
    std::size_t ne = p.ne, no = p.no;
    Matrix<F> M = moduli_M(p);
    if (ne >= 2 && rank(M) != 1) throw std::invalid_argument("tangent_dim: rank(YX'-XY'-I) must be exactly 1");
    std::size_t nv = 4 * ne * no;
    std::size_t n_minors = ne >= 2 ? (ne * (ne - 1) / 2) * (ne * (ne - 1) / 2) : 0;
    Matrix<F> J(f, no * no + n_minors, nv);
    for (std::size_t v = 0; v < nv; ++v) {
        // direction: a single unit entry in one of X, Y, X', Y'
        Matrix<F> dX(f, ne, no), dY(f, ne, no), dXp(f, no, ne), dYp(f, no, ne);
        std::size_t blk = v / (ne * no), idx = v % (ne * no);
        if (blk == 0) dX(idx / no, idx % no) = f.one();
        if (blk == 1) dY(idx / no, idx % no) = f.one();
        if (blk == 2) dXp(idx / ne, idx % ne) = f.one();
        if (blk == 3) dYp(idx / ne, idx % ne) = f.one();
        Matrix<F> dZ = dYp * p.X + p.Yp * dX - dXp * p.Y - p.Xp * dY;
        Matrix<F> dM = dY * p.Xp + p.Y * dXp - dX * p.Yp - p.X * dYp;
        std::size_t row = 0;
        for (std::size_t i = 0; i < no; ++i)
            for (std::size_t j = 0; j < no; ++j) J(row++, v) = dZ(i, j);
        for (std::size_t i1 = 0; i1 < ne; ++i1)
            for (std::size_t i2 = i1 + 1; i2 < ne; ++i2)
                for (std::size_t k1 = 0; k1 < ne; ++k1)
                    for (std::size_t k2 = k1 + 1; k2 < ne; ++k2)
                        J(row++, v) = dM(i1, k1) * M(i2, k2) + M(i1, k1) * dM(i2, k2) - dM(i1, k2) * M(i2, k1) -
                                      M(i1, k2) * dM(i2, k1);
    }
    return (long)nv - (long)rank(J);
}

namespace detail {

// Linear system for Y'X - X'Y = I in the entries of (X', Y') (X' first,
// row-major).  If u is given, v becomes n_e further unknowns and the system
// also imposes YX' - XY' - u v^t = I; both sides are linear in (X', Y', v).
template <class F>
std::optional<AffineSolution<F>> moduli_linear_system(const Matrix<F>& X, const Matrix<F>& Y, const Matrix<F>* u)
{
    const F& f = X.field();
    std::size_t ne = X.rows(), no = X.cols();
    std::size_t nu = 2 * no * ne + (u ? ne : 0);
    auto xp = [&](std::size_t a, std::size_t b) { return a * ne + b; };
    auto yp = [&](std::size_t a, std::size_t b) { return no * ne + a * ne + b; };
    auto vv = [&](std::size_t j) { return 2 * no * ne + j; };
    std::size_t neq = no * no + (u ? ne * ne : 0);
    Matrix<F> A(f, neq, nu), rhs(f, neq, 1);
    std::size_t row = 0;
    for (std::size_t i = 0; i < no; ++i)
        for (std::size_t j = 0; j < no; ++j, ++row) {
            // (Y'X)_ij - (X'Y)_ij
            for (std::size_t k = 0; k < ne; ++k) {
                A(row, yp(i, k)) += X(k, j);
                A(row, xp(i, k)) -= Y(k, j);
            }
            if (i == j) rhs(row, 0) = f.one();
        }
    if (u)
        for (std::size_t i = 0; i < ne; ++i)
            for (std::size_t j = 0; j < ne; ++j, ++row) {
                // (YX')_ij - (XY')_ij - u_i v_j
                for (std::size_t k = 0; k < no; ++k) {
                    A(row, xp(k, j)) += Y(i, k);
                    A(row, yp(k, j)) -= X(i, k);
                }
                A(row, vv(j)) -= (*u)(i, 0);
                if (i == j) rhs(row, 0) = f.one();
            }
    return solve(A, rhs);
}

template <class F, class Rng>
std::optional<ModuliPoint<F>> search_attempt(std::size_t ne, std::size_t no, const F& f, Rng& rng)
{
    ModuliPoint<F> p;
    p.field = f;
    p.ne = ne;
    p.no = no;
    p.X = Matrix<F>::random(f, ne, no, rng);
    p.Y = Matrix<F>::random(f, ne, no, rng);
    // First look for YX' - XY' - I = u v^t with a random column u, solving
    // for v together with (X', Y'); the trace condition v.u = -(n_e + n_o)
    // follows from the equations.
    std::optional<AffineSolution<F>> sol;
    if (ne > 0) {
        Matrix<F> u = Matrix<F>::random(f, ne, 1, rng);
        if (!u.is_zero()) sol = moduli_linear_system(p.X, p.Y, &u);
    }
    // Fall back to the affine space of Y'X - X'Y = I alone and sample it.
    if (!sol) sol = moduli_linear_system<F>(p.X, p.Y, nullptr);
    if (!sol) return std::nullopt;
    Matrix<F> x = sol->particular;
    for (std::size_t k = 0; k < sol->directions.cols(); ++k)
        x = x + sol->directions.block(0, k, x.rows(), 1).scaled(f.random(rng));
    p.Xp = Matrix<F>(f, no, ne);
    p.Yp = Matrix<F>(f, no, ne);
    for (std::size_t a = 0; a < no; ++a)
        for (std::size_t b = 0; b < ne; ++b) {
            p.Xp(a, b) = x(a * ne + b, 0);
            p.Yp(a, b) = x(no * ne + a * ne + b, 0);
        }
    if (!membership(p)) return std::nullopt;
    return p;
}

template <class F>
std::string point_key(const ModuliPoint<F>& p)
{
    std::string s;
    for (const Matrix<F>* m : {&p.X, &p.Y, &p.Xp, &p.Yp})
        for (std::size_t i = 0; i < m->rows(); ++i)
            for (std::size_t j = 0; j < m->cols(); ++j) s += p.field.to_string((*m)(i, j)) + ",";
    return s;
}

} // namespace detail

// Randomized search for members.  The sample space is split into a fixed
// number of shards with independent seeded generators, so the result does
// not depend on the number of threads.
template <class F>
std::vector<ModuliPoint<F>> search(long ne, long no, const F& f, long budget, std::uint64_t seed,
                                   std::size_t max_points = 16)
{
    if (!in_N(ne, no)) throw std::invalid_argument("search: invariants not in N");
    constexpr int shards = 8;
    std::vector<std::vector<ModuliPoint<F>>> found(shards);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < shards; ++s) {
        std::seed_seq seq{seed, (std::uint64_t)s, (std::uint64_t)ne, (std::uint64_t)no};
        std::mt19937_64 rng(seq);
        long share = budget / shards + (s < budget % shards ? 1 : 0);
        for (long t = 0; t < share && found[s].size() < max_points; ++t) {
            auto p = detail::search_attempt((std::size_t)ne, (std::size_t)no, f, rng);
            if (p) found[s].push_back(std::move(*p));
        }
    }
    std::vector<std::pair<std::string, ModuliPoint<F>>> all;
    for (auto& v : found)
        for (auto& p : v) {
            std::string k = detail::point_key(p);
            all.emplace_back(std::move(k), std::move(p));
        }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    all.erase(std::unique(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              all.end());
    std::vector<ModuliPoint<F>> out;
    for (auto& kp : all) {
        if (out.size() >= max_points) break;
        out.push_back(std::move(kp.second));
    }
    return out;
}

// Exact count of members over F_p by exhaustive enumeration.
std::uint64_t count_exhaustive(long ne, long no, std::uint64_t p);
// Reference implementation through the generic exact matrix layer.
std::uint64_t count_exhaustive_serial(long ne, long no, std::uint64_t p);

} // namespace qhilb
