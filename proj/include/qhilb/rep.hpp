#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "qhilb/matrix.hpp"

namespace qhilb {

// Representation of the linear quiver with N vertices -3, -2, ... and two
// arrows X_i, Y_i : V_i -> V_{i+1} between consecutive vertices.  Arrow
// matrices act on column vectors, so X_i has shape dim V_{i+1} x dim V_i.
template <class F, std::size_t N>
struct DoubledRep {
    F field{};
    std::array<std::size_t, N> dims{};
    std::array<Matrix<F>, N - 1> X;
    std::array<Matrix<F>, N - 1> Y;

    static DoubledRep zero(const F& f, const std::array<std::size_t, N>& d)
    {
        DoubledRep r;
        r.field = f;
        r.dims = d;
        for (std::size_t i = 0; i + 1 < N; ++i) {
            r.X[i] = Matrix<F>(f, d[i + 1], d[i]);
            r.Y[i] = Matrix<F>(f, d[i + 1], d[i]);
        }
        return r;
    }

    void check_shapes() const
    {
        for (std::size_t i = 0; i + 1 < N; ++i) {
            for (const Matrix<F>* m : {&X[i], &Y[i]})
                if (m->rows() != dims[i + 1] || m->cols() != dims[i])
                    throw std::invalid_argument("arrow " + std::to_string(i) + " has shape " + m->shape() +
                                                ", expected " + std::to_string(dims[i + 1]) + "x" + std::to_string(dims[i]));
        }
    }

    std::size_t total_dim() const
    {
        std::size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }

    friend bool operator==(const DoubledRep& a, const DoubledRep& b)
    {
        return a.dims == b.dims && a.X == b.X && a.Y == b.Y;
    }
};

// vertices -3, -2, -1, 0
template <class F>
using QuiverRep = DoubledRep<F, 4>;
// vertices -3, -2, -1
template <class F>
using QuiverRep0 = DoubledRep<F, 3>;

} // namespace qhilb
