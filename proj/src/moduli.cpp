#include "qhilb/moduli.hpp"

#include <cmath>
#include <vector>

namespace qhilb {

namespace {

std::uint64_t tuple_count(long ne, long no, std::uint64_t p)
{
    if (ne < 0 || no < 0) throw std::invalid_argument("count_exhaustive: negative size");
    if (!is_prime_u64(p)) throw std::invalid_argument("count_exhaustive: p must be prime");
    long vars = 4 * ne * no;
    if (vars * std::log2((double)p) > 24.0 + 1e-9)
        throw std::invalid_argument("count_exhaustive: enumeration budget exceeded (4 n_e n_o log2 p > 24)");
    std::uint64_t total = 1;
    for (long i = 0; i < vars; ++i) total *= p;
    return total;
}

// Decodes tuple number idx into the entries of X, Y, X', Y' (in that order).
void decode(std::uint64_t idx, std::uint64_t p, std::vector<std::int64_t>& out)
{
    for (auto& v : out) {
        v = (std::int64_t)(idx % p);
        idx /= p;
    }
}

} // namespace

std::uint64_t count_exhaustive(long ne, long no, std::uint64_t p)
{
    std::uint64_t total = tuple_count(ne, no, p);
    const std::int64_t P = (std::int64_t)p;
    const long a = ne * no;
    std::uint64_t hits = 0;
#pragma omp parallel
    {
        std::vector<std::int64_t> e(4 * a), M(ne * ne);
#pragma omp for schedule(static) reduction(+ : hits)
        for (std::int64_t idx = 0; idx < (std::int64_t)total; ++idx) {
            decode((std::uint64_t)idx, p, e);
            const std::int64_t* X = e.data();       // ne x no
            const std::int64_t* Y = X + a;          // ne x no
            const std::int64_t* Xp = Y + a;         // no x ne
            const std::int64_t* Yp = Xp + a;        // no x ne
            bool ok = true;
            for (long i = 0; i < no && ok; ++i)
                for (long j = 0; j < no && ok; ++j) {
                    std::int64_t s = 0;
                    for (long k = 0; k < ne; ++k) s += Yp[i * ne + k] * X[k * no + j] - Xp[i * ne + k] * Y[k * no + j];
                    s %= P;
                    if (s < 0) s += P;
                    ok = s == (i == j ? 1 : 0);
                }
            if (!ok) continue;
            for (long i = 0; i < ne; ++i)
                for (long j = 0; j < ne; ++j) {
                    std::int64_t s = i == j ? -1 : 0;
                    for (long k = 0; k < no; ++k) s += Y[i * no + k] * Xp[k * ne + j] - X[i * no + k] * Yp[k * ne + j];
                    s %= P;
                    M[i * ne + j] = s < 0 ? s + P : s;
                }
            for (long i1 = 0; i1 < ne && ok; ++i1)
                for (long i2 = i1 + 1; i2 < ne && ok; ++i2)
                    for (long k1 = 0; k1 < ne && ok; ++k1)
                        for (long k2 = k1 + 1; k2 < ne && ok; ++k2)
                            ok = (M[i1 * ne + k1] * M[i2 * ne + k2] - M[i1 * ne + k2] * M[i2 * ne + k1]) % P == 0;
            if (ok) ++hits;
        }
    }
    return hits;
}

std::uint64_t count_exhaustive_serial(long ne, long no, std::uint64_t p)
{
    std::uint64_t total = tuple_count(ne, no, p);
    PrimeField f(p);
    std::vector<std::int64_t> e(4 * ne * no);
    std::uint64_t hits = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode(idx, p, e);
        ModuliPoint<PrimeField> pt;
        pt.field = f;
        pt.ne = (std::size_t)ne;
        pt.no = (std::size_t)no;
        pt.X = Matrix<PrimeField>(f, ne, no);
        pt.Y = Matrix<PrimeField>(f, ne, no);
        pt.Xp = Matrix<PrimeField>(f, no, ne);
        pt.Yp = Matrix<PrimeField>(f, no, ne);
        std::size_t k = 0;
        for (Matrix<PrimeField>* m : {&pt.X, &pt.Y, &pt.Xp, &pt.Yp})
            for (std::size_t i = 0; i < m->rows(); ++i)
                for (std::size_t j = 0; j < m->cols(); ++j) (*m)(i, j) = f.from_int(e[k++]);
        if (membership(pt)) ++hits;
    }
    return hits;
}

} // namespace qhilb
