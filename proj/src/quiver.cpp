#include "qhilb/quiver.hpp"

#include <cmath>

namespace qhilb {
namespace detail {

std::vector<Matrix<PrimeField>> all_subspaces(const PrimeField& f, std::size_t n)
{
    std::vector<Matrix<PrimeField>> out;
    for (std::size_t k = 0; k <= n; ++k) {
        // choose pivot columns as an increasing k-subset
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            std::vector<bool> is_piv(n, false);
            for (auto c : piv) is_piv[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free.push_back({i, j});
            std::vector<std::uint64_t> digits(free.size(), 0);
            while (true) {
                Matrix<PrimeField> m(f, k, n);
                for (std::size_t i = 0; i < k; ++i) m(i, piv[i]) = f.one();
                for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = Fp(digits[t], f.p);
                out.push_back(std::move(m));
                std::size_t t = 0;
                while (t < digits.size() && digits[t] == f.p - 1) digits[t++] = 0;
                if (t == digits.size()) break;
                ++digits[t];
            }
            // next k-subset
            std::size_t i = k;
            while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

bool in_span(const Matrix<PrimeField>& basis, const Matrix<PrimeField>& v)
{
    // basis is in RREF: subtract the pivot coordinates and test for zero
    std::vector<Fp> w(v.rows());
    for (std::size_t j = 0; j < v.rows(); ++j) w[j] = v(j, 0);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t p = 0;
        while (basis(i, p).value() == 0) ++p;
        Fp c = w[p];
        if (c.value() == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * basis(i, j);
    }
    for (const auto& e : w)
        if (e.value() != 0) return false;
    return true;
}

bool maps_into(const Matrix<PrimeField>& A, const Matrix<PrimeField>& U, const Matrix<PrimeField>& target)
{
    if (U.rows() == 0) return true;
    Matrix<PrimeField> img = A * U.transpose();  // columns are images of the basis
    for (std::size_t c = 0; c < img.cols(); ++c)
        if (!in_span(target, img.block(0, c, img.rows(), 1))) return false;
    return true;
}

StabilityScan prepare_scan(const QuiverRep0<PrimeField>& F0)
{
    F0.check_shapes();
    if (F0.total_dim() > 7) throw std::invalid_argument("stability scan budget exceeded: total dimension above 7");
    if (F0.field.p > 5) throw std::invalid_argument("stability scan budget exceeded: p above 5");
    return {all_subspaces(F0.field, F0.dims[0]), all_subspaces(F0.field, F0.dims[1]),
            all_subspaces(F0.field, F0.dims[2])};
}

long scan_one(const QuiverRep0<PrimeField>& F0, const StabilityScan& s, std::size_t i)
{
    long best = LONG_MAX;
    const auto& u3 = s.s3[i];
    for (const auto& u2 : s.s2) {
        if (!maps_into(F0.X[0], u3, u2) || !maps_into(F0.Y[0], u3, u2)) continue;
        for (const auto& u1 : s.s1) {
            if (!maps_into(F0.X[1], u2, u1) || !maps_into(F0.Y[1], u2, u1)) continue;
            std::size_t tot = u3.rows() + u2.rows() + u1.rows();
            if (tot == 0 || tot == F0.total_dim()) continue;
            best = std::min(best, (long)u1.rows() - (long)u3.rows());
        }
    }
    return best;
}

Stability classify(const QuiverRep0<PrimeField>& F0, long min_theta)
{
    if ((long)F0.dims[2] - (long)F0.dims[0] != 0) return Stability::Unstable;
    if (min_theta > 0) return Stability::Stable;
    if (min_theta == 0) return Stability::Semistable;
    return Stability::Unstable;
}

} // namespace detail

Stability theta_stable_bruteforce(const QuiverRep0<PrimeField>& F0)
{
    auto s = detail::prepare_scan(F0);
    long best = LONG_MAX;
    long n = (long)s.s3.size();
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (long i = 0; i < n; ++i) best = std::min(best, detail::scan_one(F0, s, (std::size_t)i));
    return detail::classify(F0, best);
}

Stability theta_stable_serial(const QuiverRep0<PrimeField>& F0)
{
    auto s = detail::prepare_scan(F0);
    long best = LONG_MAX;
    for (std::size_t i = 0; i < s.s3.size(); ++i) best = std::min(best, detail::scan_one(F0, s, i));
    return detail::classify(F0, best);
}

} // namespace qhilb
