#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qhilb/matrix.hpp"
#include "qhilb/rep.hpp"

namespace qhilb {

// Cubic algebra k<x,y>/(f1, f2) with
//   f1 = a y^2x + b yxy + a xy^2 + c x^3,
//   f2 = a x^2y + b xyx + a yx^2 + c y^3.
// The enveloping algebra of the Heisenberg Lie algebra is (a:b:c) = (1:-2:0).
struct AlgebraSpec {
    enum class Kind { Hc, TypeA };
    Kind kind = Kind::Hc;
    mpq_class a = 1, b = -2, c = 0;

    static AlgebraSpec hc() { return {}; }
    static AlgebraSpec type_a(const mpq_class& a, const mpq_class& b, const mpq_class& c);
    std::string name() const;
};

AlgebraSpec parse_algebra(const std::string& text);  // "hc" or "typea:a,b,c"

// Monomial bases: degree 2 is (xx, xy, yx, yy); degree 3 omits the leading
// words yyx and xxy.
const std::vector<std::string>& monomial_basis(int m);

// M_A with f = M_A (x, y)^t; entries are coefficient vectors over
// (xx, xy, yx, yy).
using Deg2Form = std::array<mpq_class, 4>;
std::array<std::array<Deg2Form, 2>, 2> ma_coefficients(const AlgebraSpec& spec);

template <class F>
std::vector<typename F::Element> normal_form(const std::string& word, const AlgebraSpec& spec, const F& f)
{
    using E = typename F::Element;
    if (word.size() > 3) throw std::invalid_argument("normal forms are only available up to degree 3");
    for (char ch : word)
        if (ch != 'x' && ch != 'y') throw std::invalid_argument("monomials are words in x and y");
    const auto& basis = monomial_basis((int)word.size());
    std::vector<E> v(basis.size(), f.zero());
    auto put = [&](const std::string& w, const E& c) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == w) {
                v[i] += c;
                return;
            }
        throw std::logic_error("word missing from basis: " + w);
    };
    E a = f.from_rational(spec.a), b = f.from_rational(spec.b), c = f.from_rational(spec.c);
    if (word == "yyx") {
        E m = -(f.one() / a);
        put("yxy", m * b);
        put("xyy", m * a);
        put("xxx", m * c);
    } else if (word == "xxy") {
        E m = -(f.one() / a);
        put("xyx", m * b);
        put("yxx", m * a);
        put("yyy", m * c);
    } else {
        put(word, f.one());
    }
    return v;
}

// Substitution xx -> X'X, xy -> Y'X, yx -> X'Y, yy -> Y'Y.
template <class F>
Matrix<F> substitute_deg2(const Deg2Form& form, const Matrix<F>& X, const Matrix<F>& Y, const Matrix<F>& Xp,
                          const Matrix<F>& Yp)
{
    const F& f = X.field();
    Matrix<F> out(f, Xp.rows(), X.cols());
    const Matrix<F> words[4] = {Xp * X, Yp * X, Xp * Y, Yp * Y};
    for (int k = 0; k < 4; ++k)
        if (sgn(form[k]) != 0) out = out + words[k].scaled(f.from_rational(form[k]));
    return out;
}

// The relation block M_A^t(X', Y', X, Y) : V_{-3}^2 -> V_{-1}^2; the Gamma
// relations read (X'' Y'') * this = 0.
template <class F>
Matrix<F> ma_substituted(const AlgebraSpec& spec, const Matrix<F>& X, const Matrix<F>& Y, const Matrix<F>& Xp,
                         const Matrix<F>& Yp)
{
    if (X.rows() != Y.rows() || X.cols() != Y.cols() || Xp.rows() != Yp.rows() || Xp.cols() != Yp.cols() ||
        Xp.cols() != X.rows())
        throw std::invalid_argument("ma_substituted: shapes do not compose");
    auto m = ma_coefficients(spec);
    std::size_t r = Xp.rows(), c = X.cols();
    Matrix<F> out(X.field(), 2 * r, 2 * c);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.set_block(i * r, j * c, substitute_deg2(m[j][i], X, Y, Xp, Yp));
    return out;
}

template <class F>
typename F::Element e_equation(const AlgebraSpec& spec, const std::pair<typename F::Element, typename F::Element>& p0,
                               const std::pair<typename F::Element, typename F::Element>& p1, const F& f)
{
    using E = typename F::Element;
    if ((f.is_zero(p0.first) && f.is_zero(p0.second)) || (f.is_zero(p1.first) && f.is_zero(p1.second)))
        throw std::invalid_argument("(0:0) is not a projective point");
    const E &x0 = p0.first, &y0 = p0.second, &x1 = p1.first, &y1 = p1.second;
    if (spec.kind == AlgebraSpec::Kind::Hc) {
        E d = x0 * y1 - x1 * y0;
        return d * d;
    }
    E a = f.from_rational(spec.a), b = f.from_rational(spec.b), c = f.from_rational(spec.c);
    return (c * c - b * b) * x0 * y0 * x1 * y1 + a * x0 * x0 * (c * x1 * x1 - b * y1 * y1) +
           a * y0 * y0 * (c * y1 * y1 - b * x1 * x1);
}

namespace detail {

// Projection A_m -> (A/Aw)_m together with the monomials indexing the
// quotient basis.
template <class F>
Cokernel<F> quotient_projection(const std::vector<typename F::Element>& w, int deg_w, int m, const AlgebraSpec& spec,
                                const F& f)
{
    const auto& basis = monomial_basis(m);
    std::size_t left_count = m < deg_w ? 0 : monomial_basis(m - deg_w).size();
    Matrix<F> gens(f, basis.size(), left_count);
    if (left_count) {
        const auto& left = monomial_basis(m - deg_w);
        const auto& wbasis = monomial_basis(deg_w);
        for (std::size_t j = 0; j < left.size(); ++j)
            for (std::size_t k = 0; k < wbasis.size(); ++k) {
                if (f.is_zero(w[k])) continue;
                auto v = normal_form(left[j] + wbasis[k], spec, f);
                for (std::size_t i = 0; i < v.size(); ++i) gens(i, j) += w[k] * v[i];
            }
    }
    return cokernel(gens);
}

template <class F>
QuiverRep<F> cyclic_quotient_rep(const std::vector<typename F::Element>& w, int deg_w, const AlgebraSpec& spec,
                                 const F& f)
{
    bool nonzero = false;
    for (const auto& e : w) nonzero = nonzero || !f.is_zero(e);
    if (!nonzero) throw std::invalid_argument("the form must be nonzero");
    std::array<Matrix<F>, 3> pi;
    std::array<std::vector<std::size_t>, 3> keep;
    for (int m = 0; m < 3; ++m) {
        auto q = quotient_projection(w, deg_w, m, spec, f);
        pi[m] = std::move(q.projection);
        keep[m] = std::move(q.kept);
    }
    // left multiplication (A/Aw)_m -> (A/Aw)_{m+1}
    auto left_mult = [&](char letter, int m) {
        const auto& basis = monomial_basis(m);
        Matrix<F> L(f, pi[m + 1].rows(), keep[m].size());
        for (std::size_t t = 0; t < keep[m].size(); ++t) {
            auto v = normal_form(std::string(1, letter) + basis[keep[m][t]], spec, f);
            Matrix<F> col(f, v.size(), 1);
            for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
            L.set_block(0, t, pi[m + 1] * col);
        }
        return L;
    };
    QuiverRep<F> r;
    r.field = f;
    r.dims = {pi[2].rows(), pi[1].rows(), pi[0].rows(), 0};
    r.X[0] = left_mult('x', 1).transpose();
    r.Y[0] = left_mult('y', 1).transpose();
    r.X[1] = left_mult('x', 0).transpose();
    r.Y[1] = left_mult('y', 0).transpose();
    r.X[2] = Matrix<F>(f, 0, r.dims[2]);
    r.Y[2] = Matrix<F>(f, 0, r.dims[2]);
    r.check_shapes();
    return r;
}

} // namespace detail

template <class F>
QuiverRep<F> line_rep(const std::vector<typename F::Element>& u, const AlgebraSpec& spec, const F& f)
{
    if (u.size() != 2) throw std::invalid_argument("a linear form has two coefficients (x, y)");
    return detail::cyclic_quotient_rep(u, 1, spec, f);
}

template <class F>
QuiverRep<F> conic_rep(const std::vector<typename F::Element>& w, const AlgebraSpec& spec, const F& f)
{
    if (w.size() != 4) throw std::invalid_argument("a quadratic form has four coefficients (xx, xy, yx, yy)");
    return detail::cyclic_quotient_rep(w, 2, spec, f);
}

// Points (alpha_i : beta_i) for i = -3, -2, -1, 0; arrow i carries point i.
template <class F>
QuiverRep<F> point_rep(const std::array<std::pair<typename F::Element, typename F::Element>, 4>& orbit, const F& f)
{
    for (const auto& [al, be] : orbit)
        if (f.is_zero(al) && f.is_zero(be)) throw std::invalid_argument("degenerate point (0:0)");
    auto r = QuiverRep<F>::zero(f, {1, 1, 1, 1});
    for (int i = 0; i < 3; ++i) {
        r.X[i](0, 0) = orbit[i].first;
        r.Y[i](0, 0) = orbit[i].second;
    }
    return r;
}

// Monomials of the quotient (A/Aw)_m kept by the echelon-canonical basis.
template <class F>
std::vector<std::string> quotient_basis(const std::vector<typename F::Element>& w, int m, const AlgebraSpec& spec,
                                        const F& f)
{
    int deg_w = w.size() == 2 ? 1 : 2;
    auto q = detail::quotient_projection(w, deg_w, m, spec, f);
    std::vector<std::string> out;
    for (auto j : q.kept) out.push_back(monomial_basis(m)[j]);
    return out;
}

} // namespace qhilb
