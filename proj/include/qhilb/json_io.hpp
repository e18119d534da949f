#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "qhilb/betti.hpp"
#include "qhilb/castelnuovo.hpp"
#include "qhilb/field.hpp"
#include "qhilb/ktheory.hpp"
#include "qhilb/matrix.hpp"
#include "qhilb/moduli.hpp"
#include "qhilb/rep.hpp"
#include "qhilb/series.hpp"

namespace qhilb::io {

using nlohmann::json;

// Laurent polynomials: {"deg": "coeff"} with decimal strings.
json to_json(const LaurentPoly& q);
LaurentPoly poly_from_json(const json& j);

json to_json(const TruncatedSeries& h);
json to_json(const CastelnuovoPoly& s);
json to_json(const InvariantPair& p);

// Betti tables: {"a": {"deg": count}, "b": {...}}.
json to_json(const BettiTable& t);
BettiTable betti_from_json(const json& j);

json to_json(const K0Class& c);
K0Class class_from_json(const json& j);

using AnyField = std::variant<RationalField, PrimeField>;
AnyField parse_field(const std::string& tag);  // "q" or "fp:<p>"

// Matrices: {"rows": r, "cols": c, "data": [[entry, ...], ...]} row-major;
// entries are decimal strings ("num/den" over Q), plain integers are accepted.
template <class F>
json to_json(const Matrix<F>& m)
{
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m(i, j)));
        data.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

template <class F>
typename F::Element entry_from_json(const json& e, const F& f)
{
    if (e.is_string()) return f.parse(e.get<std::string>());
    if (e.is_number_integer()) return f.from_int(e.get<long long>());
    throw std::invalid_argument("matrix entries must be strings or integers");
}

template <class F>
Matrix<F> matrix_from_json(const json& j, const F& f)
{
    const json& data = j.is_array() ? j : j.at("data");
    std::size_t r = data.size();
    std::size_t c = r ? data.at(0).size() : 0;
    if (j.is_object()) {
        r = j.at("rows").get<std::size_t>();
        c = j.at("cols").get<std::size_t>();
        if (data.size() != r) throw std::invalid_argument("matrix data does not match its row count");
    }
    Matrix<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (data[i].size() != c) throw std::invalid_argument("matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = entry_from_json(data[i][k], f);
    }
    return m;
}

// Representations: {"field", "dims", "X": [...], "Y": [...]}, arrows listed
// from vertex -3 upwards.
template <class F, std::size_t N>
json to_json(const DoubledRep<F, N>& r)
{
    json xs = json::array(), ys = json::array();
    for (std::size_t i = 0; i + 1 < N; ++i) {
        xs.push_back(to_json(r.X[i]));
        ys.push_back(to_json(r.Y[i]));
    }
    return {{"field", r.field.tag()}, {"dims", r.dims}, {"X", xs}, {"Y", ys}};
}

template <class F, std::size_t N>
DoubledRep<F, N> rep_from_json(const json& j, const F& f)
{
    DoubledRep<F, N> r;
    r.field = f;
    const json& dims = j.at("dims");
    if (dims.size() != N) throw std::invalid_argument("expected " + std::to_string(N) + " vertex dimensions");
    for (std::size_t i = 0; i < N; ++i) r.dims[i] = dims[i].get<std::size_t>();
    if (j.at("X").size() != N - 1 || j.at("Y").size() != N - 1)
        throw std::invalid_argument("expected " + std::to_string(N - 1) + " X and Y matrices");
    for (std::size_t i = 0; i + 1 < N; ++i) {
        r.X[i] = matrix_from_json(j["X"][i], f);
        r.Y[i] = matrix_from_json(j["Y"][i], f);
    }
    r.check_shapes();
    return r;
}

// Moduli points: {"field", "ne", "no", "X", "Y", "Xp", "Yp"}.
template <class F>
json to_json(const ModuliPoint<F>& p)
{
    return {{"field", p.field.tag()}, {"ne", p.ne},           {"no", p.no},           {"X", to_json(p.X)},
            {"Y", to_json(p.Y)},      {"Xp", to_json(p.Xp)}, {"Yp", to_json(p.Yp)}};
}

template <class F>
ModuliPoint<F> point_from_json(const json& j, const F& f)
{
    ModuliPoint<F> p;
    p.field = f;
    p.ne = j.at("ne").get<std::size_t>();
    p.no = j.at("no").get<std::size_t>();
    p.X = matrix_from_json(j.at("X"), f);
    p.Y = matrix_from_json(j.at("Y"), f);
    p.Xp = matrix_from_json(j.at("Xp"), f);
    p.Yp = matrix_from_json(j.at("Yp"), f);
    p.check_shapes();
    return p;
}

} // namespace qhilb::io
