#include "qhilb/json_io.hpp"

namespace qhilb::io {

json to_json(const LaurentPoly& q)
{
    json j = json::object();
    for (const auto& [d, c] : q.terms()) j[std::to_string(d)] = c.get_str();
    return j;
}

LaurentPoly poly_from_json(const json& j)
{
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (!j.is_object()) throw std::invalid_argument("a polynomial is a {\"degree\": \"coefficient\"} object");
    return parse_poly(j.dump());
}

json to_json(const TruncatedSeries& h)
{
    json c = json::array();
    for (const auto& v : h.coeffs) c.push_back(v.get_str());
    return {{"start", h.start}, {"order", h.order}, {"coeffs", c}};
}

json to_json(const CastelnuovoPoly& s)
{
    auto w = weights(s);
    return {{"s", s.s}, {"sigma", s.sigma}, {"ne", w.ne}, {"no", w.no}, {"text", to_string(s)}};
}

json to_json(const InvariantPair& p) { return {{"ne", p.ne}, {"no", p.no}}; }

namespace {

json degree_map(const std::map<int, long>& m)
{
    json j = json::object();
    for (const auto& [d, c] : m) j[std::to_string(d)] = c;
    return j;
}

std::map<int, long> degree_map_from(const json& j)
{
    std::map<int, long> m;
    if (j.is_null()) return m;
    if (!j.is_object()) throw std::invalid_argument("Betti multiplicities are {\"degree\": count} objects");
    for (auto it = j.begin(); it != j.end(); ++it) {
        long v = it.value().is_string() ? std::stol(it.value().get<std::string>()) : it.value().get<long>();
        if (v != 0) m[std::stoi(it.key())] = v;
    }
    return m;
}

} // namespace

json to_json(const BettiTable& t) { return {{"a", degree_map(t.a)}, {"b", degree_map(t.b)}}; }

BettiTable betti_from_json(const json& j)
{
    return validate_betti(degree_map_from(j.at("a")), degree_map_from(j.contains("b") ? j["b"] : json()));
}

json to_json(const K0Class& c) { return {{"r", c.r}, {"a", c.a}, {"b", c.b}, {"c", c.c}}; }

K0Class class_from_json(const json& j)
{
    if (j.is_string()) return parse_class(j.get<std::string>());
    if (j.is_array()) {
        if (j.size() != 4) throw std::invalid_argument("class needs exactly four coordinates");
        return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>(), j[3].get<long long>()};
    }
    return {j.at("r").get<long long>(), j.at("a").get<long long>(), j.at("b").get<long long>(),
            j.at("c").get<long long>()};
}

AnyField parse_field(const std::string& tag)
{
    if (tag == "q" || tag == "Q") return RationalField{};
    if (tag.rfind("fp:", 0) == 0) {
        std::size_t pos = 0;
        unsigned long long p = std::stoull(tag.substr(3), &pos);
        if (pos != tag.size() - 3) throw std::invalid_argument("bad prime in field tag '" + tag + "'");
        return PrimeField(p);
    }
    throw std::invalid_argument("unknown field '" + tag + "' (expected q or fp:<p>)");
}

} // namespace qhilb::io
