#include "qhilb/ncalgebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qhilb {

AlgebraSpec AlgebraSpec::type_a(const mpq_class& a, const mpq_class& b, const mpq_class& c)
{
    if (sgn(a) == 0) throw std::invalid_argument("type A parameters need a != 0 for the rewriting y^2x, x^2y");
    if (a * a == b * b && b * b == c * c) throw std::invalid_argument("type A parameters with a^2 = b^2 = c^2 are excluded");
    AlgebraSpec s;
    s.kind = Kind::TypeA;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
}

std::string AlgebraSpec::name() const
{
    if (kind == Kind::Hc) return "hc";
    return "typea:" + a.get_str() + "," + b.get_str() + "," + c.get_str();
}

AlgebraSpec parse_algebra(const std::string& text)
{
    if (text == "hc" || text == "Hc" || text == "HC") return AlgebraSpec::hc();
    const std::string prefix = "typea:";
    if (text.rfind(prefix, 0) == 0) {
        std::stringstream ss(text.substr(prefix.size()));
        std::string item;
        std::vector<mpq_class> v;
        while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
        if (v.size() != 3) throw std::invalid_argument("typea needs three parameters a,b,c");
        return AlgebraSpec::type_a(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("unknown algebra '" + text + "' (expected hc or typea:a,b,c)");
}

const std::vector<std::string>& monomial_basis(int m)
{
    static const std::vector<std::vector<std::string>> bases = {
        {""},
        {"x", "y"},
        {"xx", "xy", "yx", "yy"},
        {"xxx", "xyx", "xyy", "yxx", "yxy", "yyy"},
    };
    if (m < 0 || m > 3) throw std::invalid_argument("monomial bases are only tabulated up to degree 3");
    return bases[m];
}

std::array<std::array<Deg2Form, 2>, 2> ma_coefficients(const AlgebraSpec& s)
{
    const mpq_class z = 0;
    // f1 = (a yy + c xx) x + (a xy + b yx) y
    // f2 = (b xy + a yx) x + (a xx + c yy) y
    return {{{{{s.c, z, z, s.a}, {z, s.a, s.b, z}}}, {{{z, s.b, s.a, z}, {s.a, z, z, s.c}}}}};
}

} // namespace qhilb
