#include "qhilb/field.hpp"

#include <cctype>

namespace qhilb {

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return (std::uint64_t)((unsigned __int128)a * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime)
{
    if (prime >= (1ULL << 61)) throw std::invalid_argument("prime must be below 2^61");
    if (!is_prime_u64(prime)) throw std::invalid_argument("modulus " + std::to_string(prime) + " is not prime");
}

Fp PrimeField::from_mpz(const mpz_class& z) const
{
    mpz_class r = z % mpz_class(std::to_string(p));
    if (r < 0) r += mpz_class(std::to_string(p));
    return Fp(std::stoull(r.get_str()), p);
}

Fp PrimeField::from_rational(const mpq_class& q) const
{
    Fp den = from_mpz(q.get_den());
    if (den.value() == 0) throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
    return from_mpz(q.get_num()) / den;
}

Fp PrimeField::parse(std::string_view s) const { return from_rational(parse_rational(s)); }

mpq_class parse_rational(std::string_view s)
{
    std::string str(s);
    while (!str.empty() && std::isspace((unsigned char)str.back())) str.pop_back();
    std::size_t b = 0;
    while (b < str.size() && std::isspace((unsigned char)str[b])) ++b;
    str = str.substr(b);
    if (str.empty()) throw std::invalid_argument("empty number");
    if (str[0] == '+') str = str.substr(1);
    auto slash = str.find('/');
    auto check_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit((unsigned char)t[i])) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(str)) throw std::invalid_argument("not a number: " + str);
        return mpq_class(mpz_class(str));
    }
    std::string num = str.substr(0, slash), den = str.substr(slash + 1);
    if (!check_int(num) || !check_int(den)) throw std::invalid_argument("not a rational: " + str);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + str);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

RationalField::Element RationalField::parse(std::string_view s) const { return parse_rational(s); }

} // namespace qhilb
