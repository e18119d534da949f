#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhilb {

// Element of Z/pZ.  The modulus travels with the value so that generic
// code can use plain operators.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : 0), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b)
    {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_); }
    friend Fp operator*(Fp a, Fp b)
    {
        unsigned __int128 m = (unsigned __int128)a.v_ * b.v_;
        return raw((std::uint64_t)(m % a.p_), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v_ ? p_ - v_ : 0, p_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const
    {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid on signed 128-bit to stay clear of overflow
        __int128 t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            __int128 q = r / nr;
            __int128 tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return raw((std::uint64_t)t, p_);
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p)
    {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

struct PrimeField {
    using Element = Fp;
    std::uint64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime);

    Element zero() const { return Fp(0, p); }
    Element one() const { return Fp(1, p); }
    Element from_int(long long v) const
    {
        long long m = (long long)(v % (long long)p);
        if (m < 0) m += (long long)p;
        return Fp((std::uint64_t)m, p);
    }
    Element from_mpz(const mpz_class& z) const;
    Element from_rational(const mpq_class& q) const;
    Element parse(std::string_view s) const;
    std::string to_string(const Element& e) const { return std::to_string(e.value()); }
    bool is_zero(const Element& e) const { return e.value() == 0; }
    std::string tag() const { return "fp:" + std::to_string(p); }

    template <class Rng>
    Element random(Rng& rng) const
    {
        std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
        return Fp(d(rng), p);
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

struct RationalField {
    using Element = mpq_class;

    Element zero() const { return mpq_class(0); }
    Element one() const { return mpq_class(1); }
    Element from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    Element from_mpz(const mpz_class& z) const { return mpq_class(z); }
    Element from_rational(const mpq_class& q) const { return q; }
    Element parse(std::string_view s) const;
    std::string to_string(const Element& e) const { return e.get_str(); }
    bool is_zero(const Element& e) const { return sgn(e) == 0; }
    std::string tag() const { return "q"; }

    // small integers keep random rational matrices cheap
    template <class Rng>
    Element random(Rng& rng) const
    {
        std::uniform_int_distribution<int> d(-5, 5);
        return mpq_class(d(rng));
    }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

mpq_class parse_rational(std::string_view s);

} // namespace qhilb
