#pragma once

// Exact scalars: rationals with arbitrary-precision numerator and denominator,
// or residues modulo a prime. Small rationals stay in machine words and are
// promoted to GMP only when an intermediate result overflows.

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hcc/error.hpp"

namespace hcc {

class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : num_(v) {} // NOLINT: implicit by design of literals like Scalar s = 1

    static Scalar fraction(long long num, long long den)
    {
        if (den == 0)
            throw ScalarError("division by zero in scalar literal");
        Scalar r;
        r.assign_small(static_cast<__int128>(num), static_cast<__int128>(den));
        return r;
    }

    static Scalar from_mpq(const mpq_class& q)
    {
        Scalar r;
        r.assign_big(q);
        return r;
    }

    /// Residue class of `v` modulo the prime `p`.
    static Scalar modular(long long v, std::uint64_t p)
    {
        check_modulus(p);
        Scalar r;
        r.modulus_ = p;
        long long m = static_cast<long long>(p);
        r.num_ = ((v % m) + m) % m;
        return r;
    }

    /// Parses "n", "-n", "p/q". A leading "GF(p):" prefix is not part of the grammar;
    /// field mode is carried by the surrounding file.
    static Scalar parse(std::string_view text)
    {
        std::string s(text);
        auto trim = [](std::string& t) {
            auto b = t.find_first_not_of(" \t");
            auto e = t.find_last_not_of(" \t");
            t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
        };
        trim(s);
        if (s.empty())
            throw ScalarError("empty scalar literal");
        auto slash = s.find('/');
        std::string ns = s.substr(0, slash);
        std::string ds = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
        trim(ns);
        trim(ds);
        auto valid_int = [](const std::string& t) {
            if (t.empty())
                return false;
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size())
                return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9')
                    return false;
            return true;
        };
        if (!valid_int(ns) || !valid_int(ds))
            throw ScalarError("malformed rational literal \"" + s + "\"");
        mpz_class n(ns[0] == '+' ? ns.substr(1) : ns, 10);
        mpz_class d(ds[0] == '+' ? ds.substr(1) : ds, 10);
        if (d == 0)
            throw ScalarError("division by zero in scalar literal");
        mpq_class q(n, d);
        q.canonicalize();
        return from_mpq(q);
    }

    std::uint64_t modulus() const { return modulus_; }
    bool is_rational() const { return modulus_ == 0; }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

    mpq_class to_mpq() const
    {
        if (big_)
            return *big_;
        mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
        q.canonicalize();
        return q;
    }

    /// Image of this value in GF(p). Rationals whose denominator is divisible by p
    /// have no image and are rejected.
    Scalar to_field(std::uint64_t p) const
    {
        if (p == modulus_)
            return *this;
        if (modulus_ != 0)
            throw ScalarError("cannot move a GF(" + std::to_string(modulus_) + ") value into GF(" +
                              std::to_string(p) + ")");
        if (p == 0)
            return *this;
        check_modulus(p);
        mpq_class q = to_mpq();
        mpz_class pm(static_cast<unsigned long>(p));
        mpz_class n = q.get_num() % pm;
        if (n < 0)
            n += pm;
        mpz_class d = q.get_den() % pm;
        if (d == 0)
            throw ScalarError("denominator divisible by the field characteristic");
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pm.get_mpz_t());
        mpz_class r = (n * dinv) % pm;
        return modular(static_cast<long long>(r.get_si()), p);
    }

    Scalar operator-() const
    {
        Scalar r = *this;
        if (modulus_) {
            r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(modulus_) - num_;
        } else if (big_) {
            r.assign_big(-*big_);
        } else if (num_ == INT64_MIN) {
            r.assign_big(-to_mpq());
        } else {
            r.num_ = -num_;
        }
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        if (a.modulus_ | b.modulus_)
            return modular_op(a, b, '+');
        if (!a.big_ && !b.big_) {
            Scalar r;
            if (a.den_ == b.den_)
                r.assign_small(static_cast<__int128>(a.num_) + b.num_, a.den_);
            else
                r.assign_small(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
            return r;
        }
        return from_mpq(a.to_mpq() + b.to_mpq());
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        if (a.modulus_ | b.modulus_)
            return modular_op(a, b, '*');
        if (a.is_zero() || b.is_zero())
            return Scalar();
        if (!a.big_ && !b.big_) {
            Scalar r;
            r.assign_small(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
            return r;
        }
        return from_mpq(a.to_mpq() * b.to_mpq());
    }

    Scalar inverse() const
    {
        if (is_zero())
            throw ScalarError("division by zero");
        if (modulus_) {
            mpz_class r, n(static_cast<long>(num_)), p(static_cast<unsigned long>(modulus_));
            mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            return modular(r.get_si(), modulus_);
        }
        if (big_)
            return from_mpq(1 / *big_);
        Scalar r;
        r.assign_small(den_, num_);
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        if (a.modulus_ != b.modulus_) {
            if (a.modulus_ && b.modulus_)
                return false;
            std::uint64_t p = a.modulus_ | b.modulus_;
            return a.to_field(p).num_ == b.to_field(p).num_;
        }
        if (!a.big_ && !b.big_)
            return a.num_ == b.num_ && a.den_ == b.den_;
        if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_))
            return false; // canonical form: big only when it does not fit
        return *a.big_ == *b.big_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: "n" for integers, "p/q" otherwise (lowest terms, q > 0).
    std::string str() const
    {
        if (big_)
            return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    static void check_modulus(std::uint64_t p)
    {
        if (p < 2 || p > (1ull << 31))
            throw ScalarError("field characteristic must be a prime below 2^31");
        for (std::uint64_t q = 2; q * q <= p; ++q)
            if (p % q == 0)
                throw ScalarError("GF(" + std::to_string(p) + "): modulus is not prime");
    }

    static Scalar modular_op(const Scalar& a, const Scalar& b, char op)
    {
        if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_)
            throw ScalarError("mixed field characteristics in one computation");
        std::uint64_t p = a.modulus_ | b.modulus_;
        Scalar x = a.to_field(p), y = b.to_field(p);
        __int128 v = op == '+' ? static_cast<__int128>(x.num_) + y.num_ : static_cast<__int128>(x.num_) * y.num_;
        return modular(static_cast<long long>(v % static_cast<__int128>(p)), p);
    }

    static __int128 gcd128(__int128 a, __int128 b)
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign_small(__int128 n, __int128 d)
    {
        if (d == 0)
            throw ScalarError("division by zero");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0)
            d = 1;
        constexpr __int128 lo = INT64_MIN + 1, hi = INT64_MAX;
        if (n >= lo && n <= hi && d <= hi) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
            return;
        }
        auto to_mpz = [](__int128 v) {
            bool neg = v < 0;
            unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
            mpz_class hi64(static_cast<unsigned long>(u >> 64));
            mpz_class lo64(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
            mpz_class r = (hi64 << 64) + lo64;
            return neg ? mpz_class(-r) : r;
        };
        mpq_class q(to_mpz(n), to_mpz(d));
        q.canonicalize();
        assign_big(q);
    }

    void assign_big(const mpq_class& q)
    {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != INT64_MIN) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_shared<const mpq_class>(q);
            num_ = 0;
            den_ = 1;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
    std::uint64_t modulus_ = 0;
};

} // namespace hcc
