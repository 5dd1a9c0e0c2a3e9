#include "hochcat/scalar.hpp"

#include <numeric>

namespace hochcat {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

constexpr __int128 kLimit = __int128(1) << 62;

std::int64_t narrow(__int128 v) {
    if (v >= kLimit || v <= -kLimit)
        throw InternalError("exact scalar overflow (value exceeds 2^62)");
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// extended gcd on int64, for modular inverse
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw InternalError("not invertible mod p");
    return t < 0 ? t + p : t;
}

}  // namespace

Field::Field(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw ConfigError("field characteristic must be 0 or a prime, got " + std::to_string(p_));
    if (p_ > (1ull << 31))
        throw ConfigError("prime characteristic too large");
}

Scalar Field::reduce(__int128 num, __int128 den) const {
    if (den == 0) throw InternalError("division by zero");
    if (p_ != 0) {
        __int128 p = static_cast<__int128>(p_);
        __int128 n = num % p;
        if (n < 0) n += p;
        __int128 d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw InternalError("division by zero mod p");
        if (d != 1)
            n = (n * mod_inverse(static_cast<std::int64_t>(d), static_cast<std::int64_t>(p_))) % p;
        return Scalar{static_cast<std::int64_t>(n), 1};
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Scalar{0, 1};
    __int128 g = gcd128(num, den);
    return Scalar{narrow(num / g), narrow(den / g)};
}

Scalar Field::from_int(std::int64_t n) const { return reduce(n, 1); }

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw ConfigError("scalar with zero denominator");
    return reduce(num, den);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (a.den == 1 && b.den == 1) return reduce(__int128(a.num) + b.num, 1);
    return reduce(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (a.den == 1 && b.den == 1) return reduce(__int128(a.num) - b.num, 1);
    return reduce(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (a.num == 0 || b.num == 0) return Scalar{0, 1};
    return reduce(__int128(a.num) * b.num, __int128(a.den) * b.den);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (b.num == 0) throw InternalError("division by zero scalar");
    return reduce(__int128(a.num) * b.den, __int128(a.den) * b.num);
}

Scalar Field::neg(const Scalar& a) const {
    if (p_ != 0 && a.num != 0) return Scalar{static_cast<std::int64_t>(p_) - a.num, 1};
    return Scalar{-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const { return div(one(), a); }

std::string Field::to_string(const Scalar& a) const {
    if (a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Scalar Field::parse(const std::string& s) const {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return from_int(std::stoll(s));
        return from_ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ConfigError("cannot parse scalar '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("scalar out of range '" + s + "'");
    }
}

}  // namespace hochcat
