#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hochcat {

// User-facing input problem (bad config, malformed algebra data). CLI exit 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (must not happen on valid inputs). CLI exit 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// An exact scalar: a reduced fraction num/den with den > 0. Over F_p the
// denominator is always 1 and num lies in [0, p). All arithmetic goes
// through Field so the same code runs over Q and over prime fields.
struct Scalar {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_zero() const { return num == 0; }
    bool operator==(const Scalar&) const = default;
};

class Field {
public:
    // characteristic 0 = rationals, otherwise a prime.
    explicit Field(std::uint64_t characteristic = 0);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    bool operator==(const Field& o) const { return p_ == o.p_; }

    Scalar zero() const { return Scalar{0, 1}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(std::int64_t n) const;
    Scalar from_ratio(std::int64_t num, std::int64_t den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    // "n" over F_p, "n" or "n/d" over Q.
    std::string to_string(const Scalar& a) const;
    Scalar parse(const std::string& s) const;

private:
    Scalar reduce(__int128 num, __int128 den) const;
    std::uint64_t p_;
};

}  // namespace hochcat
