#ifndef PLETHYX_NUMERIC_HPP
#define PLETHYX_NUMERIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace plethyx {

/* Arbitrary-precision signed integer: sign plus little-endian base-2^32
 * magnitude. Coefficient arithmetic in this library must never wrap, so
 * everything coefficient-valued routes through this type. Division is only
 * needed for gcd (rationals) and decimal printing, so we get away with
 * binary gcd and single-limb division.
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

    bool fits_long_long() const;
    long long to_long_long() const; // throws std::overflow_error when out of range

    std::string to_string() const;

    // quotient of an exact division; throws std::logic_error on a nonzero remainder
    BigInt divided_exact(const BigInt& d) const;

    // gcd of |a| and |b|, nonnegative; gcd(0, 0) = 0
    static BigInt gcd(const BigInt& a, const BigInt& b);

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void shr_mag(std::vector<uint32_t>& a, unsigned bits);
    static void shl_mag(std::vector<uint32_t>& a, unsigned bits);
    static unsigned trailing_zero_bits(const std::vector<uint32_t>& a);
    static uint32_t divmod_small(std::vector<uint32_t>& a, uint32_t d); // in-place quotient, returns remainder
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

/* Exact rational with reduced BigInt numerator/denominator, denominator > 0.
 * Workspace type for the power-sum basis. */
class Rational {
public:
    Rational() = default;
    Rational(BigInt n) : num_(std::move(n)), den_(1) { normalize(); }
    Rational(long long n) : Rational(BigInt(n)) {}
    Rational(int n) : Rational(BigInt(n)) {}
    Rational(BigInt n, BigInt d); // throws std::invalid_argument on d == 0

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    const BigInt& as_integer() const; // throws integrality-style logic_error if not integral

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    bool operator==(const Rational& o) const = default;

    std::string to_string() const; // "2/3", "-1/2", "4"

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
    void normalize();
};

} // namespace plethyx

#endif
