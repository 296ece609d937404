#include "plethyx/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace plethyx {

namespace {
constexpr uint64_t BASE = uint64_t(1) << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_even() const {
    return mag_.empty() || (mag_[0] & 1u) == 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r;
    r.reserve(hi.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (s < 0) {
            s += int64_t(BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(s));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = uint64_t(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t s = uint64_t(r[k]) + carry;
            r[k] = static_cast<uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::shr_mag(std::vector<uint32_t>& a, unsigned bits) {
    unsigned limbs = bits / 32, rem = bits % 32;
    if (limbs >= a.size()) {
        a.clear();
        return;
    }
    if (limbs) a.erase(a.begin(), a.begin() + limbs);
    if (rem) {
        for (size_t i = 0; i + 1 < a.size(); ++i)
            a[i] = (a[i] >> rem) | (a[i + 1] << (32 - rem));
        a.back() >>= rem;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void BigInt::shl_mag(std::vector<uint32_t>& a, unsigned bits) {
    if (a.empty()) return;
    unsigned limbs = bits / 32, rem = bits % 32;
    if (rem) {
        uint32_t carry = 0;
        for (auto& limb : a) {
            uint32_t next = limb >> (32 - rem);
            limb = (limb << rem) | carry;
            carry = next;
        }
        if (carry) a.push_back(carry);
    }
    a.insert(a.begin(), limbs, 0u);
}

unsigned BigInt::trailing_zero_bits(const std::vector<uint32_t>& a) {
    unsigned n = 0;
    for (uint32_t limb : a) {
        if (limb == 0) {
            n += 32;
            continue;
        }
        unsigned b = 0;
        while (!(limb & 1u)) {
            limb >>= 1;
            ++b;
        }
        return n + b;
    }
    return n;
}

uint32_t BigInt::divmod_small(std::vector<uint32_t>& a, uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<uint32_t>(rem);
}

// binary long division of magnitudes; quotient into q, remainder into r
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (size_t i = a.size(); i-- > 0;) {
        for (int bit = 31; bit >= 0; --bit) {
            shl_mag(r, 1);
            if ((a[i] >> bit) & 1u) {
                if (r.empty())
                    r.push_back(1);
                else
                    r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[i] |= (1u << bit);
            }
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    return *this += -o;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    sign_ *= o.sign_;
    mag_ = mul_mag(mag_, o.mag_);
    if (mag_.empty()) sign_ = 0;
    return *this;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r = a;
    r *= b;
    return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

BigInt BigInt::divided_exact(const BigInt& d) const {
    if (d.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (is_zero()) return 0;
    BigInt q;
    std::vector<uint32_t> rem;
    divmod_mag(mag_, d.mag_, q.mag_, rem);
    if (!rem.empty()) throw std::logic_error("BigInt::divided_exact: nonzero remainder");
    q.sign_ = q.mag_.empty() ? 0 : sign_ * d.sign_;
    return q;
}

bool BigInt::fits_long_long() const {
    if (mag_.size() > 2) return false;
    uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= uint64_t(mag_[1]) << 32;
    if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_long_long() const {
    if (!fits_long_long()) throw std::overflow_error("BigInt does not fit in long long");
    uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= uint64_t(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        uint32_t rem = divmod_small(tmp, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    std::vector<uint32_t> x = a.mag_, y = b.mag_;
    BigInt r;
    if (x.empty()) {
        if (!y.empty()) {
            r.sign_ = 1;
            r.mag_ = std::move(y);
        }
        return r;
    }
    if (y.empty()) {
        r.sign_ = 1;
        r.mag_ = std::move(x);
        return r;
    }
    // binary gcd on magnitudes
    unsigned tx = trailing_zero_bits(x), ty = trailing_zero_bits(y);
    unsigned shift = std::min(tx, ty);
    shr_mag(x, tx);
    shr_mag(y, ty);
    while (!y.empty()) {
        shr_mag(y, trailing_zero_bits(y));
        if (cmp_mag(x, y) > 0) std::swap(x, y);
        y = sub_mag(y, x);
    }
    shl_mag(x, shift);
    r.sign_ = 1;
    r.mag_ = std::move(x);
    return r;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_.divided_exact(g);
        den_ = den_.divided_exact(g);
    }
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

const BigInt& Rational::as_integer() const {
    if (!is_integer()) throw std::logic_error("Rational is not an integer: " + to_string());
    return num_;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

} // namespace plethyx
