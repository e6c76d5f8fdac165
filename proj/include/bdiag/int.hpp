// Arbitrary-precision signed integers.
//
// Values that fit in 62 bits live in `small_` and never allocate; larger
// values switch to a base-2^32 magnitude vector with the sign kept in
// `small_`.  All chain-complex coefficients stay tiny, so the fast path is
// the common one; Smith reduction is what occasionally grows.

#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace bdiag {

class Int {
  public:
    Int() = default;
    Int(long long v) : small_(v) {}
    Int(int v) : small_(v) {}

    static Int from_string(const std::string& s);

    bool is_zero() const { return big_.empty() && small_ == 0; }
    bool is_neg() const { return big_.empty() ? small_ < 0 : small_ < 0; }
    bool is_one() const { return big_.empty() && small_ == 1; }

    // Valid only when the value fits; callers guard with fits_ll().
    bool fits_ll() const { return big_.empty(); }
    long long to_ll() const {
        assert(big_.empty());
        return small_;
    }

    Int operator-() const {
        Int r = *this;
        r.small_ = -r.small_;
        return r;
    }

    friend Int operator+(const Int& a, const Int& b) { return add_signed(a, b, false); }
    friend Int operator-(const Int& a, const Int& b) { return add_signed(a, b, true); }
    friend Int operator*(const Int& a, const Int& b);

    Int& operator+=(const Int& b) { return *this = *this + b; }
    Int& operator-=(const Int& b) { return *this = *this - b; }
    Int& operator*=(const Int& b) { return *this = *this * b; }

    // Truncated division (quotient rounded toward zero, remainder has the
    // sign of the dividend), as in C.
    static void divmod(const Int& a, const Int& b, Int& q, Int& r);
    friend Int operator/(const Int& a, const Int& b) {
        Int q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Int operator%(const Int& a, const Int& b) {
        Int q, r;
        divmod(a, b, q, r);
        return r;
    }

    // -1, 0, +1 by value comparison.
    static int cmp(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }

    Int abs() const {
        Int r = *this;
        if (r.is_neg())
            r.small_ = -r.small_;
        return r;
    }

    static Int gcd(Int a, Int b);

    int sign() const { return is_zero() ? 0 : (is_neg() ? -1 : 1); }

    // Value reduced into [0, m) for a positive word-sized modulus.
    long long mod_ll(long long m) const;

    std::string str() const;

  private:
    static constexpr long long kSmallMax = (1LL << 62) - 1;

    // big_ empty: value == small_.  Otherwise magnitude is big_ (base 2^32,
    // little-endian, no leading zero limb) and small_ is +1/-1.
    long long small_ = 0;
    std::vector<uint32_t> big_;

    void promote();    // move small_ into big_ form
    void normalize();  // strip zero limbs, demote when it fits

    static std::vector<uint32_t> mag_add(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> mag_sub(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mag_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static int mag_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void mag_divmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);

    static Int add_signed(const Int& a, const Int& b, bool negate_b);
    static Int from_mag(std::vector<uint32_t> mag, bool neg);
};

}  // namespace bdiag
