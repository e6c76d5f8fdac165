#include "bdiag/int.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdiag {

void Int::promote() {
    if (!big_.empty())
        return;
    unsigned long long m = small_ < 0 ? -(unsigned long long)small_ : (unsigned long long)small_;
    bool neg = small_ < 0;
    while (m) {
        big_.push_back((uint32_t)(m & 0xffffffffu));
        m >>= 32;
    }
    small_ = neg ? -1 : 1;
    if (big_.empty())
        small_ = 0;  // zero stays small
}

void Int::normalize() {
    while (!big_.empty() && big_.back() == 0)
        big_.pop_back();
    if (big_.empty()) {
        small_ = 0;
        return;
    }
    if (big_.size() <= 2) {
        unsigned long long m = big_[0];
        if (big_.size() == 2)
            m |= (unsigned long long)big_[1] << 32;
        if (m <= (unsigned long long)kSmallMax) {
            long long v = (long long)m;
            small_ = small_ < 0 ? -v : v;
            big_.clear();
        }
    }
}

Int Int::from_mag(std::vector<uint32_t> mag, bool neg) {
    Int r;
    r.big_ = std::move(mag);
    r.small_ = neg ? -1 : 1;
    r.normalize();
    return r;
}

int Int::mag_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> Int::mag_add(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& x = a.size() >= b.size() ? a : b;
    const auto& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < x.size(); i++) {
        unsigned long long s = carry + x[i] + (i < y.size() ? y[i] : 0u);
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    r[x.size()] = (uint32_t)carry;
    return r;
}

std::vector<uint32_t> Int::mag_sub(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    long long borrow = 0;
    for (size_t i = 0; i < a.size(); i++) {
        long long s = (long long)a[i] - borrow - (i < b.size() ? (long long)b[i] : 0);
        if (s < 0) {
            s += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (uint32_t)s;
    }
    assert(borrow == 0);
    return r;
}

std::vector<uint32_t> Int::mag_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < b.size(); j++) {
            unsigned long long s = r[i + j] + carry + (unsigned long long)a[i] * b[j];
            r[i + j] = (uint32_t)s;
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            unsigned long long s = r[k] + carry;
            r[k] = (uint32_t)s;
            carry = s >> 32;
            k++;
        }
    }
    return r;
}

// Schoolbook base-2^32 long division with Knuth-style normalization.
void Int::mag_divmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                     std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    if (mag_cmp(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        unsigned long long d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | a[i];
            q[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        r.clear();
        if (rem)
            r.push_back((uint32_t)rem);
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        return;
    }

    int shift = 0;
    for (uint32_t top = b.back(); top < 0x80000000u; top <<= 1)
        shift++;
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); i++) {
            out[i] |= (uint32_t)((unsigned long long)v[i] << shift);
            out[i + 1] = shift ? (uint32_t)(v[i] >> (32 - shift)) : 0;
        }
        while (!out.empty() && out.back() == 0)
            out.pop_back();
        return out;
    };
    std::vector<uint32_t> u = shl(a), d = shl(b);
    size_t n = d.size(), m = u.size() - n;
    u.push_back(0);
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        unsigned long long top = ((unsigned long long)u[j + n] << 32) | u[j + n - 1];
        unsigned long long qhat = top / d[n - 1];
        unsigned long long rhat = top % d[n - 1];
        while (qhat >= (1ULL << 32) ||
               (n >= 2 && qhat * d[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
            qhat--;
            rhat += d[n - 1];
            if (rhat >= (1ULL << 32))
                break;
        }
        // multiply-subtract qhat * d from u[j .. j+n]
        long long borrow = 0;
        unsigned long long carry = 0;
        for (size_t i = 0; i < n; i++) {
            unsigned long long p = qhat * d[i] + carry;
            carry = p >> 32;
            long long t = (long long)u[i + j] - (long long)(uint32_t)p - borrow;
            borrow = 0;
            if (t < 0) {
                t += 1LL << 32;
                borrow = 1;
            }
            u[i + j] = (uint32_t)t;
        }
        long long t = (long long)u[j + n] - (long long)carry - borrow;
        if (t < 0) {
            // qhat was one too large
            t += 1LL << 32;
            qhat--;
            unsigned long long c2 = 0;
            for (size_t i = 0; i < n; i++) {
                unsigned long long s = (unsigned long long)u[i + j] + d[i] + c2;
                u[i + j] = (uint32_t)s;
                c2 = s >> 32;
            }
            t += (long long)c2;
            t &= (1LL << 32) - 1;
        }
        u[j + n] = (uint32_t)t;
        q[j] = (uint32_t)qhat;
    }
    u.resize(n);
    // undo normalization
    r.assign(n, 0);
    for (size_t i = 0; i < n; i++) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < n)
            r[i] |= (uint32_t)((unsigned long long)u[i + 1] << (32 - shift));
    }
    while (!q.empty() && q.back() == 0)
        q.pop_back();
    while (!r.empty() && r.back() == 0)
        r.pop_back();
}

Int Int::add_signed(const Int& a, const Int& b, bool negate_b) {
    if (a.big_.empty() && b.big_.empty()) {
        long long bs = negate_b ? -b.small_ : b.small_;
        long long s;
        if (!__builtin_add_overflow(a.small_, bs, &s) && s <= kSmallMax && s >= -kSmallMax)
            return Int(s);
    }
    Int x = a, y = b;
    if (negate_b)
        y.small_ = -y.small_;
    x.promote();
    y.promote();
    if (x.big_.empty())
        return y;
    if (y.big_.empty())
        return x;
    bool xn = x.small_ < 0, yn = y.small_ < 0;
    if (xn == yn)
        return from_mag(mag_add(x.big_, y.big_), xn);
    int c = mag_cmp(x.big_, y.big_);
    if (c == 0)
        return Int(0);
    if (c > 0)
        return from_mag(mag_sub(x.big_, y.big_), xn);
    return from_mag(mag_sub(y.big_, x.big_), yn);
}

Int operator*(const Int& a, const Int& b) {
    if (a.big_.empty() && b.big_.empty()) {
        long long p;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) && p <= Int::kSmallMax && p >= -Int::kSmallMax)
            return Int(p);
    }
    if (a.is_zero() || b.is_zero())
        return Int(0);
    Int x = a, y = b;
    x.promote();
    y.promote();
    return Int::from_mag(Int::mag_mul(x.big_, y.big_), (x.small_ < 0) != (y.small_ < 0));
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r) {
    if (b.is_zero())
        throw std::domain_error("Int: division by zero");
    if (a.big_.empty() && b.big_.empty()) {
        q = Int(a.small_ / b.small_);
        r = Int(a.small_ % b.small_);
        return;
    }
    Int x = a, y = b;
    x.promote();
    y.promote();
    if (x.big_.empty()) {
        q = Int(0);
        r = a;
        return;
    }
    std::vector<uint32_t> qm, rm;
    mag_divmod(x.big_, y.big_, qm, rm);
    bool qneg = (x.small_ < 0) != (y.small_ < 0);
    q = from_mag(std::move(qm), qneg);
    r = from_mag(std::move(rm), x.small_ < 0);
}

int Int::cmp(const Int& a, const Int& b) {
    if (a.big_.empty() && b.big_.empty())
        return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
    bool an = a.is_neg(), bn = b.is_neg();
    if (an != bn)
        return an ? -1 : 1;
    Int x = a, y = b;
    x.promote();
    y.promote();
    int c = mag_cmp(x.big_, y.big_);
    return an ? -c : c;
}

Int Int::gcd(Int a, Int b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Int q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

long long Int::mod_ll(long long m) const {
    assert(m > 0);
    if (big_.empty()) {
        long long r = small_ % m;
        return r < 0 ? r + m : r;
    }
    unsigned long long acc = 0;
    for (size_t i = big_.size(); i-- > 0;)
        acc = ((acc << 32) | big_[i]) % (unsigned long long)m;
    long long r = (long long)acc;
    if (small_ < 0 && r != 0)
        r = m - r;
    return r;
}

std::string Int::str() const {
    if (big_.empty())
        return std::to_string(small_);
    Int v = this->abs();
    std::string out;
    Int ten9(1000000000);
    while (!v.is_zero()) {
        Int q, r;
        divmod(v, ten9, q, r);
        std::string chunk = std::to_string(r.to_ll());
        if (!q.is_zero())
            chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
        v = q;
    }
    return is_neg() ? "-" + out : out;
}

Int Int::from_string(const std::string& s) {
    Int v(0);
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        i++;
    }
    if (i == s.size())
        throw std::invalid_argument("Int: empty numeral");
    for (; i < s.size(); i++) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("Int: bad digit");
        v = v * Int(10) + Int(s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace bdiag
