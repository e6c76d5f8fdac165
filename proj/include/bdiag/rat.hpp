// Exact rationals over Int, always kept reduced with a positive denominator.

#pragma once

#include <stdexcept>

#include "bdiag/int.hpp"

namespace bdiag {

class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    Rat operator-() const { return Rat(-num_, den_, nullptr); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return Int::cmp(a.num_ * b.den_, b.num_ * a.den_) < 0; }

    std::string str() const { return den_.is_one() ? num_.str() : num_.str() + "/" + den_.str(); }

  private:
    Rat(Int n, Int d, std::nullptr_t) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_.is_zero())
            throw std::domain_error("Rat: zero denominator");
        if (den_.is_neg()) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = Int::gcd(num_, den_);
        if (!g.is_zero() && !g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (num_.is_zero())
            den_ = Int(1);
    }

    Int num_, den_;
};

}  // namespace bdiag
