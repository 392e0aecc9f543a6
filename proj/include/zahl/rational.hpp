#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "zahl/integer.hpp"

namespace zahl {

// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    Integer floor() const { return floor_div(num_, den_).q; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    // Always "num/den", as in fraction listings.
    std::string str_fraction() const { return num_.str() + "/" + den_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct unchecked {};
    Rational(Integer n, Integer d, unchecked) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Integer g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Integer num_;
    Integer den_;
};

}  // namespace zahl
