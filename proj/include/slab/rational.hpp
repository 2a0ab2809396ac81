#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slab {

// Exact rational on int64.  All admissibility conditions are
// rational-coefficient inequalities, so boundary cases must be decided
// without floating point.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rat operator+(Rat a, Rat b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(Rat a, Rat b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Rational extended with a single +infinity.  Reciprocals treat
// 1/inf = 0 exactly, which is how the exponent formulas use it.
class ExtRat {
public:
    constexpr ExtRat() : inf_(false), val_() {}
    ExtRat(Rat v) : inf_(false), val_(v) {}
    ExtRat(std::int64_t n) : inf_(false), val_(n) {}
    static ExtRat infinity() { ExtRat e; e.inf_ = true; return e; }

    bool is_inf() const { return inf_; }
    Rat finite() const {
        if (inf_) throw std::domain_error("ExtRat: value is infinite");
        return val_;
    }

    // 1/x with 1/inf = 0; requires x > 0.
    Rat recip() const {
        if (inf_) return Rat(0);
        if (val_.num() <= 0) throw std::domain_error("ExtRat: recip of non-positive");
        return Rat(1) / val_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.val_ == b.val_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.val_ < b.val_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }

    std::string str() const { return inf_ ? "inf" : val_.str(); }
    double to_double() const;

private:
    bool inf_;
    Rat val_;
};

inline double ExtRat::to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : val_.to_double();
}

// Parses "7", "10/3" or "inf".  Throws std::invalid_argument on anything else.
ExtRat parse_extrat(const std::string& s);

} // namespace slab
