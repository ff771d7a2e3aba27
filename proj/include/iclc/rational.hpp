#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace iclc {

// Exact rational arithmetic on int64. All channel exponents, GDoF values and
// budgets in this library are rationals with small denominators; the piecewise
// formulas have exact ties at regime and breakpoint boundaries, so floating
// point is never used for anything decision-relevant.
//
// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_nonneg() const { return num_ >= 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rat operator-() const { return Rat(-num_, den_, already_reduced{}); }

    Rat operator+(const Rat& o) const {
        return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    // Cross-multiplication in 128-bit so comparisons never overflow.
    bool operator<(const Rat& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    // "n", or "n/d" when the denominator is not 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Exact decimal rendering when the denominator is 2^a*5^b, else "n/d".
    std::string decimal_or_fraction() const;

    // Accepts "n", "n/d", and decimal strings like "1.2" or "-0.25"
    // (converted exactly). Returns nullopt on malformed input.
    static std::optional<Rat> parse(const std::string& text);

private:
    struct already_reduced {};
    constexpr Rat(std::int64_t n, std::int64_t d, already_reduced) : num_(n), den_(d) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat abs(const Rat& r) { return r.is_negative() ? -r : r; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
// (x)^+ = max(x, 0), the clipped-positive part used throughout the bound formulas.
inline Rat pos(const Rat& r) { return r.is_negative() ? Rat(0) : r; }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return a / std::gcd(a, b) * b;
}

}  // namespace iclc
