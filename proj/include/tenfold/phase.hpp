#pragma once

// U(1) phases stored exactly as rational turns: the value e^{2*pi*i*turns}
// with turns in [0,1) reduced to lowest terms. Multiplication adds turns
// mod 1; conjugation negates; the square root takes the branch turns/2.

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

#include "tenfold/errors.hpp"

namespace tenfold {

class UnitPhase {
public:
    constexpr UnitPhase() = default;

    static UnitPhase turns(std::int64_t num, std::int64_t den) {
        require(den != 0, errc::precondition, "phase denominator must be nonzero");
        UnitPhase p;
        p.num_ = num;
        p.den_ = den;
        p.reduce();
        return p;
    }

    static UnitPhase one() { return UnitPhase(); }
    static UnitPhase minus_one() { return turns(1, 2); }
    static UnitPhase i() { return turns(1, 4); }
    static UnitPhase from_sign(int sign) {
        require(sign == 1 || sign == -1, errc::precondition, "sign must be +-1");
        return sign == 1 ? one() : minus_one();
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    friend UnitPhase operator*(const UnitPhase& a, const UnitPhase& b) {
        return turns(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    UnitPhase inverse() const { return turns(-num_, den_); }
    UnitPhase conj() const { return inverse(); }
    // Conjugate when the acting element is antiunitary (phi = -1).
    UnitPhase twisted_by(int phi) const { return phi == -1 ? conj() : *this; }

    // Principal branch: result turns = turns/2, lying in [0, 1/2).
    UnitPhase sqrt() const { return turns(num_, 2 * den_); }
    UnitPhase pow(std::int64_t k) const { return turns(num_ * k, den_); }

    bool operator==(const UnitPhase& other) const = default;

    bool is_one() const { return num_ == 0; }
    bool is_real() const { return num_ == 0 || (num_ == 1 && den_ == 2); }
    bool is_fourth_root() const { return is_real() || den_ == 4; }
    // +1 or -1 for real phases.
    int sign() const {
        require(is_real(), errc::precondition, "phase is not +-1");
        return is_one() ? 1 : -1;
    }

    std::complex<double> value() const {
        const double angle = 2.0 * 3.14159265358979323846 * double(num_) / double(den_);
        return {std::cos(angle), std::sin(angle)};
    }

    // Exact complex value for fourth roots of unity, as (re, im) integers.
    std::pair<int, int> gaussian_value() const {
        require(is_fourth_root(), errc::precondition, "phase is not in {+-1, +-i}");
        if (num_ == 0) return {1, 0};
        if (den_ == 2) return {-1, 0};
        return num_ == 1 ? std::pair<int, int>{0, 1} : std::pair<int, int>{0, -1};
    }

    std::string str() const {
        if (num_ == 0) return "1";
        return std::to_string(num_) + "/" + std::to_string(den_) + " turn";
    }

private:
    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        num_ %= den_;
        if (num_ < 0) num_ += den_;
        std::int64_t g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace tenfold
