// Positive reals carried as natural logarithms. The only representation in
// which thresholds near p ~ 10^1300 stay computable and comparable.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "primroot/bigint.hpp"
#include "primroot/errors.hpp"

namespace primroot {

class LogReal {
  public:
    LogReal() : lg_(0.0) {}  // represents 1

    static LogReal from_log(double lg) { return LogReal(lg); }

    static LogReal from_value(double v) {
        if (!(v > 0.0)) throw domain_error("LogReal: value must be positive");
        return LogReal(std::log(v));
    }

    static LogReal from_bigint(const BigInt& n) { return LogReal(log_bigint(n)); }

    double log() const { return lg_; }
    double log10() const { return lg_ / std::log(10.0); }
    double value() const { return std::exp(lg_); }  // may overflow to inf

    LogReal operator*(const LogReal& o) const { return LogReal(lg_ + o.lg_); }
    LogReal operator/(const LogReal& o) const { return LogReal(lg_ - o.lg_); }

    // Stable log-sum-exp.
    LogReal operator+(const LogReal& o) const {
        const double hi = lg_ > o.lg_ ? lg_ : o.lg_;
        const double lo = lg_ > o.lg_ ? o.lg_ : lg_;
        return LogReal(hi + std::log1p(std::exp(lo - hi)));
    }

    // this - o, requires this > o.
    LogReal sub(const LogReal& o) const {
        if (!(lg_ > o.lg_)) throw argument_error("LogReal::sub: minuend must exceed subtrahend");
        return LogReal(lg_ + std::log1p(-std::exp(o.lg_ - lg_)));
    }

    LogReal pow(double e) const { return LogReal(lg_ * e); }

    bool operator<(const LogReal& o) const { return lg_ < o.lg_; }
    bool operator<=(const LogReal& o) const { return lg_ <= o.lg_; }
    bool operator>(const LogReal& o) const { return lg_ > o.lg_; }
    bool operator>=(const LogReal& o) const { return lg_ >= o.lg_; }
    bool operator==(const LogReal& o) const { return lg_ == o.lg_; }

    // "m.mmmmmmmmmmme+XXXX" with 12 significant digits, valid at any scale.
    std::string to_sci_string() const {
        const double l10 = log10();
        long long e10 = static_cast<long long>(std::floor(l10));
        double mant = std::pow(10.0, l10 - static_cast<double>(e10));
        if (mant >= 10.0 - 5e-12) {  // rounding pushed mantissa over
            mant /= 10.0;
            ++e10;
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.11fe%+lld", mant, e10);
        return buf;
    }

  private:
    explicit LogReal(double lg) : lg_(lg) {}
    double lg_;
};

}  // namespace primroot
