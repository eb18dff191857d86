#pragma once

#include "lensgraph/rational.hpp"

#include <optional>
#include <string>

namespace lensgraph {

/// k when x == 2^k for an integer k, otherwise nothing (log2 x is then
/// irrational).
std::optional<long> exact_log2(const Rational& x);

struct RationalInterval {
    Rational lo;
    Rational hi;
};

/// Rigorous enclosure lo <= log2(x) <= hi using `bits` of working
/// precision with directed rounding. x > 0.
RationalInterval log2_enclosure(const Rational& x, unsigned long bits);

/// A real of the form coefficient * log2(argument)^power with power in
/// {-1, 0, 1}. Comparisons against rationals are exact: the value is either
/// rational, or irrational and then refined until decidable.
class LogTerm {
public:
    LogTerm(Rational value = 0) : coef_(std::move(value)), arg_(2), power_(0) {}

    static LogTerm times_log2(Rational coef, Rational arg);
    static LogTerm over_log2(Rational coef, Rational arg);

    LogTerm scaled(const Rational& factor) const;

    /// sign(value - r)
    int compare(const Rational& r) const;

    std::optional<Rational> exact() const;
    double approx() const;

    /// "c", "c*log2(a)" or "c/log2(a)", with exact rationals.
    std::string to_string() const;

    const Rational& coefficient() const { return coef_; }
    const Rational& argument() const { return arg_; }
    int power() const { return power_; }

private:
    LogTerm(Rational coef, Rational arg, int power);

    Rational coef_;
    Rational arg_;
    int power_;
};

inline bool operator<=(const Rational& r, const LogTerm& t) { return t.compare(r) >= 0; }
inline bool operator>=(const Rational& r, const LogTerm& t) { return t.compare(r) <= 0; }
inline bool operator<(const Rational& r, const LogTerm& t) { return t.compare(r) > 0; }

/// sign(lhs - scale * (sqrt(a) + sqrt(b))) for scale, a, b >= 0; exact.
int compare_scaled_sqrt_sum(const Rational& lhs, const Rational& scale, const Rational& a, const Rational& b);

} // namespace lensgraph
