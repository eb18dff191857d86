#include "lensgraph/exact_real.hpp"

#include "lensgraph/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace lensgraph {

namespace {

bool is_power_of_two(const Integer& z) { return z > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

class Mpfr {
public:
    explicit Mpfr(unsigned long bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

    Rational to_rational() {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

} // namespace

std::optional<long> exact_log2(const Rational& x) {
    if (x <= 0) return std::nullopt;
    if (x.get_den() == 1 && is_power_of_two(x.get_num())) {
        return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) - 1;
    }
    if (x.get_num() == 1 && is_power_of_two(x.get_den())) {
        return -(static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2)) - 1);
    }
    return std::nullopt;
}

RationalInterval log2_enclosure(const Rational& x, unsigned long bits) {
    if (x <= 0) throw DomainError("log2 of a nonpositive number");
    Mpfr lo_arg(bits), hi_arg(bits), lo(bits), hi(bits);
    mpfr_set_q(lo_arg.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_arg.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_log2(lo.get(), lo_arg.get(), MPFR_RNDD);
    mpfr_log2(hi.get(), hi_arg.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational()};
}

LogTerm::LogTerm(Rational coef, Rational arg, int power) : coef_(std::move(coef)), arg_(std::move(arg)), power_(power) {
    if (arg_ <= 0) throw DomainError("log2 of a nonpositive number");
    if (power_ == -1 && arg_ == 1) throw DomainError("division by log2(1) = 0");
}

LogTerm LogTerm::times_log2(Rational coef, Rational arg) { return LogTerm(std::move(coef), std::move(arg), 1); }
LogTerm LogTerm::over_log2(Rational coef, Rational arg) { return LogTerm(std::move(coef), std::move(arg), -1); }

LogTerm LogTerm::scaled(const Rational& factor) const {
    LogTerm out = *this;
    out.coef_ *= factor;
    return out;
}

std::optional<Rational> LogTerm::exact() const {
    if (power_ == 0 || coef_ == 0) return power_ == 0 ? coef_ : Rational(0);
    const auto k = exact_log2(arg_);
    if (!k) return std::nullopt;
    if (power_ == 1) return coef_ * *k;
    return coef_ / Rational(*k);
}

int LogTerm::compare(const Rational& r) const {
    if (auto v = exact()) return sgn(*v - r);
    // log2(arg) is irrational and coef != 0, so value != r unless, for
    // power -1, r == 0; that case has the sign of coef * log2(arg).
    for (unsigned long bits = 64; bits <= (1UL << 20); bits *= 2) {
        const auto [lo, hi] = log2_enclosure(arg_, bits);
        if (power_ == 1) {
            Rational a = coef_ * lo, b = coef_ * hi;
            if (a > b) std::swap(a, b);
            if (a > r) return 1;
            if (b < r) return -1;
        } else {
            // value - r = (coef - r * L) / L, with L bounded away from 0.
            if (lo <= 0 && hi >= 0) continue;
            const int sign_l = lo > 0 ? 1 : -1;
            Rational a = coef_ - r * lo, b = coef_ - r * hi;
            if (a > b) std::swap(a, b);
            if (a > 0) return sign_l;
            if (b < 0) return -sign_l;
        }
    }
    throw std::logic_error("LogTerm::compare did not converge");
}

double LogTerm::approx() const {
    if (power_ == 0) return to_double(coef_);
    const double l = std::log2(to_double(arg_));
    return power_ == 1 ? to_double(coef_) * l : to_double(coef_) / l;
}

std::string LogTerm::to_string() const {
    using lensgraph::to_string;
    if (power_ == 0) return to_string(coef_);
    return to_string(coef_) + (power_ == 1 ? "*log2(" : "/log2(") + to_string(arg_) + ")";
}

int compare_scaled_sqrt_sum(const Rational& lhs, const Rational& scale, const Rational& a, const Rational& b) {
    if (scale < 0 || a < 0 || b < 0) throw DomainError("compare_scaled_sqrt_sum expects nonnegative inputs");
    if (scale == 0 || (a == 0 && b == 0)) return sgn(lhs);
    const Rational r = lhs / scale;
    if (r < 0) return -1;
    const Rational d = r * r - a - b;
    if (d < 0) return -1;
    return sgn(d * d - 4 * a * b);
}

} // namespace lensgraph
