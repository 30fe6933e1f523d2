#pragma once

#include <optional>
#include <string>

#include "detrep/rational.hpp"

namespace detrep {

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2, a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) fail(Errc::zero_denominator, "division by zero in Q(i)");
        Rational n = b.norm();
        GaussianRational t = a * b.conj();
        return {t.re_ / n, t.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    /// Deterministic "positive representative" predicate used when a sign has to
    /// be chosen canonically: re > 0, or re = 0 and im > 0.
    bool is_positive_canonical() const {
        if (re_.sign() != 0) return re_.sign() > 0;
        return im_.sign() > 0;
    }

    /// Exact square root in Q(i) when it exists. Canonical choice: the root g
    /// with g.is_positive_canonical() (for nonzero arguments).
    std::optional<GaussianRational> sqrt() const;

    /// Scalar grammar: "0", "3/4", "-2", "1*i", "-2/3*i", "1/2-2/3*i".
    std::string str() const;

private:
    Rational re_, im_;
};

inline GaussianRational conj(const GaussianRational& g) { return g.conj(); }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }

/// Parses the scalar grammar accepted on every external surface:
/// optional sign, "p", "p/q", "p*i", "p/q*i", "i", and two-term combinations
/// such as "1/2-2/3*i". Throws MalformedScalar / ZeroDenominator.
GaussianRational parse_scalar(const std::string& text);

} // namespace detrep
