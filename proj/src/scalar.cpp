#include "detrep/gaussian_rational.hpp"

#include <cctype>

namespace detrep {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::malformed_scalar: return "MalformedScalar";
        case Errc::zero_denominator: return "ZeroDenominator";
        case Errc::symbolic_parameters: return "SymbolicParameters";
        case Errc::singular_curve: return "SingularCurve";
        case Errc::mixed_forms: return "MixedForms";
        case Errc::not_skew: return "NotSkew";
        case Errc::singular_transform: return "SingularTransform";
        case Errc::not_nilpotent: return "NotNilpotent";
        case Errc::singular_ax: return "SingularAx";
        case Errc::precondition_violated: return "PreconditionViolated";
        case Errc::unbound_parameter: return "UnboundParameter";
        case Errc::not_self_adjoint: return "NotSelfAdjoint";
        case Errc::non_real_point: return "NonRealPoint";
        case Errc::point_not_on_curve: return "PointNotOnCurve";
        case Errc::not_a_root: return "NotARoot";
        case Errc::point_not_on_selfadjoint_locus: return "PointNotOnSelfAdjointLocus";
        case Errc::not_hermitian: return "NotHermitian";
        case Errc::singular_p1: return "SingularP1";
        case Errc::constraints_violated: return "ConstraintsViolated";
        case Errc::relation_violated: return "RelationViolated";
        case Errc::not_canonical_pair: return "NotCanonicalPair";
        case Errc::not_on_curve: return "NotOnCurve";
        case Errc::bad_schema: return "BadSchema";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
    const Rational& a = re_;
    const Rational& b = im_;
    if (b.is_zero()) {
        if (a.sign() >= 0) {
            auto r = a.sqrt();
            if (!r) return std::nullopt;
            return GaussianRational(*r);
        }
        auto r = (-a).sqrt();
        if (!r) return std::nullopt;
        return GaussianRational(Rational(0), *r);
    }
    // (x + yi)^2 = a + bi  =>  x^2 - y^2 = a, 2xy = b.
    // |a+bi| = r must be rational, then x^2 = (a+r)/2 must be square.
    auto r = norm().sqrt();
    if (!r) return std::nullopt;
    Rational x2 = (a + *r) / Rational(2);
    auto x = x2.sqrt();
    if (!x || x->is_zero()) return std::nullopt;
    Rational y = b / (Rational(2) * *x);
    return GaussianRational(*x, y); // x > 0, canonical
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    void next() { ++i; }
};

mpz_class parse_digits(Cursor& c) {
    std::string d;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        d.push_back(c.peek());
        c.next();
    }
    if (d.empty()) fail(Errc::malformed_scalar, "expected digits at position " + std::to_string(c.i));
    return mpz_class(d);
}

// One signed term: rational optionally followed by "*i", or bare "i".
// Returns (value, is_imaginary).
std::pair<Rational, bool> parse_term(Cursor& c, bool negative) {
    if (c.peek() == 'i') {
        c.next();
        return {negative ? Rational(-1) : Rational(1), true};
    }
    mpz_class num = parse_digits(c);
    mpz_class den = 1;
    if (c.peek() == '/') {
        c.next();
        den = parse_digits(c);
        if (den == 0) fail(Errc::zero_denominator, "denominator 0 in scalar literal");
    }
    Rational q(num, den);
    if (negative) q = -q;
    bool imag = false;
    if (c.peek() == '*') {
        c.next();
        if (c.peek() != 'i') fail(Errc::malformed_scalar, "expected 'i' after '*'");
        c.next();
        imag = true;
    } else if (c.peek() == 'i') {
        c.next();
        imag = true;
    }
    return {q, imag};
}

} // namespace

GaussianRational parse_scalar(const std::string& text) {
    Cursor c{text};
    bool have_re = false, have_im = false;
    Rational re, im;
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.peek() == '+' || c.peek() == '-') {
            neg = c.peek() == '-';
            c.next();
        } else if (!first) {
            fail(Errc::malformed_scalar, "expected sign between terms in \"" + text + "\"");
        }
        auto [q, imag] = parse_term(c, neg);
        if (imag) {
            if (have_im) fail(Errc::malformed_scalar, "two imaginary terms in \"" + text + "\"");
            im = q;
            have_im = true;
        } else {
            if (have_re) fail(Errc::malformed_scalar, "two real terms in \"" + text + "\"");
            re = q;
            have_re = true;
        }
        first = false;
    }
    if (first) fail(Errc::malformed_scalar, "empty scalar");
    return {re, im};
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out += re_.str();
    if (!im_.is_zero()) {
        if (!re_.is_zero() && im_.sign() > 0) out += "+";
        if (im_.sign() < 0) {
            out += "-";
            out += (-im_).str();
        } else {
            out += im_.str();
        }
        out += "*i";
    }
    return out;
}

} // namespace detrep
