#pragma once

// Extended-precision real/complex scalars and the snapping policy shared by
// the whole library.  Reals are MPFR floats (via Boost.Multiprecision) whose
// working precision is set globally in bits; every integer certificate in the
// library bottoms out in snap_to_integer().

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace modinv {

using Real = boost::multiprecision::mpfr_float;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax / file-format problems.  `offset` is a byte offset into the input.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Modular-data axiom violations.
struct ValidationError : Error {
    using Error::Error;
};

// Snap failures, enumeration overflow, missing factorizations.
struct ComputationError : Error {
    using Error::Error;
};

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398)) + 2;
}

// Sets the global working precision.  Values constructed afterwards carry
// this precision; previously constructed values keep theirs.
inline void set_working_precision(unsigned bits) {
    if (bits < 64) throw Error("working precision must be at least 64 bits");
    Real::default_precision(bits_to_digits10(bits));
}

// RAII scope for temporarily raising the working precision (rank checks run
// the same computation at P and 2P).
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
        set_working_precision(bits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

struct ToleranceConfig {
    double snap_eps = 1e-24;  // integer snapping
    double val_eps = 1e-20;   // axiom residuals
    unsigned precision_bits = 192;

    void check() const {
        if (!(0 < snap_eps && snap_eps < val_eps && val_eps < 1))
            throw Error("tolerances must satisfy 0 < snap_eps < val_eps < 1");
        if (precision_bits < 64) throw Error("precision must be at least 64 bits");
    }
};

// Complex number over Real.  Immutable-by-convention value type.
struct Cplx {
    Real re, im;

    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(long long r) : re(r), im(0) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    Cplx conj() const { return {re, -im}; }
    Real abs2() const { return re * re + im * im; }
    Real abs() const { return sqrt(abs2()); }
};

inline Cplx root_of_unity(long long p, long long q) {
    Real angle = 2 * boost::math::constants::pi<Real>() * p / q;
    return {cos(angle), sin(angle)};
}

// Nearest integer to z if it is within eps in both components, otherwise
// nothing.  This is the exactness certificate used throughout.
inline std::optional<long long> snap_to_integer(const Cplx& z, double eps) {
    if (abs(z.im) > eps) return std::nullopt;
    Real r = round(z.re);
    if (abs(z.re - r) > eps) return std::nullopt;
    if (abs(r) > Real("9.3e18")) return std::nullopt;
    return static_cast<long long>(r);
}

inline std::optional<long long> snap_to_integer(const Real& x, double eps) {
    return snap_to_integer(Cplx(x), eps);
}

// Fixed-digit decimal rendering used for deterministic report output.
inline std::string format_real(const Real& x, unsigned decimals = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(static_cast<int>(decimals)) << x;
    std::string s = os.str();
    if (s == "-0." + std::string(decimals, '0')) s.erase(0, 1);
    return s;
}

}  // namespace modinv
