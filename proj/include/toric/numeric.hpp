#pragma once

// Arithmetic substrate shared by the whole library.
//
// Two scalar modes back every geometric computation:
//   - toric::Rat   : exact arbitrary-precision rationals; comparisons are exact.
//   - double       : IEEE doubles; every sign / zero / equality decision is
//                    mediated by one process-wide tolerance (default 1e-9).
// Modules are templated on the scalar type, so mixing modes inside a single
// computation is a compile error rather than a silent coercion.  Documents
// read from JSON must commit to one mode; the readers enforce that.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Process-wide comparison tolerance for float mode.  Set once from the CLI
/// (`--tolerance`), read everywhere.
inline double& tolerance() {
    static double eps = 1e-9;
    return eps;
}

// ---------------------------------------------------------------------------
// error taxonomy (CLI maps these onto exit codes)

/// Malformed input: bad JSON, wrong schema, mixed scalar modes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition is violated (e.g. b outside cone(A),
/// functional not in the dual cone, intersection not a common face).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    double residual;
    ConvergenceError(const std::string& what, double res)
        : std::runtime_error(what), residual(res) {}
};

// ---------------------------------------------------------------------------
// scalar traits

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;
    static int sign(const Rat& x) { return x.sign(); }
    static bool is_zero(const Rat& x) { return x.is_zero(); }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
    static double to_double(const Rat& x) { return x.convert_to<double>(); }
    static Rat from_double(double x) {
        // exact binary expansion of the double
        if (!std::isfinite(x)) throw ParseError("non-finite value in exact mode");
        int exp = 0;
        double m = std::frexp(x, &exp);
        Int num = Int(static_cast<long long>(std::ldexp(m, 53)));
        exp -= 53;
        Rat r(num);
        if (exp > 0) r *= Rat(Int(1) << exp);
        else if (exp < 0) r /= Rat(Int(1) << (-exp));
        return r;
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static int sign(double x) {
        if (x > tolerance()) return 1;
        if (x < -tolerance()) return -1;
        return 0;
    }
    static bool is_zero(double x) { return std::fabs(x) <= tolerance(); }
    static bool eq(double a, double b) { return is_zero(a - b); }
    static double to_double(double x) { return x; }
    static double from_double(double x) { return x; }
};

template <class T>
inline int sgn(const T& x) { return scalar_traits<T>::sign(x); }

template <class T>
inline bool is_zero(const T& x) { return scalar_traits<T>::is_zero(x); }

template <class T>
inline bool scalar_eq(const T& a, const T& b) { return scalar_traits<T>::eq(a, b); }

template <class T>
inline double to_double(const T& x) { return scalar_traits<T>::to_double(x); }

// ---------------------------------------------------------------------------
// scalar <-> string (the JSON wire format: "p/q" in exact mode, a decimal
// literal in float mode)

inline std::string scalar_to_string(const Rat& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

inline std::string scalar_to_string(double x) {
    // shortest round-trip decimal
    for (int prec = 1; prec <= 17; ++prec) {
        std::ostringstream os;
        os.precision(prec);
        os << x;
        if (std::stod(os.str()) == x) return os.str();
    }
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
                s.find('E') != std::string::npos)
                throw ParseError("decimal literal '" + s + "' in exact mode; use p/q");
            return Rat(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// small integer helpers

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// floor division for cpp_int (the / operator truncates toward zero)
inline Int int_floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace toric
