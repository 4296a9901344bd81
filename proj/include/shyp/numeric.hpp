#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace shyp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an enumeration would exceed the configured size caps.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// binom(n, m) with the convention binom(n, m) = 0 for m < 0 or m > n.
inline Int binomial(long long n, long long m) {
    if (m < 0 || m > n || n < 0) return 0;
    m = std::min(m, n - m);
    Int r = 1;
    for (long long i = 1; i <= m; ++i) {
        r *= n - m + i;
        r /= i;
    }
    return r;
}

inline Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Divide an integer vector by the gcd of its entries (zero vector unchanged).
inline void make_primitive(std::vector<Int>& v) {
    Int g = vec_gcd(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Exact fraction as text, "p/q" or plain "p" for integers.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace shyp
