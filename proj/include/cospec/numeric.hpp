#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace cospec {

// Exact arbitrary-precision integer: coefficient tables grow like rho^-n and
// leave 64 bits long before n = 100.
using BigCount = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Arbitrary-precision real with runtime-variable precision (MPFR-backed).
using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

// Scoped default-precision switch for BigFloat computations.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10_for_bits(bits));
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

}  // namespace cospec
