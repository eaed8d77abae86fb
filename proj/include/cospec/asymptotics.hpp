#pragma once

#include <string>

#include "cospec/enumeration.hpp"
#include "cospec/numeric.hpp"

namespace cospec {

// Literal truncated evaluation of sum_{k>=1} H~(x^k)/k with a certified
// crude bound on everything dropped (degree truncation, k truncation,
// evaluation cutoffs). The bound is loose near the radius; the radius
// computation itself never relies on it for the k=1 term.
struct TailEval {
    BigFloat value;
    BigFloat bound;
};

TailEval eval_tail(const CoeffTable& table, const BigFloat& x,
                   unsigned precision_bits = 256);

struct AsymptoticEstimate {
    int m = CoeffTable::kUnrestricted;
    BigFloat rho;
    BigFloat C;
    BigFloat a1;
    int N_used = 0;
    unsigned precision_bits = 0;
    BigFloat radius_error;       // certified enclosure half-width for rho
    BigFloat fyy;                // exp term at the singularity; equals 2
    BigFloat equation_residual;  // |exp(b + T(rho)) - 2|
    BigFloat tail_bound;         // k>=2 truncation bound at rho
};

// Smallest positive root of exp((1+x-x^m)/2 + sum_{k>=2} H^(m)(x^k)/k) = 2,
// the radius of convergence of H^(m) (x^m term absent when unrestricted).
// Bisection on [0.2, 0.4], then Newton polishing; digits certified against
// the k>=2 truncation bounds and the residual.
BigFloat radius(int m, unsigned precision_bits = 256, int N = 400);

// The singular value b_m = H^(m)(rho_m) = (1 + rho_m - rho_m^m)/2, with
// three consistency checks: the defining identity at rho_m, a >= 10-digit
// series-vs-implicit-equation agreement at an interior point, and the crude
// certified bound on |H~(rho_m) - b_m|.
BigFloat half_value(int m, unsigned precision_bits = 256, int N = 400);

// Full singular expansion data: F_x, F_yy at (rho_m, b_m) from the
// truncated series, a1 = -sqrt(2 F_x / F_yy), C = sqrt(rho F_x / (2 pi F_yy)).
AsymptoticEstimate growth_constant(int m, unsigned precision_bits = 256, int N = 400);

struct MateFraction {
    BigFloat ratio_base;  // rho_0 / rho_m
    BigFloat coeff;       // C_m / C_0
};

MateFraction mate_fraction_asymptote(const AsymptoticEstimate& em,
                                     const AsymptoticEstimate& e0);

// Smallest integer n with ratio_base^n <= target. Only the exponential
// factor enters; the coefficient ratio is close to 1 and conventionally
// dropped from the displayed bound.
long long half_threshold(const MateFraction& mf, double target = 0.5);

// |H_n / (C rho^-n n^-3/2) - 1| for the fit checks.
BigFloat fit_rel_error(const AsymptoticEstimate& est, const CoeffTable& table, int n);

// Fixed-point decimal with the given number of fractional digits,
// round-to-nearest; used to compare against printed values.
std::string fixed_digits(const BigFloat& x, int frac_digits);

}  // namespace cospec
