#include "cospec/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "cospec/errors.hpp"

namespace cospec {

namespace {

BigFloat bf_pi() { return 4 * atan(BigFloat(1)); }
BigFloat bf_ln2() { return log(BigFloat(2)); }

// Series machinery over one coefficient table at working precision.
struct Series {
    int N;
    std::vector<BigFloat> coef;   // H_n, 1..N
    double max_ratio;             // sup over the table of H_{n+1}/H_n (doubled-checked)
    BigFloat eps;                 // cutoff threshold

    Series(const CoeffTable& table, unsigned precision_bits) : N(table.N) {
        coef.resize(N + 1);
        for (int n = 1; n <= N; ++n) coef[n] = BigFloat(table.at(n));
        max_ratio = 1.0;
        for (int n = 1; n + 1 <= N; ++n) {
            double r = BigFloat(coef[n + 1] / coef[n]).convert_to<double>();
            max_ratio = std::max(max_ratio, r);
        }
        max_ratio *= 1.0 + 1e-9;
        eps = pow(BigFloat(2), -static_cast<int>(precision_bits) - 16);
    }

    // sum_{n=1..N} H_n t^n; when the remaining terms are provably geometric
    // with ratio < 0.9 the sum cuts off early and the remainder goes into
    // err. Requires 0 < t < 1.
    BigFloat eval(const BigFloat& t, BigFloat& err) const {
        double q = max_ratio * t.convert_to<double>();
        BigFloat acc = 0, power = t;
        for (int n = 1; n <= N; ++n) {
            BigFloat term = coef[n] * power;
            acc += term;
            if (q < 0.9 && term < eps) {
                err += term * q / (1 - q);
                return acc;
            }
            power *= t;
        }
        return acc;
    }

    // sum_{n=1..N} n H_n t^(n-1)
    BigFloat eval_deriv(const BigFloat& t, BigFloat& err) const {
        double q = max_ratio * t.convert_to<double>() * 1.1;
        BigFloat acc = 0, power = 1;
        for (int n = 1; n <= N; ++n) {
            BigFloat term = n * coef[n] * power;
            acc += term;
            if (q < 0.9 && term < eps) {
                err += term * q / (1 - q);
                return acc;
            }
            power *= t;
        }
        return acc;
    }
};

// Truncation-beyond-N majorants, following the crude scheme: the m-avoiding
// coefficients are dominated by the unrestricted ones, which are dominated by
// A r^-n with r safely below rho_0 (geometric regime, arguments well inside
// r). Near the radius itself a polynomial-corrected majorant fitted to the
// table's own coefficients, A' n^-3/2 x^-n with safety factor 2, is used.
struct TailBounds {
    BigFloat r;        // fixed radius floor, below rho_0 = 0.2808...
    BigFloat A;        // 2 * max_n H_n r^n (unrestricted table)
    BigFloat Apoly_x;  // fit point of the polynomial-corrected bound
    BigFloat Apoly;    // 2 * max_n c_n n^{3/2} x^n over the bounded table
    int N;

    TailBounds(const Series& unrestricted, const Series& own, const BigFloat& x_for_poly)
        : N(unrestricted.N) {
        r = BigFloat("0.26");
        BigFloat best = 0, power = r;
        for (int n = 1; n <= N; ++n) {
            best = std::max(best, BigFloat(unrestricted.coef[n] * power));
            power *= r;
        }
        A = 2 * best;
        Apoly_x = x_for_poly;
        best = 0;
        power = Apoly_x;
        for (int n = 1; n <= N; ++n) {
            best = std::max(best, BigFloat(own.coef[n] * sqrt(BigFloat(n)) * n * power));
            power *= Apoly_x;
        }
        Apoly = 2 * best;
    }

    // bound on sum_{n>N} H_n t^n for t < r (geometric regime)
    BigFloat geometric(const BigFloat& t) const {
        if (t >= r) throw DomainError("geometric tail bound requires t < r");
        BigFloat q = t / r;
        return A * pow(q, N + 1) / (1 - q);
    }

    // bound for t <= Apoly_x: A' * sum_{n>N} n^-3/2 <= A' * 2/sqrt(N)
    BigFloat polynomial(const BigFloat& t) const {
        if (t > Apoly_x) throw DomainError("polynomial tail bound requires t <= fit point");
        return Apoly * 2 / sqrt(BigFloat(N));
    }

    BigFloat best(const BigFloat& t) const {
        if (t < r * BigFloat("0.98")) return geometric(t);
        return polynomial(t);
    }
};

BigFloat power_int(BigFloat base, long long e) {
    BigFloat out = 1;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

CoeffTable table_for_m(int m, int N) {
    return m == CoeffTable::kUnrestricted ? count_hierarchies(N) : count_avoiding(N, m);
}

// sum_{k>=2} H~(x^k)/k plus an error accumulator covering evaluation
// cutoffs, the k truncation, and degree truncation of every H~(x^k).
BigFloat tail2(const Series& s, const TailBounds& tb, const BigFloat& x, BigFloat& err) {
    BigFloat acc = 0, xk = x * x;
    BigFloat tiny = pow(BigFloat(2), -int(BigFloat::default_precision() * 3.33) - 24);
    int k = 2;
    while (true) {
        acc += s.eval(xk, err) / k;
        err += tb.geometric(xk) / k;
        xk *= x;
        ++k;
        if (xk < tiny) break;
        if (k > 100000) throw InsufficientTruncation("k-sum failed to converge");
    }
    // remaining k terms: H~(t)/k <= 2t for t below 0.1
    err += 2 * xk / (1 - x);
    return acc;
}

// d/dx of the above: sum_{k>=2} x^{k-1} H~'(x^k)
BigFloat tail2_deriv(const Series& s, const TailBounds& tb, const BigFloat& x, BigFloat& err) {
    BigFloat acc = 0, xk = x * x, xpow = x;
    BigFloat tiny = pow(BigFloat(2), -int(BigFloat::default_precision() * 3.33) - 24);
    int k = 2;
    while (true) {
        acc += xpow * s.eval_deriv(xk, err);
        xk *= x;
        xpow *= x;
        ++k;
        if (xk < tiny) break;
    }
    // dropped k terms (H~'(t) <= 1.5 for t <= 0.1) and the degree truncation
    // of the differentiated series, with its extra factor of n
    err += BigFloat("1.5") * xpow / (1 - x);
    err += tb.geometric(x * x) * (s.N + 2) / tb.r;
    return acc;
}

struct RadiusResult {
    BigFloat rho;
    BigFloat residual;
    BigFloat tail_err;
    BigFloat derivative;
};

RadiusResult solve_radius(int m, const Series& series, const TailBounds& tb,
                          unsigned precision_bits) {
    // phi(x) = (1 + x - x^m)/2 + sum_{k>=2} H~(x^k)/k - ln 2, monotone
    // increasing on the bracket; its root is rho_m.
    BigFloat ln2 = bf_ln2();
    BigFloat tail_err = 0;
    auto phi = [&](const BigFloat& x) {
        BigFloat analytic = (1 + x) / 2;
        if (m != CoeffTable::kUnrestricted) analytic -= power_int(x, m) / 2;
        return analytic + tail2(series, tb, x, tail_err) - ln2;
    };
    auto phi_deriv = [&](const BigFloat& x) {
        BigFloat d = BigFloat(1) / 2;
        if (m != CoeffTable::kUnrestricted) d -= m * power_int(x, m - 1) / 2;
        return d + tail2_deriv(series, tb, x, tail_err);
    };

    BigFloat lo = BigFloat("0.2"), hi = BigFloat("0.4");
    if (!(phi(lo) < 0) || !(phi(hi) > 0))
        throw InsufficientTruncation("radius bracket [0.2, 0.4] failed");
    for (int i = 0; i < 40; ++i) {
        BigFloat mid = (lo + hi) / 2;
        (phi(mid) < 0 ? lo : hi) = mid;
    }
    BigFloat x = (lo + hi) / 2;
    BigFloat step_tol = pow(BigFloat(2), -static_cast<int>(precision_bits) + 6);
    for (int i = 0; i < 200; ++i) {
        BigFloat dx = phi(x) / phi_deriv(x);
        x -= dx;
        if (abs(dx) < step_tol * x) break;
    }

    RadiusResult out;
    out.rho = x;
    out.residual = abs(phi(x));
    out.tail_err = tail_err;
    out.derivative = phi_deriv(x);
    if (out.derivative < BigFloat("0.1"))
        throw DegenerateSingularity("radius equation derivative unexpectedly small");
    return out;
}

}  // namespace

TailEval eval_tail(const CoeffTable& table, const BigFloat& x, unsigned precision_bits) {
    PrecisionGuard guard(precision_bits);
    if (!(x > 0) || !(x < 1)) throw DomainError("eval_tail requires 0 < x < 1");
    Series series(table, precision_bits);
    CoeffTable unrestricted = table.m == CoeffTable::kUnrestricted
                                  ? table
                                  : count_hierarchies(table.N);
    Series us(unrestricted, precision_bits);
    TailBounds tb(us, series, x);

    TailEval out;
    out.bound = 0;
    out.value = series.eval(x, out.bound);  // k = 1
    out.bound += tb.best(x);
    out.value += tail2(series, tb, x, out.bound);
    return out;
}

BigFloat radius(int m, unsigned precision_bits, int N) {
    PrecisionGuard guard(precision_bits);
    if (m != CoeffTable::kUnrestricted && m < 2)
        throw PatternTooSmall("avoidance pattern size must be >= 2");
    CoeffTable table = table_for_m(m, N);
    Series series(table, precision_bits);
    CoeffTable ut = m == CoeffTable::kUnrestricted ? table : count_hierarchies(N);
    Series us(ut, precision_bits);
    TailBounds tb(us, series, BigFloat("0.5"));

    RadiusResult r = solve_radius(m, series, tb, precision_bits);
    BigFloat certified = (r.residual + r.tail_err) / r.derivative;
    if (certified > pow(BigFloat(2), -static_cast<int>(precision_bits) / 2))
        throw InsufficientTruncation("certified radius error exceeds tolerance; raise N");
    return r.rho;
}

BigFloat half_value(int m, unsigned precision_bits, int N) {
    PrecisionGuard guard(precision_bits);
    CoeffTable table = table_for_m(m, N);
    Series series(table, precision_bits);
    CoeffTable ut = m == CoeffTable::kUnrestricted ? table : count_hierarchies(N);
    Series us(ut, precision_bits);
    TailBounds tb_wide(us, series, BigFloat("0.5"));

    RadiusResult r = solve_radius(m, series, tb_wide, precision_bits);
    const BigFloat& rho = r.rho;
    BigFloat b = (1 + rho) / 2;
    if (m != CoeffTable::kUnrestricted) b -= power_int(rho, m) / 2;

    // (a) the defining identity exp(b + T(rho)) = 2 at working precision
    BigFloat err = 0;
    BigFloat t2 = tail2(series, tb_wide, rho, err);
    BigFloat residual = abs(exp(b + t2) - 2);
    if (residual > pow(BigFloat(10), -30))
        throw ConsistencyFailure("radius equation residual too large");

    // (b) interior point: direct series vs the implicit equation F(x,u) = 0
    BigFloat xstar = rho * BigFloat("0.8");
    BigFloat direct = series.eval(xstar, err);
    BigFloat t2s = tail2(series, tb_wide, xstar, err);
    BigFloat u = direct;
    for (int i = 0; i < 60; ++i) {
        BigFloat e = exp(u + t2s);
        BigFloat f = e - 2 * u - 1 + xstar;
        if (m != CoeffTable::kUnrestricted) f -= power_int(xstar, m);
        BigFloat fy = e - 2;
        BigFloat du = f / fy;
        u -= du;
        if (abs(du) < pow(BigFloat(10), -40)) break;
    }
    if (abs(u - direct) > pow(BigFloat(10), -12))
        throw ConsistencyFailure("series and functional equation disagree at interior point");

    // (c) crude certified bound on |H~(rho) - b|
    TailBounds tb_at(us, series, rho);
    BigFloat gap = abs(series.eval(rho, err) - b);
    if (gap > tb_at.polynomial(rho))
        throw ConsistencyFailure("singular value differs from series beyond the tail bound");
    return b;
}

AsymptoticEstimate growth_constant(int m, unsigned precision_bits, int N) {
    PrecisionGuard guard(precision_bits);
    CoeffTable table = table_for_m(m, N);
    Series series(table, precision_bits);
    CoeffTable ut = m == CoeffTable::kUnrestricted ? table : count_hierarchies(N);
    Series us(ut, precision_bits);
    TailBounds tb(us, series, BigFloat("0.5"));

    RadiusResult r = solve_radius(m, series, tb, precision_bits);
    const BigFloat& rho = r.rho;
    BigFloat b = (1 + rho) / 2;
    if (m != CoeffTable::kUnrestricted) b -= power_int(rho, m) / 2;

    BigFloat err = 0;
    BigFloat exp_term = exp(b + tail2(series, tb, rho, err));  // F_yy; equals 2
    if (abs(exp_term) < BigFloat("0.5"))
        throw DegenerateSingularity("F_yy vanished at the singularity");
    if (abs(exp_term - 2) > pow(BigFloat(10), -25))
        throw ConsistencyFailure("F_yy at the singularity is not 2");

    BigFloat t2d = tail2_deriv(series, tb, rho, err);
    BigFloat fx = exp_term * t2d + 1;
    if (m != CoeffTable::kUnrestricted) fx -= m * power_int(rho, m - 1);

    AsymptoticEstimate est;
    est.m = m;
    est.rho = rho;
    est.a1 = -sqrt(2 * fx / exp_term);
    est.C = sqrt(rho * fx / (2 * bf_pi() * exp_term));
    est.N_used = N;
    est.precision_bits = precision_bits;
    est.radius_error = (r.residual + r.tail_err) / r.derivative;
    est.fyy = exp_term;
    est.equation_residual = abs(exp_term - 2);
    est.tail_bound = r.tail_err;

    // the two expressions for C agree by construction; guard the algebra
    BigFloat alt = -est.a1 * sqrt(rho) / (2 * sqrt(bf_pi()));
    if (abs(alt - est.C) > pow(BigFloat(10), -30) * est.C)
        throw ConsistencyFailure("growth constant cross-check failed");
    return est;
}

MateFraction mate_fraction_asymptote(const AsymptoticEstimate& em,
                                     const AsymptoticEstimate& e0) {
    if (e0.m != CoeffTable::kUnrestricted)
        throw Error("second argument must be the unrestricted estimate");
    MateFraction mf;
    mf.ratio_base = e0.rho / em.rho;
    mf.coeff = em.C / e0.C;
    return mf;
}

long long half_threshold(const MateFraction& mf, double target) {
    if (!(target > 0) || target > 1) throw DomainError("target must be in (0, 1]");
    if (target == 1.0) return 0;
    if (!(mf.ratio_base < 1)) throw DomainError("ratio base must be < 1");
    BigFloat t = log(BigFloat(target)) / log(mf.ratio_base);
    long long n = t.convert_to<long long>();
    while (power_int(mf.ratio_base, n) > target) ++n;
    while (n > 0 && power_int(mf.ratio_base, n - 1) <= target) --n;
    return n;
}

BigFloat fit_rel_error(const AsymptoticEstimate& est, const CoeffTable& table, int n) {
    PrecisionGuard guard(est.precision_bits);
    BigFloat predicted =
        est.C * power_int(1 / est.rho, n) / (BigFloat(n) * sqrt(BigFloat(n)));
    return abs(BigFloat(table.at(n)) / predicted - 1);
}

std::string fixed_digits(const BigFloat& x, int frac_digits) {
    return x.str(frac_digits, std::ios_base::fixed);
}

}  // namespace cospec
