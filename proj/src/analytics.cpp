#include "rbp/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace rbp {

double poly_F(double u, double x) {
    double u4 = u * u * u * u;
    double u8 = u4 * u4;
    double u11 = u8 * u * u * u;
    return (x - 1.0) * (x * x + u4 * x + u8) + u11;
}

double poly_F_expanded(double u, double x) {
    double u3 = u * u * u;
    double u4 = u3 * u;
    double u8 = u4 * u4;
    return x * x * x - (1.0 - u4) * x * x - u4 * (1.0 - u4) * x - u8 * (1.0 - u3);
}

double beta(double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("beta: u outside [0,1]");
    if (u < 1e-16) return 1.0;  // 1-u^11 rounds to 1
    if (u == 1.0) return 0.0;

    double u11 = std::pow(u, 11);
    double lo = 1.0 - u11;  // F(u, lo) < 0
    double hi = 1.0;        // F(u, hi) = u^11 > 0
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (poly_F(u, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double g_func(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("g: requires x > 0");
    double u = std::exp(-x);
    if (u < 1e-16) return 0.0;
    double b = beta(u);
    return b >= 1.0 ? 0.0 : -std::log(b);
}

namespace {

// upper bound for the envelope integral over (0, a]:
// -log(1-e^{-s}) <= -log s + s for s in (0,1], with s = 11 x
double head_envelope(double a) {
    double s = 11.0 * a;
    return a * (1.0 - std::log(s)) + 0.5 * s * a;
}

struct SimpsonState {
    long evals = 0;
    long budget = 0;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double (*f)(double), double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth, SimpsonState& st,
                        double& err_accum) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    st.evals += 2;
    if (st.evals > st.budget)
        throw std::runtime_error("lambda: tolerance not achievable within node budget");
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
        err_accum += std::abs(diff) / 15.0;
        return left + right + diff / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, st, err_accum) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, st, err_accum);
}

double integrate_g(double a, double b, double tol, double& err_accum) {
    if (b <= a) return 0.0;
    SimpsonState st;
    st.budget = 4'000'000;
    double fa = g_func(a), fb = g_func(b), fm = g_func(0.5 * (a + b));
    st.evals = 3;
    double whole = simpson(a, b, fa, fm, fb);
    return adaptive_simpson(g_func, a, b, fa, fm, fb, whole, tol, 48, st, err_accum);
}

}  // namespace

LambdaResult lambda_integral(double abs_tol) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("lambda: abs_tol must be > 0");

    const double K = 8.0;
    // head cutoff: envelope mass over (0, x_min] must fit the budget
    double x_min = 1e-6;
    while (head_envelope(x_min) > abs_tol / 4.0) {
        x_min /= 4.0;
        if (x_min < 1e-300) throw std::runtime_error("lambda: tolerance not achievable");
    }
    const double head = head_envelope(x_min);
    const double tail = 5.0 / 44.0 * std::exp(-11.0 * K);

    double quad_err = 0.0;
    double mid = integrate_g(x_min, K, std::max(abs_tol / 4.0, 1e-13), quad_err);

    LambdaResult r;
    // 0 <= int_0^{x_min} g <= head: estimate by the midpoint of the bracket
    r.value = mid + head / 2.0;
    r.error_bound = head / 2.0 + quad_err + tail + 1e-12;
    if (r.error_bound > abs_tol)
        throw std::runtime_error("lambda: tolerance not achievable within node budget");
    return r;
}

double lambda_interval(double B) {
    if (!(B >= 1.0)) throw std::invalid_argument("lambda_interval: B must be >= 1");
    if (B == 1.0) return 0.0;
    double lo = 1.0 / B;
    double hi = std::min(B, 40.0);  // g vanishes to double precision past e^{-x} < 1e-16
    if (hi <= lo) return 0.0;
    double err = 0.0;
    return integrate_g(lo, hi, 1e-11, err);
}

double lambda_const() {
    static const double v = lambda_integral(1e-10).value;
    return v;
}

CrossingSequence crossing_sequence(double u, int m_max) {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("crossing_sequence: u must be inside (0,1)");
    if (m_max < 0) throw std::invalid_argument("crossing_sequence: m_max must be >= 0");

    const double u3 = u * u * u;
    const double u4 = u3 * u;
    const double u8 = u4 * u4;
    const double c1 = 1.0 - u4, c2 = u4 * (1.0 - u4), c3 = u8 * (1.0 - u3);

    CrossingSequence out;
    out.u = u;
    out.values.reserve(m_max + 1);
    out.log_values.reserve(m_max + 1);

    // scaled recurrence: true A_m = a_m * exp(scale); renormalize to avoid
    // underflow for large m
    double a0 = 1.0, a1 = 1.0, a2 = 1.0 - u8;
    double scale = 0.0;
    auto emit = [&](double a) {
        out.values.push_back(a * std::exp(scale));
        out.log_values.push_back(std::log(a) + scale);
    };
    if (m_max >= 0) emit(a0);
    if (m_max >= 1) emit(a1);
    if (m_max >= 2) emit(a2);
    for (int m = 3; m <= m_max; ++m) {
        double an = c1 * a2 + c2 * a1 + c3 * a0;
        a0 = a1;
        a1 = a2;
        a2 = an;
        if (a2 < 1e-120) {
            double f = 1e120;
            a0 *= f;
            a1 *= f;
            a2 *= f;
            scale -= std::log(f);
        }
        emit(a2);
    }
    return out;
}

double threshold_p(double n, double eps_signed) {
    if (!(n > 1.0)) throw std::invalid_argument("threshold_p: n must be > 1");
    double num = lambda_const() + eps_signed;
    if (num <= 0.0) return 0.0;
    double p = std::sqrt(num / std::log(n));
    return std::min(1.0, std::max(0.0, p));
}

}  // namespace rbp
