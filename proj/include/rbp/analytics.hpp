#pragma once

#include <vector>

namespace rbp {

// F(u,x) = x^3 - (1-u^4)x^2 - u^4(1-u^4)x - u^8(1-u^3), evaluated through the
// factored form (x-1)(x^2 + u^4 x + u^8) + u^11 for conditioning.
double poly_F(double u, double x);
double poly_F_expanded(double u, double x);  // plain monomial evaluation

// largest real root of F_u; the unique root in (0,1) for u in (0,1), found by
// bisection on [1-u^11, 1] to absolute tolerance 1e-14. beta(0)=1, beta(1)=0.
double beta(double u);

// g(x) = -log(beta(e^{-x})), x > 0
double g_func(double x);

struct LambdaResult {
    double value = 0;
    double error_bound = 0;  // certified absolute error
};

// lambda = integral of g over (0, inf): adaptive Simpson on [x_min, 8] with
// the head and tail completed through the envelope g(x) <= -log(1 - e^{-11x}).
LambdaResult lambda_integral(double abs_tol);

// integral of g over [1/B, B]
double lambda_interval(double B);

// memoized high-accuracy lambda (abs error <= 1e-10)
double lambda_const();

struct CrossingSequence {
    double u = 0;
    std::vector<double> values;      // A_0..A_m; underflows to 0 for huge m
    std::vector<double> log_values;  // log A_m, always finite
};

// A_0 = A_1 = 1, A_2 = 1-u^8,
// A_m = (1-u^4) A_{m-1} + u^4 (1-u^4) A_{m-2} + u^8 (1-u^3) A_{m-3}
CrossingSequence crossing_sequence(double u, int m_max);

// sqrt((lambda + eps_signed) / log n) clamped to [0,1]; n > 1
double threshold_p(double n, double eps_signed);

}  // namespace rbp
