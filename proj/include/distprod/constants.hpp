#pragma once

#include <map>
#include <string>

#include "distprod/errors.hpp"
#include "distprod/mollifier.hpp"

namespace distprod::constants {

/// One oracle constant: value with its quadrature error estimate.
struct ConstantValue {
    double value = 0.0;
    double error = 0.0;
};

/// Every closed-form constant is an explicit quadrature of its defining
/// integral, independent of the product-evaluation path:
///
///   N_m        int_{-1}^{1} x^m exp(1/(x^2-1)) dx
///   Nrad_m     sphere_area(d) int_0^1 r^(m+d-1) exp(1/(r^2-1)) dr
///   A_j        int Phi(x) / x^j dx            (even j <= m)
///   B_m        (1/(e N_m)) int x^m Phi(x) dx
///   K_m        (m/(e N_m)) int x^(m-1) Phi(x) dx
///   Bt_m       (m/(e N_m)) int x^(m-1) Phi'(x) dx
///   G(k,l,m)   (m!/((m-l)! e N_m)) int u^(m-l) Phi^(k)(u) du
///   B_m^d      B_m^d
///   C_m        (1/(e Nrad_m)) int |x|^m Phi(x) dx      (see c_m_linear)
enum class Which {
    Norm1d,       // N_m
    NormRadial,   // N'_m(d)
    A,            // A_j(m), param = j
    B,            // B_m
    K,            // K_m
    Bt,           // Btilde_m
    G,            // G(k,l,m), params = (k, l)
    BPowD,        // B_m^d
    Cm,           // C_m(d), |x|^m reading
    CmLinear,     // C_m(d), |x|^1 reading as printed
};

/// Computes one constant at rel_tol 1e-11. Throws UnsupportedOrder when the
/// parameters violate the constant's precondition, NumericalError when the
/// quadrature does not converge. Results are memoized.
ConstantValue compute(int m, int d, Which which, int p1 = 0, int p2 = 0);

/// Full table for one (m, d): keys are stable identifiers
/// ("N_m", "Nrad_m", "A_2", ..., "B_m", "K_m", "Bt_m", "B_m^d", "C_m",
/// "C_m_linear").
std::map<std::string, ConstantValue> table(int m, int d);

struct IdentityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // relative where the scale allows, else absolute
    bool pass = false;
};

/// Cross-validation: A_j = N_{m-j}/N_m, B_m = N_{2m}/(e N_m^2),
/// Bt_m = -m(m-1) N_{2m-2}/(e N_m^2), G parity zeros, C_m > 0.
std::vector<IdentityCheck> identity_suite(int m, double tol = 1e-8);

}  // namespace distprod::constants
