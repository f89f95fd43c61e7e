#pragma once

#include <vector>

#include "distprod/distrib.hpp"
#include "distprod/mollifier.hpp"
#include "distprod/quadrature.hpp"

namespace distprod::products {

using distrib::DistributionExpr;
using distrib::TestFunction;
using mollifier::Mollifier;
using mollifier::MollifierSpec;

/// Which product sequence to evaluate.
///   Direct:    int S_n^(alpha) T_n^(beta) Psi
///   Exchange:  int S_n^(beta)  T_n^(alpha) Psi
///   Sym:       half-sum of Direct and Exchange
///   LegacySym: 1/2 int [S_n^(beta) T_red(., n^-alpha)
///                       + T_n^(beta) S_red(., n^-alpha)] Psi
enum class ProductKind { Sym, Direct, Exchange, LegacySym };

struct ProductQuery {
    DistributionExpr S;
    DistributionExpr T;
    MollifierSpec spec;
    ProductKind kind = ProductKind::Sym;
    double alpha = 1.0;
    double beta = 1.0;
    TestFunction psi = TestFunction::bump();
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;

    void validate() const;
};

/// One evaluated point of the product sequence. `value` is the full sample
/// (S o T)_n(Psi); `rescale_exponent` records the analytic n-power that was
/// factored out of the quadrature (the largest across terms when the
/// expression has several), 0 when none.
struct SequenceSample {
    long n = 0;
    double value = 0.0;
    double quad_error = 0.0;
    double rescale_exponent = 0.0;
};

/// Evaluates the product sequence at one n, in rescaled coordinates
/// u = n^max(a,b) (x - x0) per delta pair, so the integrand stays O(1)
/// on a fixed box for arbitrarily large n.
SequenceSample eval_product_at_n(const ProductQuery& q, long n);

/// Test oracle: the same sample by quadrature of the unsubstituted
/// integrand over the physical supports. Only usable for small n; the
/// production path is eval_product_at_n.
SequenceSample eval_product_naive(const ProductQuery& q, long n);

/// Sample-level identity checks.
struct SymmetryReport {
    long n = 0;
    /// |(S od T)_n^(a,b) - (S oex T)_n^(b,a)|
    double direct_vs_exchange_swapped = 0.0;
    /// |(S od T)_n^(a,b) - (T od S)_n^(b,a)|
    double direct_commute = 0.0;
    /// |(S oex T)_n^(a,b) - (T oex S)_n^(b,a)|
    double exchange_commute = 0.0;
};

SymmetryReport symmetry_check(const ProductQuery& q, long n);

/// Continuous-factor sanity: the product sequence of two continuous terms
/// against the direct integral of S T Psi.
struct ContinuousProductReport {
    std::vector<long> n_values;
    std::vector<double> samples;
    double target = 0.0;          // int S T Psi
    double deviation_last = 0.0;  // |sample - target| at the largest n
};

ContinuousProductReport continuous_product_check(const DistributionExpr& S,
                                                 const DistributionExpr& T,
                                                 const MollifierSpec& spec, double alpha,
                                                 double beta, const TestFunction& psi);

}  // namespace distprod::products
