#pragma once

#include <cmath>
#include <complex>

// Customization points shared by every scalar ring the algebra is
// instantiated on: plain complex numbers, truncated jets, and the nested
// forward-mode types used by the geodesic integrator.
//
// A ring S provides:
//   zero_like(x), one_like(x)   -- additive/multiplicative identity shaped like x
//   value_of(x)                 -- leading (constant-part) complex value
//   inv(x), log(x), exp(x), sqrt(x), pow_real(x, p)
//   conj_like(x)                -- only where coefficientwise conjugation makes
//                                  sense (complex values, jets over real vars)

namespace hartogs {

using cdouble = std::complex<double>;

inline cdouble zero_like(const cdouble&) { return cdouble(0.0); }
inline cdouble one_like(const cdouble&) { return cdouble(1.0); }
inline cdouble value_of(const cdouble& x) { return x; }
inline cdouble conj_like(const cdouble& x) { return std::conj(x); }

inline cdouble inv(const cdouble& x) { return 1.0 / x; }
inline cdouble log(const cdouble& x) { return std::log(x); }
inline cdouble exp(const cdouble& x) { return std::exp(x); }
inline cdouble sqrt(const cdouble& x) { return std::sqrt(x); }
inline cdouble pow_real(const cdouble& x, double p) { return std::pow(x, p); }

} // namespace hartogs
