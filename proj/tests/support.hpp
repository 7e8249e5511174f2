#pragma once

#include <gmpxx.h>

#include <string>

#include "akp/akp.hpp"

namespace akp::test {

using QP = PadicRationals;
using FT = RationalFunctions;
using PolyQ = Poly<QP>;
using PolyT = Poly<FT>;

inline Value val(long n, long d = 1) { return Value(mpq_class(n, d)); }

inline PolyQ pq(const std::string& s, std::uint32_t p = 2) { return parse_poly(QP(p), s); }
inline PolyT pt(const std::string& s, std::uint32_t p = 2) { return parse_poly(FT(p), s); }

/// Gauss valuation of (Q, v_2) with x -> 1/2.
inline ValuationChain<QP> mu1() { return ValuationChain<QP>::gauss(QP(2), val(1, 2)); }

/// mu1 augmented by x^2+2 -> 2.
inline ValuationChain<QP> mu2() { return augment(mu1(), pq("x^2+2"), val(2)); }

/// mu2 augmented by the equal-degree key x^2+6 -> 3.
inline ValuationChain<QP> mu3() { return augment(mu2(), pq("x^2+6"), val(3)); }

/// Gauss valuation of (F_2(t), v_t) with x -> 1/2.
inline ValuationChain<FT> nu1() { return ValuationChain<FT>::gauss(FT(2), val(1, 2)); }

/// nu1 augmented by x^2+t -> 3/2.
inline ValuationChain<FT> nu2() { return augment(nu1(), pt("x^2+t"), val(3, 2)); }

}  // namespace akp::test
