#pragma once

#include "kostant/qpoly.hpp"

namespace kostant {

/// q-analog of the A2 partition function on n*a1 + m*a2:
/// q^max(n,m) + ... + q^(n+m).
QPolynomial a2_qformula(long n, long m);

/// q-analog of the A3 partition function on m*a1 + n*a2 + k*a3, evaluated
/// as the explicit triple sum.
QPolynomial a3_qformula(long m, long n, long k);

/// q-analog on the interval root a_i + ... + a_j: q(1+q)^(j-i).
QPolynomial chain_qformula(int i, int j);

/// q-analog on x*a1 + y*a2 + a3 + ... + a_ell in B_r (r >= ell):
/// q(1+q)^(ell-3) [<x-1,y-1> + <x,y-1> + <x,y>] where <n,m> is the A2
/// formula.
QPolynomial headed_chain_qformula(long x, long y, int ell);

/// Checks sum_{m=0}^{floor(r/2)} (-1)^m C(r-m,m) q^(1+m) (1+q)^(r-2m)
/// == q + q^2 + ... + q^(r+1).
bool alt_binomial_identity_check(int r);

}  // namespace kostant
