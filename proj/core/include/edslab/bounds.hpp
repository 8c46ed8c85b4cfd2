#pragma once

#include <string>
#include <vector>

#include "edslab/bigfloat.hpp"

namespace edslab {

struct BoundInputs {
  BigFloat h_P;        // canonical height of P'
  BigFloat h_sigmaP;   // canonical height of sigma(P')
  BigFloat hE;         // h(E), codomain
  BigFloat hEprime;    // h(E'), domain
  long d = 1;          // deg sigma
  BigFloat eps;
  BigFloat M, Mprime;
  BigFloat S_sigma;
  BigFloat C_sigma;

  explicit BoundInputs(long prec = kDefaultPrecision);
};

enum class BoundMeaning { IndexExceedingImpliesNewPrime, IndexExceedingImpliesTwoNewPrimes, UpperBoundOnIndex };
const char* meaning_name(BoundMeaning m);

struct Branch {
  std::string label;
  BigFloat value;
};

struct BoundReport {
  std::string name;
  BigFloat value;
  BoundMeaning meaning = BoundMeaning::UpperBoundOnIndex;
  std::vector<Branch> branches;
};

// max{A(2d log 2d + 2 log A)^d, a/A + sqrt b}.
BigFloat solve_n2_log(const BigFloat& a, const BigFloat& b, long d, const BigFloat& A);

struct SiegelBounds {
  BigFloat bound1;  // new prime in B_{nP'}
  BigFloat bound2;  // new prime in B_{n sigma(P')}
};
// Throws HypothesisViolated unless d(1 - eps) > 1.
SiegelBounds siegel_bounds(const BoundInputs& in);

// c1 (b_n + log 3 + 1)^6 + c2 with b_n = max{log 2n, 2h(P), 12e h(E) + 5e log 6}.
BigFloat david_arch_bound(const BigFloat& hE, const BigFloat& hP, long n);

struct NonuniformBounds {
  BoundReport first;
  BoundReport second;
};
NonuniformBounds nonuniform_bounds(const BoundInputs& in);

// max{1, (20S)^8 10^{4S}}.
BigFloat szpiro_constant(const BigFloat& S);

struct Theorem12Bounds {
  BoundReport composite;
  BoundReport N1;
  BoundReport N3;
};
Theorem12Bounds theorem12_bounds(const BigFloat& C, const BigFloat& h_sigmaP);

BoundReport bounded_component_bounds(const BigFloat& h_P, const BigFloat& hEprime);
// Degree threshold: the larger branch, squared.
BoundReport doubly_magnified_degree_bounds(const BigFloat& h_P, const BigFloat& hE0);
// 7h(E') + 8 + log deg.
BigFloat magnified_siegel_bound(const BigFloat& hEprime, long deg_st);

struct GapReport {
  BigFloat bound_caseA;
  BigFloat bound_caseB;
  BigFloat threshold;
  bool hypotheses_ok = false;
  std::string detail;
};
GapReport gap_principle(long n1, long n2, long n3, const BoundInputs& in);

// max{8, 2/h(P') + sqrt(3 + max{5h(E')/h(P'), 9h(E)/h(P)} + 7/h(P'))}.
BigFloat lll_gap_threshold(const BoundInputs& in);

}  // namespace edslab
