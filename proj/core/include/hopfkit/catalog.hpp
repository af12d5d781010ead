#pragma once

// Ready-made groups, cocycles and coproducts used by the suites, the CLI and the tests.

#include "hopfkit/representations.hpp"

namespace hopfkit {

GroupPtr cyclic_product(const std::vector<std::uint32_t>& orders, const std::vector<std::string>& names = {});

/// a -> [[0,-1],[1,0]], b -> [[1,0],[0,-1]] on Z2 x Z2 = <a, b>.
std::vector<Matrix> klein_projective_rep(const FiniteGroup& v, FieldSpec f);

/// G = Z2 = <h> acting on L = Z2^2 x Z3^2 = <a,b,c,d> by swapping c and d,
/// sigma = (trivial, alpha) with alpha the Klein cocycle on <a,b>, tau trivial.
struct KleinCrossedData {
  FieldSpec field;
  GroupPtr g;
  GroupPtr l;
  GroupPtr v;  // <a,b>
  GroupAction action;
  CocycleSlice alpha;  // on L, trivial off <a,b>
  SigmaCocycle sigma;
  TauCocycle tau;
};
KleinCrossedData klein_crossed_data(FieldSpec f = FieldSpec::prime(3));

/// T_2^{(x) m} # k^{Z_m}, the generator moving factor k to factor k+1 (mod m).
struct ShiftSmash {
  AlgebraPtr base;   // T_2^{(x) m}
  AlgebraPtr taft;   // T_2
  GroupPtr g;        // Z_m
  AlgebraPtr k;
};
ShiftSmash shift_smash(std::uint32_t m, FieldSpec f = FieldSpec::rationals(), BuildOptions opts = {});

/// U_rho over k^alpha<a,b>, induced to k^alpha<a,b,c>, then inflated so that d
/// acts trivially: a module over the block K p_h of the crossed coproduct `k`.
AlgModule klein_module_u(const KleinCrossedData& d, const AlgebraPtr& k);

/// T_2^{(x) m} / (x_k, g_k - 1 : k >= 2), i.e. T_2 (x) k (x) ... (x) k.
AlgModule shift_module_u(const ShiftSmash& s);

}  // namespace hopfkit
