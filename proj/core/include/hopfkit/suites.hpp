#pragma once

// Named end-to-end checks over the catalog, plus the random crossed-coproduct
// data used by the fuzz suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopfkit/catalog.hpp"

namespace hopfkit {

struct SuiteAssertion {
  std::string id;
  /// Short statement of the property being checked.
  std::string anchor;
  bool passed = false;
  std::string witness;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<SuiteAssertion> assertions;
  double seconds = 0;

  bool passed() const;
  std::string to_text() const;
};

/// sweedler-z2, cyclic-m, thm33, crossed-char3, iso-ad, axioms-fuzz, hopf-axioms, rigidity, oracles.
const std::vector<std::string>& suite_names();
/// Throws Error listing the known suites for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0);

struct CrossedInstance {
  SigmaCocycle sigma;
  TauCocycle tau;
  std::string description;
};

/// sigma_x = alpha^{psi(x)} for a G-invariant bicharacter alpha with alpha^2 = 1 and
/// psi : G -> Z_2, then twisted by random nu_x : L -> k^x:
/// sigma_x *= d(nu_x), tau_{x,y}(l) = nu_{xy}(l) / (nu_x(l) nu_y(x^-1 . l)).
/// |L| <= 8, |G| <= 4.
CrossedInstance random_crossed_instance(std::mt19937_64& rng);

/// Direct sum of U_x (x) k p_x over a few x, each U_x regular or a cyclic
/// quotient of the block algebra; dimension at most `max_dim`.
AlgModule random_graded_module(const AlgebraPtr& k, std::mt19937_64& rng, std::size_t max_dim = 12);

}  // namespace hopfkit
