#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cqopt/gsl.hpp"
#include "cqopt/linalg.hpp"
#include "cqopt/oracle.hpp"
#include "cqopt/prng.hpp"

namespace cqopt {

struct OutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegreeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModpFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSuitablePrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WitnessNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Basis of the saturated integer nullspace of A (rows are the learned
// subspace's difference vectors, entries in {-1,0,1}; arbitrary integers
// accepted).
MatZ integer_nullspace(const MatZ& a_rows, int n_cols);

// g(v) = (3nM)^s + sum_j (3nM)^{j-1} v_j. Subset sums of encodings agree iff
// subset sums of the vectors agree.
BigInt scalar_encode(const VecZ& v, const BigInt& n, const BigInt& m_bound, int s);

// Dynamic program over prefix value sets V_i = {w(S) : S subseteq [i]},
// stopping once |V_i| exceeds |Z|. Returns a subset whose column sum avoids
// Z, or nullopt when every achievable sum lies in Z.
std::optional<Set> separate_powerset(const std::vector<VecZ>& columns,
                                     const std::vector<VecZ>& z_values);

// Rank-k linear matroid given by a k x n rational representation.
struct LinearMatroid {
  MatR v;  // k rows, n columns
  int k() const { return static_cast<int>(v.size()); }
  int n() const { return v.empty() ? 0 : static_cast<int>(v[0].size()); }
  bool is_independent(const Set& s) const;
  bool is_basis(const Set& s) const;
  Rational basis_det(const Set& s) const;
  std::vector<Set> enumerate_bases() const;
};

// Vandermonde representation of the rank-k uniform matroid on n elements.
LinearMatroid uniform_matroid_rep(int n, int k);
// Two-part partition matroid with unit capacities (parts of size a and b).
LinearMatroid partition_matroid_rep(int a, int b);

// Exact coefficients of P(x) = det(sum_i x^{c_i} v_i v_i^T); the exponent
// support is exactly the set of basis costs and every coefficient is a
// positive sum of squared basis determinants.
std::map<BigInt, Rational> basis_cost_polynomial(const LinearMatroid& lm,
                                                 const std::vector<BigInt>& costs,
                                                 long degree_cap = 4096);

// Smallest basis cost outside Z, via the plain interpolated polynomial.
std::optional<BigInt> matroid_separate_plain(const LinearMatroid& lm,
                                             const std::vector<BigInt>& costs,
                                             const std::set<BigInt>& z,
                                             long degree_cap = 4096);

// Basis with cost exactly t, via deletion/contraction self-reduction on the
// plain polynomial. Throws WitnessNotFound if t is not a basis cost.
Set witness_basis(const LinearMatroid& lm, const std::vector<BigInt>& costs, const BigInt& t,
                  long degree_cap = 4096);

// Mod-p route: scans primes until the Z-residues are distinct and the
// remaindered polynomial Q(x) = P(x) mod (x^p - 1) has support escaping them;
// evaluates P at p-th roots of unity in a random 62-bit prime field, extracts
// a witness by residue self-reduction, and certifies it by exact
// recomputation. Certification failures retry with a fresh field.
std::optional<std::pair<BigInt, Set>> matroid_separate_modp(const LinearMatroid& lm,
                                                            const std::vector<BigInt>& costs,
                                                            const std::set<BigInt>& z, Prng& prng,
                                                            int retry_budget = 4);

// GSL separation backend for linear-matroid families: learns the orthogonal
// lattice, encodes its columns to scalars, and finds a basis whose encoded
// cost avoids every bucket representative's.
class LinearMatroidSeparator : public GslSeparator {
 public:
  // plain_cap bounds the polynomial degree handled by exact interpolation;
  // beyond it the mod-p route runs. Interpolation cost grows fast with the
  // degree, so the automatic choice stays small.
  LinearMatroidSeparator(const LinearMatroid& lm, uint64_t seed, long plain_cap = 48)
      : lm_(lm), prng_(seed), plain_cap_(plain_cap) {}
  std::optional<Set> next(const GslState& state) override;

  long plain_calls = 0;
  long modp_calls = 0;

 private:
  const LinearMatroid& lm_;
  Prng prng_;
  long plain_cap_;
};

// GSL separation backend for the full powerset, via the dynamic program.
class PowersetSeparator : public GslSeparator {
 public:
  std::optional<Set> next(const GslState& state) override;
};

}  // namespace cqopt
