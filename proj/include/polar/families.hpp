#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/varieties.hpp"

namespace polar {

// Two quadrics F_u = sum_j c_{u,j} X_j^2 - c_u whose generic polar variety for
// the (n-2) x n matrix a is singular at the witness point xi.
struct Family31Instance {
  int n;
  ConstMatrix c;  // 2 x n
  ConstMatrix a;  // (n-2) x n
  Fq c1, c2;
  Polynomial F1, F2;
  Point xi;
  int redraws;
};

// Throws PreconditionError for n < 6 or characteristic 2, BudgetExceeded when
// `max_redraws` draws all fail the genericity checks.
Family31Instance build_family_31(int n, std::uint64_t seed, const PrimeField& field = PrimeField(),
                                 int max_redraws = 50);

// [J(F1, F2); a], the n x n matrix N*.
PolyMatrix family31_matrix(const Family31Instance& inst);

struct WitnessReport {
  bool det_vanishes = false;          // (a)
  bool gradient_vanishes = false;     // (b)
  bool identity_holds = false;        // (c) d/dX_j det N* = 2 (c_{1,j} m_{1,j} + c_{2,j} m_{2,j})
  bool swapped_identity_holds = false;    // 2 (c_{2,j} m_{1,j} + c_{1,j} m_{2,j}) symbolically
  bool swapped_identity_at_xi = false;    // the same pairing evaluated at xi
  int rank_with_det = -1;             // rank J(F1, F2, det N*)(xi)
  int rank_without_det = -1;          // rank J(F1, F2)(xi)
  bool rank_ok = false;               // (d) both ranks equal 2
  std::size_t singular_generators = 0;
  bool singular_generators_vanish = false;  // (e)
  int polar_dim = -2;                 // dimension of V(F1, F2, det N*); n - 3 expected
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

WitnessReport verify_singular_witness(const Family31Instance& inst, const GroebnerBudget& budget = {});

// Example 1: A(z) = blockdiag(I_{p-1}, Z(z)) with Z lower unipotent of size
// n-p+1; z lists Z_{r,t} (p <= t < r <= n) row by row. B is rows p+i..n of A^{-1}.
struct MeagerMatrixZ {
  int n, p, i;
  Point z;
  ConstMatrix A;
  ConstMatrix B;
};

int example1_parameter_count(int n, int p);
MeagerMatrixZ example1_transform(int n, int p, int i, const Point& z, const PrimeField& field = PrimeField());

// The same construction over F_q[Z_{r,t}], for symbolic identity checks. The
// parameters are the ring variables in the order used by example1_transform.
struct SymbolicExample1 {
  PolyMatrix A;
  PolyMatrix B;
};
SymbolicExample1 example1_symbolic(int n, int p, int i, const PrimeField& field = PrimeField());

// Example 2: rows [O I_{n-p-i} O] over the row (gamma_1..gamma_{n-i}, z), as an
// augmented dual matrix with column 0 = (0, ..., 0, 1).
ConstMatrix example2_matrix(int n, int p, int i, const Point& gamma, const Point& z,
                            const PrimeField& field = PrimeField());

// det of the leading (p-1) x (p-1) block of J(F); 1 when p = 1.
Polynomial leading_jacobian_minor(std::span<const Polynomial> system);

// det J(F) restricted to columns 1..p-1 and n-i: the cofactor of the entry
// Z_j - X_j in the minors that cut out level i of the Example 2 chain.
Polynomial chain_cofactor_minor(std::span<const Polynomial> system, int i);

// Level i is localized at leading_jacobian_minor * chain_cofactor_minor(i).
struct ChainLevel {
  int i = 0;
  int dim = -1;  // of the localized dual polar variety
  std::uint64_t degree = 0;
  int singular_dim = -1;
  bool contains_next = true;  // level i+1 ideal contains this level's generators
  bool transversal = false;    // F and the i column minors define the same localized ideal
};

struct ChainReport {
  int n = 0, p = 0;
  std::vector<ChainLevel> levels;
  bool dims_descend = false;   // nonempty levels have dim n-p-i
  bool all_smooth = false;
  bool degree_bound_ok = false;
  bool inclusions_ok = false;
  bool passed() const { return dims_descend && all_smooth && degree_bound_ok && inclusions_ok; }
};

ChainReport example2_chain(std::span<const Polynomial> system, const Point& gamma, std::uint64_t seed,
                           const SingularLocusOptions& options = {});

// d^n p^(n-p) with d the largest degree in the system; saturates at 2^64 - 1.
std::uint64_t bezout_polar_bound(std::span<const Polynomial> system);

struct DegreeComparison {
  int i = 0;
  std::vector<std::uint64_t> random_classic, random_dual;
  std::vector<std::uint64_t> meager_classic;  // Example 1 draws
  std::vector<std::uint64_t> meager_dual;     // Example 2 draws
  std::vector<std::uint64_t> unlocalized_random_classic, unlocalized_meager_classic;
  bool random_agree = false;
  bool dominated = false;
  bool bound_ok = false;
  bool passed() const { return random_agree && dominated && bound_ok; }
};

// Degrees are those of the polar varieties localized at leading_jacobian_minor.
DegreeComparison degree_domination_check(std::span<const Polynomial> system, int i, int trials,
                                         std::uint64_t seed, const GroebnerBudget& budget = {});

}  // namespace polar
