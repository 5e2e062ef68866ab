#pragma once

#include "dirac/dirac.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace dirac {

/// Character C_{a,b} of SO(2) x SO(2): (h,0) acts by a, (0,h) by b.
struct CharacterLabel {
  int a = 0;
  int b = 0;
  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
};

/// Summand C_{-a,-b} (x) C_{a,b} (x) s (x) S_{q_l'} (x) E_{-a-b} of the
/// sections over L cap K; spin_ls is "1" or "u".
struct PeterWeylBlock {
  CharacterLabel left;
  CharacterLabel right;
  std::string spin_ls;
  int e_weight = 0;
};

/// Block with right label (a, b); E-weight -a-b.
PeterWeylBlock make_block(int a, int b, std::string spin_ls);

enum class GPrimeKind { ds_plus, ds_minus, limit_ds_minus, trivial };

/// Representation of L = G' x K' : a G'-part and a K'-character.
struct LRepLabel {
  GPrimeKind kind;
  std::optional<int> n;
  int kprime = 0;
  friend bool operator==(const LRepLabel&, const LRepLabel&) = default;
};
std::string to_string(const LRepLabel& r);

/// The sl(2) pair (g', k') with s' spanned by et, ft and its spin module
/// with basis {1, e}: e wedges, f contracts.
class Sl2Pair {
 public:
  Sl2Pair();
  const LieAlgebra& g() const { return g_; }
  const Frame& s_frame() const { return s_frame_; }
  const SpinModule& spin() const { return spin_; }
  /// k'-weights of the spin basis, read off gamma(alpha(h)).
  const std::vector<int>& spin_weights() const { return spin_weights_; }
  /// e (x) gamma(f) + f (x) gamma(e) as the orthonormal-basis sum over et, ft.
  Matrix dirac(const WeightModule& m) const;

 private:
  LieAlgebra g_;
  Frame s_frame_;
  SpinModule spin_;
  std::vector<int> spin_weights_;
};

/// The operator on M (x) S_{s'} written three ways: e (x) gamma(f) + f (x) gamma(e)
/// over the dual bases (e, f) and (f, e), over the frame (et, ft), and over
/// the frame rotated by (3/5, 4/5).
std::vector<Matrix> dirac_presentations(const Sl2Pair& p, const WeightModule& m);

/// Eigenvalue of -Z (x) gamma(Z) on a block: (Z on C_{a,b}) times (Z on S_{q_l'}).
/// Throws std::invalid_argument if -a-b is not a weight of E.
ExactScalar block_eigenvalue(const TransitiveTriple& t, const PeterWeylBlock& blk, const WeightModule& e);
/// Z = (i/2)(h,-h) and W = (i/2)(h,h) on C_{a,b}, from their coordinates.
ExactScalar z_character(const TransitiveTriple& t, const CharacterLabel& c);
ExactScalar w_character(const TransitiveTriple& t, const CharacterLabel& c);

/// gamma(2 Z T1 T2) on S_{q_l}; throws std::logic_error if it is not scalar.
ExactScalar cubic_scalar(const TransitiveTriple& t);

struct Corollary62Result {
  std::vector<PeterWeylBlock> blocks;  // admissible blocks with a - b = -2
  bool all_cancel = false;             // eigenvalue + cubic scalar = 0 on each
  bool even_weights = false;
  bool consistent() const { return all_cancel && (!blocks.empty() == even_weights); }
};
Corollary62Result corollary62_check(const TransitiveTriple& t, const WeightModule& e);

/// Kernel basis vector of e (x) gamma(f) + f (x) gamma(e), by total k'-weight.
struct KernelVector {
  int total_weight = 0;
  /// Support as (module basis index, spin basis index) pairs.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> support;
  Vector coefficients;
};

struct KernelResult {
  std::vector<KernelVector> certified;
  std::vector<KernelVector> truncation_artifacts;
};

/// Exact kernel on M (x) S_{s'}. Kernel vectors supported on level N of a
/// truncated module are set aside as truncation artifacts; with strict set,
/// any such vector raises std::runtime_error("truncation artifact ...").
KernelResult ds_dirac_kernel(const Sl2Pair& p, const WeightModule& m, bool strict = false);

/// (E-weight, spin label) pairs spanning the kernel for E = sl2_irrep(2m);
/// every kernel vector must be a pure tensor of basis vectors.
std::vector<std::pair<int, std::string>> kernel_dh(const Sl2Pair& p, const WeightModule& e);

/// The two blocks u (x) C_{-m-1,-m+1} (x) E_{2m} and 1 (x) C_{m-1,m+1} (x) E_{-2m}.
std::pair<PeterWeylBlock, PeterWeylBlock> corollary63_subspace(int m);

struct Corollary63Result {
  std::pair<PeterWeylBlock, PeterWeylBlock> blocks;
  bool middle_vanishes = false;  // a - b = -2 on both
  bool kernel_pairs = false;     // (2m, e) <-> u and (-2m, 1) <-> 1
};
Corollary63Result corollary63_check(const TransitiveTriple& t, const Sl2Pair& p, int m);

/// Kernels of truncated highest/lowest weight modules, computed once per
/// (kind, weight, truncation). Lowest weight 0 stands for the trivial module.
class KernelCache {
 public:
  explicit KernelCache(const Sl2Pair& p) : p_(p) {}
  const KernelResult& highest(int nu, int truncation);
  const KernelResult& lowest(int mu, int truncation);

 private:
  const Sl2Pair& p_;
  std::map<std::tuple<int, int, int>, KernelResult> cache_;
};

/// One row of the table with the kernel scans backing it.
struct TableRow {
  LRepLabel label;
  int target_weight = 0;
  std::string spin_part;
  std::vector<std::string> matches;  // candidate modules whose kernel hits the target
};

/// Labels of L-representations for E of highest weight 2m, derived from
/// kernel scans over highest-weight modules (e-part) and lowest-weight
/// modules plus the trivial one (1-part).
std::vector<TableRow> theorem64_table(const Sl2Pair& p, int m, int truncation = 40, KernelCache* cache = nullptr);

/// Highest weights nu in [lo, hi] whose module has an e-part kernel of total weight target.
std::vector<int> highest_weight_scan(const Sl2Pair& p, int target, int lo, int hi, int truncation = 40,
                                     KernelCache* cache = nullptr);
/// Lowest weights mu in [lo, hi] (mu = 0 meaning the trivial module) whose
/// module has a 1-part kernel of total weight target.
std::vector<int> lowest_weight_scan(const Sl2Pair& p, int target, int lo, int hi, int truncation = 40,
                                     KernelCache* cache = nullptr);

}  // namespace dirac
