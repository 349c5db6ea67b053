#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qcff/bigint.hpp"
#include "qcff/cyclotomic.hpp"
#include "qcff/field.hpp"
#include "qcff/poly.hpp"

namespace qcff {

/// The prime pairs (P_i, Q_i), P_i < Q_i, whose u-elements multiply to u.
/// Primes are referred to by their index in the conductor.
struct PairSet {
  struct Pair {
    std::size_t first;
    std::size_t second;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  std::vector<Pair> pairs;
  /// firsts[L] = indices Q with (L, Q) a pair.
  std::vector<std::vector<std::size_t>> firsts;
  /// seconds[L] = indices P with (P, L) a pair.
  std::vector<std::vector<std::size_t>> seconds;

  bool is_paired(std::size_t idx) const noexcept {
    return !firsts[idx].empty() || !seconds[idx].empty();
  }
};

/// Validates raw (P, Q) pairs against the conductor. Orientation is checked,
/// never corrected.
PairSet pairset_create(const FieldCtx& ctx, const Conductor& c,
                       const std::vector<std::pair<Poly, Poly>>& raw);

/// A nonzero class [num/den] in k/A, reduced: gcd(num, den) = 1,
/// deg num < deg den, den monic.
struct FracClass {
  Poly num;
  Poly den;
  friend bool operator==(const FracClass&, const FracClass&) = default;
};

struct FracClassLess {
  bool operator()(const FracClass& a, const FracClass& b) const noexcept {
    if (auto c = poly_cmp(a.den, b.den); c != 0) return c < 0;
    return poly_cmp(a.num, b.num) < 0;
  }
};

/// Canonical representative of (num/den) mod A; nullopt when it lies in A.
std::optional<FracClass> reduce_class(const FieldCtx& ctx, const Poly& num, const Poly& den);

/// An element of the free abelian group on the classes [A], A in k/A.
struct FormalSum {
  std::map<FracClass, std::int64_t, FracClassLess> terms;
  /// Number of (A, B, s, sign) terms visited before reduction and merging.
  BigInt raw_terms;
};

/// (q - 2) * #{A monic, deg A < d_Q} * #{B monic, deg B < d_P} * 2.
BigInt a_pq_raw_term_count(const FieldCtx& ctx, int deg_p, int deg_q);

/// The formal sum
///   a_PQ = sum_{A,B monic, deg A < deg Q, deg B < deg P} sum_{s=1}^{q-2}
///          s ( [(BQ + gamma^{-s} A)/(PQ)] - [(AP + gamma^{-s} B)/(PQ)] ).
/// Requires distinct monic primes with P < Q (BadPair).
FormalSum a_pq_formal(const FieldCtx& ctx, const Poly& p, const Poly& q);

/// Which square-root factor multiplies sin a_PQ in u_PQ.
enum class ParityCase { Even_Even, Even_Odd, Odd_Even, Odd_Odd };
std::string_view to_string(ParityCase c) noexcept;
ParityCase parity_case(int deg_p, int deg_q) noexcept;

struct RamEntry {
  Poly prime;
  int degree = 0;
  std::uint32_t exp = 0;
  /// log_gamma (L / prod firsts(L)) and log_gamma (L / prod seconds(L)).
  std::uint32_t log_firsts = 0;
  std::uint32_t log_seconds = 0;
  /// v_L(u) mod w.
  std::uint32_t vbar = 0;
  /// Ramification index of L in K~/K: w / gcd(w, vbar).
  std::uint32_t e = 1;
};

struct RamTable {
  /// One entry per conductor prime, conductor order.
  std::vector<RamEntry> entries;
  /// Parity case of each pair, pair order.
  std::vector<ParityCase> pair_parity;
};

RamTable ramification_table(const FieldCtx& ctx, const Conductor& c, const PairSet& ps,
                            bool validate_prime = false);

/// Direct single-pair indices e_P = w/(w, log(P/Q)), e_Q = w/(w, log(Q/P)).
std::pair<std::uint32_t, std::uint32_t> single_pair_ramification(const FieldCtx& ctx,
                                                                 const Poly& p, const Poly& q);

struct ParityReport {
  /// d_P d_Q even, so e_P = e_Q is claimed.
  bool applicable = false;
  bool pass = true;
  int deg_p = 0;
  int deg_q = 0;
  std::uint32_t e_p = 1;
  std::uint32_t e_q = 1;
};

/// Checks e_P = e_Q whenever 2 | d_P d_Q. Single-pair sets only.
ParityReport parity_consistency(const FieldCtx& ctx, const PairSet& ps, const RamTable& rt);

struct Generator {
  std::size_t prime_index = 0;
  Poly prime;
  /// ord(sigma_L) = |L| - 1
  BigInt base_order;
  /// ord(sigma~_L) = e(L) ord(sigma_L)
  BigInt lift_order;
  std::uint32_t e = 1;
  bool paired = false;
  bool central = true;
};

/// sigma~_left sigma~_right = sigma~_right sigma~_left epsilon^{epsilon_exponent}
struct Relation {
  std::size_t left = 0;
  std::size_t right = 0;
  int epsilon_exponent = -1;
};

/// Gal(K~/k) = G~^(p) x <sigma~_P1, ..., sigma~_Pn, epsilon>.
struct GroupPresentation {
  std::uint32_t epsilon_order = 0;
  bool epsilon_central = true;
  BigInt p_part_order;
  bool p_part_central = true;
  std::vector<Generator> generators;
  /// One commutator relation per pair; all other generator pairs commute.
  std::vector<Relation> relations;
  /// w Phi(M)
  BigInt group_order;
};

GroupPresentation presentation(const FieldCtx& ctx, const Conductor& c, const PairSet& ps,
                               const RamTable& rt);
GroupPresentation presentation(const FieldCtx& ctx, const Conductor& c, const PairSet& ps);

/// Genus of K~ by Hasse's Kummer formula with constant field F_q and
/// unramified infinite places:
///   g~ = 1 + w [g_K - 1 + 1/2 sum_L (1 - 1/e(L)) d_L Phi(M/L^{r_L})],
/// L over the distinct primes occurring in some pair.
BigInt genus_quasi(const FieldCtx& ctx, const Conductor& c, const PairSet& ps, const BigInt& g_k,
                   const RamTable& rt);

/// Genus of K~ by Riemann-Hurwitz on the tame step K~/K:
///   2g~ - 2 = w (2 g_K - 2) + sum_L (e(L) - 1)(w / e(L)) d_L f_L g_L.
BigInt genus_quasi_assembly(const FieldCtx& ctx, const Conductor& c, const BigInt& g_k,
                            const RamTable& rt);

}  // namespace qcff
