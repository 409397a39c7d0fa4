#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yangsym/ring.hpp"

namespace yangsym {

using GenId = std::uint8_t;

/// Short sequence of generator ids with inline storage.
class Word {
public:
  static constexpr std::size_t kCapacity = 15;

  Word() = default;
  Word(std::initializer_list<GenId> gens) {
    for (GenId g : gens) push_back(g);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  GenId operator[](std::size_t i) const { return g_[i]; }
  GenId back() const { return g_[size_ - 1]; }
  const GenId* begin() const { return g_.data(); }
  const GenId* end() const { return g_.data() + size_; }

  void push_back(GenId g);
  void pop_back() { --size_; }
  Word without_last() const {
    Word w = *this;
    w.pop_back();
    return w;
  }
  bool is_sorted() const;

  friend Word operator+(Word a, const Word& b) {
    for (GenId g : b) a.push_back(g);
    return a;
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend bool operator<(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t hash() const;

private:
  std::array<GenId, kCapacity> g_{};
  std::uint8_t size_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// Linear combination of words, sorted by word, no zero coefficients.
using Terms = std::vector<std::pair<Word, Rational>>;

enum class AlgebraKind { Yangian, Gl };

/// t_ij^{(level)} for the Yangian, e_ij (level 1) for gl_n. Indices 1-based.
struct GeneratorId {
  AlgebraKind family;
  int i;
  int j;
  int level;
};

/// Generator alphabet with its fixed total order (the order of ids).
/// Yangian: (level, i, j). gl_n: strictly lower, then diagonal, then strictly
/// upper, each block lexicographic in (i, j).
class GeneratorSet {
public:
  static GeneratorSet yangian(int n, int max_level);
  static GeneratorSet gl(int n);

  AlgebraKind kind() const { return kind_; }
  int n() const { return n_; }
  int max_level() const { return max_level_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorId& operator[](GenId id) const { return gens_.at(id); }

  /// Id of t_ij^{(level)} or e_ij (level ignored for gl).
  GenId id(int i, int j, int level = 1) const;
  std::string name(GenId id) const;
  int level(const Word& w) const;

private:
  AlgebraKind kind_ = AlgebraKind::Gl;
  int n_ = 0;
  int max_level_ = 1;
  std::vector<GeneratorId> gens_;
  std::vector<int> lookup_;  // (level-1, i-1, j-1) -> id
};

/// Element of the free associative algebra on a generator alphabet (words are
/// never reordered). Used to extract component relations.
class FreeElement {
public:
  FreeElement() = default;
  explicit FreeElement(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
  }
  static FreeElement word(const Word& w, const Rational& c = Rational(1));

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const Rational& c);

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  FreeElement operator-() const;
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator*(FreeElement a, const Rational& q);
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

private:
  std::map<Word, Rational> terms_;
};

inline std::optional<Rational> as_scalar(const FreeElement& x) {
  if (x.is_zero()) return Rational(0);
  if (x.terms().size() == 1 && x.terms().begin()->first.empty()) return x.terms().begin()->second;
  return std::nullopt;
}

/// Straightening rules  x_b x_a = x_a x_b + correction(b, a)  for ids b > a.
/// Entries may be absent (pairs outside a truncated table).
class RewriteSystem {
public:
  RewriteSystem() = default;
  explicit RewriteSystem(int generator_count);

  int generator_count() const { return count_; }
  void set(GenId high, GenId low, Terms correction);
  /// nullptr when the pair has no rule.
  const Terms* correction(GenId high, GenId low) const;
  std::size_t rule_count() const;

private:
  int count_ = 0;
  std::vector<std::optional<Terms>> table_;
};

/// Commutator [t_ij^{(r)}, t_kl^{(s)}] extracted from the RTT relation,
/// as an element of the free algebra on the Yangian generators of `gens`.
FreeElement yangian_commutator(const GeneratorSet& gens, int i, int j, int r, int k, int l, int s);

/// Coefficient of u^{-p} v^{-q} of
///   (u - v)(T_1(u)T_2(v) - T_2(v)T_1(u)) - P T_1(u)T_2(v) + T_2(v)T_1(u) P,
/// entry ((i,k),(j,l)), in the free algebra. It vanishes in Y(gl_n).
FreeElement rtt_coefficient(const GeneratorSet& gens, int i, int j, int k, int l, int p, int q);

/// Commutator table for all pairs t^{(r)}, t^{(s)} with r + s - 1 <= L.
RewriteSystem yangian_relations(int n, int max_level);
/// [e_ij, e_kl] = δ_jk e_il - δ_li e_kj in the gl_n order.
RewriteSystem ugl_relations(int n);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An algebra presented by a generator alphabet and straightening rules, with
/// memoized normal ordering. Immutable apart from its caches.
class Algebra {
public:
  /// Level-truncated Yangian: generators t_ij^{(r)}, 1 <= r <= L, products of
  /// total level above L are dropped.
  static AlgebraPtr yangian(int n, int max_level);
  static AlgebraPtr gl(int n);

  Algebra(GeneratorSet gens, RewriteSystem rules, bool truncate);

  AlgebraKind kind() const { return gens_.kind(); }
  int n() const { return gens_.n(); }
  /// Truncation level, or 0 when nothing is ever dropped.
  int truncation() const { return truncate_ ? gens_.max_level() : 0; }
  const GeneratorSet& generators() const { return gens_; }
  const RewriteSystem& relations() const { return rules_; }

  /// Exact normal form of a word (never truncated).
  std::shared_ptr<const Terms> normal_form(const Word& w) const;

  /// One rewrite of the descent at position pos (w[pos] > w[pos+1]); the
  /// returned words are not normalized.
  Terms rewrite_at(const Word& w, std::size_t pos) const;

  std::string word_name(const Word& w) const;

  // Instrumentation.
  std::uint64_t dropped_monomials() const { return dropped_.load(); }
  /// Smallest total level among dropped products (INT_MAX if none).
  int min_dropped_level() const { return min_dropped_.load(); }
  void note_dropped(std::uint64_t count, int min_level) const;
  std::size_t memo_size() const;

private:
  std::shared_ptr<const Terms> mul_normal_gen(const Word& m, GenId g) const;
  std::shared_ptr<const Terms> lookup(const Word& w) const;
  std::shared_ptr<const Terms> store(const Word& w, std::map<Word, Rational>&& acc) const;

  GeneratorSet gens_;
  RewriteSystem rules_;
  bool truncate_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, std::shared_ptr<const Terms>, WordHash> memo_;
  mutable std::atomic<std::uint64_t> dropped_{0};
  mutable std::atomic<int> min_dropped_{INT_MAX};
};

/// Normal-ordered element of an Algebra with exact rational coefficients.
/// Scalars need no algebra attached.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
  }
  AlgebraElement(AlgebraPtr alg, const Rational& c) : AlgebraElement(c) { alg_ = std::move(alg); }

  static AlgebraElement generator(AlgebraPtr alg, GenId id);
  /// Normal form of c·w.
  static AlgebraElement from_word(AlgebraPtr alg, const Word& w, const Rational& c = Rational(1));

  const AlgebraPtr& algebra() const { return alg_; }
  /// The same element viewed in another instance with identical generator
  /// numbering (same kind and n, truncation at least max_level()).
  AlgebraElement in_algebra(AlgebraPtr target) const;
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> scalar() const;
  Rational coeff(const Word& w) const;
  /// Largest total level among the monomials (0 for scalars).
  int max_level() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const Rational& q);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  std::string str() const;

private:
  void adopt(const AlgebraPtr& other);
  void add(const Word& w, const Rational& c);

  AlgebraPtr alg_;
  std::map<Word, Rational> terms_;
};

inline std::optional<Rational> as_scalar(const AlgebraElement& x) { return x.scalar(); }

/// xy - yx
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

/// Monomials dropped by truncation in any algebra instance of this process.
std::uint64_t total_dropped_monomials();

/// Exhaustive confluence search: for every word of at most max_len generators
/// and total level at most max_level, all rewrite orders must reach the
/// memoized normal form. Returns the number of words checked and the first
/// offending word.
struct ConfluenceResult {
  int words = 0;
  std::optional<Word> failure;
};
ConfluenceResult check_confluence(const AlgebraPtr& alg, int max_len, int max_level);

}  // namespace yangsym
