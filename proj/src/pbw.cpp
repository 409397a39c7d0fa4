#include "yangsym/pbw.hpp"

#include <sstream>
#include <stdexcept>

namespace yangsym {

// ---- Word -----------------------------------------------------------------

void Word::push_back(GenId g) {
  if (size_ == kCapacity) throw std::length_error("Word: capacity exceeded");
  g_[size_++] = g;
}

bool Word::is_sorted() const { return std::is_sorted(begin(), end()); }

std::size_t Word::hash() const {
  std::size_t h = size_;
  for (GenId g : *this) h = h * 1099511628211ULL + g + 1;
  return h;
}

// ---- GeneratorSet -----------------------------------------------------------

GeneratorSet GeneratorSet::yangian(int n, int max_level) {
  if (n < 1 || max_level < 1) throw std::invalid_argument("yangian: need n >= 1 and L >= 1");
  if (n * n * max_level > 255) throw std::invalid_argument("yangian: too many generators");
  GeneratorSet s;
  s.kind_ = AlgebraKind::Yangian;
  s.n_ = n;
  s.max_level_ = max_level;
  for (int r = 1; r <= max_level; ++r)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        s.lookup_.push_back(static_cast<int>(s.gens_.size()));
        s.gens_.push_back({AlgebraKind::Yangian, i, j, r});
      }
  return s;
}

GeneratorSet GeneratorSet::gl(int n) {
  if (n < 1 || n > 15) throw std::invalid_argument("gl: need 1 <= n <= 15");
  GeneratorSet s;
  s.kind_ = AlgebraKind::Gl;
  s.n_ = n;
  s.max_level_ = 1;
  s.lookup_.assign(static_cast<std::size_t>(n * n), -1);
  auto add_block = [&](auto pred) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (pred(i, j)) {
          s.lookup_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = static_cast<int>(s.gens_.size());
          s.gens_.push_back({AlgebraKind::Gl, i, j, 1});
        }
  };
  add_block([](int i, int j) { return i > j; });
  add_block([](int i, int j) { return i == j; });
  add_block([](int i, int j) { return i < j; });
  return s;
}

GenId GeneratorSet::id(int i, int j, int level) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("generator index out of range");
  if (kind_ == AlgebraKind::Gl) level = 1;
  if (level < 1 || level > max_level_) throw std::out_of_range("generator level out of range");
  return static_cast<GenId>(lookup_[static_cast<std::size_t>(((level - 1) * n_ + (i - 1)) * n_ + (j - 1))]);
}

std::string GeneratorSet::name(GenId id) const {
  const auto& g = gens_.at(id);
  std::ostringstream os;
  const char* sep = n_ > 9 ? "," : "";
  if (g.family == AlgebraKind::Gl) os << "e_" << g.i << sep << g.j;
  else os << "t_" << g.i << sep << g.j << "^(" << g.level << ")";
  return os.str();
}

int GeneratorSet::level(const Word& w) const {
  int total = 0;
  for (GenId g : w) total += gens_[g].level;
  return total;
}

// ---- FreeElement ------------------------------------------------------------

FreeElement FreeElement::word(const Word& w, const Rational& c) {
  FreeElement e;
  e.add(w, c);
  return e;
}

void FreeElement::add(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeElement FreeElement::operator-() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
  return r;
}

FreeElement operator*(FreeElement a, const Rational& q) {
  if (q.is_zero()) return {};
  for (auto& [w, c] : a.terms_) c *= q;
  return a;
}

// ---- RewriteSystem ----------------------------------------------------------

RewriteSystem::RewriteSystem(int generator_count)
    : count_(generator_count), table_(static_cast<std::size_t>(generator_count * generator_count)) {}

void RewriteSystem::set(GenId high, GenId low, Terms correction) {
  if (high <= low) throw std::invalid_argument("RewriteSystem: rule must straighten a descent");
  table_.at(static_cast<std::size_t>(high * count_ + low)) = std::move(correction);
}

const Terms* RewriteSystem::correction(GenId high, GenId low) const {
  const auto& slot = table_[static_cast<std::size_t>(high * count_ + low)];
  return slot ? &*slot : nullptr;
}

std::size_t RewriteSystem::rule_count() const {
  std::size_t c = 0;
  for (const auto& s : table_) c += s.has_value();
  return c;
}

// ---- Algebra ----------------------------------------------------------------

Algebra::Algebra(GeneratorSet gens, RewriteSystem rules, bool truncate)
    : gens_(std::move(gens)), rules_(std::move(rules)), truncate_(truncate) {}

AlgebraPtr Algebra::yangian(int n, int max_level) {
  return std::make_shared<const Algebra>(GeneratorSet::yangian(n, max_level), yangian_relations(n, max_level), true);
}

AlgebraPtr Algebra::gl(int n) {
  return std::make_shared<const Algebra>(GeneratorSet::gl(n), ugl_relations(n), false);
}

std::size_t Algebra::memo_size() const {
  std::lock_guard lock(memo_mutex_);
  return memo_.size();
}

std::shared_ptr<const Terms> Algebra::lookup(const Word& w) const {
  std::lock_guard lock(memo_mutex_);
  auto it = memo_.find(w);
  return it == memo_.end() ? nullptr : it->second;
}

std::shared_ptr<const Terms> Algebra::store(const Word& w, std::map<Word, Rational>&& acc) const {
  auto terms = std::make_shared<Terms>();
  terms->reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms->emplace_back(m, std::move(c));
  std::lock_guard lock(memo_mutex_);
  return memo_.emplace(w, std::move(terms)).first->second;
}

namespace {

void accumulate(std::map<Word, Rational>& acc, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.emplace(w, c);
  if (!inserted) it->second += c;
}

}  // namespace

// m is normal; returns NF(m g). The straightening step is
//   m0 x g = m0 (g x + corr(x, g)) = NF(m0 g) x + m0 corr(x, g).
std::shared_ptr<const Terms> Algebra::mul_normal_gen(const Word& m, GenId g) const {
  if (m.empty() || m.back() <= g) {
    Word w = m;
    w.push_back(g);
    return std::make_shared<const Terms>(Terms{{w, Rational(1)}});
  }
  Word key = m;
  key.push_back(g);
  if (auto hit = lookup(key)) return hit;

  const GenId x = m.back();
  const Word m0 = m.without_last();
  const Terms* corr = rules_.correction(x, g);
  if (!corr)
    throw std::out_of_range("normal_form: no straightening rule for " + gens_.name(x) + " " + gens_.name(g));

  std::map<Word, Rational> acc;
  const auto head = mul_normal_gen(m0, g);
  for (const auto& [w, c] : *head) {
    const auto tail = mul_normal_gen(w, x);
    for (const auto& [w2, c2] : *tail) accumulate(acc, w2, c * c2);
  }
  for (const auto& [cw, cc] : *corr) {
    const auto nf = normal_form(m0 + cw);
    for (const auto& [w2, c2] : *nf) accumulate(acc, w2, cc * c2);
  }
  return store(key, std::move(acc));
}

std::shared_ptr<const Terms> Algebra::normal_form(const Word& w) const {
  if (w.is_sorted()) return std::make_shared<const Terms>(Terms{{w, Rational(1)}});
  if (auto hit = lookup(w)) return hit;
  std::map<Word, Rational> acc;
  const auto prefix = normal_form(w.without_last());
  for (const auto& [m, c] : *prefix) {
    const auto prod = mul_normal_gen(m, w.back());
    for (const auto& [m2, c2] : *prod) accumulate(acc, m2, c * c2);
  }
  return store(w, std::move(acc));
}

Terms Algebra::rewrite_at(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size() || w[pos] <= w[pos + 1]) throw std::invalid_argument("rewrite_at: not a descent");
  const Terms* corr = rules_.correction(w[pos], w[pos + 1]);
  if (!corr) throw std::out_of_range("rewrite_at: no rule for this pair");
  Word prefix, suffix;
  for (std::size_t t = 0; t < pos; ++t) prefix.push_back(w[t]);
  for (std::size_t t = pos + 2; t < w.size(); ++t) suffix.push_back(w[t]);
  std::map<Word, Rational> acc;
  accumulate(acc, prefix + Word{w[pos + 1], w[pos]} + suffix, Rational(1));
  for (const auto& [cw, cc] : *corr) accumulate(acc, prefix + cw + suffix, cc);
  Terms out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, c);
  return out;
}

std::string Algebra::word_name(const Word& w) const {
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += "*";
    s += gens_.name(w[t]);
  }
  return s;
}

// ---- AlgebraElement ---------------------------------------------------------

AlgebraElement AlgebraElement::generator(AlgebraPtr alg, GenId id) {
  AlgebraElement e;
  e.alg_ = std::move(alg);
  e.terms_.emplace(Word{id}, Rational(1));
  return e;
}

AlgebraElement AlgebraElement::from_word(AlgebraPtr alg, const Word& w, const Rational& c) {
  AlgebraElement e;
  e.alg_ = alg;
  if (c.is_zero()) return e;
  const auto nf = alg->normal_form(w);
  for (const auto& [m, mc] : *nf) e.add(m, c * mc);
  return e;
}

std::optional<Rational> AlgebraElement::scalar() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

Rational AlgebraElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int AlgebraElement::max_level() const {
  int best = 0;
  for (const auto& [w, c] : terms_) best = std::max(best, alg_ ? alg_->generators().level(w) : 0);
  return best;
}

namespace {
std::atomic<std::uint64_t> g_total_dropped{0};
}  // namespace

std::uint64_t total_dropped_monomials() { return g_total_dropped.load(); }

void Algebra::note_dropped(std::uint64_t count, int min_level) const {
  dropped_ += count;
  g_total_dropped += count;
  int cur = min_dropped_.load();
  while (min_level < cur && !min_dropped_.compare_exchange_weak(cur, min_level)) {
  }
}

AlgebraElement AlgebraElement::in_algebra(AlgebraPtr target) const {
  if (!target) throw std::invalid_argument("in_algebra: no target algebra");
  if (alg_ && (alg_->kind() != target->kind() || alg_->n() != target->n()))
    throw std::invalid_argument("in_algebra: incompatible generator numbering");
  if (alg_ && target->kind() == AlgebraKind::Yangian && target->generators().max_level() < max_level())
    throw std::invalid_argument("in_algebra: target truncation is below the element's level");
  AlgebraElement r = *this;
  r.alg_ = std::move(target);
  return r;
}

void AlgebraElement::adopt(const AlgebraPtr& other) {
  if (!other) return;
  if (!alg_) alg_ = other;
  else if (alg_ != other) throw std::invalid_argument("AlgebraElement: algebra instance mismatch");
}

void AlgebraElement::add(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  adopt(o.alg_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  adopt(o.alg_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r;
  r.alg_ = alg_;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  r.alg_ = a.alg_;
  r.adopt(b.alg_);
  const Algebra* alg = r.alg_.get();
  const int cap = alg ? alg->truncation() : 0;
  std::uint64_t dropped = 0;
  int min_drop = INT_MAX;
  std::map<Word, Rational> acc;
  for (const auto& [wa, ca] : a.terms_) {
    const int la = alg ? alg->generators().level(wa) : 0;
    for (const auto& [wb, cb] : b.terms_) {
      const Rational c = ca * cb;
      if (wa.empty() || wb.empty()) {
        accumulate(acc, wa + wb, c);
        continue;
      }
      if (cap > 0 && la + alg->generators().level(wb) > cap) {
        ++dropped;
        min_drop = std::min(min_drop, la + alg->generators().level(wb));
        continue;
      }
      const auto nf = alg->normal_form(wa + wb);
      for (const auto& [m, mc] : *nf) accumulate(acc, m, c * mc);
    }
  }
  if (dropped) alg->note_dropped(dropped, min_drop);
  for (auto& [w, c] : acc)
    if (!c.is_zero()) r.terms_.emplace(w, std::move(c));
  return r;
}

AlgebraElement operator*(AlgebraElement a, const Rational& q) {
  if (q.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [w, c] : a.terms_) c *= q;
  return a;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        s += "-";
        mag = -c;
      }
    } else {
      s += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    if (w.empty()) {
      s += mag.str();
      continue;
    }
    if (!mag.is_one()) s += mag.str() + "*";
    s += alg_->word_name(w);
  }
  return s;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) { return x * y - y * x; }

}  // namespace yangsym
