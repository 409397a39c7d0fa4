#include <set>

#include "yangsym/pbw.hpp"

namespace yangsym {

namespace {

using Form = std::map<Word, Rational>;
using Memo = std::map<Word, std::vector<Form>>;

Form add_scaled(Form acc, const Form& x, const Rational& c) {
  for (const auto& [w, v] : x) {
    auto& dst = acc[w];
    dst += c * v;
    if (dst.is_zero()) acc.erase(w);
  }
  return acc;
}

// Every normal form reachable by some sequence of single rewrites; alternatives
// per word are capped to keep the search finite on diverging systems.
std::vector<Form> reachable(const Algebra& alg, const Word& w, Memo& memo) {
  if (w.is_sorted()) return {Form{{w, Rational(1)}}};
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::set<Form> found;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    if (w[pos] <= w[pos + 1]) continue;
    std::vector<Form> partial{Form{}};
    for (const auto& [word, c] : alg.rewrite_at(w, pos)) {
      std::vector<Form> next;
      for (const auto& acc : partial)
        for (const auto& r : reachable(alg, word, memo)) next.push_back(add_scaled(acc, r, c));
      partial = std::move(next);
      if (partial.size() > 64) partial.resize(64);
    }
    found.insert(partial.begin(), partial.end());
  }
  return memo[w] = std::vector<Form>(found.begin(), found.end());
}

}  // namespace

ConfluenceResult check_confluence(const AlgebraPtr& alg, int max_len, int max_level) {
  ConfluenceResult result;
  const auto& g = alg->generators();
  Memo memo;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int id = 0; id < g.size(); ++id) {
        Word x = w;
        x.push_back(static_cast<GenId>(id));
        if (g.kind() == AlgebraKind::Yangian && g.level(x) > max_level) continue;
        next.push_back(x);
        ++result.words;
        const auto forms = reachable(*alg, x, memo);
        if (forms.size() != 1 || forms.front() != AlgebraElement::from_word(alg, x).terms()) {
          result.failure = x;
          return result;
        }
      }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace yangsym
