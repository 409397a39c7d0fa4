#include "yangsym/capelli.hpp"

#include <sstream>
#include <stdexcept>

namespace yangsym {

HighestWeight::HighestWeight(std::vector<int> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw std::invalid_argument("HighestWeight: empty weight");
  for (std::size_t i = 1; i < mu_.size(); ++i)
    if (mu_[i] > mu_[i - 1]) throw std::invalid_argument("HighestWeight: weight must be weakly decreasing");
}

HighestWeight HighestWeight::parse(const std::string& text) {
  std::vector<int> mu;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("HighestWeight: bad entry '" + item + "'");
    mu.push_back(v);
  }
  return HighestWeight(std::move(mu));
}

std::string HighestWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < mu_.size(); ++i) s += (i ? "," : "") + std::to_string(mu_[i]);
  return s + ")";
}

std::vector<HighestWeight> weight_grid(int n, int lo, int hi) {
  if (n < 1 || lo > hi) throw std::invalid_argument("weight_grid: empty range");
  std::vector<HighestWeight> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int top) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

// ---- ShiftedPolynomial ---------------------------------------------------

ShiftedPolynomial::ShiftedPolynomial(int n, const Rational& c) : n_(n) {
  if (n < 1) throw std::invalid_argument("ShiftedPolynomial: n must be positive");
  add(Exponents(static_cast<std::size_t>(n + 1), 0), c);
}

ShiftedPolynomial ShiftedPolynomial::mu(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("ShiftedPolynomial: μ index out of range");
  ShiftedPolynomial p(n);
  Exponents e(static_cast<std::size_t>(n + 1), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add(e, Rational(1));
  return p;
}

ShiftedPolynomial ShiftedPolynomial::u(int n) {
  ShiftedPolynomial p(n);
  Exponents e(static_cast<std::size_t>(n + 1), 0);
  e.back() = 1;
  p.add(e, Rational(1));
  return p;
}

int ShiftedPolynomial::u_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.back());
  return d;
}

void ShiftedPolynomial::add(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ShiftedPolynomial::check(const ShiftedPolynomial& o) const {
  if (o.n_ != n_) throw std::invalid_argument("ShiftedPolynomial: variable count mismatch");
}

ShiftedPolynomial& ShiftedPolynomial::operator+=(const ShiftedPolynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ShiftedPolynomial& ShiftedPolynomial::operator-=(const ShiftedPolynomial& o) {
  check(o);
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ShiftedPolynomial operator*(const ShiftedPolynomial& a, const ShiftedPolynomial& b) {
  a.check(b);
  ShiftedPolynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ShiftedPolynomial::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

ShiftedPolynomial operator*(ShiftedPolynomial a, const Rational& q) {
  if (q.is_zero()) return ShiftedPolynomial(a.n_);
  for (auto& [e, c] : a.terms_) c *= q;
  return a;
}

ShiftedPolynomial ShiftedPolynomial::shift_u(const Rational& a) const {
  if (a.is_zero()) return *this;
  ShiftedPolynomial r(n_);
  for (const auto& [e, c] : terms_) {
    const int d = e.back();
    for (int j = 0; j <= d; ++j) {
      Exponents f = e;
      f.back() = j;
      r.add(f, c * binomial(d, j) * power(a, static_cast<unsigned>(d - j)));
    }
  }
  return r;
}

UPolynomial<Rational> ShiftedPolynomial::at(const HighestWeight& mu) const {
  if (mu.n() != n_) throw std::invalid_argument("ShiftedPolynomial: weight has the wrong length");
  std::vector<Rational> out(static_cast<std::size_t>(std::max(u_degree() + 1, 0)));
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < n_; ++i) v *= power(Rational(mu[i + 1]), static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
    out[static_cast<std::size_t>(e.back())] += v;
  }
  return UPolynomial<Rational>(std::move(out));
}

std::string ShiftedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i + 1 == e.size() ? std::string("u") : "mu" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    std::string term = mono.empty() ? mag.str() : mag.is_one() ? mono : mag.str() + "*" + mono;
    if (s.empty()) s = c.sign() < 0 ? "-" + term : term;
    else s += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return s;
}

namespace {

ShiftedPolynomial linear(int n, int i, int shift) {
  return ShiftedPolynomial::mu(n, i) + ShiftedPolynomial::u(n) + ShiftedPolynomial(n, Rational(shift));
}

}  // namespace

ShiftedPolynomial shifted_e_star(int k, int n) {
  if (k < 0) throw std::invalid_argument("shifted_e_star: negative k");
  ShiftedPolynomial acc(n);
  std::vector<int> idx;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(idx.size()) == k) {
      ShiftedPolynomial term(n, Rational(1));
      for (int s = 1; s <= k; ++s) term = term * linear(n, idx[static_cast<std::size_t>(s - 1)], k - s);
      acc += term;
      return;
    }
    for (int i = next; i <= n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 1);
  return acc;
}

ShiftedPolynomial shifted_h_star(int k, int n) {
  if (k < 0) throw std::invalid_argument("shifted_h_star: negative k");
  ShiftedPolynomial acc(n);
  std::vector<int> idx;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(idx.size()) == k) {
      ShiftedPolynomial term(n, Rational(1));
      for (int s = 1; s <= k; ++s) term = term * linear(n, idx[static_cast<std::size_t>(s - 1)], s - k);
      acc += term;
      return;
    }
    for (int i = next; i <= n; ++i) {
      idx.push_back(i);
      self(self, i);
      idx.pop_back();
    }
  };
  rec(rec, 1);
  return acc;
}

// ---- Perelomov–Popov -----------------------------------------------------

std::vector<Rational> pp_shifted_weights(const HighestWeight& mu) {
  std::vector<Rational> m;
  for (int i = 1; i <= mu.n(); ++i) m.emplace_back(mu[i] + mu.n() - i);
  return m;
}

std::vector<Rational> pp_gammas(const HighestWeight& mu) {
  const auto m = pp_shifted_weights(mu);
  std::vector<Rational> g;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational acc(1);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != i) acc *= Rational(1) - (m[i] - m[j]).reciprocal();
    g.push_back(acc);
  }
  return g;
}

Rational pp_eigen_trEk(int k, const HighestWeight& mu) {
  if (k < 0) throw std::invalid_argument("pp_eigen_trEk: negative k");
  const auto m = pp_shifted_weights(mu);
  const auto g = pp_gammas(mu);
  Rational acc(0);
  for (std::size_t i = 0; i < m.size(); ++i) acc += g[i] * power(m[i], static_cast<unsigned>(k));
  return acc;
}

UPolynomial<Rational> p_star_at(int k, const HighestWeight& mu) {
  if (k < 0) throw std::invalid_argument("p_star_at: negative k");
  const auto m = pp_shifted_weights(mu);
  const auto g = pp_gammas(mu);
  UPolynomial<Rational> acc;
  for (std::size_t i = 0; i < m.size(); ++i)
    acc += rising_factorial(UPolynomial<Rational>::variable() + UPolynomial<Rational>(m[i]), k) * g[i];
  return acc;
}

// ---- highest-weight and defining-representation values -------------------

namespace {

const GeneratorSet& gl_generators(const AlgebraElement& z) {
  if (!z.algebra() || z.algebra()->kind() != AlgebraKind::Gl)
    throw std::invalid_argument("expected an element of U(gl_n)");
  return z.algebra()->generators();
}

}  // namespace

ShiftedPolynomial hw_symbolic(const AlgebraElement& z, int n) {
  ShiftedPolynomial acc(n);
  if (auto s = z.scalar()) return ShiftedPolynomial(n, *s);
  const auto& gens = gl_generators(z);
  if (gens.n() != n) throw std::invalid_argument("hw_symbolic: rank mismatch");
  for (const auto& [w, c] : z.terms()) {
    ShiftedPolynomial term(n, c);
    bool cartan = true;
    for (GenId g : w) {
      const auto& id = gens[g];
      if (id.i != id.j) {
        cartan = false;
        break;
      }
      term = term * ShiftedPolynomial::mu(n, id.i);
    }
    if (cartan) acc += term;
  }
  return acc;
}

ShiftedPolynomial hw_symbolic(const UPolynomial<AlgebraElement>& z, int n) {
  ShiftedPolynomial acc(n);
  ShiftedPolynomial upow(n, Rational(1));
  for (int d = 0; d <= z.degree(); ++d) {
    acc += hw_symbolic(z.coeff(d), n) * upow;
    upow = upow * ShiftedPolynomial::u(n);
  }
  return acc;
}

Rational hw_eigenvalue(const AlgebraElement& z, const HighestWeight& mu) {
  if (auto s = z.scalar()) return *s;
  const auto& gens = gl_generators(z);
  if (gens.n() != mu.n()) throw std::invalid_argument("hw_eigenvalue: weight length differs from n");
  Rational acc(0);
  for (const auto& [w, c] : z.terms()) {
    Rational v = c;
    for (GenId g : w) {
      const auto& id = gens[g];
      if (id.i != id.j) {
        v = Rational(0);
        break;
      }
      v *= Rational(mu[id.i]);
    }
    acc += v;
  }
  return acc;
}

TensorMatrix<Rational> defining_rep_value(const AlgebraElement& z, int n) {
  TensorMatrix<Rational> out(n, 1);
  if (auto s = z.scalar()) return TensorMatrix<Rational>::identity(n, 1) * *s;
  const auto& gens = gl_generators(z);
  if (gens.n() != n) throw std::invalid_argument("defining_rep_value: rank mismatch");
  for (const auto& [w, c] : z.terms()) {
    if (w.empty()) {
      for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) += c;
      continue;
    }
    // E_{i1 j1} E_{i2 j2} ... = E_{i1 jlast} when adjacent indices chain.
    int row = gens[w[0]].i;
    int col = gens[w[0]].j;
    bool alive = true;
    for (std::size_t p = 1; p < w.size() && alive; ++p) {
      if (gens[w[p]].i != col) alive = false;
      col = gens[w[p]].j;
    }
    if (alive) {
      auto& dst = out.at(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
      dst += c;
    }
  }
  return out;
}

std::optional<Rational> scalar_value(const TensorMatrix<Rational>& m) {
  const Rational c = m.at(0, 0);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t s = 0; s < m.dim(); ++s)
      if (m.at(r, s) != (r == s ? c : Rational(0))) return std::nullopt;
  return c;
}

// ---- CapelliContext --------------------------------------------------------

CapelliContext::CapelliContext(int n) : n_(n), gl_(Algebra::gl(n)) {}

AlgebraElement CapelliContext::e(int i, int j) const { return AlgebraElement::generator(gl_, gl_->generators().id(i, j)); }

AlgebraElement CapelliContext::ev(const AlgebraElement& y) const {
  AlgebraElement out(gl_, Rational(0));
  if (auto s = y.scalar()) return AlgebraElement(gl_, *s);
  const AlgebraPtr& src = y.algebra();
  if (src->kind() != AlgebraKind::Yangian || src->n() != n_)
    throw std::invalid_argument("ev: expected a Yangian element of the same rank");
  const auto& ygens = src->generators();
  for (const auto& [w, c] : y.terms()) {
    Word image;
    bool alive = true;
    for (GenId g : w) {
      const auto& id = ygens[g];
      if (id.level != 1) {
        alive = false;
        break;
      }
      image.push_back(gl_->generators().id(id.i, id.j));
    }
    if (alive) out += AlgebraElement::from_word(gl_, image, c);
  }
  return out;
}

GlSeries CapelliContext::ev(const YSeries& f) const {
  std::vector<AlgebraElement> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(ev(c));
  return GlSeries(f.order(), std::move(coeffs));
}

namespace {

TensorMatrix<AlgebraElement> generator_matrix(const CapelliContext& ctx) {
  TensorMatrix<AlgebraElement> m(ctx.n(), 1);
  for (int i = 1; i <= ctx.n(); ++i)
    for (int j = 1; j <= ctx.n(); ++j) m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = ctx.e(i, j);
  return m;
}

}  // namespace

AlgebraElement CapelliContext::trace_power(int k) const {
  if (k < 0) throw std::invalid_argument("trace_power: negative k");
  if (k == 0) return AlgebraElement(gl_, Rational(n_));
  const auto e = generator_matrix(*this);
  auto prod = e;
  for (int s = 1; s < k; ++s) prod = prod * e;
  return trace_full(prod);
}

UPolynomial<AlgebraElement> CapelliContext::capelli_p(int m) const {
  if (m < 1) throw std::invalid_argument("capelli_p: m must be positive");
  using Poly = UPolynomial<AlgebraElement>;
  const auto e = generator_matrix(*this);
  auto factor = [&](int shift) {
    TensorMatrix<Poly> f(n_, 1);
    for (std::size_t r = 0; r < e.dim(); ++r)
      for (std::size_t c = 0; c < e.dim(); ++c) {
        if (r == c) f.at(r, c) = Poly({e.at(r, c) + AlgebraElement(gl_, Rational(shift)), AlgebraElement(gl_, Rational(1))});
        else f.at(r, c) = Poly({e.at(r, c)});
      }
    return f;
  };
  auto prod = factor(0);
  for (int s = 1; s < m; ++s) prod = prod * factor(s);
  return trace_full(prod);
}

ShiftedPolynomial CapelliContext::shifted_p_star(int k) const {
  if (k == 0) return ShiftedPolynomial(n_, Rational(n_));
  return hw_symbolic(capelli_p(k), n_);
}

bool CapelliContext::is_central(const AlgebraElement& z) const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (!commutator(e(i, j), z).is_zero()) return false;
  return true;
}

// ---- verification ----------------------------------------------------------

namespace {

using json = nlohmann::ordered_json;

std::optional<Difference> poly_difference(const UPolynomial<Rational>& lhs, const UPolynomial<Rational>& rhs,
                                          const std::string& where) {
  const int top = std::max(lhs.degree(), rhs.degree());
  for (int d = top; d >= 0; --d)
    if (lhs.coeff(d) != rhs.coeff(d)) return Difference{where + " u^" + std::to_string(d), lhs.coeff(d).str(), rhs.coeff(d).str()};
  return std::nullopt;
}

std::optional<Difference> shifted_difference(const ShiftedPolynomial& lhs, const ShiftedPolynomial& rhs) {
  const ShiftedPolynomial d = lhs - rhs;
  if (d.is_zero()) return std::nullopt;
  const auto& [e, c] = *d.terms().rbegin();
  ShiftedPolynomial mono(lhs.n(), Rational(1));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int p = 0; p < e[i]; ++p)
      mono = mono * (i + 1 == e.size() ? ShiftedPolynomial::u(lhs.n()) : ShiftedPolynomial::mu(lhs.n(), static_cast<int>(i) + 1));
  auto coeff_of = [&](const ShiftedPolynomial& p) {
    auto it = p.terms().find(e);
    return it == p.terms().end() ? std::string("0") : it->second.str();
  };
  return Difference{mono.str(), coeff_of(lhs), coeff_of(rhs)};
}

/// Coefficients of Π_{j<k} (1 + sign·j u^{-1}) as an exact series.
GlSeries factorial_series(const AlgebraPtr& gl, int k, int sign) {
  const auto f = sign < 0 ? falling_factorial(k) : rising_factorial(k);
  std::vector<AlgebraElement> coeffs;
  for (int i = 0; i <= k; ++i) coeffs.emplace_back(gl, f.coeff(k - i));
  return GlSeries(kExactOrder, std::move(coeffs));
}

std::vector<std::vector<UPolynomial<Rational>>> p_star_table(int k_max, const std::vector<HighestWeight>& samples) {
  std::vector<std::vector<UPolynomial<Rational>>> t;
  for (const auto& mu : samples) {
    std::vector<UPolynomial<Rational>> row;
    for (int k = 0; k <= k_max; ++k) row.push_back(p_star_at(k, mu));
    t.push_back(std::move(row));
  }
  return t;
}

}  // namespace

std::vector<CheckRecord> verify_shifted_identities(int m_max, int n, const std::vector<HighestWeight>& samples) {
  std::vector<CheckRecord> out;
  for (int m = 0; m <= m_max; ++m)
    out.push_back(timed_check("shifted e*h* orthogonality", "shifted:eh", json{{"n", n}, {"m", m}}, [&] {
      ShiftedPolynomial lhs(n);
      for (int k = 0; k <= m; ++k) {
        const auto term = shifted_e_star(k, n).shift_u(Rational(1 - k)) * shifted_h_star(m - k, n).shift_u(Rational(-k));
        if (k % 2) lhs -= term;
        else lhs += term;
      }
      return Outcome::from(shifted_difference(lhs, ShiftedPolynomial(n, Rational(m == 0 ? 1 : 0))), -1, "symbolic in (mu, u)");
    }));

  const auto pstar = p_star_table(m_max, samples);
  for (int kind = 0; kind < 2; ++kind)
    for (int k = 1; k <= m_max; ++k) {
      const bool e_side = kind == 0;
      out.push_back(timed_check(e_side ? "e* from shifted power sums" : "h* from shifted power sums",
                                e_side ? "shifted:e-composition" : "shifted:h-composition",
                                json{{"n", n}, {"k", k}, {"samples", samples.size()}}, [&] {
        const auto lhs_sym = e_side ? shifted_e_star(k, n).shift_u(Rational(-k)) : shifted_h_star(k, n).shift_u(Rational(k - 1));
        const auto comps = compositions(k);
        for (std::size_t s = 0; s < samples.size(); ++s) {
          UPolynomial<Rational> rhs;
          for (const auto& lam : comps) {
            const int parts = static_cast<int>(lam.size());
            Rational weight(1);
            UPolynomial<Rational> prod(Rational(1));
            int a = 0;
            for (int part : lam) {
              const int prev = a;
              a += part;
              weight *= Rational(a);
              prod = prod * poly_shift(pstar[s][static_cast<std::size_t>(part)], Rational(e_side ? -a : prev));
            }
            Rational c = weight.reciprocal();
            if (e_side && (k - parts) % 2) c = -c;
            rhs += prod * c;
          }
          if (auto d = poly_difference(lhs_sym.at(samples[s]), rhs, "mu=" + samples[s].str()))
            return Outcome::fail(d, -1, "pointwise in mu");
        }
        return Outcome::pass(-1, "pointwise on " + std::to_string(samples.size()) + " weights");
      }));
    }
  return out;
}

std::vector<CheckRecord> verify_ev_bridge(int k_max, int n, int order, const std::vector<HighestWeight>& samples,
                                          int hminus_max) {
  std::vector<CheckRecord> out;
  SymContext ctx(n, order);
  CapelliContext cap(n);

  for (int kind = 0; kind < 2; ++kind)
    for (int k = 1; k <= k_max; ++k) {
      const bool e_side = kind == 0;
      const json params{{"n", n}, {"k", k}, {"order", order}};
      GlSeries image;
      out.push_back(timed_check(e_side ? "ev(e_k) coefficients are central" : "ev(h_k) coefficients are central",
                                "capelli:central", params, [&] {
        image = cap.ev(e_side ? ctx.e(k) : ctx.h(k));
        for (int m = 0; m < image.stored(); ++m)
          if (!cap.is_central(image.coeff(m)))
            return Outcome::fail(Difference{"u^-" + std::to_string(m), "not central", "central"}, order);
        return Outcome::pass(order);
      }));
      out.push_back(timed_check(e_side ? "ev(e_k) times falling factorial is e*" : "ev(h_k) times rising factorial is h*",
                                e_side ? "capelli:bridge-e" : "capelli:bridge-h", params, [&] {
        const GlSeries cleared = image * factorial_series(cap.gl(), k, e_side ? -1 : 1);
        const auto target = e_side ? shifted_e_star(k, n).shift_u(Rational(1 - k)) : shifted_h_star(k, n).shift_u(Rational(k - 1));
        for (const auto& mu : samples) {
          const auto poly = target.at(mu);
          for (int i = 0; i <= order; ++i) {
            const Rational lhs = hw_eigenvalue(cleared.coeff(i), mu);
            const Rational rhs = i <= k ? poly.coeff(k - i) : Rational(0);
            if (lhs != rhs) return Outcome::fail(Difference{"mu=" + mu.str() + " u^-" + std::to_string(i), lhs.str(), rhs.str()}, order);
          }
        }
        return Outcome::pass(order, "eigenvalues on " + std::to_string(samples.size()) + " weights");
      }));
    }

  for (int m = 1; m <= hminus_max; ++m)
    out.push_back(timed_check("ev(h^-_m) = ev(h_m)", "capelli:hminus", json{{"n", n}, {"m", m}, {"order", order}}, [&] {
      return Outcome::from(difference(cap.ev(ctx.h_minus(m)), cap.ev(ctx.h(m))), order);
    }));

  for (int m = 1; m <= k_max; ++m) {
    const json params{{"n", n}, {"m", m}, {"order", order}};
    GlSeries plus;
    out.push_back(timed_check("ev(p^+_m) times rising factorial is p_m", "capelli:p-plus", params, [&] {
      plus = cap.ev(ctx.p(m, 1));
      const GlSeries cleared = plus * factorial_series(cap.gl(), m, 1);
      const auto pm = cap.capelli_p(m);
      for (int i = 0; i <= order; ++i) {
        const AlgebraElement rhs = i <= m ? pm.coeff(m - i) : AlgebraElement();
        if (auto d = difference(cleared.coeff(i), rhs, "u^-" + std::to_string(i))) return Outcome::fail(d, order);
      }
      return Outcome::pass(order);
    }));
    out.push_back(timed_check("ev(p^-_m(u+m-1)) = ev(p^+_m(u))", "capelli:p-minus", params, [&] {
      return Outcome::from(difference(cap.ev(series_shift(ctx.p(m, -1), Rational(m - 1))), plus), order);
    }));
  }
  return out;
}

std::vector<CheckRecord> verify_perelomov_popov(int k_max, int n, const std::vector<HighestWeight>& samples) {
  std::vector<CheckRecord> out;
  CapelliContext cap(n);
  std::vector<int> fund(static_cast<std::size_t>(n), 0);
  fund[0] = 1;
  const HighestWeight defining(fund);
  for (int k = 0; k <= k_max; ++k) {
    const json params{{"n", n}, {"k", k}};
    const AlgebraElement trk = cap.trace_power(k);
    out.push_back(timed_check("Perelomov-Popov vs highest-weight evaluation", "capelli:pp-hw", params, [&] {
      for (const auto& mu : samples) {
        const Rational a = pp_eigen_trEk(k, mu);
        const Rational b = hw_eigenvalue(trk, mu);
        if (a != b) return Outcome::fail(Difference{"mu=" + mu.str(), a.str(), b.str()});
      }
      return Outcome::pass(-1, std::to_string(samples.size()) + " weights");
    }));
    out.push_back(timed_check("Perelomov-Popov vs defining representation", "capelli:pp-defining", params, [&] {
      const auto scalar = scalar_value(defining_rep_value(trk, n));
      const Rational pp = pp_eigen_trEk(k, defining);
      if (!scalar) return Outcome::fail(Difference{"defining rep", pp.str(), "not scalar"});
      if (*scalar != pp) return Outcome::fail(Difference{"mu=" + defining.str(), pp.str(), scalar->str()});
      return Outcome::pass(-1, "scalar " + scalar->str());
    }));
    out.push_back(timed_check("p* by gamma formula vs highest-weight image of p_k", "capelli:p-star", params, [&] {
      const auto sym = cap.shifted_p_star(k);
      for (const auto& mu : samples)
        if (auto d = poly_difference(p_star_at(k, mu), sym.at(mu), "mu=" + mu.str())) return Outcome::fail(d);
      return Outcome::pass();
    }));
  }
  return out;
}

std::vector<CheckRecord> verify_capelli_centrality(int m_max, int n) {
  std::vector<CheckRecord> out;
  CapelliContext cap(n);
  std::vector<int> fund(static_cast<std::size_t>(n), 0);
  fund[0] = 1;
  const HighestWeight defining(fund);
  for (int m = 1; m <= m_max; ++m)
    out.push_back(timed_check("capelli_p coefficients central and scalar", "capelli:centrality", json{{"n", n}, {"m", m}}, [&] {
      const auto pm = cap.capelli_p(m);
      for (int d = 0; d <= pm.degree(); ++d) {
        const auto& z = pm.coeff(d);
        const std::string where = "u^" + std::to_string(d);
        if (!cap.is_central(z)) return Outcome::fail(Difference{where, "not central", "central"});
        const auto scalar = scalar_value(defining_rep_value(z, n));
        const Rational hw = hw_eigenvalue(z, defining);
        if (!scalar) return Outcome::fail(Difference{where, "non-scalar defining image", hw.str()});
        if (*scalar != hw) return Outcome::fail(Difference{where, scalar->str(), hw.str()});
      }
      return Outcome::pass();
    }));
  return out;
}

}  // namespace yangsym
