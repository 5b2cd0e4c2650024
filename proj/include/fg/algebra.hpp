#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "fg/canon.hpp"
#include "fg/rational.hpp"

namespace fg {

// Free-module linear algebra over exact rationals, keyed by canonical
// forms. A basis type B must expose `const CanonKey& canon_key() const`.
// All containers are ordered so iteration (and hence every emitted
// artifact) is deterministic.

/// Commutative word over a basis: a finite multiset of basis objects.
/// The empty monomial is the algebra unit.
template <typename B>
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(B single) { factors_.push_back(std::move(single)); append_key(); }
  explicit Monomial(std::vector<B> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const B& a, const B& b) { return a.canon_key() < b.canon_key(); });
    append_key();
  }

  bool empty() const { return factors_.empty(); }
  int size() const { return static_cast<int>(factors_.size()); }
  const std::vector<B>& factors() const { return factors_; }
  const B& factor(int i) const { return factors_[i]; }

  const CanonKey& canon_key() const { return key_; }

  Monomial times(const Monomial& other) const {
    std::vector<B> fs = factors_;
    fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
    return Monomial(std::move(fs));
  }

  /// The word with factor i removed.
  Monomial without(int i) const {
    std::vector<B> fs;
    fs.reserve(factors_.size() - 1);
    for (int k = 0; k < size(); ++k)
      if (k != i) fs.push_back(factors_[k]);
    Monomial m;
    m.factors_ = std::move(fs);  // already sorted
    m.append_key();
    return m;
  }

  /// Sub-word at the given (ascending) factor positions.
  Monomial select(const std::vector<int>& positions) const {
    std::vector<B> fs;
    fs.reserve(positions.size());
    for (int p : positions) fs.push_back(factors_[p]);
    Monomial m;
    m.factors_ = std::move(fs);
    m.append_key();
    return m;
  }

 private:
  void append_key() {
    key_.bytes.clear();
    for (const B& f : factors_) {
      const std::string& k = f.canon_key().bytes;
      unsigned n = static_cast<unsigned>(k.size());
      for (int s = 24; s >= 0; s -= 8) key_.bytes.push_back(static_cast<char>((n >> s) & 0xff));
      key_.bytes += k;
    }
  }

  std::vector<B> factors_;
  CanonKey key_;
};

/// Finite formal rational linear combination of basis objects, keyed by
/// canonical form; zero coefficients are never stored.
template <typename B>
class LinComb {
 public:
  using Term = std::pair<B, Rat>;

  LinComb() = default;
  static LinComb of(B b, Rat c = 1) {
    LinComb r;
    r.add(std::move(b), std::move(c));
    return r;
  }

  void add(B b, Rat c) {
    if (c == 0) return;
    CanonKey k = b.canon_key();
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), Term{std::move(b), std::move(c)});
    } else {
      it->second.second += c;
      if (it->second.second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rat& scale = 1) {
    for (const auto& [k, t] : other.terms_) add(t.first, t.second * scale);
  }

  LinComb plus(const LinComb& other) const {
    LinComb r = *this;
    r.add(other);
    return r;
  }
  LinComb minus(const LinComb& other) const {
    LinComb r = *this;
    r.add(other, -1);
    return r;
  }
  LinComb scaled(const Rat& c) const {
    LinComb r;
    if (c == 0) return r;
    for (const auto& [k, t] : terms_) r.terms_.emplace(k, Term{t.first, t.second * c});
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  Rat coefficient(const B& b) const {
    auto it = terms_.find(b.canon_key());
    return it == terms_.end() ? Rat(0) : it->second.second;
  }

  const std::map<CanonKey, Term>& terms() const { return terms_; }

  bool operator==(const LinComb& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (it->first != jt->first || it->second.second != jt->second.second) return false;
    return true;
  }

  template <typename F>
  auto map_terms(F&& f) const {  // f: (B, Rat) -> LinComb<C>
    using Out = decltype(f(std::declval<const B&>(), std::declval<const Rat&>()));
    Out out;
    for (const auto& [k, t] : terms_) out.add(f(t.first, t.second));
    return out;
  }

 private:
  std::map<CanonKey, Term> terms_;
};

/// Rank-2 tensor element: a bilinear combination keyed by pairs of
/// canonical forms.
template <typename A, typename B>
class Tensor2 {
 public:
  using Key = std::pair<CanonKey, CanonKey>;
  using Term = std::tuple<A, B, Rat>;

  void add(A a, B b, Rat c) {
    if (c == 0) return;
    Key k{a.canon_key(), b.canon_key()};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), Term{std::move(a), std::move(b), std::move(c)});
    } else {
      std::get<2>(it->second) += c;
      if (std::get<2>(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const Tensor2& other, const Rat& scale = 1) {
    for (const auto& [k, t] : other.terms_)
      add(std::get<0>(t), std::get<1>(t), std::get<2>(t) * scale);
  }

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Key, Term>& terms() const { return terms_; }

  Rat coefficient(const A& a, const B& b) const {
    auto it = terms_.find(Key{a.canon_key(), b.canon_key()});
    return it == terms_.end() ? Rat(0) : std::get<2>(it->second);
  }

  bool operator==(const Tensor2& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (it->first != jt->first || std::get<2>(it->second) != std::get<2>(jt->second))
        return false;
    return true;
  }

 private:
  std::map<Key, Term> terms_;
};

template <typename A, typename B, typename C>
class Tensor3 {
 public:
  using Key = std::tuple<CanonKey, CanonKey, CanonKey>;
  using Term = std::tuple<A, B, C, Rat>;

  void add(A a, B b, C c, Rat coeff) {
    if (coeff == 0) return;
    Key k{a.canon_key(), b.canon_key(), c.canon_key()};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), Term{std::move(a), std::move(b), std::move(c), std::move(coeff)});
    } else {
      std::get<3>(it->second) += coeff;
      if (std::get<3>(it->second) == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Key, Term>& terms() const { return terms_; }

  bool operator==(const Tensor3& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (it->first != jt->first || std::get<3>(it->second) != std::get<3>(jt->second))
        return false;
    return true;
  }

 private:
  std::map<Key, Term> terms_;
};

/// Bilinear extension of multiset union; the empty monomial is neutral.
template <typename B>
LinComb<Monomial<B>> m_product(const LinComb<Monomial<B>>& a,
                               const LinComb<Monomial<B>>& b) {
  LinComb<Monomial<B>> out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      out.add(ta.first.times(tb.first), ta.second * tb.second);
  return out;
}

/// Coefficient of the empty monomial (the symmetric-algebra counit).
template <typename B>
Rat counit(const LinComb<Monomial<B>>& a) {
  return a.coefficient(Monomial<B>{});
}

}  // namespace fg
