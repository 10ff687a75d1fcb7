#include "pluckerlab/tl_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pluckerlab {

Permutation::Permutation(int s_, std::vector<int> im) : s(s_), images(std::move(im)) {
  if (static_cast<int>(images.size()) != s)
    throw std::invalid_argument("permutation: wrong length");
  std::vector<bool> seen(s + 1, false);
  for (int x : images) {
    if (x < 1 || x > s || seen[x]) throw std::invalid_argument("permutation: not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int s) {
  std::vector<int> im(s);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(s, std::move(im));
}

std::vector<int> Permutation::reduced_word() const {
  // Bubble-sort the one-line notation; each swap at position i corresponds
  // to right-multiplication by s_i and removes exactly one inversion, so
  // reading the swaps in reverse gives a reduced word for w.
  std::vector<int> v = images;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < s; ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

TLElement TLElement::unit(int s) { return from_diagram(KauffmanDiagram::identity(s)); }

TLElement TLElement::from_diagram(const KauffmanDiagram& k, Integer coeff) {
  TLElement e(k.s());
  e.add(k, coeff);
  return e;
}

Integer TLElement::coeff(const KauffmanDiagram& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TLElement::add(const KauffmanDiagram& k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TLElement TLElement::operator+(const TLElement& o) const {
  if (s_ != o.s_) throw std::invalid_argument("TL addition: size mismatch");
  TLElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

TLElement TLElement::operator-(const TLElement& o) const {
  if (s_ != o.s_) throw std::invalid_argument("TL subtraction: size mismatch");
  TLElement out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, -c);
  return out;
}

TLElement TLElement::operator*(const TLElement& o) const {
  if (s_ != o.s_) throw std::invalid_argument("TL product: size mismatch");
  TLElement out(s_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      const auto [prod, loops] = tl_multiply(k1, k2);
      Integer scale = c1 * c2;
      for (int l = 0; l < loops; ++l) scale *= 2;  // xi = 2 per loop
      out.add(prod, scale);
    }
  return out;
}

TLElement TLElement::operator*(const Integer& c) const {
  TLElement out(s_);
  for (const auto& [k, c0] : terms_) out.add(k, c0 * c);
  return out;
}

TLElement sigma_generator(int s, int i) {
  TLElement e = TLElement::from_diagram(KauffmanDiagram::generator(s, i));
  e.add(KauffmanDiagram::identity(s), -1);
  return e;
}

TLElement word_image(int s, const std::vector<int>& word) {
  TLElement e = TLElement::unit(s);
  for (int i : word) e = e * sigma_generator(s, i);
  return e;
}

TLElement permutation_image(const Permutation& w) { return word_image(w.s, w.reduced_word()); }

const std::map<std::vector<int>, TLElement>& f_table(int s) {
  static std::mutex mu;
  static std::map<int, std::map<std::vector<int>, TLElement>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(s);
  if (it != tables.end()) return it->second;
  std::map<std::vector<int>, TLElement> table;
  std::vector<int> im(s);
  std::iota(im.begin(), im.end(), 1);
  do {
    table.emplace(im, permutation_image(Permutation(s, im)));
  } while (std::next_permutation(im.begin(), im.end()));
  return tables.emplace(s, std::move(table)).first->second;
}

Integer f_coeff(const Permutation& w, const KauffmanDiagram& k) {
  if (w.s != k.s()) throw std::invalid_argument("f_coeff: size mismatch");
  return f_table(w.s).at(w.images).coeff(k);
}

Rational immanant(const KauffmanDiagram& k, const RationalMatrix& m) {
  // Imm_K(x) = sum_w f_K(w) x_{w(1),1} ... x_{w(s),s}.  With the diagram
  // product gluing left factors to the left, this row-side pairing is the
  // one under which products of minors expand over compatible diagrams.
  const int s = k.s();
  if (m.rows() != s || m.cols() != s) throw std::invalid_argument("immanant: matrix must be s x s");
  const auto& table = f_table(s);
  Rational total = 0;
  for (const auto& [im, elem] : table) {
    const Integer f = elem.coeff(k);
    if (f == 0) continue;
    Rational prod = 1;
    for (int i = 0; i < s; ++i) prod *= m(im[i] - 1, i);
    total += Rational(f) * prod;
  }
  return total;
}

}  // namespace pluckerlab
