#pragma once

#include <map>

#include "pluckerlab/diagram.hpp"
#include "pluckerlab/matrix.hpp"

namespace pluckerlab {

// Permutation of [1, s] in one-line notation.
struct Permutation {
  int s = 0;
  std::vector<int> images;  // images[i-1] = w(i)

  Permutation() = default;
  Permutation(int s_, std::vector<int> im);

  static Permutation identity(int s);

  // A reduced word (s_{a_1} ... s_{a_k} = w) obtained by adjacent-swap
  // sorting; length equals the inversion number.
  std::vector<int> reduced_word() const;

  bool operator<(const Permutation& o) const { return images < o.images; }
  bool operator==(const Permutation& o) const { return images == o.images; }
};

// Element of TL_s(xi=2): integer combination of Kauffman diagrams. The
// quotient at xi=2 makes every structure constant an integer.
class TLElement {
 public:
  explicit TLElement(int s) : s_(s) {}

  static TLElement unit(int s);  // identity diagram, coefficient 1
  static TLElement from_diagram(const KauffmanDiagram& k, Integer coeff = 1);

  int s() const { return s_; }
  const std::map<KauffmanDiagram, Integer>& terms() const { return terms_; }
  Integer coeff(const KauffmanDiagram& k) const;

  void add(const KauffmanDiagram& k, const Integer& c);

  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement operator*(const TLElement& o) const;
  TLElement operator*(const Integer& c) const;
  bool operator==(const TLElement& o) const { return s_ == o.s_ && terms_ == o.terms_; }

 private:
  int s_ = 0;
  std::map<KauffmanDiagram, Integer> terms_;  // no zero coefficients stored
};

// sigma(s_i) = t_i - 1.
TLElement sigma_generator(int s, int i);

// sigma(w) expanded in the diagram basis; independent of the reduced word.
TLElement permutation_image(const Permutation& w);

// Image of an explicit word s_{a_1} ... s_{a_k} (need not be reduced).
TLElement word_image(int s, const std::vector<int>& word);

// f_K(w): coefficient of K in sigma(w).
Integer f_coeff(const Permutation& w, const KauffmanDiagram& k);

// Imm_K(M) = sum over w in S_s of f_K(w) * prod_i M(i, w(i)); exact, with
// the f table memoized per s under single-writer initialization.
Rational immanant(const KauffmanDiagram& k, const RationalMatrix& m);

// Shared f table for one s: sigma(w) for every w, keyed by one-line notation.
const std::map<std::vector<int>, TLElement>& f_table(int s);

}  // namespace pluckerlab
