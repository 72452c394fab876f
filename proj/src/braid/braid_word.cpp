#include "confspace/braid/braid_word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace confspace {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw std::invalid_argument("braid words need n >= 2");
  for (int g : letters_)
    if (g == 0 || std::abs(g) > n - 1)
      throw std::invalid_argument("letter " + std::to_string(g) + " out of range for B_" + std::to_string(n));
}

BraidWord BraidWord::parse(int n, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int g = 0;
    try {
      g = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size()) throw std::invalid_argument("bad braid letter '" + tok + "'");
    letters.push_back(g);
  }
  return BraidWord(n, letters);
}

BraidWord BraidWord::alpha(int n) {
  std::vector<int> l;
  for (int i = 1; i < n; ++i) l.push_back(i);
  return BraidWord(n, l);
}

BraidWord BraidWord::sphere_relator(int n) {
  std::vector<int> l;
  for (int i = 1; i < n; ++i) l.push_back(i);
  for (int i = n - 1; i >= 1; --i) l.push_back(i);
  return BraidWord(n, l);
}

BraidWord BraidWord::centre(int n) { return alpha(n).pow(n); }

BraidWord BraidWord::inverse() const {
  std::vector<int> l(letters_.rbegin(), letters_.rend());
  for (int& g : l) g = -g;
  return BraidWord(n_, l);
}

BraidWord BraidWord::pow(int e) const {
  const BraidWord base = e < 0 ? inverse() : *this;
  BraidWord r(n_);
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters_[i]);
  }
  return s;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("strand counts differ");
  std::vector<int> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.n_, l);
}

Perm mu_image(const BraidWord& w) {
  Perm p(w.strands());
  for (int g : w.letters()) p = p * Perm::transposition(w.strands(), std::abs(g), std::abs(g) + 1);
  return p;
}

long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (int g : w.letters()) s += g > 0 ? 1 : -1;
  return s;
}

namespace {

// A simple element is identified with its permutation. For a permutation p,
// sigma_i can be split off on the right iff p(i) > p(i+1), and on the left
// iff p^{-1}(i) > p^{-1}(i+1).
bool right_descent(const Perm& p, int i) { return p(i) > p(i + 1); }
bool left_descent(const Perm& p, int i) {
  const Perm inv = p.inverse();
  return inv(i) > inv(i + 1);
}

Perm longest(int n) {
  std::vector<int> img;
  for (int i = n; i >= 1; --i) img.push_back(i);
  return Perm::from_images(img);
}

}  // namespace

CanonicalBraid canonical_form(const BraidWord& w) {
  const int n = w.strands();
  const Perm delta = longest(n);
  CanonicalBraid c;
  c.n = n;
  for (int g : w.letters()) {
    const Perm s = Perm::transposition(n, std::abs(g), std::abs(g) + 1);
    if (g > 0) {
      c.factors.push_back(s);
    } else {
      // sigma^{-1} = Delta^{-1} (Delta sigma^{-1}); move Delta^{-1} to the
      // front, flipping earlier factors by Delta-conjugation
      for (auto& f : c.factors) f = delta * f * delta;
      --c.infimum;
      c.factors.push_back(delta * s);
    }
  }
  // slide generators leftwards until every adjacent pair is left-weighted
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < c.factors.size(); ++j) {
      Perm& a = c.factors[j];
      Perm& b = c.factors[j + 1];
      for (int i = 1; i < n; ++i) {
        if (left_descent(b, i) && !right_descent(a, i)) {
          const Perm s = Perm::transposition(n, i, i + 1);
          a = a * s;
          b = s * b;
          changed = true;
        }
      }
    }
  }
  std::size_t lead = 0;
  while (lead < c.factors.size() && c.factors[lead] == delta) ++lead;
  c.infimum += static_cast<long>(lead);
  c.factors.erase(c.factors.begin(), c.factors.begin() + static_cast<long>(lead));
  while (!c.factors.empty() && c.factors.back().is_identity()) c.factors.pop_back();
  return c;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand counts differ");
  return canonical_form(a) == canonical_form(b);
}

}  // namespace confspace
