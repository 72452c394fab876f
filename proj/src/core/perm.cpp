#include "confspace/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace confspace {

Perm::Perm(int k) : img_(static_cast<std::size_t>(k)) {
  std::iota(img_.begin(), img_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
  Perm result(k);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    Perm cyc(k);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > k) throw std::invalid_argument("cycle entry out of range");
      cyc.img_[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
    }
    result = cyc * result;
  }
  // validates repeated entries inside a cycle
  return from_images(result.img_);
}

Perm Perm::transposition(int k, int a, int b) { return from_cycles(k, {{a, b}}); }

Perm Perm::parse(const std::string& text, int k) {
  if (text.find('(') != std::string::npos) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> cur;
    std::string num;
    auto flush = [&] {
      if (!num.empty()) cur.push_back(std::stoi(num));
      num.clear();
    };
    for (char ch : text) {
      if (ch == '(') {
        cur.clear();
      } else if (ch == ')') {
        flush();
        cycles.push_back(cur);
      } else if (ch == ',' || ch == ' ') {
        flush();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        num += ch;
      } else {
        throw std::invalid_argument("bad permutation text: " + text);
      }
    }
    return from_cycles(k, cycles);
  }
  std::istringstream in(text);
  std::vector<int> img;
  int v;
  while (in >> v) img.push_back(v);
  if (!in.eof()) throw std::invalid_argument("bad permutation text: " + text);
  return from_images(img);
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    r.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int s = 1; s <= degree(); ++s) {
    if (seen[static_cast<std::size_t>(s - 1)]) continue;
    std::vector<int> c;
    for (int x = s; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      c.push_back(x);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  int covered = 0;
  for (const auto& c : cycles()) {
    t.push_back(static_cast<int>(c.size()));
    covered += static_cast<int>(c.size());
  }
  for (int i = covered; i < degree(); ++i) t.push_back(1);
  std::sort(t.rbegin(), t.rend());
  return t;
}

long Perm::order() const {
  long o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<long>(len));
  return o;
}

bool Perm::is_even() const {
  int parity = 0;
  for (const auto& c : cycles()) parity += static_cast<int>(c.size()) - 1;
  return parity % 2 == 0;
}

std::string Perm::one_line() const {
  std::string s;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i]);
  }
  return s;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  Perm r;
  r.img_.resize(q.img_.size());
  for (std::size_t i = 0; i < q.img_.size(); ++i) r.img_[i] = p(q.img_[i]);
  return r;
}

Perm conjugate(const Perm& p, const Perm& c) { return c * p * c.inverse(); }

std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 1);
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}

}  // namespace confspace
