#include "confspace/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace confspace {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto e : m) h = (h ^ e) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

long degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0L); }

}  // namespace

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const long da = degree_of(a);
  const long db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> indexed_names(std::string_view prefix, int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

MultiPoly::MultiPoly(long c) : MultiPoly(BigInt(c)) {}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.push_back(Term{{}, c});
}

MultiPoly MultiPoly::variable(std::string_view name) {
  MultiPoly p;
  p.vars_ = {std::string(name)};
  p.terms_.push_back(Term{{1}, BigInt(1)});
  return p;
}

MultiPoly MultiPoly::monomial(const BigInt& coeff,
                              const std::map<std::string, std::uint32_t>& exps) {
  std::vector<std::string> vars;
  Monomial m;
  for (const auto& [v, e] : exps) {
    vars.push_back(v);
    m.push_back(e);
  }
  return from_terms(std::move(vars), {Term{std::move(m), coeff}});
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  // sort variables, permuting exponents accordingly
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vars[order[i]] == vars[order[i - 1]]) {
      throw std::invalid_argument("duplicate variable '" + vars[order[i]] + "'");
    }
  }
  MultiPoly p;
  for (auto i : order) p.vars_.push_back(vars[i]);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exps.size() != vars.size()) throw std::invalid_argument("exponent arity mismatch");
    Monomial m(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) m[i] = t.exps[order[i]];
    p.terms_.push_back(Term{std::move(m), std::move(t.coeff)});
  }
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);

  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < t.exps.size(); ++i) used[i] = used[i] || t.exps[i] != 0;
  }
  if (std::find(used.begin(), used.end(), false) == used.end()) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  for (auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (used[i]) m.push_back(t.exps[i]);
    }
    t.exps = std::move(m);
  }
  vars_ = std::move(vars);
  // dropping all-zero columns keeps the relative grlex order
}

std::vector<std::string> MultiPoly::merged_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Term> MultiPoly::aligned_terms(const std::vector<std::string>& target) const {
  if (target == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    pos[i] = static_cast<std::size_t>(
        std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin());
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) m[pos[i]] = t.exps[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return out;
}

BigInt MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? BigInt(0) : terms_.front().coeff;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.front().exps));
}

std::uint32_t MultiPoly::degree_in(std::string_view var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[idx]);
  return d;
}

bool MultiPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return degree_of(t.exps) == d; });
}

bool MultiPoly::is_weighted_homogeneous(const std::map<std::string, int>& weights,
                                        long w) const {
  std::vector<long> wt(vars_.size(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (auto it = weights.find(vars_[i]); it != weights.end()) wt[i] = it->second;
  }
  for (const auto& t : terms_) {
    long s = 0;
    for (std::size_t i = 0; i < wt.size(); ++i) s += wt[i] * static_cast<long>(t.exps[i]);
    if (s != w) return false;
  }
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  auto vars = merged_vars(vars_, o.vars_);
  auto a = aligned_terms(vars);
  auto b = o.aligned_terms(vars);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exps, b[j].exps))) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || grlex_greater(b[j].exps, a[i].exps)) {
      out.push_back(std::move(b[j++]));
    } else {
      BigInt c = a[i].coeff + b[j].coeff;
      if (c != 0) out.push_back(Term{std::move(a[i].exps), std::move(c)});
      ++i;
      ++j;
    }
  }
  vars_ = std::move(vars);
  terms_ = std::move(out);
  normalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  auto vars = MultiPoly::merged_vars(a.vars_, b.vars_);
  auto ta = a.aligned_terms(vars);
  auto tb = b.aligned_terms(vars);
  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(ta.size() * tb.size() / 2 + 1);
  Monomial m(vars.size());
  BigInt prod;
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = x.exps[k] + y.exps[k];
      mpz_mul(prod.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      auto [it, inserted] = acc.try_emplace(m, prod);
      if (!inserted) it->second += prod;
    }
  }
  MultiPoly r;
  r.vars_ = std::move(vars);
  r.terms_.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) r.terms_.push_back(Term{mono, std::move(c)});
  }
  r.normalize();
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const BigInt& c) const {
  if (c == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return MultiPoly();
  if (b.is_constant()) return a.divided_by(b.constant_value());
  auto vars = merged_vars(a.vars_, b.vars_);
  auto tb = b.aligned_terms(vars);
  std::map<Monomial, BigInt, GrlexGreater> rem;
  for (auto& t : a.aligned_terms(vars)) rem.emplace(std::move(t.exps), std::move(t.coeff));
  const Term& lead = tb.front();
  std::vector<Term> quotient;
  BigInt qc;
  BigInt r;
  Monomial qm(vars.size());
  Monomial m(vars.size());
  while (!rem.empty()) {
    auto it = rem.begin();
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (it->first[k] < lead.exps[k]) {
        throw std::domain_error("inexact polynomial division");
      }
      qm[k] = it->first[k] - lead.exps[k];
    }
    mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact polynomial division");
    for (const auto& t : tb) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = qm[k] + t.exps[k];
      auto [pos, inserted] = rem.try_emplace(m);
      pos->second -= qc * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back(Term{qm, qc});
  }
  MultiPoly q;
  q.vars_ = std::move(vars);
  q.terms_ = std::move(quotient);
  q.normalize();
  return q;
}

MultiPoly MultiPoly::divided_by(const BigInt& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  MultiPoly r = *this;
  BigInt rem;
  for (auto& t : r.terms_) {
    mpz_fdiv_qr(t.coeff.get_mpz_t(), rem.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw std::domain_error("coefficient not divisible by " + c.get_str());
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return MultiPoly();
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& t : terms_) {
    if (t.exps[idx] == 0) continue;
    Term d{t.exps, t.coeff * t.exps[idx]};
    d.exps[idx] -= 1;
    r.terms_.push_back(std::move(d));
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  // powers cache per substituted variable
  std::vector<const MultiPoly*> img(vars_.size(), nullptr);
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  std::vector<std::string> kept_vars;
  std::vector<std::size_t> kept_idx;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (auto it = images.find(vars_[i]); it != images.end()) {
      img[i] = &it->second;
      powers[i].push_back(MultiPoly(1));
    } else {
      kept_vars.push_back(vars_[i]);
      kept_idx.push_back(i);
    }
  }
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * *img[i]);
    return powers[i][e];
  };
  MultiPoly result;
  for (const auto& t : terms_) {
    Monomial km;
    for (auto i : kept_idx) km.push_back(t.exps[i]);
    MultiPoly term = from_terms(kept_vars, {Term{std::move(km), t.coeff}});
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (img[i] != nullptr && t.exps[i] != 0) term *= power_of(i, t.exps[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::coefficient(std::string_view var, std::uint32_t e) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return e == 0 ? *this : MultiPoly();
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& t : terms_) {
    if (t.exps[idx] != e) continue;
    Term c = t;
    c.exps[idx] = 0;
    r.terms_.push_back(std::move(c));
  }
  r.normalize();
  return r;
}

BigRational MultiPoly::eval(const std::map<std::string, BigRational>& point) const {
  std::vector<const BigRational*> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) throw std::invalid_argument("unassigned variable '" + vars_[i] + "'");
    vals[i] = &it->second;
  }
  BigRational sum = 0;
  BigRational term;
  BigRational p;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (t.exps[i] == 0) continue;
      mpz_pow_ui(p.get_num_mpz_t(), vals[i]->get_num_mpz_t(), t.exps[i]);
      mpz_pow_ui(p.get_den_mpz_t(), vals[i]->get_den_mpz_t(), t.exps[i]);
      term *= p;
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

BigInt MultiPoly::eval_aligned(const std::vector<BigInt>& values) const {
  if (values.size() != vars_.size()) throw std::invalid_argument("value count mismatch");
  BigInt sum = 0;
  BigInt term;
  BigInt p;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (t.exps[i] == 0) continue;
      mpz_pow_ui(p.get_mpz_t(), values[i].get_mpz_t(), t.exps[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

BigInt MultiPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(t.exps.begin(), t.exps.end(), [](auto e) { return e == 0; });
    if (c != 1 || constant) {
      os << c.get_str();
      if (!constant) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << vars_[i];
      if (t.exps[i] > 1) os << "^" << t.exps[i];
    }
  }
  return os.str();
}

}  // namespace confspace
