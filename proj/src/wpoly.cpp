#include <cubic/errors.hpp>
#include <cubic/wpoly.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cubic {

int VarSet::weighted_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
  return d;
}

VarSet VarSet::chern() { return {{"x", "y"}, {1, 2}}; }
VarSet VarSet::roots() { return {{"a", "b"}, {1, 1}}; }

WPoly WPoly::constant(VarSet vars, const Rat& c) {
  const std::size_t k = vars.size();
  return monomial(std::move(vars), Exponents(k, 0), c);
}

WPoly WPoly::monomial(VarSet vars, Exponents e, const Rat& c) {
  if (e.size() != vars.size()) throw UsageError("exponent vector length mismatch");
  WPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

WPoly WPoly::variable(VarSet vars, std::size_t index) {
  Exponents e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(vars), std::move(e));
}

Rat WPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> WPoly::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    const int d = vars_.weighted_degree(e);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

int WPoly::max_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, vars_.weighted_degree(e));
  return best;
}

WPoly WPoly::graded_component(int d) const {
  WPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (vars_.weighted_degree(e) == d) out.terms_.emplace(e, c);
  }
  return out;
}

void WPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size()) throw UsageError("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WPoly::require_same_vars(const WPoly& o) const {
  if (!(vars_ == o.vars_)) throw UsageError("polynomials over different variable sets");
}

WPoly& WPoly::operator+=(const WPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WPoly& WPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

WPoly WPoly::operator-() const {
  WPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  a.require_same_vars(b);
  WPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

WPoly WPoly::pow(int k) const {
  if (k < 0) throw UsageError("negative power");
  WPoly out = constant(vars_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

namespace {

// Graded-lex descending: larger weighted degree first, then larger exponent
// vector lexicographically.
bool glex_before(const VarSet& vars, const Exponents& a, const Exponents& b) {
  const int da = vars.weighted_degree(a);
  const int db = vars.weighted_degree(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

std::string WPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* l, auto* r) { return glex_before(vars_, l->first, r->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars_.names[i] : vars_.names[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != Rat(1)) factors.insert(factors.begin(), mag.str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const VarSet& vars, std::string_view text) : vars_(vars) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  WPoly parse() {
    WPoly out(vars_);
    if (src_ == "0") return out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = (next() == '-');
    for (;;) {
      auto [e, c] = term();
      out.add_term(e, negative ? -c : c);
      if (pos_ == src_.size()) break;
      const char op = next();
      if (op != '+' && op != '-') fail();
      negative = op == '-';
    }
    return out;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char next() { return pos_ < src_.size() ? src_[pos_++] : '\0'; }
  [[noreturn]] void fail() const {
    throw UsageError("malformed polynomial near position " + std::to_string(pos_) + ": " + src_);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(next());
    if (out.empty()) fail();
    return out;
  }

  std::pair<Exponents, Rat> term() {
    Exponents e(vars_.size(), 0);
    Rat c(1);
    for (;;) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        if (peek() == '/') {
          next();
          num += "/" + digits();
        }
        c *= Rat::parse(num);
      } else {
        std::size_t matched = vars_.size();
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
          const auto& name = vars_.names[i];
          if (name.size() > best_len && src_.compare(pos_, name.size(), name) == 0) {
            matched = i;
            best_len = name.size();
          }
        }
        if (matched == vars_.size()) fail();
        pos_ += best_len;
        int power = 1;
        if (peek() == '^') {
          next();
          power = std::stoi(digits());
        }
        e[matched] += power;
      }
      if (peek() != '*') break;
      next();
    }
    return {e, c};
  }

  const VarSet& vars_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

WPoly WPoly::parse(const VarSet& vars, std::string_view text) { return PolyParser(vars, text).parse(); }

WPoly poly_mul(const WPoly& a, const WPoly& b) { return a * b; }

WPoly graded_component(const WPoly& p, int d) { return p.graded_component(d); }

std::vector<Exponents> monomials_of_degree(const VarSet& vars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents e(vars.size(), 0);
  // Enumerate in lexicographically descending order of exponent vectors.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == vars.size()) {
      if (remaining % vars.weights[i] == 0) {
        e[i] = remaining / vars.weights[i];
        out.push_back(e);
      }
      return;
    }
    for (int k = remaining / vars.weights[i]; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, remaining - k * vars.weights[i]);
    }
    e[i] = 0;
  };
  if (vars.size() == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace cubic
