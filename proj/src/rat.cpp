#include <cubic/errors.hpp>
#include <cubic/rat.hpp>

#include <string>

namespace cubic {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw UsageError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw UsageError("empty rational");
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw UsageError("malformed rational: " + s);
  return Rat(BigInt(num[0] == '+' ? num.substr(1) : num), BigInt(den));
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace cubic
