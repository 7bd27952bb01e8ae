#include "ivgen/lietype.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "ivgen/error.hpp"
#include "ivgen/group.hpp"
#include "ivgen/groupio.hpp"

namespace ivgen {

namespace {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

int mobius_mu(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

mpz_class power(std::uint64_t q, unsigned b) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, b);
  return r;
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

std::optional<std::uint64_t> to_u64(const mpz_class& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

mpz_class cyclotomic_mpz(std::uint64_t q, unsigned e) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (auto d : divisors(e)) {
    const int mu = mobius_mu(e / d);
    if (mu == 1) num *= power(q, d) - 1;
    if (mu == -1) den *= power(q, d) - 1;
  }
  return num / den;
}

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  constexpr unsigned long kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2;
    mpz_class x;
    mpz_class ys;
    mpz_class q = 1;
    mpz_class d = 1;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    for (unsigned long r = 1; d == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      for (unsigned long k = 0; k < r && d == 1; k += kBatch) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          f(y);
          q *= abs(x - y);
          q %= n;
        }
        d = gcd(q, n);
      }
    }
    if (d == n) {
      do {
        f(ys);
        d = gcd(abs(x - ys), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out.push_back(n);
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> distinct_prime_factors(const mpz_class& n) {
  std::vector<mpz_class> all;
  factor_into(n, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

/// Phi_e(q) with every prime dividing e removed.
mpz_class zsigmondy_part(std::uint64_t q, unsigned e) {
  mpz_class m = cyclotomic_mpz(q, e);
  unsigned rest = e;
  for (unsigned p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
  }
  return m;
}

}  // namespace

std::map<unsigned, int> OrderPolynomial::cyclotomic() const {
  std::map<unsigned, int> m;
  if (torus_rank) m[1] += static_cast<int>(torus_rank);
  auto minus = [&](unsigned b, int sign) {
    for (auto d : divisors(b)) m[d] += sign;
  };
  auto plus = [&](unsigned c, int sign) {
    for (auto d : divisors(2 * c)) {
      if (c % d) m[d] += sign;
    }
  };
  for (auto b : cyclic_factors) minus(b, 1);
  for (auto c : plus_factors) plus(c, 1);
  for (auto b : divisor_cyclic) minus(b, -1);
  for (auto c : divisor_plus) plus(c, -1);
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

bool OrderPolynomial::is_polynomial() const {
  const auto m = cyclotomic();
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second > 0; });
}

bool OrderPolynomial::divides(const OrderPolynomial& other) const {
  if (p_exponent > other.p_exponent) return false;
  const auto mine = cyclotomic();
  const auto theirs = other.cyclotomic();
  for (const auto& [d, k] : mine) {
    const auto it = theirs.find(d);
    if (k > (it == theirs.end() ? 0 : it->second)) return false;
  }
  return true;
}

bool OrderPolynomial::prime_divides(std::uint64_t q, std::uint64_t r) const {
  const auto pp = prime_power(q);
  if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (r == pp->first) return p_exponent > 0;
  const std::uint64_t e = multiplicative_order(q, r);
  for (const auto& [d, k] : cyclotomic()) {
    if (k <= 0 || d % e) continue;
    std::uint64_t t = d / e;
    while (t % r == 0) t /= r;
    if (t == 1) return true;
  }
  return false;
}

namespace {

mpz_class evaluate_mpz(const OrderPolynomial& f, std::uint64_t q) {
  mpz_class num = power(q, f.p_exponent);
  mpz_class den = 1;
  mpz_class torus = to_mpz(q) - 1;
  for (unsigned i = 0; i < f.torus_rank; ++i) num *= torus;
  for (auto b : f.cyclic_factors) num *= power(q, b) - 1;
  for (auto c : f.plus_factors) num *= power(q, c) + 1;
  for (auto b : f.divisor_cyclic) den *= power(q, b) - 1;
  for (auto c : f.divisor_plus) den *= power(q, c) + 1;
  if (den == 0 || num % den != 0) throw InvalidArgument("order polynomial is not integral at q = " + std::to_string(q));
  return num / den;
}

}  // namespace

std::string OrderPolynomial::evaluate(std::uint64_t q) const { return evaluate_mpz(*this, q).get_str(); }

std::optional<std::uint64_t> OrderPolynomial::evaluate_u64(std::uint64_t q) const { return to_u64(evaluate_mpz(*this, q)); }

std::uint64_t OrderPolynomial::evaluate_mod(std::uint64_t q, std::uint64_t m) const {
  const mpz_class r = evaluate_mpz(*this, q) % to_mpz(m);
  return *to_u64(r);
}

std::string OrderPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto put = [&](const std::string& s) {
    if (!first) out << ' ';
    out << s;
    first = false;
  };
  if (p_exponent) put("q^" + std::to_string(p_exponent));
  if (torus_rank) put(torus_rank == 1 ? "(q-1)" : "(q-1)^" + std::to_string(torus_rank));
  for (auto b : cyclic_factors) put("(q^" + std::to_string(b) + "-1)");
  for (auto c : plus_factors) put(c == 1 ? "(q+1)" : "(q^" + std::to_string(c) + "+1)");
  for (auto b : divisor_cyclic) put("/(q^" + std::to_string(b) + "-1)");
  for (auto c : divisor_plus) put(c == 1 ? "/(q+1)" : "/(q^" + std::to_string(c) + "+1)");
  if (first) return "1";
  return out.str();
}

OrderPolynomial& OrderPolynomial::operator*=(const OrderPolynomial& other) {
  p_exponent += other.p_exponent;
  torus_rank += other.torus_rank;
  auto append = [](std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end(), std::greater<>());
  };
  append(cyclic_factors, other.cyclic_factors);
  append(plus_factors, other.plus_factors);
  append(divisor_cyclic, other.divisor_cyclic);
  append(divisor_plus, other.divisor_plus);
  return *this;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, k);
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t r) {
  const mpz_class rr = to_mpz(r);
  const mpz_class qq = to_mpz(q) % rr;
  if (qq == 0) throw InvalidArgument(std::to_string(r) + " divides " + std::to_string(q));
  mpz_class order = rr - 1;
  for (const auto& p : distinct_prime_factors(order)) {
    while (order % p == 0) {
      const mpz_class candidate = order / p;
      mpz_class v;
      mpz_powm(v.get_mpz_t(), qq.get_mpz_t(), candidate.get_mpz_t(), rr.get_mpz_t());
      if (v != 1) break;
      order = candidate;
    }
  }
  return *to_u64(order);
}

std::string cyclotomic_value(std::uint64_t q, unsigned e) {
  if (e == 0) throw InvalidArgument("cyclotomic index must be positive");
  return cyclotomic_mpz(q, e).get_str();
}

std::vector<std::uint64_t> zsigmondy_primes(std::uint64_t q, unsigned e) {
  if (q < 2 || e == 0) throw InvalidArgument("need q >= 2 and e >= 1");
  std::vector<std::uint64_t> out;
  for (const auto& r : distinct_prime_factors(zsigmondy_part(q, e))) {
    const auto v = to_u64(r);
    if (!v) throw CapExceeded("Zsigmondy prime " + r.get_str() + " exceeds 64 bits");
    out.push_back(*v);
  }
  return out;
}

bool has_zsigmondy_prime(std::uint64_t q, unsigned e) {
  if (q < 2 || e == 0) throw InvalidArgument("need q >= 2 and e >= 1");
  return zsigmondy_part(q, e) > 1;
}

std::optional<std::uint64_t> least_zsigmondy_prime(std::uint64_t q, unsigned e) {
  if (!has_zsigmondy_prime(q, e)) return std::nullopt;
  return zsigmondy_primes(q, e).front();
}

// ---------------------------------------------------------------------------
// Family table

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

/// Integer expressions in n and k: + - * / and parentheses.
class Expr {
 public:
  Expr(std::string_view text, long n, long k) : s_(text), n_(n), k_(k) {}

  long value() {
    const long v = sum();
    skip();
    if (pos_ != s_.size()) fail();
    return v;
  }

 private:
  [[noreturn]] void fail() const { throw ParseError("bad expression `" + std::string(s_) + "`"); }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  long sum() {
    long v = product();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const char op = s_[pos_++];
        const long w = product();
        v = op == '+' ? v + w : v - w;
      } else {
        return v;
      }
    }
  }
  long product() {
    long v = atom();
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        const char op = s_[pos_++];
        const long w = atom();
        if (op == '/' && w == 0) fail();
        v = op == '*' ? v * w : v / w;
      } else {
        return v;
      }
    }
  }
  long atom() {
    skip();
    if (pos_ >= s_.size()) fail();
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      const long v = sum();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail();
      ++pos_;
      return v;
    }
    if (c == 'n' || c == 'k') {
      ++pos_;
      return c == 'n' ? n_ : k_;
    }
    long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail();
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  long n_;
  long k_;
};

long eval_expr(std::string_view text, long n, long k = 0) { return Expr(text, n, k).value(); }

struct TypeData {
  std::string_view name;
  std::vector<unsigned> minus;
  std::vector<unsigned> plus;
  std::vector<unsigned> div_minus;
  unsigned torus = 0;
  unsigned positive_roots = 0;
};

const std::vector<TypeData>& fixed_types() {
  static const std::vector<TypeData> t{
      {"G2", {2, 6}, {}, {}, 0, 6},
      {"F4", {2, 6, 8, 12}, {}, {}, 0, 24},
      {"E6", {2, 5, 6, 8, 9, 12}, {}, {}, 0, 36},
      {"E7", {2, 6, 8, 10, 12, 14, 18}, {}, {}, 0, 63},
      {"E8", {2, 8, 12, 14, 18, 20, 24, 30}, {}, {}, 0, 120},
      {"3D4", {2, 6, 12}, {}, {4}, 0, 12},
      {"2B2", {}, {2}, {}, 1, 2},
      {"2G2", {}, {3}, {}, 1, 3},
      {"2F4", {4}, {3, 6}, {}, 1, 12},
      {"2E6", {2, 6, 8, 12}, {5, 9}, {}, 0, 36},
  };
  return t;
}

void add_minus(OrderPolynomial& f, unsigned b) {
  if (b == 1) {
    ++f.torus_rank;
  } else {
    f.cyclic_factors.push_back(b);
  }
}

/// p'-part of one descriptor term; `roots` receives the positive-root count.
OrderPolynomial term_polynomial(std::string_view term, long n, long k, unsigned* roots) {
  OrderPolynomial f;
  unsigned field = 1;
  if (const auto at = term.find('@'); at != std::string_view::npos) {
    field = static_cast<unsigned>(eval_expr(term.substr(at + 1), n, k));
    term = trim(term.substr(0, at));
  }
  bool divide = false;
  if (!term.empty() && term.front() == '/') {
    divide = true;
    term = trim(term.substr(1));
  }
  unsigned r = 0;
  if (term.substr(0, 3) == "(q^" || term == "(q-1)" || term == "(q+1)") {
    // (q^b-1) or (q^b+1)
    const auto inner = term.substr(1, term.size() - 2);
    const auto sign_pos = inner.find_last_of("+-");
    if (sign_pos == std::string_view::npos || inner.substr(sign_pos + 1) != "1") {
      throw ParseError("bad factor `" + std::string(term) + "`");
    }
    const auto base = inner.substr(0, sign_pos);
    const unsigned b = base == "q" ? 1 : static_cast<unsigned>(eval_expr(base.substr(2), n, k));
    if (inner[sign_pos] == '-') {
      add_minus(f, b);
    } else {
      f.plus_factors.push_back(b);
    }
  } else {
    const auto bracket = term.find('[');
    const auto name = bracket == std::string_view::npos ? term : term.substr(0, bracket);
    long m = 0;
    if (bracket != std::string_view::npos) {
      if (term.back() != ']') throw ParseError("bad term `" + std::string(term) + "`");
      m = eval_expr(term.substr(bracket + 1, term.size() - bracket - 2), n, k);
      if (m < 0) throw ParseError("negative rank in `" + std::string(term) + "`");
    }
    const auto mu = static_cast<unsigned>(m);
    if (name == "A") {
      for (unsigned i = 2; i <= mu + 1; ++i) add_minus(f, i);
      r = mu * (mu + 1) / 2;
    } else if (name == "B" || name == "C") {
      for (unsigned i = 1; i <= mu; ++i) add_minus(f, 2 * i);
      r = mu * mu;
    } else if (name == "D") {
      if (mu == 1) throw ParseError("D[1] is not a root system");
      for (unsigned i = 1; i + 1 <= mu; ++i) add_minus(f, 2 * i);
      if (mu >= 2) add_minus(f, mu);
      r = mu * (mu - (mu > 0 ? 1 : 0));
    } else if (name == "2A") {
      for (unsigned i = 2; i <= mu + 1; ++i) {
        if (i % 2 == 0) {
          add_minus(f, i);
        } else {
          f.plus_factors.push_back(i);
        }
      }
      r = mu * (mu + 1) / 2;
    } else if (name == "2D") {
      for (unsigned i = 1; i + 1 <= mu; ++i) add_minus(f, 2 * i);
      if (mu >= 1) f.plus_factors.push_back(mu);
      r = mu * (mu - (mu > 0 ? 1 : 0));
    } else if (name == "GL") {
      for (unsigned i = 1; i <= mu; ++i) add_minus(f, i);
    } else if (name == "GU") {
      for (unsigned i = 1; i <= mu; ++i) {
        if (i % 2 == 0) {
          add_minus(f, i);
        } else {
          f.plus_factors.push_back(i);
        }
      }
    } else {
      const auto& types = fixed_types();
      const auto it = std::find_if(types.begin(), types.end(), [&](const TypeData& t) { return t.name == name; });
      if (it == types.end()) throw ParseError("unknown type `" + std::string(name) + "`");
      for (auto b : it->minus) add_minus(f, b);
      f.plus_factors = it->plus;
      f.divisor_cyclic = it->div_minus;
      f.torus_rank += it->torus;
      r = it->positive_roots;
    }
  }
  if (field != 1) {
    OrderPolynomial g;
    for (unsigned i = 0; i < f.torus_rank; ++i) add_minus(g, field);
    for (auto b : f.cyclic_factors) add_minus(g, b * field);
    for (auto c : f.plus_factors) g.plus_factors.push_back(c * field);
    for (auto b : f.divisor_cyclic) g.divisor_cyclic.push_back(b * field);
    for (auto c : f.divisor_plus) g.divisor_plus.push_back(c * field);
    f = g;
    r *= field;
  }
  if (divide) {
    OrderPolynomial g;
    g.divisor_cyclic = f.cyclic_factors;
    for (unsigned i = 0; i < f.torus_rank; ++i) g.divisor_cyclic.push_back(1);
    g.divisor_plus = f.plus_factors;
    g.cyclic_factors = f.divisor_cyclic;
    g.plus_factors = f.divisor_plus;
    f = g;
  }
  if (roots) *roots = r;
  return f;
}

OrderPolynomial descriptor_polynomial(std::string_view text, long n, long k, unsigned* roots = nullptr) {
  OrderPolynomial f;
  unsigned total = 0;
  std::vector<std::string> terms;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '+' && depth == 0) {
      terms.emplace_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  terms.emplace_back(trim(current));
  for (const auto& t : terms) {
    unsigned r = 0;
    f *= term_polynomial(t, n, k, &r);
    total += r;
  }
  std::sort(f.cyclic_factors.begin(), f.cyclic_factors.end(), std::greater<>());
  if (roots) *roots = total;
  return f;
}

std::vector<LieFamily> parse_families(std::string_view text) {
  std::vector<LieFamily> out;
  for (auto line : split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split(line, '|');
    if (cols.size() != 7) throw ParseError("family table row needs 7 columns: " + std::string(line));
    LieFamily f;
    f.tag = cols[0];
    auto ranks = cols[1];
    if (const auto colon = ranks.find(':'); colon != std::string_view::npos) {
      f.parity = ranks.substr(colon + 1) == "even" ? 0 : 1;
      ranks = ranks.substr(0, colon);
    }
    if (const auto dots = ranks.find(".."); dots != std::string_view::npos) {
      f.min_rank = static_cast<unsigned>(eval_expr(ranks.substr(0, dots), 0));
      const auto hi = trim(ranks.substr(dots + 2));
      f.max_rank = hi.empty() ? 0 : static_cast<unsigned>(eval_expr(hi, 0));
    } else {
      f.min_rank = f.max_rank = static_cast<unsigned>(eval_expr(ranks, 0));
    }
    f.exponent = cols[2];
    f.q_rule = cols[3];
    f.group = cols[4];
    f.parabolics = cols[5];
    f.source = cols[6];
    out.push_back(std::move(f));
  }
  return out;
}

bool is_odd_power(std::uint64_t q, std::uint64_t p, unsigned min_exponent) {
  const auto pp = prime_power(q);
  return pp && pp->first == p && pp->second % 2 == 1 && pp->second >= min_exponent;
}

}  // namespace

bool LieFamily::admits_rank(unsigned n) const {
  if (n < min_rank || (max_rank && n > max_rank)) return false;
  return parity < 0 || static_cast<int>(n % 2) == parity;
}

bool LieFamily::admits_q(unsigned n, std::uint64_t q) const {
  if (!prime_power(q)) return false;
  if (q_rule == "any") return true;
  if (q_rule == "a1") return n != 1 || q >= 4;
  if (q_rule == "2^odd") return is_odd_power(q, 2, 3);
  if (q_rule == "2^odd0") return is_odd_power(q, 2, 1);
  if (q_rule == "3^odd") return is_odd_power(q, 3, 3);
  throw ParseError("unknown q rule " + q_rule);
}

const std::vector<LieFamily>& lie_families() {
  static const std::vector<LieFamily> families = parse_families(bundled_data("lie_families"));
  return families;
}

const LieFamily& lie_family(std::string_view tag, unsigned n) {
  bool known = false;
  for (const auto& f : lie_families()) {
    if (f.tag != tag) continue;
    known = true;
    if (f.admits_rank(n)) return f;
  }
  if (!known) throw Error(ErrorCode::not_found, "unknown Lie family " + std::string(tag));
  throw InvalidArgument("rank " + std::to_string(n) + " is not allowed for family " + std::string(tag));
}

std::vector<std::string> lie_family_tags() {
  std::vector<std::string> out;
  for (const auto& f : lie_families()) {
    if (std::find(out.begin(), out.end(), f.tag) == out.end()) out.push_back(f.tag);
  }
  return out;
}

std::string lie_type_name(std::string_view tag, unsigned n, std::uint64_t q) {
  const std::string qs = "(" + std::to_string(q) + ")";
  const std::string t(tag);
  if (t == "A+" || t == "A-" || t == "D+" || t == "D-") return t.substr(0, 1) + std::to_string(n) + t.substr(1) + qs;
  if (t == "B" || t == "C") return t + std::to_string(n) + qs;
  return t + qs;
}

unsigned zsigmondy_exponent(std::string_view tag, unsigned n) {
  return static_cast<unsigned>(eval_expr(lie_family(tag, n).exponent, n));
}

OrderPolynomial group_order(std::string_view tag, unsigned n) {
  unsigned roots = 0;
  OrderPolynomial f = descriptor_polynomial(lie_family(tag, n).group, n, 0, &roots);
  f.p_exponent = roots;
  return f;
}

std::string group_order_value(std::string_view tag, unsigned n, std::uint64_t q) {
  if (!lie_family(tag, n).admits_q(n, q)) throw InvalidArgument("q = " + std::to_string(q) + " not allowed here");
  return group_order(tag, n).evaluate(q);
}

std::vector<std::pair<std::string, OrderPolynomial>> maximal_parabolics(std::string_view tag, unsigned n) {
  const auto& family = lie_family(tag, n);
  const unsigned roots = group_order(tag, n).p_exponent;
  std::vector<std::pair<std::string, OrderPolynomial>> out;
  auto add = [&](std::string_view desc, long k) {
    OrderPolynomial f = descriptor_polynomial(desc, n, k);
    f.p_exponent = roots;
    std::string label(desc);
    if (desc.find('k') != std::string_view::npos) label = "k=" + std::to_string(k) + ": " + label;
    out.emplace_back(std::move(label), std::move(f));
  };
  for (auto clause : split(family.parabolics, ';')) {
    const auto colon = clause.find(':');
    if (clause.substr(0, 2) == "k=" && colon != std::string_view::npos) {
      const auto range = clause.substr(2, colon - 2);
      const auto dots = range.find("..");
      if (dots == std::string_view::npos) throw ParseError("bad range in " + std::string(clause));
      const long lo = eval_expr(range.substr(0, dots), n);
      const long hi = eval_expr(range.substr(dots + 2), n);
      for (long k = lo; k <= hi; ++k) add(trim(clause.substr(colon + 1)), k);
    } else {
      add(clause, 0);
    }
  }
  return out;
}

std::uint64_t center_order(std::string_view tag, unsigned n, std::uint64_t q) {
  auto pow_mod = [](std::uint64_t b, unsigned e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (unsigned i = 0; i < e; ++i) r = r * (b % m) % m;
    return r;
  };
  const std::string t(tag);
  if (t == "A+") return std::gcd<std::uint64_t>(n + 1, q - 1);
  if (t == "A-") return std::gcd<std::uint64_t>(n + 1, q + 1);
  if (t == "B" || t == "C" || t == "E7") return std::gcd<std::uint64_t>(2, q - 1);
  if (t == "D+") return std::gcd<std::uint64_t>(4, (pow_mod(q, n, 4) + 3) % 4);
  if (t == "D-") return std::gcd<std::uint64_t>(4, (pow_mod(q, n, 4) + 1) % 4);
  if (t == "E6+") return std::gcd<std::uint64_t>(3, q - 1);
  if (t == "E6-") return std::gcd<std::uint64_t>(3, q + 1);
  return 1;
}

OrderPolynomial gl_order_polynomial(unsigned n) {
  OrderPolynomial f = descriptor_polynomial("GL[n]", n, 0);
  f.p_exponent = n * (n - 1) / 2;
  return f;
}

OrderPolynomial gl_parabolic_polynomial(unsigned n, unsigned k) {
  if (k < 1 || k >= n) throw InvalidArgument("need 1 <= k <= n - 1");
  OrderPolynomial f = descriptor_polynomial("GL[k] + GL[n-k]", n, k);
  f.p_exponent = n * (n - 1) / 2;
  return f;
}

std::uint64_t gl_parabolic_order(unsigned n, std::uint64_t q, unsigned k) {
  const auto v = gl_parabolic_polynomial(n, k).evaluate_u64(q);
  if (!v) throw CapExceeded("parabolic order exceeds 64 bits");
  return *v;
}

Table2Check verify_table2_row(std::string_view tag, unsigned n, std::uint64_t q) {
  const auto& family = lie_family(tag, n);
  if (!family.admits_q(n, q)) throw InvalidArgument("q = " + std::to_string(q) + " not allowed for " + std::string(tag));
  Table2Check out;
  out.tag = tag;
  out.n = n;
  out.q = q;
  out.e = zsigmondy_exponent(tag, n);
  out.prime = least_zsigmondy_prime(q, out.e);
  const auto parabolics = maximal_parabolics(tag, n);
  for (const auto& [label, poly] : parabolics) out.levis.push_back(label);
  if (!out.prime) {
    out.exception = true;
    return out;
  }
  const std::uint64_t r = *out.prime;
  const OrderPolynomial g = group_order(tag, n);
  const mpz_class gv = evaluate_mpz(g, q);
  out.divides_group = g.prime_divides(q, r);
  out.exponent_rule_agrees = out.divides_group == (gv % to_mpz(r) == 0);
  bool structure = true;
  for (const auto& [label, poly] : parabolics) {
    const bool hit = poly.prime_divides(q, r);
    const mpz_class pv = evaluate_mpz(poly, q);
    out.exponent_rule_agrees = out.exponent_rule_agrees && hit == (pv % to_mpz(r) == 0);
    out.avoids.push_back(!hit);
    structure = structure && poly.divides(g) && gv % pv == 0 && (gv / pv) % to_mpz(q) == 1;
  }
  out.center_avoids = center_order(tag, n, q) % r != 0;
  out.passes = structure && out.divides_group && out.exponent_rule_agrees && out.center_avoids &&
               std::all_of(out.avoids.begin(), out.avoids.end(), [](bool b) { return b; });
  return out;
}

std::vector<LieException> exception_scan(std::uint64_t q_max, unsigned n_max, unsigned e_max) {
  std::vector<LieException> out;
  for (const auto& family : lie_families()) {
    const unsigned hi = family.max_rank ? std::min(family.max_rank, n_max) : n_max;
    for (unsigned n = family.min_rank; n <= hi; ++n) {
      if (!family.admits_rank(n)) continue;
      const auto e = static_cast<unsigned>(eval_expr(family.exponent, n));
      if (e > e_max) continue;
      for (std::uint64_t q = 2; q <= q_max; ++q) {
        if (!family.admits_q(n, q)) continue;
        if (!has_zsigmondy_prime(q, e)) out.push_back({family.tag, n, q, e});
      }
    }
  }
  return out;
}

MersenneBorel mersenne_borel_check(std::uint64_t p) {
  MersenneBorel out;
  out.p = p;
  out.mersenne = p >= 3 && is_prime(p) && std::has_single_bit(p + 1);
  if (!out.mersenne) throw InvalidArgument(std::to_string(p) + " is not a Mersenne prime");
  out.simple = p >= 5;
  out.group_order = p * (p * p - 1) / 2;
  out.borel_order = p * (p - 1) / 2;
  out.passes = out.simple && out.group_order % 2 == 0 && out.borel_order % 2 == 1;
  return out;
}

// ---------------------------------------------------------------------------
// F_2 linear algebra

F2Matrix::F2Matrix(unsigned dim) : dim_(dim), rows_(dim, 0) {
  if (dim == 0 || dim > 16) throw InvalidArgument("F2 matrices have dimension 1..16");
}

F2Matrix F2Matrix::identity(unsigned dim) {
  F2Matrix m(dim);
  for (unsigned i = 0; i < dim; ++i) m.rows_[i] = 1U << i;
  return m;
}

F2Matrix F2Matrix::companion(unsigned degree, std::uint32_t low) {
  F2Matrix m(degree);
  for (unsigned i = 0; i + 1 < degree; ++i) m.rows_[i] = 1U << (i + 1);
  m.rows_[degree - 1] = low & ((1U << degree) - 1);
  return m;
}

F2Matrix F2Matrix::block_diagonal(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix m(a.dim_ + b.dim_);
  for (unsigned i = 0; i < a.dim_; ++i) m.rows_[i] = a.rows_[i];
  for (unsigned i = 0; i < b.dim_; ++i) m.rows_[a.dim_ + i] = b.rows_[i] << a.dim_;
  return m;
}

void F2Matrix::set(unsigned i, unsigned j, bool v) {
  if (v) {
    rows_[i] |= 1U << j;
  } else {
    rows_[i] &= ~(1U << j);
  }
}

std::uint32_t F2Matrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < dim_; ++i) {
    if ((v >> i) & 1U) out ^= rows_[i];
  }
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (dim_ != other.dim_) throw DegreeMismatch("matrix dimensions differ");
  F2Matrix m(dim_);
  for (unsigned i = 0; i < dim_; ++i) m.rows_[i] = other.apply(rows_[i]);
  return m;
}

std::uint64_t F2Matrix::order(std::uint64_t cap) const {
  if (rank() != dim_) throw InvalidArgument("matrix is singular");
  const F2Matrix id = identity(dim_);
  F2Matrix x = *this;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = x * *this;
  }
  throw CapExceeded("matrix order exceeds " + std::to_string(cap));
}

unsigned F2Matrix::rank() const {
  std::vector<std::uint32_t> rows = rows_;
  unsigned r = 0;
  for (unsigned col = 0; col < dim_; ++col) {
    const auto it = std::find_if(rows.begin() + r, rows.end(), [col](std::uint32_t v) { return (v >> col) & 1U; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + r, it);
    for (unsigned i = 0; i < dim_; ++i) {
      if (i != r && ((rows[i] >> col) & 1U)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

std::vector<std::uint64_t> f2_subspaces(unsigned dim) {
  if (dim == 0 || dim > 6) throw InvalidArgument("subspace enumeration needs 1 <= dim <= 6");
  const unsigned vectors = 1U << dim;
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier) {
      for (unsigned v = 1; v < vectors; ++v) {
        if ((s >> v) & 1U) continue;
        std::uint64_t bigger = s;
        for (unsigned u = 0; u < vectors; ++u) {
          if ((s >> u) & 1U) bigger |= std::uint64_t{1} << (u ^ v);
        }
        if (seen.insert(bigger).second) next.push_back(bigger);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::uint64_t> invariant_subspaces(const F2Matrix& m) {
  std::vector<std::uint64_t> out;
  const unsigned vectors = 1U << m.dim();
  for (auto s : f2_subspaces(m.dim())) {
    bool invariant = true;
    for (unsigned u = 0; u < vectors && invariant; ++u) {
      if ((s >> u) & 1U) invariant = (s >> m.apply(u)) & 1U;
    }
    if (invariant) out.push_back(s);
  }
  return out;
}

Lemma6Certificate lemma6_certificate() {
  Lemma6Certificate out;
  for (unsigned k = 1; k <= 5; ++k) {
    if (gl_parabolic_order(6, 2, k) % 31 == 0) out.divisible_k.push_back(k);
  }
  // x^3 + x + 1 on both blocks
  const F2Matrix block = F2Matrix::companion(3, 0b011);
  const F2Matrix g = F2Matrix::block_diagonal(block, block);
  out.element_order = g.order();
  out.subspaces = f2_subspaces(6).size();
  const auto inv = invariant_subspaces(g);
  out.invariant = inv.size();
  for (auto s : inv) ++out.invariant_by_dimension[static_cast<unsigned>(std::countr_zero(static_cast<unsigned>(std::popcount(s))))];
  bool dims_ok = true;
  for (const auto& [d, count] : out.invariant_by_dimension) dims_ok = dims_ok && (d == 0 || d == 3 || d == 6);
  out.passes = out.divisible_k == std::vector<unsigned>{1, 5} && out.element_order == 7 && dims_ok;
  return out;
}

}  // namespace ivgen
