#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivgen {

/// q^a (q-1)^r prod (q^b - 1) prod (q^c + 1), divided by the listed divisor factors.
struct OrderPolynomial {
  unsigned p_exponent = 0;
  unsigned torus_rank = 0;
  std::vector<unsigned> cyclic_factors;  // q^b - 1, b >= 2
  std::vector<unsigned> plus_factors;    // q^c + 1
  std::vector<unsigned> divisor_cyclic;  // divide by q^b - 1
  std::vector<unsigned> divisor_plus;    // divide by q^c + 1

  /// Multiplicity of each cyclotomic polynomial Phi_d(q).
  std::map<unsigned, int> cyclotomic() const;
  bool is_polynomial() const;
  /// Divisibility as polynomials in q.
  bool divides(const OrderPolynomial& other) const;
  /// Whether the prime r divides the value at q (q a prime power).
  bool prime_divides(std::uint64_t q, std::uint64_t r) const;
  std::string evaluate(std::uint64_t q) const;
  std::optional<std::uint64_t> evaluate_u64(std::uint64_t q) const;
  std::uint64_t evaluate_mod(std::uint64_t q, std::uint64_t m) const;
  std::string to_string() const;

  OrderPolynomial& operator*=(const OrderPolynomial& other);
  friend OrderPolynomial operator*(OrderPolynomial a, const OrderPolynomial& b) { return a *= b; }
};

/// q = p^k with p prime, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t r);
/// Phi_e(q) in decimal.
std::string cyclotomic_value(std::uint64_t q, unsigned e);

/// Primes r dividing q^e - 1 but no q^f - 1 with f < e, ascending.
std::vector<std::uint64_t> zsigmondy_primes(std::uint64_t q, unsigned e);
bool has_zsigmondy_prime(std::uint64_t q, unsigned e);
/// The least Zsigmondy prime, if one exists.
std::optional<std::uint64_t> least_zsigmondy_prime(std::uint64_t q, unsigned e);

struct LieFamily {
  std::string tag;
  unsigned min_rank = 1;
  unsigned max_rank = 0;  // 0: unbounded
  int parity = -1;        // -1 any, 0 even, 1 odd
  std::string exponent;   // expression in n
  std::string q_rule;
  std::string group;
  std::string parabolics;
  std::string source;

  bool admits_rank(unsigned n) const;
  bool admits_q(unsigned n, std::uint64_t q) const;
};

/// Rows of the bundled family table.
const std::vector<LieFamily>& lie_families();
/// The row for a family tag and rank; throws NotFound / InvalidArgument.
const LieFamily& lie_family(std::string_view tag, unsigned n);
std::vector<std::string> lie_family_tags();
std::string lie_type_name(std::string_view tag, unsigned n, std::uint64_t q);

unsigned zsigmondy_exponent(std::string_view tag, unsigned n);
OrderPolynomial group_order(std::string_view tag, unsigned n);
std::string group_order_value(std::string_view tag, unsigned n, std::uint64_t q);
/// One order polynomial per maximal parabolic, with its Levi descriptor.
std::vector<std::pair<std::string, OrderPolynomial>> maximal_parabolics(std::string_view tag, unsigned n);
/// Order of the centre of the universal group.
std::uint64_t center_order(std::string_view tag, unsigned n, std::uint64_t q);

/// |P_k| for the stabilizer of a k-space in GL_n(q).
OrderPolynomial gl_parabolic_polynomial(unsigned n, unsigned k);
std::uint64_t gl_parabolic_order(unsigned n, std::uint64_t q, unsigned k);
OrderPolynomial gl_order_polynomial(unsigned n);

struct Table2Check {
  std::string tag;
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned e = 0;
  bool exception = false;  // no Zsigmondy prime for (q, e)
  std::optional<std::uint64_t> prime;
  bool divides_group = false;
  std::vector<std::string> levis;
  std::vector<bool> avoids;  // per parabolic: the prime does not divide its order
  bool exponent_rule_agrees = true;
  bool center_avoids = true;
  bool passes = false;
};
Table2Check verify_table2_row(std::string_view tag, unsigned n, std::uint64_t q);

struct LieException {
  std::string tag;
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned e = 0;
  friend bool operator==(const LieException&, const LieException&) = default;
};
std::vector<LieException> exception_scan(std::uint64_t q_max = 128, unsigned n_max = 12, unsigned e_max = 30);

struct MersenneBorel {
  std::uint64_t p = 0;
  bool mersenne = false;
  bool simple = false;
  std::uint64_t group_order = 0;
  std::uint64_t borel_order = 0;
  bool passes = false;
};
MersenneBorel mersenne_borel_check(std::uint64_t p);

/// Square matrix over F_2 of dimension at most 16; row i is a bit mask.
class F2Matrix {
 public:
  explicit F2Matrix(unsigned dim);
  static F2Matrix identity(unsigned dim);
  /// Companion matrix of x^d + c_{d-1} x^{d-1} + ... + c_0; coefficients as bits of `low`.
  static F2Matrix companion(unsigned degree, std::uint32_t low);
  static F2Matrix block_diagonal(const F2Matrix& a, const F2Matrix& b);

  unsigned dim() const noexcept { return dim_; }
  bool at(unsigned i, unsigned j) const { return (rows_[i] >> j) & 1U; }
  void set(unsigned i, unsigned j, bool v);
  /// Row vector times matrix.
  std::uint32_t apply(std::uint32_t v) const;
  F2Matrix operator*(const F2Matrix& other) const;
  bool operator==(const F2Matrix& other) const = default;
  std::uint64_t order(std::uint64_t cap = 1'000'000) const;
  unsigned rank() const;

 private:
  unsigned dim_;
  std::vector<std::uint32_t> rows_;
};

/// All subspaces of F_2^dim (dim <= 6) as membership masks over the 2^dim vectors.
std::vector<std::uint64_t> f2_subspaces(unsigned dim);
std::vector<std::uint64_t> invariant_subspaces(const F2Matrix& m);

struct Lemma6Certificate {
  std::vector<unsigned> divisible_k;  // k with 31 | |P_k| in GL_6(2)
  std::uint64_t element_order = 0;
  std::size_t subspaces = 0;
  std::size_t invariant = 0;
  std::map<unsigned, std::size_t> invariant_by_dimension;
  bool passes = false;
};
Lemma6Certificate lemma6_certificate();

}  // namespace ivgen
