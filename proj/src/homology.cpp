#include "ivgen/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "ivgen/error.hpp"

namespace ivgen {

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  return {p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.substr(0, 3) == "Fp:") {
    digits = text.substr(3);
  } else if (text.size() > 1 && text.front() == 'F') {
    digits = text.substr(1);
  } else {
    throw ParseError("unknown field `" + std::string(text) + "`; expected Q, F2 or Fp:<prime>");
  }
  std::uint32_t p = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, p);
  if (ec != std::errc() || ptr != end) throw ParseError("bad field characteristic in `" + std::string(text) + "`");
  return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(characteristic); }

namespace {

using Face = std::vector<std::uint32_t>;

void check_cap(std::uint64_t count, std::uint64_t cap) {
  if (count > cap) throw CapExceeded("complex has more than " + std::to_string(cap) + " faces");
}

bool lex_less(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <class T>
struct Entry {
  std::uint32_t row;
  T value;
};

struct Overflow {};

struct ModP {
  using T = std::uint32_t;
  std::uint64_t p;

  T from_sign(int s) const { return s > 0 ? 1 : static_cast<T>(p - 1); }
  T inv(T a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<T>(result);
  }
  // c <- c - (c_low / k_low) k
  void eliminate(std::vector<Entry<T>>& c, const std::vector<Entry<T>>& k, std::vector<Entry<T>>& scratch) const {
    const std::uint64_t f = std::uint64_t{c.back().value} * inv(k.back().value) % p;
    scratch.clear();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < c.size() || j < k.size()) {
      if (j == k.size() || (i < c.size() && c[i].row < k[j].row)) {
        scratch.push_back(c[i++]);
      } else {
        const std::uint64_t sub = f * k[j].value % p;
        if (i < c.size() && c[i].row == k[j].row) {
          const std::uint64_t v = (c[i].value + p - sub) % p;
          if (v) scratch.push_back({c[i].row, static_cast<T>(v)});
          ++i;
        } else {
          scratch.push_back({k[j].row, static_cast<T>((p - sub) % p)});
        }
        ++j;
      }
    }
    c.swap(scratch);
  }
};

struct Int64Ring {
  using T = std::int64_t;
  T from_sign(int s) const { return s; }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  // c <- k_low c - c_low k, then divide out the content.
  void eliminate(std::vector<Entry<T>>& c, const std::vector<Entry<T>>& k, std::vector<Entry<T>>& scratch) const {
    T a = k.back().value;
    T b = c.back().value;
    const T g = std::gcd(a, b);
    a /= g;
    b /= g;
    scratch.clear();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < c.size() || j < k.size()) {
      if (j == k.size() || (i < c.size() && c[i].row < k[j].row)) {
        scratch.push_back({c[i].row, mul(a, c[i].value)});
        ++i;
      } else {
        const T s = mul(b, k[j].value);
        if (i < c.size() && c[i].row == k[j].row) {
          const T v = sub(mul(a, c[i].value), s);
          if (v) scratch.push_back({c[i].row, v});
          ++i;
        } else {
          scratch.push_back({k[j].row, sub(0, s)});
        }
        ++j;
      }
    }
    T content = 0;
    for (const auto& e : scratch) content = std::gcd(content, e.value);
    if (content > 1) {
      for (auto& e : scratch) e.value /= content;
    }
    c.swap(scratch);
  }
};

struct BigRing {
  using T = mpz_class;
  T from_sign(int s) const { return s; }
  void eliminate(std::vector<Entry<T>>& c, const std::vector<Entry<T>>& k, std::vector<Entry<T>>& scratch) const {
    mpz_class a = k.back().value;
    mpz_class b = c.back().value;
    const mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    scratch.clear();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < c.size() || j < k.size()) {
      if (j == k.size() || (i < c.size() && c[i].row < k[j].row)) {
        scratch.push_back({c[i].row, a * c[i].value});
        ++i;
      } else {
        const mpz_class s = b * k[j].value;
        if (i < c.size() && c[i].row == k[j].row) {
          mpz_class v = a * c[i].value - s;
          if (v != 0) scratch.push_back({c[i].row, std::move(v)});
          ++i;
        } else {
          scratch.push_back({k[j].row, -s});
        }
        ++j;
      }
    }
    mpz_class content = 0;
    for (const auto& e : scratch) content = gcd(content, e.value);
    if (content > 1) {
      for (auto& e : scratch) e.value /= content;
    }
    c.swap(scratch);
  }
};

class Boundary {
 public:
  Boundary(const SimplicialComplex& k, int d) : k_(k), d_(d) {}

  std::size_t columns() const { return k_.face_count(d_); }

  /// Rows with signs, ascending by row.
  void column(std::size_t i, std::vector<std::pair<std::uint32_t, int>>& out) const {
    out.clear();
    const auto f = k_.face(d_, i);
    Face facet(f.size() - 1);
    for (std::size_t j = 0; j < f.size(); ++j) {
      std::copy(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(j), facet.begin());
      std::copy(f.begin() + static_cast<std::ptrdiff_t>(j) + 1, f.end(), facet.begin() + static_cast<std::ptrdiff_t>(j));
      auto row = k_.find_face(facet);
      if (!row) throw Error(ErrorCode::internal, "complex is not closed under faces");
      out.emplace_back(static_cast<std::uint32_t>(*row), j % 2 == 0 ? 1 : -1);
    }
    std::sort(out.begin(), out.end());
  }

 private:
  const SimplicialComplex& k_;
  int d_;
};

/// Low-pivot column reduction. Columns flagged in `skip` are known to be
/// dependent on earlier ones. Returns the pivot rows.
template <class Ring>
std::vector<std::uint32_t> reduce(const Boundary& bd, std::size_t rows, const std::vector<char>& skip, const Ring& ring) {
  using T = typename Ring::T;
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> pivot_of(rows, kNone);
  std::vector<std::vector<Entry<T>>> stored;
  std::vector<std::uint32_t> pivots;
  std::vector<std::pair<std::uint32_t, int>> raw;
  std::vector<Entry<T>> c;
  std::vector<Entry<T>> scratch;
  for (std::size_t j = 0; j < bd.columns(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    bd.column(j, raw);
    c.clear();
    for (const auto& [row, s] : raw) c.push_back({row, ring.from_sign(s)});
    while (!c.empty()) {
      const std::uint32_t k = pivot_of[c.back().row];
      if (k == kNone) break;
      ring.eliminate(c, stored[k], scratch);
    }
    if (c.empty()) continue;
    pivot_of[c.back().row] = static_cast<std::uint32_t>(stored.size());
    pivots.push_back(c.back().row);
    stored.push_back(c);
  }
  return pivots;
}

std::vector<std::uint32_t> reduce_field(const Boundary& bd, std::size_t rows, const std::vector<char>& skip,
                                        std::uint32_t characteristic) {
  if (characteristic != 0) return reduce(bd, rows, skip, ModP{characteristic});
  try {
    return reduce(bd, rows, skip, Int64Ring{});
  } catch (const Overflow&) {
    return reduce(bd, rows, skip, BigRing{});
  }
}

/// Boundary ranks r_0 .. r_dim with clearing from the top dimension down.
std::vector<std::uint64_t> boundary_ranks(const SimplicialComplex& k, std::uint32_t characteristic) {
  const int dim = k.dimension();
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(std::max(dim, -1) + 1), 0);
  if (dim < 0) return ranks;
  std::vector<char> cleared;
  for (int d = dim; d >= 1; --d) {
    const Boundary bd(k, d);
    const auto rows = static_cast<std::size_t>(k.face_count(d - 1));
    const auto pivots = reduce_field(bd, rows, cleared, characteristic);
    ranks[static_cast<std::size_t>(d)] = pivots.size();
    cleared.assign(rows, 0);
    for (auto r : pivots) cleared[r] = 1;
  }
  ranks[0] = k.face_count(0) > 0 ? 1 : 0;
  return ranks;
}

std::uint32_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(1U << 29, (1U << 30) - 1);
  for (;;) {
    const std::uint32_t p = dist(rng) | 1U;
    if (is_prime(p)) return p;
  }
}

}  // namespace

std::uint64_t SimplicialComplex::face_count(int d) const {
  if (d == -1) return 1;
  if (d < -1 || d > dimension()) return 0;
  return faces_[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(d + 1);
}

std::uint64_t SimplicialComplex::total_faces() const {
  std::uint64_t total = 1;
  for (int d = 0; d <= dimension(); ++d) total += face_count(d);
  return total;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
  std::vector<std::uint64_t> f;
  for (int d = -1; d <= dimension(); ++d) f.push_back(face_count(d));
  return f;
}

std::optional<std::size_t> SimplicialComplex::find_face(std::span<const std::uint32_t> vertices) const {
  const int d = static_cast<int>(vertices.size()) - 1;
  if (d < 0 || d > dimension()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = face_count(d);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (lex_less(face(d, mid), vertices)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < face_count(d) && std::ranges::equal(face(d, lo), vertices)) return lo;
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::assemble(std::size_t vertices, std::vector<std::vector<Face>> by_dim,
                                               std::uint64_t max_faces) {
  SimplicialComplex k;
  k.vertices_ = vertices;
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  std::uint64_t total = 1;
  for (auto& faces : by_dim) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    total += faces.size();
    check_cap(total, max_faces);
    std::vector<std::uint32_t> flat;
    flat.reserve(faces.size() * (k.faces_.size() + 1));
    for (const auto& f : faces) flat.insert(flat.end(), f.begin(), f.end());
    k.faces_.push_back(std::move(flat));
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices, const std::vector<std::vector<std::uint32_t>>& facets,
                                                 std::uint64_t max_faces) {
  std::vector<std::vector<Face>> by_dim;
  std::uint64_t generated = 0;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.empty()) continue;
    if (facet.back() >= vertices) throw InvalidArgument("facet vertex out of range");
    if (facet.size() > 24) throw CapExceeded("facet with more than 24 vertices");
    if (by_dim.size() < facet.size()) by_dim.resize(facet.size());
    const std::uint32_t subsets = 1U << facet.size();
    generated += subsets;
    check_cap(generated, 4 * max_faces);
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Face f;
      for (std::size_t i = 0; i < facet.size(); ++i) {
        if (mask >> i & 1U) f.push_back(facet[i]);
      }
      by_dim[f.size() - 1].push_back(std::move(f));
    }
  }
  return assemble(vertices, std::move(by_dim), max_faces);
}

SimplicialComplex SimplicialComplex::order_complex(const Poset& poset, std::uint64_t max_faces) {
  SimplicialComplex k;
  k.vertices_ = poset.size;
  std::uint64_t total = 1;
  std::vector<std::uint32_t> chain;
  // Depth-first extension along `above` visits chains of each length in
  // lexicographic order.
  auto extend = [&](auto&& self) -> void {
    const std::size_t d = chain.size() - 1;
    if (k.faces_.size() <= d) k.faces_.emplace_back();
    k.faces_[d].insert(k.faces_[d].end(), chain.begin(), chain.end());
    check_cap(++total, max_faces);
    for (auto w : poset.above[chain.back()]) {
      chain.push_back(w);
      self(self);
      chain.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < poset.size; ++v) {
    chain.assign(1, v);
    extend(extend);
  }
  return k;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  for (int d = -1; d <= complex.dimension(); ++d) {
    const auto f = static_cast<std::int64_t>(complex.face_count(d));
    chi += (d % 2 == 0) ? f : -f;
  }
  return chi;
}

bool BettiProfile::acyclic() const {
  return std::all_of(betti.begin(), betti.end(), [](std::uint64_t b) { return b == 0; });
}

std::int64_t BettiProfile::alternating_sum() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    const auto b = static_cast<std::int64_t>(betti[i]);
    s += (i % 2 == 1) ? b : -b;
  }
  return s;
}

namespace {

std::vector<std::uint64_t> betti_from_ranks(const SimplicialComplex& k, const std::vector<std::uint64_t>& ranks) {
  std::vector<std::uint64_t> betti;
  for (int d = -1; d <= k.dimension(); ++d) {
    const std::uint64_t rd = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
    const auto next = static_cast<std::size_t>(d + 1);
    const std::uint64_t rnext = next < ranks.size() ? ranks[next] : 0;
    betti.push_back(k.face_count(d) - rd - rnext);
  }
  return betti;
}

}  // namespace

BettiProfile reduced_betti(const SimplicialComplex& complex, Field field) {
  BettiProfile out;
  out.field = field;
  out.ranks = boundary_ranks(complex, field.characteristic);
  out.betti = betti_from_ranks(complex, out.ranks);
  out.euler = euler_characteristic(complex);
  if (field.is_rational()) {
    std::mt19937_64 rng(kDefaultSeed);
    for (int i = 0; i < 2; ++i) {
      if (boundary_ranks(complex, random_prime(rng)) != out.ranks) out.modular_agreement = false;
    }
  }
  if (out.alternating_sum() != out.euler) throw Error(ErrorCode::internal, "Betti numbers disagree with Euler characteristic");
  return out;
}

bool is_acyclic(const SimplicialComplex& complex, Field field) { return reduced_betti(complex, field).acyclic(); }

std::uint64_t boundary_rank(const SimplicialComplex& complex, int d, Field field) {
  if (d < 0 || d > complex.dimension()) return 0;
  if (d == 0) return complex.face_count(0) > 0 ? 1 : 0;
  const Boundary bd(complex, d);
  return reduce_field(bd, static_cast<std::size_t>(complex.face_count(d - 1)), {}, field.characteristic).size();
}

bool boundary_squares_to_zero(const SimplicialComplex& complex) {
  std::vector<std::pair<std::uint32_t, int>> col;
  std::vector<std::pair<std::uint32_t, int>> inner;
  for (int d = 1; d <= complex.dimension(); ++d) {
    const Boundary outer(complex, d);
    for (std::size_t j = 0; j < outer.columns(); ++j) {
      outer.column(j, col);
      std::map<std::uint32_t, long> sum;
      long augmented = 0;
      for (const auto& [row, s] : col) {
        if (d == 1) {
          augmented += s;
          continue;
        }
        Boundary(complex, d - 1).column(row, inner);
        for (const auto& [r, t] : inner) sum[r] += s * t;
      }
      if (augmented != 0) return false;
      for (const auto& [r, v] : sum) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, std::uint64_t max_faces) {
  const auto offset = static_cast<std::uint32_t>(a.vertex_count());
  const std::uint64_t total = a.total_faces() * b.total_faces();
  check_cap(total, max_faces);
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(std::max(0, a.dimension() + b.dimension() + 2)));
  for (int da = -1; da <= a.dimension(); ++da) {
    for (int db = -1; db <= b.dimension(); ++db) {
      const int d = da + db + 1;
      if (d < 0) continue;
      for (std::size_t i = 0; i < a.face_count(da); ++i) {
        for (std::size_t j = 0; j < b.face_count(db); ++j) {
          Face f;
          if (da >= 0) {
            const auto fa = a.face(da, i);
            f.assign(fa.begin(), fa.end());
          }
          if (db >= 0) {
            for (auto v : b.face(db, j)) f.push_back(v + offset);
          }
          by_dim[static_cast<std::size_t>(d)].push_back(std::move(f));
        }
      }
    }
  }
  return SimplicialComplex::assemble(a.vertex_count() + b.vertex_count(), std::move(by_dim), max_faces);
}

BettiProfile kunneth_betti(const BettiProfile& a, const BettiProfile& b) {
  if (!(a.field == b.field)) throw InvalidArgument("Betti profiles over different fields");
  BettiProfile out;
  out.field = a.field;
  out.modular_agreement = a.modular_agreement && b.modular_agreement;
  // reduced b_k(A * B) = sum over i + j = k - 1 of b_i(A) b_j(B), with i, j >= -1
  const std::size_t na = a.betti.size();
  const std::size_t nb = b.betti.size();
  out.betti.assign(na + nb > 0 ? na + nb - 1 : 0, 0);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) out.betti[i + j] += a.betti[i] * b.betti[j];
  }
  while (out.betti.size() > 1 && out.betti.back() == 0) out.betti.pop_back();
  out.euler = -a.euler * b.euler;
  return out;
}

SimplicialComplex coset_complex(const CosetPoset& poset, std::uint64_t max_faces) {
  return SimplicialComplex::order_complex(poset.poset(), max_faces);
}

}  // namespace ivgen
