#include "ivgen/corpus.hpp"

#include <array>
#include <functional>
#include <map>

#include "ivgen/error.hpp"

namespace ivgen {

namespace {

struct Abstract {
  std::size_t order;
  std::function<std::size_t(std::size_t, std::size_t)> mul;
};

GeneratedGroup regular(const Abstract& a) {
  const std::size_t n = a.order;
  if (n == 1) return build_group(1, {});
  auto right_mult = [&](std::size_t g) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(a.mul(x, g));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  StabilizerChain chain(n);
  for (std::size_t g = 1; g < n && chain.order() < n; ++g) {
    Permutation p = right_mult(g);
    if (chain.extend(p)) gens.push_back(std::move(p));
  }
  return GeneratedGroup(n, std::move(gens), std::move(chain));
}

Abstract cyclic(std::size_t m) {
  return {m, [m](std::size_t x, std::size_t y) { return (x + y) % m; }};
}

Abstract direct(const Abstract& a, const Abstract& b) {
  const std::size_t nb = b.order;
  return {a.order * nb, [a, b, nb](std::size_t x, std::size_t y) {
            return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
          }};
}

/// (Z_m1 x Z_m2) : C_n where the generator of C_n acts by the integer matrix
/// [[p, q], [r, s]]: (x, y) -> (p x + q y mod m1, r x + s y mod m2).
Abstract semidirect(std::size_t m1, std::size_t m2, std::size_t n, std::array<long, 4> phi) {
  const std::size_t na = m1 * m2;
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(na));
  for (std::size_t v = 0; v < na; ++v) act[0][v] = v;
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t v = 0; v < na; ++v) {
      const auto w = static_cast<long>(act[b - 1][v]);
      const long x = w / static_cast<long>(m2);
      const long y = w % static_cast<long>(m2);
      const long nx = ((phi[0] * x + phi[1] * y) % static_cast<long>(m1) + static_cast<long>(m1)) % static_cast<long>(m1);
      const long ny = ((phi[2] * x + phi[3] * y) % static_cast<long>(m2) + static_cast<long>(m2)) % static_cast<long>(m2);
      act[b][v] = static_cast<std::size_t>(nx) * m2 + static_cast<std::size_t>(ny);
    }
  }
  return {na * n, [=](std::size_t u, std::size_t w) {
            const std::size_t b = u % n;
            const std::size_t d = w % n;
            const std::size_t v1 = u / n;
            const std::size_t v2 = act[b][w / n];
            const std::size_t x = (v1 / m2 + v2 / m2) % m1;
            const std::size_t y = (v1 % m2 + v2 % m2) % m2;
            return (x * m2 + y) * n + (b + d) % n;
          }};
}

Abstract cyclic_semidirect(std::size_t m, std::size_t n, long r) { return semidirect(m, 1, n, {r, 0, 0, 1}); }

/// Dicyclic group of order 4m: a^i b^j with a of order 2m, b^2 = a^m, a^b = a^-1.
Abstract dicyclic(std::size_t m) {
  const std::size_t a = 2 * m;
  return {2 * a, [=](std::size_t u, std::size_t w) {
            const std::size_t i = u / 2;
            const std::size_t j = u % 2;
            const std::size_t k = w / 2;
            const std::size_t l = w % 2;
            std::size_t e = j == 0 ? i + k : i + a - k;
            if (j == 1 && l == 1) e += m;
            return (e % a) * 2 + (j ^ l);
          }};
}

GeneratedGroup natural_s4() { return symmetric_group(4); }

GeneratedGroup sl2_3() {
  // SL(2,3) on the nonzero vectors of F_3^2, indexed as 3x + y - 1.
  auto mat = [](int a, int b, int c, int d) {
    std::vector<Point> images(8);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        const int nx = (a * x + b * y) % 3;
        const int ny = (c * x + d * y) % 3;
        images[static_cast<std::size_t>(3 * x + y - 1)] = static_cast<Point>(3 * nx + ny - 1);
      }
    }
    return Permutation(std::move(images));
  };
  return build_group(8, {mat(1, 1, 0, 1), mat(1, 0, 1, 1)});
}

using Builder = std::function<GeneratedGroup()>;

struct Entry {
  std::string name;
  Builder build;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v;
    auto add = [&](std::string name, Abstract a) {
      v.push_back({std::move(name), [a] { return regular(a); }});
    };
    auto dihedral = [](std::size_t m) { return cyclic_semidirect(m, 2, -1); };
    const Abstract c2 = cyclic(2);
    add("C1", cyclic(1));
    add("C2", c2);
    add("C3", cyclic(3));
    add("C4", cyclic(4));
    add("C2xC2", direct(c2, c2));
    add("C5", cyclic(5));
    add("C6", cyclic(6));
    add("S3", dihedral(3));
    add("C7", cyclic(7));
    add("C8", cyclic(8));
    add("C4xC2", direct(cyclic(4), c2));
    add("C2^3", direct(direct(c2, c2), c2));
    add("D8", dihedral(4));
    add("Q8", dicyclic(2));
    add("C9", cyclic(9));
    add("C3xC3", direct(cyclic(3), cyclic(3)));
    add("C10", cyclic(10));
    add("D10", dihedral(5));
    add("C11", cyclic(11));
    add("C12", cyclic(12));
    add("C6xC2", direct(cyclic(6), c2));
    add("D12", dihedral(6));
    add("A4", semidirect(2, 2, 3, {0, 1, 1, 1}));
    add("Dic12", dicyclic(3));
    add("C13", cyclic(13));
    add("C14", cyclic(14));
    add("D14", dihedral(7));
    add("C15", cyclic(15));
    add("C16", cyclic(16));
    add("C4xC4", direct(cyclic(4), cyclic(4)));
    add("C8xC2", direct(cyclic(8), c2));
    add("C4xC2^2", direct(direct(cyclic(4), c2), c2));
    add("C2^4", direct(direct(c2, c2), direct(c2, c2)));
    add("D16", dihedral(8));
    add("Q16", dicyclic(4));
    add("SD16", cyclic_semidirect(8, 2, 3));
    add("M16", cyclic_semidirect(8, 2, 5));
    add("C4:C4", cyclic_semidirect(4, 4, -1));
    add("D8xC2", direct(dihedral(4), c2));
    add("Q8xC2", direct(dicyclic(2), c2));
    add("(C4xC2):C2", semidirect(4, 2, 2, {1, 0, 1, 1}));
    add("C4oD8", semidirect(4, 2, 2, {1, 2, 0, 1}));
    add("C17", cyclic(17));
    add("C18", cyclic(18));
    add("C6xC3", direct(cyclic(6), cyclic(3)));
    add("D18", dihedral(9));
    add("S3xC3", direct(dihedral(3), cyclic(3)));
    add("C3^2:C2", semidirect(3, 3, 2, {-1, 0, 0, -1}));
    add("C19", cyclic(19));
    add("C20", cyclic(20));
    add("C10xC2", direct(cyclic(10), c2));
    add("D20", dihedral(10));
    add("Dic20", dicyclic(5));
    add("F20", cyclic_semidirect(5, 4, 2));
    add("C21", cyclic(21));
    add("C7:C3", cyclic_semidirect(7, 3, 2));
    add("C22", cyclic(22));
    add("D22", dihedral(11));
    add("C23", cyclic(23));
    v.push_back({"S4", natural_s4});
    add("A4xC2", direct(semidirect(2, 2, 3, {0, 1, 1, 1}), c2));
    add("D24", dihedral(12));
    v.push_back({"SL(2,3)", sl2_3});
    return v;
  }();
  return list;
}

}  // namespace

const std::vector<CorpusGroup>& corpus() {
  static const std::vector<CorpusGroup> list = [] {
    std::vector<CorpusGroup> out;
    for (const auto& e : entries()) out.push_back({e.name, e.build().order()});
    return out;
  }();
  return list;
}

GeneratedGroup corpus_group(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e.build();
  }
  throw Error(ErrorCode::not_found, "no corpus group named " + std::string(name));
}

bool is_corpus_name(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return true;
  }
  return false;
}

GeneratedGroup direct_product(const GeneratedGroup& a, const GeneratedGroup& b) {
  const std::size_t na = a.degree();
  const std::size_t n = na + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i < na ? g[i] : i);
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i < na ? i : na + g[i - na]);
    gens.push_back(Permutation::unchecked(std::move(images)));
  }
  return build_group_bounded(n, std::move(gens), a.order() * b.order());
}

GeneratedGroup regular_representation(const GeneratedGroup& group) {
  return regular({static_cast<std::size_t>(group.order()), [&group](std::size_t x, std::size_t y) {
                    return static_cast<std::size_t>(group.rank(compose(group.unrank(x), group.unrank(y))));
                  }});
}

}  // namespace ivgen
