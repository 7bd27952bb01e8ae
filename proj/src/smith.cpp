#include "ivgen/smith.hpp"

#include <algorithm>

#include "ivgen/error.hpp"

namespace ivgen {

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint32_t> table_indices(const GroupTable& t, std::span<const Permutation> gens) {
  std::vector<std::uint32_t> out;
  for (const auto& g : gens) {
    if (!t.group().contains(g)) throw NotMember("element " + g.to_string() + " is not in the group");
    out.push_back(t.index_of(g));
  }
  return out;
}

}  // namespace

std::uint32_t act_on_coset(const CosetPoset& poset, std::uint32_t i, std::uint32_t g, std::uint32_t k) {
  const auto& lat = poset.lattice();
  const auto& t = lat.table();
  const Coset& c = poset.at(i);
  const std::size_t h = lat.conjugate(c.subgroup, g);
  const std::uint32_t y = t.mul(t.mul(t.inverse(g), c.representative), k);
  const auto image = poset.index_of(h, y);
  if (!image) throw InvalidArgument("coset poset is not invariant under the action");
  return *image;
}

IndexAction two_sided_action(const CosetPoset& poset, std::size_t c_subgroup, std::size_t p_subgroup) {
  const auto& lat = poset.lattice();
  const auto& t = lat.table();
  IndexAction action;
  action.size = poset.size();
  action.acting_order = lat.subgroups()[c_subgroup].order * lat.subgroups()[p_subgroup].order;
  auto add = [&](std::uint32_t g, std::uint32_t k) {
    std::vector<std::uint32_t> images(poset.size());
    for (std::uint32_t i = 0; i < poset.size(); ++i) images[i] = act_on_coset(poset, i, g, k);
    action.generators.push_back(std::move(images));
  };
  for (auto g : lat.subgroups()[c_subgroup].generators) add(g, t.identity());
  for (auto k : lat.subgroups()[p_subgroup].generators) add(t.identity(), k);
  return action;
}

bool is_order_preserving(const Poset& poset, const IndexAction& action) {
  for (const auto& img : action.generators) {
    for (std::uint32_t a = 0; a < poset.size; ++a) {
      for (auto b : poset.above[a]) {
        if (!poset.leq(img[a], img[b]) || img[a] == img[b]) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint32_t> fixed_points(const IndexAction& action) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < action.size; ++i) {
    if (std::all_of(action.generators.begin(), action.generators.end(), [i](const auto& img) { return img[i] == i; })) {
      out.push_back(i);
    }
  }
  return out;
}

Poset fixed_subposet(const Poset& poset, const IndexAction& action) {
  if (action.size != poset.size) throw InvalidArgument("action and poset sizes differ");
  if (!is_order_preserving(poset, action)) throw InvalidArgument("action does not preserve the order");
  const auto keep = fixed_points(action);
  return induced_subposet(poset, keep);
}

std::vector<std::uint32_t> fixed_cosets_by_inclusion(const CosetPoset& poset, std::size_t c_subgroup, std::size_t p_subgroup) {
  const auto& lat = poset.lattice();
  const auto& t = lat.table();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < poset.size(); ++i) {
    const Coset& c = poset.at(i);
    if (!lat.includes(c_subgroup, c.subgroup)) continue;
    if (lat.includes(lat.conjugate(p_subgroup, t.inverse(c.representative)), c.subgroup)) out.push_back(i);
  }
  return out;
}

FixedComplex fixed_complex(const SimplicialComplex& complex, const IndexAction& vertex_action) {
  if (vertex_action.size != complex.vertex_count()) throw InvalidArgument("action and vertex counts differ");
  FixedComplex out;
  std::vector<std::vector<std::uint32_t>> fixed;
  std::vector<std::uint32_t> image;
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (std::size_t i = 0; i < complex.face_count(d); ++i) {
      const auto f = complex.face(d, i);
      bool setwise = true;
      bool pointwise = true;
      for (const auto& img : vertex_action.generators) {
        image.clear();
        for (auto v : f) {
          image.push_back(img[v]);
          pointwise = pointwise && img[v] == v;
        }
        std::sort(image.begin(), image.end());
        setwise = setwise && std::equal(image.begin(), image.end(), f.begin());
      }
      if (setwise && !pointwise) out.subcomplex = false;
      if (pointwise) fixed.emplace_back(f.begin(), f.end());
    }
  }
  out.complex = SimplicialComplex::from_facets(complex.vertex_count(), fixed);
  return out;
}

EulerCongruence euler_congruence(const SimplicialComplex& complex, const IndexAction& vertex_action, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (!is_power_of(vertex_action.acting_order, p)) throw InvalidArgument("acting group is not a p-group");
  EulerCongruence out;
  out.p = p;
  const auto fixed = fixed_complex(complex, vertex_action);
  out.subcomplex = fixed.subcomplex;
  out.euler = euler_characteristic(complex);
  out.fixed_euler = euler_characteristic(fixed.complex);
  out.holds = (out.euler - out.fixed_euler) % static_cast<std::int64_t>(p) == 0;
  return out;
}

AcyclicityTransfer acyclicity_transfer(const SimplicialComplex& complex, const IndexAction& vertex_action, Field field) {
  AcyclicityTransfer out;
  const auto fixed = fixed_complex(complex, vertex_action);
  if (!fixed.subcomplex) throw InvalidArgument("fixed set is not a subcomplex");
  out.acyclic = is_acyclic(complex, field);
  out.fixed_acyclic = is_acyclic(fixed.complex, field);
  out.fixed_euler = euler_characteristic(fixed.complex);
  return out;
}

std::vector<AbelianSocleCheck> abelian_socle_checks(std::shared_ptr<const SubgroupLattice> lattice) {
  std::vector<AbelianSocleCheck> out;
  const auto& t = lattice->table();
  for (auto n : minimal_normal_subgroups(*lattice)) {
    const auto& gens = lattice->subgroups()[n].generators;
    bool abelian = true;
    for (auto a : gens) {
      for (auto b : gens) abelian = abelian && t.mul(a, b) == t.mul(b, a);
    }
    if (!abelian) continue;
    const auto brown = CosetPoset::brown(lattice, n);
    AbelianSocleCheck c;
    c.normal = n;
    c.normal_order = lattice->subgroups()[n].order;
    c.brown_size = brown.size();
    c.antichain = brown.poset().is_antichain();
    c.divisible = c.brown_size % c.normal_order == 0;
    out.push_back(c);
  }
  return out;
}

DiagonalCP diagonal_cp(const GeneratedGroup& l, std::size_t t, std::span<const Permutation> d, std::span<const Permutation> q) {
  if (t == 0) throw InvalidArgument("need at least one copy");
  if (!l.contains_all(d) || !l.contains_all(q)) throw NotMember("D and Q must lie in L");
  const std::size_t deg = l.degree();
  const std::size_t total = deg * t;
  if (total > 65535) throw InvalidArgument("product degree too large");
  auto placed = [&](const Permutation& x, std::size_t first, std::size_t last) {
    std::vector<Point> images(total);
    for (std::size_t i = 0; i < total; ++i) {
      const std::size_t b = i / deg;
      images[i] = static_cast<Point>(b >= first && b < last ? b * deg + x[i % deg] : i);
    }
    return Permutation::unchecked(std::move(images));
  };
  DiagonalCP out{build_group(1, {}), {}, {}};
  std::vector<Permutation> gens;
  std::uint64_t order = 1;
  for (std::size_t b = 0; b < t; ++b) {
    for (const auto& g : l.generators()) gens.push_back(placed(g, b, b + 1));
    for (const auto& g : q) out.p.push_back(placed(g, b, b + 1));
    order *= l.order();
  }
  for (const auto& g : d) out.c.push_back(placed(g, 0, t));
  out.n = build_group_bounded(total, std::move(gens), order);
  return out;
}

FixedPointFreeCheck verify_fixed_point_free(std::shared_ptr<const SubgroupLattice> lattice, std::size_t normal,
                                            std::span<const Permutation> c, std::span<const Permutation> p) {
  const auto& t = lattice->table();
  const auto c_gens = table_indices(t, c);
  const auto p_gens = table_indices(t, p);
  const std::size_t ci = lattice->find_generated(c_gens);
  const std::size_t pi = lattice->find_generated(p_gens);
  if (!lattice->subgroups()[normal].normal) throw InvalidArgument("N is not normal");
  if (!lattice->includes(ci, normal) || !lattice->includes(pi, normal)) throw InvalidArgument("C and P must lie in N");
  FixedPointFreeCheck out;
  out.hypothesis = true;
  std::vector<char> seen(lattice->size(), 0);
  for (std::uint32_t g = 0; g < t.size() && out.hypothesis; ++g) {
    const std::size_t pg = lattice->conjugate(pi, g);
    if (seen[pg]) continue;
    seen[pg] = 1;
    std::vector<std::uint32_t> gens = c_gens;
    const auto& more = lattice->subgroups()[pg].generators;
    gens.insert(gens.end(), more.begin(), more.end());
    if (lattice->closure(gens) != lattice->subgroups()[normal].members) {
      out.hypothesis = false;
      out.counterexample = t.element(g);
    }
  }
  const auto brown = CosetPoset::brown(lattice, normal);
  out.brown_size = brown.size();
  const auto action = two_sided_action(brown, ci, pi);
  const auto fixed = fixed_points(action);
  out.fixed_count = fixed.size();
  out.matches_inclusion_rule = fixed == fixed_cosets_by_inclusion(brown, ci, pi);
  return out;
}

SmithPipeline smith_pipeline(const GeneratedGroup& g, const GeneratedGroup& n, std::span<const Permutation> c,
                             std::span<const Permutation> p, const Limits& limits) {
  const auto lattice = std::make_shared<const SubgroupLattice>(all_subgroups(g, limits));
  const std::size_t ni = lattice->find_group(n);
  SmithPipeline out;
  out.fixed = verify_fixed_point_free(lattice, ni, c, p);
  const auto brown = CosetPoset::brown(lattice, ni);
  out.betti = reduced_betti(coset_complex(brown, limits.max_faces), Field::rationals());
  out.passes = out.fixed.hypothesis && out.fixed.fixed_count == 0 && out.fixed.matches_inclusion_rule &&
               out.betti.nontrivial();
  return out;
}

}  // namespace ivgen
