#include "doctest.h"
#include "ivgen/corpus.hpp"
#include "ivgen/error.hpp"
#include "ivgen/homology.hpp"

using namespace ivgen;

namespace {

using Facets = std::vector<std::vector<std::uint32_t>>;

// Seven-vertex torus.
Facets torus() {
  Facets f;
  for (std::uint32_t i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return f;
}

// Six-vertex real projective plane.
Facets projective_plane() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

std::vector<std::uint64_t> betti(const SimplicialComplex& k, Field f) { return reduced_betti(k, f).betti; }

}  // namespace

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("F2").characteristic == 2);
  CHECK(Field::parse("Fp:7").characteristic == 7);
  CHECK(Field::parse("Fp:7").name() == "F7");
  CHECK_THROWS_AS(Field::parse("F4"), InvalidArgument);
  CHECK_THROWS_AS(Field::parse("R"), ParseError);
}

TEST_CASE("void and empty complexes") {
  const auto v = SimplicialComplex::void_complex();
  CHECK(v.dimension() == -1);
  CHECK(euler_characteristic(v) == -1);
  CHECK(betti(v, Field::rationals()) == std::vector<std::uint64_t>{1});
}

TEST_CASE("spheres and simplices") {
  const auto simplex = SimplicialComplex::from_facets(4, {{0, 1, 2, 3}});
  CHECK(simplex.f_vector() == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  CHECK(is_acyclic(simplex, Field::rationals()));
  const auto sphere = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(betti(sphere, Field::rationals()) == std::vector<std::uint64_t>{0, 0, 0, 1});
  CHECK(euler_characteristic(sphere) == 1);
  const auto points = SimplicialComplex::from_facets(5, {{0}, {1}, {2}, {3}, {4}});
  CHECK(reduced_betti(points, Field::prime(3)).at(0) == 4);
}

TEST_CASE("torus and projective plane") {
  const auto t = SimplicialComplex::from_facets(7, torus());
  CHECK(t.f_vector() == std::vector<std::uint64_t>{1, 7, 21, 14});
  CHECK(betti(t, Field::rationals()) == std::vector<std::uint64_t>{0, 0, 2, 1});
  CHECK(betti(t, Field::prime(2)) == std::vector<std::uint64_t>{0, 0, 2, 1});
  const auto rp2 = SimplicialComplex::from_facets(6, projective_plane());
  CHECK(rp2.f_vector() == std::vector<std::uint64_t>{1, 6, 15, 10});
  CHECK(is_acyclic(rp2, Field::rationals()));
  CHECK(is_acyclic(rp2, Field::prime(3)));
  CHECK(betti(rp2, Field::prime(2)) == std::vector<std::uint64_t>{0, 0, 1, 1});
  CHECK(reduced_betti(rp2, Field::rationals()).modular_agreement);
}

TEST_CASE("boundary maps compose to zero") {
  CHECK(boundary_squares_to_zero(SimplicialComplex::from_facets(7, torus())));
  CHECK(boundary_squares_to_zero(SimplicialComplex::from_facets(5, {{0, 1, 2, 3, 4}})));
  const auto lat = std::make_shared<const SubgroupLattice>(all_subgroups(corpus_group("A4")));
  CHECK(boundary_squares_to_zero(coset_complex(CosetPoset::full(lat))));
}

TEST_CASE("boundary ranks of a simplex") {
  const auto s = SimplicialComplex::from_facets(5, {{0, 1, 2, 3, 4}});
  // rank of d_k on the full simplex is C(4, k).
  const std::uint64_t expected[] = {1, 4, 6, 4, 1};
  for (int d = 0; d <= 4; ++d) CHECK(boundary_rank(s, d, Field::rationals()) == expected[d]);
}

TEST_CASE("join against Kunneth") {
  const auto circle = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto two_points = SimplicialComplex::from_facets(2, {{0}, {1}});
  const auto rp2 = SimplicialComplex::from_facets(6, projective_plane());
  struct Pair {
    SimplicialComplex a, b;
  };
  const std::vector<Pair> pairs{{circle, two_points}, {circle, circle}, {two_points, two_points},
                                {rp2, two_points}, {SimplicialComplex::void_complex(), circle}};
  for (Field f : {Field::rationals(), Field::prime(2)}) {
    for (const auto& [a, b] : pairs) {
      const auto j = join(a, b);
      const auto direct = reduced_betti(j, f);
      const auto predicted = kunneth_betti(reduced_betti(a, f), reduced_betti(b, f));
      for (int d = -1; d <= j.dimension() + 1; ++d) CHECK(direct.at(d) == predicted.at(d));
      CHECK(direct.euler == predicted.euler);
    }
  }
  // S^1 * S^1 = S^3
  CHECK(reduced_betti(join(circle, circle), Field::rationals()).at(3) == 1);
}

TEST_CASE("order complex of a chain poset is a simplex") {
  Poset p;
  p.size = 4;
  p.above = {{1, 2, 3}, {2, 3}, {3}, {}};
  const auto k = SimplicialComplex::order_complex(p);
  CHECK(k.f_vector() == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  CHECK(k.find_face(std::vector<std::uint32_t>{0, 2, 3}).has_value());
}

TEST_CASE("coset complexes: Euler characteristic equals -P(G,-1)") {
  for (const char* name : {"C2", "C7", "S3", "C6", "D8", "Q8", "A4", "D10", "C3^2:C2", "S4", "SL(2,3)"}) {
    CAPTURE(name);
    const auto lat = std::make_shared<const SubgroupLattice>(all_subgroups(corpus_group(name)));
    const auto k = coset_complex(CosetPoset::full(lat));
    CHECK(euler_characteristic(k) == -zeta_at_minus_one(*lat));
    const auto b = reduced_betti(k, Field::rationals());
    CHECK(b.alternating_sum() == b.euler);
  }
  const auto s3 = std::make_shared<const SubgroupLattice>(all_subgroups(corpus_group("S3")));
  const auto b = reduced_betti(coset_complex(CosetPoset::full(s3)), Field::rationals());
  CHECK(b.betti == std::vector<std::uint64_t>{0, 0, 8});
}

TEST_CASE("face cap") {
  const auto lat = std::make_shared<const SubgroupLattice>(all_subgroups(corpus_group("S4")));
  CHECK_THROWS_AS(coset_complex(CosetPoset::full(lat), 100), CapExceeded);
}
