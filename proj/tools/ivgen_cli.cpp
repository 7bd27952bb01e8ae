#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivgen/ivgen.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string group;
  std::string named;
  std::string field;
  std::optional<std::uint64_t> cap_elements;
  std::optional<std::uint64_t> cap_faces;
  std::optional<std::uint64_t> cap_lattice;
  unsigned jobs = 1;
  bool json_output = false;
  bool no_timing = false;
  bool stretch = false;
};

struct Normal {
  std::vector<std::string> generators;
  std::optional<std::uint64_t> order;
};

void add_normal(CLI::App* sub, Normal& n) {
  sub->add_option("--normal", n.generators, "generator of the normal subgroup N in cycle notation (repeatable)");
  sub->add_option("--normal-order", n.order, "pick the unique normal subgroup of this order");
}

void put_normal(json& args, const Normal& n) {
  if (!n.generators.empty()) args["normal"] = n.generators;
  if (n.order) args["normal_order"] = *n.order;
}

template <typename T>
void put(json& args, const char* key, const std::optional<T>& v) {
  if (v) args[key] = *v;
}

void put(json& args, const char* key, const std::string& v) {
  if (!v.empty()) args[key] = v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariable generation and coset poset verifier"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ivg_version()));

  Common common;
  auto* opts = app.add_option_group("common");
  opts->add_option("--group", common.group, "group file (degree line plus generators)")->envname("IVGEN_GROUP");
  opts->add_option("--named", common.named, "bundled group: corpus names, A<n>, S<n>, C<n>, M11, M12, M24, Sp6(2), U4(2), O8+(2)")
      ->envname("IVGEN_NAMED");
  opts->add_option("--field", common.field, "coefficient field: Q, F2, Fp:p")->envname("IVGEN_FIELD");
  opts->add_option("--cap-elements", common.cap_elements, "largest group to enumerate")->envname("IVGEN_CAP_ELEMENTS");
  opts->add_option("--cap-faces", common.cap_faces, "largest simplicial complex to build")->envname("IVGEN_CAP_FACES");
  opts->add_option("--cap-lattice", common.cap_lattice, "largest subgroup lattice to build")->envname("IVGEN_CAP_LATTICE");
  opts->add_option("--jobs", common.jobs, "worker threads")->envname("IVGEN_JOBS")->check(CLI::Range(1U, 1024U));
  opts->add_flag("--json", common.json_output, "print the JSON report")->envname("IVGEN_JSON");
  opts->add_flag("--no-timing", common.no_timing, "omit elapsed times from JSON")->envname("IVGEN_NO_TIMING");
  opts->add_flag("--stretch", common.stretch, "run stretch claims (M24, O8+(2))")->envname("IVGEN_STRETCH");

  json args = json::object();
  std::string command;

  std::vector<std::string> left, right;
  std::optional<std::uint64_t> left_order, right_order;
  std::string mode;
  auto* invgen = app.add_subcommand("invgen", "decide whether S and T invariably generate G");
  invgen->add_option("--left", left, "generator of S (repeatable)");
  invgen->add_option("--right", right, "generator of T (repeatable)");
  invgen->add_option("--left-order", left_order, "use the first class representative of this order for S");
  invgen->add_option("--right-order", right_order, "use the first class representative of this order for T");
  invgen->add_option("--mode", mode, "subgroups or elements")->check(CLI::IsMember({"subgroups", "elements"}));

  std::optional<std::uint64_t> sylow_p, sylow_order;
  std::string sylow_c;
  auto* sylow = app.add_subcommand("sylow-cyclic", "Sylow p-subgroup with a cyclic subgroup; U4(2) and Sp6(2) by default");
  sylow->add_option("--p", sylow_p, "prime");
  sylow->add_option("--c", sylow_c, "generator of the cyclic subgroup");
  sylow->add_option("--order", sylow_order, "use the first class representative of this order");

  std::string n_range;
  auto* alternating = app.add_subcommand("alternating", "constructed pairs for A_n");
  alternating->add_option("--n", n_range, "degree or range lo..hi (default 5..12)");

  app.add_subcommand("mathieu", "M11 and M12 claims; M24 with --stretch");

  Normal homology_normal, poset_normal, brown_normal, smith_normal;
  auto* coset_homology = app.add_subcommand("coset-homology", "reduced homology of the coset poset");
  add_normal(coset_homology, homology_normal);
  auto* homology = app.add_subcommand("homology", "Betti numbers and face counts of the coset complex");
  Normal plain_normal;
  add_normal(homology, plain_normal);
  std::string dot_path;
  auto* coset_poset = app.add_subcommand("coset-poset", "coset poset statistics");
  add_normal(coset_poset, poset_normal);
  coset_poset->add_option("--dot", dot_path, "write the Hasse diagram in DOT format to this file");
  auto* brown = app.add_subcommand("brown-euler", "Euler oracle, abelian socle check and join formula");
  add_normal(brown, brown_normal);

  std::vector<std::string> smith_c, smith_p;
  auto* smith = app.add_subcommand("smith-check", "fixed points of the two-sided action; the corpus suite by default");
  add_normal(smith, smith_normal);
  smith->add_option("--c", smith_c, "generator of C (repeatable)");
  smith->add_option("--p", smith_p, "generator of P (repeatable)");

  std::optional<std::uint64_t> zq;
  std::optional<unsigned> ze;
  auto* zsig = app.add_subcommand("zsigmondy", "Zsigmondy primes for (q, e)");
  zsig->add_option("--q", zq, "base")->required();
  zsig->add_option("--e", ze, "exponent")->required();

  std::string family;
  std::optional<unsigned> rank;
  std::optional<std::uint64_t> lie_q;
  bool all_families = false;
  auto* table2 = app.add_subcommand("table2", "Zsigmondy primes against maximal parabolics");
  table2->add_option("--family", family, "family tag (A+, A-, B, C, D+, D-, 3D4, G2, F4, E6+, E6-, E7, E8, 2B2, 2F4, 2G2)");
  table2->add_option("--rank", rank, "rank n");
  table2->add_option("--q", lie_q, "field size");
  table2->add_flag("--all", all_families, "include the exceptional and twisted families in the grid");

  std::string sporadic;
  std::optional<std::uint64_t> sp_p, sp_r;
  auto* table1 = app.add_subcommand("table1", "sporadic element orders against maximal subgroup orders");
  table1->add_option("--name", sporadic, "group name, e.g. M11, Fi24', M");
  table1->add_option("--p", sp_p, "first element order");
  table1->add_option("--r", sp_r, "second element order");

  app.add_subcommand("lemma6", "GL6(2) certificate for the prime 31");
  app.add_subcommand("corpus", "every acceptance claim");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  command = app.get_subcommands().front()->get_name();
  put(args, "group", common.group);
  put(args, "named", common.named);
  put(args, "field", common.field);
  put(args, "cap_elements", common.cap_elements);
  put(args, "cap_faces", common.cap_faces);
  put(args, "cap_lattice", common.cap_lattice);
  args["jobs"] = common.jobs;
  if (common.stretch) args["stretch"] = true;

  if (command == "invgen") {
    if (!left.empty()) args["left"] = left;
    if (!right.empty()) args["right"] = right;
    put(args, "left_order", left_order);
    put(args, "right_order", right_order);
    put(args, "mode", mode);
  } else if (command == "sylow-cyclic") {
    put(args, "p", sylow_p);
    put(args, "c", sylow_c);
    put(args, "order", sylow_order);
  } else if (command == "alternating") {
    put(args, "n", n_range);
  } else if (command == "coset-homology") {
    put_normal(args, homology_normal);
  } else if (command == "homology") {
    put_normal(args, plain_normal);
  } else if (command == "coset-poset") {
    put_normal(args, poset_normal);
    if (!dot_path.empty()) args["dot"] = true;
  } else if (command == "brown-euler") {
    put_normal(args, brown_normal);
  } else if (command == "smith-check") {
    put_normal(args, smith_normal);
    if (!smith_c.empty()) args["c"] = smith_c;
    if (!smith_p.empty()) args["p"] = smith_p;
  } else if (command == "zsigmondy") {
    put(args, "q", zq);
    put(args, "e", ze);
  } else if (command == "table2") {
    put(args, "family", family);
    put(args, "rank", rank);
    put(args, "q", lie_q);
    if (all_families) args["all"] = true;
  } else if (command == "table1") {
    put(args, "name", sporadic);
    put(args, "p", sp_p);
    put(args, "r", sp_r);
  }

  ivg_context* raw_ctx = nullptr;
  if (ivg_context_new(&raw_ctx) != IVG_OK) return 2;
  std::unique_ptr<ivg_context, decltype(&ivg_context_free)> ctx(raw_ctx, ivg_context_free);

  ivg_report* raw_report = nullptr;
  const auto status = ivg_run(ctx.get(), command.c_str(), args.dump().c_str(), &raw_report);
  if (status != IVG_OK) {
    std::cerr << "error: " << ivg_status_name(status) << ": " << ivg_last_error(ctx.get()) << "\n";
    return 2;
  }
  std::unique_ptr<ivg_report, decltype(&ivg_report_free)> report(raw_report, ivg_report_free);

  if (!dot_path.empty()) {
    const auto payload = json::parse(ivg_report_json(report.get(), 0, -1));
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "error: cannot write " << dot_path << "\n";
      return 2;
    }
    out << payload["claims"][0]["details"]["dot"].get<std::string>();
  }

  if (common.json_output) {
    std::cout << ivg_report_json(report.get(), common.no_timing ? 0 : 1, 2) << "\n";
  } else {
    std::cout << ivg_report_text(report.get());
  }
  return ivg_report_exit_code(report.get());
}
