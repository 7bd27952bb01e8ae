#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "ivgen/claims.hpp"
#include "ivgen/error.hpp"

int main(int argc, char** argv) {
  using namespace ivgen;
  int only = 0;
  std::string json_path;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (a == "--json" && i + 1 < argc) {
      json_path = argv[++i];
    } else if (a == "--jobs" && i + 1 < argc) {
      jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[++i])));
    } else {
      std::cerr << "usage: acceptance [--criterion K] [--jobs N] [--json FILE]\n";
      return 2;
    }
  }

  claims::RunOptions opt;
  opt.jobs = jobs;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  bool ok = true;
  for (int k = 1; k <= 10; ++k) {
    if (only && k != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.command = "criterion " + std::to_string(k);
    std::string error;
    try {
      report.claims = run_tasks(claims::acceptance_tasks(k, opt), jobs);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && report.exit_code() == 0 && report.count(CheckStatus::pass) > 0;
    ok = ok && pass;
    std::printf("%s  criterion %2d  %-52s  %zu pass, %zu fail, %zu skip  %.1f s\n", pass ? "PASS" : "FAIL", k,
                std::string(claims::acceptance_title(k)).c_str(), report.count(CheckStatus::pass),
                report.count(CheckStatus::fail), report.count(CheckStatus::skip), seconds);
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    for (const auto& c : report.claims) {
      if (c.status == CheckStatus::fail) std::printf("      FAIL %s %s\n", c.id.c_str(), c.witness.dump().c_str());
      if (c.status == CheckStatus::skip) std::printf("      SKIP %s (%s)\n", c.id.c_str(), c.reason.c_str());
    }
    std::fflush(stdout);
    auto j = report.to_json();
    j["criterion"] = k;
    all.push_back(std::move(j));
  }
  if (!json_path.empty()) std::ofstream(json_path) << all.dump(2) << "\n";
  return ok ? 0 : 1;
}
