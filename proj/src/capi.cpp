#include "ivgen/ivgen.h"

#include <new>
#include <optional>
#include <string>
#include <vector>

#include "ivgen/error.hpp"
#include "ivgen/groupio.hpp"
#include "ivgen/report.hpp"

struct ivg_context {
  std::string last_error;
};

struct ivg_group {
  ivgen::GeneratedGroup group;
  std::string text;
};

struct ivg_report {
  ivgen::Report report;
  std::string json;
  std::string text;
};

namespace {

ivg_status status_of(ivgen::ErrorCode code) {
  switch (code) {
    case ivgen::ErrorCode::invalid_argument:
      return IVG_ERR_INVALID_ARGUMENT;
    case ivgen::ErrorCode::parse:
      return IVG_ERR_PARSE;
    case ivgen::ErrorCode::degree_mismatch:
      return IVG_ERR_DEGREE_MISMATCH;
    case ivgen::ErrorCode::not_member:
      return IVG_ERR_NOT_MEMBER;
    case ivgen::ErrorCode::cap_exceeded:
      return IVG_ERR_CAP_EXCEEDED;
    case ivgen::ErrorCode::not_found:
      return IVG_ERR_NOT_FOUND;
    case ivgen::ErrorCode::io:
      return IVG_ERR_IO;
    case ivgen::ErrorCode::internal:
      return IVG_ERR_INTERNAL;
  }
  return IVG_ERR_INTERNAL;
}

template <typename F>
ivg_status guarded(ivg_context* ctx, F&& f) {
  if (!ctx) return IVG_ERR_NULL_POINTER;
  ctx->last_error.clear();
  try {
    f();
    return IVG_OK;
  } catch (const ivgen::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = std::string("bad JSON arguments: ") + e.what();
    return IVG_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return IVG_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return IVG_ERR_INTERNAL;
  }
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = ivgen::command_names();
  return names;
}

const std::vector<std::string>& examples() {
  static const std::vector<std::string> names = ivgen::named_group_examples();
  return names;
}

}  // namespace

extern "C" {

const char* ivg_version(void) { return "1.0.0"; }

const char* ivg_status_name(ivg_status status) {
  switch (status) {
    case IVG_OK:
      return "ok";
    case IVG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case IVG_ERR_PARSE:
      return "parse error";
    case IVG_ERR_DEGREE_MISMATCH:
      return "degree mismatch";
    case IVG_ERR_NOT_MEMBER:
      return "not a member";
    case IVG_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case IVG_ERR_NOT_FOUND:
      return "not found";
    case IVG_ERR_IO:
      return "i/o error";
    case IVG_ERR_INTERNAL:
      return "internal error";
    case IVG_ERR_NULL_POINTER:
      return "null pointer";
    case IVG_ERR_OUT_OF_MEMORY:
      return "out of memory";
  }
  return "unknown status";
}

ivg_status ivg_context_new(ivg_context** out) {
  if (!out) return IVG_ERR_NULL_POINTER;
  *out = new (std::nothrow) ivg_context;
  return *out ? IVG_OK : IVG_ERR_OUT_OF_MEMORY;
}

void ivg_context_free(ivg_context* ctx) { delete ctx; }

const char* ivg_last_error(const ivg_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

size_t ivg_command_count(void) { return commands().size(); }

const char* ivg_command_name(size_t index) { return index < commands().size() ? commands()[index].c_str() : nullptr; }

ivg_status ivg_run(ivg_context* ctx, const char* command, const char* args_json, ivg_report** out) {
  if (!command || !out) return IVG_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded(ctx, [&] {
    const auto args = args_json && *args_json ? nlohmann::json::parse(args_json) : nlohmann::json::object();
    auto* r = new ivg_report{ivgen::run_command(command, args), {}, {}};
    *out = r;
  });
}

void ivg_report_free(ivg_report* report) { delete report; }

const char* ivg_report_json(ivg_report* report, int include_timing, int indent) {
  if (!report) return nullptr;
  report->json = report->report.to_json(include_timing != 0).dump(indent < 0 ? -1 : indent);
  return report->json.c_str();
}

const char* ivg_report_text(ivg_report* report) {
  if (!report) return nullptr;
  report->text = report->report.to_text();
  return report->text.c_str();
}

int ivg_report_exit_code(const ivg_report* report) { return report ? report->report.exit_code() : 2; }

size_t ivg_report_claim_count(const ivg_report* report) { return report ? report->report.claims.size() : 0; }

size_t ivg_report_count(const ivg_report* report, ivg_claim_status status) {
  if (!report) return 0;
  switch (status) {
    case IVG_CLAIM_PASS:
      return report->report.count(ivgen::CheckStatus::pass);
    case IVG_CLAIM_FAIL:
      return report->report.count(ivgen::CheckStatus::fail);
    case IVG_CLAIM_SKIP:
      return report->report.count(ivgen::CheckStatus::skip);
  }
  return 0;
}

const char* ivg_report_claim_id(const ivg_report* report, size_t index) {
  if (!report || index >= report->report.claims.size()) return nullptr;
  return report->report.claims[index].id.c_str();
}

ivg_claim_status ivg_report_claim_status(const ivg_report* report, size_t index) {
  if (!report || index >= report->report.claims.size()) return IVG_CLAIM_SKIP;
  switch (report->report.claims[index].status) {
    case ivgen::CheckStatus::pass:
      return IVG_CLAIM_PASS;
    case ivgen::CheckStatus::fail:
      return IVG_CLAIM_FAIL;
    case ivgen::CheckStatus::skip:
      return IVG_CLAIM_SKIP;
  }
  return IVG_CLAIM_SKIP;
}

ivg_status ivg_group_load(ivg_context* ctx, const char* path, ivg_group** out) {
  if (!path || !out) return IVG_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded(ctx, [&] { *out = new ivg_group{ivgen::load_group_file(path), {}}; });
}

ivg_status ivg_group_parse(ivg_context* ctx, const char* text, ivg_group** out) {
  if (!text || !out) return IVG_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded(ctx, [&] { *out = new ivg_group{ivgen::parse_group_text(text), {}}; });
}

ivg_status ivg_group_named(ivg_context* ctx, const char* name, ivg_group** out) {
  if (!name || !out) return IVG_ERR_NULL_POINTER;
  *out = nullptr;
  return guarded(ctx, [&] { *out = new ivg_group{ivgen::named_group(name), {}}; });
}

void ivg_group_free(ivg_group* group) { delete group; }

size_t ivg_group_degree(const ivg_group* group) { return group ? group->group.degree() : 0; }

uint64_t ivg_group_order(const ivg_group* group) { return group ? group->group.order() : 0; }

const char* ivg_group_text(ivg_group* group) {
  if (!group) return nullptr;
  group->text = ivgen::format_group_text(group->group);
  return group->text.c_str();
}

size_t ivg_named_group_count(void) { return examples().size(); }

const char* ivg_named_group_example(size_t index) {
  return index < examples().size() ? examples()[index].c_str() : nullptr;
}

}  // extern "C"
