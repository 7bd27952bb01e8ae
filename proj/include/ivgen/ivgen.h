#ifndef IVGEN_IVGEN_H
#define IVGEN_IVGEN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IVG_API __declspec(dllexport)
#else
#define IVG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ivg_status {
  IVG_OK = 0,
  IVG_ERR_INVALID_ARGUMENT = 1,
  IVG_ERR_PARSE = 2,
  IVG_ERR_DEGREE_MISMATCH = 3,
  IVG_ERR_NOT_MEMBER = 4,
  IVG_ERR_CAP_EXCEEDED = 5,
  IVG_ERR_NOT_FOUND = 6,
  IVG_ERR_IO = 7,
  IVG_ERR_INTERNAL = 8,
  IVG_ERR_NULL_POINTER = 9,
  IVG_ERR_OUT_OF_MEMORY = 10
} ivg_status;

typedef enum ivg_claim_status { IVG_CLAIM_PASS = 0, IVG_CLAIM_FAIL = 1, IVG_CLAIM_SKIP = 2 } ivg_claim_status;

typedef struct ivg_context ivg_context;
typedef struct ivg_group ivg_group;
typedef struct ivg_report ivg_report;

IVG_API const char* ivg_version(void);
IVG_API const char* ivg_status_name(ivg_status status);

IVG_API ivg_status ivg_context_new(ivg_context** out);
IVG_API void ivg_context_free(ivg_context* ctx);
/* Message of the last failed call on this context; empty if none. */
IVG_API const char* ivg_last_error(const ivg_context* ctx);

IVG_API size_t ivg_command_count(void);
IVG_API const char* ivg_command_name(size_t index);

/* args_json is a JSON object of options, or NULL. */
IVG_API ivg_status ivg_run(ivg_context* ctx, const char* command, const char* args_json, ivg_report** out);
IVG_API void ivg_report_free(ivg_report* report);
/* Strings stay valid until the report is freed. */
IVG_API const char* ivg_report_json(ivg_report* report, int include_timing, int indent);
IVG_API const char* ivg_report_text(ivg_report* report);
IVG_API int ivg_report_exit_code(const ivg_report* report);
IVG_API size_t ivg_report_claim_count(const ivg_report* report);
IVG_API size_t ivg_report_count(const ivg_report* report, ivg_claim_status status);
IVG_API const char* ivg_report_claim_id(const ivg_report* report, size_t index);
IVG_API ivg_claim_status ivg_report_claim_status(const ivg_report* report, size_t index);

IVG_API ivg_status ivg_group_load(ivg_context* ctx, const char* path, ivg_group** out);
IVG_API ivg_status ivg_group_parse(ivg_context* ctx, const char* text, ivg_group** out);
IVG_API ivg_status ivg_group_named(ivg_context* ctx, const char* name, ivg_group** out);
IVG_API void ivg_group_free(ivg_group* group);
IVG_API size_t ivg_group_degree(const ivg_group* group);
IVG_API uint64_t ivg_group_order(const ivg_group* group);
/* Group text format; valid until the group is freed. */
IVG_API const char* ivg_group_text(ivg_group* group);
IVG_API size_t ivg_named_group_count(void);
IVG_API const char* ivg_named_group_example(size_t index);

#ifdef __cplusplus
}
#endif

#endif
