#include "gdifs/gdifs.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gdifs/certifier.hpp"
#include "gdifs/classifier.hpp"
#include "gdifs/commands.hpp"
#include "gdifs/dimension.hpp"
#include "gdifs/document.hpp"
#include "gdifs/error.hpp"

struct gdifs_ifs {
  gdifs::IfsDocument doc;
};

namespace {

thread_local std::string last_error;

gdifs_status status_of(gdifs::ErrorCode code) { return static_cast<gdifs_status>(static_cast<int>(code) + 1); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
gdifs_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GDIFS_OK;
  } catch (const gdifs::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return GDIFS_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return GDIFS_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) gdifs::fail(gdifs::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

gdifs_check check_of(gdifs::Check c) {
  switch (c) {
    case gdifs::Check::Holds: return GDIFS_CHECK_HOLDS;
    case gdifs::Check::Fails: return GDIFS_CHECK_FAILS;
    case gdifs::Check::Boundary: break;
  }
  return GDIFS_CHECK_BOUNDARY;
}

}  // namespace

extern "C" {

const char* gdifs_last_error(void) { return last_error.c_str(); }

const char* gdifs_status_name(gdifs_status status) {
  if (status == GDIFS_OK) return "Ok";
  if (status < GDIFS_OK || status > GDIFS_INTERNAL) return "Unknown";
  return gdifs::to_string(static_cast<gdifs::ErrorCode>(static_cast<int>(status) - 1));
}

void gdifs_string_free(char* s) { std::free(s); }

gdifs_status gdifs_parse(const char* text, gdifs_ifs** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gdifs_ifs{gdifs::parse_ifs_document(text)};
  });
}

gdifs_status gdifs_load(const char* path, gdifs_ifs** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new gdifs_ifs{gdifs::load_ifs_document(path)};
  });
}

gdifs_status gdifs_canonical(const char* a, const char* g_u, const char* b, const char* c, const char* g_v,
                             const char* d, gdifs_ifs** out) {
  return guarded([&] {
    for (const char* p : {a, g_u, b, c, g_v, d}) require(p, "parameter");
    require(out, "out");
    using gdifs::Rational;
    gdifs::TwoVertexFamily f{Rational::parse(a),   Rational::parse(g_u), Rational::parse(b),
                             Rational::parse(c),   Rational::parse(g_v), Rational::parse(d)};
    *out = new gdifs_ifs{{gdifs::canonical_two_vertex(f.a, f.g_u, f.b, f.c, f.g_v, f.d), f}};
  });
}

void gdifs_free(gdifs_ifs* ifs) { delete ifs; }

size_t gdifs_vertex_count(const gdifs_ifs* ifs) { return ifs ? ifs->doc.ifs.vertex_count() : 0; }

gdifs_status gdifs_emit(const gdifs_ifs* ifs, char** document) {
  return guarded([&] {
    require(ifs, "ifs");
    require(document, "document");
    *document = copy_string(gdifs::emit_ifs_document(ifs->doc.ifs));
  });
}

gdifs_status gdifs_dimension(const gdifs_ifs* ifs, double tol, double* s, double* h, size_t h_len) {
  return guarded([&] {
    require(ifs, "ifs");
    require(s, "s");
    const auto result = gdifs::solve_dimension(ifs->doc.ifs, tol);
    *s = result.s;
    if (h)
      for (size_t i = 0; i < h_len && i < result.h.size(); ++i) h[i] = result.h[i];
  });
}

gdifs_status gdifs_cssc(const gdifs_ifs* ifs, int* holds) {
  return guarded([&] {
    require(ifs, "ifs");
    require(holds, "holds");
    *holds = gdifs::check_cssc(ifs->doc.ifs).holds ? 1 : 0;
  });
}

gdifs_status gdifs_certify(const gdifs_ifs* ifs, gdifs_certification* out) {
  return guarded([&] {
    require(ifs, "ifs");
    require(out, "out");
    const auto r = gdifs::certify(ifs->doc.ifs);
    gdifs_certification c{};
    c.status = r.status == gdifs::CertificationStatus::Certified         ? GDIFS_CERTIFIED
               : r.status == gdifs::CertificationStatus::FailedCondition ? GDIFS_FAILED_CONDITION
                                                                          : GDIFS_CERT_INCONCLUSIVE;
    c.failed_condition = r.failed_condition;
    c.s = r.dimension.s;
    c.cond1_holds = r.conditions.cond1_holds ? 1 : 0;
    c.cond2_value = r.conditions.cond2_value;
    c.cond2 = check_of(r.conditions.cond2);
    c.cond3_value = r.conditions.cond3_value;
    c.cond3 = check_of(r.conditions.cond3);
    if (r.measures) {
      c.has_measures = 1;
      c.measure_u = r.measures->h_u;
      c.measure_v = r.measures->h_v;
    }
    *out = c;
  });
}

gdifs_status gdifs_classify(const gdifs_ifs* ifs, size_t vertex, gdifs_verdict* verdict, char** document) {
  return guarded([&] {
    require(ifs, "ifs");
    require(verdict, "verdict");
    const auto cert = gdifs::classify_attractor(ifs->doc.ifs, vertex);
    *verdict = static_cast<gdifs_verdict>(static_cast<int>(cert.verdict));
    if (document) *document = copy_string(gdifs::format_certificate(cert, gdifs::Format::Machine));
  });
}

void gdifs_run_options_init(gdifs_run_options* options) {
  if (!options) return;
  *options = gdifs_run_options{};
  options->format = GDIFS_FORMAT_TEXT;
  options->depth = -1;
  options->tol = 1e-12;
  options->levels = 4;
}

int gdifs_run(const char* command, const gdifs_ifs* ifs, const gdifs_run_options* options, char** output,
              char** error) {
  gdifs::CommandResult result;
  const gdifs_status st = guarded([&] {
    require(command, "command");
    require(ifs, "ifs");
    const auto cmd = gdifs::parse_command(command);
    if (!cmd) gdifs::fail(gdifs::ErrorCode::InvalidArgument, std::string("unknown command '") + command + "'");
    gdifs::CommandOptions opt;
    if (options) {
      opt.format = options->format == GDIFS_FORMAT_MACHINE ? gdifs::Format::Machine : gdifs::Format::Text;
      if (options->depth >= 0) opt.depth = static_cast<std::size_t>(options->depth);
      if (options->cutoff) opt.cutoff = gdifs::Rational::parse(options->cutoff);
      opt.tol = options->tol;
      if (options->levels < 0) gdifs::fail(gdifs::ErrorCode::InvalidArgument, "levels must be nonnegative");
      opt.levels = static_cast<std::size_t>(options->levels);
      if (options->out_path) opt.out_path = options->out_path;
      opt.vertex = options->vertex;
      if ((options->interval_lo == nullptr) != (options->interval_hi == nullptr))
        gdifs::fail(gdifs::ErrorCode::InvalidArgument, "an interval needs both endpoints");
      if (options->interval_lo)
        opt.interval = gdifs::Interval{gdifs::Rational::parse(options->interval_lo),
                                       gdifs::Rational::parse(options->interval_hi)};
    }
    result = gdifs::run_command(*cmd, ifs->doc, opt);
  });
  if (st != GDIFS_OK) {
    result.exit_code = st == GDIFS_INTERNAL ? gdifs::kExitInternal : gdifs::kExitInvalid;
    result.output.clear();
    result.error = last_error;
  } else if (!result.error.empty()) {
    last_error = result.error;
  }
  if (output) *output = copy_string(result.output);
  if (error) *error = copy_string(result.error);
  return result.exit_code;
}

}  // extern "C"
