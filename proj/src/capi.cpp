#include "twinchain/twinchain.h"

#include <new>
#include <string>
#include <vector>

#include "twinchain/census.hpp"
#include "twinchain/error.hpp"
#include "twinchain/hull.hpp"
#include "twinchain/io.hpp"
#include "twinchain/twinned.hpp"

struct twc_poset {
  twinchain::Poset value;
};

struct twc_family {
  twinchain::FacetFamily value;
};

struct twc_text {
  std::string value;
};

namespace {

thread_local std::string last_error;

twc_status status_of(twinchain::ErrorCode code) {
  using twinchain::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return TWC_ERR_PARSE;
    case ErrorCode::kCycle:
      return TWC_ERR_CYCLE;
    case ErrorCode::kIndex:
      return TWC_ERR_INDEX;
    case ErrorCode::kDimensionMismatch:
      return TWC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kSize:
      return TWC_ERR_SIZE;
    case ErrorCode::kDegenerateInput:
      return TWC_ERR_DEGENERATE_INPUT;
    case ErrorCode::kOddDimension:
      return TWC_ERR_ODD_DIMENSION;
    case ErrorCode::kUnvalidatedInput:
      return TWC_ERR_UNVALIDATED_INPUT;
    case ErrorCode::kBoundViolation:
      return TWC_ERR_BOUND_VIOLATION;
    case ErrorCode::kGoldenMismatch:
      return TWC_ERR_GOLDEN_MISMATCH;
    case ErrorCode::kIo:
      return TWC_ERR_IO;
    case ErrorCode::kOverflow:
      return TWC_ERR_OVERFLOW;
  }
  return TWC_ERR_INTERNAL;
}

twc_status fail(twc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
twc_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const twinchain::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TWC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TWC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TWC_ERR_INTERNAL, "unknown error");
  }
}

twc_text* make_text(std::string s) { return new twc_text{std::move(s)}; }

#define TWC_REQUIRE(cond, what) \
  if (!(cond)) return fail(TWC_ERR_INVALID_ARGUMENT, what)

twc_status emit_pair(twinchain::PosetPair pair, twc_poset** p, twc_poset** q) {
  *p = new twc_poset{std::move(pair.p)};
  *q = new twc_poset{std::move(pair.q)};
  return TWC_OK;
}

}  // namespace

extern "C" {

const char* twc_version(void) { return "0.1.0"; }

const char* twc_last_error(void) { return last_error.c_str(); }

const char* twc_status_name(twc_status status) {
  switch (status) {
    case TWC_OK:
      return "ok";
    case TWC_ERR_PARSE:
      return "parse error";
    case TWC_ERR_CYCLE:
      return "cycle";
    case TWC_ERR_INDEX:
      return "index out of range";
    case TWC_ERR_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case TWC_ERR_SIZE:
      return "size limit";
    case TWC_ERR_DEGENERATE_INPUT:
      return "degenerate input";
    case TWC_ERR_ODD_DIMENSION:
      return "odd dimension";
    case TWC_ERR_UNVALIDATED_INPUT:
      return "unvalidated input";
    case TWC_ERR_BOUND_VIOLATION:
      return "bound violation";
    case TWC_ERR_GOLDEN_MISMATCH:
      return "golden mismatch";
    case TWC_ERR_IO:
      return "i/o error";
    case TWC_ERR_OVERFLOW:
      return "overflow";
    case TWC_ERR_VERIFICATION_FAILED:
      return "verification failed";
    case TWC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TWC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

twc_status twc_poset_from_covers(size_t d, const int* covers, size_t n_covers, twc_poset** out) {
  return guarded([&] {
    TWC_REQUIRE(out != nullptr, "out is NULL");
    TWC_REQUIRE(covers != nullptr || n_covers == 0, "covers is NULL");
    std::vector<twinchain::Cover> list;
    for (size_t k = 0; k < n_covers; ++k) list.emplace_back(covers[2 * k], covers[2 * k + 1]);
    *out = new twc_poset{twinchain::Poset::from_covers(d, list)};
    return TWC_OK;
  });
}

twc_status twc_pair_parse(const char* text, twc_poset** p, twc_poset** q) {
  return guarded([&] {
    TWC_REQUIRE(text != nullptr && p != nullptr && q != nullptr, "NULL argument");
    return emit_pair(twinchain::parse_pair(text), p, q);
  });
}

twc_status twc_pair_read_file(const char* path, twc_poset** p, twc_poset** q) {
  return guarded([&] {
    TWC_REQUIRE(path != nullptr && p != nullptr && q != nullptr, "NULL argument");
    return emit_pair(twinchain::read_pair_file(path), p, q);
  });
}

twc_status twc_pair_format(const twc_poset* p, const twc_poset* q, twc_text** out) {
  return guarded([&] {
    TWC_REQUIRE(p != nullptr && q != nullptr && out != nullptr, "NULL argument");
    *out = make_text(twinchain::format_pair(p->value, q->value));
    return TWC_OK;
  });
}

size_t twc_poset_size(const twc_poset* p) { return p == nullptr ? 0 : p->value.size(); }

void twc_poset_free(twc_poset* p) { delete p; }

twc_status twc_facet_count(const twc_poset* p, const twc_poset* q, uint64_t* out) {
  return guarded([&] {
    TWC_REQUIRE(p != nullptr && q != nullptr && out != nullptr, "NULL argument");
    *out = twinchain::facet_count(p->value, q->value);
    return TWC_OK;
  });
}

twc_status twc_facet_chains(const twc_poset* p, const twc_poset* q, twc_family** out) {
  return guarded([&] {
    TWC_REQUIRE(p != nullptr && q != nullptr && out != nullptr, "NULL argument");
    *out = new twc_family{twinchain::facet_chains(p->value, q->value)};
    return TWC_OK;
  });
}

size_t twc_family_size(const twc_family* family) { return family == nullptr ? 0 : family->value.size(); }

twc_status twc_family_get(const twc_family* family, size_t k, uint32_t* p_mask, uint32_t* q_mask) {
  return guarded([&] {
    TWC_REQUIRE(family != nullptr && p_mask != nullptr && q_mask != nullptr, "NULL argument");
    if (k >= family->value.size()) {
      return fail(TWC_ERR_INDEX, "chain " + std::to_string(k) + " of " + std::to_string(family->value.size()));
    }
    *p_mask = family->value.members[k].p;
    *q_mask = family->value.members[k].q;
    return TWC_OK;
  });
}

twc_status twc_family_format(const twc_family* family, int json, twc_text** out) {
  return guarded([&] {
    TWC_REQUIRE(family != nullptr && out != nullptr, "NULL argument");
    *out = make_text(twinchain::format_family(family->value, json != 0));
    return TWC_OK;
  });
}

void twc_family_free(twc_family* family) { delete family; }

twc_status twc_bound(size_t d, uint64_t* numerator, uint64_t* denominator) {
  return guarded([&] {
    TWC_REQUIRE(numerator != nullptr && denominator != nullptr, "NULL argument");
    const twinchain::BoundValue b = twinchain::bound(d);
    *numerator = b.numerator;
    *denominator = b.denominator;
    return TWC_OK;
  });
}

twc_status twc_is_equality_case(const twc_poset* p, const twc_poset* q, int* out) {
  return guarded([&] {
    TWC_REQUIRE(p != nullptr && q != nullptr && out != nullptr, "NULL argument");
    *out = twinchain::is_equality_case(p->value, q->value) ? 1 : 0;
    return TWC_OK;
  });
}

twc_status twc_verify_geometry(const twc_poset* p, const twc_poset* q, twc_level level, twc_text** out) {
  return guarded([&] {
    TWC_REQUIRE(p != nullptr && q != nullptr && out != nullptr, "NULL argument");
    twinchain::CheckLevel lv;
    switch (level) {
      case TWC_LEVEL_VALIDITY:
        lv = twinchain::CheckLevel::kValidity;
        break;
      case TWC_LEVEL_FACETS:
        lv = twinchain::CheckLevel::kFacets;
        break;
      case TWC_LEVEL_COMPLETE:
        lv = twinchain::CheckLevel::kComplete;
        break;
      default:
        return fail(TWC_ERR_INVALID_ARGUMENT, "unknown level");
    }
    const twinchain::GeometryReport r = twinchain::verify_geometry(p->value, q->value, lv);
    *out = make_text(twinchain::format_geometry_report(r));
    if (!r.passed()) return fail(TWC_ERR_VERIFICATION_FAILED, "geometric check failed");
    return TWC_OK;
  });
}

void twc_census_options_init(twc_census_options* options) {
  if (options == nullptr) return;
  options->d = 0;
  options->extended = 0;
  options->prune = 1;
  options->jobs = 1;
  options->out_dir = nullptr;
}

twc_status twc_census_run(const twc_census_options* options, twc_text** out) {
  return guarded([&] {
    TWC_REQUIRE(options != nullptr && out != nullptr, "NULL argument");
    twinchain::CensusOptions o;
    o.d = options->d;
    o.extended = options->extended != 0;
    o.prune_automorphisms = options->prune != 0;
    o.jobs = options->jobs == 0 ? 1 : options->jobs;
    if (options->out_dir != nullptr) o.out_dir = options->out_dir;
    try {
      const twinchain::CensusReport r = twinchain::verify_theorem(o);
      *out = make_text(twinchain::census_summary(r));
      if (!r.equality_verified) return fail(TWC_ERR_VERIFICATION_FAILED, "equality characterization failed");
      return TWC_OK;
    } catch (const twinchain::BoundViolation& e) {
      *out = make_text(twinchain::format_pair(e.p(), e.q()));
      return fail(TWC_ERR_BOUND_VIOLATION, e.what());
    }
  });
}

twc_status twc_tables(const char* which, int long_run, int json, twc_text** out) {
  return guarded([&] {
    TWC_REQUIRE(which != nullptr && out != nullptr, "NULL argument");
    std::vector<twinchain::TableReport> reports;
    const std::string name = which;
    if (name == "all" || name == "ALL") {
      reports = twinchain::reproduce_tables(long_run != 0);
    } else {
      reports.push_back(twinchain::reproduce_table(twinchain::parse_table_id(name), long_run != 0));
    }
    std::string text;
    std::string failed;
    for (const auto& r : reports) {
      text += json != 0 ? twinchain::table_json(r) : twinchain::format_table(r);
      if (!r.passed()) failed += (failed.empty() ? "" : ", ") + twinchain::table_name(r.id);
    }
    *out = make_text(std::move(text));
    if (!failed.empty()) return fail(TWC_ERR_GOLDEN_MISMATCH, "tables differ from the reference values: " + failed);
    return TWC_OK;
  });
}

const char* twc_text_data(const twc_text* text) { return text == nullptr ? "" : text->value.c_str(); }

size_t twc_text_size(const twc_text* text) { return text == nullptr ? 0 : text->value.size(); }

void twc_text_free(twc_text* text) { delete text; }

}  // extern "C"
