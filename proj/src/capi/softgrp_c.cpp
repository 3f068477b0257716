#include "softgrp/softgrp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "softgrp/bn_example.hpp"
#include "softgrp/category.hpp"
#include "softgrp/error.hpp"
#include "softgrp/json_io.hpp"

struct sg_group {
  softgrp::FiniteGroup value;
};
struct sg_soft_group {
  softgrp::SoftGroup value;
};
struct sg_soft_hom {
  softgrp::SoftHom value;
};

namespace {

using softgrp::Error;
using softgrp::ErrorCode;
using softgrp::io::json;

thread_local std::string last_error;

sg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return SG_ERR_PARSE;
    case ErrorCode::DegreeMismatch: return SG_ERR_DEGREE_MISMATCH;
    case ErrorCode::NotSubgroup: return SG_ERR_NOT_SUBGROUP;
    case ErrorCode::NotHomomorphism: return SG_ERR_NOT_HOMOMORPHISM;
    case ErrorCode::DiagramViolation: return SG_ERR_DIAGRAM_VIOLATION;
    case ErrorCode::NotComposable: return SG_ERR_NOT_COMPOSABLE;
    case ErrorCode::ScaleBound: return SG_ERR_SCALE_BOUND;
    case ErrorCode::KernelUndefined: return SG_ERR_KERNEL_UNDEFINED;
    case ErrorCode::Internal: return SG_ERR_INTERNAL;
  }
  return SG_ERR_INTERNAL;
}

template <class Fn>
sg_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return SG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = e.what();
    return SG_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse(const char* text) {
  require(text, "json text");
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

softgrp::Bounds to_bounds(const sg_bounds* b) {
  softgrp::Bounds out;
  if (!b) return out;
  out.max_order = b->max_order;
  out.max_params = b->max_params;
  out.max_candidates = b->max_candidates;
  out.max_homs = b->max_homs;
  out.max_witness_order = b->max_witness_order;
  return out;
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "1.0.0"; }

const char* sg_status_name(sg_status status) {
  switch (status) {
    case SG_OK: return "ok";
    case SG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SG_ERR_PARSE: return "parse-error";
    case SG_ERR_DEGREE_MISMATCH: return "degree-mismatch";
    case SG_ERR_NOT_SUBGROUP: return "not-subgroup";
    case SG_ERR_NOT_HOMOMORPHISM: return "not-homomorphism";
    case SG_ERR_DIAGRAM_VIOLATION: return "diagram-violation";
    case SG_ERR_NOT_COMPOSABLE: return "not-composable";
    case SG_ERR_SCALE_BOUND: return "scale-bound";
    case SG_ERR_KERNEL_UNDEFINED: return "kernel-undefined";
    case SG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sg_last_error(void) { return last_error.c_str(); }

void sg_string_free(char* s) { std::free(s); }

sg_bounds sg_default_bounds(void) {
  const softgrp::Bounds b;
  return sg_bounds{b.max_order, b.max_params, b.max_candidates, b.max_homs, b.max_witness_order};
}

// -- groups ------------------------------------------------------------------

sg_status sg_group_hyperoctahedral(int n, sg_group** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    *out = new sg_group{softgrp::hyperoctahedral_group(n)};
  });
}

sg_status sg_group_from_json(const char* text, sg_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sg_group{softgrp::io::group_from_json(parse(text))};
  });
}

sg_status sg_group_to_json(const sg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup_string(softgrp::io::to_json(g->value).dump());
  });
}

size_t sg_group_order(const sg_group* g) { return g ? g->value.order() : 0; }
int sg_group_degree(const sg_group* g) { return g ? g->value.degree() : 0; }
void sg_group_free(sg_group* g) { delete g; }

sg_status sg_presentation_check(int n, char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    json out = json::array();
    for (const auto& r : softgrp::check_presentation(n)) {
      out.push_back({{"relation", r.relation}, {"holds", r.holds}});
    }
    *out_json = dup_string(out.dump());
  });
}

sg_status sg_enumerate(const char* kind, int n, char** out_lines, size_t* out_count) {
  return guarded([&] {
    require(kind, "kind");
    require(out_lines, "out");
    std::string lines;
    size_t count = 0;
    if (std::strcmp(kind, "sc") == 0) {
      for (const auto& a : softgrp::enumerate_signed_compositions(n)) {
        lines += softgrp::io::to_json(a).dump() + "\n";
        ++count;
      }
    } else if (std::strcmp(kind, "bp") == 0) {
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "bi-partition enumeration needs n >= 1");
      for (const auto& mu : softgrp::enumerate_bipartitions(n)) {
        lines += softgrp::io::to_json(mu).dump() + "\n";
        ++count;
      }
    } else {
      throw Error(ErrorCode::InvalidArgument, std::string("unknown enumeration kind ") + kind);
    }
    *out_lines = dup_string(lines);
    if (out_count) *out_count = count;
  });
}

// -- soft groups -------------------------------------------------------------

sg_status sg_soft_group_from_json(const char* text, sg_soft_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sg_soft_group{softgrp::io::soft_group_from_json(parse(text))};
  });
}

sg_status sg_soft_group_to_json(const sg_soft_group* s, char** out) {
  return guarded([&] {
    require(s, "soft group");
    require(out, "out");
    *out = dup_string(softgrp::io::to_json(s->value).dump());
  });
}

size_t sg_soft_group_param_count(const sg_soft_group* s) { return s ? s->value.size() : 0; }
int sg_soft_group_is_trivial(const sg_soft_group* s) { return s && softgrp::is_trivial(s->value); }
int sg_soft_group_is_completely_soft(const sg_soft_group* s) {
  return s && softgrp::is_completely_soft(s->value);
}
void sg_soft_group_free(sg_soft_group* s) { delete s; }

sg_status sg_final_object(sg_soft_group** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sg_soft_group{softgrp::final_object()};
  });
}

sg_status sg_soft_product(const sg_soft_group* a, const sg_soft_group* b, sg_soft_group** product,
                          sg_soft_hom** proj1, sg_soft_hom** proj2) {
  return guarded([&] {
    require(a, "first factor");
    require(b, "second factor");
    require(product, "product");
    auto cone = softgrp::categorical_product(a->value, b->value);
    auto* p1 = proj1 ? new sg_soft_hom{cone.projections[0]} : nullptr;
    auto* p2 = proj2 ? new sg_soft_hom{cone.projections[1]} : nullptr;
    *product = new sg_soft_group{cone.object};
    if (proj1) *proj1 = p1;
    if (proj2) *proj2 = p2;
  });
}

sg_status sg_monoidal_check(const sg_soft_group* a, const sg_soft_group* b, const sg_soft_group* c,
                            char** out_json) {
  return guarded([&] {
    require(a, "first factor");
    require(b, "second factor");
    require(c, "third factor");
    require(out_json, "out");
    const auto report = softgrp::monoidal_sanity(a->value, b->value, c->value);
    json checks = json::array();
    for (const auto& ch : report.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}});
    *out_json = dup_string(json{{"ok", report.ok()}, {"checks", checks}}.dump());
  });
}

// -- soft homs ---------------------------------------------------------------

sg_status sg_soft_hom_from_json(const char* text, sg_soft_hom** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sg_soft_hom{softgrp::io::soft_hom_from_json(parse(text))};
  });
}

sg_status sg_soft_hom_to_json(const sg_soft_hom* h, char** out) {
  return guarded([&] {
    require(h, "soft hom");
    require(out, "out");
    *out = dup_string(softgrp::io::to_json(h->value).dump());
  });
}

sg_status sg_soft_hom_unit(const sg_soft_group* s, sg_soft_hom** out) {
  return guarded([&] {
    require(s, "soft group");
    require(out, "out");
    *out = new sg_soft_hom{softgrp::SoftHom::unit(s->value)};
  });
}

sg_status sg_soft_hom_compose(const sg_soft_hom* second, const sg_soft_hom* first,
                              sg_soft_hom** out) {
  return guarded([&] {
    require(second, "second");
    require(first, "first");
    require(out, "out");
    *out = new sg_soft_hom{softgrp::compose_soft_homs(second->value, first->value)};
  });
}

int sg_soft_hom_equal(const sg_soft_hom* a, const sg_soft_hom* b) {
  return a && b && a->value == b->value;
}

int sg_soft_hom_is_isomorphism(const sg_soft_hom* h) { return h && softgrp::is_isomorphism(h->value); }

void sg_soft_hom_free(sg_soft_hom* h) { delete h; }

sg_status sg_soft_kernel(const sg_soft_hom* h, int* defined, sg_soft_group** out) {
  return guarded([&] {
    require(h, "soft hom");
    require(defined, "defined");
    require(out, "out");
    auto k = softgrp::soft_kernel(h->value);
    *defined = k ? 1 : 0;
    *out = k ? new sg_soft_group{k->object} : nullptr;
  });
}

sg_status sg_kernel_report(const sg_soft_hom* h, char** out_json) {
  return guarded([&] {
    require(h, "soft hom");
    require(out_json, "out");
    json out;
    auto k = softgrp::soft_kernel(h->value);
    out["defined"] = k.has_value();
    out["kernel_order"] = softgrp::kernel(h->value.f()).order();
    if (k) {
      json params = json::array();
      for (const auto& a : k->object.params()) params.push_back(softgrp::io::to_json(a));
      const auto report = softgrp::soft_kernel_is_trivial_iff_injective(h->value);
      out["params"] = params;
      out["carrier_order"] = k->object.carrier().order();
      out["injective"] = report.injective;
      out["trivial"] = report.trivial;
      out["agree"] = report.agree();
      out["kernel"] = softgrp::io::to_json(k->object);
    }
    *out_json = dup_string(out.dump());
  });
}

sg_status sg_analyze(const sg_soft_hom* h, const char* property, const sg_bounds* bounds,
                     unsigned long long seed, size_t universe_size, sg_holds* holds,
                     char** out_verdict_json) {
  return guarded([&] {
    require(h, "soft hom");
    require(property, "property");
    require(out_verdict_json, "out");
    softgrp::MorphismOracle oracle(softgrp::seeded_universe(seed, universe_size),
                                   to_bounds(bounds));
    softgrp::MorphismVerdict v;
    if (std::strcmp(property, "monic") == 0) {
      v = softgrp::check_monic(h->value, oracle);
    } else if (std::strcmp(property, "epic") == 0) {
      v = softgrp::check_epic(h->value, oracle);
    } else if (std::strcmp(property, "split-monic") == 0) {
      v = softgrp::check_split_monic(h->value, oracle);
    } else {
      throw Error(ErrorCode::InvalidArgument, std::string("unknown property ") + property);
    }
    if (holds) {
      *holds = v.holds == softgrp::Holds::True    ? SG_HOLDS_TRUE
               : v.holds == softgrp::Holds::False ? SG_HOLDS_FALSE
                                                  : SG_HOLDS_UNKNOWN_AT_SCALE;
    }
    *out_verdict_json = dup_string(softgrp::io::to_json(v).dump());
  });
}

sg_status sg_verify_verdict(const sg_soft_hom* h, const char* verdict_json, const sg_bounds* bounds,
                            int* ok) {
  return guarded([&] {
    require(h, "soft hom");
    require(ok, "ok");
    const auto v = softgrp::io::verdict_from_json(parse(verdict_json));
    *ok = softgrp::verify_verdict(v, h->value, to_bounds(bounds)) ? 1 : 0;
  });
}

sg_status sg_hyperoctahedral_example(int n, sg_soft_group** by_composition,
                                     sg_soft_group** by_bipartition, sg_soft_hom** hom) {
  return guarded([&] {
    auto h = softgrp::lambda_soft_hom(n);
    if (by_composition) *by_composition = new sg_soft_group{h.source()};
    if (by_bipartition) *by_bipartition = new sg_soft_group{h.target()};
    if (hom) *hom = new sg_soft_hom{std::move(h)};
  });
}

}  // extern "C"
