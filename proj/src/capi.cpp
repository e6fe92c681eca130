/*
Copyright 2026 The proflat Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "proflat/proflat.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "proflat/errors.hpp"
#include "proflat/harness.hpp"
#include "proflat/lattice.hpp"
#include "proflat/subgroup_lattice.hpp"
#include "proflat/tower.hpp"

struct proflat_catalogue {
  proflat::Catalogue catalogue;
};
struct proflat_group {
  proflat::GroupPtr group;
};
struct proflat_lattice {
  proflat::SubgroupLatticeView view;
};
struct proflat_tower {
  proflat::TowerPtr tower;
};

namespace {

thread_local std::string last_error;

proflat_status fail(proflat_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F> proflat_status guarded(F &&f) {
  try {
    last_error.clear();
    f();
    return PROFLAT_OK;
  } catch (const proflat::ParseError &e) {
    return fail(PROFLAT_ERR_PARSE, e.what());
  } catch (const proflat::DomainError &e) {
    return fail(PROFLAT_ERR_DOMAIN, e.what());
  } catch (const proflat::ResourceError &e) {
    return fail(PROFLAT_ERR_RESOURCE, e.what());
  } catch (const proflat::PreconditionError &e) {
    return fail(PROFLAT_ERR_PRECONDITION, e.what());
  } catch (const proflat::ConstructionError &e) {
    return fail(PROFLAT_ERR_CONSTRUCTION, e.what());
  } catch (const std::bad_alloc &) {
    return fail(PROFLAT_ERR_RESOURCE, "out of memory");
  } catch (const std::exception &e) {
    return fail(PROFLAT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PROFLAT_ERR_INTERNAL, "unknown error");
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const char *path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw proflat::DomainError(std::string("cannot open file '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_lines(const std::vector<std::string> &items) {
  std::string out;
  for (const auto &s : items) out += s + "\n";
  return out;
}

} // namespace

#define PROFLAT_CALL(...) return guarded([&] { __VA_ARGS__; })

extern "C" {

const char *proflat_last_error(void) { return last_error.c_str(); }

const char *proflat_status_name(proflat_status status) {
  switch (status) {
  case PROFLAT_OK: return "ok";
  case PROFLAT_ERR_DOMAIN: return "domain error";
  case PROFLAT_ERR_PARSE: return "parse error";
  case PROFLAT_ERR_RESOURCE: return "resource error";
  case PROFLAT_ERR_PRECONDITION: return "precondition error";
  case PROFLAT_ERR_CONSTRUCTION: return "construction error";
  case PROFLAT_ERR_INVALID_ARGUMENT: return "invalid argument";
  case PROFLAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void proflat_string_free(char *s) { std::free(s); }

size_t proflat_max_order(void) { return proflat::max_group_order(); }

proflat_status proflat_set_max_order(size_t bound) {
  if (bound == 0) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "order bound must be positive");
  PROFLAT_CALL(proflat::set_max_group_order(bound));
}

proflat_status proflat_catalogue_builtin(proflat_catalogue **out) {
  if (!out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null output pointer");
  PROFLAT_CALL(*out = new proflat_catalogue{proflat::builtin_catalogue()});
}

proflat_status proflat_catalogue_add_text(proflat_catalogue *c, const char *text, size_t *added) {
  if (!c || !text) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL({
    // Parse into a copy so a failing record leaves the catalogue unchanged.
    proflat::Catalogue next = c->catalogue;
    const std::size_t n = proflat::add_catalogue_text(next, text);
    c->catalogue = std::move(next);
    if (added) *added = n;
  });
}

proflat_status proflat_catalogue_add_file(proflat_catalogue *c, const char *path, size_t *added) {
  if (!c || !path) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL({
    const std::string text = read_file(path);
    proflat::Catalogue next = c->catalogue;
    const std::size_t n = proflat::add_catalogue_text(next, text);
    c->catalogue = std::move(next);
    if (added) *added = n;
  });
}

proflat_status proflat_catalogue_list(const proflat_catalogue *c, char **out) {
  if (!c || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL({
    std::string s;
    for (const auto &e : c->catalogue.entries())
      s += e.name + " order " + std::to_string(e.group->order()) + " " +
           (e.source == proflat::CatalogueEntry::Source::builtin ? "builtin" : "file") + "\n";
    *out = dup_string(s);
  });
}

void proflat_catalogue_free(proflat_catalogue *c) { delete c; }

proflat_status proflat_group_resolve(const proflat_catalogue *c, const char *spec,
                                     proflat_group **out) {
  if (!c || !spec || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out = new proflat_group{proflat::resolve_group(c->catalogue, spec)});
}

proflat_status proflat_group_order(const proflat_group *g, size_t *out) {
  if (!g || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = g->group->order();
  return PROFLAT_OK;
}

proflat_status proflat_group_name(const proflat_group *g, char **out) {
  if (!g || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out = dup_string(g->group->name()));
}

void proflat_group_free(proflat_group *g) { delete g; }

proflat_status proflat_lattice_compute(const proflat_group *g, proflat_lattice **out) {
  if (!g || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out = new proflat_lattice{proflat::enumerate_subgroups(g->group)});
}

proflat_status proflat_lattice_size(const proflat_lattice *l, size_t *out) {
  if (!l || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = l->view.size();
  return PROFLAT_OK;
}

proflat_status proflat_lattice_emit(const proflat_lattice *l, const char *format, char **out) {
  if (!l || !format || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  const std::string f = format;
  if (f != "hasse" && f != "json")
    return fail(PROFLAT_ERR_INVALID_ARGUMENT, "unknown format '" + f + "' (hasse or json)");
  PROFLAT_CALL({
    if (f == "hasse")
      *out = dup_string(proflat::to_exchange(l->view.lattice()));
    else
      *out = dup_string(proflat::lattice_json(l->view).dump(2) + "\n");
  });
}

void proflat_lattice_free(proflat_lattice *l) { delete l; }

proflat_status proflat_check(const proflat_group *g, const char *predicate, char **out_json) {
  if (!g || !predicate || !out_json) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out_json = dup_string(proflat::check_predicate(predicate, g->group).dump(2)));
}

proflat_status proflat_predicate_names(char **out) {
  if (!out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null output pointer");
  PROFLAT_CALL(*out = dup_string(join_lines(proflat::predicate_names())));
}

proflat_status proflat_tower_builtin(const char *name, size_t depth, proflat_tower **out) {
  if (!name || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  if (depth == 0) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "depth must be positive");
  PROFLAT_CALL(*out = new proflat_tower{proflat::builtin_tower(name, depth)});
}

proflat_status proflat_tower_parse(const char *text, proflat_tower **out) {
  if (!text || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out = new proflat_tower{proflat::parse_tower(text)});
}

proflat_status proflat_tower_load(const char *path, proflat_tower **out) {
  if (!path || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out = new proflat_tower{proflat::parse_tower(read_file(path))});
}

proflat_status proflat_tower_truncate(const proflat_tower *t, size_t depth, proflat_tower **out) {
  if (!t || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL(*out = new proflat_tower{t->tower->truncated(depth)});
}

proflat_status proflat_tower_depth(const proflat_tower *t, size_t *out) {
  if (!t || !out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  *out = t->tower->depth();
  return PROFLAT_OK;
}

proflat_status proflat_tower_trajectory(const proflat_tower *t, const char *predicate,
                                        char **out_text, char **out_json) {
  if (!t || !predicate) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  const auto p = proflat::parse_trajectory_predicate(predicate);
  if (!p)
    return fail(PROFLAT_ERR_INVALID_ARGUMENT,
                std::string("unknown trajectory predicate '") + predicate +
                    "' (width, distributive, modular, decomposable)");
  PROFLAT_CALL({
    const auto r = proflat::level_lattice_trajectory(*t->tower, *p);
    const std::string text = proflat::format_trajectory(r);
    char *json_out = nullptr;
    if (out_json) {
      nlohmann::ordered_json j{{"tower", t->tower->name()},
                               {"predicate", predicate},
                               {"values", r.values},
                               {"verdict", proflat::to_string(r.verdict)},
                               {"truncated", r.truncated},
                               {"certified_depth", r.values.size()},
                               {"text", text}};
      json_out = dup_string(j.dump(2));
    }
    if (out_text) *out_text = dup_string(text);
    if (out_json) *out_json = json_out;
  });
}

proflat_status proflat_tower_names(char **out) {
  if (!out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null output pointer");
  PROFLAT_CALL(*out = dup_string(join_lines(proflat::builtin_tower_names())));
}

void proflat_tower_free(proflat_tower *t) { delete t; }

proflat_status proflat_suite_names(char **out) {
  if (!out) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null output pointer");
  PROFLAT_CALL(*out = dup_string(join_lines(proflat::suite_names())));
}

proflat_status proflat_verify(const proflat_catalogue *c, const char *suite, size_t max_order,
                              unsigned jobs, char **out_report, int *all_passed) {
  if (!c || !suite || !out_report) return fail(PROFLAT_ERR_INVALID_ARGUMENT, "null argument");
  PROFLAT_CALL({
    proflat::VerifyOptions o;
    o.max_order = max_order;
    o.jobs = jobs == 0 ? 1 : jobs;
    const auto report = proflat::run_suite(suite, c->catalogue, o);
    *out_report = dup_string(proflat::report_json(report).dump(2) + "\n");
    if (all_passed) *all_passed = report.failed() == 0;
  });
}

} // extern "C"
