#include "treeperm/treeperm.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <set>
#include <string>

#include "treeperm/codec.hpp"
#include "treeperm/distance.hpp"
#include "treeperm/edit_ops.hpp"
#include "treeperm/enumeration.hpp"
#include "treeperm/error.hpp"
#include "treeperm/factors.hpp"
#include "treeperm/verify.hpp"

struct tp_perm {
  treeperm::Permutation value;
};

struct tp_tree {
  treeperm::OrderedTree value;
};

struct tp_perm_list {
  std::vector<tp_perm> items;
};

struct tp_span_list {
  std::vector<tp_span> items;
};

struct tp_distance {
  std::size_t distance = 0;
  tp_perm common;
  std::vector<std::size_t> witness_a;
  std::vector<std::size_t> witness_b;
};

struct tp_series {
  treeperm::SeriesTable table;
};

namespace {

thread_local std::string last_error;

tp_status status_of(treeperm::ErrorKind kind) {
  using treeperm::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return TP_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse:
      return TP_ERR_PARSE;
    case ErrorKind::NotStackSortable:
      return TP_ERR_NOT_STACK_SORTABLE;
    case ErrorKind::NotComplete:
      return TP_ERR_NOT_COMPLETE;
    case ErrorKind::OutOfRange:
      return TP_ERR_OUT_OF_RANGE;
    case ErrorKind::SizeLimit:
      return TP_ERR_SIZE_LIMIT;
    case ErrorKind::Internal:
      return TP_ERR_INTERNAL;
  }
  return TP_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the thread's last
// error message.
template <typename Body>
tp_status guarded(Body&& body) {
  try {
    body();
    return TP_OK;
  } catch (const treeperm::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TP_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) {
    throw treeperm::Error(treeperm::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string rational_text(const treeperm::Rational& r) {
  const auto den = denominator(r);
  return den == 1 ? numerator(r).str() : numerator(r).str() + "/" + den.str();
}

treeperm::FactorSpan to_span(tp_span s) { return {s.start, s.end}; }

treeperm::InsertKind to_kind(tp_insert_kind kind) {
  switch (kind) {
    case TP_INSERT_INNER:
      return treeperm::InsertKind::Inner;
    case TP_INSERT_LEFT:
      return treeperm::InsertKind::Left;
    case TP_INSERT_RIGHT:
      return treeperm::InsertKind::Right;
  }
  throw treeperm::Error(treeperm::ErrorKind::InvalidArgument, "unknown insertion kind");
}

tp_perm* new_perm(treeperm::Permutation p) { return new tp_perm{std::move(p)}; }

}  // namespace

extern "C" {

const char* tp_version(void) { return "1.0.0"; }

const char* tp_status_name(tp_status status) {
  switch (status) {
    case TP_OK:
      return "ok";
    case TP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TP_ERR_PARSE:
      return "parse error";
    case TP_ERR_NOT_STACK_SORTABLE:
      return "not stack-sortable";
    case TP_ERR_NOT_COMPLETE:
      return "not a complete factor";
    case TP_ERR_OUT_OF_RANGE:
      return "out of range";
    case TP_ERR_SIZE_LIMIT:
      return "size limit exceeded";
    case TP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* tp_last_error(void) { return last_error.c_str(); }

void tp_string_free(char* s) { std::free(s); }

// ---- permutations ----------------------------------------------------------

tp_status tp_perm_parse(const char* text, tp_perm** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new_perm(treeperm::parse_permutation(text));
  });
}

tp_status tp_perm_from_values(const int* values, size_t n, tp_perm** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    *out = new_perm(treeperm::Permutation(treeperm::Word(values, values + n)));
  });
}

tp_status tp_perm_normalize(const int* values, size_t n, tp_perm** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    const treeperm::Word w(values, values + n);
    const std::set<int> distinct(w.begin(), w.end());
    if (distinct.size() != w.size()) {
      throw treeperm::Error(treeperm::ErrorKind::InvalidArgument, "values are not distinct");
    }
    *out = new_perm(treeperm::normalize(w));
  });
}

tp_status tp_perm_clone(const tp_perm* p, tp_perm** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new_perm(p->value);
  });
}

void tp_perm_free(tp_perm* p) { delete p; }

size_t tp_perm_size(const tp_perm* p) { return p ? p->value.size() : 0; }

const int* tp_perm_values(const tp_perm* p) {
  return p && !p->value.empty() ? p->value.word().data() : nullptr;
}

tp_status tp_perm_to_string(const tp_perm* p, char** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = copy_string(treeperm::to_string(p->value));
  });
}

int tp_perm_equal(const tp_perm* a, const tp_perm* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

int tp_is_stack_sortable(const tp_perm* p) {
  return p && treeperm::is_stack_sortable(p->value) ? 1 : 0;
}

int tp_find_231(const tp_perm* p, size_t positions[3]) {
  if (!p) return 0;
  const auto t = treeperm::find_231(p->value);
  if (!t) return 0;
  if (positions) {
    for (int i = 0; i < 3; ++i) positions[i] = (*t)[i];
  }
  return 1;
}

tp_status tp_perm_stats(const tp_perm* p, tp_stats* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const auto t = treeperm::decode(p->value);
    *out = tp_stats{p->value.size(), treeperm::lis_length(p->value),
                    treeperm::lds_length(p->value), treeperm::leaf_count(t), treeperm::height(t)};
  });
}

tp_status tp_pattern_occurs(const tp_perm* needle, const tp_perm* haystack, int* out) {
  return guarded([&] {
    require(needle, "needle");
    require(haystack, "haystack");
    require(out, "out");
    *out = treeperm::pattern_occurs(needle->value, haystack->value) ? 1 : 0;
  });
}

tp_status tp_common_pattern_bruteforce(const tp_perm* a, const tp_perm* b, tp_perm** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new_perm(treeperm::largest_common_pattern_bruteforce(a->value, b->value));
  });
}

// ---- trees -----------------------------------------------------------------

tp_status tp_tree_parse(const char* text, tp_tree** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new tp_tree{treeperm::parse_tree(text)};
  });
}

void tp_tree_free(tp_tree* t) { delete t; }

tp_status tp_tree_to_string(const tp_tree* t, char** out) {
  return guarded([&] {
    require(t, "t");
    require(out, "out");
    *out = copy_string(treeperm::serialize_tree(t->value));
  });
}

size_t tp_tree_edge_count(const tp_tree* t) { return t ? t->value.edge_count() : 0; }
size_t tp_tree_leaf_count(const tp_tree* t) { return t ? treeperm::leaf_count(t->value) : 0; }
size_t tp_tree_height(const tp_tree* t) { return t ? treeperm::height(t->value) : 0; }

int tp_tree_equal(const tp_tree* a, const tp_tree* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

tp_status tp_tree_subtrees(const tp_tree* t, tp_span_list** out) {
  return guarded([&] {
    require(t, "t");
    require(out, "out");
    auto list = std::make_unique<tp_span_list>();
    for (const auto& edges : treeperm::enumerate_subtrees(t->value)) {
      list->items.push_back(tp_span{edges.front(), edges.back()});
    }
    *out = list.release();
  });
}

tp_status tp_encode(const tp_tree* t, tp_perm** out) {
  return guarded([&] {
    require(t, "t");
    require(out, "out");
    *out = new_perm(treeperm::encode(t->value));
  });
}

tp_status tp_decode(const tp_perm* p, tp_tree** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new tp_tree{treeperm::decode(p->value)};
  });
}

// ---- factors ---------------------------------------------------------------

tp_status tp_is_compact(const tp_perm* p, tp_span span, int* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = treeperm::is_compact(p->value, to_span(span)) ? 1 : 0;
  });
}

tp_status tp_is_complete(const tp_perm* p, tp_span span, int* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = treeperm::is_complete(p->value, to_span(span)) ? 1 : 0;
  });
}

tp_status tp_factors(const tp_perm* p, tp_factor_filter filter, tp_span_list** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const auto spans = filter == TP_FACTORS_COMPLETE ? treeperm::complete_factors(p->value)
                                                     : treeperm::compact_factors(p->value);
    auto list = std::make_unique<tp_span_list>();
    for (const auto& s : spans) list->items.push_back(tp_span{s.start, s.end});
    *out = list.release();
  });
}

tp_status tp_classify_compact(const tp_perm* p, tp_span span, tp_compact_kind* kind,
                              tp_span* path) {
  return guarded([&] {
    require(p, "p");
    require(kind, "kind");
    const auto cls = treeperm::classify_compact(p->value, to_span(span));
    if (cls.kind == treeperm::CompactKind::Subtree) {
      *kind = TP_COMPACT_SUBTREE;
    } else {
      *kind = TP_COMPACT_INTERNAL_PATH;
      if (path) *path = tp_span{cls.path.front(), cls.path.back()};
    }
  });
}

size_t tp_span_list_size(const tp_span_list* list) { return list ? list->items.size() : 0; }

tp_status tp_span_list_get(const tp_span_list* list, size_t index, tp_span* out) {
  return guarded([&] {
    require(list, "list");
    require(out, "out");
    if (index >= list->items.size()) {
      throw treeperm::Error(treeperm::ErrorKind::OutOfRange, "index past end of list");
    }
    *out = list->items[index];
  });
}

void tp_span_list_free(tp_span_list* list) { delete list; }

// ---- edit operations -------------------------------------------------------

void tp_shift_bar(const int* values, size_t n, int a, int* out) {
  if (n == 0 || !values || !out) return;
  const auto shifted = treeperm::shift_bar(std::span<const int>(values, n), a);
  std::copy(shifted.begin(), shifted.end(), out);
}

tp_status tp_delete_at(const tp_perm* p, size_t pos, tp_perm** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new_perm(treeperm::delete_at(p->value, pos));
  });
}

tp_status tp_delete_value(const tp_perm* p, int value, tp_perm** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const auto pos = p->value.position_of(value);
    if (pos == 0) {
      throw treeperm::Error(treeperm::ErrorKind::OutOfRange,
                            "value " + std::to_string(value) + " does not occur");
    }
    *out = new_perm(treeperm::delete_at(p->value, pos));
  });
}

tp_status tp_insert(const tp_perm* p, tp_insert_kind kind, tp_span factor, tp_perm** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new_perm(treeperm::insert_at(p->value, to_kind(kind), to_span(factor)));
  });
}

tp_status tp_insert_empty(tp_perm** out) {
  return guarded([&] {
    require(out, "out");
    *out = new_perm(treeperm::insert_empty());
  });
}

tp_status tp_neighbors(const tp_perm* p, tp_perm_list** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    auto list = std::make_unique<tp_perm_list>();
    for (auto& q : treeperm::neighbors(p->value)) list->items.push_back(tp_perm{std::move(q)});
    *out = list.release();
  });
}

size_t tp_perm_list_size(const tp_perm_list* list) { return list ? list->items.size() : 0; }

const tp_perm* tp_perm_list_get(const tp_perm_list* list, size_t index) {
  return list && index < list->items.size() ? &list->items[index] : nullptr;
}

void tp_perm_list_free(tp_perm_list* list) { delete list; }

// ---- distance --------------------------------------------------------------

namespace {
tp_distance* wrap(treeperm::DistanceResult r) {
  return new tp_distance{r.distance, tp_perm{std::move(r.common)}, std::move(r.witness_a),
                         std::move(r.witness_b)};
}
}  // namespace

tp_status tp_distance_perm(const tp_perm* a, const tp_perm* b, tp_distance** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(treeperm::perm_distance(a->value, b->value));
  });
}

tp_status tp_distance_tree(const tp_tree* a, const tp_tree* b, tp_distance** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(treeperm::tree_edit_distance(a->value, b->value));
  });
}

size_t tp_distance_value(const tp_distance* d) { return d ? d->distance : 0; }

const tp_perm* tp_distance_common(const tp_distance* d) { return d ? &d->common : nullptr; }

size_t tp_distance_witness(const tp_distance* d, int side, const size_t** positions) {
  if (!d) return 0;
  const auto& w = side == 0 ? d->witness_a : d->witness_b;
  if (positions) *positions = w.empty() ? nullptr : w.data();
  return w.size();
}

tp_status tp_distance_script(const tp_perm* a, const tp_perm* b, tp_perm_list** steps,
                             char** description) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(steps, "steps");
    const auto script = treeperm::edit_script(a->value, b->value);
    auto list = std::make_unique<tp_perm_list>();
    list->items.push_back(tp_perm{a->value});
    std::string text;
    for (const auto& step : script) {
      list->items.push_back(tp_perm{step.result});
      text += treeperm::describe(step.op) + "\n";
    }
    if (description) *description = copy_string(text);
    *steps = list.release();
  });
}

void tp_distance_free(tp_distance* d) { delete d; }

tp_status tp_bfs_distance(const tp_perm* a, const tp_perm* b, size_t cap, size_t* distance,
                          int* found) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(distance, "distance");
    require(found, "found");
    const auto d = treeperm::bfs_oracle_distance(a->value, b->value, cap);
    *found = d ? 1 : 0;
    *distance = d.value_or(0);
  });
}

tp_status tp_pattern_contains(const tp_perm* a, const tp_perm* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = treeperm::pattern_contains(a->value, b->value) ? 1 : 0;
  });
}

// ---- enumeration -----------------------------------------------------------

tp_status tp_catalan(size_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(treeperm::catalan(n).str());
  });
}

tp_status tp_narayana(size_t n, size_t k, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(treeperm::narayana(n, k).str());
  });
}

tp_status tp_series_compute(tp_series_kind kind, size_t n, tp_series** out) {
  return guarded([&] {
    require(out, "out");
    switch (kind) {
      case TP_SERIES_I:
        *out = new tp_series{treeperm::series_I(n)};
        return;
      case TP_SERIES_S1:
        *out = new tp_series{treeperm::series_S1(n)};
        return;
      case TP_SERIES_S2:
        *out = new tp_series{treeperm::series_S2(n)};
        return;
      case TP_SERIES_D:
        *out = new tp_series{treeperm::table_D(n)};
        return;
      case TP_SERIES_NARAYANA:
        *out = new tp_series{treeperm::narayana_table(n)};
        return;
      case TP_SERIES_HEIGHTS:
        *out = new tp_series{treeperm::heights_via_recurrence(n)};
        return;
      case TP_SERIES_HEIGHTS_CONTINUED_FRACTION:
        *out = new tp_series{treeperm::heights_via_continued_fraction(n)};
        return;
    }
    throw treeperm::Error(treeperm::ErrorKind::InvalidArgument, "unknown series kind");
  });
}

size_t tp_series_dims(const tp_series* s) { return s ? s->table.dims() : 0; }

size_t tp_series_bound(const tp_series* s, size_t dim) {
  return s && dim < s->table.dims() ? s->table.bound(dim) : 0;
}

tp_status tp_series_coeff(const tp_series* s, const size_t* exponents, size_t count, char** out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    if (count > 0) require(exponents, "exponents");
    *out = copy_string(s->table.at(std::vector<std::size_t>(exponents, exponents + count)).str());
  });
}

tp_status tp_series_text(const tp_series* s, char** out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = copy_string(s->table.to_text());
  });
}

tp_status tp_series_json(const tp_series* s, char** out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = copy_string(s->table.to_json());
  });
}

void tp_series_free(tp_series* s) { delete s; }

tp_status tp_avg_distance(tp_avg_target target, size_t n, char** exact, double* approx) {
  return guarded([&] {
    treeperm::Rational r;
    switch (target) {
      case TP_TARGET_ID:
        r = treeperm::avg_distance_to_id(n);
        break;
      case TP_TARGET_CHAIN:
        r = treeperm::avg_distance_to_chain(n);
        break;
      default:
        throw treeperm::Error(treeperm::ErrorKind::InvalidArgument, "unknown target");
    }
    if (exact) *exact = copy_string(rational_text(r));
    if (approx) *approx = static_cast<double>(r);
  });
}

tp_status tp_avg_height_report(size_t n, tp_height_report* out) {
  return guarded([&] {
    require(out, "out");
    const auto r = treeperm::height_report(n);
    *out = tp_height_report{r.n, r.exact, r.predicted, r.relative_error};
  });
}

tp_status tp_neighborhood_report(size_t n, tp_neighborhood* out, char** mean_exact) {
  return guarded([&] {
    require(out, "out");
    const auto r = treeperm::neighborhood_report(n);
    *out = tp_neighborhood{r.n,
                           r.trees,
                           r.max_deletions,
                           r.max_insertions,
                           r.deletion_bound,
                           r.insertion_bound,
                           r.bounds_hold ? 1 : 0,
                           static_cast<double>(r.mean_pairwise_distance),
                           r.n_over_ln_n};
    if (mean_exact) *mean_exact = copy_string(rational_text(r.mean_pairwise_distance));
  });
}

// ---- verification ----------------------------------------------------------

tp_status tp_verify(const char* suite, size_t max_n, tp_check_callback callback, void* user,
                    size_t* failures) {
  return guarded([&] {
    require(suite, "suite");
    const auto results =
        treeperm::run_verify(suite, max_n, [&](const treeperm::CheckResult& r) {
          if (callback) {
            callback(r.suite.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
          }
        });
    if (failures) {
      *failures = static_cast<size_t>(
          std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
    }
  });
}

}  // extern "C"
