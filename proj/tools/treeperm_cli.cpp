// Command-line front end. Talks to the library only through treeperm.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "treeperm/treeperm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for anything the library refuses; always reported with exit 2.
struct Failure {
  std::string message;
};

void ok(tp_status s) {
  if (s != TP_OK) throw Failure{tp_last_error()};
}

struct PermDeleter {
  void operator()(tp_perm* p) const { tp_perm_free(p); }
};
struct TreeDeleter {
  void operator()(tp_tree* t) const { tp_tree_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { tp_string_free(s); }
};
using Perm = std::unique_ptr<tp_perm, PermDeleter>;
using Tree = std::unique_ptr<tp_tree, TreeDeleter>;

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> guard(s);
  return s ? std::string(s) : std::string();
}

bool looks_like_tree(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '(';
}

Tree read_tree(const std::string& text) {
  tp_tree* t = nullptr;
  ok(tp_tree_parse(text.c_str(), &t));
  return Tree(t);
}

// Trees are accepted wherever a permutation is expected and encoded first.
Perm read_perm(const std::string& text) {
  tp_perm* p = nullptr;
  if (looks_like_tree(text)) {
    const auto t = read_tree(text);
    ok(tp_encode(t.get(), &p));
  } else {
    ok(tp_perm_parse(text.c_str(), &p));
  }
  return Perm(p);
}

Perm read_sortable(const std::string& text) {
  auto p = read_perm(text);
  size_t pos[3];
  if (tp_find_231(p.get(), pos)) {
    const int* v = tp_perm_values(p.get());
    std::ostringstream msg;
    msg << "not stack-sortable: positions " << pos[0] << "," << pos[1] << "," << pos[2]
        << " (values " << v[pos[0] - 1] << "," << v[pos[1] - 1] << "," << v[pos[2] - 1]
        << ") form the pattern 231";
    throw Failure{msg.str()};
  }
  return p;
}

std::string text_of(const tp_perm* p) {
  char* s = nullptr;
  ok(tp_perm_to_string(p, &s));
  return take(s);
}

std::string text_of(const tp_tree* t) {
  char* s = nullptr;
  ok(tp_tree_to_string(t, &s));
  return take(s);
}

tp_span parse_span(const std::string& text) {
  tp_span span{0, 0};
  char tail = 0;
  unsigned long a = 0;
  unsigned long b = 0;
  if (std::sscanf(text.c_str(), "%lu:%lu%c", &a, &b, &tail) == 2) {
    span = {a, b};
  } else if (std::sscanf(text.c_str(), "%lu%c", &a, &tail) == 1) {
    span = {a, a};
  } else {
    throw Failure{"bad span '" + text + "', expected i:j"};
  }
  return span;
}

std::string word_text(const int* v, size_t start, size_t end) {
  bool small = true;
  for (size_t i = start; i <= end; ++i) small = small && v[i - 1] < 10;
  std::string out;
  for (size_t i = start; i <= end; ++i) {
    if (!small && i > start) out += ",";
    out += std::to_string(v[i - 1]);
  }
  return out;
}

struct Options {
  std::string a;
  std::string b;
  std::string out_file;
  bool compact = false;
  bool complete = false;
  bool classify = false;
  size_t pos = 0;
  int value = 0;
  std::string op;
  std::string span;
  bool trace = false;
  std::string oracle = "dp";
  std::string series;
  size_t n = 0;
  bool json = false;
  std::string target;
  std::string suite = "all";
  size_t max_n = 7;
};

void cmd_encode(const Options& o, std::ostream& out) {
  const auto t = read_tree(o.a);
  tp_perm* p = nullptr;
  ok(tp_encode(t.get(), &p));
  out << text_of(Perm(p).get()) << "\n";
}

void cmd_decode(const Options& o, std::ostream& out) {
  const auto p = read_sortable(o.a);
  tp_tree* t = nullptr;
  ok(tp_decode(p.get(), &t));
  out << text_of(Tree(t).get()) << "\n";
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto p = read_perm(o.a);
  size_t pos[3];
  if (!tp_find_231(p.get(), pos)) {
    out << "stack-sortable\n";
    return kExitOk;
  }
  const int* v = tp_perm_values(p.get());
  out << "not stack-sortable: 231 at positions " << pos[0] << "," << pos[1] << "," << pos[2]
      << " (values " << v[pos[0] - 1] << "," << v[pos[1] - 1] << "," << v[pos[2] - 1] << ")\n";
  return kExitCheckFailed;
}

void cmd_factors(const Options& o, std::ostream& out) {
  const auto p = read_sortable(o.a);
  tp_span_list* raw = nullptr;
  ok(tp_factors(p.get(), o.complete ? TP_FACTORS_COMPLETE : TP_FACTORS_COMPACT, &raw));
  std::unique_ptr<tp_span_list, void (*)(tp_span_list*)> list(raw, tp_span_list_free);
  const int* v = tp_perm_values(p.get());
  for (size_t i = 0; i < tp_span_list_size(list.get()); ++i) {
    tp_span s;
    ok(tp_span_list_get(list.get(), i, &s));
    out << s.start << ":" << s.end << " " << word_text(v, s.start, s.end);
    if (o.classify) {
      tp_compact_kind kind;
      tp_span path{0, 0};
      ok(tp_classify_compact(p.get(), s, &kind, &path));
      if (kind == TP_COMPACT_SUBTREE) {
        out << " subtree";
      } else {
        out << " path " << path.start << ":" << path.end;
      }
    }
    out << "\n";
  }
}

void cmd_delete(const Options& o, std::ostream& out, bool by_value) {
  const auto p = read_sortable(o.a);
  tp_perm* q = nullptr;
  if (by_value) {
    ok(tp_delete_value(p.get(), o.value, &q));
  } else {
    ok(tp_delete_at(p.get(), o.pos, &q));
  }
  out << text_of(Perm(q).get()) << "\n";
}

void cmd_insert(const Options& o, std::ostream& out) {
  const auto p = read_sortable(o.a);
  tp_insert_kind kind = TP_INSERT_INNER;
  if (o.op == "left") {
    kind = TP_INSERT_LEFT;
  } else if (o.op == "right") {
    kind = TP_INSERT_RIGHT;
  }
  tp_perm* q = nullptr;
  if (tp_perm_size(p.get()) == 0 && o.span.empty()) {
    ok(tp_insert_empty(&q));
  } else {
    ok(tp_insert(p.get(), kind, parse_span(o.span), &q));
  }
  out << text_of(Perm(q).get()) << "\n";
}

void cmd_neighbors(const Options& o, std::ostream& out) {
  const auto p = read_sortable(o.a);
  tp_perm_list* raw = nullptr;
  ok(tp_neighbors(p.get(), &raw));
  std::unique_ptr<tp_perm_list, void (*)(tp_perm_list*)> list(raw, tp_perm_list_free);
  for (size_t i = 0; i < tp_perm_list_size(list.get()); ++i) {
    const auto text = text_of(tp_perm_list_get(list.get(), i));
    out << (text.empty() ? "(empty)" : text) << "\n";
  }
}

void cmd_distance(const Options& o, std::ostream& out) {
  const auto a = read_sortable(o.a);
  const auto b = read_sortable(o.b);
  if (o.oracle == "bfs") {
    size_t d = 0;
    int found = 0;
    ok(tp_bfs_distance(a.get(), b.get(), tp_perm_size(a.get()) + tp_perm_size(b.get()), &d,
                       &found));
    if (!found) throw Failure{"breadth-first search found no path"};
    out << d << "\n";
  } else if (o.oracle == "pattern") {
    tp_perm* u = nullptr;
    ok(tp_common_pattern_bruteforce(a.get(), b.get(), &u));
    const Perm common(u);
    out << tp_perm_size(a.get()) + tp_perm_size(b.get()) - 2 * tp_perm_size(common.get())
        << "\n";
  } else {
    tp_distance* raw = nullptr;
    ok(tp_distance_perm(a.get(), b.get(), &raw));
    std::unique_ptr<tp_distance, void (*)(tp_distance*)> d(raw, tp_distance_free);
    out << tp_distance_value(d.get()) << "\n";
  }
  if (!o.trace) return;

  tp_distance* raw = nullptr;
  ok(tp_distance_perm(a.get(), b.get(), &raw));
  std::unique_ptr<tp_distance, void (*)(tp_distance*)> d(raw, tp_distance_free);
  const auto common = text_of(tp_distance_common(d.get()));
  out << "common " << (common.empty() ? "(empty)" : common) << "\n";

  tp_perm_list* steps_raw = nullptr;
  char* desc = nullptr;
  ok(tp_distance_script(a.get(), b.get(), &steps_raw, &desc));
  std::unique_ptr<tp_perm_list, void (*)(tp_perm_list*)> steps(steps_raw, tp_perm_list_free);
  std::istringstream ops(take(desc));
  out << "start " << text_of(tp_perm_list_get(steps.get(), 0)) << "\n";
  std::string line;
  for (size_t i = 1; i < tp_perm_list_size(steps.get()) && std::getline(ops, line); ++i) {
    const auto text = text_of(tp_perm_list_get(steps.get(), i));
    out << line << " -> " << (text.empty() ? "(empty)" : text) << "\n";
  }
}

void cmd_pattern(const Options& o, std::ostream& out) {
  const auto a = read_sortable(o.a);
  const auto b = read_sortable(o.b);
  int contains = 0;
  ok(tp_pattern_contains(a.get(), b.get(), &contains));
  out << (contains ? "contains" : "avoids") << "\n";
}

void cmd_stats(const Options& o, std::ostream& out) {
  const auto p = read_sortable(o.a);
  tp_stats s;
  ok(tp_perm_stats(p.get(), &s));
  out << "size " << s.size << "\nlis " << s.lis << "\nlds " << s.lds << "\nleaves " << s.leaves
      << "\nheight " << s.height << "\n";
}

void cmd_series(const Options& o, std::ostream& out) {
  tp_series_kind kind = TP_SERIES_S1;
  if (o.series == "s2") {
    kind = TP_SERIES_S2;
  } else if (o.series == "i") {
    kind = TP_SERIES_I;
  } else if (o.series == "d") {
    kind = TP_SERIES_D;
  } else if (o.series == "narayana") {
    kind = TP_SERIES_NARAYANA;
  } else if (o.series == "heights") {
    kind = TP_SERIES_HEIGHTS;
  }
  tp_series* raw = nullptr;
  ok(tp_series_compute(kind, o.n, &raw));
  std::unique_ptr<tp_series, void (*)(tp_series*)> s(raw, tp_series_free);
  char* text = nullptr;
  ok(o.json ? tp_series_json(s.get(), &text) : tp_series_text(s.get(), &text));
  out << take(text) << "\n";
}

void cmd_avg(const Options& o, std::ostream& out) {
  char* exact = nullptr;
  double approx = 0;
  ok(tp_avg_distance(o.target == "chain" ? TP_TARGET_CHAIN : TP_TARGET_ID, o.n, &exact, &approx));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", approx);
  out << take(exact) << " " << buf << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  struct Sink {
    std::ostream* out;
    size_t total = 0;
  } sink{&out};
  size_t failures = 0;
  ok(tp_verify(
      o.suite.c_str(), o.max_n,
      [](const char* suite, const char* name, int passed, const char* detail, void* user) {
        auto* s = static_cast<Sink*>(user);
        ++s->total;
        *s->out << (passed ? "PASS " : "FAIL ") << suite << " " << name;
        if (detail && *detail) *s->out << ": " << detail;
        *s->out << "\n";
      },
      &sink, &failures));
  out << sink.total << " checks, " << failures << " failed\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered trees and their stack-sortable permutation codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tp_version()));
  Options o;
  app.add_option("--out", o.out_file, "Write output to FILE instead of stdout");

  auto* encode = app.add_subcommand("encode", "Tree to permutation");
  encode->add_option("tree", o.a)->required();
  auto* decode = app.add_subcommand("decode", "Permutation to tree");
  decode->add_option("perm", o.a)->required();
  auto* check = app.add_subcommand("check", "Stack-sortability, exit 1 if not");
  check->add_option("perm", o.a)->required();

  auto* factors = app.add_subcommand("factors", "List compact or complete factors");
  factors->add_option("perm", o.a)->required();
  auto* compact_flag = factors->add_flag("--compact", o.compact, "All compact factors (default)");
  factors->add_flag("--complete", o.complete, "Complete factors only")->excludes(compact_flag);
  factors->add_flag("--classify", o.classify, "Tag each factor as subtree or internal path");

  auto* del = app.add_subcommand("delete", "Delete one letter");
  del->add_option("perm", o.a)->required();
  auto* pos_opt = del->add_option("--pos", o.pos, "1-based position");
  auto* value_opt = del->add_option("--value", o.value, "Value to delete");
  pos_opt->excludes(value_opt);

  auto* insert = app.add_subcommand("insert", "Insert around a complete factor");
  insert->add_option("perm", o.a)->required();
  insert->add_option("--op", o.op)->required()->check(CLI::IsMember({"inner", "left", "right"}));
  insert->add_option("--span", o.span, "Factor as i:j");

  auto* neighbors = app.add_subcommand("neighbors", "Every result of one deletion or insertion");
  neighbors->add_option("perm", o.a)->required();

  auto* distance = app.add_subcommand("distance", "Edit distance");
  distance->add_option("a", o.a)->required();
  distance->add_option("b", o.b)->required();
  distance->add_flag("--trace", o.trace, "Show a common pattern and an edit sequence");
  distance->add_option("--oracle", o.oracle)->check(CLI::IsMember({"dp", "bfs", "pattern"}));

  auto* pattern = app.add_subcommand("pattern", "Whether B occurs as a pattern in A");
  pattern->add_option("a", o.a)->required();
  pattern->add_option("b", o.b)->required();

  auto* stats = app.add_subcommand("stats", "lis, lds, leaves, height");
  stats->add_option("perm", o.a)->required();

  auto* series = app.add_subcommand("series", "Exact coefficient tables");
  series->add_option("name", o.series)
      ->required()
      ->check(CLI::IsMember({"s1", "s2", "i", "d", "narayana", "heights"}));
  series->add_option("--n", o.n)->required();
  series->add_flag("--json", o.json);

  auto* avg = app.add_subcommand("avg", "Exact average distance over trees with n edges");
  avg->add_option("--target", o.target)->required()->check(CLI::IsMember({"id", "chain"}));
  avg->add_option("--n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "Run the built-in cross-checks");
  verify->add_option("--suite", o.suite);
  verify->add_option("--max-n", o.max_n);

  for (auto* sub : app.get_subcommands({})) sub->add_option("--out", o.out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int status = kExitOk;
  try {
    if (encode->parsed()) {
      cmd_encode(o, out);
    } else if (decode->parsed()) {
      cmd_decode(o, out);
    } else if (check->parsed()) {
      status = cmd_check(o, out);
    } else if (factors->parsed()) {
      cmd_factors(o, out);
    } else if (del->parsed()) {
      if (pos_opt->count() + value_opt->count() != 1) throw Failure{"delete needs --pos or --value"};
      cmd_delete(o, out, value_opt->count() > 0);
    } else if (insert->parsed()) {
      cmd_insert(o, out);
    } else if (neighbors->parsed()) {
      cmd_neighbors(o, out);
    } else if (distance->parsed()) {
      cmd_distance(o, out);
    } else if (pattern->parsed()) {
      cmd_pattern(o, out);
    } else if (stats->parsed()) {
      cmd_stats(o, out);
    } else if (series->parsed()) {
      cmd_series(o, out);
    } else if (avg->parsed()) {
      cmd_avg(o, out);
    } else if (verify->parsed()) {
      status = cmd_verify(o, out);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  }

  if (o.out_file.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    file << out.str();
    if (!file) {
      std::cerr << "error: cannot write " << o.out_file << "\n";
      return kExitUsage;
    }
  }
  return status;
}
