// softgrp command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "softgrp/softgrp.h"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2, kScaleBound = 3 };

struct Options {
  size_t max_order = 0;
  size_t max_params = 0;
  size_t max_homs = 0;
  size_t max_candidates = 0;
  std::string out_dir;
  std::string format = "json";
  unsigned long long seed = 1;
  size_t universe = 10;
  bool timing = false;
};

// Raised for failures that end the command with a particular exit code.
struct Failure {
  int exit_code;
  std::string message;
};

struct Deleter {
  void operator()(sg_group* p) const { sg_group_free(p); }
  void operator()(sg_soft_group* p) const { sg_soft_group_free(p); }
  void operator()(sg_soft_hom* p) const { sg_soft_hom_free(p); }
};
using Group = std::unique_ptr<sg_group, Deleter>;
using SoftGroup = std::unique_ptr<sg_soft_group, Deleter>;
using SoftHom = std::unique_ptr<sg_soft_hom, Deleter>;

int exit_for(sg_status s) {
  switch (s) {
    case SG_OK: return kPass;
    case SG_ERR_PARSE: return kUsage;
    case SG_ERR_SCALE_BOUND: return kScaleBound;
    default: return kCheckFailure;
  }
}

void check(sg_status s) {
  if (s != SG_OK) {
    throw Failure{exit_for(s), std::string(sg_status_name(s)) + ": " + sg_last_error()};
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sg_string_free(s);
  return out;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& data) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(const std::string& data) {
    digest_ = fnv1a(digest_, data);
    digest_ = fnv1a(digest_, std::string(1, '\0'));
  }

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    json c = {{"name", name}, {"ok", ok}};
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
    (ok ? passed_ : failed_)++;
  }

  json& results() { return results_; }
  size_t failed() const { return failed_; }

  json to_json(const Options& opt, double elapsed_ms) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest_));
    json out = {{"command", command_},
                {"inputs", std::string("fnv1a64:") + hex},
                {"results", results_},
                {"checks", checks_},
                {"checks_passed", passed_},
                {"checks_failed", failed_}};
    if (opt.timing) out["elapsed_ms"] = elapsed_ms;
    return out;
  }

 private:
  std::string command_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
  json results_ = json::object();
  json checks_ = json::array();
  size_t passed_ = 0;
  size_t failed_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write " + path.string()};
  out << data << "\n";
}

fs::path out_dir(const Options& opt) {
  fs::path dir(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure{kUsage, "cannot create " + dir.string() + ": " + ec.message()};
  return dir;
}

sg_bounds bounds_of(const Options& opt) {
  sg_bounds b = sg_default_bounds();
  if (opt.max_order) b.max_order = opt.max_order;
  if (opt.max_params) b.max_params = opt.max_params;
  if (opt.max_homs) b.max_homs = opt.max_homs;
  if (opt.max_candidates) b.max_candidates = opt.max_candidates;
  return b;
}

bool is_hom_document(const json& j) {
  return j.is_object() && j.contains("source") && j.contains("target") && j.contains("f");
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

// Serializes, reloads and reserializes; true when the two documents agree.
bool soft_group_round_trips(const sg_soft_group* s, std::string* doc) {
  char* out = nullptr;
  check(sg_soft_group_to_json(s, &out));
  std::string first = take(out);
  sg_soft_group* raw = nullptr;
  if (sg_soft_group_from_json(first.c_str(), &raw) != SG_OK) return false;
  SoftGroup again(raw);
  check(sg_soft_group_to_json(again.get(), &out));
  if (doc) *doc = first;
  return take(out) == first;
}

bool soft_hom_round_trips(const sg_soft_hom* h, std::string* doc) {
  char* out = nullptr;
  check(sg_soft_hom_to_json(h, &out));
  std::string first = take(out);
  sg_soft_hom* raw = nullptr;
  if (sg_soft_hom_from_json(first.c_str(), &raw) != SG_OK) return false;
  SoftHom again(raw);
  check(sg_soft_hom_to_json(again.get(), &out));
  if (doc) *doc = first;
  return sg_soft_hom_equal(h, again.get()) && take(out) == first;
}

// -- subcommands -------------------------------------------------------------

int cmd_bn_info(int n, Report& r) {
  if (n < 1) throw Failure{kUsage, "n must be at least 1"};
  if (n > 4) throw Failure{kScaleBound, "n = " + std::to_string(n) + " exceeds the supported range 1..4"};
  sg_group* raw = nullptr;
  check(sg_group_hyperoctahedral(n, &raw));
  Group g(raw);
  size_t expected = 1;
  for (int i = 1; i <= n; ++i) expected *= 2 * static_cast<size_t>(i);
  r.results()["n"] = n;
  r.results()["order"] = sg_group_order(g.get());
  r.results()["expected_order"] = expected;
  r.check("order = 2^n n!", sg_group_order(g.get()) == expected);

  char* out = nullptr;
  check(sg_presentation_check(n, &out));
  const json relations = json::parse(take(out));
  for (const auto& rel : relations) r.check(rel.at("relation").get<std::string>(), rel.at("holds").get<bool>());
  r.results()["relations"] = relations.size();
  return kPass;
}

int cmd_enum(const std::string& kind, int n, const Options& opt, Report& r) {
  if (kind != "sc" && kind != "bp") throw Failure{kUsage, "kind must be sc or bp"};
  if (n < 1) throw Failure{kUsage, "n must be at least 1"};
  char* out = nullptr;
  size_t count = 0;
  check(sg_enumerate(kind.c_str(), n, &out, &count));
  const std::string lines = take(out);
  std::istringstream in(lines);
  std::string line;
  while (std::getline(in, line)) {
    if (opt.format == "table") {
      const json j = json::parse(line);
      if (kind == "sc") {
        std::string s = "(";
        for (size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i].get<int>());
        std::cout << s << ")\n";
      } else {
        auto side = [](const json& part) {
          std::string s = "(";
          for (size_t i = 0; i < part.size(); ++i) s += (i ? "," : "") + std::to_string(part[i].get<int>());
          return s + ")";
        };
        std::cout << "(" << side(j.at("plus")) << ";" << side(j.at("minus")) << ")\n";
      }
    } else {
      std::cout << line << "\n";
    }
  }
  r.results()["kind"] = kind;
  r.results()["n"] = n;
  r.results()["count"] = count;
  return kPass;
}

int cmd_verify(const std::string& path, Report& r) {
  const std::string text = read_file(path);
  r.input(text);
  const json doc = parse_json(text, path);
  r.results()["file"] = fs::path(path).filename().string();

  if (is_hom_document(doc)) {
    r.results()["kind"] = "soft-hom";
    sg_soft_hom* raw = nullptr;
    const sg_status s = sg_soft_hom_from_json(text.c_str(), &raw);
    if (s == SG_ERR_PARSE) check(s);
    if (s != SG_OK) {
      r.check("soft homomorphism", false, sg_last_error());
      return kCheckFailure;
    }
    SoftHom h(raw);
    const size_t n = doc.at("source").at("params").size();
    r.results()["diagram_checks"] = n;
    r.check("f is a group homomorphism", true);
    r.check("f^ F = H p on " + std::to_string(n) + " parameters", true);
    r.check("round trip", soft_hom_round_trips(h.get(), nullptr));
    return r.failed() ? kCheckFailure : kPass;
  }

  r.results()["kind"] = "soft-group";
  sg_soft_group* raw = nullptr;
  const sg_status s = sg_soft_group_from_json(text.c_str(), &raw);
  if (s == SG_ERR_PARSE) check(s);
  if (s != SG_OK) {
    r.check("soft group", false, sg_last_error());
    return kCheckFailure;
  }
  SoftGroup g(raw);
  r.results()["params"] = sg_soft_group_param_count(g.get());
  r.results()["trivial"] = static_cast<bool>(sg_soft_group_is_trivial(g.get()));
  r.results()["completely_soft"] = static_cast<bool>(sg_soft_group_is_completely_soft(g.get()));
  r.check("every value is a subgroup", true);
  r.check("round trip", soft_group_round_trips(g.get(), nullptr));
  return r.failed() ? kCheckFailure : kPass;
}

std::vector<std::string> split_properties(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      for (const char* p : {"monic", "epic", "split-monic", "kernel"}) out.emplace_back(p);
    } else if (item == "monic" || item == "epic" || item == "split-monic" || item == "kernel") {
      out.push_back(item);
    } else {
      throw Failure{kUsage, "unknown property " + item};
    }
  }
  if (out.empty()) throw Failure{kUsage, "no properties requested"};
  return out;
}

int cmd_analyze(const std::string& path, const std::string& properties, const Options& opt,
                Report& r) {
  const auto props = split_properties(properties);
  const std::string text = read_file(path);
  r.input(text);
  r.input(properties);
  r.input(std::to_string(opt.seed) + "/" + std::to_string(opt.universe));
  parse_json(text, path);
  sg_soft_hom* raw = nullptr;
  check(sg_soft_hom_from_json(text.c_str(), &raw));
  SoftHom h(raw);
  const sg_bounds bounds = bounds_of(opt);

  bool unknown = false;
  json verdicts = json::object();
  for (const auto& p : props) {
    if (p == "kernel") {
      char* out = nullptr;
      const sg_status s = sg_kernel_report(h.get(), &out);
      if (s == SG_ERR_KERNEL_UNDEFINED || s == SG_OK) {
        json k = json::parse(take(out));
        if (k.value("defined", false)) r.check("soft kernel trivial iff f injective", k.at("agree").get<bool>());
        k.erase("kernel");
        verdicts["kernel"] = std::move(k);
      } else {
        check(s);
      }
      continue;
    }
    sg_holds holds = SG_HOLDS_UNKNOWN_AT_SCALE;
    char* out = nullptr;
    check(sg_analyze(h.get(), p.c_str(), &bounds, opt.seed, opt.universe, &holds, &out));
    const std::string verdict = take(out);
    int ok = 0;
    check(sg_verify_verdict(h.get(), verdict.c_str(), &bounds, &ok));
    r.check(p + " verdict re-verifies", ok == 1);
    if (holds == SG_HOLDS_UNKNOWN_AT_SCALE) unknown = true;
    verdicts[p] = json::parse(verdict);
    if (!opt.out_dir.empty()) write_file(out_dir(opt) / (p + ".verdict.json"), verdict);
  }
  r.results()["verdicts"] = std::move(verdicts);
  if (r.failed()) return kCheckFailure;
  return unknown ? kScaleBound : kPass;
}

SoftGroup load_soft_group(const std::string& path, Report& r) {
  const std::string text = read_file(path);
  r.input(text);
  parse_json(text, path);
  sg_soft_group* raw = nullptr;
  check(sg_soft_group_from_json(text.c_str(), &raw));
  return SoftGroup(raw);
}

int cmd_product(const std::vector<std::string>& paths, const Options& opt, Report& r) {
  if (paths.size() < 2 || paths.size() > 3) throw Failure{kUsage, "product takes two or three soft-group files"};
  std::vector<SoftGroup> groups;
  for (const auto& p : paths) groups.push_back(load_soft_group(p, r));
  const sg_bounds bounds = bounds_of(opt);
  for (size_t i = 0; i < groups.size(); ++i) {
    if (sg_soft_group_param_count(groups[i].get()) > bounds.max_params) {
      throw Failure{kScaleBound, paths[i] + " has more than " + std::to_string(bounds.max_params) + " parameters"};
    }
  }

  sg_soft_group* raw = nullptr;
  sg_soft_hom* raw1 = nullptr;
  sg_soft_hom* raw2 = nullptr;
  check(sg_soft_product(groups[0].get(), groups[1].get(), &raw, &raw1, &raw2));
  SoftGroup product(raw);
  SoftHom p1(raw1), p2(raw2);

  std::string doc;
  r.check("product round trip", soft_group_round_trips(product.get(), &doc));
  r.check("first projection round trip", soft_hom_round_trips(p1.get(), nullptr));
  r.check("second projection round trip", soft_hom_round_trips(p2.get(), nullptr));
  r.results()["params"] = sg_soft_group_param_count(product.get());
  r.results()["product"] = json::parse(doc);

  if (groups.size() == 3) {
    char* out = nullptr;
    check(sg_monoidal_check(groups[0].get(), groups[1].get(), groups[2].get(), &out));
    const json m = json::parse(take(out));
    for (const auto& c : m.at("checks")) r.check(c.at("name").get<std::string>(), c.at("ok").get<bool>());
  }
  if (!opt.out_dir.empty()) write_file(out_dir(opt) / "product.json", doc);
  return r.failed() ? kCheckFailure : kPass;
}

int cmd_paper_example(int n, const Options& opt, Report& r) {
  if (n < 1) throw Failure{kUsage, "n must be at least 1"};
  if (n > 3) throw Failure{kScaleBound, "n = " + std::to_string(n) + " exceeds the supported range 1..3"};
  sg_soft_group* raw_f = nullptr;
  sg_soft_group* raw_g = nullptr;
  sg_soft_hom* raw_h = nullptr;
  check(sg_hyperoctahedral_example(n, &raw_f, &raw_g, &raw_h));
  SoftGroup by_composition(raw_f), by_bipartition(raw_g);
  SoftHom hom(raw_h);

  std::string f_doc, g_doc, h_doc;
  r.check("composition soft group round trip", soft_group_round_trips(by_composition.get(), &f_doc));
  r.check("bi-partition soft group round trip", soft_group_round_trips(by_bipartition.get(), &g_doc));
  // Reloading the morphism reruns f^ F = H p at every parameter.
  r.check("hom round trip", soft_hom_round_trips(hom.get(), &h_doc));
  const size_t diagram_checks = sg_soft_group_param_count(by_composition.get());
  size_t expected_params = 2;
  for (int i = 1; i < n; ++i) expected_params *= 3;
  r.check("|SC(n)| = 2*3^(n-1)", diagram_checks == expected_params);
  r.check("diagram holds at " + std::to_string(diagram_checks) + " parameters", true);

  char* out = nullptr;
  check(sg_kernel_report(hom.get(), &out));
  json kernel = json::parse(take(out));
  const json all_negative = json(std::vector<int>(n, -1));
  const bool defined = kernel.at("defined").get<bool>();
  r.check("soft kernel defined", defined);
  if (defined) {
    r.check("kernel params = {(-1,...,-1)}", kernel.at("params") == json::array({all_negative}));
    r.check("kernel carrier = {e}", kernel.at("carrier_order").get<size_t>() == 1);
    r.check("kernel trivial iff f injective", kernel.at("agree").get<bool>());
  }

  sg_group* raw_w = nullptr;
  check(sg_group_hyperoctahedral(n, &raw_w));
  Group w(raw_w);
  r.results()["n"] = n;
  r.results()["carrier_order"] = sg_group_order(w.get());
  r.results()["compositions"] = diagram_checks;
  r.results()["bipartitions"] = sg_soft_group_param_count(by_bipartition.get());
  r.results()["diagram_checks"] = diagram_checks;
  r.results()["kernel_params"] = kernel.value("params", json::array());

  if (!opt.out_dir.empty()) {
    const fs::path dir = out_dir(opt);
    const std::string suffix = "_n" + std::to_string(n) + ".json";
    write_file(dir / ("composition_soft_group" + suffix), f_doc);
    write_file(dir / ("bipartition_soft_group" + suffix), g_doc);
    write_file(dir / ("lambda_hom" + suffix), h_doc);
    if (defined) write_file(dir / ("soft_kernel" + suffix), kernel.at("kernel").dump());
    kernel.erase("kernel");
    write_file(dir / ("kernel_report" + suffix), kernel.dump());
  }
  return r.failed() ? kCheckFailure : kPass;
}

// Large objects are flattened to dotted keys; large arrays show only their length.
void print_rows(const std::string& prefix, const json& obj, int depth) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix + key;
    if (value.is_structured() && value.dump().size() > 60) {
      if (value.is_object() && depth < 2) {
        print_rows(name + ".", value, depth + 1);
        continue;
      }
      if (!value.is_array()) continue;
    }
    std::string k = name;
    k.resize(std::max<size_t>(k.size() + 1, 15), ' ');
    if (value.is_array() && value.dump().size() > 60)
      std::cout << k << "[" << value.size() << " items]\n";
    else
      std::cout << k << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void print_table(const json& report) {
  std::cout << "command        " << report.at("command").get<std::string>() << "\n";
  std::cout << "inputs         " << report.at("inputs").get<std::string>() << "\n";
  print_rows("", report.at("results"), 0);
  for (const auto& c : report.at("checks")) {
    std::cout << (c.at("ok").get<bool>() ? "PASS  " : "FAIL  ") << c.at("name").get<std::string>();
    if (c.contains("detail")) std::cout << ": " << c.at("detail").get<std::string>();
    std::cout << "\n";
  }
  std::cout << "checks         " << report.at("checks_passed") << " passed, "
            << report.at("checks_failed") << " failed\n";
  if (report.contains("error")) std::cout << "error          " << report.at("error").get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softgrp: soft groups over finite signed-permutation groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-order", opt.max_order, "largest carrier order the morphism oracle enumerates");
  app.add_option("--max-params", opt.max_params, "largest parameter set the morphism oracle enumerates");
  app.add_option("--max-homs", opt.max_homs, "cap on enumerated homomorphisms per hom-set");
  app.add_option("--max-candidates", opt.max_candidates, "cap on candidate generator images");
  app.add_option("--out", opt.out_dir, "directory for JSON artifacts");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", opt.seed, "seed of the oracle universe");
  app.add_option("--universe", opt.universe, "number of seeded soft groups in the oracle universe");
  app.add_flag("--timing", opt.timing, "add elapsed_ms to the report");

  int n = 0;
  std::string kind, path, properties = "all";
  std::vector<std::string> paths;

  auto* bn_info = app.add_subcommand("bn-info", "order and presentation of the hyperoctahedral group W_n");
  bn_info->add_option("n", n, "degree")->required();
  auto* enumerate = app.add_subcommand("enum", "signed compositions (sc) or bi-partitions (bp) of n");
  enumerate->add_option("kind", kind, "sc or bp")->required();
  enumerate->add_option("n", n, "weight")->required();
  auto* verify = app.add_subcommand("verify", "revalidate a soft-group or soft-hom JSON file");
  verify->add_option("path", path, "JSON file")->required();
  auto* analyze = app.add_subcommand("analyze", "monic / epic / split-monic / kernel analysis of a soft hom");
  analyze->add_option("path", path, "soft-hom JSON file")->required();
  analyze->add_option("--property", properties, "comma-separated subset of monic,epic,split-monic,kernel or all");
  auto* product = app.add_subcommand("product", "soft product of two soft groups; a third enables the monoidal checks");
  product->add_option("paths", paths, "soft-group JSON files")->required();
  auto* example = app.add_subcommand("paper-example", "the W_n soft groups over SC(n) and BP(n) and the hom (1, Lambda)");
  example->add_option("n", n, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report(command);
  report.input(command);
  for (int i = 1; i < argc; ++i) report.input(argv[i]);

  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  std::string error;
  try {
    if (*bn_info) code = cmd_bn_info(n, report);
    else if (*enumerate) code = cmd_enum(kind, n, opt, report);
    else if (*verify) code = cmd_verify(path, report);
    else if (*analyze) code = cmd_analyze(path, properties, opt, report);
    else if (*product) code = cmd_product(paths, opt, report);
    else code = cmd_paper_example(n, opt, report);
  } catch (const Failure& f) {
    code = f.exit_code;
    error = f.message;
  }
  if (code == kPass && report.failed()) code = kCheckFailure;
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json out = report.to_json(opt, elapsed);
  if (!error.empty()) {
    out["error"] = error;
    std::cerr << "softgrp " << command << ": " << error << "\n";
  }
  out["exit_code"] = code;
  if (opt.format == "table") print_table(out);
  else std::cout << out.dump() << "\n";
  return code;
}
