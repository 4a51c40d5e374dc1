// rbg: command-line front end for the Rota-Baxter group library.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "rbg/catalog.hpp"
#include "rbg/cohomology.hpp"
#include "rbg/extensions.hpp"
#include "rbg/io.hpp"
#include "rbg/wells.hpp"

using namespace rbg;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string format = "json";
  std::uint64_t budget = 0;
  std::size_t max_enum_order = 0;
  unsigned workers = 1;

  std::string group, op_file, images;
  std::string h = "Z1", i = "Z1", rh = "zero", ri = "zero", action = "trivial";
  std::string tau, g;

  Limits limits() const {
    Limits l;
    if (budget) l.cochain_budget = l.triplet_budget = budget;
    if (max_enum_order) l.max_enum_order = max_enum_order;
    l.workers = std::max(1u, workers);
    return l;
  }
};

void emit(const Options& o, const json& j) {
  if (o.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

json witness_json(const Witness& w) { return {{"law", w.law}, {"at", w.at}}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) {
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

// "0,1,2" or "e,(1,2),..." (labels may contain commas inside parentheses)
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Table parse_images(const std::string& s, const FiniteGroup& g) {
  json arr = json::array();
  for (const auto& tok : split_list(s)) {
    if (!tok.empty() && std::all_of(tok.begin(), tok.end(), ::isdigit)) {
      arr.push_back(std::stoi(tok));
    } else {
      arr.push_back(tok);
    }
  }
  return images_from_json(arr, g);
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

// zero | id | inv | image list | operator JSON file
Table parse_map(const std::string& s, const FiniteGroup& g) {
  if (s == "zero") return trivial_operator(g).images;
  if (s == "id") return identity_table(g.order());
  if (s == "inv") return g.inverses();
  if (is_file(s)) {
    json j = read_json_file(s);
    return images_from_json(j.contains("images") ? j["images"] : j, g);
  }
  return parse_images(s, g);
}

// trivial | "imgs;imgs;..." with one list per element of H | JSON file
std::vector<Table> parse_action(const std::string& s, const FiniteGroup& h, const FiniteGroup& i) {
  if (s == "trivial") return trivial_action(h, i);
  std::vector<Table> mu;
  if (is_file(s)) {
    json j = read_json_file(s);
    for (const auto& row : j.contains("action") ? j["action"] : j) mu.push_back(images_from_json(row, i));
  } else {
    for (const auto& part : split(s, ';')) mu.push_back(parse_images(part, i));
  }
  if (static_cast<int>(mu.size()) != h.order()) {
    throw InvalidInput("action needs one image list per element of H (" +
                       std::to_string(h.order()) + ")");
  }
  return mu;
}

// "(1,1)=2;(1,2)=3" with element indices, everything else zero
Cochain parse_cochain(const std::string& s, int arity, int h_order, int i_order) {
  Cochain c(arity, h_order);
  static const std::regex entry(R"(\(([0-9,\s]*)\)\s*=\s*([0-9]+))");
  for (const auto& part : split(s, ';')) {
    std::smatch m;
    if (!std::regex_match(part, m, entry)) throw InvalidInput("bad cochain entry: " + part);
    std::vector<Elem> args;
    for (const auto& a : split(m[1].str(), ',')) args.push_back(std::stoi(a));
    const int v = std::stoi(m[2].str());
    if (static_cast<int>(args.size()) != arity) throw InvalidInput("wrong arity in: " + part);
    for (Elem a : args) {
      if (a <= 0 || a >= h_order) throw InvalidInput("cochain argument out of range in: " + part);
    }
    if (v < 0 || v >= i_order) throw InvalidInput("cochain value out of range in: " + part);
    c.set(args, v);
  }
  return c;
}

RotaBaxterOperator load_operator(const Options& o, const Limits& limits, bool check) {
  if (!o.op_file.empty()) {
    json j = read_json_file(o.op_file);
    FiniteGroup g = j["group"].is_string() ? make_group(j["group"].get<std::string>(), limits)
                                           : group_from_json(j["group"]);
    return {g, images_from_json(j["images"], g)};
  }
  if (o.group.empty()) throw InvalidInput("need --operator or --group with --images");
  FiniteGroup g = make_group(o.group, limits);
  Table im = o.images.empty() ? trivial_operator(g).images : parse_images(o.images, g);
  if (check) return make_rb_operator(g, im);
  return {g, im};
}

RBModule load_module(const Options& o, const Limits& limits) {
  FiniteGroup h = make_group(o.h, limits);
  FiniteGroup i = make_group(o.i, limits);
  if (!i.is_abelian()) throw InvalidInput("I must be abelian");
  RotaBaxterOperator rh = make_rb_operator(h, parse_map(o.rh, h));
  return make_module(rh, i, parse_map(o.ri, i), parse_action(o.action, h, i));
}

json pair_json(const CocyclePair& p) {
  return {{"tau", cochain_to_json(p.tau)}, {"g", cochain_to_json(p.g)}};
}

json images_json(const FiniteGroup& g, const Table& images) {
  json arr = json::array();
  for (Elem x : images) {
    if (g.has_labels()) {
      arr.push_back(g.label(x));
    } else {
      arr.push_back(x);
    }
  }
  return arr;
}

int cmd_enumerate(const Options& o) {
  const Limits limits = o.limits();
  FiniteGroup g = make_group(o.group, limits);
  if (auto w = enumeration_warning(g, limits)) std::cerr << "warning: " << *w << "\n";
  const auto t0 = std::chrono::steady_clock::now();
  auto ops = enumerate_rb_operators(g, limits);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& r : ops) emit(o, {{"images", images_json(g, r.images)}});
  emit(o, {{"group", o.group}, {"count", ops.size()}});
  std::fprintf(stderr, "elapsed %.3f s\n", secs);
  return kOk;
}

int cmd_verify(const Options& o) {
  RotaBaxterOperator r = load_operator(o, o.limits(), false);
  json out{{"order", r.group.order()}};
  if (auto w = rb_violation(r.group, r.images)) {
    out["valid"] = false;
    out["witness"] = witness_json(*w);
    emit(o, out);
    return kFalse;
  }
  out["valid"] = true;
  emit(o, out);
  return kOk;
}

int cmd_brace(const Options& o) {
  RotaBaxterOperator r = load_operator(o, o.limits(), true);
  SkewBrace b = induced_skew_brace(r);
  json out{{"order", b.order}};
  auto rows = [&](const Table& t) {
    json a = json::array();
    for (int x = 0; x < b.order; ++x) a.push_back(Table(t.begin() + x * b.order, t.begin() + (x + 1) * b.order));
    return a;
  };
  out["add"] = rows(b.add);
  out["circ"] = rows(b.circ);
  auto w = skew_brace_violation(b);
  out["valid"] = !w;
  if (w) out["witness"] = witness_json(*w);
  emit(o, out);
  return w ? kFalse : kOk;
}

int cmd_cohomology(const Options& o) {
  const Limits limits = o.limits();
  RBModule m = load_module(o, limits);
  H2 h2 = h2_rbe(m, limits);
  json reps = json::array();
  for (const auto& p : h2.reps) reps.push_back(pair_json(p));
  emit(o, {{"order_Z1", z1_rbe(m, limits).size()},
           {"order_Z2", h2.z2.size()},
           {"order_B2", h2.b2.size()},
           {"order_H2", h2.order()},
           {"representatives", reps}});
  return kOk;
}

int cmd_classify(const Options& o) {
  const Limits limits = o.limits();
  RBModule m = load_module(o, limits);
  Classification c = classify_abelian(m, limits);
  json reps = json::array();
  for (const auto& p : c.class_representatives) reps.push_back(pair_json(p));
  emit(o, {{"num_classes", c.num_classes},
           {"h2_order", c.h2_order},
           {"match", c.match},
           {"representatives", reps}});
  return c.match ? kOk : kFalse;
}

int cmd_split(const Options& o) {
  const Limits limits = o.limits();
  FiniteGroup h = make_group(o.h, limits);
  FiniteGroup i = make_group(o.i, limits);
  RotaBaxterOperator rh = make_rb_operator(h, parse_map(o.rh, h));
  RotaBaxterOperator ri = make_rb_operator(i, parse_map(o.ri, i));
  Cochain g = parse_cochain(o.g, 1, h.order(), i.order());
  RBExtension e = build_split_extension(rh, ri, parse_action(o.action, h, i), g);
  emit(o, {{"order", e.e.order()},
           {"group", group_to_json(e.e)},
           {"operator", e.re.images},
           {"has_homomorphic_section", homomorphic_section(e).has_value()}});
  return kOk;
}

int cmd_wells(const Options& o) {
  const Limits limits = o.limits();
  RBModule m = load_module(o, limits);
  CocyclePair p{parse_cochain(o.tau, 2, m.h().order(), m.i.order()),
                parse_cochain(o.g, 1, m.h().order(), m.i.order())};
  RBExtension e = build_abelian_extension(m, p);
  WellsReport r = check_wells_exactness(compute_wells(e, m, limits));
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(witness_json(x));
  emit(o, {{"z1_order", r.z1_order},
           {"autI_order", r.autI_order},
           {"autHI_order", r.autHI_order},
           {"cmu_order", r.cmu_order},
           {"h2_order", r.h2_order},
           {"exact_at_autI", r.exact_at_z1 && r.exact_at_autI},
           {"exact_at_cmu", r.exact_at_cmu && r.omega_well_defined},
           {"omega_is_derivation", r.omega_is_derivation},
           {"witnesses", w}});
  return r.exact() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter operators, extensions and cohomology on finite groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", o.budget, "cap on brute-force candidate counts")->check(CLI::PositiveNumber);
  app.add_option("--max-enum-order", o.max_enum_order, "largest group to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

  auto operator_opts = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group descriptor (Z4, S3, D4, Q8, K4, Z2xZ3, file.json)");
    c->add_option("--operator", o.op_file, "operator JSON file");
    c->add_option("--images", o.images, "comma-separated images (indices or labels)");
  };
  auto module_opts = [&](CLI::App* c) {
    c->add_option("--H", o.h, "group H");
    c->add_option("--I", o.i, "abelian group I");
    c->add_option("--RH", o.rh, "operator on H: zero, id, inv, image list or file");
    c->add_option("--RI", o.ri, "endomorphism of I: zero, id, inv, image list or file");
    c->add_option("--action", o.action, "trivial, 'imgs;imgs;...' per element of H, or file");
  };

  auto* en = app.add_subcommand("enumerate", "all RB operators on a group");
  en->add_option("--group", o.group, "group descriptor")->required();
  auto* ve = app.add_subcommand("verify", "check the RB law");
  operator_opts(ve);
  auto* br = app.add_subcommand("brace", "induced skew brace");
  operator_opts(br);
  auto* co = app.add_subcommand("cohomology", "H^2_RBE of a module");
  module_opts(co);
  auto* cl = app.add_subcommand("classify", "extension classes vs H^2_RBE");
  module_opts(cl);
  auto* sp = app.add_subcommand("split", "split extension");
  module_opts(sp);
  sp->add_option("--g", o.g, "g cochain, e.g. '(1)=1'");
  auto* we = app.add_subcommand("wells", "Wells exactness report");
  module_opts(we);
  we->add_option("--tau", o.tau, "tau cochain, e.g. '(1,1)=2'");
  we->add_option("--g", o.g, "g cochain, e.g. '(1)=1'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return cmd_enumerate(o);
    if (*ve) return cmd_verify(o);
    if (*br) return cmd_brace(o);
    if (*co) return cmd_cohomology(o);
    if (*cl) return cmd_classify(o);
    if (*sp) return cmd_split(o);
    if (*we) return cmd_wells(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const LawViolation& e) {
    emit(o, {{"error", "law violation"}, {"witness", witness_json(e.witness())}});
    return kFalse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
