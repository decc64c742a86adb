// acta: command-line front end over the C API in acta/acta.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "acta/acta.h"

namespace {

  using nlohmann::json;

  constexpr int kExitOk             = 0;
  constexpr int kExitCounterexample = 1;
  constexpr int kExitUsage          = 2;

  struct Failure {
    acta_status status;
    std::string message;
  };

  void check(acta_status st) {
    if (st != ACTA_OK) {
      throw Failure{st, acta_last_error_message()};
    }
  }

  std::string take(char* s) {
    std::string out = s ? s : "";
    acta_string_free(s);
    return out;
  }

  std::string read_text(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Failure{ACTA_INVALID_INPUT, "cannot read " + path};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  std::string directory_of(std::string const& path) {
    auto const slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
  }

  struct MonoidDeleter {
    void operator()(acta_monoid* m) const {
      acta_monoid_free(m);
    }
  };
  struct ActDeleter {
    void operator()(acta_act* a) const {
      acta_act_free(a);
    }
  };
  using Monoid = std::unique_ptr<acta_monoid, MonoidDeleter>;
  using Act    = std::unique_ptr<acta_act, ActDeleter>;

  Monoid load_monoid(std::string const& path) {
    acta_monoid* m = nullptr;
    check(acta_monoid_parse(read_text(path).c_str(), &m));
    return Monoid(m);
  }

  Act load_act(std::string const& path, acta_monoid const* m) {
    acta_act* a = nullptr;
    check(acta_act_parse(read_text(path).c_str(), m, directory_of(path).c_str(), &a));
    return Act(a);
  }

  Monoid standard(char const* family, uint32_t param) {
    acta_monoid* m = nullptr;
    check(acta_monoid_standard(family, param, &m));
    return Monoid(m);
  }

  void print_json(std::string const& text, bool pretty = true) {
    std::cout << (pretty ? json::parse(text).dump(2) : text) << '\n';
  }

  std::string plain(json const& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  ////////////////////////////////////////////////////////////////////////

  struct Options {
    std::string file;
    bool        as_json = false;

    uint32_t    order         = 0;
    bool        up_to_iso     = false;
    bool        allow_order_5 = false;
    std::string out_file;
    std::string format = "json";

    std::string monoid_file;
    std::string act_file;
    std::string scheme_file;
    std::string pairs;
    uint32_t    from = 0;
    uint32_t    to   = 0;

    uint32_t             param   = 0;
    uint32_t             letters = 2;
    std::optional<long>  a;
    std::optional<long>  b;

    std::string        suite;
    acta_verify_bounds bounds = acta_verify_bounds_default();
    bool               no_timing = false;
  };

  int monoid_analyze(Options const& o) {
    auto const m   = load_monoid(o.file);
    char*      out = nullptr;
    check(acta_monoid_analyze_json(m.get(), &out));
    auto const text = take(out);
    if (o.as_json) {
      print_json(text);
      return kExitOk;
    }
    auto const j = json::parse(text);
    for (auto const& key : {"order", "left_reversible", "right_reversible", "right_collapsible",
                            "left_zero_names", "right_zero_names", "s2_indecomposable",
                            "left_s2_indecomposable"}) {
      std::cout << key << ": " << plain(j.at(key)) << '\n';
    }
    auto const& v = j.at("theta_flatness_verdict");
    for (auto const& key : {"finitely_product_flat", "product_flat", "super_flat"}) {
      std::cout << "theta_" << key << ": " << plain(v.at(key)) << '\n';
    }
    return kExitOk;
  }

  int monoid_enumerate(Options const& o) {
    char*  out   = nullptr;
    size_t count = 0;
    check(acta_monoid_enumerate_json(o.order, o.up_to_iso, o.allow_order_5, &out, &count));
    auto const text = take(out);
    if (o.out_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out_file, std::ios::binary);
      if (!(f << text)) {
        throw Failure{ACTA_INVALID_INPUT, "cannot write " + o.out_file};
      }
    }
    std::cerr << count << " monoids of order " << o.order
              << (o.up_to_iso ? " up to isomorphism" : "") << '\n';
    return kExitOk;
  }

  int monoid_show(Options const& o) {
    auto const m   = load_monoid(o.file);
    char*      out = nullptr;
    if (o.format == "text") {
      check(acta_monoid_to_text(m.get(), &out));
      std::cout << take(out);
    } else {
      check(acta_monoid_to_json(m.get(), &out));
      std::cout << take(out) << '\n';
    }
    return kExitOk;
  }

  int act_components(Options const& o) {
    auto const m   = load_monoid(o.monoid_file);
    auto const a   = load_act(o.act_file, m.get());
    char*      out = nullptr;
    check(acta_act_components_json(a.get(), &out));
    auto const text = take(out);
    if (o.as_json) {
      print_json(text);
      return kExitOk;
    }
    auto const j = json::parse(text);
    std::cout << j.at("count").get<std::size_t>() << " component(s)\n";
    for (auto const& block : j.at("components")) {
      std::cout << "  " << block.dump() << '\n';
    }
    return kExitOk;
  }

  int act_scheme(Options const& o) {
    auto const m   = load_monoid(o.monoid_file);
    auto const a   = load_act(o.act_file, m.get());
    char*      out = nullptr;
    auto const st  = acta_act_shortest_scheme_json(a.get(), o.from, o.to, &out);
    if (st == ACTA_NOT_CONNECTED) {
      std::cout << "not connected\n";
      return kExitCounterexample;
    }
    check(st);
    std::cout << take(out) << '\n';
    return kExitOk;
  }

  int act_check_scheme(Options const& o) {
    auto const m      = load_monoid(o.monoid_file);
    auto const a      = load_act(o.act_file, m.get());
    char*      reason = nullptr;
    auto const st = acta_scheme_validate(a.get(), read_text(o.scheme_file).c_str(), &reason);
    if (st == ACTA_COUNTEREXAMPLE) {
      std::cout << "invalid: " << take(reason) << '\n';
      return kExitCounterexample;
    }
    check(st);
    std::cout << "valid\n";
    return kExitOk;
  }

  int act_closure(Options const& o) {
    auto const m   = load_monoid(o.monoid_file);
    auto const a   = load_act(o.act_file, m.get());
    char*      out = nullptr;
    check(acta_act_congruence_closure_json(a.get(), o.pairs.c_str(), &out));
    std::cout << take(out) << '\n';
    return kExitOk;
  }

  int construct_monoid(char const* family, Options const& o) {
    auto const m   = standard(family, o.param);
    char*      out = nullptr;
    check(acta_monoid_to_json(m.get(), &out));
    std::cout << take(out) << '\n';
    return kExitOk;
  }

  int construct_act(acta_act* raw) {
    Act const a(raw);
    char*     out = nullptr;
    check(acta_act_to_json(a.get(), &out));
    std::cout << take(out) << '\n';
    return kExitOk;
  }

  int construct_an(Options const& o) {
    auto const m = o.monoid_file.empty() ? standard("lz1", 2) : load_monoid(o.monoid_file);
    if (o.a.has_value() != o.b.has_value()) {
      throw Failure{ACTA_INVALID_INPUT, "--a and --b go together"};
    }
    acta_act* a = nullptr;
    check(acta_construct_an(m.get(), o.param, o.a.value_or(-1), o.b.value_or(-1), &a));
    return construct_act(a);
  }

  int construct_cofree(Options const& o) {
    if (o.monoid_file.empty()) {
      throw Failure{ACTA_INVALID_INPUT, "cofree needs --monoid"};
    }
    auto const m = load_monoid(o.monoid_file);
    acta_act*  a = nullptr;
    check(acta_construct_cofree(m.get(), o.letters, &a));
    return construct_act(a);
  }

  int verify(Options const& o) {
    char*      out = nullptr;
    auto const st  = acta_verify_json(o.suite.c_str(), &o.bounds, o.no_timing ? 0 : 1, &out);
    if (st != ACTA_COUNTEREXAMPLE) {
      check(st);
    }
    auto const text = take(out);
    if (o.as_json) {
      print_json(text);
    } else {
      auto const j = json::parse(text);
      auto const line = [](json const& r) {
        std::cout << r.at("suite").get<std::string>() << ": "
                  << r.at("status").get<std::string>() << " ("
                  << r.at("checks").get<std::size_t>() << " checks, "
                  << r.at("counterexamples").size() << " counterexamples, "
                  << r.at("elapsed_ms").get<long long>() << " ms)\n";
        for (auto const& n : r.at("notes")) {
          std::cout << "  note: " << n.get<std::string>() << '\n';
        }
      };
      if (j.contains("suites")) {
        for (auto const& part : j.at("suites")) {
          line(part);
        }
      }
      line(j);
      for (auto const& c : j.at("counterexamples")) {
        std::cout << "  counterexample: " << c.dump() << '\n';
      }
    }
    return st == ACTA_OK ? kExitOk : kExitCounterexample;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monoids and their acts"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  auto const on = [&](CLI::App* sub, auto fn) {
    sub->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
  };

  auto* monoid = app.add_subcommand("monoid", "Monoid tables");
  monoid->require_subcommand(1);
  auto* analyze = monoid->add_subcommand("analyze", "Decide the monoid properties");
  analyze->add_option("FILE", o.file, "Monoid file (JSON or text)")->required();
  analyze->add_flag("--json", o.as_json, "Emit JSON");
  on(analyze, monoid_analyze);

  auto* enumerate = monoid->add_subcommand("enumerate", "List all monoids of one order");
  enumerate->add_option("--order", o.order, "Order")->required();
  enumerate->add_flag("--up-to-iso", o.up_to_iso, "One representative per class");
  enumerate->add_flag("--allow-order-5", o.allow_order_5, "Permit order 5");
  enumerate->add_option("--out", o.out_file, "Write JSON lines here");
  on(enumerate, monoid_enumerate);

  auto* show = monoid->add_subcommand("show", "Re-emit a monoid file");
  show->add_option("FILE", o.file)->required();
  show->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  on(show, monoid_show);

  auto* act = app.add_subcommand("act", "Right acts");
  act->require_subcommand(1);
  auto const act_inputs = [&](CLI::App* sub) {
    sub->add_option("--monoid", o.monoid_file, "Monoid file")->required();
    sub->add_option("--act", o.act_file, "Act file (JSON)")->required();
  };
  auto* comps = act->add_subcommand("components", "Indecomposable components");
  act_inputs(comps);
  comps->add_flag("--json", o.as_json, "Emit JSON");
  on(comps, act_components);

  auto* scheme = act->add_subcommand("scheme", "Shortest connecting scheme");
  act_inputs(scheme);
  scheme->add_option("--from", o.from)->required();
  scheme->add_option("--to", o.to)->required();
  on(scheme, act_scheme);

  auto* check_scheme = act->add_subcommand("check-scheme", "Validate a scheme file");
  act_inputs(check_scheme);
  check_scheme->add_option("--scheme", o.scheme_file)->required();
  on(check_scheme, act_check_scheme);

  auto* closure = act->add_subcommand("closure", "Right congruence generated by pairs");
  act_inputs(closure);
  closure->add_option("--pairs", o.pairs, "JSON list of [x, y] pairs")->required();
  on(closure, act_closure);

  auto* construct = app.add_subcommand("construct", "Standard constructions");
  construct->require_subcommand(1);
  auto* tn = construct->add_subcommand("tn", "Full transformation monoid T_n");
  tn->add_option("N", o.param)->required();
  on(tn, [](Options const& opt) { return construct_monoid("tn", opt); });
  auto* lz1 = construct->add_subcommand("lz1", "Left zero semigroup with identity");
  lz1->add_option("K", o.param)->required();
  on(lz1, [](Options const& opt) { return construct_monoid("lz1", opt); });
  auto* rz1 = construct->add_subcommand("rz1", "Right zero semigroup with identity");
  rz1->add_option("K", o.param)->required();
  on(rz1, [](Options const& opt) { return construct_monoid("rz1", opt); });
  auto* an = construct->add_subcommand("an", "Glued chain of n regular acts");
  an->add_option("N", o.param)->required();
  an->add_option("--monoid", o.monoid_file, "Monoid file (default: LZ2 with identity)");
  an->add_option("--a", o.a);
  an->add_option("--b", o.b);
  on(an, construct_an);
  auto* cofree = construct->add_subcommand("cofree", "Cofree act of maps S -> {0..K-1}");
  cofree->add_option("--letters", o.letters)->required();
  cofree->add_option("--monoid", o.monoid_file, "Monoid file")->required();
  on(cofree, construct_cofree);

  auto* ver = app.add_subcommand("verify", "Check theorem instances over small monoids");
  ver->add_option("--suite", o.suite)->required();
  ver->add_option("--max-order", o.bounds.max_order)->required();
  ver->add_option("--max-act-size", o.bounds.max_act_size);
  ver->add_option("--seed", o.bounds.seed);
  ver->add_option("--samples", o.bounds.samples);
  ver->add_flag("--allow-order-5", o.bounds.allow_order_5);
  ver->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0");
  ver->add_flag("--json", o.as_json, "Emit the JSON report");
  on(ver, verify);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (Failure const& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status == ACTA_COUNTEREXAMPLE ? kExitCounterexample : kExitUsage;
  } catch (json::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
