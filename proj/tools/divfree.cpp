#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "divfree/config.hpp"
#include "divfree/io.hpp"
#include "divfree/verifier.hpp"

using namespace divfree;
using nlohmann::json;

namespace {

// Expression arguments written as "-" are read from stdin, one per line.
std::string resolve_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::string line;
  if (!std::getline(std::cin, line))
    throw std::runtime_error("expected an expression on stdin");
  return line;
}

std::vector<Rational> parse_rational_list(std::string s) {
  if (!s.empty() && s.front() == '[') s = s.substr(1, s.size() - 2);
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    out.push_back(rational_from_string(piece));
  }
  return out;
}

ModuleKind kind_from_name(const std::string& name) {
  for (ModuleKind k : {ModuleKind::a_mu, ModuleKind::a_mu_quotient,
                       ModuleKind::graded_m, ModuleKind::graded_a,
                       ModuleKind::graded_b})
    if (name == kind_name(k)) return k;
  throw std::runtime_error("unknown module kind: " + name);
}

void enforce_cap(const Config& cfg, std::size_t nterms) {
  if (cfg.max_terms > 0 && static_cast<long>(nterms) > cfg.max_terms)
    throw std::runtime_error("expression exceeds max_terms = " +
                             std::to_string(cfg.max_terms));
}

json report_json(const Report& r) {
  json j{{"check", r.check},
         {"status", r.pass ? "pass" : "fail"},
         {"tested", r.tested},
         {"millis", r.millis}};
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

void print_report_text(const Report& r, std::ostream& out) {
  out << r.check << ": " << (r.pass ? "pass" : "FAIL") << " (tested "
      << r.tested << ", " << r.millis << " ms)\n";
  for (const auto& line : r.notes) out << "  note: " << line << "\n";
  for (const auto& line : r.counterexample) out << "  " << line << "\n";
}

struct Options {
  std::string config_path;
  bool as_json = false;
  int window_radius = -1;
  int window_degree = -1;
  std::int64_t seed = -1;
};

Config load(const Options& opt) {
  if (opt.config_path.empty())
    throw std::runtime_error("--config is required for this command");
  Config cfg = load_config(opt.config_path);
  if (opt.window_radius >= 0) cfg.window.gamma_radius = opt.window_radius;
  if (opt.window_degree >= 0) cfg.window.idx_degree = opt.window_degree;
  if (opt.seed >= 0) cfg.window.seed = static_cast<std::uint64_t>(opt.seed);
  return cfg;
}

ParseEnv make_env(const Config& cfg, const ContextPtr& ctx,
                  const ModuleDescriptor& desc) {
  return ParseEnv{ctx, cfg.rho, desc};
}

void emit(const Options& opt, const std::string& text) {
  if (opt.as_json)
    std::cout << json{{"result", text}}.dump() << "\n";
  else
    std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for divergence-free derivation algebras and "
               "their weight modules"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--config", opt.config_path, "JSON configuration file");
  app.add_flag("--json", opt.as_json, "emit JSON instead of plain text");
  app.add_option("--window-radius", opt.window_radius,
                 "override window group radius");
  app.add_option("--window-degree", opt.window_degree,
                 "override window index degree");
  app.add_option("--seed", opt.seed, "override sampling seed");

  std::string arg_a, arg_b, module_name = "a_mu", mu_text, variant_name,
                            suite = "all";

  auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two operators");
  cmd_bracket->add_option("A", arg_a)->required();
  cmd_bracket->add_option("B", arg_b)->required();

  auto* cmd_apply = app.add_subcommand("apply", "apply an operator to an algebra element");
  cmd_apply->add_option("W", arg_a)->required();
  cmd_apply->add_option("A", arg_b)->required();

  auto* cmd_div = app.add_subcommand("div", "divergence of an operator");
  cmd_div->add_option("W", arg_a)->required();

  auto* cmd_act = app.add_subcommand("act", "act by an operator on a module vector");
  cmd_act->add_option("W", arg_a)->required();
  cmd_act->add_option("V", arg_b)->required();
  cmd_act->add_option("--module", module_name, "module kind")
      ->check(CLI::IsMember({"a_mu", "a_mu_quotient", "graded_m", "graded_a",
                             "graded_b"}));
  cmd_act->add_option("--mu", mu_text, "module parameter, e.g. \"1/2,0,0\"");

  auto* cmd_decompose =
      app.add_subcommand("decompose", "split a module vector by weight");
  cmd_decompose->add_option("V", arg_a)->required();
  cmd_decompose->add_option("--module", module_name)
      ->check(CLI::IsMember({"a_mu", "a_mu_quotient", "graded_m", "graded_a",
                             "graded_b"}));
  cmd_decompose->add_option("--mu", mu_text);

  auto* cmd_order = app.add_subcommand("order", "compare two index vectors");
  cmd_order->add_option("I", arg_a)->required();
  cmd_order->add_option("J", arg_b)->required();

  auto* cmd_gens = app.add_subcommand("gens", "list a generating set");
  cmd_gens->add_option("--variant", variant_name)
      ->check(CLI::IsMember({"prop21", "cor22"}))
      ->required();

  auto* cmd_verify = app.add_subcommand("verify", "run structural checks");
  cmd_verify->add_option("--suite", suite,
                         "lie_axioms | divergence_free | operator_expansion | "
                         "recurrence | generators | module_axiom | "
                         "irreducibility | multiplicities | shift_iso | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Config cfg = load(opt);
    ContextPtr ctx = cfg.make_context();
    Weight param = cfg.mu;
    if (!mu_text.empty()) {
      param.entries = parse_rational_list(mu_text);
      if (static_cast<int>(param.entries.size()) != cfg.sig.l())
        throw std::runtime_error("--mu must have l1+l2+l3 entries");
    }
    ModuleDescriptor desc(kind_from_name(module_name), param, ctx);
    ParseEnv env = make_env(cfg, ctx, desc);

    if (*cmd_bracket) {
      WittElement a = parse_witt(resolve_arg(arg_a), env);
      WittElement b = parse_witt(resolve_arg(arg_b), env);
      enforce_cap(cfg, a.terms().size() + b.terms().size());
      emit(opt, print(bracket(a, b)));
      return 0;
    }
    if (*cmd_apply) {
      WittElement w = parse_witt(resolve_arg(arg_a), env);
      AlgebraElement a = parse_algebra(resolve_arg(arg_b), env);
      enforce_cap(cfg, w.terms().size() + a.terms().size());
      emit(opt, print(apply(w, a)));
      return 0;
    }
    if (*cmd_div) {
      WittElement w = parse_witt(resolve_arg(arg_a), env);
      enforce_cap(cfg, w.terms().size());
      emit(opt, print(divergence(w)));
      return 0;
    }
    if (*cmd_act) {
      WittElement w = parse_witt(resolve_arg(arg_a), env);
      ModuleElement v = parse_module(resolve_arg(arg_b), env);
      enforce_cap(cfg, w.terms().size() + v.terms().size());
      emit(opt, print(act(w, v)));
      return 0;
    }
    if (*cmd_decompose) {
      ModuleElement v = parse_module(resolve_arg(arg_a), env);
      enforce_cap(cfg, v.terms().size());
      auto parts = weight_decompose(v);
      if (opt.as_json) {
        json arr = json::array();
        for (const auto& [wt, comp] : parts)
          arr.push_back({{"weight", print(wt)}, {"component", print(comp)}});
        std::cout << arr.dump() << "\n";
      } else {
        for (const auto& [wt, comp] : parts)
          std::cout << print(wt) << ": " << print(comp) << "\n";
      }
      return 0;
    }
    if (*cmd_order) {
      MultiIndex i = parse_multi_index(resolve_arg(arg_a), cfg.sig.nvars());
      MultiIndex j = parse_multi_index(resolve_arg(arg_b), cfg.sig.nvars());
      auto c = order_compare(i, j);
      emit(opt, c < 0 ? "less" : (c > 0 ? "greater" : "equal"));
      return 0;
    }
    if (*cmd_gens) {
      GeneratorVariant variant = variant_name == "prop21"
                                     ? GeneratorVariant::prop21
                                     : GeneratorVariant::cor22;
      auto gens = generator_set(ctx, cfg.window, variant);
      if (opt.as_json) {
        json arr = json::array();
        for (const auto& g : gens) arr.push_back(print(g));
        std::cout << arr.dump() << "\n";
      } else {
        for (const auto& g : gens) std::cout << print(g) << "\n";
      }
      return 0;
    }
    if (*cmd_verify) {
      const Window& w = cfg.window;
      std::vector<Report> reports;
      auto want = [&](const std::string& name) {
        return suite == "all" || suite == name;
      };
      if (want("lie_axioms")) reports.push_back(check_lie_axioms(ctx, w));
      if (want("divergence_free"))
        reports.push_back(check_divergence_free(ctx, w));
      if (want("operator_expansion"))
        reports.push_back(check_operator_expansion(ctx, w));
      if (want("recurrence")) reports.push_back(check_recurrence(ctx, w));
      if (want("generators")) {
        reports.push_back(check_generators(ctx, w, GeneratorVariant::prop21));
        reports.push_back(check_generators(ctx, w, GeneratorVariant::cor22));
      }
      if (want("module_axiom"))
        reports.push_back(
            check_module(ModuleDescriptor(ModuleKind::a_mu, param, ctx), w));
      if (want("irreducibility")) {
        Window narrow = w;
        narrow.idx_degree = std::min(narrow.idx_degree, 1);
        reports.push_back(check_irreducibility_evidence(
            ModuleDescriptor(ModuleKind::a_mu, param, ctx), narrow));
      }
      if (want("multiplicities"))
        reports.push_back(check_weight_multiplicities(
            ModuleDescriptor(ModuleKind::a_mu, param, ctx), w));
      if (want("shift_iso") && ctx->rank() > 0) {
        GroupElement gamma = ctx->zero();
        gamma.coords[0] = 1;
        reports.push_back(check_shift_iso(ctx, param, gamma, w));
      }
      if (reports.empty())
        throw std::runtime_error("unknown suite: " + suite);
      bool all_pass = true;
      if (opt.as_json) {
        json out = reports.size() == 1 ? report_json(reports.front())
                                       : json::array();
        if (reports.size() > 1)
          for (const auto& r : reports) out.push_back(report_json(r));
        std::cout << out.dump(2) << "\n";
      }
      for (const auto& r : reports) {
        if (!opt.as_json) print_report_text(r, std::cout);
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
