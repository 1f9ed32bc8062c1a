#include "divfree/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace divfree {

namespace {

using nlohmann::json;

Rational json_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw std::runtime_error(where + ": rationals must be integers or \"p/q\" strings");
}

int json_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw std::runtime_error(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

ContextPtr Config::make_context() const {
  return std::make_shared<const GroupDescriptor>(sig, generators);
}

Config config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
  }
  Config c;
  c.sig.l1 = json_int(j.at("l1"), "l1");
  c.sig.l2 = json_int(j.at("l2"), "l2");
  c.sig.l3 = json_int(j.at("l3"), "l3");
  if (c.sig.l1 < 0 || c.sig.l2 < 0 || c.sig.l3 < 0 || c.sig.l() < 1)
    throw std::runtime_error("l1,l2,l3 must be nonnegative with l1+l2+l3 >= 1");

  const int gdim = c.sig.gdim();
  if (j.contains("generators")) {
    for (const auto& row : j.at("generators")) {
      std::vector<Rational> g;
      for (const auto& e : row) g.push_back(json_rational(e, "generators"));
      if (static_cast<int>(g.size()) != gdim)
        throw std::runtime_error("each generator must have l2+l3 entries");
      c.generators.push_back(std::move(g));
    }
  } else {
    // Default: the standard lattice Z^{l2+l3}.
    for (int k = 0; k < gdim; ++k) {
      std::vector<Rational> g(gdim, Rational(0));
      g[k] = 1;
      c.generators.push_back(std::move(g));
    }
  }

  c.mu.entries.assign(c.sig.l(), Rational(0));
  if (j.contains("mu")) {
    const auto& m = j.at("mu");
    if (static_cast<int>(m.size()) != c.sig.l())
      throw std::runtime_error("mu must have l1+l2+l3 entries");
    for (int k = 0; k < c.sig.l(); ++k)
      c.mu.entries[k] = json_rational(m[k], "mu");
    for (int k = 0; k < c.sig.l1; ++k)
      if (c.mu.entries[k] != 0)
        throw std::runtime_error("the first l1 entries of mu must be zero");
  }

  c.rho.coords.assign(c.generators.size(), 0);
  if (j.contains("rho")) {
    const auto& r = j.at("rho");
    if (r.size() != c.generators.size())
      throw std::runtime_error("rho must have one coordinate per generator");
    for (std::size_t k = 0; k < c.rho.coords.size(); ++k)
      c.rho.coords[k] = json_int(r[k], "rho");
  }

  if (j.contains("window")) {
    const auto& w = j.at("window");
    if (w.contains("gamma_radius"))
      c.window.gamma_radius = json_int(w.at("gamma_radius"), "window.gamma_radius");
    if (w.contains("idx_degree"))
      c.window.idx_degree = json_int(w.at("idx_degree"), "window.idx_degree");
    if (w.contains("sample_count"))
      c.window.sample_count = json_int(w.at("sample_count"), "window.sample_count");
    if (w.contains("seed"))
      c.window.seed = w.at("seed").get<std::uint64_t>();
    if (c.window.gamma_radius < 0 || c.window.idx_degree < 0 ||
        c.window.sample_count < 0)
      throw std::runtime_error("window parameters must be nonnegative");
  }
  if (j.contains("max_terms")) c.max_terms = j.at("max_terms").get<long>();

  c.make_context();  // validates generator independence now, not at first use
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

}  // namespace divfree
