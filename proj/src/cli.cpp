#include "gelfand/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <ostream>

#include "gelfand/errors.hpp"
#include "gelfand/json_io.hpp"

namespace gelfand {

Json to_json(const SignedPermutation& u) {
  Json j;
  j["signs"] = u.signs;
  std::vector<int> perm1;
  perm1.reserve(u.perm.size());
  for (int v : u.perm) perm1.push_back(v + 1);
  j["perm"] = perm1;
  return j;
}

SignedPermutation signed_permutation_from_json(const Json& j) {
  std::vector<int> signs = j.at("signs").get<std::vector<int>>();
  std::vector<int> perm = j.at("perm").get<std::vector<int>>();
  for (int& v : perm) --v;
  return SignedPermutation(std::move(signs), std::move(perm));
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return Json(q.get_num().get_si());
  return Json(q.get_str());
}

Json to_json(const ModelVector& v) {
  Json j = Json::array();
  for (const auto& [tau, c] : v)
    j.push_back({{"tau", to_json(tau)}, {"coeff", c.get_str()}});
  return j;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  const auto& map = p.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it)
    terms.push_back({{"coeff", it->second.get_str()}, {"exp", it->first}});
  return Json{{"n", p.n()}, {"terms", terms}};
}

Json to_json(const SubspaceBasis& s) {
  Json rows = Json::array();
  for (const auto& row : s.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return Json{{"monomials", s.monomials}, {"rows", rows}};
}

Json to_json(const GroupType& t) {
  return Json{{"type", std::string(1, family_letter(t.family))}, {"n", t.n}};
}

}  // namespace gelfand

namespace gelfand::cli {

namespace {

void check_order(const RunConfig& cfg) {
  if (group_order(cfg.group) > cfg.max_order)
    throw CapacityError("group order exceeds --max-order");
}

void emit(const RunConfig& cfg, const Json& doc, std::ostream& out,
          const std::string& human) {
  if (cfg.json)
    out << doc.dump() << '\n';
  else
    out << human;
}

int cmd_involutions(const RunConfig& cfg, std::ostream& out) {
  check_order(cfg);
  const auto invs = enumerate_involutions(cfg.group);
  Json list = Json::array();
  std::string human;
  for (const auto& tau : invs) {
    list.push_back(to_json(tau));
    human += tau.to_string() + "\n";
  }
  human += "count: " + std::to_string(invs.size()) + "\n";
  emit(cfg, Json{{"group", to_json(cfg.group)}, {"involutions", list},
                 {"count", invs.size()}},
       out, human);
  return kExitOk;
}

int cmd_verify_model(const RunConfig& cfg, std::ostream& out) {
  check_order(cfg);
  const GelfandReport r = is_gelfand_model(cfg.group, cfg.dual);
  Json j{{"gelfand", r.gelfand},
         {"dim", r.dim},
         {"selfIntertwiner", to_json(r.self_intertwiner)},
         {"classes", r.classes}};
  std::string human = "gelfand: " + std::string(r.gelfand ? "true" : "false") +
                      "\ndim: " + std::to_string(r.dim) +
                      "\nselfIntertwiner: " + r.self_intertwiner.get_str() +
                      "\nclasses: " + std::to_string(r.classes) + "\n";
  emit(cfg, j, out, human);
  return r.gelfand ? kExitOk : kExitVerificationFailed;
}

int cmd_minimal_orbits(const RunConfig& cfg, std::ostream& out) {
  const auto orbits = minimal_orbits(cfg.group);
  Json list = Json::array();
  std::string human;
  for (const auto& g : orbits) {
    list.push_back(g.sorted_exponents);
    human += '[';
    for (std::size_t i = 0; i < g.sorted_exponents.size(); ++i) {
      if (i) human += ',';
      human += std::to_string(g.sorted_exponents[i]);
    }
    human += "]\n";
  }
  human += "count: " + std::to_string(orbits.size()) + "\n";
  emit(cfg, Json{{"group", to_json(cfg.group)}, {"orbits", list},
                 {"count", orbits.size()}},
       out, human);
  return kExitOk;
}

int cmd_ptau(const RunConfig& cfg, std::ostream& out) {
  check_order(cfg);
  const auto basis = cfg.dual ? dual_basis_set(cfg.group.n)
                              : enumerate_involutions(cfg.group);
  Json items = Json::array();
  std::string human;
  for (const auto& tau : basis) {
    const MultiIndex alpha = involution_exponents(tau);
    const Polynomial p = involution_polynomial(tau);
    items.push_back(Json{{"tau", to_json(tau)},
                         {"alpha", alpha},
                         {"ptau", to_json(p)}});
    human += tau.to_string() + "  ->  " + p.to_string() + "\n";
  }
  emit(cfg, Json{{"group", to_json(cfg.group)}, {"dual", cfg.dual},
                 {"items", items}},
       out, human);
  return kExitOk;
}

int cmd_polymodel(const RunConfig& cfg, std::ostream& out) {
  check_order(cfg);
  const auto orbits = minimal_orbits(cfg.group);
  Json per_orbit = Json::array();
  std::vector<Polynomial> all;
  std::string human;
  for (const auto& g : orbits) {
    const SubspaceBasis h = orbit_harmonics(g, cfg.group);
    per_orbit.push_back(Json{{"orbit", g.sorted_exponents}, {"dim", h.dimension()}});
    for (const auto& p : h.polynomials()) all.push_back(p);
    human += "orbit ";
    for (int v : g.sorted_exponents) human += std::to_string(v) + ' ';
    human += "-> dim " + std::to_string(h.dimension()) + "\n";
  }
  const SubspaceBasis total = echelonize(all);
  const std::size_t involutions = enumerate_involutions(cfg.group).size();
  const bool ok = total.dimension() == involutions;
  human += "dimension: " + std::to_string(total.dimension()) +
           "\ninvolutions: " + std::to_string(involutions) + "\n";
  emit(cfg, Json{{"group", to_json(cfg.group)}, {"orbits", per_orbit},
                 {"dimension", total.dimension()},
                 {"involutions", involutions}, {"equal", ok}},
       out, human);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_telescope(const RunConfig& cfg, std::ostream& out) {
  check_order(cfg);
  const SubspaceBasis image = model_image(cfg.group, cfg.dual);
  const TelescopeResult tel = telescope(image, cfg.group);
  const SubspaceBasis poly = polynomial_model(cfg.group);
  const bool equal = subspace_equal(tel.total, poly);
  Json dims{{"model", image.dimension()},
            {"levels", tel.level_dimensions()},
            {"polyModel", poly.dimension()}};
  Json j{{"group", to_json(cfg.group)},
         {"dims", dims},
         {"equal", equal},
         {"violations", Json::array()}};
  std::string human = "model image dim: " + std::to_string(image.dimension()) + "\nlevels:";
  for (auto d : tel.level_dimensions()) human += ' ' + std::to_string(d);
  human += "\npolynomial model dim: " + std::to_string(poly.dimension()) +
           "\nequal: " + (equal ? "true" : "false") + "\n";
  emit(cfg, j, out, human);
  return equal ? kExitOk : kExitVerificationFailed;
}

int cmd_phi_check(const RunConfig& cfg, std::ostream& out) {
  check_order(cfg);
  const EquivarianceReport r = verify_equivariance(cfg.group, cfg.dual);
  Json j{{"group", to_json(cfg.group)},
         {"dims", Json{{"model", ModelCharacter(cfg.group, cfg.dual).dimension()}}},
         {"checks", r.checks},
         {"equal", r.ok()},
         {"violations", r.violations}};
  std::string human = "checks: " + std::to_string(r.checks) +
                      "\nviolations: " + std::to_string(r.violations.size()) + "\n";
  for (const auto& v : r.violations) human += "  " + v + "\n";
  emit(cfg, j, out, human);
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Involution-indexed and polynomial models for Weyl groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> table{
      {"involutions", cmd_involutions},   {"verify-model", cmd_verify_model},
      {"minimal-orbits", cmd_minimal_orbits}, {"ptau", cmd_ptau},
      {"polymodel", cmd_polymodel},       {"telescope", cmd_telescope},
      {"phi-check", cmd_phi_check}};

  std::string type_letter = "A";
  for (const auto& [name, fn] : table) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--type", type_letter, "group type: A, B or D")
        ->check(CLI::IsMember({"A", "B", "D"}))
        ->required();
    sub->add_option("--n", cfg.group.n, "rank (number of coordinates)")
        ->required();
    sub->add_flag("--dual", cfg.dual, "use the dual basis (type D, odd n)");
    sub->add_flag("--json", cfg.json, "emit a single JSON document");
    sub->add_option("--max-order", cfg.max_order,
                    "refuse groups with more elements than this");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.group.family = family_from_letter(type_letter.at(0));
    validate(cfg.group);
    if (cfg.dual && (cfg.group.family != GroupFamily::D || cfg.group.n % 2 == 0))
      throw UsageError("--dual requires type D with odd n");
    cfg.command = app.get_subcommands().front()->get_name();
    return table.at(cfg.command)(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gelfand::cli
