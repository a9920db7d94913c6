// liaison: command-line front end for the liaison_core library.

#include <atomic>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "liaison/chain_search.hpp"
#include "liaison/error.hpp"
#include "liaison/experiments.hpp"
#include "liaison/glicci.hpp"
#include "liaison/report.hpp"

using namespace liaison;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2;

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Globals {
  std::string catalog_path;
  std::optional<Catalog> catalog;

  const Catalog& cat() {
    if (!catalog) catalog = catalog_path.empty() ? Catalog::builtin() : Catalog::load(catalog_path);
    return *catalog;
  }
};

int surface_show(Globals& g, const std::string& id, const std::string& format) {
  const auto s = g.cat().get_surface(id);
  json lines = json::array();
  for (const auto& l : s->lines().classes) {
    lines.push_back({{"class", l.cls.to_string()}, {"family", to_string(l.family)}});
  }
  json conics = json::array();
  for (const auto& c : s->conics()) conics.push_back(c.to_string());
  json j{{"id", s->id()},
         {"ambient", to_string(s->ambient())},
         {"basis", s->basis().to_string()},
         {"hyperplane", s->hyperplane().to_string()},
         {"canonical", s->canonical().to_string()},
         {"degree", s->degree()},
         {"sectional_genus", s->sectional_genus()},
         {"lines", lines},
         {"conics", conics}};
  if (s->ambient() == Ambient::P4) j["family_dim"] = surface_family_dim(*s);
  json special = json::array();
  for (const auto& sc : s->special_classes()) special.push_back({{"class", sc.cls.to_string()}, {"note", sc.note}});
  if (!special.empty()) j["special_classes"] = special;
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << s->id() << " in " << to_string(s->ambient()) << ", " << s->basis().to_string() << "\n"
            << "  H = " << s->hyperplane().to_string() << ", K = " << s->canonical().to_string()
            << ", degree " << s->degree() << ", sectional genus " << s->sectional_genus() << "\n";
  if (j.contains("family_dim")) std::cout << "  family dimension " << j["family_dim"] << "\n";
  std::cout << "  " << s->lines().size() << " line class(es):";
  for (const auto& l : s->lines().classes) {
    std::cout << " " << l.cls.to_string() << (l.family == FamilyFlag::one_parameter ? "*" : "");
  }
  std::cout << "\n  " << s->conics().size() << " conic class(es)\n";
  for (const auto& sc : s->special_classes()) std::cout << "  special " << sc.cls.to_string() << ": " << sc.note << "\n";
  return kOk;
}

int divisor_eval(Globals& g, const std::string& id, const std::string& coeffs, const std::string& format) {
  const auto s = g.cat().get_surface(id);
  const auto c = DivisorClass::parse(coeffs, s->basis());
  const auto rec = CurveRecord::on_surface(s, c, RaoTag::unknown(), "divisor eval");
  const auto prof = multisecant_profile(rec);
  json j{{"surface", s->id()},
         {"class", c.to_string()},
         {"degree", rec.degree()},
         {"genus", rec.genus()},
         {"self_intersection", self_intersection(c)},
         {"canonical_degree", intersect(c, s->canonical())},
         {"expected_dim", expected_dim_linear_system(c, *s)},
         {"profile", prof.summary_string()},
         {"passes_screen", !rec.screen_failed()}};
  if (s->ambient() == Ambient::P4) {
    j["family_dimension"] = family_dimension(*s, c);
    j["hilbert_dim_lower_bound"] = hilbert_dim_lower_bound(rec.degree(), rec.genus());
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << c.to_string() << " on " << s->id() << ": d=" << rec.degree() << " g=" << rec.genus()
            << " C^2=" << self_intersection(c) << " C.K=" << j["canonical_degree"]
            << " dim|C|>=" << j["expected_dim"] << "\n  line profile " << prof.summary_string()
            << (rec.screen_failed() ? "\n  fails the effectivity screen" : "") << "\n";
  if (j.contains("family_dimension")) {
    std::cout << "  family dimension " << j["family_dimension"] << ", 5d+1-g = " << j["hilbert_dim_lower_bound"]
              << "\n";
  }
  return kOk;
}

struct ChainArgs {
  std::string target;
  bool ascending = false;
  int max_steps = 8;
  std::int64_t h_max = 4;
  std::optional<std::string> surfaces;
  unsigned jobs = 1;
  std::string format = "table";
};

int biliaison_chain(Globals& g, const ChainArgs& a) {
  const auto parts = split_ids(a.target);
  if (parts.size() != 2) throw InvalidArgument("--target expects d,g");
  const SearchTarget t = SearchTarget::invariants(std::stoll(parts[0]), std::stoll(parts[1]));
  ChainSearchConfig cfg;
  cfg.catalog = &g.cat();
  cfg.surfaces = a.surfaces ? split_ids(*a.surfaces) : g.cat().surface_ids();
  if (!a.surfaces) {
    // the P4 surfaces, by default
    std::erase_if(cfg.surfaces, [&](const std::string& id) { return g.cat().get_surface(id)->ambient() != Ambient::P4; });
  }
  cfg.ascending_only = a.ascending;
  cfg.max_steps = a.max_steps;
  cfg.h_max = a.h_max;
  cfg.workers = a.jobs;
  const auto rep = ascending_chain_search(t, cfg);
  if (rep.found) rep.chain.validate();
  if (a.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "target (" << t.degree << "," << t.genus << "): " << rep.outcome << " after exploring "
              << rep.explored << " state(s), depth " << rep.levels << "\n";
    if (rep.found) std::cout << chain_table(rep.chain);
    std::cout << "  pruned: " << rep.pruned_screen << " screen, " << rep.pruned_box << " box, " << rep.pruned_degree
              << " degree\n";
  }
  return rep.found ? kOk : kMismatch;
}

struct GlicciArgs {
  std::int64_t points = 1;
  std::string ambient = "p3";
  std::string mode = "full";
  std::optional<std::int64_t> max_intermediate;
  std::int64_t max_socle = 12;
  std::string admissibility = "generic";
  std::int64_t surface_degree = 3;
  unsigned jobs = 1;
  std::string format = "table";
};

int glicci(const GlicciArgs& a) {
  GlicciConfig cfg;
  cfg.ambient = a.ambient == "p2" ? PointAmbient::P2 : PointAmbient::P3;
  cfg.mode = a.mode == "full" ? GlicciMode::full : GlicciMode::descending_only;
  cfg.max_intermediate = a.max_intermediate;
  cfg.max_socle = a.max_socle;
  cfg.admissibility = a.admissibility == "generic"    ? Admissibility::generic
                      : a.admissibility == "surface" ? Admissibility::on_surface
                                                     : Admissibility::permissive;
  cfg.surface_degree = a.surface_degree;
  cfg.workers = a.jobs;
  const auto rep = glicci_chain(a.points, cfg);
  if (rep.found) rep.chain.validate();
  if (a.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.points << " general points in " << (cfg.ambient == PointAmbient::P2 ? "P2" : "P3") << ", "
              << to_string(cfg.mode) << " mode, " << to_string(cfg.admissibility) << " residuals: " << rep.outcome
              << " (" << rep.explored << " states, " << rep.gorenstein_candidates << " Gorenstein h-vectors, "
              << "max intermediate " << rep.bounds.max_intermediate.value_or(0) << ")\n";
    if (rep.found) std::cout << point_chain_table(rep.chain);
  }
  return rep.found ? kOk : kMismatch;
}

struct ExperimentArgs {
  std::string id;
  std::string format = "table";
  unsigned jobs = 1;
  std::optional<std::string> surfaces;
};

int experiment_run(Globals& g, const ExperimentArgs& a) {
  std::vector<std::string> ids;
  if (a.id == "all") ids = experiment_ids();
  else if (has_experiment(a.id)) ids = {a.id};
  else run_experiment(a.id);  // throws with the list of ids

  ExperimentOptions opts;
  opts.catalog = &g.cat();
  if (a.surfaces) opts.surfaces = split_ids(*a.surfaces);

  std::vector<ExperimentReport> reports(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      try {
        reports[i] = run_experiment(ids[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_match();
  if (a.format == "json") {
    if (reports.size() == 1) {
      std::cout << reports[0].to_json().dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      std::cout << json{{"schema_version", ExperimentReport::kSchemaVersion}, {"all_match", ok}, {"reports", arr}}.dump(2)
                << "\n";
    }
  } else {
    for (const auto& r : reports) std::cout << r.to_table() << "\n";
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor-class, liaison and h-vector computations for curves and points"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--catalog", g.catalog_path, "surface catalog (JSON) to use instead of the built-in one")
      ->check(CLI::ExistingFile);

  std::function<int()> action;
  const std::vector<std::string> formats{"table", "json"};

  auto* surface = app.add_subcommand("surface", "inspect catalog surfaces");
  surface->require_subcommand(1);
  std::string sid, sformat = "table";
  auto* show = surface->add_subcommand("show", "lattice data, lines and conics of a surface");
  show->add_option("id", sid, "surface id")->required();
  show->add_option("--format", sformat)->check(CLI::IsMember(formats));
  show->callback([&] { action = [&] { return surface_show(g, sid, sformat); }; });
  auto* list = surface->add_subcommand("list", "catalog surface ids");
  list->callback([&] {
    action = [&] {
      for (const auto& id : g.cat().surface_ids()) std::cout << id << "\n";
      return kOk;
    };
  });

  auto* divisor = app.add_subcommand("divisor", "divisor class calculator");
  divisor->require_subcommand(1);
  std::string dsurf, dcoeffs, dformat = "table";
  auto* eval = divisor->add_subcommand("eval", "degree, genus, self-intersection and line profile of a class");
  eval->add_option("surface", dsurf)->required();
  eval->add_option("coeffs", dcoeffs, "e.g. \"(5;3,1,1,1,1)\" or \"2,1^7,0^3\"")->required();
  eval->add_option("--format", dformat)->check(CLI::IsMember(formats));
  eval->callback([&] { action = [&] { return divisor_eval(g, dsurf, dcoeffs, dformat); }; });

  auto* bil = app.add_subcommand("biliaison", "biliaison chain search");
  bil->require_subcommand(1);
  ChainArgs ca;
  auto* chain = bil->add_subcommand("chain", "shortest chain from a line to a curve with given (d,g)");
  chain->add_option("--target", ca.target, "d,g")->required();
  chain->add_flag("--ascending-only", ca.ascending, "only biliaisons with h > 0");
  chain->add_option("--max-steps", ca.max_steps)->check(CLI::Range(1, 64));
  chain->add_option("--h-max", ca.h_max)->check(CLI::Range(1, 32));
  chain->add_option_function<std::string>("--surfaces", [&](const std::string& v) { ca.surfaces = v; },
                                         "comma-separated surface ids");
  chain->add_option("--jobs", ca.jobs)->check(CLI::Range(1u, 256u));
  chain->add_option("--format", ca.format)->check(CLI::IsMember(formats));
  chain->callback([&] { action = [&] { return biliaison_chain(g, ca); }; });

  GlicciArgs ga;
  auto* gl = app.add_subcommand("glicci", "Gorenstein link chain from n general points to one point");
  gl->add_option("--points", ga.points)->required()->check(CLI::PositiveNumber);
  gl->add_option("--ambient", ga.ambient)->check(CLI::IsMember({"p2", "p3"}));
  gl->add_option("--mode", ga.mode)->check(CLI::IsMember({"full", "descending"}));
  gl->add_option("--max-intermediate", ga.max_intermediate, "largest point set allowed (default 3n)");
  gl->add_option("--max-socle", ga.max_socle)->check(CLI::Range(0, 40));
  gl->add_option("--admissibility", ga.admissibility)->check(CLI::IsMember({"generic", "surface", "permissive"}));
  gl->add_option("--surface-degree", ga.surface_degree)->check(CLI::PositiveNumber);
  gl->add_option("--jobs", ga.jobs)->check(CLI::Range(1u, 256u));
  gl->add_option("--format", ga.format)->check(CLI::IsMember(formats));
  gl->callback([&] { action = [&] { return glicci(ga); }; });

  auto* exp = app.add_subcommand("experiment", "scripted reproductions with reference values");
  exp->require_subcommand(1);
  ExperimentArgs ea;
  auto* run = exp->add_subcommand("run", "run one experiment, or all");
  run->add_option("id", ea.id, "experiment id or 'all'")->required();
  run->add_option("--format", ea.format)->check(CLI::IsMember(formats));
  run->add_option("--jobs", ea.jobs)->check(CLI::Range(1u, 256u));
  run->add_option_function<std::string>("--surfaces", [&](const std::string& v) { ea.surfaces = v; },
                                       "comma-separated surfaces for the searches");
  run->callback([&] { action = [&] { return experiment_run(g, ea); }; });
  auto* elist = exp->add_subcommand("list", "registered experiment ids");
  elist->callback([&] {
    action = [] {
      for (const auto& id : experiment_ids()) std::cout << id << "\n";
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSurface& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BasisMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
