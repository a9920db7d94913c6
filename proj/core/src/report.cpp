#include "liaison/report.hpp"

#include <iomanip>
#include <sstream>

#include "liaison/error.hpp"

namespace liaison {

using nlohmann::json;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper: return "paper";
    case Provenance::derived: return "derived";
    case Provenance::trivial: return "trivial";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "paper") return Provenance::paper;
  if (s == "derived") return Provenance::derived;
  if (s == "trivial") return Provenance::trivial;
  throw InvalidArgument("unknown provenance '" + s + "'");
}

void ExperimentReport::check(std::string name, json computed, json reference, Provenance prov,
                             std::string note) {
  const bool ok = computed == reference;
  entries.push_back({std::move(name), std::move(computed), std::move(reference), prov, ok, std::move(note)});
}

void ExperimentReport::info(std::string name, json computed, std::string note) {
  entries.push_back({std::move(name), std::move(computed), std::nullopt, Provenance::derived, true,
                     std::move(note)});
}

std::size_t ExperimentReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.match ? 0 : 1;
  return n;
}

bool ExperimentReport::all_match() const { return mismatches() == 0; }

json ExperimentReport::to_json() const {
  json es = json::array();
  for (const auto& e : entries) {
    json j{{"name", e.name}, {"computed", e.computed}, {"match", e.match}};
    if (e.reference) {
      j["reference"] = *e.reference;
      j["provenance"] = to_string(e.provenance);
    } else {
      j["reference"] = nullptr;
    }
    if (!e.note.empty()) j["note"] = e.note;
    es.push_back(std::move(j));
  }
  return {{"schema_version", schema_version}, {"id", id},
          {"anchor", anchor},                 {"all_match", all_match()},
          {"entries", std::move(es)},         {"runtime_ms", runtime_ms}};
}

ExperimentReport ExperimentReport::from_json(const json& j) {
  ExperimentReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw InvalidArgument("unsupported report schema_version " + std::to_string(r.schema_version));
  }
  r.id = j.at("id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.runtime_ms = j.value("runtime_ms", 0.0);
  for (const auto& e : j.at("entries")) {
    ReportEntry x;
    x.name = e.at("name").get<std::string>();
    x.computed = e.at("computed");
    if (!e.at("reference").is_null()) {
      x.reference = e.at("reference");
      x.provenance = provenance_from_string(e.at("provenance").get<std::string>());
    }
    x.match = e.at("match").get<bool>();
    x.note = e.value("note", std::string{});
    r.entries.push_back(std::move(x));
  }
  return r;
}

namespace {

std::string compact(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string clip(std::string s, std::size_t w) {
  if (s.size() > w) s = s.substr(0, w - 3) + "...";
  return s;
}

}  // namespace

std::string ExperimentReport::to_table() const {
  std::ostringstream os;
  os << id << "  " << anchor << "\n";
  for (const auto& e : entries) {
    os << "  " << (!e.reference ? "    " : e.match ? "ok  " : "FAIL") << "  " << std::left << std::setw(34) << clip(e.name, 34)
       << " " << std::setw(30) << clip(compact(e.computed), 60);
    if (e.reference) {
      os << "  ref " << clip(compact(*e.reference), 40) << " [" << to_string(e.provenance) << "]";
    }
    os << "\n";
    if (!e.note.empty()) os << "        " << e.note << "\n";
  }
  os << "  " << (all_match() ? "all values match" : std::to_string(mismatches()) + " mismatch(es)") << ", "
     << std::fixed << std::setprecision(1) << runtime_ms << " ms\n";
  return os.str();
}

json to_json(const DivisorClass& c) { return c.to_string(); }

json to_json(const RaoTag& r) {
  json j{{"kind", r.kind_name()}, {"shift", r.shift}, {"dualized", r.dualized}};
  if (r.kind == RaoTag::Kind::M_a) j["a"] = r.a;
  return j;
}

json to_json(const CurveRecord& c) {
  json j{{"degree", c.degree()}, {"genus", c.genus()}, {"rao", to_json(c.rao())}};
  if (c.witness()) {
    j["surface"] = c.witness()->surface->id();
    j["class"] = to_json(c.witness()->cls);
  }
  if (c.screen_failed()) j["screen_failed"] = true;
  return j;
}

json to_json(const ChainStep& s) {
  json j{{"kind", to_string(s.kind)}, {"after", to_json(s.after)}, {"note", s.note}};
  if (s.kind == ChainStep::Kind::biliaison) j["h"] = s.h;
  if (s.kind == ChainStep::Kind::g_link) j["m"] = s.h;
  if (s.kind == ChainStep::Kind::ci_link) j["type"] = {s.f1, s.f2};
  return j;
}

json to_json(const Chain& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  return {{"start", to_json(c.start)},
          {"steps", std::move(steps)},
          {"liaison_steps", c.liaison_steps()},
          {"ascending_only", c.ascending_only()}};
}

json to_json(const SearchReport& r) {
  json j{{"found", r.found},
         {"outcome", r.outcome},
         {"explored", r.explored},
         {"levels", r.levels},
         {"frontier", r.frontier},
         {"pruned", {{"screen", r.pruned_screen}, {"box", r.pruned_box}, {"degree", r.pruned_degree}}},
         {"bounds",
          {{"surfaces", r.bounds.surfaces},
           {"ascending_only", r.bounds.ascending_only},
           {"max_steps", r.bounds.max_steps},
           {"h_max", r.bounds.h_max},
           {"coeff_bound", r.bounds.coeff_bound},
           {"degree_cap", r.bounds.degree_cap ? json(*r.bounds.degree_cap) : json(nullptr)}}}};
  if (r.found) j["chain"] = to_json(r.chain);
  if (!r.pruning_log.empty()) j["pruning_log"] = r.pruning_log;
  return j;
}

json to_json(const HVector& h) { return h.entries(); }

json to_json(const PointChain& c) {
  json links = json::array();
  for (const auto& l : c.links) {
    links.push_back({{"from", to_json(l.from)}, {"w", to_json(l.w)}, {"to", to_json(l.to)},
                     {"from_mass", l.from.mass()}, {"to_mass", l.to.mass()}});
  }
  return {{"start", to_json(c.start)},
          {"links", std::move(links)},
          {"monotone_descending", c.monotone_descending},
          {"max_intermediate_degree", c.max_intermediate_degree},
          {"max_linking_degree", c.max_linking_degree}};
}

json to_json(const GlicciReport& r) {
  json j{{"points", r.points},
         {"found", r.found},
         {"outcome", r.outcome},
         {"explored", r.explored},
         {"gorenstein_candidates", r.gorenstein_candidates},
         {"bounds",
          {{"ambient", r.bounds.ambient == PointAmbient::P2 ? "P2" : "P3"},
           {"mode", to_string(r.bounds.mode)},
           {"admissibility", to_string(r.bounds.admissibility)},
           {"max_intermediate", r.bounds.max_intermediate.value_or(0)},
           {"max_socle", r.bounds.max_socle}}},
         {"model_relative", true}};
  if (r.bounds.admissibility == Admissibility::on_surface) j["bounds"]["surface_degree"] = r.bounds.surface_degree;
  if (r.found) j["chain"] = to_json(r.chain);
  return j;
}

std::string chain_table(const Chain& c) {
  std::ostringstream os;
  os << "  " << std::left << std::setw(16) << "start" << c.start.summary() << "\n";
  for (const auto& s : c.steps) {
    std::string tag = to_string(s.kind);
    if (s.kind == ChainStep::Kind::biliaison) tag += " h=" + std::to_string(s.h);
    if (s.kind == ChainStep::Kind::g_link) tag += " m=" + std::to_string(s.h);
    os << "  " << std::left << std::setw(16) << tag << s.after.summary() << "\n";
  }
  os << "  " << c.liaison_steps() << " liaison step(s)" << (c.ascending_only() ? ", ascending" : "") << "\n";
  return os.str();
}

namespace {
std::string points(std::int64_t n) { return std::to_string(n) + (n == 1 ? " point" : " points"); }
}  // namespace

std::string point_chain_table(const PointChain& c) {
  std::ostringstream os;
  os << "  start " << c.start.to_string() << " [" << points(c.start.mass()) << "]\n";
  for (const auto& l : c.links) {
    os << "  link in " << std::left << std::setw(24) << l.w.to_string() << " -> " << l.to.to_string() << " ["
       << points(l.to.mass()) << "]\n";
  }
  os << "  " << c.links.size() << " link(s), max intermediate degree " << c.max_intermediate_degree
     << ", max linking degree " << c.max_linking_degree
     << (c.monotone_descending ? ", descending" : "") << "\n";
  return os.str();
}

}  // namespace liaison
