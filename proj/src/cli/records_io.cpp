#include <cstdio>
#include <ostream>
#include <sstream>

#include "ddo/cli.hpp"
#include "ddo/errors.hpp"

namespace ddo::cli {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ':';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string csv_row(const LevelRecord& r) {
  const auto& p = r.params;
  std::string sector, branch, n, m, mprime;
  if (const auto* c = std::get_if<CartesianNumbers>(&r.qn)) {
    sector = join_ints(c->parity);
    n = join_ints(c->n);
  } else if (const auto* l = std::get_if<LandauNumbers>(&r.qn)) {
    n = std::to_string(l->n);
    m = std::to_string(l->m);
  } else {
    const auto& s = std::get<SectorNumbers>(r.qn);
    sector = std::to_string(s.epsilon);
    branch = std::to_string(s.branch);
    n = std::to_string(s.k);
    mprime = format_double(s.mprime());
  }
  std::ostringstream o;
  o << model_id(r.model) << ',' << p.dim << ',' << format_double(p.lambda) << ',' << format_double(p.mu_at(0))
    << ',' << (p.dim >= 2 ? format_double(p.mu_at(1)) : std::string()) << ',' << format_double(p.omega) << ','
    << format_double(p.omega_c) << ',' << format_double(p.hbar) << ',' << sector << ',' << branch << ',' << n
    << ',' << m << ',' << mprime << ',' << format_double(r.energy) << ',' << format_double(r.frequency);
  return o.str();
}

void write_csv(std::ostream& out, const std::vector<LevelRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

json record_to_json(const LevelRecord& r) {
  const auto& p = r.params;
  json j;
  j["model"] = std::string(model_id(r.model));
  j["params"] = {{"dim", p.dim},         {"hbar", p.hbar},       {"omega", p.omega},
                 {"lambda", p.lambda},   {"mu", p.mu},           {"omega_c", p.omega_c}};
  if (const auto* c = std::get_if<CartesianNumbers>(&r.qn)) {
    j["labels"] = {{"kind", "cartesian"}, {"n", c->n}, {"parity", c->parity}};
  } else if (const auto* l = std::get_if<LandauNumbers>(&r.qn)) {
    j["labels"] = {{"kind", "landau"}, {"n", l->n}, {"m", l->m}};
  } else {
    const auto& s = std::get<SectorNumbers>(r.qn);
    j["labels"] = {{"kind", "sector"},
                   {"k", s.k},
                   {"twice_mprime", s.twice_mprime},
                   {"mprime", s.mprime()},
                   {"epsilon", s.epsilon},
                   {"branch", s.branch}};
  }
  j["energy"] = r.energy;
  j["Omega"] = r.frequency;
  j["group"] = r.group;
  return j;
}

LevelRecord record_from_json(const json& j) {
  LevelRecord r;
  const auto kind = parse_model_id(j.at("model").get<std::string>());
  if (!kind) throw DomainError("unknown model id in record: " + j.at("model").get<std::string>());
  r.model = *kind;
  const auto& p = j.at("params");
  r.params.dim = p.at("dim").get<int>();
  r.params.hbar = p.at("hbar").get<double>();
  r.params.omega = p.at("omega").get<double>();
  r.params.lambda = p.at("lambda").get<double>();
  r.params.mu = p.at("mu").get<std::vector<double>>();
  r.params.omega_c = p.at("omega_c").get<double>();
  const auto& l = j.at("labels");
  const auto kind_s = l.at("kind").get<std::string>();
  if (kind_s == "cartesian") {
    r.qn = CartesianNumbers{l.at("n").get<std::vector<int>>(), l.at("parity").get<std::vector<int>>()};
  } else if (kind_s == "landau") {
    r.qn = LandauNumbers{l.at("n").get<int>(), l.at("m").get<int>()};
  } else if (kind_s == "sector") {
    r.qn = SectorNumbers{l.at("k").get<int>(), l.at("twice_mprime").get<int>(), l.at("epsilon").get<int>(),
                         l.at("branch").get<int>()};
  } else {
    throw DomainError("unknown label kind in record: " + kind_s);
  }
  r.energy = j.at("energy").get<double>();
  r.frequency = j.at("Omega").get<double>();
  r.group = j.at("group").get<int>();
  return r;
}

json records_to_json(const std::vector<LevelRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return json{{"records", arr}};
}

std::vector<LevelRecord> records_from_json(const json& j) {
  std::vector<LevelRecord> out;
  for (const auto& r : j.at("records")) out.push_back(record_from_json(r));
  return out;
}

}  // namespace ddo::cli
