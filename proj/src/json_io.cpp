#include "gcone/json_io.hpp"

#include <json.hpp>
#include <stdexcept>

#include "gcone/polygon.hpp"
#include "gcone/root_system.hpp"
#include "gcone/verify.hpp"

namespace gcone {

namespace {

using ojson = nlohmann::ordered_json;

long long to_machine_int(const Z& x) {
  check(x.fits_slong_p(), "json export needs machine-size integers");
  return static_cast<long long>(x.get_si());
}

ojson vec_json(const IVec& v) {
  ojson row = ojson::array();
  for (const Z& x : v) row.push_back(to_machine_int(x));
  return row;
}

ojson mat_json(const IMat& m) {
  ojson rows = ojson::array();
  for (const IVec& v : m) rows.push_back(vec_json(v));
  return rows;
}

IVec parse_vec(const ojson& row, size_t dim) {
  if (!row.is_array() || row.size() != dim)
    throw std::runtime_error("cone artifact: vector of wrong shape");
  IVec v;
  v.reserve(dim);
  for (const ojson& x : row) {
    if (!x.is_number_integer())
      throw std::runtime_error("cone artifact: non-integer vector entry");
    v.emplace_back(static_cast<long>(x.get<long long>()));
  }
  return v;
}

IMat parse_mat(const ojson& rows, size_t dim) {
  if (!rows.is_array())
    throw std::runtime_error("cone artifact: matrix field is not an array");
  IMat m;
  m.reserve(rows.size());
  for (const ojson& row : rows) m.push_back(parse_vec(row, dim));
  return m;
}

}  // namespace

std::string cone_to_json(const ClusterModel& m, const Cone& c) {
  check(c.dim == m.num_vars(),
        "cone artifact: cone dimension must match the variable count");
  const auto* pm = dynamic_cast<const PolygonModel*>(&m);
  const auto* rm = dynamic_cast<const RootModel*>(&m);
  check(pm != nullptr || rm != nullptr,
        "cone artifact: unknown model implementation");

  ojson j;
  j["family"] = std::string(1, family_letter(m.spec().family));
  j["rank"] = m.spec().rank;
  j["frozen_mode"] =
      m.spec().frozen_mode == FrozenMode::Special ? "special" : "none";
  ojson vars = ojson::array();
  for (size_t v = 0; v < m.num_vars(); ++v) {
    ojson entry;
    entry["id"] = v;
    entry["kind"] = v < m.num_cluster() ? "cluster" : "frozen";
    ojson diag = ojson::array();
    if (pm != nullptr) {
      const Diag& d = pm->orbit(static_cast<int>(v)).elems.at(0);
      diag = ojson::array({d.a, d.b, d.color});
    } else {
      diag = vec_json(rm->weight(static_cast<int>(v)));
    }
    entry["diag"] = diag;
    vars.push_back(std::move(entry));
  }
  j["variables"] = std::move(vars);
  j["lineality"] = mat_json(c.lineality);
  j["rays"] = mat_json(c.rays);
  j["inequalities"] = mat_json(c.inequalities);
  return j.dump(2) + "\n";
}

ParsedConeArtifact parse_cone_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("cone artifact: invalid JSON: ") +
                             e.what());
  }
  try {
    ParsedConeArtifact out;
    const std::string fam = j.at("family").get<std::string>();
    if (fam.size() != 1 || fam[0] < 'A' || fam[0] > 'G')
      throw std::runtime_error("cone artifact: bad family letter");
    out.spec.family = family_from_letter(fam[0]);
    out.spec.rank = j.at("rank").get<int>();
    const std::string mode = j.at("frozen_mode").get<std::string>();
    if (mode == "special")
      out.spec.frozen_mode = FrozenMode::Special;
    else if (mode == "none")
      out.spec.frozen_mode = FrozenMode::None;
    else
      throw std::runtime_error("cone artifact: bad frozen_mode");
    const ojson& vars = j.at("variables");
    if (!vars.is_array() || vars.empty())
      throw std::runtime_error("cone artifact: empty variable table");
    out.dim = vars.size();
    for (size_t v = 0; v < vars.size(); ++v) {
      const ojson& entry = vars.at(v);
      if (entry.at("id").get<size_t>() != v)
        throw std::runtime_error("cone artifact: variable ids out of order");
      const std::string kind = entry.at("kind").get<std::string>();
      if (kind != "cluster" && kind != "frozen")
        throw std::runtime_error("cone artifact: bad variable kind");
      if (!entry.at("diag").is_array())
        throw std::runtime_error("cone artifact: bad variable data");
    }
    out.lineality = parse_mat(j.at("lineality"), out.dim);
    out.rays = parse_mat(j.at("rays"), out.dim);
    out.inequalities = parse_mat(j.at("inequalities"), out.dim);
    return out;
  } catch (const ojson::exception& e) {
    throw std::runtime_error(std::string("cone artifact: schema error: ") +
                             e.what());
  }
}

std::string round_trip_cone_json(const std::string& text) {
  const ParsedConeArtifact parsed = parse_cone_json(text);
  std::unique_ptr<ClusterModel> m;
  try {
    m = build_model(parsed.spec);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("cone artifact: ") + e.what());
  }
  if (parsed.dim != m->num_vars())
    throw std::runtime_error(
        "cone artifact: variable table size does not match the model");
  const Cone c = cone_from_generators(parsed.dim, parsed.rays,
                                      parsed.lineality);
  return cone_to_json(*m, c);
}

}  // namespace gcone
