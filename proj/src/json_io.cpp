#include "arr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace arr {

using nlohmann::json;

namespace {

std::vector<int> mask_to_list(MemberMask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m & (MemberMask(1) << i)) out.push_back(i + 1);
  return out;
}

MemberMask list_to_mask(const std::vector<int>& l) {
  MemberMask m = 0;
  for (int i : l) m |= MemberMask(1) << (i - 1);
  return m;
}

json blocks_to_json(const std::vector<std::vector<int>>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json jb = json::array();
    for (int h : b) jb.push_back(h + 1);
    out.push_back(jb);
  }
  return out;
}

std::vector<std::vector<int>> blocks_from_json(const json& j) {
  std::vector<std::vector<int>> blocks;
  for (const auto& jb : j) {
    std::vector<int> b;
    for (const auto& v : jb) b.push_back(v.get<int>() - 1);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

json lattice_to_json(const Lattice& lat) {
  json flats = json::array();
  for (int i = 0; i < lat.flat_count(); ++i) {
    json f;
    f["rank"] = lat.flats[i].rank;
    f["members"] = mask_to_list(lat.flats[i].members);
    f["mobius"] = lat.mobius[i].str();
    flats.push_back(f);
  }
  json out;
  out["flats"] = flats;
  out["rank"] = lat.rank();
  out["poincare"] = poincare_to_json(poincare(lat));
  return out;
}

json poincare_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const Int& c : p.c) coeffs.push_back(c.str());
  json out;
  out["coefficients"] = coeffs;
  out["rendered"] = render(p);
  if (auto f = try_factor_linear(p)) {
    out["linear_factors"] = *f;
    out["factored"] = render_factored(*f);
  } else {
    out["linear_factors"] = nullptr;
  }
  return out;
}

json certificate_to_json(const Certificate& c) {
  json out;
  out["verdict"] = c.verdict;
  if (!c.note.empty()) out["note"] = c.note;
  if (c.partition) out["partition"] = blocks_to_json(c.partition->blocks);
  if (c.transversal) {
    json t = json::array();
    for (int h : *c.transversal) t.push_back(h + 1);
    out["dependent_transversal"] = t;
  }
  if (c.flat_members) out["flat"] = mask_to_list(*c.flat_members);
  if (c.chain) {
    json ch = json::array();
    for (MemberMask m : *c.chain) ch.push_back(mask_to_list(m));
    out["modular_chain"] = ch;
  }
  if (c.pivot_chain) {
    json pc = json::array();
    for (int h : *c.pivot_chain) pc.push_back(h + 1);
    out["pivot_chain"] = pc;
  }
  if (c.exponents) out["exponents"] = *c.exponents;
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.verdict = j.at("verdict").get<bool>();
  if (j.contains("note")) c.note = j["note"].get<std::string>();
  if (j.contains("partition")) {
    Partition p;
    p.blocks = blocks_from_json(j["partition"]);
    c.partition = p;
  }
  if (j.contains("dependent_transversal")) {
    std::vector<int> t;
    for (const auto& v : j["dependent_transversal"]) t.push_back(v.get<int>() - 1);
    c.transversal = t;
  }
  if (j.contains("flat")) c.flat_members = list_to_mask(j["flat"].get<std::vector<int>>());
  if (j.contains("modular_chain")) {
    std::vector<MemberMask> ch;
    for (const auto& v : j["modular_chain"]) ch.push_back(list_to_mask(v.get<std::vector<int>>()));
    c.chain = ch;
  }
  if (j.contains("pivot_chain")) {
    std::vector<int> pc;
    for (const auto& v : j["pivot_chain"]) pc.push_back(v.get<int>() - 1);
    c.pivot_chain = pc;
  }
  if (j.contains("exponents")) c.exponents = j["exponents"].get<std::vector<int>>();
  return c;
}

json table_to_json(const InductionTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json jr;
    jr["partition_before"] = blocks_to_json(r.before.blocks);
    jr["exp_before"] = r.exp_before;
    jr["added"] = r.added + 1;
    jr["alpha"] = r.alpha;
    jr["partition_restricted"] = blocks_to_json(r.restricted_blocks);
    jr["exp_restricted"] = r.exp_restricted;
    jr["block"] = r.chosen_block + 1;
    rows.push_back(jr);
  }
  json out;
  out["rows"] = rows;
  out["final_partition"] = blocks_to_json(t.final_partition.blocks);
  out["exp_final"] = t.exp_final;
  return out;
}

json arrangement_to_json(const Arrangement& a) {
  return json::parse(render_arrangement_source(to_source(a)));
}

json kappa_to_json(const KappaReport& rep) {
  json out;
  out["verdict"] = rep.isomorphism;
  out["domain_dims"] = rep.domain_dims;
  out["codomain_dims"] = rep.codomain_dims;
  if (!rep.isomorphism) out["failing_degree"] = rep.failing_degree;
  return out;
}

Arrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::SchemaError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return make_arrangement(parse_arrangement_file(buf.str()));
}

}  // namespace arr
