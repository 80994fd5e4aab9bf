// Command-line frontend for the arrangement library: lattice and Poincare
// data, factorization checkers, partition search, induction tables, and the
// Orlik-Solomon cross-check.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "arr/json_io.hpp"

namespace {

using arr::Arrangement;
using arr::Certificate;
using nlohmann::json;

std::vector<int> parse_csv_indices(const std::string& text, int n, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) arr::fail(arr::ErrorKind::ParseError, std::string("empty ") + what);
    tok = tok.substr(a, b - a + 1);
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      arr::fail(arr::ErrorKind::ParseError, std::string("bad ") + what + " index '" + tok + "'");
    long idx = std::stol(tok);
    if (idx < 1 || idx > n)
      arr::fail(arr::ErrorKind::OutOfRange,
                std::string(what) + " index " + tok + " out of range 1.." + std::to_string(n));
    out.push_back(static_cast<int>(idx - 1));
  }
  return out;
}

void print_certificate(const Certificate& c, const std::string& name, bool as_json) {
  if (as_json) {
    json j = arr::certificate_to_json(c);
    j["check"] = name;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << name << ": " << (c.verdict ? "true" : "false") << "\n";
  if (c.exponents) {
    std::cout << "exponents: {";
    for (size_t i = 0; i < c.exponents->size(); ++i)
      std::cout << (i ? "," : "") << (*c.exponents)[i];
    std::cout << "}\n";
  }
  if (c.partition) std::cout << "partition: " << c.partition->render() << "\n";
  if (c.pivot_chain) {
    std::cout << "addition order:";
    for (int h : *c.pivot_chain) std::cout << " " << h + 1;
    std::cout << "\n";
  }
  if (c.chain) {
    std::cout << "modular chain:";
    for (arr::MemberMask m : *c.chain) {
      std::cout << " {";
      bool first = true;
      for (int i = 0; i < 64; ++i)
        if (m & (arr::MemberMask(1) << i)) {
          std::cout << (first ? "" : ",") << i + 1;
          first = false;
        }
      std::cout << "}";
    }
    std::cout << "\n";
  }
  if (c.transversal) {
    std::cout << "dependent transversal:";
    for (int h : *c.transversal) std::cout << " " << h + 1;
    std::cout << "\n";
  }
  if (c.flat_members) {
    std::cout << "flat: {";
    bool first = true;
    for (int i = 0; i < 64; ++i)
      if (*c.flat_members & (arr::MemberMask(1) << i)) {
        std::cout << (first ? "" : ",") << i + 1;
        first = false;
      }
    std::cout << "}\n";
  }
  if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with central hyperplane arrangements"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string file, file2, seed_file, partition_str, order_str, flat_str, property_str = "factored";
  int pivot = 0;
  std::size_t limit = 0;
  int jobs = 1;
  std::uint64_t max_transversals = 1000000;

  auto* lattice_cmd = app.add_subcommand("lattice", "flats, Mobius values, Poincare polynomial");
  lattice_cmd->add_option("file", file)->required();

  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial");
  poincare_cmd->add_option("file", file)->required();

  auto* check_cmd = app.add_subcommand("check", "decide a property");
  auto* check_nice = check_cmd->add_subcommand("nice", "is the partition nice?");
  auto* check_indep = check_cmd->add_subcommand("independent", "is the partition independent?");
  auto* check_ss = check_cmd->add_subcommand("supersolvable", "modular chain search");
  auto* check_if = check_cmd->add_subcommand("ind-free", "inductive freeness");
  auto* check_ifac = check_cmd->add_subcommand("ind-factored", "inductive factorization");
  auto* check_hered = check_cmd->add_subcommand("hereditary", "property on every restriction");
  for (auto* c : {check_nice, check_indep, check_ss, check_if, check_ifac, check_hered})
    c->add_option("file", file)->required();
  check_nice->add_option("--partition", partition_str)->required();
  check_nice->add_option("--pivot", pivot, "also run the addition-deletion report at this pivot");
  check_indep->add_option("--partition", partition_str)->required();
  check_ifac->add_option("--partition", partition_str, "check this partition instead of searching");
  check_hered->add_option("--property", property_str, "factored | ind-factored | ind-free");
  check_nice->add_option("--max-transversals", max_transversals);
  check_indep->add_option("--max-transversals", max_transversals);

  auto* find_cmd = app.add_subcommand("find", "search");
  auto* find_nice = find_cmd->add_subcommand("nice", "enumerate nice partitions");
  find_nice->add_option("file", file)->required();
  find_nice->add_option("--limit", limit);
  find_nice->add_option("--jobs", jobs);

  auto* table_cmd = app.add_subcommand("table", "induction table of factorizations");
  table_cmd->add_option("file", file)->required();
  table_cmd->add_option("--order", order_str)->required();
  table_cmd->add_option("--seed", seed_file, "arrangement file providing the starting subarrangement");
  table_cmd->add_option("--seed-partition", partition_str, "inductive factorization of the seed");
  std::string target_str;
  table_cmd->add_option("--partition", target_str, "steer each step to this final partition");

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction A^X");
  restrict_cmd->add_option("file", file)->required();
  restrict_cmd->add_option("--flat", flat_str, "hyperplane indices spanning the flat")->required();

  auto* localize_cmd = app.add_subcommand("localize", "localization A_X");
  localize_cmd->add_option("file", file)->required();
  localize_cmd->add_option("--flat", flat_str)->required();

  auto* product_cmd = app.add_subcommand("product", "product arrangement");
  product_cmd->add_option("file", file)->required();
  product_cmd->add_option("file2", file2)->required();

  auto* triple_cmd = app.add_subcommand("triple", "deletion and restriction at a pivot");
  triple_cmd->add_option("file", file)->required();
  triple_cmd->add_option("--pivot", pivot)->required();

  auto* os_cmd = app.add_subcommand("os-verify", "tensor-factorization check in A(A)");
  os_cmd->add_option("file", file)->required();
  os_cmd->add_option("--partition", partition_str)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*lattice_cmd) {
      const arr::Lattice& lat = arr::lattice_for(arr::load_arrangement_file(file));
      std::cout << arr::lattice_to_json(lat).dump(2) << "\n";
    } else if (*poincare_cmd) {
      arr::IntPoly p = arr::poincare(arr::load_arrangement_file(file));
      if (as_json) {
        std::cout << arr::poincare_to_json(p).dump(2) << "\n";
      } else if (auto f = arr::try_factor_linear(p)) {
        std::cout << arr::render_factored(*f) << "\n";
      } else {
        std::cout << arr::render(p) << "\n";
      }
    } else if (*check_nice) {
      Arrangement a = arr::load_arrangement_file(file);
      arr::Partition p = arr::Partition::parse(partition_str, a.size());
      Certificate c = arr::is_nice(a, p, max_transversals);
      print_certificate(c, "nice", as_json);
      if (check_nice->count("--pivot")) {
        arr::AddDelReport rep = arr::add_del_check(a, p, pivot - 1);
        std::cout << "addition-deletion at pivot " << pivot << ": nice(A)=" << rep.nice_whole
                  << " nice(A')=" << rep.nice_deleted << " R bijective=" << rep.r_bijective
                  << " nice(A'')=" << rep.nice_restricted
                  << (rep.violation ? "  THEOREM VIOLATION" : "")
                  << (rep.hypothesis_not_met ? "  (hypothesis not met)" : "") << "\n";
      }
    } else if (*check_indep) {
      Arrangement a = arr::load_arrangement_file(file);
      Certificate c = arr::is_independent(a, arr::Partition::parse(partition_str, a.size()),
                                          max_transversals);
      print_certificate(c, "independent", as_json);
    } else if (*check_ss) {
      Arrangement a = arr::load_arrangement_file(file);
      print_certificate(arr::is_supersolvable(a), "supersolvable", as_json);
    } else if (*check_if) {
      Arrangement a = arr::load_arrangement_file(file);
      print_certificate(arr::is_inductively_free(a), "inductively free", as_json);
    } else if (*check_ifac) {
      Arrangement a = arr::load_arrangement_file(file);
      Certificate c = partition_str.empty()
                          ? arr::is_inductively_factored(a)
                          : arr::is_inductive_factorization(
                                a, arr::Partition::parse(partition_str, a.size()));
      print_certificate(c, "inductively factored", as_json);
    } else if (*check_hered) {
      Arrangement a = arr::load_arrangement_file(file);
      arr::Property prop;
      if (property_str == "factored") prop = arr::Property::Factored;
      else if (property_str == "ind-factored") prop = arr::Property::InductivelyFactored;
      else if (property_str == "ind-free") prop = arr::Property::InductivelyFree;
      else arr::fail(arr::ErrorKind::SchemaError, "unknown property '" + property_str + "'");
      print_certificate(arr::hereditary_check(a, prop), "hereditary " + property_str, as_json);
    } else if (*find_nice) {
      Arrangement a = arr::load_arrangement_file(file);
      std::optional<std::size_t> lim;
      if (find_nice->count("--limit")) lim = limit;
      auto parts = arr::find_nice_partitions(a, lim, jobs);
      if (as_json) {
        json out = json::array();
        for (const auto& p : parts) {
          json jp = json::array();
          for (const auto& b : p.blocks) {
            json jb = json::array();
            for (int h : b) jb.push_back(h + 1);
            jp.push_back(jb);
          }
          out.push_back(jp);
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << parts.size() << " nice partition(s)\n";
        for (const auto& p : parts) std::cout << p.render() << "\n";
      }
    } else if (*table_cmd) {
      Arrangement a = arr::load_arrangement_file(file);
      std::vector<int> order = parse_csv_indices(order_str, a.size(), "order");
      std::optional<std::pair<Arrangement, arr::Partition>> seed;
      if (!seed_file.empty()) {
        Arrangement sa = arr::load_arrangement_file(seed_file);
        arr::Partition sp;
        if (!partition_str.empty()) {
          sp = arr::Partition::parse(partition_str, sa.size());
        } else {
          Certificate c = arr::is_inductively_factored(sa);
          if (!c.verdict || !c.partition)
            arr::fail(arr::ErrorKind::BadSeed, "seed is not inductively factored");
          sp = *c.partition;
        }
        seed = std::make_pair(std::move(sa), std::move(sp));
      }
      std::optional<arr::Partition> target;
      if (!target_str.empty()) target = arr::Partition::parse(target_str, a.size());
      auto result = arr::emit_induction_table(a, order, seed, target);
      if (std::holds_alternative<arr::TableFailure>(result)) {
        const auto& f = std::get<arr::TableFailure>(result);
        if (as_json) {
          json j;
          j["failure"] = {{"step", f.step + 1}, {"reason", f.reason}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "stuck at step " << f.step + 1 << ": " << f.reason << "\n";
        }
      } else {
        const auto& t = std::get<arr::InductionTable>(result);
        if (as_json) std::cout << arr::table_to_json(t).dump(2) << "\n";
        else std::cout << arr::render_induction_table(t);
      }
    } else if (*restrict_cmd || *localize_cmd) {
      Arrangement a = arr::load_arrangement_file(file);
      const arr::Lattice& lat = arr::lattice_for(a);
      std::vector<int> span = parse_csv_indices(flat_str, a.size(), "flat");
      int fid = lat.flat_of(span);
      if (*restrict_cmd) {
        arr::Restriction res = arr::restrict_to_flat(lat, fid);
        std::cout << arr::arrangement_to_json(res.arr).dump(2) << "\n";
      } else {
        arr::Arrangement loc = arr::localize(lat, fid);
        if (as_json) {
          std::cout << arr::arrangement_to_json(loc).dump(2) << "\n";
        } else {
          std::cout << "members:";
          for (int h : arr::localize_indices(lat, fid)) std::cout << " " << h + 1;
          std::cout << "\n";
        }
      }
    } else if (*product_cmd) {
      Arrangement p = arr::product(arr::load_arrangement_file(file), arr::load_arrangement_file(file2));
      std::cout << arr::arrangement_to_json(p).dump(2) << "\n";
    } else if (*triple_cmd) {
      Arrangement a = arr::load_arrangement_file(file);
      arr::Triple t = arr::make_triple(a, pivot - 1);
      json j;
      j["deleted"] = arr::arrangement_to_json(t.deleted);
      j["restricted"] = arr::arrangement_to_json(t.restricted);
      json trace = json::array();
      for (size_t i = 0; i < t.trace.size(); ++i)
        trace.push_back({{"hyperplane", t.deleted_to_whole(static_cast<int>(i)) + 1},
                         {"image", t.trace[i] + 1}});
      j["trace"] = trace;
      std::cout << j.dump(2) << "\n";
    } else if (*os_cmd) {
      Arrangement a = arr::load_arrangement_file(file);
      arr::Partition p = arr::Partition::parse(partition_str, a.size());
      arr::KappaReport rep = arr::kappa_report(a, p);
      if (as_json) {
        std::cout << arr::kappa_to_json(rep).dump(2) << "\n";
      } else {
        std::cout << "kappa is " << (rep.isomorphism ? "" : "not ")
                  << "an isomorphism of graded vector spaces\n";
        for (size_t d = 0; d < rep.domain_dims.size(); ++d)
          std::cout << "degree " << d << ": domain " << rep.domain_dims[d] << ", codomain "
                    << rep.codomain_dims[d] << "\n";
      }
    }
  } catch (const arr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == arr::ErrorKind::CapExceeded ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
