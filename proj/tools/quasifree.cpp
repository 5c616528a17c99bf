#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qf/decide.hpp"
#include "qf/documents.hpp"
#include "qf/errors.hpp"

namespace {

using qf::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qf::DocumentError("", "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json load_document(const std::string& path) { return qf::parse_json_text(read_file(path)); }

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<qf::Int> parse_coord_list(const std::string& text) {
  std::vector<qf::Int> coords;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw qf::DocumentError("", "unit coordinates must be a comma-separated integer list");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size())
      throw qf::DocumentError("", "unit coordinates must be a comma-separated integer list");
    coords.emplace_back(value);
  }
  if (coords.empty())
    throw qf::DocumentError("", "unit coordinates must be a comma-separated integer list");
  return coords;
}

int cmd_chartab(const std::string& group_file, const std::vector<std::int64_t>& prime_overrides) {
  const qf::PermGroup group = qf::parse_group_document(load_document(group_file));
  const qf::CharacterTable table = qf::compute_table(group, prime_overrides);
  emit(qf::serialize_table(table));
  std::cerr << "character table: " << table.num_classes << " classes, group order "
            << table.group_order << "\n";
  return 0;
}

int cmd_decide(const std::string& job_file, std::optional<int> height,
               std::optional<std::int64_t> limit) {
  qf::JobDocument job = qf::parse_job_document(load_document(job_file));
  if (height) job.config.height_bound = *height;
  if (limit) job.config.candidate_limit = *limit;

  const qf::Verdict verdict = qf::decide(job.table, job.pi1, job.pi2, job.config);

  Json doc = Json::object();
  doc["type"] = "decision";
  const Json fields = qf::serialize_verdict(verdict);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  doc["d1_values"] = qf::serialize_values(qf::to_class_function(qf::one_minus(job.pi1)).values);
  doc["d2_values"] = qf::serialize_values(qf::to_class_function(qf::one_minus(job.pi2)).values);
  doc["k_groups"] = Json{{"pi1", qf::serialize_k_groups(qf::equivariant_k_groups(job.pi1))},
                         {"pi2", qf::serialize_k_groups(qf::equivariant_k_groups(job.pi2))}};
  emit(doc);

  if (std::holds_alternative<qf::Conjugate>(verdict)) {
    std::cerr << "conjugate: the actions are conjugate; witness unit recorded\n";
    return 0;
  }
  if (std::holds_alternative<qf::NotConjugate>(verdict)) {
    std::cerr << "not conjugate: obstruction "
              << doc["obstruction"]["kind"].get<std::string>() << "\n";
    return 1;
  }
  const auto& unknown = std::get<qf::Unknown>(verdict);
  std::cerr << "unknown: exhausted " << unknown.candidates_tested
            << " candidates at height bound " << unknown.height_bound << "\n";
  return 2;
}

int cmd_fock_cover(const std::string& group_file, const std::string& rep_file,
                   std::optional<int> kmax) {
  const qf::TablePtr table = qf::resolve_group_document(load_document(group_file));
  const qf::Representation rep = qf::parse_rep_document(load_document(rep_file), table);
  const qf::FockCoverage coverage =
      qf::fock_coverage(rep, kmax ? std::optional<int>(*kmax) : std::nullopt);

  Json entries = Json::array();
  for (std::size_t i = 0; i < coverage.first_power.size(); ++i) {
    Json entry{{"irr", i}};
    if (coverage.first_power[i])
      entry["first_power"] = *coverage.first_power[i];
    else
      entry["first_power"] = nullptr;
    entries.push_back(std::move(entry));
  }
  emit(Json{{"type", "fock_coverage"},
            {"kmax", coverage.kmax_used},
            {"complete", coverage.complete()},
            {"entries", std::move(entries)}});

  if (coverage.complete()) {
    std::cerr << "all irreducibles appear within tensor power " << coverage.kmax_used << "\n";
    return 0;
  }
  if (qf::is_faithful(rep))
    std::cerr << "warning: a faithful character left irreducibles uncovered within the "
                 "Burnside-Brauer bound; this should be impossible\n";
  else
    std::cerr << "some irreducibles never appear: the representation is not faithful\n";
  return 3;
}

int cmd_ktheory(const std::string& group_file, const std::string& rep_file) {
  const qf::TablePtr table = qf::resolve_group_document(load_document(group_file));
  const qf::Representation rep = qf::parse_rep_document(load_document(rep_file), table);
  const qf::KGroups groups = qf::equivariant_k_groups(rep);
  Json doc = qf::serialize_k_groups(groups);
  Json out = Json::object();
  out["type"] = "k_theory";
  for (const auto& [key, value] : doc.items()) out[key] = value;
  emit(out);
  std::cerr << "k0: free rank " << groups.free_rank << ", " << groups.torsion.size()
            << " torsion factor(s); k1 rank " << groups.k1_rank << "\n";
  return 0;
}

int cmd_units(const std::string& group_file, int height, std::int64_t limit) {
  const qf::TablePtr table = qf::resolve_group_document(load_document(group_file));
  const std::vector<qf::VirtualCharacter> units = qf::enumerate_units(table, height, limit);
  Json list = Json::array();
  for (const qf::VirtualCharacter& u : units) list.push_back(qf::serialize_coords(u.coords));
  emit(Json{{"type", "units"},
            {"height", height},
            {"limit", limit},
            {"count", units.size()},
            {"units", std::move(list)}});
  std::cerr << "found " << units.size() << " unit(s) up to height " << height << "\n";
  return 0;
}

int cmd_verify(const std::string& group_file, const std::string& rep1_file,
               const std::string& rep2_file, const std::string& coord_list) {
  const qf::TablePtr table = qf::resolve_group_document(load_document(group_file));
  const qf::Representation rep1 = qf::parse_rep_document(load_document(rep1_file), table);
  const qf::Representation rep2 = qf::parse_rep_document(load_document(rep2_file), table);
  std::vector<qf::Int> coords = parse_coord_list(coord_list);
  if (static_cast<int>(coords.size()) != table->num_classes)
    throw qf::DocumentError("", "unit coordinate count must match the number of classes");
  const qf::VirtualCharacter u{table, std::move(coords)};
  const bool ok = qf::verify_witness(u, rep1, rep2);
  emit(Json{{"type", "verify"}, {"ok", ok}});
  std::cerr << (ok ? "witness verified: u*(1-[pi1]) = 1-[pi2] and u is a unit\n"
                   : "witness rejected\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy of quasi-free finite-group actions on Cuntz algebras"};
  app.require_subcommand(1);

  std::string group_file, job_file, rep_file, rep2_file, coord_list;
  std::vector<std::int64_t> prime_overrides;
  std::optional<int> height_flag, kmax_flag;
  std::optional<std::int64_t> limit_flag;
  int units_height = 2;
  std::int64_t units_limit = 200000;

  CLI::App* chartab = app.add_subcommand("chartab", "Compute a character table");
  chartab->add_option("group-file", group_file)->required();
  chartab->add_option("--prime-override", prime_overrides,
                      "Primes to try first in the Dixon-Schneider pass");

  CLI::App* decide = app.add_subcommand("decide", "Decide conjugacy of two quasi-free actions");
  decide->add_option("job-file", job_file)->required();
  decide->add_option("--height", height_flag, "Kernel lattice search height bound");
  decide->add_option("--limit", limit_flag, "Maximum lattice candidates to test");

  CLI::App* fock = app.add_subcommand("fock-cover", "First tensor power containing each irreducible");
  fock->add_option("group-file", group_file)->required();
  fock->add_option("rep-file", rep_file)->required();
  fock->add_option("--kmax", kmax_flag, "Largest tensor power to scan");

  CLI::App* ktheory = app.add_subcommand("ktheory", "Equivariant K-groups of a quasi-free action");
  ktheory->add_option("group-file", group_file)->required();
  ktheory->add_option("rep-file", rep_file)->required();

  CLI::App* units = app.add_subcommand("units", "Enumerate representation ring units");
  units->add_option("group-file", group_file)->required();
  units->add_option("--height", units_height, "Coordinate sup-norm bound");
  units->add_option("--limit", units_limit, "Maximum candidates to scan");

  CLI::App* verify = app.add_subcommand("verify", "Check a claimed witness unit");
  verify->add_option("group-file", group_file)->required();
  verify->add_option("rep1-file", rep_file)->required();
  verify->add_option("rep2-file", rep2_file)->required();
  verify->add_option("unit-coords", coord_list, "Comma-separated coordinates")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(chartab)) return cmd_chartab(group_file, prime_overrides);
    if (app.got_subcommand(decide)) return cmd_decide(job_file, height_flag, limit_flag);
    if (app.got_subcommand(fock)) return cmd_fock_cover(group_file, rep_file, kmax_flag);
    if (app.got_subcommand(ktheory)) return cmd_ktheory(group_file, rep_file);
    if (app.got_subcommand(units)) return cmd_units(group_file, units_height, units_limit);
    if (app.got_subcommand(verify)) return cmd_verify(group_file, rep_file, rep2_file, coord_list);
  } catch (const qf::HypothesisError& ex) {
    std::cerr << "hypothesis failure: " << ex.what() << "\n";
    return 67;
  } catch (const qf::GroupTooLargeError& ex) {
    std::cerr << "group too large: " << ex.what() << "\n";
    return 66;
  } catch (const qf::DocumentError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 64;
  } catch (const qf::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 64;
  } catch (const qf::ValidationError& ex) {
    std::cerr << "validation error: " << ex.what() << "\n";
    return 65;
  } catch (const qf::InternalError& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 70;
  } catch (const qf::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 65;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 70;
  }
  return 70;
}
