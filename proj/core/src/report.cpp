#include "eth2game/report.hpp"

#include "eth2game/version.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <utility>

namespace eth2game {

namespace {

using Json = nlohmann::ordered_json;

std::string g2(const Rational& v) { return format_fixed(v, 2); }

std::string d2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

const char* response_name(TypeBestResponse r) {
  switch (r) {
    case TypeBestResponse::CooperateOnly:
      return "cooperate";
    case TypeBestResponse::DeviateOnly:
      return "deviate";
    case TypeBestResponse::Indifferent:
      return "indifferent";
  }
  return "indifferent";
}

const char* mode_name(EnumerationMode mode) {
  return mode == EnumerationMode::BruteForce ? "brute" : "classes";
}

Json rational_json(const Rational& v) {
  Json j = Json::object();
  j["gwei"] = to_double(v);
  j["exact"] = fraction_string(v);
  return j;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string compact_config(const RunManifest& manifest) {
  return Json::parse(manifest.config_json).dump();
}

void append_manifest_comments(std::ostream& os, const RunManifest& m) {
  os << "# manifest subcommand=" << m.subcommand << " version=" << m.version
     << " seed=" << m.seed
     << " config=" << (m.config_path.empty() ? "defaults" : m.config_path)
     << " format=" << format_name(m.format)
     << " out=" << (m.out_path.empty() ? "stdout" : m.out_path) << "\n";
  os << "# config " << compact_config(m) << "\n";
}

Json manifest_json(const RunManifest& m) {
  Json j = Json::object();
  j["subcommand"] = m.subcommand;
  j["version"] = m.version;
  j["seed"] = m.seed;
  j["config_path"] = m.config_path.empty() ? Json() : Json(m.config_path);
  j["format"] = std::string(format_name(m.format));
  j["out_path"] = m.out_path.empty() ? Json() : Json(m.out_path);
  j["config"] = Json::parse(m.config_json);
  return j;
}

struct Metric {
  const char* name;
  const Rational& value;
};

std::vector<Metric> reward_metrics(const RewardTable& t) {
  return {
      {"base_reward", t.base_reward},
      {"source_reward", t.source_reward},
      {"target_reward", t.target_reward},
      {"head_reward", t.head_reward},
      {"attestation_reward", t.attestation_reward},
      {"sync_reward", t.sync_reward},
      {"attester_penalty", t.attester_penalty},
      {"sync_penalty", t.sync_penalty},
      {"proposer_attestation", t.proposer_attestation},
      {"proposer_sync", t.proposer_sync},
      {"tips_total", t.tips_total},
      {"proposer_total", t.proposer_total},
      {"annual_equipment_cost", t.annual_equipment},
      {"annual_participation_cost", t.annual_participation},
      {"annual_execution_cost", t.annual_execution},
      {"annual_total_cost", t.annual_total},
      {"cost_per_epoch", t.cost_per_epoch},
  };
}

Json case_json(const CaseRow& row) {
  Json j = Json::object();
  j["label"] = row.label;
  j["condition"] = row.condition;
  j["realizable"] = row.realizable;
  j["probability"] = fraction_string(row.probability);
  j["eu_cooperate"] = rational_json(row.eu_cooperate);
  j["eu_deviate"] = rational_json(row.eu_deviate);
  j["gap"] = rational_json(row.gap);
  return j;
}

Json report_json(const EquilibriumReport& rep) {
  Json j = Json::object();
  j["n_agents"] = rep.n_agents;
  j["mode"] = mode_name(rep.mode);
  if (rep.bne_verdict) {
    j["bne_verdict"] = *rep.bne_verdict;
    Json agents = Json::array();
    for (std::size_t i = 0; i < rep.best_responses.size(); ++i) {
      const BestResponse& br = rep.best_responses[i];
      Json a = Json::object();
      a["agent"] = i;
      a["as_proposer"] = response_name(br.as_proposer);
      a["as_attester"] = response_name(br.as_attester);
      a["gap_as_proposer"] = rational_json(br.gap_as_proposer);
      a["gap_as_attester"] = rational_json(br.gap_as_attester);
      a["in_best_response"] = bool(rep.agent_in_best_response[i]);
      agents.push_back(std::move(a));
    }
    j["best_responses"] = std::move(agents);
  }
  if (rep.dominance_verdict) {
    j["dominance_verdict"] = *rep.dominance_verdict;
    j["strict"] = rep.strict;
    if (rep.min_gap) j["min_gap"] = rational_json(*rep.min_gap);
    Json cases = Json::array();
    for (const CaseRow& row : rep.case_breakdown)
      cases.push_back(case_json(row));
    j["cases"] = std::move(cases);
  }
  return j;
}

void append_equilibrium_table(std::ostream& os, const EquilibriumReport& rep) {
  os << "equilibrium analysis: n=" << rep.n_agents
     << " agents, enumeration=" << mode_name(rep.mode) << "\n\n";

  if (rep.bne_verdict) {
    os << "bne_verdict: " << bool_name(*rep.bne_verdict) << "\n";
    os << std::left << std::setw(7) << "  agent" << std::right << std::setw(14)
       << "gap(B)" << std::setw(14) << "gap(A)" << std::setw(13)
       << "response(B)" << std::setw(13) << "response(A)" << std::setw(9)
       << "in_set" << "\n";
    for (std::size_t i = 0; i < rep.best_responses.size(); ++i) {
      const BestResponse& br = rep.best_responses[i];
      os << "  " << std::left << std::setw(5) << i << std::right
         << std::setw(14) << g2(br.gap_as_proposer) << std::setw(14)
         << g2(br.gap_as_attester) << std::setw(13)
         << response_name(br.as_proposer) << std::setw(13)
         << response_name(br.as_attester) << std::setw(9)
         << bool_name(rep.agent_in_best_response[i]) << "\n";
    }
    os << "\n";
  }

  if (rep.dominance_verdict) {
    os << "dominance_verdict: " << bool_name(*rep.dominance_verdict) << " ("
       << (rep.strict ? "strict" : "weak") << ")\n";
    if (rep.min_gap)
      os << "min_gap: " << g2(*rep.min_gap) << " GWei ("
         << fraction_string(*rep.min_gap) << ")\n";
    os << "\n" << std::left << std::setw(8) << "  case" << std::right
       << std::setw(3) << "p" << std::setw(15) << "EU(C)" << std::setw(15)
       << "EU(D)" << std::setw(15) << "gap" << "  condition\n";
    for (const CaseRow& row : rep.case_breakdown) {
      os << "  " << std::left << std::setw(6) << row.label << std::right
         << std::setw(3) << fraction_string(row.probability);
      if (row.realizable)
        os << std::setw(15) << g2(row.eu_cooperate) << std::setw(15)
           << g2(row.eu_deviate) << std::setw(15) << g2(row.gap);
      else
        os << std::setw(15) << "-" << std::setw(15) << "-" << std::setw(15)
           << "-";
      os << "  " << row.condition << "\n";
    }
  }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw UsageError("unknown output format: " + std::string(name));
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return "table";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Json:
      return "json";
  }
  return "table";
}

RunManifest make_manifest(std::string_view subcommand, const AppConfig& config,
                          std::string_view config_path, OutputFormat format,
                          std::string_view out_path, std::uint64_t seed) {
  RunManifest m;
  m.subcommand = std::string(subcommand);
  m.config_path = std::string(config_path);
  m.config_json = config_to_json(config);
  m.format = format;
  m.out_path = std::string(out_path);
  m.seed = seed;
  m.version = std::string(kVersion);
  return m;
}

std::string render_rewards(const RunManifest& manifest,
                           const AppConfig& config, const RewardTable& table) {
  (void)config;
  const auto metrics = reward_metrics(table);
  std::ostringstream os;

  switch (manifest.format) {
    case OutputFormat::Table: {
      os << "reward and cost model (GWei)\n\n";
      for (const Metric& m : metrics)
        os << "  " << std::left << std::setw(28) << m.name << std::right
           << std::setw(22) << g2(m.value) << "\n";
      os << "\n";
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Csv: {
      os << "metric,gwei,exact\n";
      for (const Metric& m : metrics)
        os << m.name << "," << g2(m.value) << ","
           << csv_field(fraction_string(m.value)) << "\n";
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Json: {
      Json j = Json::object();
      j["manifest"] = manifest_json(manifest);
      Json rewards = Json::object();
      for (const Metric& m : metrics) rewards[m.name] = rational_json(m.value);
      j["rewards"] = std::move(rewards);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_equilibrium(const RunManifest& manifest,
                               const AppConfig& config,
                               const EquilibriumReport& report) {
  (void)config;
  std::ostringstream os;
  switch (manifest.format) {
    case OutputFormat::Table: {
      append_equilibrium_table(os, report);
      os << "\n";
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Csv: {
      os << "case,probability,realizable,eu_cooperate_gwei,eu_cooperate_exact,"
            "eu_deviate_gwei,eu_deviate_exact,gap_gwei,gap_exact,condition\n";
      for (const CaseRow& row : report.case_breakdown)
        os << row.label << "," << fraction_string(row.probability) << ","
           << bool_name(row.realizable) << "," << g2(row.eu_cooperate) << ","
           << csv_field(fraction_string(row.eu_cooperate)) << ","
           << g2(row.eu_deviate) << ","
           << csv_field(fraction_string(row.eu_deviate)) << "," << g2(row.gap)
           << "," << csv_field(fraction_string(row.gap)) << ","
           << csv_field(row.condition) << "\n";
      if (report.bne_verdict)
        os << "# bne_verdict " << bool_name(*report.bne_verdict) << "\n";
      if (report.dominance_verdict) {
        os << "# dominance_verdict " << bool_name(*report.dominance_verdict)
           << " " << (report.strict ? "strict" : "weak") << "\n";
        if (report.min_gap)
          os << "# min_gap " << fraction_string(*report.min_gap) << "\n";
      }
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Json: {
      Json j = Json::object();
      j["manifest"] = manifest_json(manifest);
      j["report"] = report_json(report);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_simulation(const RunManifest& manifest,
                              const AppConfig& config,
                              const SimulationResult& result,
                              const std::vector<ExpectedUtility>& analytic,
                              const std::vector<EpochTraceRow>* trace) {
  (void)config;
  std::ostringstream os;
  auto analytic_value = [&](std::size_t i) -> Rational {
    return i < analytic.size() ? analytic[i].value : Rational(0);
  };

  switch (manifest.format) {
    case OutputFormat::Table: {
      os << "slot simulation: " << result.epochs << " epochs, "
         << result.slots << " slots, seed " << result.rng_seed << "\n";
      os << "leak epochs: " << result.leak_epochs << "\n\n";
      os << std::left << std::setw(7) << "  agent" << std::right
         << std::setw(8) << "P/C" << std::setw(8) << "P/D" << std::setw(9)
         << "A/C" << std::setw(9) << "A/D" << std::setw(15) << "mean_net"
         << std::setw(15) << "analytic" << std::setw(12) << "std_err"
         << std::setw(9) << "sigmas" << "\n";
      for (std::size_t i = 0; i < result.agents.size(); ++i) {
        const AgentStats& a = result.agents[i];
        const Rational diff = a.empirical_mean - analytic_value(i);
        const double se = a.std_error;
        const double sigmas =
            se > 0 ? std::abs(to_double(diff)) / se : 0.0;
        os << "  " << std::left << std::setw(5) << i << std::right
           << std::setw(8) << a.proposer_cooperate << std::setw(8)
           << a.proposer_deviate << std::setw(9) << a.attester_cooperate
           << std::setw(9) << a.attester_deviate << std::setw(15)
           << g2(a.empirical_mean) << std::setw(15) << g2(analytic_value(i))
           << std::setw(12) << d2(se) << std::setw(9) << d2(sigmas) << "\n";
      }
      os << "\n";
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Csv: {
      if (trace) {
        os << "epoch,finalized,leak_active";
        for (std::size_t i = 0; i < result.n_agents; ++i)
          os << ",net_agent_" << i << "_gwei,net_agent_" << i << "_exact";
        os << "\n";
        for (const EpochTraceRow& row : *trace) {
          os << row.epoch << "," << (row.finalized ? 1 : 0) << ","
             << (row.leak_active ? 1 : 0);
          for (const Rational& net : row.agent_net)
            os << "," << g2(net) << "," << csv_field(fraction_string(net));
          os << "\n";
        }
      } else {
        os << "agent,slots,proposer_cooperate,proposer_deviate,"
              "attester_cooperate,attester_deviate,total_net_gwei,"
              "total_net_exact,mean_gwei,mean_exact,std_error,analytic_gwei,"
              "analytic_exact\n";
        for (std::size_t i = 0; i < result.agents.size(); ++i) {
          const AgentStats& a = result.agents[i];
          os << i << "," << a.slots() << "," << a.proposer_cooperate << ","
             << a.proposer_deviate << "," << a.attester_cooperate << ","
             << a.attester_deviate << "," << g2(a.total_net) << ","
             << csv_field(fraction_string(a.total_net)) << ","
             << g2(a.empirical_mean) << ","
             << csv_field(fraction_string(a.empirical_mean)) << ","
             << d2(a.std_error) << "," << g2(analytic_value(i)) << ","
             << csv_field(fraction_string(analytic_value(i))) << "\n";
        }
      }
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Json: {
      Json j = Json::object();
      j["manifest"] = manifest_json(manifest);
      Json sim = Json::object();
      sim["n_agents"] = result.n_agents;
      sim["epochs"] = result.epochs;
      sim["slots"] = result.slots;
      sim["seed"] = result.rng_seed;
      sim["leak_epochs"] = result.leak_epochs;
      Json agents = Json::array();
      for (std::size_t i = 0; i < result.agents.size(); ++i) {
        const AgentStats& a = result.agents[i];
        Json row = Json::object();
        row["agent"] = i;
        row["slots"] = a.slots();
        row["proposer_cooperate"] = a.proposer_cooperate;
        row["proposer_deviate"] = a.proposer_deviate;
        row["attester_cooperate"] = a.attester_cooperate;
        row["attester_deviate"] = a.attester_deviate;
        row["total_net"] = rational_json(a.total_net);
        row["empirical_mean"] = rational_json(a.empirical_mean);
        row["std_error"] = a.std_error;
        row["analytic_mean"] = rational_json(analytic_value(i));
        agents.push_back(std::move(row));
      }
      sim["agents"] = std::move(agents);
      j["simulation"] = std::move(sim);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

std::string render_sweep(const RunManifest& manifest, const AppConfig& config,
                         std::string_view axis,
                         const std::vector<SweepPoint>& points) {
  (void)config;
  std::ostringstream os;
  auto first_response = [](const SweepPoint& p) -> const BestResponse* {
    return p.report.best_responses.empty() ? nullptr
                                           : &p.report.best_responses.front();
  };

  switch (manifest.format) {
    case OutputFormat::Table: {
      os << "sensitivity sweep: axis=" << axis << ", " << points.size()
         << " points\n\n";
      os << std::left << std::setw(22) << "  value" << std::right
         << std::setw(15) << "min_gap" << std::setw(8) << "strict"
         << std::setw(11) << "dominance" << std::setw(6) << "bne"
         << std::setw(13) << "response(B)" << std::setw(13) << "response(A)"
         << "\n";
      for (const SweepPoint& p : points) {
        const BestResponse* br = first_response(p);
        os << "  " << std::left << std::setw(20) << fraction_string(p.value)
           << std::right << std::setw(15)
           << (p.report.min_gap ? g2(*p.report.min_gap) : std::string("-"))
           << std::setw(8) << bool_name(p.report.strict) << std::setw(11)
           << bool_name(p.report.dominance_verdict.value_or(false))
           << std::setw(6) << bool_name(p.report.bne_verdict.value_or(false))
           << std::setw(13) << (br ? response_name(br->as_proposer) : "-")
           << std::setw(13) << (br ? response_name(br->as_attester) : "-")
           << "\n";
      }
      os << "\n";
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Csv: {
      os << "value,min_gap_gwei,min_gap_exact,strict,dominance_verdict,"
            "bne_verdict,response_proposer,response_attester\n";
      for (const SweepPoint& p : points) {
        const BestResponse* br = first_response(p);
        os << csv_field(fraction_string(p.value)) << ","
           << (p.report.min_gap ? g2(*p.report.min_gap) : std::string()) << ","
           << (p.report.min_gap
                   ? csv_field(fraction_string(*p.report.min_gap))
                   : std::string())
           << "," << bool_name(p.report.strict) << ","
           << bool_name(p.report.dominance_verdict.value_or(false)) << ","
           << bool_name(p.report.bne_verdict.value_or(false)) << ","
           << (br ? response_name(br->as_proposer) : "") << ","
           << (br ? response_name(br->as_attester) : "") << "\n";
      }
      append_manifest_comments(os, manifest);
      break;
    }
    case OutputFormat::Json: {
      Json j = Json::object();
      j["manifest"] = manifest_json(manifest);
      j["axis"] = std::string(axis);
      Json arr = Json::array();
      for (const SweepPoint& p : points) {
        Json row = Json::object();
        row["value"] = fraction_string(p.value);
        row["report"] = report_json(p.report);
        arr.push_back(std::move(row));
      }
      j["points"] = std::move(arr);
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace eth2game
