#include "eth2game/equilibrium.hpp"

#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace eth2game {

namespace {

// P(exactly k of the listed agents deviate), one convolution step per agent.
std::vector<Rational> deviator_distribution(
    const std::vector<Rational>& p_deviate) {
  std::vector<Rational> dist{Rational(1)};
  for (const Rational& pd : p_deviate) {
    std::vector<Rational> next(dist.size() + 1, Rational(0));
    for (std::size_t k = 0; k < dist.size(); ++k) {
      if (dist[k] == 0) continue;
      next[k] += dist[k] * (Rational(1) - pd);
      next[k + 1] += dist[k] * pd;
    }
    dist = std::move(next);
  }
  return dist;
}

// Net utility lookup with the proposer-reward table reused for (B, C); every
// other branch is gamma-independent.
struct NetTable {
  const ResolvedGame& g;

  Rational gamma_of(std::size_t deviators) const {
    return Rational(static_cast<unsigned>(deviators)) /
           Rational(static_cast<unsigned>(g.n_agents - 1));
  }

  Rational net(Role role, Action action, std::size_t deviators,
               bool leak) const {
    if (role == Role::Proposer && action == Action::Cooperate)
      return g.proposer_reward_by_deviators[deviators] - g.cost_per_epoch;
    return g.utility_at(role, action, gamma_of(deviators), leak).net();
  }

  // Focal action averaged per its cooperation probability in `role`.
  Rational averaged(Role role, const Rational& coop, std::size_t deviators,
                    bool leak) const {
    Rational value = 0;
    if (coop != 0) value += coop * net(role, Action::Cooperate, deviators, leak);
    if (coop != 1)
      value +=
          (Rational(1) - coop) * net(role, Action::Deviate, deviators, leak);
    return value;
  }

  Rational gap(Role role, std::size_t deviators, bool leak) const {
    return net(role, Action::Cooperate, deviators, leak) -
           net(role, Action::Deviate, deviators, leak);
  }
};

std::vector<Rational> attester_deviate_probs(const StrategyProfile& profile,
                                             std::size_t skip_a,
                                             std::size_t skip_b) {
  std::vector<Rational> pd;
  pd.reserve(profile.strategies.size());
  for (std::size_t j = 0; j < profile.strategies.size(); ++j) {
    if (j == skip_a || j == skip_b) continue;
    pd.push_back(Rational(1) - profile.strategies[j].cooperate_as_attester);
  }
  return pd;
}

TypeBestResponse classify_gap(const Rational& gap) {
  if (gap > 0) return TypeBestResponse::CooperateOnly;
  if (gap < 0) return TypeBestResponse::DeviateOnly;
  return TypeBestResponse::Indifferent;
}

bool strategy_allowed(const Rational& coop, TypeBestResponse verdict) {
  switch (verdict) {
    case TypeBestResponse::CooperateOnly:
      return coop == 1;
    case TypeBestResponse::DeviateOnly:
      return coop == 0;
    case TypeBestResponse::Indifferent:
      return true;
  }
  return false;
}

BestResponse best_response_resolved(const ResolvedGame& g, std::size_t agent,
                                    const StrategyProfile& profile) {
  const std::size_t n = g.n_agents;
  const bool leak = g.analytic_leak();
  const NetTable table{g};
  BestResponse br;

  {
    // Focal proposes: the others all attest.
    const auto dist =
        deviator_distribution(attester_deviate_probs(profile, agent, agent));
    Rational gap = 0;
    for (std::size_t k = 0; k < dist.size(); ++k)
      if (dist[k] != 0)
        gap += dist[k] * table.gap(Role::Proposer, k, leak);
    br.gap_as_proposer = gap;
  }

  {
    // Focal attests: the proposer is uniform among the other agents.
    const Rational each(1, static_cast<unsigned>(n - 1));
    Rational gap = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == agent) continue;
      const auto dist =
          deviator_distribution(attester_deviate_probs(profile, agent, q));
      const Rational& coop_q = profile.strategies[q].cooperate_as_proposer;
      for (int qd = 0; qd < 2; ++qd) {
        const Rational p_q = qd ? Rational(1) - coop_q : coop_q;
        if (p_q == 0) continue;
        for (std::size_t k2 = 0; k2 < dist.size(); ++k2)
          if (dist[k2] != 0)
            gap += each * p_q * dist[k2] *
                   table.gap(Role::Attester, k2 + qd, leak);
      }
    }
    br.gap_as_attester = gap;
  }

  br.as_proposer = classify_gap(br.gap_as_proposer);
  br.as_attester = classify_gap(br.gap_as_attester);
  return br;
}

// One (focal type, opposing situation, leak branch) state of the dominance
// enumeration. `deviators` counts deviating agents among the others,
// proposer included.
struct DominanceAtom {
  Role role = Role::Proposer;
  bool x_bc = false;
  bool x_bd = false;
  std::size_t deviators = 0;
  bool leak = false;
};

template <typename F>
void admissible_leaks(const ResolvedGame& g, std::size_t deviators, F&& f) {
  switch (g.leak) {
    case LeakMode::ForcedOn:
      f(true);
      return;
    case LeakMode::ForcedOff:
      f(false);
      return;
    case LeakMode::Derived:
      f(false);
      if (Rational(static_cast<unsigned>(deviators)) /
              Rational(static_cast<unsigned>(g.n_agents - 1)) >=
          g.gamma_threshold)
        f(true);
      return;
  }
}

// Equivalence classes: utilities see the opposing profile only through the
// proposer's action and the deviator count, so O(n) atoms cover all
// 2^(n-1) opposing pure profiles exactly.
template <typename F>
void for_each_class_atom(const ResolvedGame& g, F&& f) {
  const std::size_t m = g.n_agents - 1;
  for (std::size_t k = 0; k <= m; ++k)
    admissible_leaks(g, k, [&](bool leak) {
      f(DominanceAtom{Role::Proposer, false, false, k, leak});
    });
  for (int qd = 0; qd < 2; ++qd)
    for (std::size_t k2 = 0; k2 + 1 <= m; ++k2) {
      const std::size_t k = k2 + static_cast<std::size_t>(qd);
      admissible_leaks(g, k, [&](bool leak) {
        f(DominanceAtom{Role::Attester, qd == 0, qd == 1, k, leak});
      });
    }
}

// Literal bit-mask scan over opposing pure profiles, bucketed by the same
// symmetry before evaluation (D-style cross-check of the class construction).
template <typename F>
void for_each_brute_atom(const ResolvedGame& g, F&& f) {
  const std::size_t m = g.n_agents - 1;
  if (m >= 20)
    throw UsageError("brute-force enumeration is limited to 20 agents");

  std::vector<char> proposer_bucket(m + 1, 0);
  std::vector<std::array<char, 2>> attester_bucket(
      m + 1, std::array<char, 2>{0, 0});
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    const std::size_t k =
        m - static_cast<std::size_t>(std::popcount(mask));  // set bit = C
    proposer_bucket[k] = 1;
    for (std::size_t q = 0; q < m; ++q)
      attester_bucket[k][((mask >> q) & 1u) ? 0 : 1] = 1;
  }

  for (std::size_t k = 0; k <= m; ++k) {
    if (proposer_bucket[k])
      admissible_leaks(g, k, [&](bool leak) {
        f(DominanceAtom{Role::Proposer, false, false, k, leak});
      });
    for (int qd = 0; qd < 2; ++qd)
      if (attester_bucket[k][qd])
        admissible_leaks(g, k, [&](bool leak) {
          f(DominanceAtom{Role::Attester, qd == 0, qd == 1, k, leak});
        });
  }
}

ScenarioEvent make_event(std::optional<Role> role, std::optional<bool> x_bc,
                         std::optional<bool> x_bd, GammaCondition gamma,
                         LeakHypothesis leak) {
  ScenarioEvent e;
  e.focal_role = role;
  e.x_bc = x_bc;
  e.x_bd = x_bd;
  e.gamma = gamma;
  e.leak = leak;
  return e;
}

bool atom_matches_event(const DominanceAtom& atom, const ScenarioEvent& event,
                        const ResolvedGame& g, const NetTable& table) {
  if (event.focal_role && *event.focal_role != atom.role) return false;
  if (event.x_bc && *event.x_bc != atom.x_bc) return false;
  if (event.x_bd && *event.x_bd != atom.x_bd) return false;
  if (!event.gamma.matches(table.gamma_of(atom.deviators), g.gamma_threshold))
    return false;
  if (event.leak == LeakHypothesis::Off && atom.leak) return false;
  if (event.leak == LeakHypothesis::On && !atom.leak) return false;
  return true;
}

// The proof-case table: each row projects the dominance atoms onto one
// case's event and shows the worst (minimum-gap) atom inside it. Rows no
// reachable atom satisfies are marked unrealizable and carry zeros. The
// authoritative verdict always comes from the full atom scan, not the rows.
std::vector<CaseRow> build_case_rows(const ResolvedGame& g,
                                     const GameConfig& cfg,
                                     EnumerationMode mode) {
  const NetTable table{g};
  struct AtomValue {
    DominanceAtom atom;
    Rational eu_c, eu_d;
  };
  std::vector<AtomValue> atoms;
  auto record = [&](const DominanceAtom& a) {
    atoms.push_back({a, table.net(a.role, Action::Cooperate, a.deviators,
                                  a.leak),
                     table.net(a.role, Action::Deviate, a.deviators, a.leak)});
  };
  if (mode == EnumerationMode::BruteForce)
    for_each_brute_atom(g, record);
  else
    for_each_class_atom(g, record);

  std::vector<CaseRow> rows;
  auto add_row = [&](std::string label, const ScenarioEvent& event) {
    CaseRow row;
    row.label = std::move(label);
    row.condition = event.describe();
    for (const AtomValue& av : atoms) {
      if (!atom_matches_event(av.atom, event, g, table)) continue;
      const Rational gap = av.eu_c - av.eu_d;
      if (!row.realizable || gap < row.gap) {
        row.eu_cooperate = av.eu_c;
        row.eu_deviate = av.eu_d;
        row.gap = gap;
      }
      row.realizable = true;
    }
    row.probability = row.realizable ? 1 : 0;
    if (!row.realizable) {
      row.eu_cooperate = 0;
      row.eu_deviate = 0;
      row.gap = 0;
    }
    rows.push_back(std::move(row));
  };

  using GC = GammaCondition;
  const auto B = Role::Proposer;
  const auto A = Role::Attester;
  const auto off = LeakHypothesis::Off;
  const auto on = LeakHypothesis::On;
  add_row("1.1", make_event(B, {}, {}, GC::equals(0), off));
  add_row("1.2.1", make_event(A, true, {}, GC::equals(0), off));
  add_row("1.2.2", make_event(A, false, false, GC::any(), off));
  add_row("2.1", make_event(B, {}, {}, GC::below_threshold(), off));
  add_row("2.2.1", make_event(B, {}, {}, GC::at_least_threshold(), on));
  add_row("2.2.2", make_event(B, {}, {}, GC::at_least_threshold(), off));
  add_row("3.1.1", make_event(A, true, {}, GC::at_least_threshold(), on));
  add_row("3.1.2", make_event(A, true, {}, GC::below_threshold(), off));
  add_row("3.2.1", make_event(A, {}, true, GC::at_least_threshold(), on));
  add_row("3.2.2", make_event(A, {}, true, GC::below_threshold(), off));

  // Mixed-strategy endpoints for the focal agent against uniform half/half
  // opposing strategies; linearity makes the endpoints span the whole range.
  {
    CaseRow row;
    row.label = "4";
    row.condition = "mixed focal strategy endpoints vs uniform 1/2 others";
    const StrategyProfile half = StrategyProfile::uniform(
        g.n_agents, Strategy{Rational(1, 2), Rational(1, 2)});
    row.eu_cooperate = mixed_strategy_eu(0, 1, half, cfg).value;
    row.eu_deviate = mixed_strategy_eu(0, 0, half, cfg).value;
    row.gap = row.eu_cooperate - row.eu_deviate;
    row.realizable = true;
    row.probability = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

void apply_axis(GameConfig& cfg, std::string_view axis, const Rational& v) {
  if (axis == "cost_per_epoch") {
    cfg.cost_per_epoch = v;
    return;
  }
  if (axis == "gamma_threshold") {
    cfg.gamma_threshold = v;
    return;
  }
  if (axis == "inactivity_penalty") {
    cfg.inactivity_penalty = v;
    return;
  }
  const BigInt num = numerator(v);
  if (denominator(v) != 1 || num < 0 ||
      num > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::domain_error(std::string(axis) +
                            ": grid values must be nonnegative integers");
  const auto whole = num.convert_to<std::uint64_t>();
  if (axis == "n_validators") {
    cfg.incentives.network.n_validators = whole;
    // Derived quantities follow the new validator count.
    cfg.incentives.network.total_staked_gwei.reset();
    cfg.incentives.network.n_attesters.reset();
    return;
  }
  if (axis == "tips-total") {
    cfg.incentives.tips.tips = {whole};
    return;
  }
  throw UsageError("unknown sweep axis: " + std::string(axis));
}

bool known_axis(std::string_view axis) {
  for (std::string_view name : kSweepAxes)
    if (name == axis) return true;
  return false;
}

}  // namespace

StrategyProfile StrategyProfile::all_cooperate(std::size_t n_agents) {
  return uniform(n_agents, Strategy::pure_cooperate());
}

StrategyProfile StrategyProfile::all_deviate(std::size_t n_agents) {
  return uniform(n_agents, Strategy::pure_deviate());
}

StrategyProfile StrategyProfile::uniform(std::size_t n_agents, Strategy s) {
  StrategyProfile p;
  p.strategies.assign(n_agents, s);
  return p;
}

void StrategyProfile::validate(std::size_t n_agents) const {
  if (strategies.size() != n_agents)
    throw std::invalid_argument("strategy profile size mismatch");
  for (const Strategy& s : strategies) s.validate();
}

GammaCondition GammaCondition::equals(Rational g) {
  GammaCondition c;
  c.kind = Kind::Equals;
  c.value = std::move(g);
  return c;
}

GammaCondition GammaCondition::below_threshold() {
  GammaCondition c;
  c.kind = Kind::BelowThreshold;
  return c;
}

GammaCondition GammaCondition::at_least_threshold() {
  GammaCondition c;
  c.kind = Kind::AtLeastThreshold;
  return c;
}

bool GammaCondition::matches(const Rational& gamma,
                             const Rational& threshold) const {
  switch (kind) {
    case Kind::Any:
      return true;
    case Kind::Equals:
      return gamma == value;
    case Kind::BelowThreshold:
      return gamma < threshold;
    case Kind::AtLeastThreshold:
      return gamma >= threshold;
  }
  return false;
}

ScenarioEvent::ScenarioEvent(const Scenario& scenario) {
  x_bc = scenario.x_bc;
  x_bd = scenario.x_bd;
  // In any reachable state both flags are zero exactly when the focal agent
  // itself proposes.
  focal_role = (scenario.x_bc || scenario.x_bd) ? Role::Attester
                                                : Role::Proposer;
  gamma = GammaCondition::equals(scenario.gamma);
  leak = scenario.leak_triggered ? LeakHypothesis::On : LeakHypothesis::Off;
}

std::string ScenarioEvent::describe() const {
  std::string out;
  auto append = [&](std::string_view part) {
    if (!out.empty()) out += ", ";
    out += part;
  };
  if (focal_role)
    append(*focal_role == Role::Proposer ? "focal proposes" : "focal attests");
  if (x_bc && x_bd && !*x_bc && !*x_bd) {
    append("no proposer among others");
  } else {
    if (x_bc)
      append(*x_bc ? "others' proposer cooperates"
                   : "others' proposer does not cooperate");
    if (x_bd)
      append(*x_bd ? "others' proposer deviates"
                   : "others' proposer does not deviate");
  }
  switch (gamma.kind) {
    case GammaCondition::Kind::Any:
      break;
    case GammaCondition::Kind::Equals:
      append("gamma = " + fraction_string(gamma.value));
      break;
    case GammaCondition::Kind::BelowThreshold:
      append("gamma < d");
      break;
    case GammaCondition::Kind::AtLeastThreshold:
      append("gamma >= d");
      break;
  }
  switch (leak) {
    case LeakHypothesis::Unspecified:
      break;
    case LeakHypothesis::Off:
      append("leak off");
      break;
    case LeakHypothesis::On:
      append("leak on");
      break;
  }
  if (out.empty()) out = "any state";
  return out;
}

bool BestResponse::contains(const Strategy& s) const {
  return strategy_allowed(s.cooperate_as_proposer, as_proposer) &&
         strategy_allowed(s.cooperate_as_attester, as_attester);
}

ExpectedUtility expected_utility(std::size_t agent,
                                 const StrategyProfile& profile,
                                 const GameConfig& cfg) {
  const ResolvedGame g = resolve_game(cfg);
  profile.validate(g.n_agents);
  if (agent >= g.n_agents)
    throw std::invalid_argument("agent index out of range");
  const bool leak = g.analytic_leak();
  const NetTable table{g};
  const std::size_t n = g.n_agents;

  Rational eu = 0;
  if (g.prior_proposer != 0) {
    const auto dist =
        deviator_distribution(attester_deviate_probs(profile, agent, agent));
    const Rational& coop = profile.strategies[agent].cooperate_as_proposer;
    Rational sum = 0;
    for (std::size_t k = 0; k < dist.size(); ++k)
      if (dist[k] != 0)
        sum += dist[k] * table.averaged(Role::Proposer, coop, k, leak);
    eu += g.prior_proposer * sum;
  }
  if (g.prior_attester != 0) {
    const Rational prior_other =
        g.prior_attester / Rational(static_cast<unsigned>(n - 1));
    const Rational& coop = profile.strategies[agent].cooperate_as_attester;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == agent) continue;
      const auto dist =
          deviator_distribution(attester_deviate_probs(profile, agent, q));
      const Rational& coop_q = profile.strategies[q].cooperate_as_proposer;
      for (int qd = 0; qd < 2; ++qd) {
        const Rational p_q = qd ? Rational(1) - coop_q : coop_q;
        if (p_q == 0) continue;
        for (std::size_t k2 = 0; k2 < dist.size(); ++k2)
          if (dist[k2] != 0)
            eu += prior_other * p_q * dist[k2] *
                  table.averaged(Role::Attester, coop, k2 + qd, leak);
      }
    }
  }
  return {eu, 1, std::nullopt};
}

ExpectedUtility conditional_expected_utility(std::size_t agent,
                                             const StrategyProfile& profile,
                                             const ScenarioEvent& event,
                                             const GameConfig& cfg) {
  const ResolvedGame g = resolve_game(cfg);
  profile.validate(g.n_agents);
  if (agent >= g.n_agents)
    throw std::invalid_argument("agent index out of range");
  const NetTable table{g};
  const std::size_t n = g.n_agents;

  // The leak hypothesis selects utility equations; it carries no probability
  // of its own within a single slot.
  bool leak = g.analytic_leak();
  if (event.leak == LeakHypothesis::Off) leak = false;
  if (event.leak == LeakHypothesis::On) leak = true;

  Rational p_event = 0;
  Rational value_sum = 0;
  auto take = [&](const Rational& p, Role role, bool x_bc, bool x_bd,
                  std::size_t deviators) {
    DominanceAtom atom{role, x_bc, x_bd, deviators, leak};
    // Leak already applied above; match on the observable fields only.
    ScenarioEvent fields = event;
    fields.leak = LeakHypothesis::Unspecified;
    if (!atom_matches_event(atom, fields, g, table)) return;
    p_event += p;
    const Rational& coop = role == Role::Proposer
                               ? profile.strategies[agent].cooperate_as_proposer
                               : profile.strategies[agent].cooperate_as_attester;
    value_sum += p * table.averaged(role, coop, deviators, leak);
  };

  if (g.prior_proposer != 0) {
    const auto dist =
        deviator_distribution(attester_deviate_probs(profile, agent, agent));
    for (std::size_t k = 0; k < dist.size(); ++k)
      if (dist[k] != 0)
        take(g.prior_proposer * dist[k], Role::Proposer, false, false, k);
  }
  if (g.prior_attester != 0) {
    const Rational prior_other =
        g.prior_attester / Rational(static_cast<unsigned>(n - 1));
    for (std::size_t q = 0; q < n; ++q) {
      if (q == agent) continue;
      const auto dist =
          deviator_distribution(attester_deviate_probs(profile, agent, q));
      const Rational& coop_q = profile.strategies[q].cooperate_as_proposer;
      for (int qd = 0; qd < 2; ++qd) {
        const Rational p_q = qd ? Rational(1) - coop_q : coop_q;
        if (p_q == 0) continue;
        for (std::size_t k2 = 0; k2 < dist.size(); ++k2)
          if (dist[k2] != 0)
            take(prior_other * p_q * dist[k2], Role::Attester, qd == 0,
                 qd == 1, k2 + qd);
      }
    }
  }

  if (p_event == 0) throw std::domain_error("conditioning on null event");
  ExpectedUtility out;
  out.value = value_sum / p_event;
  out.event_probability = p_event;
  out.conditioning = event;
  return out;
}

ExpectedUtility mixed_strategy_eu(std::size_t agent,
                                  const Rational& p_cooperate,
                                  const StrategyProfile& profile,
                                  const GameConfig& cfg) {
  if (p_cooperate < 0 || p_cooperate > 1)
    throw std::domain_error("cooperation probability must lie in [0, 1]");
  if (agent >= profile.strategies.size())
    throw std::invalid_argument("agent index out of range");
  StrategyProfile substituted = profile;
  substituted.strategies[agent] = Strategy{p_cooperate, p_cooperate};
  return expected_utility(agent, substituted, cfg);
}

BestResponse best_response(std::size_t agent, const StrategyProfile& profile,
                           const GameConfig& cfg) {
  const ResolvedGame g = resolve_game(cfg);
  profile.validate(g.n_agents);
  if (agent >= g.n_agents)
    throw std::invalid_argument("agent index out of range");
  return best_response_resolved(g, agent, profile);
}

EquilibriumReport verify_bne(const StrategyProfile& profile,
                             const GameConfig& cfg) {
  const ResolvedGame g = resolve_game(cfg);
  profile.validate(g.n_agents);

  EquilibriumReport report;
  report.n_agents = g.n_agents;
  bool all_in = true;
  for (std::size_t i = 0; i < g.n_agents; ++i) {
    const BestResponse br = best_response_resolved(g, i, profile);
    const bool in = br.contains(profile.strategies[i]);
    report.best_responses.push_back(br);
    report.agent_in_best_response.push_back(in);
    all_in = all_in && in;
  }
  report.bne_verdict = all_in;
  return report;
}

EquilibriumReport verify_ex_ante_dominance(const GameConfig& cfg,
                                           EnumerationMode mode) {
  const ResolvedGame g = resolve_game(cfg);
  const NetTable table{g};

  EquilibriumReport report;
  report.n_agents = g.n_agents;
  report.mode = mode;

  std::optional<Rational> min_gap;
  auto consider = [&](const DominanceAtom& atom) {
    const Rational gap = table.gap(atom.role, atom.deviators, atom.leak);
    if (!min_gap || gap < *min_gap) min_gap = gap;
  };
  if (mode == EnumerationMode::BruteForce)
    for_each_brute_atom(g, consider);
  else
    for_each_class_atom(g, consider);

  report.min_gap = min_gap;
  report.dominance_verdict = min_gap && *min_gap >= 0;
  report.strict = min_gap && *min_gap > 0;
  report.case_breakdown = build_case_rows(g, cfg, mode);
  return report;
}

std::vector<SweepPoint> sensitivity_sweep(const GameConfig& cfg,
                                          std::string_view axis,
                                          std::span<const Rational> grid) {
  if (!known_axis(axis))
    throw UsageError("unknown sweep axis: " + std::string(axis));

  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (const Rational& value : grid) {
    GameConfig point_cfg = cfg;
    apply_axis(point_cfg, axis, value);

    EquilibriumReport report =
        verify_ex_ante_dominance(point_cfg, EnumerationMode::Classes);
    EquilibriumReport bne = verify_bne(
        StrategyProfile::all_cooperate(point_cfg.n_agents), point_cfg);
    report.bne_verdict = bne.bne_verdict;
    report.best_responses = std::move(bne.best_responses);
    report.agent_in_best_response = std::move(bne.agent_in_best_response);
    points.push_back(SweepPoint{value, std::move(report)});
  }
  return points;
}

}  // namespace eth2game
