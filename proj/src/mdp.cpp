#include "momdp/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace momdp {

namespace {

constexpr double kProbSumTol = 1e-9;

std::string state_action(StateIndex s, std::size_t a) {
    return "state " + std::to_string(s) + " action " + std::to_string(a);
}

} // namespace

std::vector<std::string> validate_mdp(const Mdp& model) {
    std::vector<std::string> report;
    auto add = [&report](const std::string& msg) { report.push_back(msg); };

    if (model.num_states == 0) add("model has no states");
    if (model.actions.size() != model.num_states)
        add("actions list covers " + std::to_string(model.actions.size()) + " states, expected " +
            std::to_string(model.num_states));
    if (model.initial_state >= model.num_states)
        add("initial state " + std::to_string(model.initial_state) + " out of range");

    const std::size_t covered = std::min(model.actions.size(), model.num_states);
    for (StateIndex s = 0; s < covered; ++s) {
        const auto& acts = model.actions[s];
        if (acts.empty()) {
            add("state " + std::to_string(s) + " has no actions");
            continue;
        }
        for (std::size_t a = 0; a < acts.size(); ++a) {
            const auto& tr = acts[a].transitions;
            if (tr.empty()) {
                add(state_action(s, a) + ": empty distribution");
                continue;
            }
            double sum = 0.0;
            bool entries_ok = true;
            for (const auto& e : tr) {
                if (e.target >= model.num_states) {
                    add(state_action(s, a) + ": target " + std::to_string(e.target) + " out of range");
                    entries_ok = false;
                }
                if (!(e.probability > 0.0) || e.probability > 1.0 + kProbSumTol ||
                    !std::isfinite(e.probability)) {
                    add(state_action(s, a) + ": probability " + format_double(e.probability) +
                        " outside (0,1]");
                    entries_ok = false;
                }
                sum += e.probability;
            }
            for (std::size_t i = 1; i < tr.size(); ++i) {
                if (tr[i - 1].target >= tr[i].target) {
                    add(state_action(s, a) + ": transitions not sorted by unique target");
                    entries_ok = false;
                    break;
                }
            }
            if (entries_ok && std::abs(sum - 1.0) > kProbSumTol)
                add(state_action(s, a) + ": probabilities sum to " + format_double(sum) +
                    ", expected 1 within 1e-9");
        }
    }

    for (const auto& [name, states] : model.labels) {
        for (StateIndex s : states)
            if (s >= model.num_states)
                add("label \"" + name + "\": state " + std::to_string(s) + " out of range");
        if (!std::is_sorted(states.begin(), states.end()) ||
            std::adjacent_find(states.begin(), states.end()) != states.end())
            add("label \"" + name + "\": state list not sorted and unique");
    }

    for (const auto& [name, values] : model.rewards) {
        if (values.size() != model.num_states) {
            add("reward \"" + name + "\": covers " + std::to_string(values.size()) +
                " states, expected " + std::to_string(model.num_states));
            continue;
        }
        for (StateIndex s = 0; s < covered; ++s) {
            if (values[s].size() != model.actions[s].size()) {
                add("reward \"" + name + "\" state " + std::to_string(s) + ": " +
                    std::to_string(values[s].size()) + " entries for " +
                    std::to_string(model.actions[s].size()) + " actions");
                continue;
            }
            for (std::size_t a = 0; a < values[s].size(); ++a) {
                double r = values[s][a];
                if (!std::isfinite(r) || r < 0.0)
                    add("reward \"" + name + "\" at " + state_action(s, a) + ": value " +
                        format_double(r) + " not finite and nonnegative");
            }
        }
    }

    return report;
}

std::string objective_kind_name(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::ProbReachMax: return "prob-reach-max";
        case ObjectiveKind::ProbReachMin: return "prob-reach-min";
        case ObjectiveKind::RewardMax: return "reward-max";
        case ObjectiveKind::RewardMin: return "reward-min";
    }
    return "?";
}

std::optional<ObjectiveKind> objective_kind_from_name(const std::string& name) {
    if (name == "prob-reach-max") return ObjectiveKind::ProbReachMax;
    if (name == "prob-reach-min") return ObjectiveKind::ProbReachMin;
    if (name == "reward-max") return ObjectiveKind::RewardMax;
    if (name == "reward-min") return ObjectiveKind::RewardMin;
    return std::nullopt;
}

Point NormalizedObjectives::to_user(const Point& normalized) const {
    Point out(normalized.size());
    for (std::size_t i = 0; i < normalized.size(); ++i)
        out[i] = objectives[i].sign * normalized[i] + objectives[i].offset;
    return out;
}

Point NormalizedObjectives::to_normalized(const Point& user) const {
    Point out(user.size());
    for (std::size_t i = 0; i < user.size(); ++i)
        out[i] = objectives[i].sign * (user[i] - objectives[i].offset);
    return out;
}

namespace {

bool is_prob_kind(ObjectiveKind kind) {
    return kind == ObjectiveKind::ProbReachMax || kind == ObjectiveKind::ProbReachMin;
}

std::string axis_name_for(const ObjectiveSpec& spec) {
    std::string prefix;
    switch (spec.kind) {
        case ObjectiveKind::ProbReachMax: prefix = "Pmax"; break;
        case ObjectiveKind::ProbReachMin: prefix = "Pmin"; break;
        case ObjectiveKind::RewardMax: prefix = "Rmax"; break;
        case ObjectiveKind::RewardMin: prefix = "Rmin"; break;
    }
    std::string name = prefix + "(" + spec.target;
    if (spec.step_bound) name += ",<=" + std::to_string(*spec.step_bound);
    return name + ")";
}

} // namespace

NormalizedObjectives normalize_objectives(const Mdp& model,
                                          const std::vector<ObjectiveSpec>& specs) {
    if (specs.empty()) throw ResolutionError("at least one objective is required");
    {
        auto issues = validate_mdp(model);
        if (!issues.empty()) throw ValidationError(std::move(issues));
    }

    // Resolve targets up front.
    for (std::size_t j = 0; j < specs.size(); ++j) {
        const auto& spec = specs[j];
        if (spec.step_bound && *spec.step_bound == 0)
            throw ResolutionError("objective " + std::to_string(j) + ": step bound must be >= 1");
        if (is_prob_kind(spec.kind)) {
            if (!model.labels.count(spec.target))
                throw ResolutionError("objective " + std::to_string(j) + ": unknown proposition \"" +
                                      spec.target + "\"");
        } else {
            if (!model.rewards.count(spec.target))
                throw ResolutionError("objective " + std::to_string(j) +
                                      ": unknown reward structure \"" + spec.target + "\"");
        }
    }

    // Union of all reach targets becomes absorbing.
    std::vector<bool> absorbing(model.num_states, false);
    bool any_absorbing = false;
    for (const auto& spec : specs) {
        if (!is_prob_kind(spec.kind)) continue;
        for (StateIndex s : model.labels.at(spec.target)) {
            absorbing[s] = true;
            any_absorbing = true;
        }
    }

    NormalizedObjectives norm;
    norm.model = model;
    if (any_absorbing) {
        for (StateIndex s = 0; s < model.num_states; ++s) {
            if (!absorbing[s]) continue;
            norm.model.actions[s] = {MdpAction{"loop", {{s, 1.0}}}};
            for (auto& [name, values] : norm.model.rewards) {
                (void)name;
                values[s] = {0.0};
            }
        }
    }

    for (std::size_t j = 0; j < specs.size(); ++j) {
        const auto& spec = specs[j];
        NormalizedObjective obj;
        obj.sign = (spec.kind == ObjectiveKind::ProbReachMax || spec.kind == ObjectiveKind::RewardMax)
                       ? 1.0
                       : -1.0;
        obj.horizon = spec.step_bound;
        obj.axis_name = axis_name_for(spec);

        if (is_prob_kind(spec.kind)) {
            const auto& target_states = model.labels.at(spec.target);
            std::set<StateIndex> targets(target_states.begin(), target_states.end());

            // Entry reward: the probability mass each action sends into the
            // target set. Target states are absorbing with zero reward.
            std::string name = "reach#" + std::to_string(j) + ":" + spec.target;
            while (norm.model.rewards.count(name)) name += "_";
            auto& values = norm.model.rewards[name];
            values.resize(norm.model.num_states);
            for (StateIndex s = 0; s < norm.model.num_states; ++s) {
                values[s].assign(norm.model.actions[s].size(), 0.0);
                if (absorbing[s]) continue;
                for (std::size_t a = 0; a < norm.model.actions[s].size(); ++a) {
                    double mass = 0.0;
                    for (const auto& e : norm.model.actions[s][a].transitions)
                        if (targets.count(e.target)) mass += e.probability;
                    values[s][a] = mass;
                }
            }
            obj.reward = name;
            obj.offset = targets.count(model.initial_state) ? 1.0 : 0.0;
        } else {
            obj.reward = spec.target;
            obj.offset = 0.0;
        }
        norm.objectives.push_back(std::move(obj));
    }

    return norm;
}

} // namespace momdp
