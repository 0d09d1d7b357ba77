#pragma once

#include "momdp/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace momdp {

using StateIndex = std::size_t;

struct TransitionEntry {
    StateIndex target = 0;
    double probability = 0.0;
};

struct MdpAction {
    std::string label;
    std::vector<TransitionEntry> transitions; // sorted by target, unique targets
};

/// Finite MDP with named state-action reward structures and proposition labels.
///
/// Canonical form: transition lists sorted by target, label state lists sorted
/// and unique. Immutable after construction; safe to share across readers.
struct Mdp {
    std::size_t num_states = 0;
    StateIndex initial_state = 0;
    std::vector<std::vector<MdpAction>> actions;                     // [state][action]
    std::map<std::string, std::vector<StateIndex>> labels;           // proposition -> states
    std::map<std::string, std::vector<std::vector<double>>> rewards; // name -> [state][action]
};

/// Lists every model invariant violation with state/action coordinates.
/// An empty report means the model is valid. Never throws.
std::vector<std::string> validate_mdp(const Mdp& model);

enum class ObjectiveKind { ProbReachMax, ProbReachMin, RewardMax, RewardMin };

std::string objective_kind_name(ObjectiveKind kind);
std::optional<ObjectiveKind> objective_kind_from_name(const std::string& name);

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::RewardMax;
    std::string target;                      // proposition or reward structure name
    std::optional<std::uint32_t> step_bound; // >= 1 when present
};

/// Deterministic strategy: memoryless, or one action table per remaining step.
struct Strategy {
    std::vector<std::size_t> choice;                   // memoryless: [state] -> action
    std::vector<std::vector<std::size_t>> step_choice; // [remaining-1][state] -> action
    bool memoryless() const { return step_choice.empty(); }
};

struct NormalizedObjective {
    std::string reward; // reward structure name on the transformed model
    double sign = 1.0;  // +1 for maximized, -1 for minimized kinds
    std::optional<std::uint32_t> horizon;
    double offset = 0.0; // user value = sign * normalized value + offset
    std::string axis_name;
};

/// Objectives reduced to maximizing expected-total-reward form on one shared
/// transformed model. Reach targets are absorbing in the transformed model and
/// reach objectives pay the probability mass entering their target set.
struct NormalizedObjectives {
    Mdp model;
    std::vector<NormalizedObjective> objectives;

    std::size_t k() const { return objectives.size(); }
    Point to_user(const Point& normalized) const;
    Point to_normalized(const Point& user) const;
};

/// Reduces every supported objective to maximizing total reward. Throws
/// ResolutionError when a target name does not resolve, Error when the model
/// itself is invalid.
NormalizedObjectives normalize_objectives(const Mdp& model,
                                          const std::vector<ObjectiveSpec>& specs);

} // namespace momdp
