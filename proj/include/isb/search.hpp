#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isb/constructions.hpp"
#include "isb/semibrace.hpp"
#include "isb/solutions.hpp"

namespace isb {

enum class EmitMode { All, SolutionsOnly, CounterexamplesOnly };

std::string_view to_string(EmitMode m) noexcept;
std::optional<EmitMode> parse_emit_mode(std::string_view name) noexcept;

inline constexpr std::size_t kAdditionSearchCap = 4;
inline constexpr std::size_t kSemigroupSearchCap = 4;
inline constexpr std::size_t kCocycleSearchCap = 3;

struct SearchConfig {
  // Defaults to the hard cap of the search kind; larger values are rejected.
  std::optional<std::size_t> max_order;
  std::optional<std::chrono::milliseconds> timeout;
  EmitMode emit = EmitMode::All;
  bool canonical_only = false;
  // Row-major partial table; the search visits only tables that are
  // lexicographically >= this prefix.
  std::vector<Element> start_prefix;
};

struct SearchOutcome {
  bool complete = true;
  std::size_t emitted = 0;
  std::size_t nodes = 0;
  // On timeout, the prefix that resumes the search without repeats.
  std::vector<Element> resume_prefix;
};

struct AdditionResult {
  InverseSemiBrace structure;
  SolutionReport report;
};

// Depth-first fill of the addition table with associativity and left-axiom
// pruning. Results arrive in lexicographic table order. canonical_only keeps
// only additions that are lex-minimal under Aut(M).
SearchOutcome enumerate_additions(InverseSemigroup const& m, SearchConfig const& cfg,
                                  std::function<void(AdditionResult const&)> const& sink);

std::vector<AdditionResult> collect_additions(InverseSemigroup const& m,
                                              SearchConfig const& cfg = {});

// Lex-minimal relabeling over all carrier permutations.
MagmaTable canonical_form(MagmaTable const& t);

// Inverse semigroups of order n up to isomorphism, as canonical tables sorted
// lexicographically. Throws OrderExceedsCap or Timeout.
std::vector<InverseSemigroup> enumerate_inverse_semigroups(
    std::size_t n, std::optional<std::chrono::milliseconds> timeout = std::nullopt);

struct CocycleSearchResult {
  std::vector<Cocycle> cocycles;
  SearchOutcome outcome;
};

CocycleSearchResult search_cocycles(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                    ActionFamily const& delta, SearchConfig const& cfg = {});

struct SurveyRow {
  std::string id;
  bool left_semibrace = false;
  bool skew_brace = false;
  bool two_sided = false;
  bool clifford = false;
  bool solution = false;
  bool idempotent = false;
  bool cubic = false;
  bool involutive = false;
  std::size_t index = 0;
  std::size_t period = 1;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  bool bijective = false;
  std::string degeneracy_class;
};

SurveyRow make_survey_row(std::string id, InverseSemiBrace const& s, SolutionReport const& report);

struct SurveyKey {
  bool solution;
  bool idempotent;
  bool cubic;
  std::string degeneracy_class;
  auto operator<=>(SurveyKey const&) const = default;
};

struct Survey {
  std::vector<SurveyRow> rows;
  std::map<SurveyKey, std::size_t> counts;
};

Survey survey(std::vector<SurveyRow> rows);

}  // namespace isb
