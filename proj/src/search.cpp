#include "isb/search.hpp"

#include <algorithm>
#include <set>

#include "isb/classify.hpp"
#include "isb/morphism.hpp"

namespace isb {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

std::size_t effective_cap(SearchConfig const& cfg, std::size_t hard_cap) {
  std::size_t const cap = cfg.max_order.value_or(hard_cap);
  if (cap > hard_cap)
    throw AlgebraError(ErrorKind::OrderExceedsCap,
                       "max_order " + std::to_string(cap) + " exceeds hard cap " +
                           std::to_string(hard_cap));
  return cap;
}

void require_order(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw AlgebraError(ErrorKind::OrderExceedsCap,
                       "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

// Row-major DFS over tables with `cells` entries drawn from [0, range).
class TableDfs {
 public:
  using Consistent = std::function<bool(std::vector<Element> const&)>;
  using Complete = std::function<void(std::vector<Element> const&)>;

  TableDfs(std::size_t cells, std::size_t range, std::vector<Element> prefix,
           std::optional<std::chrono::milliseconds> timeout)
      : cells_(cells), range_(range), prefix_(std::move(prefix)), table_(cells, kUnset) {
    if (prefix_.size() > cells_)
      throw AlgebraError(ErrorKind::MalformedTable, "start prefix longer than the table");
    for (Element x : prefix_)
      if (x >= range_) throw AlgebraError(ErrorKind::MalformedTable, "start prefix value out of range");
    if (timeout) deadline_ = std::chrono::steady_clock::now() + *timeout;
  }

  SearchOutcome run(Consistent const& consistent, Complete const& complete) {
    consistent_ = &consistent;
    complete_ = &complete;
    outcome_ = {};
    outcome_.complete = fill(0, true);
    return outcome_;
  }

 private:
  bool fill(std::size_t k, bool tight) {
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) {
      outcome_.resume_prefix.assign(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(k));
      return false;
    }
    if (k == cells_) {
      (*complete_)(table_);
      return true;
    }
    bool const bounded = tight && k < prefix_.size();
    Element const start = bounded ? prefix_[k] : 0;
    for (Element v = start; v < range_; ++v) {
      table_[k] = v;
      ++outcome_.nodes;
      if ((*consistent_)(table_) && !fill(k + 1, bounded && v == start)) return false;
    }
    table_[k] = kUnset;
    return true;
  }

  std::size_t cells_;
  Element range_;
  std::vector<Element> prefix_;
  std::vector<Element> table_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  Consistent const* consistent_ = nullptr;
  Complete const* complete_ = nullptr;
  SearchOutcome outcome_;
};

bool partial_associative(std::vector<Element> const& t, std::size_t n) {
  auto at = [&](Element a, Element b) { return t[a * n + b]; };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element const ab = at(a, b);
      if (ab == kUnset) continue;
      for (Element c = 0; c < n; ++c) {
        Element const bc = at(b, c);
        if (bc == kUnset) continue;
        Element const l = at(ab, c), r = at(a, bc);
        if (l != kUnset && r != kUnset && l != r) return false;
      }
    }
  return true;
}

bool partial_left_axiom(std::vector<Element> const& add, InverseSemigroup const& m) {
  std::size_t const n = m.order();
  auto at = [&](Element a, Element b) { return add[a * n + b]; };
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      Element const t = at(m.inv(a), c);
      if (t == kUnset) continue;
      Element const r = m.mul(a, t);
      for (Element b = 0; b < n; ++b) {
        Element const bc = at(b, c);
        if (bc == kUnset) continue;
        Element const rhs = at(m.mul(a, b), r);
        if (rhs != kUnset && rhs != m.mul(a, bc)) return false;
      }
    }
  return true;
}

bool lex_less(std::span<Element const> a, std::span<Element const> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool emit_allowed(EmitMode mode, bool solution) {
  switch (mode) {
    case EmitMode::All:
      return true;
    case EmitMode::SolutionsOnly:
      return solution;
    case EmitMode::CounterexamplesOnly:
      return !solution;
  }
  return true;
}

}  // namespace

std::string_view to_string(EmitMode m) noexcept {
  switch (m) {
    case EmitMode::All:
      return "all";
    case EmitMode::SolutionsOnly:
      return "solutions_only";
    case EmitMode::CounterexamplesOnly:
      return "counterexamples_only";
  }
  return "?";
}

std::optional<EmitMode> parse_emit_mode(std::string_view name) noexcept {
  for (auto m : {EmitMode::All, EmitMode::SolutionsOnly, EmitMode::CounterexamplesOnly})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

SearchOutcome enumerate_additions(InverseSemigroup const& m, SearchConfig const& cfg,
                                  std::function<void(AdditionResult const&)> const& sink) {
  require_order(m.order(), effective_cap(cfg, kAdditionSearchCap));
  std::size_t const n = m.order();
  std::vector<CarrierMap> automorphisms;
  if (cfg.canonical_only) automorphisms = enumerate_automorphisms(m.table());

  std::size_t emitted = 0;
  TableDfs dfs(n * n, n, cfg.start_prefix, cfg.timeout);
  auto outcome = dfs.run(
      [&](std::vector<Element> const& t) {
        return partial_associative(t, n) && partial_left_axiom(t, m);
      },
      [&](std::vector<Element> const& t) {
        MagmaTable add(n, t);
        if (cfg.canonical_only)
          for (auto const& p : automorphisms)
            if (lex_less(relabel(add, p).entries(), add.entries())) return;
        std::optional<InverseSemiBrace> b;
        try {
          b.emplace(std::move(add), m.table());
        } catch (AlgebraError const& err) {
          throw AlgebraError(ErrorKind::InternalError,
                             std::string("pruned search emitted an invalid addition: ") + err.what(),
                             t);
        }
        auto report = solution_report(lambda_rho(*b));
        if (!emit_allowed(cfg.emit, report.braid.holds)) return;
        ++emitted;
        sink(AdditionResult{std::move(*b), std::move(report)});
      });
  outcome.emitted = emitted;
  return outcome;
}

std::vector<AdditionResult> collect_additions(InverseSemigroup const& m, SearchConfig const& cfg) {
  std::vector<AdditionResult> out;
  auto outcome = enumerate_additions(m, cfg, [&](AdditionResult const& r) { out.push_back(r); });
  if (!outcome.complete) throw AlgebraError(ErrorKind::Timeout, "addition search timed out");
  return out;
}

MagmaTable canonical_form(MagmaTable const& t) {
  CarrierMap p = identity_map(t.order());
  MagmaTable best = t;
  while (std::next_permutation(p.begin(), p.end())) {
    MagmaTable r = relabel(t, p);
    if (lex_less(r.entries(), best.entries())) best = std::move(r);
  }
  return best;
}

std::vector<InverseSemigroup> enumerate_inverse_semigroups(
    std::size_t n, std::optional<std::chrono::milliseconds> timeout) {
  require_order(n, kSemigroupSearchCap);
  if (n == 0) throw AlgebraError(ErrorKind::MalformedTable, "order must be positive");
  std::set<std::vector<Element>> seen;
  TableDfs dfs(n * n, n, {}, timeout);
  auto outcome = dfs.run([&](std::vector<Element> const& t) { return partial_associative(t, n); },
                         [&](std::vector<Element> const& t) {
                           MagmaTable table(n, t);
                           try {
                             InverseSemigroup probe{FiniteSemigroup(table)};
                           } catch (AlgebraError const&) {
                             return;
                           }
                           MagmaTable const canon = canonical_form(table);
                           seen.emplace(canon.entries().begin(), canon.entries().end());
                         });
  if (!outcome.complete) throw AlgebraError(ErrorKind::Timeout, "semigroup search timed out");
  std::vector<InverseSemigroup> out;
  for (auto const& entries : seen) out.emplace_back(FiniteSemigroup(MagmaTable(n, entries)));
  return out;
}

CocycleSearchResult search_cocycles(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                    ActionFamily const& delta, SearchConfig const& cfg) {
  std::size_t const cap = effective_cap(cfg, kCocycleSearchCap);
  require_order(s.order(), cap);
  require_order(t.order(), cap);
  std::size_t const n = s.order(), m = t.order();
  if (delta.acting_order() != n || delta.target_order() != m)
    throw AlgebraError(ErrorKind::DimensionMismatch, "delta has wrong dimensions");
  for (Element a = 0; a < n; ++a)
    if (auto c = is_morphism(delta.map(a), t.additive().table(), t.additive().table()); !c)
      throw AlgebraError(ErrorKind::DeltaNotEndomorphism, "delta(a) is not additive",
                         {a, (*c.witness)[0], (*c.witness)[1]});

  CocycleSearchResult result;
  TableDfs dfs(n * n, m, cfg.start_prefix, cfg.timeout);
  result.outcome = dfs.run(
      [&](std::vector<Element> const& co) {
        auto at = [&](Element a, Element b) { return co[a * n + b]; };
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b) {
            Element const ab = at(a, b);
            if (ab == kUnset) continue;
            for (Element c = 0; c < n; ++c) {
              Element const l1 = at(s.add(a, b), c), r1 = at(a, s.add(b, c)), r3 = at(b, c);
              if (l1 == kUnset || r1 == kUnset || r3 == kUnset) continue;
              for (Element u = 0; u < m; ++u) {
                Element const lhs0 = t.add(t.add(l1, delta(c, ab)), delta(c, delta(b, u)));
                Element const rhs0 = t.add(t.add(r1, delta(s.add(b, c), u)), r3);
                for (Element v = 0; v < m; ++v) {
                  Element const vc = delta(c, v);
                  if (t.add(lhs0, vc) != t.add(rhs0, vc)) return false;
                }
              }
            }
          }
        return true;
      },
      [&](std::vector<Element> const& co) {
        Cocycle found(n, m, co);
        if (!validate_cocycle(s, t, delta, found))
          throw AlgebraError(ErrorKind::InternalError, "pruned search emitted an invalid cocycle", co);
        result.cocycles.push_back(std::move(found));
      });
  result.outcome.emitted = result.cocycles.size();
  return result;
}

SurveyRow make_survey_row(std::string id, InverseSemiBrace const& s, SolutionReport const& report) {
  auto const cls = classify_semibrace(s);
  SurveyRow row;
  row.id = std::move(id);
  row.left_semibrace = cls.is_left_semibrace;
  row.skew_brace = cls.is_skew_brace;
  row.two_sided = cls.is_two_sided.holds;
  row.clifford = cls.mul.is_clifford.holds;
  row.solution = report.braid.holds;
  row.idempotent = report.power.is_idempotent;
  row.cubic = report.power.is_cubic;
  row.involutive = report.power.is_involutive;
  row.index = report.power.index;
  row.period = report.power.period;
  row.left_nondegenerate = report.degeneracy.left_nondegenerate.holds;
  row.right_nondegenerate = report.degeneracy.right_nondegenerate.holds;
  row.bijective = report.degeneracy.bijective.holds;
  row.degeneracy_class = std::string(report.degeneracy.degeneracy_class());
  return row;
}

Survey survey(std::vector<SurveyRow> rows) {
  Survey out;
  for (auto const& r : rows)
    ++out.counts[SurveyKey{r.solution, r.idempotent, r.cubic, r.degeneracy_class}];
  out.rows = std::move(rows);
  return out;
}

}  // namespace isb
