#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace fivenine {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 2>;
using Triangle = std::array<Vertex, 3>;

enum class Condition {
  flag,
  k_large_local,
  five_nine,
  m_location,
  disc,
  diagram_map,
  minimal_diagram,
};

enum class Verdict { pass, fail, undetermined };

inline std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::flag: return "flag";
    case Condition::k_large_local: return "k-large-local";
    case Condition::five_nine: return "five-nine";
    case Condition::m_location: return "m-location";
    case Condition::disc: return "disc";
    case Condition::diagram_map: return "diagram-map";
    case Condition::minimal_diagram: return "minimal-diagram";
  }
  return "?";
}

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

/// One piece of evidence behind a failing (or undetermined) verdict.
/// `clause` names the violated sub-condition: "5/9", "6/8", "7/7" for the
/// curvature clauses, or a structural tag such as "euler" for disc checks.
struct Witness {
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vertex>> loops;
  std::string clause;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness& a, const Witness& b) {
    return std::tie(a.vertices, a.loops, a.clause) <=> std::tie(b.vertices, b.loops, b.clause);
  }
};

struct ConditionReport {
  Condition condition = Condition::flag;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  // Loops a bounded triviality oracle could neither certify nor refute.
  std::vector<std::vector<Vertex>> undetermined;
  // Keys are "4".."N" or "inf"; populated by the curvature checks.
  std::map<std::string, std::size_t> largeness_histogram;
  std::map<std::string, std::size_t> counters;

  bool passed() const { return verdict == Verdict::pass; }

  void add(Witness w) {
    witnesses.push_back(std::move(w));
    verdict = Verdict::fail;
  }

  /// Sorts witnesses so the canonically least comes first.
  void canonicalize() {
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    std::sort(undetermined.begin(), undetermined.end());
    if (!witnesses.empty()) {
      verdict = Verdict::fail;
    } else if (!undetermined.empty()) {
      verdict = Verdict::undetermined;
    } else {
      verdict = Verdict::pass;
    }
  }
};

inline ConditionReport make_report(Condition c) {
  ConditionReport r;
  r.condition = c;
  return r;
}

/// CLI exit-code convention: 0 pass, 1 fail, 2 undetermined.
inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::undetermined: return 2;
  }
  return 3;
}

}  // namespace fivenine
