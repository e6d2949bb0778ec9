#include "aztec/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "aztec/comb.hpp"
#include "aztec/errors.hpp"

namespace aztec {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
}

constexpr Step kSteps[] = {Step::Horizontal, Step::Diagonal, Step::Vertical};

// Paths P_i go monotonically from (i, 0) to (0, i), so they stay inside the
// square [0, i] x [0, i].
bool inside(GridPoint p, int i) {
  return p.level >= 0 && p.level <= i && p.column >= 0 && p.column <= i;
}

class DisjointSearch {
 public:
  explicit DisjointSearch(std::size_t n)
      : n_(static_cast<int>(n)), occupied_(n * n, 0), current_(n) {}

  std::vector<PathFamily> run() {
    place(n_ - 1);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  std::uint8_t& cell(GridPoint p) {
    return occupied_[static_cast<std::size_t>(p.level * n_ + p.column)];
  }

  void place(int i) {
    if (i < 0) {
      found_.push_back(family_from_paths(current_));
      return;
    }
    const GridPoint start{i, 0};
    if (cell(start)) return;
    cell(start) = 1;
    current_[i].start = start;
    current_[i].steps.clear();
    walk(i, start);
    cell(start) = 0;
  }

  void walk(int i, GridPoint p) {
    if (p.level == 0 && p.column == i) {
      place(i - 1);
      return;
    }
    for (Step s : kSteps) {
      const GridPoint q = advance(p, s);
      if (!inside(q, i) || cell(q)) continue;
      cell(q) = 1;
      current_[i].steps.push_back(s);
      walk(i, q);
      current_[i].steps.pop_back();
      cell(q) = 0;
    }
  }

  int n_;
  std::vector<std::uint8_t> occupied_;
  std::vector<ExplicitPath> current_;
  std::vector<PathFamily> found_;
};

void schroder_paths(int i, GridPoint p, ExplicitPath& current,
                    std::vector<ExplicitPath>& out) {
  if (p.level == 0 && p.column == i) {
    out.push_back(current);
    return;
  }
  for (Step s : kSteps) {
    const GridPoint q = advance(p, s);
    if (!inside(q, i) || q.level + q.column < i) continue;
    current.steps.push_back(s);
    schroder_paths(i, q, current, out);
    current.steps.pop_back();
  }
}

}  // namespace

std::vector<PathFamily> enumerate_disjoint(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  return DisjointSearch(n).run();
}

std::vector<PathFamily> enumerate_schroder_families(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  std::vector<std::vector<ExplicitPath>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExplicitPath current{{static_cast<int>(i), 0}, {}};
    schroder_paths(static_cast<int>(i), current.start, current, choices[i]);
  }

  std::vector<PathFamily> out;
  std::vector<std::size_t> pick(n, 0);
  std::vector<ExplicitPath> family(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) family[i] = choices[i][pick[i]];
    out.push_back(family_from_paths(family));
    std::size_t i = 0;
    while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> column_counts(const PathFamily& f) {
  const std::size_t n = f.order();
  std::vector<unsigned> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= i; ++k) counts[k] += f.d(i, k);
  }
  return counts;
}

std::vector<unsigned> intercolumn_counts(const PathFamily& f) {
  const std::size_t n = f.order();
  std::vector<unsigned> counts(n > 0 ? n - 1 : 0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) counts[j] += f.b(i, j) == 0 ? 1 : 0;
  }
  return counts;
}

std::vector<unsigned> row_counts(const PathFamily& f) {
  const std::size_t n = f.order();
  std::vector<unsigned> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t level = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < i; ++j) {
      level -= f.d(i, j);
      if (f.b(i, j) == 0) {
        if (level < 0 || level >= static_cast<std::int64_t>(n)) {
          throw InvalidFamily("horizontal step outside the grid");
        }
        ++counts[static_cast<std::size_t>(level)];
      }
      level -= f.b(i, j);
    }
  }
  return counts;
}

unsigned diagonal_step_count(const PathFamily& f) {
  unsigned total = 0;
  for (std::size_t i = 0; i < f.order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) total += f.b(i, j);
  }
  return total;
}

unsigned horizontal_step_count(const PathFamily& f) {
  unsigned total = 0;
  for (std::size_t i = 0; i < f.order(); ++i) {
    for (std::size_t j = 0; j < i; ++j) total += f.b(i, j) == 0 ? 1 : 0;
  }
  return total;
}

bool parse_statistic(const std::string& name, Statistic& out) {
  static const std::map<std::string, Statistic> names = {
      {"diagonal", Statistic::DiagonalSteps},
      {"horizontal", Statistic::HorizontalSteps},
      {"column", Statistic::ColumnCounts},
      {"intercolumn", Statistic::InterColumnCounts},
      {"row", Statistic::RowCounts},
      {"column-intercolumn", Statistic::ColumnAndInterColumn},
  };
  auto it = names.find(name);
  if (it == names.end()) return false;
  out = it->second;
  return true;
}

std::vector<unsigned> statistic_of(const PathFamily& f, Statistic s) {
  switch (s) {
    case Statistic::DiagonalSteps:
      return {diagonal_step_count(f)};
    case Statistic::HorizontalSteps:
      return {horizontal_step_count(f)};
    case Statistic::ColumnCounts:
      return column_counts(f);
    case Statistic::InterColumnCounts:
      return intercolumn_counts(f);
    case Statistic::RowCounts:
      return row_counts(f);
    case Statistic::ColumnAndInterColumn: {
      auto key = column_counts(f);
      auto inter = intercolumn_counts(f);
      key.insert(key.end(), inter.begin(), inter.end());
      return key;
    }
  }
  return {};
}

Histogram joint_distribution(std::size_t n, Statistic s, std::size_t cap) {
  Histogram h;
  for (const auto& f : enumerate_disjoint(n, cap)) ++h[statistic_of(f, s)];
  return h;
}

Histogram triangle_zero_distribution(std::size_t n) {
  const std::size_t bits = n == 0 ? 0 : n * (n - 1) / 2;
  if (bits >= 64) throw CapExceeded("too many triangles to enumerate");
  Histogram h;
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << bits); ++index) {
    const BitTriangle t = BitTriangle::from_index(n, index);
    std::vector<unsigned> key;
    for (std::size_t i = 0; i < n; ++i) key.push_back(static_cast<unsigned>(t.zeros_in_row(i)));
    for (std::size_t j = 0; j + 1 < n; ++j) {
      key.push_back(static_cast<unsigned>(t.zeros_in_column(j)));
    }
    ++h[key];
  }
  return h;
}

std::string format_histogram(const Histogram& h) {
  std::ostringstream out;
  for (const auto& [key, count] : h) {
    for (std::size_t i = 0; i < key.size(); ++i) out << (i ? " " : "") << key[i];
    out << " : " << count << '\n';
  }
  return out.str();
}

BijectionReport verify_bijection(std::size_t n, std::size_t cap) {
  return verify_bijection(
      n, cap, [](const BitTriangle& t) { return comb(t); },
      [](const PathFamily& f) { return uncomb(f); });
}

BijectionReport verify_bijection(std::size_t n, std::size_t cap,
                                 const CombFunction& comb_fn,
                                 const UncombFunction& uncomb_fn) {
  BijectionReport report;
  report.n = n;

  std::vector<PathFamily> disjoint;
  try {
    disjoint = enumerate_disjoint(n, cap);
  } catch (const std::exception& e) {
    report.failures.push_back(e.what());
    report.image_matches = false;
    return report;
  }
  report.disjoint_families = disjoint.size();

  std::unordered_set<std::string> disjoint_keys;
  for (const auto& f : disjoint) disjoint_keys.insert(to_text(f));

  const std::size_t bits = n == 0 ? 0 : n * (n - 1) / 2;
  std::unordered_map<std::string, std::uint64_t> image;
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << bits); ++index) {
    ++report.triangles;
    const BitTriangle t = BitTriangle::from_index(n, index);
    PathFamily f;
    try {
      f = comb_fn(t);
    } catch (const std::exception& e) {
      report.failures.push_back("comb threw on triangle " + std::to_string(index) +
                                ": " + e.what());
      report.image_matches = false;
      continue;
    }
    const std::string key = to_text(f);
    auto [it, inserted] = image.emplace(key, index);
    if (!inserted) {
      report.injective = false;
      report.failures.push_back("triangles " + std::to_string(it->second) + " and " +
                                std::to_string(index) + " comb to the same family");
    }
    if (!disjoint_keys.count(key)) {
      report.image_matches = false;
      report.failures.push_back("comb of triangle " + std::to_string(index) +
                                " is not a disjoint family");
    } else if (inserted) {
      ++report.matched;
    }
    try {
      if (uncomb_fn(f) != t) {
        report.uncomb_after_comb = false;
        report.failures.push_back("uncomb(comb(t)) != t for triangle " +
                                  std::to_string(index));
      }
    } catch (const std::exception& e) {
      report.uncomb_after_comb = false;
      report.failures.push_back("uncomb threw on comb of triangle " +
                                std::to_string(index) + ": " + e.what());
    }
  }
  if (report.matched != disjoint.size()) {
    report.image_matches = false;
    report.failures.push_back("comb image covers " + std::to_string(report.matched) +
                              " of " + std::to_string(disjoint.size()) +
                              " disjoint families");
  }

  for (const auto& f : disjoint) {
    try {
      if (comb_fn(uncomb_fn(f)) != f) {
        report.comb_after_uncomb = false;
        report.failures.push_back("comb(uncomb(f)) != f for\n" + to_text(f));
      }
    } catch (const std::exception& e) {
      report.comb_after_uncomb = false;
      report.failures.push_back(std::string("comb(uncomb(f)) threw: ") + e.what());
    }
  }
  return report;
}

}  // namespace aztec
