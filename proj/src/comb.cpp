#include "aztec/comb.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

using Reason = PreconditionViolation::Reason;
using Count = PathFamily::Count;

[[noreturn]] void violate(Reason reason, const std::string& what) {
  throw PreconditionViolation(reason, what);
}

std::string pair_name(std::size_t i, std::size_t k) {
  return "pair (" + std::to_string(i) + ", " + std::to_string(i + 1) +
         ") at column " + std::to_string(k);
}

void check_pair(const PathFamily& f, std::size_t i, std::size_t k) {
  if (!f.well_shaped()) violate(Reason::IndexOutOfRange, "family is not well shaped");
  if (k > i || i + 1 >= f.order()) {
    violate(Reason::IndexOutOfRange,
            "need k <= i < n-1 for " + pair_name(i, k) + " in a family of order " +
                std::to_string(f.order()));
  }
  for (std::size_t row : {i, i + 1}) {
    for (std::size_t j = 0; j < k; ++j) {
      if (f.d(row, j) != 0) {
        violate(Reason::VerticalStepsBeforeColumn,
                "path " + std::to_string(row) + " has vertical steps in column " +
                    std::to_string(j) + " before " + std::to_string(k));
      }
    }
  }
}

Count forward_in_place(PathFamily& f, std::size_t i, std::size_t k,
                       CombTrace* trace) {
  check_pair(f, i, k);
  if (f.d(i + 1, k) != 0) {
    violate(Reason::ResidualVerticalSteps,
            "upper path already has vertical steps for " + pair_name(i, k));
  }

  // cur = h_0(j) + 1 - h_1(j); its running maximum is d_j.
  std::int64_t cur = 0;
  std::int64_t d = 0;
  for (std::size_t j = 0; j < k; ++j) {
    cur += static_cast<std::int64_t>(f.b(i + 1, j)) - f.b(i, j);
    d = std::max(d, cur);
  }
  if (static_cast<std::int64_t>(f.d(i, k)) < d) {
    violate(Reason::InsufficientVerticalSteps,
            "lower path has " + std::to_string(f.d(i, k)) +
                " vertical steps but " + std::to_string(d) + " are needed for " +
                pair_name(i, k));
  }

  if (trace) {
    trace->column = k;
    trace->lower = i;
    trace->d.assign(1, 0);
    trace->d.reserve(k + 1);
  }
  cur = 0;
  d = 0;
  for (std::size_t j = 0; j < k; ++j) {
    cur += static_cast<std::int64_t>(f.b(i + 1, j)) - f.b(i, j);
    if (cur > d) {
      d = cur;
      f.set_b(i, j, 1);
      f.set_b(i + 1, j, 0);
    }
    if (trace) trace->d.push_back(static_cast<Count>(d));
  }
  const auto moved = static_cast<Count>(d);
  f.set_d(i, k, f.d(i, k) - moved);
  f.set_d(i + 1, k, moved);
  return moved;
}

Count backward_in_place(PathFamily& f, HeightVector& h, std::size_t i,
                        std::size_t k, CombTrace* trace) {
  check_pair(f, i, k);
  if (h.size() < f.order()) {
    violate(Reason::HeightMismatch, "height vector shorter than the family");
  }

  // Levels of both paths in the columns before k; they must stay apart.
  std::int64_t lower = static_cast<std::int64_t>(i);
  std::int64_t upper = lower + 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (upper - lower - 1 < 0) {
      violate(Reason::NotDisjoint,
              "paths meet in column " + std::to_string(j) + " for " + pair_name(i, k));
    }
    lower -= f.b(i, j);
    upper -= f.b(i + 1, j);
  }
  if (h[i] != lower || h[i + 1] != upper) {
    violate(Reason::HeightMismatch,
            "stored entry heights disagree with the paths for " + pair_name(i, k));
  }

  std::int64_t d = f.d(i + 1, k);
  std::int64_t cur = h[i + 1] - h[i] - 1;
  if (cur < d) {
    violate(Reason::NotDisjoint,
            "paths meet in column " + std::to_string(k) + " for " + pair_name(i, k));
  }
  if (f.d(i, k) > std::numeric_limits<Count>::max() - static_cast<Count>(d)) {
    violate(Reason::IndexOutOfRange, "vertical step count overflow");
  }

  const auto moved = static_cast<Count>(d);
  f.set_d(i + 1, k, 0);
  f.set_d(i, k, f.d(i, k) + moved);
  h[i + 1] -= d;
  h[i] += d;

  if (trace) {
    trace->column = k;
    trace->lower = i;
    trace->d.assign(k + 1, 0);
    trace->d[k] = moved;
  }
  for (std::size_t j = k; j-- > 0;) {
    cur += static_cast<std::int64_t>(f.b(i + 1, j)) - f.b(i, j);
    if (cur < d) {
      d = cur;
      f.set_b(i, j, 0);
      f.set_b(i + 1, j, 1);
    }
    if (trace) trace->d[j] = static_cast<Count>(d);
  }
  return moved;
}

void sweep_forward(PathFamily& f, std::size_t k, std::vector<CombTrace>* traces) {
  std::int64_t horizontals = static_cast<std::int64_t>(k);
  for (std::size_t j = 0; j < k; ++j) horizontals -= f.b(k, j);
  f.set_d(k, k, static_cast<Count>(horizontals));
  for (std::size_t i = k; i + 1 < f.order(); ++i) {
    if (traces) {
      traces->emplace_back();
      forward_in_place(f, i, k, &traces->back());
    } else {
      forward_in_place(f, i, k, nullptr);
    }
  }
}

void sweep_backward(PathFamily& f, HeightVector& h, std::size_t k,
                    std::vector<CombTrace>* traces) {
  for (std::size_t i = f.order() - 1; i-- > k;) {
    if (traces) {
      traces->emplace_back();
      backward_in_place(f, h, i, k, &traces->back());
    } else {
      backward_in_place(f, h, i, k, nullptr);
    }
  }
}

}  // namespace

HeightVector entry_heights(const PathFamily& f, std::size_t k) {
  HeightVector h(f.order(), 0);
  for (std::size_t i = 0; i < f.order(); ++i) {
    std::int64_t level = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < std::min(i, k); ++j) level -= f.b(i, j);
    h[i] = level;
  }
  return h;
}

ForwardStep disj_step(const PathFamily& f, std::size_t i, std::size_t k) {
  ForwardStep result{f, {}};
  forward_in_place(result.family, i, k, &result.trace);
  return result;
}

BackwardStep clify_step(const PathFamily& f, const HeightVector& h,
                        std::size_t i, std::size_t k) {
  BackwardStep result{f, h, {}};
  backward_in_place(result.family, result.heights, i, k, &result.trace);
  return result;
}

bool in_pathfam_nk(const PathFamily& f, std::size_t k) {
  if (!validate_family(f).empty()) return false;
  const std::size_t n = f.order();
  k = std::min(k, n);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (f.d(i, j) != 0) return false;
    }
  }
  return paths_disjoint_from(f, k);
}

PathFamily comb_column(const PathFamily& f, std::size_t k,
                       std::vector<CombTrace>* traces) {
  if (k >= f.order()) {
    violate(Reason::IndexOutOfRange, "column " + std::to_string(k) +
                                         " out of range for order " +
                                         std::to_string(f.order()));
  }
  if (!in_pathfam_nk(f, k + 1)) {
    violate(Reason::NotInDomain,
            "family is not in Pathfam(n, " + std::to_string(k + 1) + ")");
  }
  PathFamily out = f;
  sweep_forward(out, k, traces);
  return out;
}

PathFamily uncomb_column(const PathFamily& f, std::size_t k,
                         std::vector<CombTrace>* traces) {
  if (k >= f.order()) {
    violate(Reason::IndexOutOfRange, "column " + std::to_string(k) +
                                         " out of range for order " +
                                         std::to_string(f.order()));
  }
  if (!in_pathfam_nk(f, k)) {
    violate(Reason::NotInDomain,
            "family is not in Pathfam(n, " + std::to_string(k) + ")");
  }
  PathFamily out = f;
  HeightVector h = entry_heights(out, k);
  sweep_backward(out, h, k, traces);
  return out;
}

PathFamily comb(const BitTriangle& t) {
  PathFamily f = family_from_bits(t);
  for (std::size_t k = f.order(); k-- > 0;) sweep_forward(f, k, nullptr);
  return f;
}

BitTriangle uncomb(const PathFamily& f) {
  require_valid(f);
  if (!is_disjoint(f)) throw NotDisjoint("uncomb needs a disjoint family");

  const std::size_t n = f.order();
  PathFamily work = f;
  HeightVector h(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n; i-- > k;) {
      h[i] = k == 0 ? static_cast<std::int64_t>(i) : h[i] - work.b(i, k - 1);
      if (i + 1 < n) backward_in_place(work, h, i, k, nullptr);
    }
  }
  if (!is_cliff_shaped(work)) {
    throw std::logic_error("uncombing did not produce a cliff-shaped family");
  }

  BitTriangle t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) t.set_bit(i, j, work.b(i, j) != 0);
  }
  return t;
}

}  // namespace aztec
