#pragma once

// Piecewise rank formulas for HF^irr_{2i} of the displayed Brieskorn
// families, transcribed case by case. A case is (predicate on i, rank).
// Where cases overlap, the last matching case supplies the rank.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace seifert::acceptance {

struct Case {
  std::function<bool(std::int64_t i, std::int64_t k)> applies;
  std::function<std::int64_t(std::int64_t k)> rank;
};

struct Family {
  std::string name;
  std::int64_t p, q, slope, offset;  // Σ(p, q, slope·k + offset)
  std::vector<Case> cases;

  std::int64_t r(std::int64_t k) const { return slope * k + offset; }

  /// Predicted rank by i (grading 2i), zero ranks omitted.
  std::map<std::int64_t, std::int64_t> predicted(std::int64_t k, std::int64_t max_i) const {
    std::map<std::int64_t, std::int64_t> out;
    for (std::int64_t i = 0; i <= max_i; ++i) {
      std::int64_t rank = 0;
      for (const auto& c : cases)
        if (c.applies(i, k)) rank = c.rank(k);
      if (rank != 0) out[i] = rank;
    }
    return out;
  }
};

inline std::int64_t fl(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline bool even(std::int64_t i) { return i % 2 == 0; }

inline Case when(std::function<bool(std::int64_t, std::int64_t)> p, std::function<std::int64_t(std::int64_t)> r) {
  return {std::move(p), std::move(r)};
}
inline std::int64_t two(std::int64_t) { return 2; }

inline std::vector<Case> cases_2_3_minus() {
  return {when([](auto i, auto) { return i == 0; }, [](auto k) { return 2 * fl(k, 2); })};
}
inline std::vector<Case> cases_2_3_plus() {
  return {when([](auto i, auto) { return i == 0; }, [](auto k) { return 2 * fl(k + 1, 2); })};
}
inline std::vector<Case> cases_2_5_minus() {
  return {when([](auto i, auto k) { return 0 <= i && i < k - 1; }, two),
          when([](auto i, auto k) { return i == k - 1; }, [](auto k) { return 2 * (fl(k, 2) + 1); })};
}
inline std::vector<Case> cases_2_5_plus() {
  return {when([](auto i, auto k) { return 0 <= i && i < k; }, two),
          when([](auto i, auto k) { return i == k; }, [](auto k) { return 2 * fl(k + 1, 2); })};
}
inline std::vector<Case> cases_2_7_14k_minus_1() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i <= 2 * k - 2; }, two),
          when([](auto i, auto k) { return 2 * k - 2 <= i && i <= 3 * k - 3; }, two),
          when([](auto i, auto k) { return i == 3 * k - 2; }, [](auto k) { return 2 * fl(k + 2, 2); }),
          when([](auto i, auto k) { return i == 3 * k - 1; }, [](auto k) { return 2 * fl(k, 2); })};
}
inline std::vector<Case> cases_2_7_14k_plus_1() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i <= 2 * k - 1; }, two),
          when([](auto i, auto k) { return 2 * k - 2 <= i && i <= 3 * k - 2; }, two),
          when([](auto i, auto k) { return i == 3 * k - 1; }, [](auto k) { return 2 * fl(k + 3, 2); }),
          when([](auto i, auto k) { return i == 3 * k - 1; }, [](auto k) { return 2 * fl(k + 1, 2); })};
}
inline std::vector<Case> cases_2_7_minus_3() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i <= 2 * k - 2; }, two),
          when([](auto i, auto k) { return 2 * k - 2 <= i && i <= 3 * k - 3; }, two),
          when([](auto i, auto k) { return i == 3 * k - 2; }, [](auto k) { return 2 * k; })};
}
inline std::vector<Case> cases_2_7_plus_3() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i <= 2 * k; }, two),
          when([](auto i, auto k) { return 2 * k <= i && i <= 3 * k - 1; }, two),
          when([](auto i, auto k) { return i == 3 * k; }, [](auto k) { return 2 * (k + 1); })};
}
// The top case of the three Σ(3,4,·) tables is printed with "k =" in place
// of "i ="; it is read as a condition on i.
inline std::vector<Case> cases_3_4_12k_minus_1() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i <= 2 * k - 2; }, two),
          when([](auto i, auto k) { return 2 * k - 2 <= i && i <= 3 * k - 3; }, two),
          when([](auto i, auto k) { return i == 3 * k - 2; }, [](auto k) { return 2 * fl(k + 2, 2); })};
}
inline std::vector<Case> cases_3_4_12k_plus_1() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i < 2 * k; }, two),
          when([](auto i, auto k) { return 2 * k <= i && i <= 3 * k; }, two),
          when([](auto i, auto k) { return i == 3 * k; }, [](auto k) { return 2 * fl(k + 1, 2); })};
}
inline std::vector<Case> cases_3_4_12k_minus_5() {
  return {when([](auto i, auto k) { return even(i) && 0 <= i && i <= 2 * k - 2; }, two),
          when([](auto i, auto k) { return 2 * k - 2 <= i && i <= 3 * k - 3; }, two),
          when([](auto i, auto k) { return i == 3 * k - 2; }, [](auto k) { return 2 * k; })};
}
inline std::vector<Case> cases_3_5_15k_minus_2() {
  return {when([](auto i, auto k) { return i % 3 == 0 && 0 <= i && i <= 3 * k - 2; }, two),
          when([](auto i, auto k) { return even(i) && 3 * k - 4 <= i && i <= 5 * k - 3; }, two),
          when([](auto i, auto k) { return 5 * k - 3 <= i && i <= 6 * k - 4; }, two),
          when([](auto i, auto k) { return i == 6 * k - 3; }, [](auto k) { return 2 * fl(k + 2, 2); }),
          when([](auto i, auto k) { return i == 6 * k - 2; }, [](auto k) { return 2 * fl(k, 2); })};
}
inline std::vector<Case> cases_3_5_15k_plus_2() {
  return {when([](auto i, auto k) { return i % 3 == 0 && 0 <= i && i <= 3 * k + 1; }, two),
          when([](auto i, auto k) { return even(i) && 3 * k - 1 <= i && i <= 5 * k; }, two),
          when([](auto i, auto k) { return 5 * k <= i && i <= 6 * k - 2; }, two),
          when([](auto i, auto k) { return i == 6 * k - 1; }, [](auto k) { return 2 * fl(k + 3, 2); }),
          when([](auto i, auto k) { return i == 6 * k; }, [](auto k) { return 2 * fl(k + 1, 2); })};
}

inline std::vector<Family> displayed_families() {
  return {
      {"Sigma(2,3,6k-1)", 2, 3, 6, -1, cases_2_3_minus()},
      {"Sigma(2,3,6k+1)", 2, 3, 6, 1, cases_2_3_plus()},
      {"Sigma(2,5,10k-1)", 2, 5, 10, -1, cases_2_5_minus()},
      {"Sigma(2,5,10k+1)", 2, 5, 10, 1, cases_2_5_plus()},
      {"Sigma(2,5,10k-3)", 2, 5, 10, -3, cases_2_5_minus()},
      {"Sigma(2,5,10k+3)", 2, 5, 10, 3, cases_2_5_plus()},
      {"Sigma(2,7,14k-1)", 2, 7, 14, -1, cases_2_7_14k_minus_1()},
      {"Sigma(2,7,14k+1)", 2, 7, 14, 1, cases_2_7_14k_plus_1()},
      {"Sigma(2,7,14k-3)", 2, 7, 14, -3, cases_2_7_minus_3()},
      {"Sigma(2,7,14k+3)", 2, 7, 14, 3, cases_2_7_plus_3()},
      {"Sigma(2,7,14k-5)", 2, 7, 14, -5, cases_2_7_minus_3()},
      {"Sigma(2,7,14k+5)", 2, 7, 14, 5, cases_2_7_plus_3()},
      {"Sigma(3,4,12k-1)", 3, 4, 12, -1, cases_3_4_12k_minus_1()},
      {"Sigma(3,4,12k+1)", 3, 4, 12, 1, cases_3_4_12k_plus_1()},
      {"Sigma(3,4,12k-5)", 3, 4, 12, -5, cases_3_4_12k_minus_5()},
      {"Sigma(3,5,15k-2)", 3, 5, 15, -2, cases_3_5_15k_minus_2()},
      {"Sigma(3,5,15k+2)", 3, 5, 15, 2, cases_3_5_15k_plus_2()},
  };
}

}  // namespace seifert::acceptance
