#include "lie_tables.hpp"

#include <algorithm>

namespace pstab::lie::detail {

// b(G) as products of cyclotomic polynomials in q.
const std::vector<ExceptionalEntry>& exceptional_entries() {
  static const std::vector<ExceptionalEntry> t = {
      {"G2", {6, {{1, 2}, {2, 2}, {3, 1}, {6, 1}}}, 0},
      {"F4", {24, {{1, 4}, {2, 4}, {3, 2}, {4, 2}, {6, 2}, {8, 1}, {12, 1}}}, 0},
      {"E6", {36, {{1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {8, 1}, {9, 1}, {12, 1}}}, 3},
      {"2E6", {36, {{1, 4}, {2, 6}, {3, 2}, {4, 2}, {6, 3}, {8, 1}, {10, 1}, {12, 1}, {18, 1}}}, -3},
      {"E7",
       {63,
        {{1, 7}, {2, 7}, {3, 3}, {4, 2}, {5, 1}, {6, 3}, {7, 1}, {8, 1}, {9, 1}, {10, 1}, {12, 1}, {14, 1}, {18, 1}}},
       2},
      {"E8",
       {120,
        {{1, 8}, {2, 8}, {3, 4}, {4, 4}, {5, 2}, {6, 4}, {7, 1}, {8, 2}, {9, 1}, {10, 2}, {12, 2}, {14, 1},
         {15, 1}, {18, 1}, {20, 1}, {24, 1}, {30, 1}}},
       0},
      {"3D4", {12, {{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}}}, 0},
      {"2B2", {2, {{1, 1}, {4, 1}}}, 0},
      {"2G2", {3, {{1, 1}, {2, 1}, {6, 1}}}, 0},
      {"2F4", {12, {{1, 2}, {2, 2}, {4, 2}, {6, 1}, {12, 1}}}, 0},
  };
  return t;
}

const std::vector<SporadicEntry>& sporadic_entries() {
  using W = Witness;
  static const std::vector<SporadicEntry> t = {
      {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}, {}, {}},
      {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}, {{3, W::qd}}, {}},
      {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, {}, {}},
      {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, {}, {}},
      {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, {{3, W::qd}}, {}},
      {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}, {}, {}},
      {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}, {}, {}},
      {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}, {}, {}},
      {"J4",
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}},
       {{3, W::qd}},
       {}},
      {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}, {}, {}},
      {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}, {{3, W::qd}}, {}},
      {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, {{3, W::qd}}, {}},
      {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, {{3, W::qd}}, {}},
      {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, {{3, W::qd}}, {}},
      {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}, {{3, W::qd}, {5, W::qd}}, {}},
      {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}, {{3, W::he_type}, {7, W::qd}}, {}},
      {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}, {{3, W::qd}, {5, W::qd}}, {}},
      {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}, {{7, W::qd}}, {3}},
      {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, {{3, W::qd}}, {}},
      {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}, {{3, W::qd}}, {}},
      {"Fi24'",
       {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}},
       {{3, W::qd}, {7, W::qd}},
       {}},
      {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}, {{3, W::qd}, {5, W::qd}}, {}},
      {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}, {{3, W::qd}, {5, W::qd}}, {}},
      {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}, {{3, W::qd}, {5, W::qd}}, {}},
      {"B",
       {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}},
       {{3, W::qd}, {5, W::qd}},
       {}},
      {"M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1},
        {41, 1}, {47, 1}, {59, 1}, {71, 1}},
       {{3, W::qd}, {5, W::qd}, {7, W::qd}, {13, W::qd}},
       {}},
  };
  return t;
}

const SporadicEntry* find_sporadic(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"O'N", "ON"}, {"Fi24", "Fi24'"}, {"Fi24p", "Fi24'"}, {"Sz", "Suz"}, {"MCL", "McL"}, {"HE", "He"}};
  std::string key = name;
  if (auto it = alias.find(name); it != alias.end()) key = it->second;
  const auto& t = sporadic_entries();
  auto it = std::find_if(t.begin(), t.end(), [&](const SporadicEntry& e) { return e.name == key; });
  return it == t.end() ? nullptr : &*it;
}

}  // namespace pstab::lie::detail
