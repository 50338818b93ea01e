#pragma once

// Reference matrix data for the restricted differentials, frozen as test
// fixtures. -1/0/1 entries; row and column labels as printed.

#include <string>
#include <vector>

namespace fixtures {

struct ref_matrix {
  std::string name;
  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<int>> entries;  // row major
};

inline const std::vector<ref_matrix>& reference_matrices() {
  static const std::vector<ref_matrix> data = {
      {
          "d2_G_1",
          {"W_{14}", "W_{15}", "W_{16}", "W_{17}", "W_{18}", "W_{19}", "W_{27}", "W_{28}", "W_{29}", "W_{37}", "W_{38}", "W_{39}", "W_{49}", "W_{58}", "W_{67}"},
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2"},
          {
              {-1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0},
          },
      },
      {
          "d1_G_1",
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5"},
          {
              {1, 0, 0, 0, -1, 0, 1, -1, 0, 1, -1, 0, -1, 0, 0, 0, 1, 0},
              {0, 0, 1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1},
              {0, 1, 0, 0, 0, -1, 0, 0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0},
              {0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
          },
      },
      {
          "d2_G_2",
          {"W_{14}", "W_{15}", "W_{16}", "W_{17}", "W_{18}", "W_{19}", "W_{27}", "W_{28}", "W_{29}", "W_{37}", "W_{38}", "W_{39}", "W_{49}", "W_{58}", "W_{67}"},
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2"},
          {
              {-1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0},
          },
      },
      {
          "d1_G_2",
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5"},
          {
              {1, 0, -1, 0, 0, 1, 1, -1, 0, 1, -1, 0, -1, 0, 0, 0, 1, 0},
              {0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1},
              {0, 1, 0, -1, 0, 1, 0, 0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0},
              {0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
          },
      },
      {
          "d2_K_5",
          {"W_{18}", "W_{19}", "W_{1a}", "W_{26}", "W_{27}", "W_{2a}", "W_{35}", "W_{37}", "W_{39}", "W_{45}", "W_{46}", "W_{48}", "W_{5a}", "W_{69}", "W_{78}"},
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2", "X_10^1", "X_10^2"},
          {
              {-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0},
          },
      },
      {
          "d1_K_5",
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2", "X_10^1", "X_10^2"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5"},
          {
              {1, 0, 0, 0, -1, 0, 0, 1, -1, 0, 0, 1, 0, 0, 1, -1, 0, 1, -1, 0},
              {0, 1, 0, 0, 0, 0, -1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, -1, 0},
              {0, 0, 1, 0, -1, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, -1},
              {0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0, 1, 0, 1, 0, -1, 0, 0},
          },
      },
      {
          "d1_K3_shape21",
          {"X_1", "X_2", "X_3"},
          {"Y_1", "Y_2"},
          {
              {1, 0, -1},
              {0, 1, -1},
          },
      },
      {
          "d2_G_3",
          {"W_{16}", "W_{17}", "W_{18}", "W_{19}", "W_{1a}", "W_{1b}", "W_{25}", "W_{29}", "W_{2a}", "W_{2b}", "W_{34}", "W_{37}", "W_{38}", "W_{3b}", "W_{49}", "W_{4a}", "W_{4b}", "W_{57}", "W_{58}", "W_{5b}", "W_{6b}", "W_{7a}", "W_{89}"},
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2", "X_10^1", "X_10^2", "X_11^1", "X_11^2"},
          {
              {-1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0},
          },
      },
      {
          "d1_G_3",
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2", "X_10^1", "X_10^2", "X_11^1", "X_11^2"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5"},
          {
              {1, 0, 0, 0, -1, 0, -1, 0, 0, 1, 1, -1, 0, 1, -1, 0, -1, 0, 0, 0, 1, 0},
              {0, 0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1},
              {0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
          },
      },
      {
          "d2_G_4",
          {"W_{16}", "W_{17}", "W_{18}", "W_{19}", "W_{1a}", "W_{1b}", "W_{23}", "W_{25}", "W_{27}", "W_{28}", "W_{2b}", "W_{39}", "W_{3a}", "W_{3b}", "W_{47}", "W_{48}", "W_{4b}", "W_{56}", "W_{58}", "W_{5a}", "W_{6b}", "W_{7a}", "W_{89}"},
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2", "X_10^1", "X_10^2", "X_11^1", "X_11^2"},
          {
              {-1, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          },
      },
      {
          "d1_G_4",
          {"X_1^1", "X_1^2", "X_2^1", "X_2^2", "X_3^1", "X_3^2", "X_4^1", "X_4^2", "X_5^1", "X_5^2", "X_6^1", "X_6^2", "X_7^1", "X_7^2", "X_8^1", "X_8^2", "X_9^1", "X_9^2", "X_10^1", "X_10^2", "X_11^1", "X_11^2"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5"},
          {
              {1, 0, -1, 0, -1, 0, 0, 1, 0, 0, 1, -1, 0, 1, -1, 0, -1, 0, 0, 0, 1, 0},
              {0, 0, -1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1},
              {0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, -1, 1, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0},
          },
      },
      {
          "d2_G_5",
          {"W_{17}", "W_{18}", "W_{19}", "W_{1a}", "W_{1b}", "W_{24}", "W_{25}", "W_{26}", "W_{27}", "W_{28}", "W_{2a}", "W_{34}", "W_{35}", "W_{37}", "W_{39}", "W_{49}", "W_{4a}", "W_{4b}", "W_{58}", "W_{5b}", "W_{67}", "W_{69}", "W_{7b}", "W_{89}"},
          {"X_1^1", "X_1^2", "X_1^3", "X_2^1", "X_2^2", "X_2^3", "X_3^1", "X_3^2", "X_3^3", "X_4^1", "X_4^2", "X_4^3", "X_5^1", "X_5^2", "X_5^3", "X_6^1", "X_6^2", "X_6^3", "X_7^1", "X_7^2", "X_7^3", "X_8^1", "X_8^2", "X_8^3", "X_9^1", "X_9^2", "X_9^3", "X_10^1", "X_10^2", "X_10^3", "X_11^1", "X_11^2", "X_11^3"},
          {
              {-1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 1},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
          },
      },
      {
          "d1_G_5",
          {"X_1^1", "X_1^2", "X_1^3", "X_2^1", "X_2^2", "X_2^3", "X_3^1", "X_3^2", "X_3^3", "X_4^1", "X_4^2", "X_4^3", "X_5^1", "X_5^2", "X_5^3", "X_6^1", "X_6^2", "X_6^3", "X_7^1", "X_7^2", "X_7^3", "X_8^1", "X_8^2", "X_8^3", "X_9^1", "X_9^2", "X_9^3", "X_10^1", "X_10^2", "X_10^3", "X_11^1", "X_11^2", "X_11^3"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5", "Y_6", "Y_7", "Y_8", "Y_9"},
          {
              {1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, 0, 1, -1, 0, 0, 0, 1, -1, 1, 0, -1, 0, -1, 0, -1, 1, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0},
              {0, 1, 0, -1, 1, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, -1, 0, 0, 1, 1, 0, 0},
              {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1},
              {0, 0, 1, 0, 0, 0, -1, 1, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0},
          },
      },
      {
          "d2_G_6",
          {"W_{18}", "W_{19}", "W_{1a}", "W_{1b}", "W_{26}", "W_{27}", "W_{2a}", "W_{2b}", "W_{35}", "W_{37}", "W_{39}", "W_{3b}", "W_{45}", "W_{46}", "W_{47}", "W_{48}", "W_{49}", "W_{4a}", "W_{5a}", "W_{5b}", "W_{69}", "W_{6b}", "W_{78}", "W_{8b}"},
          {"X_1^1", "X_1^2", "X_1^3", "X_2^1", "X_2^1", "X_2^3", "X_3^1", "X_3^2", "X_3^3", "X_4^1", "X_4^2", "X_4^3", "X_5^1", "X_5^2", "X_5^3", "X_6^1", "X_6^2", "X_6^3", "X_7^1", "X_7^2", "X_7^3", "X_8^1", "X_8^2", "X_8^3", "X_9^1", "X_9^2", "X_9^3", "X_10^1", "X_10^2", "X_10^3", "X_11^1", "X_11^2", "X_11^3"},
          {
              {-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1},
          },
      },
      {
          "d1_G_6",
          {"X_1^1", "X_1^2", "X_1^3", "X_2^1", "X_2^2", "X_2^3", "X_3^1", "X_3^2", "X_3^3", "X_4^1", "X_4^2", "X_4^3", "X_5^1", "X_5^2", "X_5^3", "X_6^1", "X_6^2", "X_6^3", "X_7^1", "X_7^2", "X_7^3", "X_8^1", "X_8^2", "X_8^3", "X_9^1", "X_9^2", "X_9^3", "X_10^1", "X_10^2", "X_10^3", "X_11^1", "X_11^2", "X_11^3"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5", "Y_6", "Y_7", "Y_8", "Y_9"},
          {
              {1, 0, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, -1, 0, 0, 0, 1, -1, 1, 0, 1, 0, -1, 0, -1, 0, 0, 0},
              {0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 1, -1, 0, -1, 1, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0},
          },
      },
      {
          "d2_K_33",
          {"W_{16}", "W_{17}", "W_{18}", "W_{19}", "W_{24}", "W_{25}", "W_{27}", "W_{29}", "W_{34}", "W_{35}", "W_{36}", "W_{38}", "W_{48}", "W_{49}", "W_{56}", "W_{57}", "W_{69}", "W_{78}"},
          {"X_1^1", "X_1^2", "X_1^3", "X_2^1", "X_2^2", "X_2^3", "X_3^1", "X_3^2", "X_3^3", "X_4^1", "X_4^2", "X_4^3", "X_5^1", "X_5^2", "X_5^3", "X_6^1", "X_6^2", "X_6^3", "X_7^1", "X_7^2", "X_7^3", "X_8^1", "X_8^2", "X_8^3", "X_9^1", "X_9^2", "X_9^3"},
          {
              {-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0},
              {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
              {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1},
              {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
          },
      },
      {
          "d1_K_33",
          {"X_1^1", "X_1^2", "X_1^3", "X_2^1", "X_2^2", "X_2^3", "X_3^1", "X_3^2", "X_3^3", "X_4^1", "X_4^2", "X_4^3", "X_5^1", "X_5^2", "X_5^3", "X_6^1", "X_6^2", "X_6^3", "X_7^1", "X_7^2", "X_7^3", "X_8^1", "X_8^2", "X_8^3", "X_9^1", "X_9^2", "X_9^3"},
          {"Y_1", "Y_2", "Y_3", "Y_4", "Y_5", "Y_6", "Y_7", "Y_8", "Y_9"},
          {
              {1, 0, 0, -1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, -1, 1, 0, -1, 0, -1, 0, -1, 0, 0, 0},
              {0, 1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, -1, 0, -1, 1, 0, 0},
              {0, 0, 1, 0, 0, 0, -1, 1, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
              {0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0},
              {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
              {0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0, 0, 1},
              {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0},
          },
      },
  };
  return data;
}

}  // namespace fixtures
