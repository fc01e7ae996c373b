#pragma once

// Behaviour set of the soccer robot. Kept byte-identical to tables/soccer.tables
// (checked by the test suite).

#include <string_view>

namespace dnflogic::soccer {

inline constexpr std::string_view shipped_tables = R"tables({
  "sensors": [
    {"name": "s0", "source": "w9", "fn": "clamp", "min": 0, "max": 1},
    {"name": "s1", "source": "w9", "scale": -1, "fn": "clamp", "min": 0, "max": 1},
    {"name": "s2", "source": "w4", "fn": "map_range", "from": [0, 400], "to": [1, 0]},
    {"name": "s3", "source": "w10", "fn": "clamp", "min": 0, "max": 1},
    {"name": "s4", "source": "w10", "scale": -1, "fn": "clamp", "min": 0, "max": 1},
    {"name": "s5", "source": "w7", "fn": "passthrough"}
  ],
  "tables": [
    {
      "name": "drive_forward",
      "inputs": [{"name": "s0", "kind": "continuous"}],
      "rows": [
        {"m": [1.0], "o": 1.0}
      ]
    },
    {
      "name": "throw_ball",
      "inputs": [{"name": "s0", "kind": "continuous"}, {"name": "s2", "kind": "continuous"}, {"name": "s5", "kind": "continuous"}],
      "rows": [
        {"m": [1.0, 0.75, 1.0], "o": 1.0}
      ]
    },
    {
      "name": "turn_right",
      "inputs": [{"name": "s1", "kind": "continuous"}, {"name": "s3", "kind": "continuous"}],
      "rows": [
        {"m": ["UNK", 1.0], "o": 1.0},
        {"m": [1.0, 1.0], "o": 1.0}
      ]
    },
    {
      "name": "turn_left",
      "inputs": [{"name": "s1", "kind": "continuous"}, {"name": "s4", "kind": "continuous"}],
      "rows": [
        {"m": ["UNK", 1.0], "o": 1.0},
        {"m": [1.0, 1.0], "o": 1.0}
      ]
    },
    {
      "name": "target_x",
      "inputs": [{"name": "s5", "kind": "continuous"}],
      "rows": [
        {"m": [1.0], "o": "$w6.x"},
        {"m": [0.0], "o": "$w5.x"}
      ]
    },
    {
      "name": "target_y",
      "inputs": [{"name": "s5", "kind": "continuous"}],
      "rows": [
        {"m": [1.0], "o": "$w6.y"},
        {"m": [0.0], "o": "$w5.y"}
      ]
    }
  ]
}
)tables";

}  // namespace dnflogic::soccer
