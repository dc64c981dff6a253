#pragma once

// Built-in group definitions. Matrices are in a basis of the translation
// lattice (primitive cell); expected blocks list the finite part of the
// Reidemeister spectrum, with infinity left implicit.

#include <string_view>

namespace crysturn::data {

inline constexpr std::string_view kBuiltinCatalog = R"json(
[
  {"name": "1/1/1/1/1", "dimension": 1, "labels": {"bbnwz": "1/1/1/1/1", "it": "1/1", "carat": "min.1-1.1-0"}, "generators": [], "normalizer_generators": [[[-1]]], "expected": {"spectrum": "{2}", "r_infinity": false, "normaliser_order": 2, "bieberbach": true}},
  {"name": "infinite-dihedral", "dimension": 1, "labels": {"it": "1/2"}, "generators": [{"translation": ["0"], "matrix": [[-1]]}], "normalizer_generators": [[[-1]]], "expected": {"spectrum": "{}", "r_infinity": true, "normaliser_order": 2, "bieberbach": false}},
  {"name": "2/1/1/1/1", "dimension": 2, "labels": {"bbnwz": "2/1/1/1/1", "it": "2/1", "carat": "min.2-1.1-0"}, "generators": [], "normalizer_generators": [[[0, 1], [1, 0]], [[1, 1], [0, 1]], [[-1, 0], [0, 1]]], "expected": {"spectrum": "N", "r_infinity": false, "bieberbach": true}},
  {"name": "2/1/2/1/1", "dimension": 2, "labels": {"bbnwz": "2/1/2/1/1", "it": "2/2", "carat": "group.1-1.1-0"}, "generators": [{"translation": ["0", "0"], "matrix": [[-1, 0], [0, -1]]}], "normalizer_generators": [[[0, 1], [1, 0]], [[1, 1], [0, 1]], [[-1, 0], [0, 1]]], "expected": {"spectrum": "2N U {3}", "r_infinity": false, "bieberbach": false}},
  {"name": "2/4/1/1/1", "dimension": 2, "labels": {"bbnwz": "2/4/1/1/1", "it": "2/13", "carat": "min.5-1.1-0"}, "generators": [{"translation": ["0", "0"], "matrix": [[0, -1], [1, -1]]}], "normalizer_generators": [[[1, -1], [1, 0]], [[0, 1], [1, 0]]], "expected": {"spectrum": "{4}", "r_infinity": false, "normaliser_order": 12, "bieberbach": false}},
  {"name": "pg", "dimension": 2, "labels": {"it": "2/4"}, "generators": [{"translation": ["1/2", "0"], "matrix": [[1, 0], [0, -1]]}], "normalizer_generators": [[[-1, 0], [0, 1]], [[1, 0], [0, -1]]], "expected": {"spectrum": "{}", "r_infinity": true, "normaliser_order": 4, "bieberbach": true}},
  {"name": "3/1/1/1/1", "dimension": 3, "labels": {"bbnwz": "3/1/1/1/1", "it": "3/1", "carat": "min.6-1.1-0"}, "generators": [], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]], "expected": {"spectrum": "N", "r_infinity": false, "bieberbach": true}},
  {"name": "3/1/2/1/1", "dimension": 3, "labels": {"bbnwz": "3/1/2/1/1", "it": "3/2", "carat": "group.5-1.1-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]}], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]], "expected": {"spectrum": "N \\ {1}", "r_infinity": false, "bieberbach": false}},
  {"name": "3/2/1/1/1", "dimension": 3, "labels": {"bbnwz": "3/2/1/1/1", "it": "3/3", "carat": "min.7-1.1-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[1, 0, 0], [0, -1, 0], [0, 0, -1]]}], "normalizer_generators": [[[-1, 0, 0], [0, 0, 1], [0, 1, 0]], [[-1, 0, 0], [0, 1, 1], [0, 0, 1]], [[-1, 0, 0], [0, -1, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]], "expected": {"spectrum": "4N U {6}", "r_infinity": false, "bieberbach": false}},
  {"name": "3/2/1/1/2", "dimension": 3, "labels": {"bbnwz": "3/2/1/1/2", "it": "3/4", "carat": "min.7-1.1-1"}, "generators": [{"translation": ["0", "0", "1/2"], "matrix": [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]}], "normalizer_generators": [[[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, -1]]], "expected": {"spectrum": "2N", "r_infinity": false, "bieberbach": true}},
  {"name": "3/2/1/2/1", "dimension": 3, "labels": {"bbnwz": "3/2/1/2/1", "it": "3/5", "carat": "min.7-1.2-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[1, -1, 0], [0, -1, 0], [0, 0, -1]]}], "normalizer_generators": [[[-1, 0, 0], [0, -1, 0], [0, 0, -1]], [[-1, 1, 1], [0, 1, 2], [0, 1, 1]], [[1, 0, 0], [0, 1, 0], [0, 1, 1]], [[1, 0, 1], [0, 1, 2], [0, 0, 1]]], "expected": {"spectrum": "4N", "r_infinity": false, "bieberbach": false}},
  {"name": "3/3/1/1/1", "dimension": 3, "labels": {"bbnwz": "3/3/1/1/1", "it": "3/16", "carat": "min.10-1.1-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]}, {"translation": ["0", "0", "0"], "matrix": [[-1, 0, 0], [0, 1, 0], [0, 0, -1]]}], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]], "expected": {"spectrum": "{2}", "r_infinity": false, "normaliser_order": 48, "bieberbach": false}},
  {"name": "3/3/1/1/4", "dimension": 3, "labels": {"bbnwz": "3/3/1/1/4", "it": "3/19", "carat": "min.10-1.1-3"}, "generators": [{"translation": ["1/2", "0", "1/2"], "matrix": [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]}, {"translation": ["0", "1/2", "1/2"], "matrix": [[-1, 0, 0], [0, 1, 0], [0, 0, -1]]}], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]], "expected": {"spectrum": "{2}", "r_infinity": false, "normaliser_order": 48, "bieberbach": true}},
  {"name": "3/3/1/3/1", "dimension": 3, "labels": {"bbnwz": "3/3/1/3/1", "it": "3/22", "carat": "min.10-1.3-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[0, 1, 0], [1, 0, 0], [-1, -1, -1]]}, {"translation": ["0", "0", "0"], "matrix": [[0, 0, 1], [-1, -1, -1], [1, 0, 0]]}], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 1, 1], [0, 0, -1], [0, -1, 0]]], "expected": {"spectrum": "{2}", "r_infinity": false, "normaliser_order": 48, "bieberbach": false}},
  {"name": "3/3/1/4/1", "dimension": 3, "labels": {"bbnwz": "3/3/1/4/1", "it": "3/23", "carat": "min.10-1.4-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[0, 1, -1], [1, 0, -1], [0, 0, -1]]}, {"translation": ["0", "0", "0"], "matrix": [[0, -1, 1], [0, -1, 0], [1, -1, 0]]}], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 0, 0], [1, 0, -1], [1, -1, 0]]], "expected": {"spectrum": "{2}", "r_infinity": false, "normaliser_order": 48, "bieberbach": false}},
  {"name": "3/3/1/4/2", "dimension": 3, "labels": {"bbnwz": "3/3/1/4/2", "it": "3/24", "carat": "min.10-1.4-1"}, "generators": [{"translation": ["1/2", "0", "1/2"], "matrix": [[0, 1, -1], [1, 0, -1], [0, 0, -1]]}, {"translation": ["0", "1/2", "1/2"], "matrix": [[0, -1, 1], [0, -1, 0], [1, -1, 0]]}], "normalizer_generators": [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 0, 0], [1, 0, -1], [1, -1, 0]]], "expected": {"spectrum": "{2}", "r_infinity": false, "normaliser_order": 48, "bieberbach": false}},
  {"name": "3/5/1/1/1", "dimension": 3, "labels": {"bbnwz": "3/5/1/1/1", "it": "3/146", "carat": "min.13-1.2-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]}], "normalizer_generators": [[[-1, 0, 0], [0, -1, 0], [0, 0, -1]], [[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]]], "expected": {"spectrum": "{8}", "r_infinity": false, "normaliser_order": 12, "bieberbach": false}},
  {"name": "3/5/1/2/1", "dimension": 3, "labels": {"bbnwz": "3/5/1/2/1", "it": "3/143", "carat": "min.13-1.1-0"}, "generators": [{"translation": ["0", "0", "0"], "matrix": [[0, -1, 0], [1, -1, 0], [0, 0, 1]]}], "normalizer_generators": [[[1, -1, 0], [1, 0, 0], [0, 0, 1]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, -1]]], "expected": {"spectrum": "{8}", "r_infinity": false, "normaliser_order": 24, "bieberbach": false}},
  {"name": "4/3/1/1/1", "dimension": 4, "labels": {"bbnwz": "4/3/1/1/1", "carat": "min.18-1.1-0"}, "generators": [{"translation": ["0", "0", "0", "0"], "matrix": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]}], "normalizer_generators": [[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]], [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]], "expected": {"spectrum": "2N U 3N", "r_infinity": false, "bieberbach": false}},
  {"name": "4/9/2/1/1", "dimension": 4, "labels": {"bbnwz": "4/9/2/1/1", "carat": "group.182-1.1-0"}, "generators": [{"translation": ["0", "0", "0", "0"], "matrix": [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}, {"translation": ["0", "0", "0", "0"], "matrix": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, -1]]}], "normalizer_generators": [[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 0]], [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]], "expected": {"spectrum": "8N U {12}", "r_infinity": false, "bieberbach": false}}
]
)json";

}  // namespace crysturn::data
