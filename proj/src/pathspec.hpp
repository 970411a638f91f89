#pragma once

#include <string>
#include <vector>

#include "rigged.hpp"

namespace bbrc {

// Text form of a one-row path: "n=<int>; <word>,<word>,..." with words like
// "1123" (letters are single digits, so the CLI handles n <= 9).
struct PathSpec {
  int n = 0;
  std::vector<Word> factors;  // leftmost factor first
};

PathSpec parse_path(const std::string& text);
std::string format_path(const PathSpec& spec);
PathSpec path_spec_of(const TensorElement& p);
TensorElement to_tensor(const PathSpec& spec);

// Cell view with '.' for the letter 1; factors joined by ',' when any factor
// is wider than one cell.
std::string render_cells_text(const TensorElement& p);

// {"n": int, "nu0": [int...], "strings": {"a": [[length, rigging], ...]}}.
// nu0_order, when given, overrides the order in which nu^{(0)} is listed.
std::string rc_to_json(const RiggedConfiguration& rc,
                       const std::vector<int>* nu0_order = nullptr);
RiggedConfiguration rc_from_json(const std::string& text,
                                 std::vector<int>* nu0_order_out = nullptr);

}  // namespace bbrc
