#include "doctest.h"
#include "boxball.hpp"

using namespace bbrc;

namespace {

BoxBallState parse_cells(const std::string& line, int n) {
  std::vector<int> cells;
  for (char ch : line) cells.push_back(ch == '.' ? 1 : ch - '0');
  return BoxBallState(std::move(cells), n);
}

const char* kEvolution[8] = {
    ".332...42...4.................",
    "....332..42..4................",
    ".......332.42.4...............",
    "..........33.4242.............",
    "............33.2.442..........",
    "..............3.32..442.......",
    "...............3..32...442....",
    "................3...32....442.",
};

}  // namespace

TEST_CASE("elementary ball moves") {
  CHECK(ball_move_K(parse_cells("22..", 2), 2).render() == "..22");
  // no letter a: unchanged
  CHECK(ball_move_K(parse_cells(".22.", 3), 3).render() == ".22.");
  // tail grows when a ball has no room
  CHECK(ball_move_K(parse_cells(".2", 2), 2).render() == "..2");
}

TEST_CASE("K_4 K_3 K_2 reproduces one time step") {
  BoxBallState s = parse_cells(kEvolution[0], 4);
  s = ball_move_K(std::move(s), 4);
  s = ball_move_K(std::move(s), 3);
  s = ball_move_K(std::move(s), 2);
  CHECK(s.render() == kEvolution[1]);
}

TEST_CASE("golden evolution display") {
  BoxBallState s = parse_cells(kEvolution[0], 4);
  CHECK(s.render() == kEvolution[0]);
  for (int t = 1; t < 8; ++t) {
    s = evolve_T1inf(std::move(s));
    CHECK(s.render() == kEvolution[t]);
  }
}

TEST_CASE("empty state is a fixed point") {
  BoxBallState s = parse_cells("......", 3);
  CHECK(evolve_T1inf(s).render() == s.render());
  auto [q, rec] = evolve_Trs(to_tensor(s), 1, 2);
  CHECK(concatenated_cells(q).render() == s.render());
  for (const auto& u : rec.carriers) CHECK(u == highest_weight_element(1, 2, 3));
}

TEST_CASE("T^{1,l} with large l matches K-operator evolution") {
  BoxBallState s = parse_cells(kEvolution[0], 4);
  long long balls = s.ball_count();
  for (int t = 1; t < 8; ++t) {
    auto evolved = evolve_Trs(to_tensor(s), 1, static_cast<int>(balls)).first;
    s = evolve_T1inf(std::move(s));
    CHECK(concatenated_cells(evolved).render() == s.render());
  }
}

TEST_CASE("single ball free propagation under T^{1,1}") {
  TensorElement p = TensorElement::from_words({{2}, {1}, {1}}, 2);
  auto q = evolve_Trs(p, 1, 1).first;
  CHECK(q == TensorElement::from_words({{1}, {2}, {1}}, 2));
}

TEST_CASE("ball count is conserved") {
  BoxBallState s = parse_cells(".3322.2...", 4);
  for (int a = 2; a <= 4; ++a) CHECK(ball_move_K(s, a).ball_count() == s.ball_count());
  CHECK(evolve_T1inf(s).ball_count() == s.ball_count());
  auto q = evolve_Trs(to_tensor(s), 2, 1).first;
  CHECK(concatenated_cells(q).ball_count() == s.ball_count());
}

TEST_CASE("time evolutions commute") {
  TensorElement p = TensorElement::from_words({{2, 3}, {1, 2}, {1}, {2}}, 4);
  for (auto [r1, s1] : {std::pair{1, 1}, {1, 3}, {2, 1}, {3, 2}}) {
    for (auto [r2, s2] : {std::pair{1, 2}, {2, 2}, {3, 1}}) {
      auto a = evolve_Trs(evolve_Trs(p, r1, s1).first, r2, s2).first;
      auto b = evolve_Trs(evolve_Trs(p, r2, s2).first, r1, s1).first;
      CHECK(a == b);
    }
  }
}

TEST_CASE("energies") {
  // n=3, m=3 path written as 1^a 2^b 3^c factors with
  // {a..i} = {0,1,0, 2,3,1, 3,3,4}
  TensorElement p = TensorElement::from_words(
      {{2}, {1, 1, 2, 2, 2, 3}, {1, 1, 1, 2, 2, 2, 3, 3, 3, 3}}, 3);
  CHECK(energy_Ers(p, 1, 1) == 2);
  CHECK(energy_Ers(p, 1, 12) == 12);
  TensorElement vacuum = TensorElement::from_words({{1, 1}, {1}}, 3);
  CHECK(energy_Ers(vacuum, 1, 1) == 0);
  CHECK(energy_Ers(vacuum, 2, 3) == 0);
}

TEST_CASE("asymptotic solitons") {
  auto got = asymptotic_solitons(to_tensor(parse_cells(kEvolution[0], 4)));
  REQUIRE(got.size() == 3);
  CHECK(got[0] == Word{3});
  CHECK(got[1] == Word{3, 2});
  CHECK(got[2] == Word{4, 4, 2});

  auto single = asymptotic_solitons(to_tensor(parse_cells("..2.", 2)));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Word{2});

  CHECK(asymptotic_solitons(to_tensor(parse_cells("....", 2))).empty());
}
