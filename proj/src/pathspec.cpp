#include "pathspec.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bbrc {

namespace {

[[noreturn]] void parse_fail(const std::string& what, size_t pos) {
  fail(errc::parse_error, what + " at position " + std::to_string(pos));
}

}  // namespace

PathSpec parse_path(const std::string& text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != 'n') parse_fail("expected 'n'", i);
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '=') parse_fail("expected '='", i);
  ++i;
  skip_ws();
  size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) parse_fail("expected the alphabet size", i);
  PathSpec spec;
  spec.n = std::stoi(text.substr(num_start, i - num_start));
  if (spec.n < 2) fail(errc::parse_error, "alphabet size must be >= 2");
  skip_ws();
  if (i >= text.size() || text[i] != ';') parse_fail("expected ';'", i);
  ++i;

  while (true) {
    skip_ws();
    size_t word_start = i;
    Word w;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      int letter = text[i] - '0';
      if (letter < 1 || letter > spec.n)
        fail(errc::alphabet_error, "letter " + std::to_string(letter) +
                                       " outside 1.." + std::to_string(spec.n) +
                                       " at position " + std::to_string(i));
      w.push_back(letter);
      ++i;
    }
    if (w.empty()) parse_fail("expected a word", word_start);
    if (!std::is_sorted(w.begin(), w.end()))
      fail(errc::not_weakly_increasing,
           "word starting at position " + std::to_string(word_start) +
               " is not weakly increasing");
    spec.factors.push_back(std::move(w));
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != ',') parse_fail("expected ',' or end of input", i);
    ++i;
  }
  return spec;
}

std::string format_path(const PathSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.n << "; ";
  for (size_t k = 0; k < spec.factors.size(); ++k) {
    if (k) os << ',';
    os << word_str(spec.factors[k]);
  }
  return os.str();
}

PathSpec path_spec_of(const TensorElement& p) {
  PathSpec spec;
  spec.n = p.n;
  for (const auto& f : p.factors) {
    require(f.one_row(), errc::invalid_argument, "path spec requires one-row factors");
    spec.factors.push_back(f.t.rows()[0]);
  }
  return spec;
}

TensorElement to_tensor(const PathSpec& spec) {
  return TensorElement::from_words(spec.factors, spec.n);
}

std::string render_cells_text(const TensorElement& p) {
  bool wide = false;
  for (const auto& f : p.factors) wide = wide || f.width() > 1;
  std::string out;
  for (int k = 0; k < p.size(); ++k) {
    if (wide && k) out += ',';
    for (int c : p.factors[k].t.rows()[0]) out += c == 1 ? '.' : static_cast<char>('0' + c);
  }
  return out;
}

std::string rc_to_json(const RiggedConfiguration& rc, const std::vector<int>* nu0_order) {
  nlohmann::json j;
  j["n"] = rc.n();
  if (nu0_order) {
    std::vector<int> sorted = *nu0_order;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    require(Partition(sorted) == rc.nu0(), errc::invalid_argument,
            "nu0 order does not match the configuration");
    j["nu0"] = *nu0_order;
  } else {
    j["nu0"] = rc.nu0().parts();
  }
  nlohmann::json strings = nlohmann::json::object();
  for (int a = 1; a <= rc.n() - 1; ++a) {
    nlohmann::json level = nlohmann::json::array();
    for (const auto& s : rc.strings(a)) level.push_back({s.length, s.rigging});
    strings[std::to_string(a)] = std::move(level);
  }
  j["strings"] = std::move(strings);
  return j.dump();
}

RiggedConfiguration rc_from_json(const std::string& text, std::vector<int>* nu0_order_out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  try {
    int n = j.at("n").get<int>();
    std::vector<int> nu0 = j.at("nu0").get<std::vector<int>>();
    if (nu0_order_out) *nu0_order_out = nu0;
    std::vector<std::vector<RcString>> strings(std::max(0, n - 1));
    if (j.contains("strings")) {
      for (const auto& [key, level] : j.at("strings").items()) {
        int a = std::stoi(key);
        require(a >= 1 && a <= n - 1, errc::parse_error,
                "string level " + key + " outside 1..n-1");
        for (const auto& pair : level) {
          require(pair.is_array() && pair.size() == 2, errc::parse_error,
                  "strings must be [length, rigging] pairs");
          strings[a - 1].push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
      }
    }
    return RiggedConfiguration::make(n, Partition(std::move(nu0)), std::move(strings));
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad rigged configuration JSON: ") + e.what());
  }
}

}  // namespace bbrc
