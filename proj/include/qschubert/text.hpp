#pragma once

// Text syntax for partitions and weights.
//
//   partition  "[2,2,1]", "[]"
//   weight     "(0,1,0)" or "w(0,1,0)"   fundamental coefficients c_1..c_{n-1}
//              "w_3", "2*w_1+w_3", "0"    sums of fundamental weights
//              "[2,1]"                    a partition, normalized for sl_n

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

inline int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last)
    throw ParseError("expected an integer in '" + std::string(context) + "', got '" + std::string(token) + "'");
  return value;
}

// "a,b,c" between the given delimiters.
inline std::vector<int> parse_int_list(std::string_view text, char open, char close) {
  if (text.size() < 2 || text.front() != open || text.back() != close)
    throw ParseError("expected '" + std::string(1, open) + "..." + std::string(1, close) + "', got '" +
                     std::string(text) + "'");
  std::vector<int> values;
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) return values;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    values.push_back(parse_int(body.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  try {
    return Partition(detail::parse_int_list(s, '[', ']'));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError("invalid partition '" + s + "': " + e.what());
  }
}

inline std::string format_partition(const Partition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

inline SlnWeight parse_weight(std::string_view text, int n) {
  std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty weight");
  try {
    if (s.front() == '[') return partition_to_weight(parse_partition(s), n);
    if (s.front() == 'w' && s.size() > 1 && s[1] == '(') s.erase(0, 1);
    if (s.front() == '(') return SlnWeight(n, detail::parse_int_list(s, '(', ')'));
    if (s == "0") return SlnWeight::zero(n);

    std::vector<int> coeffs(static_cast<std::size_t>(n - 1), 0);
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto plus = s.find('+', start);
      const std::string_view term = std::string_view(s).substr(start, plus - start);
      int mult = 1;
      std::string_view fundamental = term;
      if (const auto star = term.find('*'); star != std::string_view::npos) {
        mult = detail::parse_int(term.substr(0, star), s);
        fundamental = term.substr(star + 1);
      }
      if (fundamental.size() < 3 || fundamental.substr(0, 2) != "w_")
        throw ParseError("expected a term like 'a*w_i' in weight '" + s + "'");
      const int i = detail::parse_int(fundamental.substr(2), s);
      if (i < 0 || i > n) throw ParseError("fundamental weight index out of range in '" + s + "'");
      if (mult < 0) throw ParseError("negative multiplicity in weight '" + s + "'");
      if (i >= 1 && i <= n - 1) coeffs[static_cast<std::size_t>(i - 1)] += mult;
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    return SlnWeight(n, std::move(coeffs));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError("invalid weight '" + s + "': " + e.what());
  }
}

/// "(c_1,...,c_{n-1})".
inline std::string format_weight(const SlnWeight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.coeffs()[i]);
  }
  return out + ")";
}

}  // namespace qschubert
