#include "lifetrace/encoding.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace lifetrace {

namespace {

std::size_t payload_index(int a, int b, int M, int N, PayloadOrder order) {
  if (order == PayloadOrder::RowMajor) return std::size_t(2 * M + 1) * std::size_t(b + N) + std::size_t(a + M);
  return std::size_t(2 * N + 1) * std::size_t(a + M) + std::size_t(b + N);
}

std::size_t word_length(std::size_t M, std::size_t N) { return M + N + 1 + (2 * M + 1) * (2 * N + 1); }

}  // namespace

EncodedConfig encode_config(const FiniteConfig& y, PayloadOrder order) {
  EncodedConfig e;
  const Rect s = y.support_box();
  if (!s.empty()) {
    e.M = std::max(std::abs(s.x), std::abs(s.x_end() - 1));
    e.N = std::max(std::abs(s.y), std::abs(s.y_end() - 1));
  }
  e.word.assign(std::size_t(e.M), 0);
  e.word.insert(e.word.end(), std::size_t(e.N), 1);
  e.word.push_back(0);
  const std::size_t start = e.word.size();
  e.word.resize(word_length(std::size_t(e.M), std::size_t(e.N)), 0);
  for (int b = -e.N; b <= e.N; ++b)
    for (int a = -e.M; a <= e.M; ++a) e.word[start + payload_index(a, b, e.M, e.N, order)] = y.at(a, b);
  return e;
}

FiniteConfig decode_config(const std::vector<Symbol>& word, int alphabet_size, PayloadOrder order) {
  if (word.empty()) throw EncodingError("empty word");
  for (Symbol s : word)
    if (int(s) >= alphabet_size) throw EncodingError("symbol outside the alphabet");
  std::size_t zeros = 0;
  while (zeros < word.size() && word[zeros] == 0) ++zeros;
  std::size_t ones = 0;
  while (zeros + ones < word.size() && word[zeros + ones] == 1) ++ones;

  std::size_t M = 0, N = 0;
  bool found = false;
  if (ones > 0 && zeros + ones < word.size() && word[zeros + ones] == 0 &&
      word.size() == word_length(zeros, ones)) {
    M = zeros;
    N = ones;
    found = true;
  } else if (word.size() >= 2 && (word.size() - 2) % 3 == 0) {
    const std::size_t m = (word.size() - 2) / 3;
    if (zeros >= m + 1) {
      M = m;
      N = 0;
      found = true;
    }
  }
  if (!found) {
    if (ones == 0 && zeros == 0) throw EncodingError("malformed prefix: word must start with 0^M 1^N 0");
    throw EncodingError("payload length does not match the prefix");
  }
  const std::size_t start = M + N + 1;
  const int m = int(M), n = int(N);
  Pattern p(Rect{-m, -n, 2 * m + 1, 2 * n + 1});
  for (int b = -n; b <= n; ++b)
    for (int a = -m; a <= m; ++a) p.set(a, b, word[start + payload_index(a, b, m, n, order)]);
  return FiniteConfig(p);
}

std::string word_to_string(const std::vector<Symbol>& word) {
  std::string s;
  s.reserve(word.size());
  for (Symbol v : word) s.push_back(char('0' + v));
  return s;
}

std::vector<Symbol> word_from_string(std::string_view text) {
  std::vector<Symbol> w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch < '0' || ch > '9') throw EncodingError(std::string("unexpected character '") + ch + "' in word");
    w.push_back(Symbol(ch - '0'));
  }
  return w;
}

}  // namespace lifetrace
