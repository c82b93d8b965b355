#pragma once

// Word encoding of finite-support configurations: w = 0^M 1^N 0 u with
// |u| = (2M+1)(2N+1), where [-M, M] x [-N, N] holds the support and u lists
// the cells of that rectangle.
//
// The cell order of u is configurable. RowMajor (the default) lists rows from
// b = -N up to b = N, each row from a = -M to a = M, so cell (a, b) sits at
// index (2M+1)(b+N) + (a+M). ColumnMajor lists columns instead:
// index (2N+1)(a+M) + (b+N).
//
// The prefix parses uniquely: when N >= 1 the leading zero run has length M,
// and when N = 0 the word has length 3M + 2, which is shorter than any word
// with N >= 1 and the same leading run.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lifetrace/ca.hpp"

namespace lifetrace {

class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PayloadOrder { RowMajor, ColumnMajor };

struct EncodedConfig {
  int M = 0;
  int N = 0;
  std::vector<Symbol> word;
};

// Uses the least M, N with the support inside [-M, M] x [-N, N].
EncodedConfig encode_config(const FiniteConfig& y, PayloadOrder order = PayloadOrder::RowMajor);
FiniteConfig decode_config(const std::vector<Symbol>& word, int alphabet_size = 2,
                           PayloadOrder order = PayloadOrder::RowMajor);

// Words as digit strings ("0010..."); whitespace is ignored on input.
std::string word_to_string(const std::vector<Symbol>& word);
std::vector<Symbol> word_from_string(std::string_view text);

}  // namespace lifetrace
