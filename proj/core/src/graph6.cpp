#include "rtl/graph6.hpp"

namespace rtl {

namespace {
constexpr int kBias = 63;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  } else {
    throw std::invalid_argument("encode_graph6: order too large");
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col)
    for (int rowv = 0; rowv < col; ++rowv) {
      acc = (acc << 1) | (g.has_edge(rowv, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("decode_graph6: empty input", 0);
  std::size_t pos = 0;
  auto next6 = [&](const char* what) -> int {
    if (pos >= text.size()) throw Graph6Error(std::string("decode_graph6: truncated ") + what, pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw Graph6Error("decode_graph6: byte outside graph6 alphabet", pos);
    ++pos;
    return c - kBias;
  };

  long long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw Graph6Error("decode_graph6: orders above 258047 unsupported", pos);
    long long a = next6("order"), b = next6("order"), c = next6("order");
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next6("order");
  }

  Graph g(static_cast<int>(n));
  long long total_bits = n * (n - 1) / 2;
  int acc = 0, have = 0;
  long long bit = 0;
  for (int col = 1; col < n; ++col)
    for (int rowv = 0; rowv < col; ++rowv, ++bit) {
      if (have == 0) {
        acc = next6("bit body");
        have = 6;
      }
      if (acc & (1 << (have - 1))) g.add_edge(rowv, col);
      --have;
    }
  (void)total_bits;
  // Trailing padding bits must be zero and no extra bytes may follow.
  if (have > 0 && (acc & ((1 << have) - 1)) != 0)
    throw Graph6Error("decode_graph6: nonzero padding bits", pos - 1);
  if (pos != text.size()) throw Graph6Error("decode_graph6: trailing bytes", pos);
  return g;
}

}  // namespace rtl
