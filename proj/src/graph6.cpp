#include "rainbow/graph6.hpp"

#include "rainbow/errors.hpp"

namespace rainbow {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw InputError("graph6: order " + std::to_string(n) + " needs the long header form");
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  // Upper triangle, column by column: x(0,1) x(0,2) x(1,2) x(0,3) ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty line");

  for (char ch : text) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) {
      throw InputError("graph6: byte " + std::to_string(b) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kGraph6MaxOrder) throw InputError("graph6: long-form order headers are not supported");
  if (n > Graph::kMaxOrder) {
    throw InputError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                     std::to_string(Graph::kMaxOrder));
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw InputError("graph6: expected " + std::to_string(1 + bytes) + " bytes for order " +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  }

  auto bit_at = [&](std::size_t k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    return (byte >> (5 - k % 6)) & 1;
  };
  for (std::size_t k = bits; k < bytes * 6; ++k) {
    if (bit_at(k)) throw InputError("graph6: nonzero padding bits");
  }

  std::vector<Graph::Row> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) {
        rows[i] |= Graph::Row{1} << j;
        rows[j] |= Graph::Row{1} << i;
      }
    }
  }
  return Graph::from_rows(n, rows);
}

}  // namespace rainbow
