#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "uep/error.hpp"
#include "uep/word.hpp"

namespace uep {

/// Per-level minimum distance; kUnbounded marks a level with a single
/// message, where no pair of codewords differs.
using Distance = unsigned;
inline constexpr Distance kUnbounded = std::numeric_limits<Distance>::max();

using MessageTuple = std::vector<std::size_t>;

/// Codebook of an (A_1..A_m) UEP code. Codewords are stored in mixed-radix
/// message order with a_1 most significant.
struct UepCode {
  unsigned n = 0;
  std::vector<std::size_t> shape;
  std::vector<Word> book;
  std::vector<Distance> profile;  // as claimed; verify_profile recomputes it

  std::size_t size() const { return book.size(); }

  std::size_t index_of(const MessageTuple& msg) const {
    require(msg.size() == shape.size(), "message tuple has wrong arity");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      require(msg[i] < shape[i], "message coordinate out of range");
      idx = idx * shape[i] + msg[i];
    }
    return idx;
  }

  MessageTuple message_of(std::size_t idx) const {
    MessageTuple msg(shape.size());
    for (std::size_t i = shape.size(); i-- > 0;) {
      msg[i] = idx % shape[i];
      idx /= shape[i];
    }
    return msg;
  }

  const Word& at(const MessageTuple& msg) const { return book.at(index_of(msg)); }
};

inline std::size_t shape_total(const std::vector<std::size_t>& shape) {
  std::size_t total = 1;
  for (auto a : shape) {
    require(a >= 1, "shape entries must be >= 1");
    require(total <= std::numeric_limits<std::size_t>::max() / a, "shape too large");
    total *= a;
  }
  return total;
}

/// Exact distance profile: for each level i, the minimum Hamming distance
/// over codeword pairs whose i-th message coordinates differ. Quadratic in
/// the code size.
inline std::vector<Distance> verify_profile(const UepCode& code) {
  require(code.size() >= 2, "verify_profile: code needs at least two codewords");
  require(code.size() == shape_total(code.shape), "verify_profile: book size does not match shape");
  const std::size_t m = code.shape.size();
  std::vector<Distance> best(m, kUnbounded);
  std::vector<MessageTuple> msgs(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) msgs[i] = code.message_of(i);

  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const auto d = static_cast<Distance>(hamming_distance(code.book[i], code.book[j]));
      for (std::size_t l = 0; l < m; ++l)
        if (msgs[i][l] != msgs[j][l] && d < best[l]) best[l] = d;
    }
  }
  return best;
}

/// True when every achieved distance meets the requested one.
inline bool profile_satisfies(const std::vector<Distance>& achieved, const std::vector<Distance>& required) {
  if (achieved.size() != required.size()) return false;
  for (std::size_t i = 0; i < achieved.size(); ++i)
    if (achieved[i] < required[i]) return false;
  return true;
}

inline std::string distance_str(Distance d) { return d == kUnbounded ? "inf" : std::to_string(d); }

namespace detail {

template <class T, class Fmt>
std::string join(const std::vector<T>& xs, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += fmt(xs[i]);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

inline std::size_t parse_size(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    fail(ErrorKind::kMalformedInput, "expected a nonnegative integer, got '" + s + "'");
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::out_of_range&) {
    fail(ErrorKind::kMalformedInput, "integer out of range: " + s);
  }
}

inline Distance parse_distance(const std::string& s) {
  if (s == "inf") return kUnbounded;
  const auto v = parse_size(s);
  if (v >= kUnbounded) fail(ErrorKind::kMalformedInput, "distance out of range: " + s);
  return static_cast<Distance>(v);
}

inline std::string expect_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) fail(ErrorKind::kMalformedInput, "codebook header: expected " + key + "=");
  return token.substr(key.size() + 1);
}

}  // namespace detail

/// Codebook text format:
///   uep v1 n=<n> shape=<A1,...,Am> profile=<d1,...,dm>
///   <a1,...,am>\t<n-character 0/1 word>      (one line per codeword)
inline void write_codebook(std::ostream& out, const UepCode& code) {
  const auto num = [](std::size_t x) { return std::to_string(x); };
  out << "uep v1 n=" << code.n << " shape=" << detail::join(code.shape, num)
      << " profile=" << detail::join(code.profile, distance_str) << '\n';
  for (std::size_t i = 0; i < code.size(); ++i)
    out << detail::join(code.message_of(i), num) << '\t' << code.book[i].str() << '\n';
}

inline UepCode read_codebook(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::kMalformedInput, "codebook: missing header");
  const auto head = detail::split(line, ' ');
  if (head.size() != 5 || head[0] != "uep" || head[1] != "v1")
    fail(ErrorKind::kMalformedInput, "codebook: header must read 'uep v1 n=.. shape=.. profile=..'");

  UepCode code;
  const auto n = detail::parse_size(detail::expect_field(head[2], "n"));
  if (n == 0 || n > Word::kMaxLength) fail(ErrorKind::kMalformedInput, "codebook: unsupported length");
  code.n = static_cast<unsigned>(n);
  for (const auto& s : detail::split(detail::expect_field(head[3], "shape"), ','))
    code.shape.push_back(detail::parse_size(s));
  for (const auto& s : detail::split(detail::expect_field(head[4], "profile"), ','))
    code.profile.push_back(detail::parse_distance(s));
  if (code.shape.empty() || code.profile.size() != code.shape.size())
    fail(ErrorKind::kMalformedInput, "codebook: shape and profile must have the same nonzero arity");
  for (auto a : code.shape)
    if (a == 0) fail(ErrorKind::kMalformedInput, "codebook: shape entries must be >= 1");

  const std::size_t total = shape_total(code.shape);
  code.book.assign(total, Word(code.n));
  std::vector<bool> seen(total, false);
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) fail(ErrorKind::kMalformedInput, "codebook: line without tab separator");
    MessageTuple msg;
    for (const auto& s : detail::split(line.substr(0, tab), ',')) msg.push_back(detail::parse_size(s));
    if (msg.size() != code.shape.size()) fail(ErrorKind::kMalformedInput, "codebook: message arity mismatch");
    for (std::size_t i = 0; i < msg.size(); ++i)
      if (msg[i] >= code.shape[i]) fail(ErrorKind::kMalformedInput, "codebook: message coordinate out of range");
    const Word w = Word::parse(line.substr(tab + 1));
    if (w.size() != code.n) fail(ErrorKind::kMalformedInput, "codebook: codeword length differs from n");
    const auto idx = code.index_of(msg);
    if (seen[idx]) fail(ErrorKind::kMalformedInput, "codebook: duplicate message tuple");
    seen[idx] = true;
    code.book[idx] = w;
    ++count;
  }
  if (count != total) fail(ErrorKind::kMalformedInput, "codebook: expected one line per message tuple");
  return code;
}

}  // namespace uep
