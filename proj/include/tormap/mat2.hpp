#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tormap {

// Column vector in the translation basis.
struct Vec2 {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator*(long long s, Vec2 v) { return {s * v.x, s * v.y}; }
};

// 2x2 integer matrix.  Row-major fields: first row (a, c), second row (b, d).
// The columns are the lattice generators gamma = (a, b) and delta = (c, d).
struct Mat2 {
  long long a = 1, c = 0;
  long long b = 0, d = 1;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

  long long det() const { return a * d - b * c; }

  Vec2 col1() const { return {a, b}; }
  Vec2 col2() const { return {c, d}; }

  Vec2 apply(Vec2 v) const { return {a * v.x + c * v.y, b * v.x + d * v.y}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.c * n.b, m.a * n.c + m.c * n.d,
            m.b * n.a + m.d * n.b, m.b * n.c + m.d * n.d};
  }
  friend Mat2 operator*(long long s, const Mat2& m) {
    return {s * m.a, s * m.c, s * m.b, s * m.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend bool operator<(const Mat2& m, const Mat2& n) {
    return std::tie(m.a, m.c, m.b, m.d) < std::tie(n.a, n.c, n.b, n.d);
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << "," << m.c << "],[" << m.b << "," << m.d
              << "]]";
  }
};

inline long long det(const Mat2& m) { return m.det(); }

// Serialization used throughout the CLI: row-major "a,c,b,d".
inline std::string to_csv(const Mat2& m) {
  return std::to_string(m.a) + "," + std::to_string(m.c) + "," +
         std::to_string(m.b) + "," + std::to_string(m.d);
}

inline Mat2 mat2_from_csv(const std::string& s) {
  std::array<long long, 4> e{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t used = 0;
    e[i] = std::stoll(s.substr(pos), &used);
    pos += used;
    if (i < 3) {
      if (pos >= s.size() || s[pos] != ',')
        throw std::invalid_argument("matrix must be 'a,c,b,d': " + s);
      ++pos;
    }
  }
  if (pos != s.size())
    throw std::invalid_argument("matrix must be 'a,c,b,d': " + s);
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace tormap
