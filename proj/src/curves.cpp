#include "braids/curves.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace braids {

CurveSystem::CurveSystem(int punctures) : punctures_(punctures) {
  if (punctures < 2) throw std::invalid_argument("need at least two punctures");
}

CurveSystem::CurveSystem(int punctures, std::vector<Circle> circles)
    : punctures_(punctures), circles_(std::move(circles)) {
  if (punctures < 2) throw std::invalid_argument("need at least two punctures");
  std::sort(circles_.begin(), circles_.end());
  int prev_end = 0;
  for (const Circle& c : circles_) {
    if (c.a < 1 || c.b > punctures_) throw std::invalid_argument("circle out of range");
    if (c.a >= c.b) throw std::invalid_argument("circle must enclose at least two punctures");
    if (c.b - c.a + 1 > punctures_ - 1)
      throw std::invalid_argument("circle isotopic to the boundary");
    if (c.a <= prev_end) throw std::invalid_argument("circles overlap");
    prev_end = c.b;
  }
}

CurveSystem make_curves(int n, const std::vector<std::pair<int, int>>& intervals) {
  std::vector<Circle> circles;
  circles.reserve(intervals.size());
  for (auto [a, b] : intervals) circles.push_back({a, b});
  return CurveSystem(n, std::move(circles));
}

namespace {

// Crossing counts of a lamination in normal position: m[i] with the vertical
// line between punctures i+1 and i+2 (0-based gap i), u[j]/d[j] with the rays
// above and below puncture j+1 (0-based j). Boundary punctures always have
// u = d = half the adjacent gap count.
struct LamState {
  int n = 2;
  std::vector<long long> m;  // n-1 gaps
  std::vector<long long> u;  // n punctures
  std::vector<long long> d;  // n punctures
};

LamState state_from_curves(const CurveSystem& c) {
  LamState st;
  st.n = c.punctures();
  st.m.assign(static_cast<size_t>(st.n - 1), 0);
  st.u.assign(static_cast<size_t>(st.n), 0);
  st.d.assign(static_cast<size_t>(st.n), 0);
  for (const Circle& circ : c.circles()) {
    for (int i = circ.a; i <= circ.b - 1; ++i) st.m[static_cast<size_t>(i - 1)] += 2;
    for (int j = circ.a; j <= circ.b; ++j) {
      st.u[static_cast<size_t>(j - 1)] += 1;
      st.d[static_cast<size_t>(j - 1)] += 1;
    }
  }
  return st;
}

LaminationCoords state_to_coords(const LamState& st) {
  const int n = st.n;
  LaminationCoords coords(static_cast<size_t>(2 * n - 4), 0);
  for (int i = 1; i <= n - 2; ++i) {
    long long ud = st.u[static_cast<size_t>(i)] - st.d[static_cast<size_t>(i)];
    long long mm = st.m[static_cast<size_t>(i - 1)] - st.m[static_cast<size_t>(i)];
    assert(ud % 2 == 0 && mm % 2 == 0);
    coords[static_cast<size_t>(i - 1)] = ud / 2;
    coords[static_cast<size_t>(n - 2 + i - 1)] = mm / 2;
  }
  return coords;
}

// Any coordinate vector is realized after padding with enough curves parallel
// to the boundary; the padding shifts every count but no coordinate, and the
// updates commute with it.
LamState state_from_coords(int n, const LaminationCoords& coords) {
  if (static_cast<int>(coords.size()) != 2 * n - 4)
    throw std::invalid_argument("coordinate vector has wrong dimension");
  LamState st;
  st.n = n;
  long long mag = 2;
  for (long long v : coords) mag += (v < 0 ? -v : v);
  const long long base = 2 * mag;
  st.m.assign(static_cast<size_t>(n - 1), 0);
  st.u.assign(static_cast<size_t>(n), 0);
  st.d.assign(static_cast<size_t>(n), 0);
  st.m[static_cast<size_t>(n - 2)] = base;
  for (int i = n - 3; i >= 0; --i)
    st.m[static_cast<size_t>(i)] =
        st.m[static_cast<size_t>(i + 1)] + 2 * coords[static_cast<size_t>(n - 2 + i)];
  for (int j = 1; j <= n - 2; ++j) {
    long long half = std::max(st.m[static_cast<size_t>(j - 1)], st.m[static_cast<size_t>(j)]) / 2;
    st.u[static_cast<size_t>(j)] = half + coords[static_cast<size_t>(j - 1)];
    st.d[static_cast<size_t>(j)] = half - coords[static_cast<size_t>(j - 1)];
  }
  st.u[0] = st.d[0] = st.m[0] / 2;
  st.u[static_cast<size_t>(n - 1)] = st.d[static_cast<size_t>(n - 1)] =
      st.m[static_cast<size_t>(n - 2)] / 2;
  return st;
}

long long pos_max(long long a, long long b) { return a > b ? a : b; }

// Half twist swapping punctures i, i+1 (1-based), the left one passing below.
// Tropical Ptolemy exchanges on the local triangulation give the update; the
// inverse twist is its mirror image across the real axis.
void apply_generator(LamState& st, int i, bool inverse_twist) {
  const int n = st.n;
  size_t p1 = static_cast<size_t>(i - 1), p2 = static_cast<size_t>(i);
  long long l = i >= 2 ? st.m[static_cast<size_t>(i - 2)] : 0;
  long long r = i <= n - 2 ? st.m[static_cast<size_t>(i)] : 0;
  long long m = st.m[p1];
  long long u1 = st.u[p1], d1 = st.d[p1], u2 = st.u[p2], d2 = st.d[p2];
  if (inverse_twist) {
    std::swap(u1, d1);
    std::swap(u2, d2);
  }
  long long e = pos_max(u1 + d2, d1 + u2) - m;
  long long nu2 = pos_max(d1 + u2, e + r) - d2;
  long long nd1 = pos_max(l + e, d1 + u2) - u1;
  long long nm = pos_max(u2 + d1, nu2 + nd1) - e;
  long long nu1 = u2;
  long long nd2 = d1;
  if (inverse_twist) {
    std::swap(nu1, nd1);
    std::swap(nu2, nd2);
  }
  st.m[p1] = nm;
  st.u[p1] = nu1;
  st.d[p1] = nd1;
  st.u[p2] = nu2;
  st.d[p2] = nd2;
}

}  // namespace

LaminationCoords lamination_coords(const CurveSystem& c) {
  return state_to_coords(state_from_curves(c));
}

LaminationCoords apply_braid(const BraidWord& w, const LaminationCoords& coords) {
  const int n = w.strands();
  LamState st = state_from_coords(n, coords);
  for (int letter : w.letters()) {
    int i = letter < 0 ? -letter : letter;
    apply_generator(st, i, letter < 0);
  }
  return state_to_coords(st);
}

bool preserves(const BraidWord& w, const CurveSystem& c) {
  if (w.strands() != c.punctures())
    throw std::invalid_argument("strand count does not match puncture count");
  LaminationCoords x = lamination_coords(c);
  return apply_braid(w, x) == x;
}

std::optional<CurveSystem> decode_round_coords(int n, const LaminationCoords& coords) {
  if (static_cast<int>(coords.size()) != 2 * n - 4) return std::nullopt;
  for (int i = 0; i < n - 2; ++i)
    if (coords[static_cast<size_t>(i)] != 0) return std::nullopt;
  for (long long anchor : {0LL, 2LL}) {
    std::vector<long long> m(static_cast<size_t>(n - 1));
    m[static_cast<size_t>(n - 2)] = anchor;
    for (int i = n - 3; i >= 0; --i)
      m[static_cast<size_t>(i)] =
          m[static_cast<size_t>(i + 1)] + 2 * coords[static_cast<size_t>(n - 2 + i)];
    bool ok = true;
    for (long long v : m)
      if (v != 0 && v != 2) ok = false;
    if (!ok) continue;
    std::vector<Circle> circles;
    int i = 0;
    while (i < n - 1) {
      if (m[static_cast<size_t>(i)] == 2) {
        int j = i;
        while (j < n - 1 && m[static_cast<size_t>(j)] == 2) ++j;
        circles.push_back({i + 1, j + 1});
        i = j;
      } else {
        ++i;
      }
    }
    try {
      CurveSystem cand(n, std::move(circles));
      if (lamination_coords(cand) == coords) return cand;
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  return std::nullopt;
}

std::string format_curves(const CurveSystem& c) {
  std::ostringstream os;
  os << "n=" << c.punctures() << ";";
  for (size_t i = 0; i < c.circles().size(); ++i) {
    os << (i ? "," : " ") << '[' << c.circles()[i].a << '-' << c.circles()[i].b << ']';
  }
  return os.str();
}

CurveSystem parse_curves(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  std::getline(is, head, ';');
  size_t eq = head.find('=');
  if (eq == std::string::npos || head.substr(0, eq).find('n') == std::string::npos)
    throw std::invalid_argument("curve system must start with n=<int>;");
  int n = std::stoi(head.substr(eq + 1));
  std::vector<std::pair<int, int>> intervals;
  std::string rest;
  std::getline(is, rest);
  size_t pos = 0;
  while ((pos = rest.find('[', pos)) != std::string::npos) {
    size_t dash = rest.find('-', pos);
    size_t close = rest.find(']', pos);
    if (dash == std::string::npos || close == std::string::npos || dash > close)
      throw std::invalid_argument("malformed circle interval");
    int a = std::stoi(rest.substr(pos + 1, dash - pos - 1));
    int b = std::stoi(rest.substr(dash + 1, close - dash - 1));
    intervals.emplace_back(a, b);
    pos = close + 1;
  }
  return make_curves(n, intervals);
}

}  // namespace braids
