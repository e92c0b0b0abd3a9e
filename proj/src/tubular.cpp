#include "braids/tubular.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "braids/garside.hpp"

namespace braids {

std::vector<TubularStrand> tubular_strands_of(const CurveSystem& c) {
  std::vector<TubularStrand> out;
  int at = 1;
  size_t k = 0;
  const auto& circles = c.circles();
  while (at <= c.punctures()) {
    if (k < circles.size() && circles[k].a == at) {
      out.push_back({true, circles[k].b - circles[k].a + 1});
      at = circles[k].b + 1;
      ++k;
    } else {
      out.push_back({false, 1});
      ++at;
    }
  }
  return out;
}

TubularDecomposition::TubularDecomposition(int n, CurveSystem curves, BraidWord tubular,
                                           std::vector<BraidWord> interiors)
    : n_(n), curves_(std::move(curves)), tubular_(std::move(tubular)),
      interiors_(std::move(interiors)) {
  if (curves_.punctures() != n_)
    throw std::invalid_argument("curve system puncture count differs from ambient strands");
  strands_ = tubular_strands_of(curves_);
  const int m = static_cast<int>(strands_.size());
  if (m < 2) throw std::invalid_argument("tubular braid needs at least two strands");
  if (tubular_.strands() != m)
    throw std::invalid_argument("tubular braid has wrong strand count");
  for (int u = 1; u <= m; ++u)
    if (strands_[static_cast<size_t>(u - 1)].is_circle) circle_positions_.push_back(u);
  if (interiors_.size() != circle_positions_.size())
    throw std::invalid_argument("one interior braid per circle required");
  for (size_t i = 0; i < circle_positions_.size(); ++i) {
    int sz = strands_[static_cast<size_t>(circle_positions_[i] - 1)].size;
    if (interiors_[i].strands() != sz)
      throw std::invalid_argument("interior braid strand count differs from circle size");
  }
  Permutation motion = motion_permutation(tubular_);
  for (int u = 1; u <= m; ++u) {
    const TubularStrand& src = strands_[static_cast<size_t>(u - 1)];
    const TubularStrand& dst = strands_[static_cast<size_t>(motion.image_one_based(u) - 1)];
    if (src.is_circle != dst.is_circle || src.size != dst.size)
      throw std::invalid_argument("tubular braid does not preserve the circle structure");
  }
}

const BraidWord& TubularDecomposition::interior_at(int position) const {
  auto it = std::lower_bound(circle_positions_.begin(), circle_positions_.end(), position);
  if (it == circle_positions_.end() || *it != position)
    throw std::invalid_argument("no circle at tubular position " + std::to_string(position));
  return interiors_[static_cast<size_t>(it - circle_positions_.begin())];
}

int TubularDecomposition::block_offset(int position) const {
  int o = 0;
  for (int u = 1; u < position; ++u) o += strands_[static_cast<size_t>(u - 1)].size;
  return o;
}

TubularDecomposition make_decomposition(int n, const CurveSystem& curves,
                                        const BraidWord& tubular,
                                        const std::vector<BraidWord>& interiors) {
  return TubularDecomposition(n, curves, tubular, interiors);
}

TubularDecomposition identity_decomposition(int n, const CurveSystem& curves) {
  std::vector<TubularStrand> strands = tubular_strands_of(curves);
  std::vector<BraidWord> interiors;
  for (const auto& s : strands)
    if (s.is_circle) interiors.emplace_back(s.size);
  return TubularDecomposition(n, curves, BraidWord(static_cast<int>(strands.size())),
                              std::move(interiors));
}

namespace {

// Strand motion of the rigid crossing of adjacent blocks of sizes p, q at
// ambient offset o (0-based): the left block ends up after the right one.
Permutation block_swap_motion(int n, int o, int p, int q) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  for (int t = 0; t < p; ++t) img[static_cast<size_t>(o + t)] = o + q + t;
  for (int t = 0; t < q; ++t) img[static_cast<size_t>(o + p + t)] = o + t;
  return Permutation(std::move(img));
}

std::vector<int> shifted_letters(const BraidWord& w, int offset) {
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int l : w.letters()) out.push_back(l > 0 ? l + offset : l - offset);
  return out;
}

}  // namespace

BraidWord embed(const TubularDecomposition& d) {
  const int n = d.ambient_strands();
  std::vector<int> letters;
  for (size_t i = 0; i < d.circle_positions().size(); ++i) {
    int u = d.circle_positions()[i];
    auto part = shifted_letters(d.interiors()[i], d.block_offset(u));
    letters.insert(letters.end(), part.begin(), part.end());
  }
  std::vector<TubularStrand> layout = d.strands();
  for (int l : d.tubular().letters()) {
    int j = l < 0 ? -l : l;
    int o = 0;
    for (int u = 0; u + 1 < j; ++u) o += layout[static_cast<size_t>(u)].size;
    int p = layout[static_cast<size_t>(j - 1)].size;
    int q = layout[static_cast<size_t>(j)].size;
    // A negative crossing is the inverse of the swap read backwards, so the
    // block sizes trade places in its motion.
    BraidWord cross = l > 0 ? simple_word(block_swap_motion(n, o, p, q))
                            : inverse(simple_word(block_swap_motion(n, o, q, p)));
    letters.insert(letters.end(), cross.letters().begin(), cross.letters().end());
    std::swap(layout[static_cast<size_t>(j - 1)], layout[static_cast<size_t>(j)]);
  }
  return BraidWord(n, std::move(letters));
}

TubularDecomposition dec_product(const TubularDecomposition& a, const TubularDecomposition& b) {
  if (a.ambient_strands() != b.ambient_strands() || !(a.curves() == b.curves()))
    throw std::invalid_argument("decompositions live over different curve systems");
  BraidWord tubular = multiply(a.tubular(), b.tubular());
  Permutation motion = motion_permutation(a.tubular());
  std::vector<BraidWord> interiors;
  interiors.reserve(a.circle_positions().size());
  for (int u : a.circle_positions())
    interiors.push_back(multiply(a.interior_at(u), b.interior_at(motion.image_one_based(u))));
  return TubularDecomposition(a.ambient_strands(), a.curves(), tubular, std::move(interiors));
}

TubularDecomposition dec_inverse(const TubularDecomposition& d) {
  BraidWord tubular = inverse(d.tubular());
  Permutation motion = motion_permutation(d.tubular());
  std::map<int, BraidWord> at;
  for (int u : d.circle_positions()) at[motion.image_one_based(u)] = inverse(d.interior_at(u));
  std::vector<BraidWord> interiors;
  for (int v : d.circle_positions()) interiors.push_back(at.at(v));
  return TubularDecomposition(d.ambient_strands(), d.curves(), tubular, std::move(interiors));
}

TubularDecomposition dec_power(const TubularDecomposition& d, long long k) {
  TubularDecomposition base = k < 0 ? dec_inverse(d) : d;
  long long reps = k < 0 ? -k : k;
  TubularDecomposition acc = identity_decomposition(d.ambient_strands(), d.curves());
  for (long long i = 0; i < reps; ++i) acc = dec_product(acc, base);
  return acc;
}

OrbitStructure orbits(const TubularDecomposition& d) {
  Permutation motion = motion_permutation(d.tubular());
  OrbitStructure out;
  std::vector<char> seen(static_cast<size_t>(d.tubular_strands() + 1), 0);
  for (int u : d.circle_positions()) {
    if (seen[static_cast<size_t>(u)]) continue;
    std::vector<int> orbit;
    int v = u;
    while (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = 1;
      orbit.push_back(v);
      v = motion.image_one_based(v);
    }
    // rotate so the largest position is last
    auto mx = std::max_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), mx + 1 == orbit.end() ? orbit.begin() : mx + 1, orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& x, const auto& y) {
              return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
            });
  return out;
}

namespace {

struct Slot {
  int block;   // original block position 1..m
  int member;  // index of the strand within its block
};

}  // namespace

TubularDecomposition extract(const BraidWord& w, const CurveSystem& curves) {
  const int n = w.strands();
  if (curves.punctures() != n)
    throw std::invalid_argument("curve system puncture count differs from word strands");
  std::vector<TubularStrand> strands = tubular_strands_of(curves);
  const int m = static_cast<int>(strands.size());

  std::vector<int> layout(static_cast<size_t>(m));  // current order of original block ids
  std::vector<Slot> slot(static_cast<size_t>(n));
  {
    int at = 0;
    for (int u = 1; u <= m; ++u) {
      layout[static_cast<size_t>(u - 1)] = u;
      for (int t = 0; t < strands[static_cast<size_t>(u - 1)].size; ++t)
        slot[static_cast<size_t>(at++)] = {u, t};
    }
  }
  auto block_size = [&](int id) { return strands[static_cast<size_t>(id - 1)].size; };
  auto layout_index = [&](int id) {
    for (int j = 0; j < m; ++j)
      if (layout[static_cast<size_t>(j)] == id) return j;
    throw std::logic_error("block missing from layout");
  };
  auto block_start = [&](int id) {
    int j = layout_index(id);
    int o = 0;
    for (int k = 0; k < j; ++k) o += block_size(layout[static_cast<size_t>(k)]);
    return o;  // 0-based ambient offset
  };

  std::map<int, std::vector<int>> interior_letters;
  std::vector<int> tubular_letters;

  struct Unit {
    bool open = false;
    int left = 0, right = 0;  // block ids
    int sign = 1;
    int opened_at = 0;
    int window_lo = 0, window_hi = 0;  // 0-based slot range
    std::vector<char> crossed;         // p x q
    std::vector<int> left_seq, right_seq;  // member order when the unit opened
    int count = 0, total = 0;
  } unit;

  const auto& ls = w.letters();
  for (size_t idx = 0; idx < ls.size(); ++idx) {
    const int letter = ls[idx];
    const int a = (letter < 0 ? -letter : letter) - 1;  // 0-based left slot
    const int sgn = letter < 0 ? -1 : 1;
    const int report = static_cast<int>(idx) + 1;
    Slot L = slot[static_cast<size_t>(a)];
    Slot R = slot[static_cast<size_t>(a + 1)];

    if (!unit.open && L.block == R.block) {
      int local = a - block_start(L.block);
      interior_letters[L.block].push_back(sgn * (local + 1));
      std::swap(slot[static_cast<size_t>(a)], slot[static_cast<size_t>(a + 1)]);
      continue;
    }

    if (!unit.open) {
      int j = layout_index(L.block);
      if (j + 1 >= m || layout[static_cast<size_t>(j + 1)] != R.block)
        throw ExtractError("letter crosses non-adjacent tubes", report);
      unit.open = true;
      unit.left = L.block;
      unit.right = R.block;
      unit.sign = sgn;
      unit.opened_at = report;
      unit.window_lo = block_start(L.block);
      unit.window_hi = unit.window_lo + block_size(L.block) + block_size(R.block) - 1;
      unit.total = block_size(L.block) * block_size(R.block);
      unit.crossed.assign(static_cast<size_t>(unit.total), 0);
      unit.count = 0;
      unit.left_seq.clear();
      unit.right_seq.clear();
      for (int t = 0; t < block_size(L.block); ++t)
        unit.left_seq.push_back(slot[static_cast<size_t>(unit.window_lo + t)].member);
      for (int t = 0; t < block_size(R.block); ++t)
        unit.right_seq.push_back(
            slot[static_cast<size_t>(unit.window_lo + block_size(L.block) + t)].member);
    }

    if (a < unit.window_lo || a + 1 > unit.window_hi)
      throw ExtractError("letter outside the open tube crossing", report);
    if (sgn != unit.sign)
      throw ExtractError("crossing sign flips inside a tube crossing", report);
    if (L.block == R.block)
      throw ExtractError("interior letter inside a tube crossing", report);
    if (L.block != unit.left || R.block != unit.right)
      throw ExtractError("letter crosses a tube boundary", report);
    size_t pair = static_cast<size_t>(L.member * block_size(unit.right) + R.member);
    if (unit.crossed[pair])
      throw ExtractError("tube strands cross twice", report);
    unit.crossed[pair] = 1;
    unit.count += 1;
    std::swap(slot[static_cast<size_t>(a)], slot[static_cast<size_t>(a + 1)]);

    if (unit.count == unit.total) {
      // rigid swap finished; members must sit in original order on each side
      int o = unit.window_lo;
      int q = block_size(unit.right), p = block_size(unit.left);
      for (int t = 0; t < q; ++t) {
        Slot s = slot[static_cast<size_t>(o + t)];
        if (s.block != unit.right || s.member != unit.right_seq[static_cast<size_t>(t)])
          throw ExtractError("tube not rigid across the crossing", report);
      }
      for (int t = 0; t < p; ++t) {
        Slot s = slot[static_cast<size_t>(o + q + t)];
        if (s.block != unit.left || s.member != unit.left_seq[static_cast<size_t>(t)])
          throw ExtractError("tube not rigid across the crossing", report);
      }
      int j = layout_index(unit.left);
      tubular_letters.push_back(unit.sign * (j + 1));
      std::swap(layout[static_cast<size_t>(j)], layout[static_cast<size_t>(j + 1)]);
      unit.open = false;
    }
  }
  if (unit.open)
    throw ExtractError("incomplete tube crossing", unit.opened_at);

  // final arrangement must preserve the circle structure positionally
  {
    int at = 0;
    for (int u = 1; u <= m; ++u) {
      int id = layout[static_cast<size_t>(u - 1)];
      if (strands[static_cast<size_t>(id - 1)].size != strands[static_cast<size_t>(u - 1)].size ||
          strands[static_cast<size_t>(id - 1)].is_circle !=
              strands[static_cast<size_t>(u - 1)].is_circle)
        throw ExtractError("word does not preserve the curve system", 0);
      at += strands[static_cast<size_t>(u - 1)].size;
    }
    (void)at;
  }

  std::vector<BraidWord> interiors;
  for (int u = 1; u <= m; ++u) {
    if (!strands[static_cast<size_t>(u - 1)].is_circle) continue;
    auto it = interior_letters.find(u);
    interiors.emplace_back(strands[static_cast<size_t>(u - 1)].size,
                           it == interior_letters.end() ? std::vector<int>{} : it->second);
  }
  return TubularDecomposition(n, curves, BraidWord(m, tubular_letters), std::move(interiors));
}

std::string format_decomposition(const TubularDecomposition& d) {
  std::ostringstream os;
  os << format_curves(d.curves()) << "\n";
  os << "tubular: " << format_word(d.tubular()) << "\n";
  for (size_t i = 0; i < d.circle_positions().size(); ++i)
    os << "interior[" << d.circle_positions()[i] << "]: " << format_word(d.interiors()[i])
       << "\n";
  return os.str();
}

TubularDecomposition parse_decomposition(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty decomposition text");
  CurveSystem curves = parse_curves(line);
  std::vector<TubularStrand> strands = tubular_strands_of(curves);
  const int m = static_cast<int>(strands.size());
  std::optional<BraidWord> tubular;
  std::map<int, BraidWord> interiors;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed decomposition line");
    std::string head = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    if (head == "tubular") {
      tubular = parse_word(rest, m);
    } else if (head.rfind("interior[", 0) == 0) {
      size_t close = head.find(']');
      int u = std::stoi(head.substr(9, close - 9));
      if (u < 1 || u > m || !strands[static_cast<size_t>(u - 1)].is_circle)
        throw std::invalid_argument("interior index is not a circle position");
      interiors.emplace(u, parse_word(rest, strands[static_cast<size_t>(u - 1)].size));
    } else {
      throw std::invalid_argument("unknown decomposition line: " + head);
    }
  }
  if (!tubular) throw std::invalid_argument("missing tubular line");
  std::vector<BraidWord> ordered;
  for (int u = 1; u <= m; ++u) {
    if (!strands[static_cast<size_t>(u - 1)].is_circle) continue;
    auto it = interiors.find(u);
    ordered.push_back(it != interiors.end() ? it->second
                                            : BraidWord(strands[static_cast<size_t>(u - 1)].size));
  }
  return TubularDecomposition(curves.punctures(), curves, *tubular, std::move(ordered));
}

}  // namespace braids
