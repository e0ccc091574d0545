#include "kron22/chambers.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "kron22/checked_int.hpp"

namespace kron22 {

namespace {

// Coefficient columns (a_i, b_i) of the seven polygon constraint lines.
constexpr long long kA[7] = {1, 1, 1, 0, -1, -1, 1};
constexpr long long kB[7] = {0, 0, 1, 1, 1, -1, -1};

long long c_of(int i, const ReducedIndex& h) {
  switch (i) {
    case 0: return -h.s;
    case 1: return -h.r;
    case 2: return h.g1 - h.r - h.s;
    case 3: return 0;
    case 4: return h.g1 + h.g2;
    case 5: return h.r + h.s - h.g2;
    case 6: return -h.g1;
    default: throw std::invalid_argument("constraint line index out of range");
  }
}

void check_triple(int i, int j, int k) {
  if (i < 0 || i > 6 || j < 0 || j > 6 || k < 0 || k > 6)
    throw std::invalid_argument("triple_form: index out of range");
  if (i == j || i == k || j == k)
    throw std::invalid_argument("triple_form: indices must be distinct");
}

// The 26 side sets, and the wall graph edges between them.
const char* const kSides[26] = {
    "1245", "12456", "02456", "0245", "145",    "1456",   "0456",   "045",  "12345",
    "123456", "023456", "02345", "1345", "13456", "3456", "03456", "0345", "1235",
    "12356", "02356", "0235", "135", "1356", "356", "0356", "035"};

const char* const kEdges[][2] = {
    {"1245", "12456"},   {"12456", "02456"},  {"0245", "02456"},   {"145", "1456"},
    {"145", "1245"},     {"145", "1345"},     {"1456", "12456"},   {"1456", "13456"},
    {"0456", "02456"},   {"0456", "03456"},   {"045", "0456"},     {"045", "0245"},
    {"045", "0345"},     {"12345", "1245"},   {"12345", "123456"}, {"123456", "12456"},
    {"123456", "023456"},{"023456", "02456"}, {"02345", "0245"},   {"02345", "023456"},
    {"1345", "13456"},   {"1345", "12345"},   {"13456", "123456"}, {"3456", "13456"},
    {"3456", "03456"},   {"03456", "023456"}, {"0345", "03456"},   {"0345", "02345"},
    {"1235", "12345"},   {"1235", "12356"},   {"12356", "123456"}, {"12356", "02356"},
    {"02356", "023456"}, {"0235", "02345"},   {"0235", "02356"},   {"135", "1235"},
    {"135", "1345"},     {"135", "1356"},     {"1356", "12356"},   {"1356", "13456"},
    {"356", "1356"},     {"356", "3456"},     {"356", "0356"},     {"0356", "02356"},
    {"0356", "03456"},   {"035", "0235"},     {"035", "0345"},     {"035", "0356"}};

std::vector<int> parse_sides(const char* text) {
  std::vector<int> out;
  for (const char* p = text; *p; ++p) out.push_back(*p - '0');
  return out;
}

std::string triple_label(const std::array<int, 3>& t) {
  return "f" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

// Scaled-by-4 polynomial helpers over the 15 monomials
// 1, r, s, g1, g2, r^2, rs, rg1, rg2, s^2, sg1, sg2, g1^2, g1g2, g2^2.
using Poly = std::vector<long long>;

int quad_slot(int i, int j) {
  static const int base[4] = {5, 9, 12, 14};
  return base[i] + (j - i);
}

void add_linear(Poly& p, const LinearForm4& f, long long k) {
  for (int i = 0; i < 4; ++i) p[static_cast<size_t>(1 + i)] += k * f.c[static_cast<size_t>(i)];
}

void add_square(Poly& p, const LinearForm4& f, long long k) {
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      long long coeff = f.c[static_cast<size_t>(i)] * f.c[static_cast<size_t>(j)] * (i == j ? 1 : 2);
      p[static_cast<size_t>(quad_slot(i, j))] += k * coeff;
    }
}

bool odd_on_coset(const LinearForm4& f, int coset) {
  int parity = 0;
  for (int i = 0; i < 4; ++i)
    if ((f.c[static_cast<size_t>(i)] & 1) && (coset >> i & 1)) parity ^= 1;
  return parity == 1;
}

// The scaled-by-4 difference polynomial of a wall, per coset.
std::vector<Poly> difference_poly(DiffRule rule, const LinearForm4& f) {
  std::vector<Poly> out(16, Poly(15, 0));
  for (int coset = 0; coset < 16; ++coset) {
    Poly& p = out[static_cast<size_t>(coset)];
    switch (rule) {
      case DiffRule::kHalfProduct:
        add_square(p, f, 2);
        add_linear(p, f, -2);
        break;
      case DiffRule::kQuarterSquare:
        add_square(p, f, 1);
        if (odd_on_coset(f, coset)) p[0] -= 1;
        break;
      case DiffRule::kQuarterShifted:
        add_square(p, f, 1);
        add_linear(p, f, -2);
        if (odd_on_coset(f, coset)) p[0] += 1;
        break;
    }
  }
  return out;
}

std::vector<Poly> base_chamber_poly() {
  // (s - g2 + 1)(s - g2 + 2)/2, scaled by 4, on every coset.
  Poly p(15, 0);
  p[0] = 4;
  p[2] = 6;
  p[4] = -6;
  p[9] = 2;
  p[11] = -4;
  p[14] = 2;
  return std::vector<Poly>(16, p);
}

long long rule_value(DiffRule rule, long long f) {
  int128 ff = f;
  switch (rule) {
    case DiffRule::kHalfProduct:
      return narrow_to_i64(checked_mul(ff, ff - 1) / 2);
    case DiffRule::kQuarterSquare: {
      int128 sq = checked_mul(ff, ff);
      return narrow_to_i64((f % 2 == 0) ? sq / 4 : (sq - 1) / 4);
    }
    case DiffRule::kQuarterShifted: {
      int128 pr = checked_mul(ff, ff - 2);
      return narrow_to_i64((f % 2 == 0) ? pr / 4 : (pr + 1) / 4);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

long long triple_form(int i, int j, int k, const ReducedIndex& h) {
  check_triple(i, j, k);
  int128 ci = c_of(i, h), cj = c_of(j, h), ck = c_of(k, h);
  int128 det = checked_add(
      checked_sub(
          checked_mul(kA[i], checked_sub(checked_mul(kB[j], ck), checked_mul(kB[k], cj))),
          checked_mul(kA[j], checked_sub(checked_mul(kB[i], ck), checked_mul(kB[k], ci)))),
      checked_mul(kA[k], checked_sub(checked_mul(kB[i], cj), checked_mul(kB[j], ci))));
  return narrow_to_i64(-det);
}

LinearForm4 triple_form_coeffs(int i, int j, int k) {
  LinearForm4 out;
  const ReducedIndex units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int v = 0; v < 4; ++v) out.c[static_cast<size_t>(v)] = triple_form(i, j, k, units[v]);
  return out;
}

bool in_delta_prime(const ReducedIndex& h) {
  return triple_form(1, 4, 5, h) <= 0 && triple_form(0, 4, 5, h) <= 0 &&
         triple_form(3, 5, 6, h) <= 0 && triple_form(0, 3, 5, h) <= 0 &&
         triple_form(1, 3, 5, h) <= 0 && f25(h) >= 0 && f46(h) >= 0;
}

const std::vector<DeltaPrimeFacet>& delta_prime_facets() {
  static const std::vector<DeltaPrimeFacet> facets = [] {
    std::vector<DeltaPrimeFacet> out;
    out.push_back({"f46", LinearForm4{{0, 0, 0, 1}}, +1, {"3456", "1456", "0456"}, {-1}});
    out.push_back({"f25", LinearForm4{{0, 0, 1, -1}}, +1, {"1245", "0245", "1235", "0235"}, {-1}});
    out.push_back({"f145", triple_form_coeffs(1, 4, 5), -1, {"145"}, {1, 2, 3}});
    out.push_back({"f045", triple_form_coeffs(0, 4, 5), -1, {"045"}, {1, 2, 3}});
    out.push_back({"f356", triple_form_coeffs(3, 5, 6), -1, {"356"}, {1, 2, 3}});
    out.push_back({"f035", triple_form_coeffs(0, 3, 5), -1, {"035"}, {1, 2}});
    out.push_back({"f135", triple_form_coeffs(1, 3, 5), -1, {"135"}, {1, 2}});
    return out;
  }();
  return facets;
}

const WallRules& WallRules::standard() {
  static const WallRules rules = [] {
    WallRules r;
    for (auto t : {std::array<int, 3>{6, 1, 3}, {1, 2, 3}, {1, 3, 4}, {6, 0, 3}, {0, 2, 3}, {0, 3, 4}})
      r.rule[t] = DiffRule::kHalfProduct;
    r.rule[{2, 3, 4}] = DiffRule::kQuarterSquare;
    for (auto t : {std::array<int, 3>{3, 4, 5}, {1, 2, 4}, {5, 6, 1}, {0, 2, 4}, {5, 6, 0}})
      r.rule[t] = DiffRule::kQuarterShifted;
    return r;
  }();
  return rules;
}

WallRules WallRules::with_flipped_class(DiffRule cls) const {
  WallRules out = *this;
  DiffRule wrong = cls == DiffRule::kHalfProduct    ? DiffRule::kQuarterShifted
                   : cls == DiffRule::kQuarterSquare ? DiffRule::kHalfProduct
                                                     : DiffRule::kQuarterSquare;
  for (auto& [triple, rule] : out.rule)
    if (rule == cls) rule = wrong;
  return out;
}

const std::vector<long long>& coincidence_offsets(DiffRule rule) {
  static const std::vector<long long> half{0, 1};
  static const std::vector<long long> square{-1, 0, 1};
  static const std::vector<long long> shifted{0, 1, 2};
  switch (rule) {
    case DiffRule::kHalfProduct: return half;
    case DiffRule::kQuarterSquare: return square;
    case DiffRule::kQuarterShifted: return shifted;
  }
  throw std::logic_error("unreachable");
}

namespace {

long long wall_difference_with(const WallRules& rules, int i, int j, int k,
                               const ReducedIndex& h) {
  auto it = rules.rule.find({i, j, k});
  if (it == rules.rule.end())
    throw std::invalid_argument("wall_difference: (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ") labels no wall");
  return rule_value(it->second, triple_form(i, j, k, h));
}

}  // namespace

long long wall_difference(int i, int j, int k, const ReducedIndex& h) {
  return wall_difference_with(WallRules::standard(), i, j, k, h);
}

std::string Chamber::sides_string() const {
  std::string out;
  for (int s : sides) out += static_cast<char>('0' + s);
  return out;
}

const ChamberCatalog& ChamberCatalog::standard() {
  static const ChamberCatalog catalog(WallRules::standard());
  return catalog;
}

ChamberCatalog::ChamberCatalog(const WallRules& rules) : rules_(rules) { build(rules); }

ChamberCatalog::ChamberCatalog(std::vector<Chamber> chambers, FromParts)
    : chambers_(std::move(chambers)), imported_(true) {
  for (const Chamber& c : chambers_) by_sides_[c.sides] = c.id;
  auto it = by_sides_.find({1, 3, 5});
  base_ = it == by_sides_.end() ? -1 : it->second;
}

void ChamberCatalog::build(const WallRules& rules) {
  chambers_.resize(26);
  for (int id = 0; id < 26; ++id) {
    chambers_[static_cast<size_t>(id)].id = id;
    chambers_[static_cast<size_t>(id)].sides = parse_sides(kSides[id]);
    by_sides_[chambers_[static_cast<size_t>(id)].sides] = id;
  }
  base_ = by_sides_.at({1, 3, 5});

  auto is_swap = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> swapped;
    for (int v : a) swapped.push_back(v == 0 ? 1 : v == 1 ? 0 : v);
    std::sort(swapped.begin(), swapped.end());
    return swapped == b;
  };

  for (const auto& edge : kEdges) {
    int u = by_sides_.at(parse_sides(edge[0]));
    int v = by_sides_.at(parse_sides(edge[1]));
    const auto& su = chambers_[static_cast<size_t>(u)].sides;
    const auto& sv = chambers_[static_cast<size_t>(v)].sides;
    Wall wall;
    if (su.size() == sv.size()) {
      if (!is_swap(su, sv))
        throw std::logic_error("chamber adjacency data: equal-size sets not a 0/1 swap");
      wall.kind = Wall::Kind::SwapRS;
    } else {
      const auto& small = su.size() < sv.size() ? su : sv;
      const auto& large = su.size() < sv.size() ? sv : su;
      if (large.size() != small.size() + 1 ||
          !std::includes(large.begin(), large.end(), small.begin(), small.end()))
        throw std::logic_error("chamber adjacency data: not a single insertion");
      std::vector<int> extra;
      std::set_difference(large.begin(), large.end(), small.begin(), small.end(),
                          std::back_inserter(extra));
      int j = extra.front();
      size_t pos = static_cast<size_t>(std::find(large.begin(), large.end(), j) - large.begin());
      size_t t = large.size();
      wall.kind = Wall::Kind::Insert;
      wall.inserted = j;
      wall.pred = large[(pos + t - 1) % t];
      wall.succ = large[(pos + 1) % t];
    }
    chambers_[static_cast<size_t>(u)].neighbors.push_back({v, wall});
    chambers_[static_cast<size_t>(v)].neighbors.push_back({u, wall});
  }

  // Wall inequalities: the closed cell is Delta' cut by one half-space per
  // neighbor.
  for (Chamber& c : chambers_) {
    for (const Chamber::Neighbor& nb : c.neighbors) {
      const Chamber& other = chambers_[static_cast<size_t>(nb.chamber)];
      if (nb.wall.kind == Wall::Kind::SwapRS) {
        bool has_one = std::find(c.sides.begin(), c.sides.end(), 1) != c.sides.end();
        LinearForm4 form{{has_one ? 1LL : -1LL, has_one ? -1LL : 1LL, 0, 0}};
        c.inequalities.push_back({form, has_one ? "r-s" : "s-r"});
      } else {
        std::array<int, 3> t{nb.wall.pred, nb.wall.inserted, nb.wall.succ};
        LinearForm4 form = triple_form_coeffs(t[0], t[1], t[2]);
        if (c.sides.size() < other.sides.size()) {
          c.inequalities.push_back({form, triple_label(t)});
        } else {
          for (auto& coeff : form.c) coeff = -coeff;
          c.inequalities.push_back({form, "-" + triple_label(t)});
        }
      }
    }
  }

  // Spanning tree from the base chamber; each tree step accumulates a signed
  // wall difference (insertions only, 0/1 swaps leave q unchanged).
  path_.assign(26, {});
  std::vector<bool> seen(26, false);
  std::deque<int> queue{base_};
  seen[static_cast<size_t>(base_)] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const Chamber::Neighbor& nb : chambers_[static_cast<size_t>(u)].neighbors) {
      if (seen[static_cast<size_t>(nb.chamber)]) continue;
      seen[static_cast<size_t>(nb.chamber)] = true;
      path_[static_cast<size_t>(nb.chamber)] = path_[static_cast<size_t>(u)];
      if (nb.wall.kind == Wall::Kind::Insert) {
        bool growing = chambers_[static_cast<size_t>(u)].sides.size() <
                       chambers_[static_cast<size_t>(nb.chamber)].sides.size();
        path_[static_cast<size_t>(nb.chamber)].push_back(
            {{nb.wall.pred, nb.wall.inserted, nb.wall.succ}, growing ? -1 : +1});
      }
      queue.push_back(nb.chamber);
    }
  }
  for (bool s : seen)
    if (!s) throw std::logic_error("chamber adjacency data: graph is not connected");

  // Materialize each chamber's quasipolynomial by the same chase, symbolically.
  std::vector<std::vector<Poly>> scaled(26, base_chamber_poly());
  for (int id = 0; id < 26; ++id) {
    for (const auto& [triple, sign] : path_[static_cast<size_t>(id)]) {
      LinearForm4 form = triple_form_coeffs(triple[0], triple[1], triple[2]);
      auto diff = difference_poly(rules.rule.at(triple), form);
      for (int coset = 0; coset < 16; ++coset)
        for (int mono = 0; mono < 15; ++mono)
          scaled[static_cast<size_t>(id)][static_cast<size_t>(coset)][static_cast<size_t>(mono)] +=
              sign * diff[static_cast<size_t>(coset)][static_cast<size_t>(mono)];
    }
    chambers_[static_cast<size_t>(id)].qp = Quasipolynomial(4, scaled[static_cast<size_t>(id)]);
  }
}

const Chamber& ChamberCatalog::by_sides(const std::vector<int>& sides) const {
  auto it = by_sides_.find(sides);
  if (it == by_sides_.end()) throw std::invalid_argument("ChamberCatalog: unknown side set");
  return chambers_[static_cast<size_t>(it->second)];
}

bool ChamberCatalog::cell_contains(int chamber_id, const ReducedIndex& h) const {
  if (!in_delta_prime(h)) return false;
  for (const ChamberInequality& ineq : chambers_[static_cast<size_t>(chamber_id)].inequalities)
    if (ineq.form.eval(h) < 0) return false;
  return true;
}

std::vector<int> ChamberCatalog::chambers_containing(const ReducedIndex& h) const {
  if (!in_delta_prime(h))
    throw std::domain_error("chambers_containing: " + to_string(h) + " lies outside Delta'");
  std::vector<int> out;
  for (const Chamber& c : chambers_)
    if (cell_contains(c.id, h)) out.push_back(c.id);
  return out;
}

long long ChamberCatalog::eval_q(int chamber_id, const ReducedIndex& h) const {
  if (imported_) return eval_q_symbolic(chamber_id, h);
  int128 sm1 = h.s - h.g2 + 1;
  int128 acc = checked_mul(sm1, sm1 + 1) / 2;
  for (const auto& [triple, sign] : path_[static_cast<size_t>(chamber_id)]) {
    long long d = wall_difference_with(rules_, triple[0], triple[1], triple[2], h);
    acc = sign > 0 ? checked_add(acc, d) : checked_sub(acc, d);
  }
  return narrow_to_i64(acc);
}

long long ChamberCatalog::eval_q_symbolic(int chamber_id, const ReducedIndex& h) const {
  std::array<long long, 4> x{h.r, h.s, h.g1, h.g2};
  return chambers_[static_cast<size_t>(chamber_id)].qp.eval(x);
}

long long ChamberCatalog::reduced_value(const ReducedIndex& h) const {
  if (!in_delta_prime(h)) return 0;
  for (const Chamber& c : chambers_) {
    bool inside = true;
    for (const ChamberInequality& ineq : c.inequalities)
      if (ineq.form.eval(h) < 0) {
        inside = false;
        break;
      }
    if (inside) return eval_q(c.id, h);
  }
  throw std::logic_error("reduced_value: no chamber cell contains " + to_string(h));
}

long long reduced_kron_fast(const ReducedIndex& h) {
  return ChamberCatalog::standard().reduced_value(h);
}

}  // namespace kron22
