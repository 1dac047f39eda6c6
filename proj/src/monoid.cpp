#include "xmg/monoid.hpp"

#include <algorithm>
#include <map>

namespace xmg {

namespace {

constexpr std::size_t kMaxMonoidSize = 10000;

std::vector<std::string> carrier_names(Idx n) {
  std::vector<std::string> out;
  if (n == 2) {
    out = {"s", "t"};
  } else {
    for (Idx i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  }
  return out;
}

bool is_identity_map(const std::vector<Idx>& img) {
  for (Idx i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool is_constant_map(const std::vector<Idx>& img) {
  if (img.empty()) return false;
  for (Idx v : img)
    if (v != img[0]) return false;
  return true;
}

bool is_permutation(const std::vector<Idx>& img) {
  std::vector<bool> seen(img.size(), false);
  for (Idx v : img) {
    if (v >= img.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string map_name(const std::vector<Idx>& img,
                     const std::vector<std::string>& xnames) {
  if (is_identity_map(img)) return "id";
  if (is_constant_map(img)) return "c_" + xnames[img[0]];
  if (img.size() == 2 && is_permutation(img)) return "i";
  std::string s = "[";
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img[i]);
  }
  s += "]";
  return s;
}

void add_constants(Idx n, std::vector<std::vector<Idx>>& maps) {
  for (Idx v = 0; v < n; ++v) maps.emplace_back(std::vector<Idx>(n, v));
}

void add_permutations(Idx n, std::vector<std::vector<Idx>>& maps) {
  std::vector<Idx> p(n);
  for (Idx i = 0; i < n; ++i) p[i] = i;
  do {
    maps.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

void add_all_endomaps(Idx n, std::vector<std::vector<Idx>>& maps) {
  std::size_t total = 1;
  for (Idx i = 0; i < n; ++i) {
    total *= n;
    if (total > kMaxMonoidSize)
      throw CapacityError("hereditary monoid on " + std::to_string(n) +
                          " elements exceeds the size cap of " +
                          std::to_string(kMaxMonoidSize));
  }
  std::vector<Idx> img(n, 0);
  while (true) {
    maps.push_back(img);
    Idx pos = n;
    while (pos > 0) {
      --pos;
      if (++img[pos] < n) break;
      img[pos] = 0;
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

void FiniteMonoid::validate(std::size_t assoc_limit) const {
  const std::size_t n = size();
  if (mul.size() != n * n)
    throw ValidationError("monoid table size mismatch: expected " +
                          std::to_string(n * n) + " entries, got " +
                          std::to_string(mul.size()));
  if (n == 0) throw ValidationError("monoid must contain an identity");
  if (identity >= n) throw ValidationError("identity index out of range");
  for (Idx v : mul)
    if (v >= n) throw ValidationError("monoid table entry out of range");
  for (Idx a = 0; a < n; ++a) {
    if (product(identity, a) != a || product(a, identity) != a)
      throw ValidationError("unit law fails at element " + names[a]);
  }
  if (n <= assoc_limit) {
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b)
        for (Idx c = 0; c < n; ++c)
          if (product(product(a, b), c) != product(a, product(b, c)))
            throw ValidationError("associativity fails at (" + names[a] +
                                  ", " + names[b] + ", " + names[c] + ")");
  }
}

void RightMSet::validate(const FiniteMonoid& monoid) const {
  const std::size_t nm = monoid.size();
  if (act.size() != size() * nm)
    throw ValidationError("action table size mismatch");
  for (Idx v : act)
    if (v >= size()) throw ValidationError("action table entry out of range");
  for (Idx x = 0; x < size(); ++x) {
    if (apply(x, monoid.identity, nm) != x)
      throw ValidationError("action unit law fails at carrier element " +
                            names[x]);
    for (Idx a = 0; a < nm; ++a)
      for (Idx b = 0; b < nm; ++b)
        if (apply(x, monoid.product(a, b), nm) != apply(apply(x, a, nm), b, nm))
          throw ValidationError("action law fails at (" + names[x] + ", " +
                                monoid.names[a] + ", " + monoid.names[b] +
                                ")");
  }
}

bool monoid_kind_reflexive(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::reflexive_oriented:
    case MonoidKind::reflexive_symmetric:
    case MonoidKind::reflexive_hereditary:
      return true;
    default:
      return false;
  }
}

const char* monoid_kind_name(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::oriented: return "oriented";
    case MonoidKind::symmetric: return "symmetric";
    case MonoidKind::hereditary: return "hereditary";
    case MonoidKind::reflexive_oriented: return "reflexive-oriented";
    case MonoidKind::reflexive_symmetric: return "reflexive-symmetric";
    case MonoidKind::reflexive_hereditary: return "reflexive-hereditary";
  }
  return "?";
}

std::optional<MonoidKind> monoid_kind_from_name(const std::string& name) {
  for (MonoidKind k :
       {MonoidKind::oriented, MonoidKind::symmetric, MonoidKind::hereditary,
        MonoidKind::reflexive_oriented, MonoidKind::reflexive_symmetric,
        MonoidKind::reflexive_hereditary}) {
    if (name == monoid_kind_name(k)) return k;
  }
  return std::nullopt;
}

std::pair<FiniteMonoid, RightMSet> build_standard_monoid(Idx x_size,
                                                         MonoidKind kind) {
  if (monoid_kind_reflexive(kind) && x_size == 0)
    throw UsageError(std::string(monoid_kind_name(kind)) +
                     " requires a nonempty carrier");

  std::vector<std::vector<Idx>> maps;
  maps.emplace_back();  // identity placeholder, replaced below
  maps.back().resize(x_size);
  for (Idx i = 0; i < x_size; ++i) maps.back()[i] = i;

  switch (kind) {
    case MonoidKind::oriented:
      break;
    case MonoidKind::symmetric:
      add_permutations(x_size, maps);
      break;
    case MonoidKind::hereditary:
    case MonoidKind::reflexive_hereditary:
      add_all_endomaps(x_size, maps);
      break;
    case MonoidKind::reflexive_oriented:
      add_constants(x_size, maps);
      break;
    case MonoidKind::reflexive_symmetric:
      add_permutations(x_size, maps);
      add_constants(x_size, maps);
      break;
  }

  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  // Identity goes first; the rest keep image-tuple order.
  auto id_it = std::find_if(maps.begin(), maps.end(), is_identity_map);
  std::rotate(maps.begin(), id_it, id_it + 1);
  if (maps.size() > kMaxMonoidSize)
    throw CapacityError("monoid exceeds the size cap of " +
                        std::to_string(kMaxMonoidSize));

  const std::size_t n = maps.size();
  std::map<std::vector<Idx>, Idx> index_of;
  for (Idx i = 0; i < n; ++i) index_of[maps[i]] = i;

  FiniteMonoid monoid;
  RightMSet xset;
  xset.names = carrier_names(x_size);
  for (const auto& img : maps) monoid.names.push_back(map_name(img, xset.names));
  monoid.identity = 0;
  monoid.mul.assign(n * n, 0);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      // apply a, then b
      std::vector<Idx> comp(x_size);
      for (Idx k = 0; k < x_size; ++k) comp[k] = maps[b][maps[a][k]];
      auto it = index_of.find(comp);
      if (it == index_of.end())
        throw ValidationError("submonoid is not closed under composition");
      monoid.mul[a * n + b] = it->second;
    }
  }
  xset.act.assign(static_cast<std::size_t>(x_size) * n, 0);
  for (Idx x = 0; x < x_size; ++x)
    for (Idx m = 0; m < n; ++m) xset.act[x * n + m] = maps[m][x];

  monoid.validate();
  xset.validate(monoid);
  return {std::move(monoid), std::move(xset)};
}

std::vector<Idx> fix_set(const FiniteMonoid& monoid) {
  std::vector<Idx> out;
  for (Idx mp = 0; mp < monoid.size(); ++mp) {
    bool fixed = true;
    for (Idx m = 0; m < monoid.size() && fixed; ++m)
      fixed = monoid.product(m, mp) == mp;
    if (fixed) out.push_back(mp);
  }
  return out;
}

std::vector<Idx> invertibles(const FiniteMonoid& monoid) {
  std::vector<Idx> out;
  for (Idx m = 0; m < monoid.size(); ++m)
    if (inverse_of(monoid, m)) out.push_back(m);
  return out;
}

std::optional<Idx> inverse_of(const FiniteMonoid& monoid, Idx m) {
  for (Idx n = 0; n < monoid.size(); ++n)
    if (monoid.product(m, n) == monoid.identity &&
        monoid.product(n, m) == monoid.identity)
      return n;
  return std::nullopt;
}

}  // namespace xmg
