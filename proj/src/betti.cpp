#include "rindep/betti.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "rindep/error.hpp"

namespace rindep {

using boost::multiprecision::cpp_int;

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  if (i < 0 || j < 0) throw InconsistencyError("negative Betti index");
  entries_[{i, j}] += value;
}

void BettiTable::set(int i, int j, std::uint64_t value) {
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::map<BettiTable::Key, std::uint64_t> BettiTable::ideal_entries() const {
  std::map<Key, std::uint64_t> out;
  for (const auto& [key, value] : entries_) {
    if (key.first >= 1) out[{key.first - 1, key.second}] = value;
  }
  return out;
}

std::string provenance_name(BettiTable::Provenance p) {
  switch (p) {
    case BettiTable::Provenance::recursion: return "split";
    case BettiTable::Provenance::closed_form: return "closed";
    case BettiTable::Provenance::oracle: return "oracle";
    case BettiTable::Provenance::parsed: return "parsed";
  }
  return "?";
}

namespace {

using IdealBetti = std::map<BettiTable::Key, std::uint64_t>;

IdealBetti ideal_betti(const SplitTree& t) {
  switch (t.kind()) {
    case SplitTree::Kind::leaf_zero: return {};
    case SplitTree::Kind::leaf_unit: return {{{0, 0}, 1}};
    case SplitTree::Kind::leaf_principal:
      return {{{0, t.ideal().generators().front().size()}, 1}};
    case SplitTree::Kind::split: break;
  }
  const IdealBetti left = ideal_betti(t.left());
  const IdealBetti right = ideal_betti(t.right());
  IdealBetti out;
  for (const auto& [key, value] : left) out[{key.first, key.second + 1}] += value;
  for (const auto& [key, value] : right) {
    out[key] += value;
    out[{key.first + 1, key.second + 1}] += value;
  }
  return out;
}

std::uint64_t to_count(const cpp_int& value) {
  if (value < 0) throw InconsistencyError("closed form produced a negative Betti number");
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw InputError("Betti number exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

cpp_int choose(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  cpp_int result = 1;
  for (int t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t;
  }
  return result;
}

}  // namespace

std::uint64_t binomial(int n, int k) { return to_count(choose(n, k)); }

BettiTable betti_from_split_tree(const SplitTree& t) {
  BettiTable table(t.ideal().ambient(), BettiTable::Provenance::recursion);
  if (t.ideal().is_unit()) return table;
  table.set(0, 0, 1);
  for (const auto& [key, value] : ideal_betti(t)) table.add(key.first + 1, key.second, value);
  return table;
}

BettiTable closed_form_betti(const ClosedFormFamily& f) {
  using Kind = ClosedFormFamily::Kind;
  if (f.n < 0) throw InputError("family size must be nonnegative");
  if (f.kind != Kind::variables && f.r < 1) {
    throw InputError("graph families need r >= 1; use variables(k) for r = 0");
  }
  const int n = f.n;
  const int r = f.r;
  const int ambient = (f.kind == Kind::star || f.kind == Kind::kn_x) ? n + 1 : n;
  BettiTable table(ambient, BettiTable::Provenance::closed_form);
  table.set(0, 0, 1);
  auto put = [&](int i, int j, const cpp_int& v) { table.add(i, j, to_count(v)); };
  switch (f.kind) {
    case Kind::variables:
      for (int i = 1; i <= n; ++i) put(i, i, choose(n, i));
      break;
    case Kind::complete:
      for (int i = 1; i <= n - r; ++i) put(i, i + r, choose(i + r - 1, r) * choose(n, i + r));
      break;
    case Kind::star:
      for (int i = 1; i <= n - r + 1; ++i) {
        put(i, i + r, choose(i + r - 2, r - 1) * choose(n, i + r - 1));
      }
      break;
    case Kind::kn_x:
      if (r == 1) {
        for (int i = 1; i <= n; ++i) put(i, i + 1, i * choose(n + 1, i + 1) - choose(n - 1, i - 1));
      } else {
        for (int i = 1; i <= n - r + 1; ++i) {
          put(i, i + r, choose(i + r - 1, r) * choose(n + 1, i + r));
        }
      }
      break;
    case Kind::path_complement:
      if (r == 1) {
        for (int i = 1; i <= n - 2; ++i) put(i, i + 1, i * choose(n - 1, i + 1));
      } else if (r == 2) {
        for (int i = 1; i <= n - 2; ++i) {
          put(i, i + 2, choose(i + 1, 2) * choose(n, i + 2) - i * choose(n - 2, i));
        }
      } else {
        for (int i = 1; i <= n - r; ++i) put(i, i + r, choose(i + r - 1, r) * choose(n, i + r));
      }
      break;
  }
  return table;
}

std::optional<int> regularity(const BettiTable& t, bool of_ideal) {
  std::optional<int> best;
  for (const auto& [key, value] : t.entries()) {
    int i = key.first;
    if (of_ideal) {
      if (i == 0) continue;
      --i;
    }
    const int shift = key.second - i;
    if (!best || shift > *best) best = shift;
  }
  return best;
}

bool has_linear_resolution(const BettiTable& t, int d) {
  for (const auto& [key, value] : t.ideal_entries()) {
    if (key.second != key.first + d) return false;
  }
  return true;
}

void write_betti_machine(std::ostream& os, const BettiTable& t) {
  for (const auto& [key, value] : t.entries()) {
    os << "beta " << key.first << ' ' << key.second << ' ' << value << '\n';
  }
}

std::string betti_to_machine(const BettiTable& t) {
  std::ostringstream os;
  write_betti_machine(os, t);
  return os.str();
}

BettiTable parse_betti_machine(const std::string& text, int n) {
  BettiTable table(n, BettiTable::Provenance::parsed);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag, extra;
    int i = 0, j = 0;
    std::uint64_t value = 0;
    if (!(ls >> tag >> i >> j >> value) || tag != "beta" || (ls >> extra) || i < 0 || j < 0) {
      throw InputError("malformed Betti line '" + line + "'");
    }
    if (table.at(i, j) != 0) throw InputError("duplicate Betti entry '" + line + "'");
    table.set(i, j, value);
  }
  return table;
}

std::string betti_to_grid(const BettiTable& t) {
  if (t.all_zero()) return "(zero module)\n";
  const int pd = t.projective_dimension();
  int top_row = 0;
  for (const auto& [key, value] : t.entries()) top_row = std::max(top_row, key.second - key.first);

  std::vector<std::uint64_t> totals(pd + 1, 0);
  for (const auto& [key, value] : t.entries()) totals[key.first] += value;

  // cells[row][col]; row 0 is the header, row 1 totals, then j - i rows.
  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells(2, std::vector<std::string>(pd + 1));
  for (int i = 0; i <= pd; ++i) {
    cells[0][i] = std::to_string(i);
    cells[1][i] = std::to_string(totals[i]);
  }
  for (int s = 0; s <= top_row; ++s) {
    labels.push_back(std::to_string(s) + ":");
    std::vector<std::string> row(pd + 1);
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = t.at(i, i + s);
      row[i] = v == 0 ? "." : std::to_string(v);
    }
    cells.push_back(std::move(row));
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(pd + 1, 0);
  for (const auto& row : cells)
    for (int i = 0; i <= pd; ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line = std::string(label_width - labels[r].size(), ' ') + labels[r];
    for (int i = 0; i <= pd; ++i) {
      line += ' ';
      line += std::string(width[i] - cells[r][i].size(), ' ') + cells[r][i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace rindep
