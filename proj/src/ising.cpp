#include "qaoabench/ising.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace qaoabench {

namespace {

void check_spin_index(int i, int n_spins) {
  if (i < 0 || i >= n_spins) {
    throw std::domain_error("spin index " + std::to_string(i) +
                            " out of range [0, " + std::to_string(n_spins) +
                            ")");
  }
}

bool is_exact_integer(double v) { return std::nearbyint(v) == v; }

}  // namespace

IsingInstance::IsingInstance(int n_spins, std::string label)
    : n_spins_(n_spins), fields_(static_cast<std::size_t>(n_spins), 0.0),
      label_(std::move(label)) {
  if (n_spins < 1) {
    throw std::domain_error("instance needs at least one spin");
  }
}

void IsingInstance::set_field(int i, double h) {
  check_spin_index(i, n_spins_);
  fields_[static_cast<std::size_t>(i)] = h;
}

void IsingInstance::add_coupling(int i, int j, double value) {
  check_spin_index(i, n_spins_);
  check_spin_index(j, n_spins_);
  if (i == j) {
    throw std::domain_error("self-coupling (" + std::to_string(i) + "," +
                            std::to_string(i) + ") is not allowed");
  }
  if (i > j) std::swap(i, j);
  if (has_coupling(i, j)) {
    throw std::domain_error("duplicate coupling pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
  }
  auto pos = std::lower_bound(
      couplings_.begin(), couplings_.end(), std::pair<int, int>{i, j},
      [](const Coupling& c, const std::pair<int, int>& key) {
        return std::pair<int, int>{c.i, c.j} < key;
      });
  couplings_.insert(pos, Coupling{i, j, value});
}

double IsingInstance::field(int i) const {
  check_spin_index(i, n_spins_);
  return fields_[static_cast<std::size_t>(i)];
}

bool IsingInstance::has_coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::any_of(couplings_.begin(), couplings_.end(),
                     [&](const Coupling& c) { return c.i == i && c.j == j; });
}

bool IsingInstance::integer_valued() const {
  for (double h : fields_) {
    if (!is_exact_integer(h)) return false;
  }
  for (const Coupling& c : couplings_) {
    if (!is_exact_integer(c.value)) return false;
  }
  return true;
}

double cost(const IsingInstance& instance, std::uint64_t z) {
  const int n = instance.n_spins();
  if (z >= (std::uint64_t{1} << n)) {
    throw std::domain_error("basis index out of range");
  }
  double e = 0.0;
  const auto fields = instance.fields();
  for (int i = 0; i < n; ++i) {
    const double s = ((z >> i) & 1u) ? -1.0 : 1.0;
    e += fields[static_cast<std::size_t>(i)] * s;
  }
  for (const Coupling& c : instance.couplings()) {
    const double si = ((z >> c.i) & 1u) ? -1.0 : 1.0;
    const double sj = ((z >> c.j) & 1u) ? -1.0 : 1.0;
    e += c.value * si * sj;
  }
  return e;
}

std::vector<double> energy_table(const IsingInstance& instance,
                                 int max_qubits) {
  const int n = instance.n_spins();
  if (n > max_qubits) {
    throw CapacityError("energy table for " + std::to_string(n) +
                        " spins exceeds the bound of " +
                        std::to_string(max_qubits) + " qubits");
  }
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<double> table(static_cast<std::size_t>(size));

  // Nonzero terms only; the bundled instances are sparse.
  std::vector<std::pair<int, double>> fields;
  for (int i = 0; i < n; ++i) {
    if (instance.fields()[static_cast<std::size_t>(i)] != 0.0) {
      fields.emplace_back(i, instance.fields()[static_cast<std::size_t>(i)]);
    }
  }
  const auto couplings = instance.couplings();

#pragma omp parallel for schedule(static) if (size >= (1 << 14))
  for (std::int64_t z = 0; z < size; ++z) {
    const auto uz = static_cast<std::uint64_t>(z);
    double e = 0.0;
    for (const auto& [i, h] : fields) {
      e += ((uz >> i) & 1u) ? -h : h;
    }
    for (const Coupling& c : couplings) {
      const bool anti = (((uz >> c.i) ^ (uz >> c.j)) & 1u) != 0;
      e += anti ? -c.value : c.value;
    }
    table[static_cast<std::size_t>(z)] = e;
  }
  return table;
}

double energy_bin_key(double energy, bool integer_spectrum) {
  if (integer_spectrum) return energy;
  return std::nearbyint(energy * 1e9) / 1e9;
}

SpectrumSummary spectrum_of_table(const IsingInstance& instance,
                                  std::span<const double> table) {
  SpectrumSummary s;
  s.is_integer_spectrum = instance.integer_valued();
  s.e_min = table[0];
  s.e_max = table[0];
  for (double e : table) {
    s.e_min = std::min(s.e_min, e);
    s.e_max = std::max(s.e_max, e);
  }
  for (std::uint64_t z = 0; z < table.size(); ++z) {
    if (table[z] == s.e_min) s.ground_states.push_back(z);
  }
  // Second-lowest *distinct* energy, grouped with the histogram key so that
  // float noise in non-integer spectra does not split a level.
  const double min_key = energy_bin_key(s.e_min, s.is_integer_spectrum);
  double excited_key = 0.0;
  bool have_excited = false;
  for (double e : table) {
    const double key = energy_bin_key(e, s.is_integer_spectrum);
    if (key <= min_key) continue;
    if (!have_excited || key < excited_key) {
      excited_key = key;
      have_excited = true;
    }
  }
  if (have_excited) {
    for (double e : table) {
      if (energy_bin_key(e, s.is_integer_spectrum) == excited_key) {
        ++s.degeneracy_first_excited;
      }
    }
  }
  return s;
}

SpectrumSummary spectrum(const IsingInstance& instance, int max_qubits) {
  const std::vector<double> table = energy_table(instance, max_qubits);
  return spectrum_of_table(instance, table);
}

namespace {

struct FieldRecord {
  int i;
  double value;
  int line;
};
struct CouplingRecord {
  int i;
  int j;
  double value;
  int line;
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw ParseError("instance file line " + std::to_string(line) + ": " + what);
}

}  // namespace

IsingInstance parse_instance(std::string_view text, std::string label) {
  std::vector<FieldRecord> fields;
  std::vector<CouplingRecord> couplings;
  int n_spins = -1;
  int n_line = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;

    if (tag == "n") {
      if (n_spins >= 0) parse_fail(line_no, "duplicate 'n' record");
      if (!(ls >> n_spins) || n_spins < 1) {
        parse_fail(line_no, "expected 'n <count>' with a positive count");
      }
      n_line = line_no;
    } else if (tag == "h") {
      FieldRecord r{};
      if (!(ls >> r.i >> r.value)) {
        parse_fail(line_no, "expected 'h <i> <value>'");
      }
      r.line = line_no;
      fields.push_back(r);
    } else if (tag == "J") {
      CouplingRecord r{};
      if (!(ls >> r.i >> r.j >> r.value)) {
        parse_fail(line_no, "expected 'J <i> <j> <value>'");
      }
      r.line = line_no;
      couplings.push_back(r);
    } else {
      parse_fail(line_no, "unknown record type '" + tag + "'");
    }
    std::string trailing;
    if (ls >> trailing) {
      parse_fail(line_no, "trailing token '" + trailing + "'");
    }
  }

  if (n_spins < 1) {
    throw ParseError("instance file has no 'n <count>' record");
  }
  (void)n_line;

  IsingInstance instance(n_spins, std::move(label));
  std::vector<bool> field_seen(static_cast<std::size_t>(n_spins), false);
  for (const FieldRecord& r : fields) {
    try {
      if (r.i >= 0 && r.i < n_spins &&
          field_seen[static_cast<std::size_t>(r.i)]) {
        parse_fail(r.line, "duplicate field for spin " + std::to_string(r.i));
      }
      instance.set_field(r.i, r.value);
      field_seen[static_cast<std::size_t>(r.i)] = true;
    } catch (const std::domain_error& e) {
      parse_fail(r.line, e.what());
    }
  }
  for (const CouplingRecord& r : couplings) {
    try {
      instance.add_coupling(r.i, r.j, r.value);
    } catch (const std::domain_error& e) {
      parse_fail(r.line, e.what());
    }
  }
  return instance;
}

IsingInstance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open instance file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str(), path.stem().string());
}

std::filesystem::path instance_directory() {
  if (const char* env = std::getenv("QAOA_BENCH_INSTANCES")) {
    return std::filesystem::path(env);
  }
#ifdef QAOA_BENCH_DEFAULT_INSTANCE_DIR
  return std::filesystem::path(QAOA_BENCH_DEFAULT_INSTANCE_DIR);
#else
  return std::filesystem::path("data/instances");
#endif
}

IsingInstance resolve_instance(const std::string& name) {
  const std::filesystem::path direct(name);
  if (direct.has_extension() || name.find('/') != std::string::npos) {
    if (std::filesystem::exists(direct)) return load_instance_file(direct);
    throw ParseError("instance file " + name + " not found");
  }
  const auto bundled = instance_directory() / (name + ".txt");
  if (std::filesystem::exists(bundled)) return load_instance_file(bundled);
  throw ParseError("unknown instance '" + name + "' (looked in " +
                   instance_directory().string() + ")");
}

std::vector<std::string> bundled_instance_names() {
  std::vector<std::string> names;
  const auto dir = instance_directory();
  if (!std::filesystem::is_directory(dir)) return names;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

CostTable::CostTable(const IsingInstance& instance, int max_qubits)
    : n_qubits_(instance.n_spins()),
      integer_spectrum_(instance.integer_valued()),
      values_(energy_table(instance, max_qubits)) {
  std::unordered_map<double, std::uint32_t> seen;
  std::vector<std::uint32_t> index(values_.size());
  for (std::uint64_t z = 0; z < values_.size(); ++z) {
    auto [it, inserted] =
        seen.emplace(values_[z], static_cast<std::uint32_t>(levels_.size()));
    if (inserted) {
      levels_.push_back(values_[z]);
      if (levels_.size() > kMaxPhaseLevels) {
        levels_.clear();
        return;  // too many distinct energies, keep the direct phase path
      }
    }
    index[z] = it->second;
  }
  // Re-sort levels ascending and remap.
  std::vector<std::uint32_t> order(levels_.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return levels_[a] < levels_[b];
  });
  std::vector<std::uint32_t> rank(levels_.size());
  std::vector<double> sorted(levels_.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = k;
    sorted[k] = levels_[order[k]];
  }
  levels_ = std::move(sorted);
  level_index_.resize(index.size());
  for (std::uint64_t z = 0; z < index.size(); ++z) {
    level_index_[z] = rank[index[z]];
  }
}

}  // namespace qaoabench
