#pragma once

// Command layer behind the `skelcodes` CLI. Every subcommand renders into
// caller-supplied streams so the acceptance suite can drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "skelcodes/skelcodes.hpp"

namespace skelcodes::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Status { match, mismatch, skipped, info };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "MISMATCH";
    case Status::skipped: return "skipped";
    case Status::info: return "info";
  }
  return "?";
}

struct ReportRow {
  std::string text;
  Json fields = Json::object();
  Status status = Status::info;
};

/// Result of one CLI invocation: preamble lines, one row per checked
/// instance, summary lines and the wall time.
struct RunReport {
  std::string command;
  Json ranges = Json::object();
  std::vector<std::string> preamble;
  std::vector<ReportRow> rows;
  std::vector<std::string> summary;
  Json extra = Json::object();
  double wall_seconds = 0;
  bool show_wall_time = true;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const ReportRow& r) { return r.status == s; }));
  }
  bool any_mismatch() const { return count(Status::mismatch) > 0; }
  int exit_code() const { return any_mismatch() ? kExitMismatch : kExitPass; }

  void print_text(std::ostream& out) const {
    for (const auto& line : preamble) out << line << '\n';
    for (const auto& row : rows) out << row.text << '\n';
    for (const auto& line : summary) out << line << '\n';
    if (show_wall_time) out << "# wall-time " << std::fixed << std::setprecision(3) << wall_seconds << " s\n";
  }

  Json to_json() const {
    Json j = Json::object();
    j["command"] = command;
    j["ranges"] = ranges;
    for (const auto& [key, value] : extra.items()) j[key] = value;
    Json rows_json = Json::array();
    for (const auto& row : rows) {
      Json r = row.fields;
      r["status"] = to_string(row.status);
      rows_json.push_back(std::move(r));
    }
    j["rows"] = std::move(rows_json);
    j["mismatches"] = count(Status::mismatch);
    j["skipped"] = count(Status::skipped);
    j["status"] = any_mismatch() ? "mismatch" : "pass";
    j["wall_time_s"] = wall_seconds;
    return j;
  }
};

/// Distance engine selection shared by the subcommands.
struct EngineOptions {
  enum class Method { automatic, exhaustive, information_set, none };
  Method method = Method::automatic;
  std::size_t k_cap = 26;
  std::size_t is_cap = 128;
  unsigned threads = 1;
};

inline EngineOptions::Method parse_method(const std::string& name) {
  if (name == "auto") return EngineOptions::Method::automatic;
  if (name == "exhaustive") return EngineOptions::Method::exhaustive;
  if (name == "is") return EngineOptions::Method::information_set;
  if (name == "none") return EngineOptions::Method::none;
  throw DomainError("unknown method '" + name + "' (auto|exhaustive|is|none)");
}

/// nullopt when the caps rule every engine out ("bound only").
inline std::optional<DistanceResult> compute_distance(const PrimeFieldMatrix& generator, std::size_t k,
                                                      const EngineOptions& options) {
  using M = EngineOptions::Method;
  const SearchOptions search{options.k_cap, options.threads};
  const bool exhaustive_ok = k <= options.k_cap;
  const bool is_ok = generator.q() == 2 && k <= options.is_cap;
  switch (options.method) {
    case M::exhaustive:
      if (exhaustive_ok) return min_distance_exhaustive(generator, search);
      return std::nullopt;
    case M::information_set:
      if (is_ok) return min_distance_information_set(generator, options.threads);
      return std::nullopt;
    case M::automatic:
      if (exhaustive_ok) return min_distance_exhaustive(generator, search);
      if (is_ok) return min_distance_information_set(generator, options.threads);
      return std::nullopt;
    case M::none: return std::nullopt;
  }
  return std::nullopt;
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string point_label(const Point& p) {
  std::string s;
  for (auto v : p) s += std::to_string(v);
  return s;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string triple(std::size_t n, std::size_t k, std::optional<std::size_t> d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + (d ? std::to_string(*d) : std::string("?")) + "]";
}

inline void check_skeleton_range(std::size_t l, std::size_t h, std::size_t j) {
  if (!(j <= h && h <= l && l <= kMaxVertices)) throw DomainError("parameters must satisfy 0 <= J <= H <= L <= 30");
}

}  // namespace detail

inline constexpr long long kBuildColumnCap = std::int64_t{1} << 20;

/// `params L H J`: computed [n, k, d] next to the closed-form predictions.
inline RunReport cmd_params(std::size_t l, std::size_t h, std::size_t j, const EngineOptions& engine,
                            bool with_witness = false) {
  namespace F = formulas;
  detail::check_skeleton_range(l, h, j);
  detail::Stopwatch clock;
  RunReport report;
  report.command = "params " + std::to_string(l) + " " + std::to_string(h) + " " + std::to_string(j);
  report.ranges = {{"l", l}, {"h", h}, {"j", j}};

  const auto L = static_cast<long long>(l), H = static_cast<long long>(h), J = static_cast<long long>(j);
  const long long n_formula = F::closed_length(L, H);
  const long long k_formula = F::closed_dimension(L, J);
  const long long bound = F::upper_bound_distance(L, H, J);

  std::optional<std::size_t> n, k, d;
  std::string method = "none";
  Point witness;
  if (n_formula <= kBuildColumnCap && l <= 24) {
    const auto code = skeleton_code(l, h, j);
    const auto p = parameters(code.code);
    n = p.n;
    k = p.k;
    if (auto dist = compute_distance(code.code.generator, p.k, engine)) {
      d = dist->d;
      method = to_string(dist->method);
      witness = dist->witness;
    }
  }

  auto opt = [](std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string("-"); };
  report.preamble.push_back(opt(n) + " " + opt(k) + " " + opt(d) + " " + method);
  report.preamble.push_back(detail::triple(n.value_or(static_cast<std::size_t>(n_formula)),
                                           k.value_or(static_cast<std::size_t>(k_formula)), d));

  auto compare = [&](const std::string& name, std::optional<std::size_t> computed, const std::string& formula_name,
                     long long predicted, bool equality) {
    ReportRow row;
    if (!computed) {
      row.status = Status::skipped;
    } else if (equality) {
      row.status = static_cast<long long>(*computed) == predicted ? Status::match : Status::mismatch;
    } else {
      row.status = static_cast<long long>(*computed) <= predicted ? Status::match : Status::mismatch;
    }
    row.text = detail::pad(name, 10) + " computed=" + opt(computed) + " " + formula_name + "=" +
               std::to_string(predicted) + " " + (equality ? "" : "(bound) ") + to_string(row.status);
    row.fields = {{"check", name}, {"computed", computed ? Json(*computed) : Json(nullptr)},
                  {"formula", formula_name}, {"predicted", predicted}, {"relation", equality ? "==" : "<="}};
    report.rows.push_back(std::move(row));
  };

  compare("length", n, "sum_C(l,i)_i<=h", n_formula, true);
  compare("dimension", k, "sum_C(l,i)_i<=j", k_formula, true);
  if (j == 1) compare("distance", d, "theorem-main", F::theorem_main_distance(L, H), true);
  compare("distance", d, "one-row-bound", bound, false);
  if (j == h && n && k) {
    compare("distance", d, "mds:n-k+1", static_cast<long long>(*n - *k + 1), true);
  }
  if (j >= 2) {
    for (auto conv : {F::SumConvention::from_zero, F::SumConvention::from_one}) {
      const long long value = F::conjecture_distance(L, H, J, conv);
      ReportRow row;
      row.status = Status::info;
      row.text = detail::pad("conjecture", 10) + " computed=" + opt(d) + " " + F::to_string(conv) + "=" +
                 std::to_string(value) + " " + (d ? (static_cast<long long>(*d) == value ? "agrees" : "differs") : "-");
      row.fields = {{"check", "conjecture"}, {"convention", F::to_string(conv)}, {"predicted", value},
                    {"computed", d ? Json(*d) : Json(nullptr)}};
      report.rows.push_back(std::move(row));
    }
  }
  report.summary.push_back(report.any_mismatch() ? "result: mismatch" : "result: all-match");
  report.extra["n"] = n ? Json(*n) : Json(nullptr);
  report.extra["k"] = k ? Json(*k) : Json(nullptr);
  report.extra["d"] = d ? Json(*d) : Json(nullptr);
  report.extra["method"] = method;
  if (with_witness && d) {
    Json w = Json::array();
    for (auto v : witness) w.push_back(v);
    report.extra["witness"] = std::move(w);
    report.summary.push_back("witness " + detail::point_label(witness));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

/// `matrix L H J`: the generator of K(L, H, J) in matrix text format, with
/// optional '#' lines naming rows and columns.
inline std::string cmd_matrix(std::size_t l, std::size_t h, std::size_t j, ColumnOrder order, bool labels) {
  detail::check_skeleton_range(l, h, j);
  if (formulas::closed_length(static_cast<long long>(l), static_cast<long long>(h)) > kBuildColumnCap || l > 24)
    throw DomainError("matrix too large to print");
  const auto code = skeleton_code(l, h, j, order);
  std::ostringstream out;
  if (labels) {
    out << "# rows:";
    for (const auto& m : code.code.monomials) out << ' ' << to_string(m);
    out << "\n# cols:";
    for (const auto& p : code.code.points) out << ' ' << detail::point_label(p);
    out << '\n';
  }
  write_matrix(out, code.code.generator);
  return out.str();
}

/// `char-poly`: χ(A_Δ, t) from degree l down to 0, then q^l - χ(A_Δ, q).
inline RunReport cmd_char_poly(const SimplicialComplex& complex, unsigned q, bool check_points) {
  detail::Stopwatch clock;
  RunReport report;
  report.command = "char-poly";
  report.show_wall_time = false;
  report.ranges = {{"l", complex.vertex_count()}, {"q", q}};
  const auto arrangement = coordinate_arrangement(complex, q);
  const auto lattice = intersection_lattice(arrangement);
  const auto chi = characteristic_polynomial(lattice);
  const long long count = athanasiadis_count(lattice, q);
  std::string line;
  Json coeffs = Json::array();
  for (std::size_t i = chi.coefficients.size(); i-- > 0;) {
    if (!line.empty()) line += ' ';
    line += std::to_string(chi.coefficients[i]);
    coeffs.push_back(chi.coefficients[i]);
  }
  report.preamble.push_back(line);
  report.preamble.push_back(std::to_string(count));
  report.extra["coefficients"] = std::move(coeffs);
  report.extra["count"] = count;
  report.extra["lattice_size"] = lattice.elements.size();
  if (check_points) {
    const auto pts = points(arrangement);
    ReportRow row;
    row.status = static_cast<long long>(pts.size()) == count ? Status::match : Status::mismatch;
    row.text = "points " + std::to_string(pts.size()) + " " + to_string(row.status);
    row.fields = {{"check", "points"}, {"enumerated", pts.size()}, {"predicted", count}};
    report.rows.push_back(std::move(row));
  }
  report.wall_seconds = clock.seconds();
  return report;
}

/// `hamming-check L H J`.
inline RunReport cmd_hamming_check(std::size_t l, std::size_t h, std::size_t j, const EngineOptions& engine) {
  detail::check_skeleton_range(l, h, j);
  detail::Stopwatch clock;
  RunReport report;
  report.command = "hamming-check " + std::to_string(l) + " " + std::to_string(h) + " " + std::to_string(j);
  report.ranges = {{"l", l}, {"h", h}, {"j", j}};
  report.show_wall_time = false;
  const auto code = skeleton_code(l, h, j);
  SearchMethod method = SearchMethod::automatic;
  if (engine.method == EngineOptions::Method::exhaustive) method = SearchMethod::exhaustive;
  if (engine.method == EngineOptions::Method::information_set) method = SearchMethod::information_set;
  const auto verdict = is_hamming_equivalent(code.code, method, SearchOptions{engine.k_cap, engine.threads});
  report.preamble.push_back(verdict.equivalent ? "equivalent" : "not-equivalent");
  report.preamble.push_back("r " + std::to_string(verdict.r));
  report.preamble.push_back(std::to_string(verdict.n) + " " + std::to_string(verdict.k) + " " +
                            (verdict.d ? std::to_string(*verdict.d) : std::string("-")) + " " +
                            (verdict.d ? to_string(verdict.method) : std::string("none")));
  report.preamble.push_back("# " + verdict.reason);
  if (verdict.certificate.rows() > 0) {
    std::string text = to_text(verdict.certificate);
    text.pop_back();
    report.preamble.push_back(text);
  }
  ReportRow row;
  row.status = verdict.equivalent ? Status::match : Status::mismatch;
  row.fields = {{"check", "hamming-equivalence"}, {"r", verdict.r}, {"n", verdict.n}, {"k", verdict.k},
                {"d", verdict.d ? Json(*verdict.d) : Json(nullptr)}, {"certificate_ok", verdict.certificate_ok},
                {"reason", verdict.reason}};
  row.text = "";
  report.rows.push_back(std::move(row));
  report.rows.back().text = "# verdict " + to_string(report.rows.back().status);
  report.extra["equivalent"] = verdict.equivalent;
  report.extra["r"] = verdict.r;
  report.extra["certificate"] = to_text(verdict.certificate);
  report.wall_seconds = clock.seconds();
  return report;
}

/// Ranges for `verify`; unset values fall back to per-property defaults.
struct VerifyRanges {
  std::optional<std::size_t> lmax;
  std::optional<std::size_t> nmax;
  std::optional<std::size_t> smax;
  std::optional<std::size_t> tmax;
};

inline const std::vector<std::string>& verify_properties() {
  static const std::vector<std::string> names{"theorem-main", "prop-size", "prop-formula", "s-rows",
                                              "g-lemma",      "ie-coeff",  "prop-last"};
  return names;
}

namespace detail {

// Calls fn(indices) for every strictly increasing index tuple of the given
// size drawn from [0, count).
template <class Fn>
void for_each_combination(std::size_t count, std::size_t size, Fn&& fn) {
  if (size > count) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == count - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t x = i; x < size; ++x) idx[x] = idx[x - 1] + 1;
  }
}

inline std::size_t xor_weight(const BitMatrix& g, const std::vector<std::size_t>& rows, std::vector<Word>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (auto r : rows) {
    const auto row = g.row(r);
    for (std::size_t x = 0; x < scratch.size(); ++x) scratch[x] ^= row[x];
  }
  return popcount(scratch);
}

inline std::string lhj(std::size_t l, std::size_t h, std::size_t j) {
  return "l=" + std::to_string(l) + " h=" + std::to_string(h) + " j=" + std::to_string(j);
}

inline void verify_theorem_main(RunReport& report, std::size_t lmax, const EngineOptions& engine) {
  for (std::size_t l = 1; l <= lmax; ++l)
    for (std::size_t h = 1; h <= l; ++h) {
      const auto code = skeleton_code(l, h, 1);
      const auto k = parameters(code.code).k;
      const auto expected = formulas::theorem_main_distance(static_cast<long long>(l), static_cast<long long>(h));
      const auto dist = compute_distance(code.code.generator, k, engine);
      ReportRow row;
      row.status = !dist ? Status::skipped
                         : (static_cast<long long>(dist->d) == expected ? Status::match : Status::mismatch);
      row.text = pad(lhj(l, h, 1), 16) + " d=" + (dist ? std::to_string(dist->d) : std::string("-")) +
                 " formula=" + std::to_string(expected) + " " + to_string(row.status);
      row.fields = {{"l", l}, {"h", h}, {"d", dist ? Json(dist->d) : Json(nullptr)}, {"formula", expected}};
      report.rows.push_back(std::move(row));
    }
}

// Families of distinct generator-row supports of K(l, h, j) with 1 <= |family| <= nmax.
template <class Check>
void sweep_families(RunReport& report, std::size_t lmax, std::size_t nmin, std::size_t nmax, const char* what,
                    Check&& check) {
  for (std::size_t l = 1; l <= lmax; ++l)
    for (std::size_t h = 1; h <= l; ++h)
      for (std::size_t j = 1; j <= h; ++j) {
        const auto code = skeleton_code(l, h, j);
        const BitMatrix bits = code.code.generator_bits();
        std::vector<Face> supports;
        for (const auto& m : code.code.monomials) supports.push_back(m.support());
        std::size_t families = 0, failures = 0, counted = 0;
        std::vector<Word> scratch(bits.stride());
        for (std::size_t n = nmin; n <= nmax; ++n)
          for_each_combination(supports.size(), n, [&](const std::vector<std::size_t>& idx) {
            ++families;
            const auto outcome = check(l, h, supports, bits, idx, scratch);
            if (outcome == Status::mismatch) ++failures;
            if (outcome != Status::skipped) ++counted;
          });
        ReportRow row;
        row.status = failures == 0 ? Status::match : Status::mismatch;
        row.text = pad(lhj(l, h, j), 16) + " families=" + std::to_string(families) + " " + what + "=" +
                   std::to_string(counted) + " failures=" + std::to_string(failures) + " " + to_string(row.status);
        row.fields = {{"l", l}, {"h", h}, {"j", j}, {"families", families}, {what, counted}, {"failures", failures}};
        report.rows.push_back(std::move(row));
      }
}

inline formulas::SigmaFamily family_of(std::size_t l, std::size_t h, const std::vector<Face>& supports,
                                       const std::vector<std::size_t>& idx) {
  formulas::SigmaFamily f{l, h, {}};
  for (auto i : idx) f.supports.push_back(supports[i]);
  return f;
}

}  // namespace detail

/// `verify NAME`: runs one named property sweep.
inline RunReport cmd_verify(const std::string& name, const VerifyRanges& ranges, const EngineOptions& engine) {
  namespace F = formulas;
  detail::Stopwatch clock;
  RunReport report;
  report.command = "verify " + name;
  if (name == "theorem-main") {
    const auto lmax = ranges.lmax.value_or(11);
    report.ranges = {{"lmax", lmax}};
    detail::verify_theorem_main(report, lmax, engine);
  } else if (name == "prop-size") {
    const auto lmax = ranges.lmax.value_or(6), nmax = ranges.nmax.value_or(4);
    report.ranges = {{"lmax", lmax}, {"nmax", nmax}};
    detail::sweep_families(report, lmax, 1, nmax, "checked",
                           [](std::size_t l, std::size_t h, const std::vector<Face>& supports, const BitMatrix& bits,
                              const std::vector<std::size_t>& idx, std::vector<Word>& scratch) {
                             const auto formula = F::b_weight(detail::family_of(l, h, supports, idx));
                             const auto actual = static_cast<long long>(detail::xor_weight(bits, idx, scratch));
                             return formula == actual ? Status::match : Status::mismatch;
                           });
  } else if (name == "prop-formula") {
    const auto lmax = ranges.lmax.value_or(6), nmax = ranges.nmax.value_or(4);
    report.ranges = {{"lmax", lmax}, {"nmax", nmax}};
    detail::sweep_families(report, lmax, 2, nmax, "checked",
                           [](std::size_t l, std::size_t h, const std::vector<Face>& supports, const BitMatrix&,
                              const std::vector<std::size_t>& idx, std::vector<Word>&) {
                             return F::b_recursion_check(detail::family_of(l, h, supports, idx)) ? Status::match
                                                                                                   : Status::mismatch;
                           });
  } else if (name == "prop-last") {
    const auto lmax = ranges.lmax.value_or(5), nmax = ranges.nmax.value_or(4);
    report.ranges = {{"lmax", lmax}, {"nmax", nmax}};
    detail::sweep_families(report, lmax, 2, nmax, "in_hypothesis",
                           [](std::size_t l, std::size_t h, const std::vector<Face>& supports, const BitMatrix&,
                              const std::vector<std::size_t>& idx, std::vector<Word>&) {
                             const auto r = F::prop_last_check(detail::family_of(l, h, supports, idx));
                             if (!r.hypothesis) return Status::skipped;
                             return r.inequality ? Status::match : Status::mismatch;
                           });
  } else if (name == "s-rows") {
    const auto lmax = ranges.lmax.value_or(8);
    report.ranges = {{"lmax", lmax}};
    for (std::size_t l = 1; l <= lmax; ++l)
      for (std::size_t h = 1; h <= l; ++h) {
        const auto code = skeleton_code(l, h, 1);
        const BitMatrix bits = code.code.generator_bits();
        std::vector<Word> scratch(bits.stride());
        for (std::size_t s = 1; s <= l; ++s) {
          std::vector<std::size_t> idx;
          F::SigmaFamily fam{l, h, {}};
          for (std::size_t v = 1; v <= s; ++v) {
            idx.push_back(v);  // row v is x_v
            fam.supports.push_back(Face::of({static_cast<unsigned>(v)}));
          }
          const auto formula = F::weight_sum_rows_j1(static_cast<long long>(l), static_cast<long long>(h),
                                                     static_cast<long long>(s));
          const auto family = F::b_weight(fam);
          const auto bitwise = static_cast<long long>(detail::xor_weight(bits, idx, scratch));
          ReportRow row;
          row.status = formula == family && family == bitwise ? Status::match : Status::mismatch;
          row.text = detail::pad("l=" + std::to_string(l) + " h=" + std::to_string(h) + " s=" + std::to_string(s), 16) +
                     " formula=" + std::to_string(formula) + " b_weight=" + std::to_string(family) +
                     " xor=" + std::to_string(bitwise) + " " + to_string(row.status);
          row.fields = {{"l", l}, {"h", h}, {"s", s}, {"formula", formula}, {"b_weight", family}, {"xor", bitwise}};
          report.rows.push_back(std::move(row));
        }
      }
  } else if (name == "g-lemma") {
    const auto smax = ranges.smax.value_or(12);
    report.ranges = {{"smax", smax}};
    std::size_t swapped_ok = 0, total = 0;
    for (std::size_t s = 1; s <= smax; ++s)
      for (std::size_t i = 1; i <= s; ++i) {
        const auto g = F::g_value(static_cast<long long>(i), static_cast<long long>(s));
        const long long swapped =
            i % 2 == 1 ? F::binomial(static_cast<long long>(s), static_cast<long long>(i)) : 0;
        ++total;
        if (g.sum == swapped) ++swapped_ok;
        ReportRow row;
        row.status = i == 1 ? Status::info : (g.agrees() ? Status::match : Status::mismatch);
        row.text = detail::pad("i=" + std::to_string(i) + " s=" + std::to_string(s), 12) +
                   " sum=" + std::to_string(g.sum) + " closed=" + std::to_string(g.closed) + " " +
                   to_string(row.status);
        row.fields = {{"i", i}, {"s", s}, {"sum", g.sum}, {"closed", g.closed}, {"odd_parity_form", swapped}};
        report.rows.push_back(std::move(row));
      }
    report.summary.push_back("note: sum equals C(s,i) for odd i and 0 for even i in " + std::to_string(swapped_ok) +
                             "/" + std::to_string(total) + " cases");
  } else if (name == "ie-coeff") {
    const auto tmax = ranges.tmax.value_or(30);
    report.ranges = {{"tmax", tmax}};
    std::vector<long long> solved;  // c_t solved from the constraint, independent of the closed form
    for (std::size_t t = 1; t <= tmax; ++t) {
      const long long target = t % 2 == 1 ? 1 : 0;
      long long c = target;
      for (std::size_t r = 1; r < t; ++r)
        c -= F::binomial(static_cast<long long>(t), static_cast<long long>(r)) * solved[r - 1];
      solved.push_back(c);
      const long long closed = F::ie_coefficient(static_cast<long long>(t));
      const long long constraint = F::ie_constraint(static_cast<long long>(t));
      ReportRow row;
      row.status = closed == c && constraint == target ? Status::match : Status::mismatch;
      row.text = detail::pad("t=" + std::to_string(t), 6) + " c_t=" + std::to_string(closed) +
                 " solved=" + std::to_string(c) + " constraint=" + std::to_string(constraint) + " " +
                 to_string(row.status);
      row.fields = {{"t", t}, {"closed", closed}, {"solved", c}, {"constraint", constraint}};
      report.rows.push_back(std::move(row));
    }
  } else {
    throw DomainError("unknown property '" + name + "'");
  }
  report.summary.push_back("checked " + std::to_string(report.rows.size()) + " rows, " +
                           std::to_string(report.count(Status::mismatch)) + " mismatches: " +
                           (report.any_mismatch() ? "FAIL" : "PASS"));
  report.wall_seconds = clock.seconds();
  return report;
}

struct ScanRanges {
  std::size_t lmin = 3;
  std::size_t lmax = 6;
};

/// `scan-conjecture`: exact d of K(l, h, j), 2 <= j < h <= l, against both
/// index conventions and the one-row bound.
inline RunReport cmd_scan_conjecture(const ScanRanges& ranges, const EngineOptions& engine) {
  namespace F = formulas;
  detail::Stopwatch clock;
  RunReport report;
  report.command = "scan-conjecture";
  report.ranges = {{"lmin", ranges.lmin}, {"lmax", ranges.lmax}, {"k_cap", engine.k_cap}, {"is_cap", engine.is_cap}};
  report.preamble.push_back("l h j   n   k   d method          from_zero from_one bound status");
  std::size_t zero_matches = 0, one_matches = 0, computed = 0;
  for (std::size_t l = std::max<std::size_t>(ranges.lmin, 3); l <= ranges.lmax; ++l)
    for (std::size_t h = 3; h <= l; ++h)
      for (std::size_t j = 2; j < h; ++j) {
        const auto L = static_cast<long long>(l), H = static_cast<long long>(h), J = static_cast<long long>(j);
        const auto n = F::closed_length(L, H);
        const auto k = F::closed_dimension(L, J);
        const auto z = F::conjecture_distance(L, H, J, F::SumConvention::from_zero);
        const auto o = F::conjecture_distance(L, H, J, F::SumConvention::from_one);
        const auto bound = F::upper_bound_distance(L, H, J);
        std::optional<DistanceResult> dist;
        if (n <= kBuildColumnCap && l <= 24) {
          const bool feasible =
              engine.method != EngineOptions::Method::none &&
              (static_cast<std::size_t>(k) <= engine.k_cap || static_cast<std::size_t>(k) <= engine.is_cap);
          if (feasible) {
            const auto code = skeleton_code(l, h, j);
            dist = compute_distance(code.code.generator, static_cast<std::size_t>(k), engine);
          }
        }
        ReportRow row;
        std::string matches = "-";
        if (!dist) {
          row.status = Status::skipped;
        } else {
          ++computed;
          const auto d = static_cast<long long>(dist->d);
          row.status = d <= bound ? Status::match : Status::mismatch;
          if (d == z) ++zero_matches;
          if (d == o) ++one_matches;
          matches = d == z ? "from_zero" : (d == o ? "from_one" : "neither");
        }
        std::ostringstream line;
        line << l << ' ' << h << ' ' << j << ' ' << std::setw(3) << n << ' ' << std::setw(3) << k << ' '
             << std::setw(3) << (dist ? std::to_string(dist->d) : std::string("-")) << ' '
             << detail::pad(dist ? to_string(dist->method) : std::string("bound only"), 15) << ' ' << std::setw(9)
             << z << ' ' << std::setw(8) << o << ' ' << std::setw(5) << bound << ' '
             << (dist ? (row.status == Status::match ? "ok " : "EXCEEDS-BOUND ") + matches
                      : std::string("skipped: bound only"));
        row.text = line.str();
        row.fields = {{"l", l}, {"h", h}, {"j", j}, {"n", n}, {"k", k},
                      {"d", dist ? Json(dist->d) : Json(nullptr)},
                      {"method", dist ? to_string(dist->method) : std::string("bound_only")},
                      {"from_zero", z}, {"from_one", o}, {"bound", bound}, {"matches", matches}};
        report.rows.push_back(std::move(row));
      }
  report.summary.push_back("computed " + std::to_string(computed) + " instances; from_zero matches " +
                           std::to_string(zero_matches) + ", from_one matches " + std::to_string(one_matches));
  report.extra["from_zero_matches"] = zero_matches;
  report.extra["from_one_matches"] = one_matches;
  report.extra["computed"] = computed;
  report.wall_seconds = clock.seconds();
  return report;
}

/// Parses argv-style arguments (without the program name), runs the
/// subcommand and returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skeleton simplicial evaluation codes: construction and parameter checks", "skelcodes"};
  app.require_subcommand(1);

  bool json = false;
  std::string method = "auto";
  EngineOptions engine;
  std::optional<std::size_t> k_cap, is_cap;
  std::optional<unsigned> threads;
  auto add_engine = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Emit a JSON report");
    sub->add_option("--method", method, "Distance engine: auto|exhaustive|is|none")->capture_default_str();
    sub->add_option("--k-cap", k_cap, "Largest k searched exhaustively");
    sub->add_option("--is-cap", is_cap, "Largest k given to the information-set engine");
    sub->add_option("--threads", threads, "Worker threads for distance searches")->check(CLI::PositiveNumber);
  };
  // Per-subcommand defaults for the exhaustive and information-set caps.
  auto configure = [&](std::size_t default_k_cap, std::size_t default_is_cap) {
    engine.method = parse_method(method);
    engine.k_cap = k_cap.value_or(default_k_cap);
    engine.is_cap = is_cap.value_or(default_is_cap);
    engine.threads = threads.value_or(std::max(1u, std::thread::hardware_concurrency()));
  };

  std::size_t l = 0, h = 0, j = 0;
  bool witness = false;
  auto* params = app.add_subcommand("params", "Print [n,k,d] of K(L,H,J) next to the formula predictions");
  params->add_option("L", l)->required();
  params->add_option("H", h)->required();
  params->add_option("J", j)->required();
  params->add_flag("--witness", witness, "Include a minimum-weight codeword");
  add_engine(params);

  std::string order_name = "graded";
  bool labels = false;
  auto* matrix = app.add_subcommand("matrix", "Print the generator matrix of K(L,H,J)");
  matrix->add_option("L", l)->required();
  matrix->add_option("H", h)->required();
  matrix->add_option("J", j)->required();
  matrix->add_option("--order", order_name, "Column order: graded|lex")->check(CLI::IsMember({"graded", "lex"}));
  matrix->add_flag("--labels", labels, "Prefix '#' lines naming rows and columns");

  std::string facets, complex_file;
  std::optional<std::size_t> skeleton_h;
  std::size_t cp_l = 0;
  unsigned cp_q = 2;
  bool check_points = false;
  auto* char_poly = app.add_subcommand("char-poly", "Characteristic polynomial of a coordinate arrangement");
  auto* facets_opt = char_poly->add_option("--facets", facets, "Facets such as \"1 2, 1 3, 2 3\"");
  auto* file_opt = char_poly->add_option("--complex", complex_file, "Complex text file")->check(CLI::ExistingFile);
  auto* skel_opt = char_poly->add_option("--skeleton", skeleton_h, "Use the h-skeleton on L vertices");
  facets_opt->excludes(file_opt)->excludes(skel_opt);
  file_opt->excludes(skel_opt);
  char_poly->add_option("--l", cp_l, "Vertex count");
  char_poly->add_option("--q", cp_q, "Prime field size")->capture_default_str();
  char_poly->add_flag("--check", check_points, "Also enumerate P(A) and compare");
  char_poly->add_flag("--json", json, "Emit a JSON report");

  std::string property;
  VerifyRanges vranges;
  auto* verify = app.add_subcommand("verify", "Run a named property sweep");
  verify->add_option("NAME", property, "Property name")->required()->check(CLI::IsMember(verify_properties()));
  verify->add_option("--lmax", vranges.lmax, "Largest l");
  verify->add_option("--nmax", vranges.nmax, "Largest family size");
  verify->add_option("--smax", vranges.smax, "Largest s");
  verify->add_option("--tmax", vranges.tmax, "Largest t");
  add_engine(verify);

  ScanRanges sranges;
  auto* scan = app.add_subcommand("scan-conjecture", "Exact d of K(l,h,j), 2 <= j < h <= l, against the conjecture");
  scan->add_option("--lmin", sranges.lmin)->capture_default_str();
  scan->add_option("--lmax", sranges.lmax)->capture_default_str();
  add_engine(scan);

  auto* hamming = app.add_subcommand("hamming-check", "Certify K(L,H,J) as a Hamming code");
  hamming->add_option("L", l)->required();
  hamming->add_option("H", h)->required();
  hamming->add_option("J", j)->required();
  add_engine(hamming);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  auto emit = [&](const RunReport& report) {
    if (json)
      out << report.to_json().dump(2) << '\n';
    else
      report.print_text(out);
    return report.exit_code();
  };

  try {
    if (*params) {
      configure(26, 128);
      return emit(cmd_params(l, h, j, engine, witness));
    }
    if (*matrix) {
      out << cmd_matrix(l, h, j, order_name == "lex" ? ColumnOrder::support_lex : ColumnOrder::graded, labels);
      return kExitPass;
    }
    if (*char_poly) {
      std::optional<SimplicialComplex> complex;
      if (!complex_file.empty()) {
        std::ifstream in(complex_file);
        complex = read_complex(in);
      } else if (skeleton_h) {
        complex = skeleton(cp_l, *skeleton_h);
      } else if (!facets.empty()) {
        complex = from_facets(cp_l, parse_facet_list(facets));
      } else {
        throw DomainError("char-poly needs --facets, --complex or --skeleton");
      }
      return emit(cmd_char_poly(*complex, cp_q, check_points));
    }
    if (*verify) {
      configure(26, 128);
      return emit(cmd_verify(property, vranges, engine));
    }
    if (*scan) {
      configure(24, 40);
      return emit(cmd_scan_conjecture(sranges, engine));
    }
    if (*hamming) {
      configure(26, 1024);
      return emit(cmd_hamming_check(l, h, j, engine));
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace skelcodes::cli
