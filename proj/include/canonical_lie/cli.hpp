#pragma once

// The check / enumerate / verify workflows behind the command-line tool.
// Every command writes a deterministic report and returns the exit code:
//   0  canonical / success
//   1  negative verdict
//   2  usage or input error
//   3  the two deciders disagree (method=both, or any verify discrepancy)

#include <canonical_lie/canonical.hpp>
#include <canonical_lie/io.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace canonical_lie::cli {

enum class Command { Check, Enumerate, Verify };
enum class Method { Prop3, Theorem2, Both, Strict };
enum class Format { Table, Json };

inline constexpr int kExitCanonical = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDiscrepancy = 3;

struct CliConfig {
  Command command = Command::Check;
  std::optional<std::string> spectrum;     // inline JSON or a path
  std::optional<std::string> matrix_path;
  Method method = Method::Both;
  std::optional<long> n;
  std::optional<long> max_n;
  std::string max_lambda = "7/2";
  Format format = Format::Table;
  unsigned threads = 1;
};

inline std::string method_name(Method m) {
  switch (m) {
    case Method::Prop3: return "prop3";
    case Method::Theorem2: return "theorem2";
    case Method::Both: return "both";
    case Method::Strict: return "strict";
  }
  return "?";
}

/// Worker count from CANONICAL_LIE_THREADS, defaulting to 1.
inline unsigned threads_from_env() {
  const char* v = std::getenv("CANONICAL_LIE_THREADS");
  if (v == nullptr) return 1;
  char* end = nullptr;
  const long t = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || t < 1) return 1;
  return static_cast<unsigned>(std::min<long>(t, 256));
}

namespace detail {

inline std::string grading_line(const GradingMap& g) {
  std::string s;
  for (const auto& e : g.entries()) {
    if (!s.empty()) s += " ";
    s += "g[" + to_string(e.grade) + "]=" + std::to_string(e.space.dim());
  }
  return s;
}

inline json verdict_json(const Verdict& v) {
  json j = {{"canonical", v.canonical}, {"reason", v.reason_name()}};
  if (const auto* f = std::get_if<GenerationFails>(&v.reason))
    j["failure"] = {{"grade", f->grade}, {"achieved_dim", f->achieved_dim}, {"required_dim", f->required_dim}};
  if (v.witness) j["grading"] = grading_to_json(*v.witness);
  json trace = json::array();
  for (const auto& st : v.trace)
    trace.push_back({{"grade", st.grade}, {"generated_dim", st.generated_dim}, {"graded_dim", st.graded_dim}});
  j["trace"] = std::move(trace);
  return j;
}

inline void verdict_table(std::ostream& out, const Verdict& v) {
  out << "theorem2: " << (v.canonical ? "canonical" : "not canonical") << " (" << v.reason_name() << ")\n";
  if (const auto* f = std::get_if<GenerationFails>(&v.reason))
    out << "  generation fails at grade " << f->grade << ": dim g^" << f->grade << " = " << f->achieved_dim
        << " < dim g_" << f->grade << " = " << f->required_dim << "\n";
  if (v.witness) out << "  grading: " << grading_line(*v.witness) << "\n";
  if (!v.trace.empty()) {
    out << "  grade  dim g^k  dim g_k\n";
    for (const auto& st : v.trace)
      out << "  " << std::setw(5) << st.grade << "  " << std::setw(7) << st.generated_dim << "  " << std::setw(7)
          << st.graded_dim << "\n";
  }
}

inline Spectrum load_spectrum(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_spectrum(arg);
  return parse_spectrum(read_file(arg));
}

}  // namespace detail

inline int check_spectrum(const Spectrum& s, Method method, Format format, std::ostream& out, json report) {
  std::optional<Verdict> t2;
  std::optional<bool> p3;
  std::optional<bool> strict;
  std::size_t strict_dim = 0;
  const std::size_t full_dim = s.n() * (s.n() - 1) / 2;

  if (method == Method::Theorem2 || method == Method::Both) t2 = theorem2_check(s);
  if (method == Method::Prop3 || method == Method::Both) p3 = prop3_check(s);
  if (method == Method::Strict) {
    strict_dim = strict_generated_dim(realize(s));
    strict = strict_dim == full_dim;
  }

  bool canonical = false;
  bool discrepancy = false;
  if (t2) canonical = t2->canonical;
  if (p3) canonical = p3.value();
  if (t2 && p3) discrepancy = t2->canonical != *p3;
  if (strict) canonical = *strict;

  if (format == Format::Json) {
    report["spectrum"] = spectrum_to_json(s);
    report["method"] = method_name(method);
    if (t2) report["theorem2"] = detail::verdict_json(*t2);
    if (p3) report["prop3"] = {{"canonical", *p3}};
    if (strict) report["strict"] = {{"generates", *strict}, {"generated_dim", strict_dim}, {"full_dim", full_dim}};
    if (t2 && p3) report["agreement"] = !discrepancy;
    report["canonical"] = canonical;
    out << report.dump(2) << "\n";
  } else {
    out << "spectrum: " << s.to_string() << "  (so(" << s.n() << "))\n";
    out << "method: " << method_name(method) << "\n";
    if (t2) detail::verdict_table(out, *t2);
    if (p3) out << "prop3: " << (*p3 ? "canonical" : "not canonical") << "\n";
    if (strict)
      out << "strict: g_1 + g_-1 generates a subalgebra of dim " << strict_dim << " of " << full_dim << " ("
          << (*strict ? "generates" : "does not generate") << ")\n";
    if (t2 && p3) out << "agreement: " << (discrepancy ? "NO - DISCREPANCY" : "yes") << "\n";
  }
  if (discrepancy) return kExitDiscrepancy;
  return canonical ? kExitCanonical : kExitNegative;
}

inline int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.spectrum.has_value() == cfg.matrix_path.has_value()) {
    err << "check: exactly one of --spectrum or --matrix is required\n";
    return kExitInputError;
  }
  try {
    if (cfg.spectrum) return check_spectrum(detail::load_spectrum(*cfg.spectrum), cfg.method, cfg.format, out, json::object());

    const RatMatrix m = parse_matrix(read_file(*cfg.matrix_path));
    const auto extracted = spectrum_from_matrix(m);
    if (const auto* bad = std::get_if<NotHalfIntegral>(&extracted)) {
      if (cfg.format == Format::Json) {
        json j = {{"input", "matrix"},
                  {"n", bad->n},
                  {"half_integral_dims", bad->accounted},
                  {"canonical", false},
                  {"reason", "NonIntegralAdSpectrum"}};
        out << j.dump(2) << "\n";
      } else {
        out << "matrix: n = " << bad->n << ", half-integral magnitudes account for " << bad->accounted
            << " dimensions\n";
        out << "verdict: not canonical (NonIntegralAdSpectrum)\n";
      }
      return kExitNegative;
    }
    if (cfg.format == Format::Table) out << "matrix: spectrum extracted exactly\n";
    return check_spectrum(std::get<Spectrum>(extracted), cfg.method, cfg.format, out, json{{"input", "matrix"}});
  } catch (const InputError& e) {
    err << "input error at " << e.what() << "\n";
  } catch (const NotSkew& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const TooSmall& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const DimensionMismatch& e) {
    err << "input error: " << e.what() << "\n";
  }
  return kExitInputError;
}

inline int cmd_enumerate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n || *cfg.n < 3) {
    err << "enumerate: --n must be at least 3\n";
    return kExitInputError;
  }
  const auto n = static_cast<std::size_t>(*cfg.n);
  const auto classes = enumerate_canonical(n);
  if (cfg.format == Format::Json) {
    json arr = json::array();
    for (const auto& s : classes)
      arr.push_back({{"spectrum", spectrum_to_json(s)}, {"grading", grading_to_json(grading_of(realize(s)))}});
    out << json{{"n", n}, {"count", classes.size()}, {"classes", std::move(arr)}}.dump(2) << "\n";
  } else {
    out << "so(" << n << "): " << classes.size() << " canonical classes\n";
    for (const auto& s : classes) out << "  " << s.to_string() << "  " << detail::grading_line(grading_of(realize(s))) << "\n";
  }
  return kExitCanonical;
}

/// Per-spectrum outcome of the verify sweep.
struct SweepRecord {
  Spectrum spectrum;
  Verdict theorem2;
  bool prop3 = false;
  bool strict = false;
  std::optional<bool> theorem1;  // set for canonical spectra

  bool agrees() const { return theorem2.canonical == prop3; }
  bool consistent() const {
    return agrees() && (!strict || theorem2.canonical) && (!theorem1 || *theorem1);
  }
};

inline SweepRecord sweep_one(const Spectrum& s) {
  SweepRecord r{s, {}, prop3_check(s), false, std::nullopt};
  const LieTable t = realize(s);
  r.theorem2 = theorem2_check(t);
  r.strict = strict_generation_check(t);
  if (r.theorem2.canonical) r.theorem1 = theorem1_properties(t).all();
  return r;
}

/// Records in the same order as `spectra`, whatever the worker count.
inline std::vector<SweepRecord> run_sweep(const std::vector<Spectrum>& spectra, unsigned threads) {
  std::vector<std::optional<SweepRecord>> slots(spectra.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(spectra.size(), 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < spectra.size(); ++i) slots[i] = sweep_one(spectra[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < spectra.size(); i += threads) slots[i] = sweep_one(spectra[i]);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<SweepRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Consecutive half-integral magnitudes from 1/2 with mult(1/2) = 1: the
/// shape the classification must reject on multiplicity grounds alone.
inline bool is_multiplicity_counterexample(const Spectrum& s) {
  const auto& es = s.entries();
  if (es.empty() || es.front().lambda != make_rational(1, 2) || es.front().mult != 1) return false;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i].lambda != es.front().lambda + static_cast<long>(i)) return false;
  return true;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.max_n || *cfg.max_n < 3) {
    err << "verify: --max-n must be at least 3\n";
    return kExitInputError;
  }
  Rational max_lambda;
  try {
    max_lambda = parse_rational(cfg.max_lambda);
  } catch (const RationalParseError& e) {
    err << "verify: --max-lambda: " << e.what() << "\n";
    return kExitInputError;
  }
  if (sgn(max_lambda) <= 0 || !is_integer(2 * max_lambda)) {
    err << "verify: --max-lambda must be a positive half-integer, got " << to_string(max_lambda) << "\n";
    return kExitInputError;
  }

  std::vector<Spectrum> spectra;
  for (long n = 3; n <= *cfg.max_n; ++n) {
    auto part = half_integral_spectra(static_cast<std::size_t>(n), max_lambda);
    spectra.insert(spectra.end(), part.begin(), part.end());
  }
  const auto records = run_sweep(spectra, cfg.threads);

  std::size_t agreements = 0, canonical = 0, theorem1_ok = 0, strict_true = 0;
  std::vector<const SweepRecord*> discrepancies, strict_counter, multiplicity_counter;
  for (const auto& r : records) {
    if (r.agrees()) ++agreements;
    if (r.theorem2.canonical) ++canonical;
    if (r.theorem1.value_or(false)) ++theorem1_ok;
    if (r.strict) ++strict_true;
    if (!r.consistent()) discrepancies.push_back(&r);
    if (r.theorem2.canonical && !r.strict) strict_counter.push_back(&r);
    if (is_multiplicity_counterexample(r.spectrum)) multiplicity_counter.push_back(&r);
  }

  if (cfg.format == Format::Json) {
    auto list = [](const std::vector<const SweepRecord*>& rs) {
      json a = json::array();
      for (const auto* r : rs)
        a.push_back({{"spectrum", spectrum_to_json(r->spectrum)},
                     {"theorem2", r->theorem2.canonical},
                     {"reason", r->theorem2.reason_name()},
                     {"prop3", r->prop3},
                     {"strict", r->strict}});
      return a;
    };
    json j = {{"max_n", *cfg.max_n},
              {"max_lambda", to_string(max_lambda)},
              {"tested", records.size()},
              {"agreements", agreements},
              {"canonical", canonical},
              {"theorem1_verified", theorem1_ok},
              {"strict_generating", strict_true},
              {"discrepancies", list(discrepancies)},
              {"strict_counterexamples", list(strict_counter)},
              {"multiplicity_counterexamples", list(multiplicity_counter)}};
    out << j.dump(2) << "\n";
  } else {
    out << "verify: so(3) .. so(" << *cfg.max_n << "), magnitudes in {0, 1/2, ..., " << to_string(max_lambda) << "}\n";
    out << "tested: " << records.size() << "\n";
    out << "theorem2 = prop3: " << agreements << " / " << records.size() << "\n";
    out << "canonical: " << canonical << ", theorem1 verified: " << theorem1_ok << "\n";
    out << "strict generation holds: " << strict_true << "\n";
    out << "strict-definition counterexamples (canonical, g_1 + g_-1 does not generate): " << strict_counter.size() << "\n";
    for (const auto* r : strict_counter) out << "  " << r->spectrum.to_string() << "\n";
    out << "multiplicity counterexamples (mult(1/2) = 1): " << multiplicity_counter.size() << "\n";
    for (const auto* r : multiplicity_counter)
      out << "  " << r->spectrum.to_string() << "  theorem2: " << r->theorem2.reason_name()
          << ", prop3: " << (r->prop3 ? "canonical" : "not canonical") << "\n";
    out << "discrepancies: " << discrepancies.size() << "\n";
    for (const auto* r : discrepancies)
      out << "  " << r->spectrum.to_string() << "  theorem2=" << r->theorem2.canonical << " prop3=" << r->prop3
          << " strict=" << r->strict << "\n";
  }
  return discrepancies.empty() ? kExitCanonical : kExitDiscrepancy;
}

inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Check: return cmd_check(cfg, out, err);
    case Command::Enumerate: return cmd_enumerate(cfg, out, err);
    case Command::Verify: return cmd_verify(cfg, out, err);
  }
  return kExitInputError;
}

}  // namespace canonical_lie::cli
