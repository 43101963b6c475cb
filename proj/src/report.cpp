#include "olab/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace olab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

ordered_json gamma_json(const std::optional<GammaWitness>& g) {
  if (!g) return nullptr;
  return ordered_json{{"k", g->k}, {"ell", g->ell}};
}

ordered_json classification_to_json(const OverlapClassification& c) {
  ordered_json j;
  j["p"] = c.input_p;
  j["q"] = c.input_q;
  j["reduced_p"] = c.t.p;
  j["reduced_q"] = c.t.q;
  j["overlap"] = c.overlap;
  j["gamma_p"] = gamma_json(c.gamma_p);
  j["gamma_q"] = gamma_json(c.gamma_q);
  j["regime"] = regime_name(c.regime);
  return j;
}

std::string gamma_text(const std::optional<GammaWitness>& g) {
  if (!g) return "not in Gamma";
  return "in Gamma (k=" + std::to_string(g->k) + ", ell=" + std::to_string(g->ell) + ")";
}

ordered_json density_row_json(const DensityReport& r) {
  const DensityLimits lim = density_limits();
  ordered_json j;
  j["N"] = r.N;
  j["count_W"] = r.count_W;
  j["count_W_hat"] = r.count_W_hat;
  j["count_W_tilde"] = r.count_W_tilde;
  j["totient_sum"] = r.totient_sum;
  j["ratio_W"] = r.ratio_W;
  j["ratio_W_hat"] = r.ratio_W_hat;
  j["ratio_W_tilde"] = r.ratio_W_tilde;
  j["delta_W"] = r.ratio_W - lim.w;
  j["delta_W_hat"] = r.ratio_W_hat - lim.w_hat;
  j["delta_W_tilde"] = r.ratio_W_tilde - lim.w_tilde;
  return j;
}

}  // namespace

std::string classification_json(const OverlapClassification& c) {
  return classification_to_json(c).dump() + "\n";
}

std::string classification_text(const OverlapClassification& c) {
  std::ostringstream out;
  out << "t = " << c.input_p << "/" << c.input_q;
  if (c.input_p != c.t.p || c.input_q != c.t.q) {
    out << " (reduced: " << c.t.p << "/" << c.t.q << ")";
  }
  out << "\n";
  out << "regime: " << regime_name(c.regime) << "\n";
  out << "p = " << c.t.p << ": " << gamma_text(c.gamma_p) << "\n";
  out << "q = " << c.t.q << ": " << gamma_text(c.gamma_q) << "\n";
  out << "exact overlap: " << (c.overlap ? "yes" : "no") << "\n";
  return out.str();
}

std::string omega_symbol(const DigitSet& ds, int64_t scaled_digit) {
  if (scaled_digit == ds.digits[0]) return "0";
  if (scaled_digit == ds.digits[1]) return "3t";
  if (scaled_digit == ds.digits[2]) return "3";
  if (scaled_digit == ds.digits[3]) return "3t+3";
  throw std::invalid_argument("omega_symbol: value is not a digit");
}

namespace {

ordered_json witness_to_json(const ReducedRational& t, const WitnessSearchOutcome& outcome,
                             int64_t max_depth, bool human) {
  ordered_json j;
  j["p"] = t.p;
  j["q"] = t.q;
  if (outcome.witness) {
    const OverlapWitness& w = *outcome.witness;
    j["depth"] = w.depth;
    j["block_i"] = w.block_i;
    j["block_j"] = w.block_j;
    if (human) {
      const DigitSet ds = DigitSet::for_rational(t);
      std::vector<std::string> oi, oj;
      for (const int64_t d : w.block_i) oi.push_back(omega_symbol(ds, d));
      for (const int64_t d : w.block_j) oj.push_back(omega_symbol(ds, d));
      j["omega_i"] = oi;
      j["omega_j"] = oj;
    }
  } else {
    j["witness"] = nullptr;
    j["max_depth"] = max_depth;
    j["exhaustive"] = outcome.exhausted;
  }
  return j;
}

}  // namespace

std::string witness_json(const ReducedRational& t, const WitnessSearchOutcome& outcome,
                         int64_t max_depth, bool human) {
  return witness_to_json(t, outcome, max_depth, human).dump() + "\n";
}

std::string witness_text(const ReducedRational& t, const WitnessSearchOutcome& outcome,
                         int64_t max_depth, bool human) {
  std::ostringstream out;
  if (!outcome.witness) {
    out << "t = " << t.p << "/" << t.q << ": no exact overlap";
    if (outcome.exhausted) {
      out << " (difference-state space exhausted within depth " << max_depth << ")\n";
    } else {
      out << " within depth " << max_depth << " (search truncated)\n";
    }
    return out.str();
  }
  const OverlapWitness& w = *outcome.witness;
  out << "t = " << t.p << "/" << t.q << ": exact overlap at depth " << w.depth << "\n";
  const auto render = [&](const std::vector<int64_t>& block) {
    std::string s;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(block[i]);
    }
    return s;
  };
  out << "block_i (scaled): " << render(w.block_i) << "\n";
  out << "block_j (scaled): " << render(w.block_j) << "\n";
  if (human) {
    const DigitSet ds = DigitSet::for_rational(t);
    const auto render_omega = [&](const std::vector<int64_t>& block) {
      std::string s;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) s += " ";
        s += omega_symbol(ds, block[i]);
      }
      return s;
    };
    out << "block_i (omega):  " << render_omega(w.block_i) << "\n";
    out << "block_j (omega):  " << render_omega(w.block_j) << "\n";
  }
  return out.str();
}

std::string density_csv(std::span<const DensityReport> reports) {
  const DensityLimits lim = density_limits();
  std::string out =
      "N,count_W,count_W_hat,count_W_tilde,totient_sum,"
      "ratio_W,ratio_W_hat,ratio_W_tilde,delta_W,delta_W_hat,delta_W_tilde\n";
  for (const DensityReport& r : reports) {
    out += std::to_string(r.N) + "," + std::to_string(r.count_W) + "," +
           std::to_string(r.count_W_hat) + "," + std::to_string(r.count_W_tilde) + "," +
           std::to_string(r.totient_sum) + "," + fixed12(r.ratio_W) + "," +
           fixed12(r.ratio_W_hat) + "," + fixed12(r.ratio_W_tilde) + "," +
           fixed12(r.ratio_W - lim.w) + "," + fixed12(r.ratio_W_hat - lim.w_hat) + "," +
           fixed12(r.ratio_W_tilde - lim.w_tilde) + "\n";
  }
  return out;
}

std::string density_json(std::span<const DensityReport> reports) {
  const DensityLimits lim = density_limits();
  ordered_json j;
  j["limits"] = {{"W", lim.w}, {"W_hat", lim.w_hat}, {"W_tilde", lim.w_tilde}, {"totient", lim.totient}};
  j["rows"] = ordered_json::array();
  for (const DensityReport& r : reports) j["rows"].push_back(density_row_json(r));
  return j.dump() + "\n";
}

std::string density_text(std::span<const DensityReport> reports) {
  const DensityLimits lim = density_limits();
  std::ostringstream out;
  out << "limits: W " << fixed12(lim.w) << ", W_hat " << fixed12(lim.w_hat) << ", W_tilde "
      << fixed12(lim.w_tilde) << "\n";
  for (const DensityReport& r : reports) {
    out << "N=" << r.N << "  W=" << r.count_W << " (" << fixed12(r.ratio_W) << ")"
        << "  W_hat=" << r.count_W_hat << " (" << fixed12(r.ratio_W_hat) << ")"
        << "  W_tilde=" << r.count_W_tilde << " (" << fixed12(r.ratio_W_tilde) << ")"
        << "  totient_sum=" << r.totient_sum << "\n";
  }
  return out.str();
}

std::string measure_json(const ReducedRational& t, const MeasureEstimate& m) {
  ordered_json j;
  j["p"] = t.p;
  j["q"] = t.q;
  j["level"] = m.level;
  j["measure_num"] = m.measure.num;
  j["measure_den"] = m.measure.den;
  j["D_n"] = m.endpoint_count;
  j["dim_estimate"] = m.dim_estimate;
  return j.dump() + "\n";
}

std::string measure_csv(const ReducedRational& t, const MeasureEstimate& m) {
  std::string out = "p,q,level,measure_num,measure_den,D_n,dim_estimate\n";
  out += std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(m.level) + "," +
         std::to_string(m.measure.num) + "," + std::to_string(m.measure.den) + "," +
         std::to_string(m.endpoint_count) + "," + fixed12(m.dim_estimate) + "\n";
  return out;
}

std::string measure_text(const ReducedRational& t, const MeasureEstimate& m) {
  std::ostringstream out;
  out << "t = " << t.p << "/" << t.q << ", level " << m.level << "\n";
  out << "D_n = " << m.endpoint_count << " of " << (int64_t{1} << (2 * m.level)) << "\n";
  out << "measure = " << m.measure.num << "/" << m.measure.den << " ("
      << fixed12(m.measure.value()) << ")\n";
  out << "dim estimate = " << fixed12(m.dim_estimate) << "\n";
  return out.str();
}

std::string endpoints_csv(const ReducedRational& t, int64_t max_level) {
  std::string out = "level,scaled_endpoint\n";
  for (int64_t n = 1; n <= max_level; ++n) {
    const LevelApproximation la = level_endpoints(t, n);
    for (const int64_t v : la.endpoints) {
      out += std::to_string(n) + "," + std::to_string(v) + "\n";
    }
  }
  return out;
}

std::string grid_pgm(const WGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.N) + " " + std::to_string(grid.N) + "\n255\n";
  out.reserve(out.size() + grid.cells.size());
  for (const std::uint8_t c : grid.cells) {
    out.push_back(c ? '\0' : static_cast<char>(255));  // members are black
  }
  return out;
}

std::string grid_svg(const WGrid& grid) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << grid.N << "\" height=\""
      << grid.N << "\" viewBox=\"0 0 " << grid.N << " " << grid.N << "\">\n";
  out << "<rect width=\"" << grid.N << "\" height=\"" << grid.N << "\" fill=\"white\"/>\n";
  for (int64_t q = 1; q <= grid.N; ++q) {
    for (int64_t p = 1; p <= grid.N; ++p) {
      if (grid.at(p, q)) {
        out << "<rect x=\"" << (p - 1) << "\" y=\"" << (q - 1)
            << "\" width=\"1\" height=\"1\" fill=\"black\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

std::string verdict_line(const OracleVerdict& v) {
  std::string s = "p=" + std::to_string(v.p) + " q=" + std::to_string(v.q) +
                  " classifier=" + (v.classifier_overlap ? "overlap" : "none") +
                  " witness=" + (v.witness_found ? "overlap" : "none") +
                  " divisibility=" + (v.divisibility_overlap ? "overlap" : "none");
  if (v.rank_overlap) s += std::string(" rank=") + (*v.rank_overlap ? "overlap" : "none");
  return s;
}

}  // namespace

std::string verify_text(std::span<const OracleVerdict> verdicts, int64_t max_sum) {
  std::size_t disagreements = 0;
  std::string body;
  for (const OracleVerdict& v : verdicts) {
    if (!v.agree()) {
      ++disagreements;
      body += "DISAGREEMENT " + verdict_line(v) + "\n";
    }
  }
  const bool with_rank = !verdicts.empty() && verdicts.front().rank_overlap.has_value();
  std::string out = "checked " + std::to_string(verdicts.size()) +
                    " coprime pairs with p+q <= " + std::to_string(max_sum) + " (oracles: classifier, witness, divisibility" +
                    (with_rank ? ", rank" : "") + ")\n";
  out += body;
  out += "disagreements: " + std::to_string(disagreements) + "\n";
  return out;
}

std::string verify_json(std::span<const OracleVerdict> verdicts, int64_t max_sum) {
  ordered_json j;
  j["max_sum"] = max_sum;
  j["pairs_checked"] = verdicts.size();
  j["disagreements"] = ordered_json::array();
  for (const OracleVerdict& v : verdicts) {
    if (v.agree()) continue;
    ordered_json d;
    d["p"] = v.p;
    d["q"] = v.q;
    d["classifier"] = v.classifier_overlap;
    d["witness"] = v.witness_found;
    d["divisibility"] = v.divisibility_overlap;
    if (v.rank_overlap) d["rank"] = *v.rank_overlap;
    j["disagreements"].push_back(d);
  }
  return j.dump() + "\n";
}

}  // namespace olab
