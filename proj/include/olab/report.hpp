#pragma once

#include <span>
#include <string>

#include "olab/density.hpp"
#include "olab/geometry.hpp"
#include "olab/oracles.hpp"

namespace olab {

// Renderers for every artifact the CLI emits. All output is a function of
// the inputs alone, so identical runs produce identical bytes.

std::string classification_json(const OverlapClassification& c);
std::string classification_text(const OverlapClassification& c);

std::string witness_json(const ReducedRational& t, const WitnessSearchOutcome& outcome,
                         int64_t max_depth, bool human);
std::string witness_text(const ReducedRational& t, const WitnessSearchOutcome& outcome,
                         int64_t max_depth, bool human);

std::string density_csv(std::span<const DensityReport> reports);
std::string density_json(std::span<const DensityReport> reports);
std::string density_text(std::span<const DensityReport> reports);

std::string measure_json(const ReducedRational& t, const MeasureEstimate& m);
std::string measure_csv(const ReducedRational& t, const MeasureEstimate& m);
std::string measure_text(const ReducedRational& t, const MeasureEstimate& m);

// One row per (level, scaled endpoint) for every level up to max_level.
std::string endpoints_csv(const ReducedRational& t, int64_t max_level);

std::string grid_pgm(const WGrid& grid);
std::string grid_svg(const WGrid& grid);

std::string verify_text(std::span<const OracleVerdict> verdicts, int64_t max_sum);
std::string verify_json(std::span<const OracleVerdict> verdicts, int64_t max_sum);

// Renders the scaled digit in Omega_t notation: one of "0", "3t", "3", "3t+3".
std::string omega_symbol(const DigitSet& ds, int64_t scaled_digit);

}  // namespace olab
