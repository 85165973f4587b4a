#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace blockfarm {

// splitmix64; constants from the reference implementation. Chosen because it
// is trivially portable, which keeps traces reproducible across languages.
struct SplitMix64 {
  uint64_t state = 0;

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform [-1, 1)
  double next_noise() { return 2.0 * next_unit() - 1.0; }
};

enum class Weather { sunny, cloudy, rain };

const char* weather_name(Weather w);

struct SimConfig {
  uint64_t seed = 0;
  int64_t dt_minutes = 30;
  double initial_moisture = 60.0;   // percent, [0, 100]
  double decay_lambda = 0.02;       // moisture fraction lost per tick, [0, 1)
  double t_mean = 22.0;             // degrees C
  double t_amp = 6.0;               // daily swing, degrees C
  double h_base = 55.0;             // percent
};

struct SensorReading {
  int64_t tick = 0;
  int64_t time_minutes = 0;  // tick * dt
  double soil_moisture = 0;  // percent, [0, 100]
  double temperature = 0;    // degrees C
  double humidity = 0;       // percent, [0, 100]
  Weather weather = Weather::sunny;
};

// Seeded plant telemetry model plus an irrigation actuator. Per tick the
// PRNG advances a fixed number of times (weather on every 8th tick, then
// temperature noise, then humidity noise) so traces are splice-stable.
class PlantSim {
 public:
  PlantSim() : PlantSim(SimConfig{}) {}
  explicit PlantSim(const SimConfig& config);

  const SimConfig& config() const { return config_; }

  // Advances one tick and returns the new reading.
  const SensorReading& tick();

  // Queues 0.1 * duration_s percent of moisture for the next tick's update.
  // Throws Errc::negative_duration for duration_s < 0.
  void irrigate(double duration_s);

  // Reading of the most recent tick; empty before the first tick.
  const std::optional<SensorReading>& current() const { return current_; }

  int64_t ticks_advanced() const { return next_tick_; }
  uint64_t draws_used() const { return draws_; }

  std::string trace_csv_header() const;
  std::string trace_csv_row(const SensorReading& r) const;

 private:
  SimConfig config_;
  SplitMix64 rng_;
  int64_t next_tick_ = 0;
  double moisture_;
  double pending_irrigation_ = 0.0;
  Weather weather_ = Weather::sunny;
  uint64_t draws_ = 0;
  std::optional<SensorReading> current_;
};

}  // namespace blockfarm
