#include "blockfarm/sensors.hpp"

#include <algorithm>
#include <cmath>

#include "blockfarm/error.hpp"
#include "blockfarm/value.hpp"

namespace blockfarm {

namespace {

// 2*pi as one double literal; the oracle script uses the same constant so
// both sides feed sin() bit-identical arguments.
constexpr double kTwoPi = 6.283185307179586;

double clamp01_100(double v) { return std::min(100.0, std::max(0.0, v)); }

}  // namespace

const char* weather_name(Weather w) {
  switch (w) {
    case Weather::sunny: return "sunny";
    case Weather::cloudy: return "cloudy";
    case Weather::rain: return "rain";
  }
  return "sunny";
}

PlantSim::PlantSim(const SimConfig& config)
    : config_(config), moisture_(config.initial_moisture) {
  if (config_.dt_minutes <= 0) fail(Errc::bad_args, "dt_minutes must be > 0");
  if (config_.initial_moisture < 0 || config_.initial_moisture > 100)
    fail(Errc::bad_args, "initial_moisture must be in [0, 100]");
  if (config_.decay_lambda < 0 || config_.decay_lambda >= 1)
    fail(Errc::bad_args, "decay_lambda must be in [0, 1)");
  rng_.state = config_.seed;
}

const SensorReading& PlantSim::tick() {
  const int64_t t = next_tick_++;

  // Weather holds for 8 ticks; drawn before the noise draws because the
  // humidity and moisture updates need to know whether it rains.
  if (t % 8 == 0) {
    double u = rng_.next_unit();
    ++draws_;
    weather_ = u < 0.6 ? Weather::sunny : u < 0.85 ? Weather::cloudy : Weather::rain;
  }
  double noise_t = rng_.next_noise();
  double noise_h = rng_.next_noise();
  draws_ += 2;

  const bool rain = weather_ == Weather::rain;
  const int64_t time = t * config_.dt_minutes;
  const double day_frac = static_cast<double>(time % 1440) / 1440.0;
  const double temperature =
      config_.t_mean + config_.t_amp * std::sin(kTwoPi * day_frac) + 0.5 * noise_t;
  const double humidity = clamp01_100(
      config_.h_base - 1.5 * (temperature - config_.t_mean) + 2.0 * noise_h +
      (rain ? 15.0 : 0.0));
  moisture_ = clamp01_100(moisture_ * (1.0 - config_.decay_lambda) +
                          (rain ? 8.0 : 0.0) + pending_irrigation_);
  pending_irrigation_ = 0.0;

  current_ = SensorReading{t, time, moisture_, temperature, humidity, weather_};
  return *current_;
}

void PlantSim::irrigate(double duration_s) {
  if (duration_s < 0) fail(Errc::negative_duration, "irrigation duration must be >= 0");
  pending_irrigation_ += 0.1 * duration_s;
}

std::string PlantSim::trace_csv_header() const {
  return "tick,time_minutes,soil_moisture,temperature,humidity,weather";
}

std::string PlantSim::trace_csv_row(const SensorReading& r) const {
  std::string row = std::to_string(r.tick);
  row += ',';
  row += std::to_string(r.time_minutes);
  row += ',';
  row += render_number(r.soil_moisture);
  row += ',';
  row += render_number(r.temperature);
  row += ',';
  row += render_number(r.humidity);
  row += ',';
  row += weather_name(r.weather);
  return row;
}

}  // namespace blockfarm
