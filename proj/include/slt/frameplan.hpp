#pragma once

// Input geometry for the two feature front-ends: sliding 64-frame windows over padded
// full-body frames, and per-frame 96x96 mouth crops. Pure arithmetic, no pixels touched.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "slt/error.hpp"

namespace slt::frames {

inline constexpr int kBodyFeatureDim = 1024;
inline constexpr int kMouthCrop = 96;
inline constexpr int kMouthFeatureDim = 768;

enum class Fill { GRAY };

struct PadSpec {
  double left_frac = 0.20;
  double right_frac = 0.20;
  double top_frac = 0.075;
  double bottom_frac = 0.075;
  int target_w = 224;
  int target_h = 224;
  Fill fill = Fill::GRAY;

  void validate() const {
    if (left_frac < 0 || right_frac < 0 || top_frac < 0 || bottom_frac < 0)
      throw DataError("padding fractions must be non-negative");
    if (target_w <= 0 || target_h <= 0) throw DataError("target resolution must be positive");
  }
};

struct WindowSpec {
  std::int64_t window = 64;
  std::int64_t stride = 8;

  void validate() const {
    if (window < 1) throw DataError("window must be >= 1");
    if (stride < 1 || stride > window) throw DataError("stride must be in [1, window]");
  }
};

struct PaddingPlan {
  std::int64_t padded_w = 0;
  std::int64_t padded_h = 0;
  double scale_x = 0.0;  // target / padded
  double scale_y = 0.0;

  bool operator==(const PaddingPlan&) const = default;
};

struct WindowPlan {
  PaddingPlan padding;  // zero unless frame dimensions were given
  std::int64_t frame_count = 0;
  std::int64_t window = 0;
  std::int64_t stride = 0;
  std::vector<std::int64_t> window_starts;
  std::int64_t tail_padding = 0;  // repeated last frames appended to reach one full window
  int feature_dim = kBodyFeatureDim;

  bool operator==(const WindowPlan&) const = default;
};

struct MouthPlan {
  int crop_w = kMouthCrop;
  int crop_h = kMouthCrop;
  int feature_dim = kMouthFeatureDim;
  std::int64_t sequence_len = 0;

  bool operator==(const MouthPlan&) const = default;
};

/// Padded box rounds half away from zero; scales map the padded box onto the target size.
inline PaddingPlan plan_padding(std::int64_t w, std::int64_t h, const PadSpec& spec = {}) {
  if (w <= 0 || h <= 0) throw DataError("frame dimensions must be positive");
  spec.validate();
  PaddingPlan p;
  p.padded_w = static_cast<std::int64_t>(std::round(static_cast<double>(w) * (1.0 + spec.left_frac + spec.right_frac)));
  p.padded_h = static_cast<std::int64_t>(std::round(static_cast<double>(h) * (1.0 + spec.top_frac + spec.bottom_frac)));
  p.scale_x = static_cast<double>(spec.target_w) / static_cast<double>(p.padded_w);
  p.scale_y = static_cast<double>(spec.target_h) / static_cast<double>(p.padded_h);
  return p;
}

/// Starts 0, stride, 2*stride, ... with start + window <= frame_count. A clip shorter than one
/// window still yields a single window at 0, padded by repeating its last frame.
inline WindowPlan plan_windows(std::int64_t frame_count, const WindowSpec& spec = {}) {
  if (frame_count < 0) throw DataError("frame_count must be non-negative");
  spec.validate();
  WindowPlan plan;
  plan.frame_count = frame_count;
  plan.window = spec.window;
  plan.stride = spec.stride;
  if (frame_count == 0) return plan;
  if (frame_count < spec.window) {
    plan.window_starts.push_back(0);
    plan.tail_padding = spec.window - frame_count;
    return plan;
  }
  plan.window_starts.reserve(static_cast<std::size_t>((frame_count - spec.window) / spec.stride + 1));
  for (std::int64_t s = 0; s + spec.window <= frame_count; s += spec.stride) plan.window_starts.push_back(s);
  return plan;
}

inline WindowPlan plan_video(std::int64_t frame_count, std::int64_t w, std::int64_t h, const PadSpec& pad = {},
                             const WindowSpec& win = {}) {
  WindowPlan plan = plan_windows(frame_count, win);
  plan.padding = plan_padding(w, h, pad);
  return plan;
}

inline MouthPlan plan_mouth(std::int64_t frame_count) {
  if (frame_count < 0) throw DataError("frame_count must be non-negative");
  MouthPlan m;
  m.sequence_len = frame_count;
  return m;
}

inline nlohmann::json to_json(const WindowPlan& p) {
  return {{"frame_count", p.frame_count},
          {"window", p.window},
          {"stride", p.stride},
          {"padded_w", p.padding.padded_w},
          {"padded_h", p.padding.padded_h},
          {"scale_x", p.padding.scale_x},
          {"scale_y", p.padding.scale_y},
          {"window_starts", p.window_starts},
          {"tail_padding", p.tail_padding},
          {"feature_dim", p.feature_dim}};
}

inline nlohmann::json to_json(const MouthPlan& m) {
  return {{"crop_w", m.crop_w}, {"crop_h", m.crop_h}, {"feature_dim", m.feature_dim}, {"sequence_len", m.sequence_len}};
}

}  // namespace slt::frames
