#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "vnibcreg/common/check.hpp"

namespace vnibcreg {

inline constexpr int kNumChannels = 24;
inline constexpr int kNumSamples = 16000;
inline constexpr int kSampleRateHz = 1000;

enum class Label {
  Noise,
  Regional,
  Rockfall,
  SlopeHF,
  SlopeLF,
  SlopeMulti,
  SlopeTremor,
  Spike,
  Unlabeled,
};

inline constexpr int kNumLabels = 9;

inline const char* label_name(Label l) {
  switch (l) {
    case Label::Noise: return "Noise";
    case Label::Regional: return "Regional";
    case Label::Rockfall: return "Rockfall";
    case Label::SlopeHF: return "SlopeHF";
    case Label::SlopeLF: return "SlopeLF";
    case Label::SlopeMulti: return "SlopeMulti";
    case Label::SlopeTremor: return "SlopeTremor";
    case Label::Spike: return "Spike";
    case Label::Unlabeled: return "Unlabeled";
  }
  return "?";
}

inline Label label_from_string(const std::string& s) {
  for (int i = 0; i < kNumLabels; ++i) {
    const Label l = static_cast<Label>(i);
    if (s == label_name(l)) return l;
  }
  VNIB_FAIL("unknown label string \"", s, "\"");
}

/// 24 x 16000 waveform, row-major. Shared between records so that large
/// collections (and tests that fabricate them) stay cheap to copy.
struct Waveform {
  std::vector<float> data;  // kNumChannels * kNumSamples

  Waveform() : data(static_cast<std::size_t>(kNumChannels) * kNumSamples, 0.0f) {}

  float& at(int ch, int i) {
    return data[static_cast<std::size_t>(ch) * kNumSamples + i];
  }
  float at(int ch, int i) const {
    return data[static_cast<std::size_t>(ch) * kNumSamples + i];
  }
  const float* channel(int ch) const {
    return data.data() + static_cast<std::size_t>(ch) * kNumSamples;
  }

  bool all_finite() const {
    return std::all_of(data.begin(), data.end(),
                       [](float v) { return std::isfinite(v); });
  }
};

struct EventRecord {
  std::string id;
  Label label = Label::Unlabeled;
  std::shared_ptr<const Waveform> waveform;

  bool operator==(const EventRecord& o) const {
    if (id != o.id || label != o.label) return false;
    if (waveform == o.waveform) return true;
    if (!waveform || !o.waveform) return false;
    return waveform->data == o.waveform->data;
  }
};

class EventCollection {
 public:
  EventCollection() = default;

  explicit EventCollection(std::vector<EventRecord> events)
      : events_(std::move(events)) {
    std::map<std::string, int> seen;
    for (const auto& e : events_) {
      VNIB_CHECK(++seen[e.id] == 1, "duplicate event id \"", e.id, "\"");
      VNIB_CHECK(e.waveform != nullptr, "event \"", e.id, "\": missing waveform");
      class_counts_[e.label]++;
    }
  }

  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const std::vector<EventRecord>& events() const { return events_; }
  const EventRecord& operator[](std::size_t i) const { return events_[i]; }

  const std::map<Label, int>& class_counts() const { return class_counts_; }

  int count(Label l) const {
    auto it = class_counts_.find(l);
    return it == class_counts_.end() ? 0 : it->second;
  }

  /// Distinct non-Unlabeled labels present, in enum order.
  std::vector<Label> labels_present() const {
    std::vector<Label> out;
    for (const auto& [l, n] : class_counts_) {
      if (l != Label::Unlabeled && n > 0) out.push_back(l);
    }
    return out;
  }

  /// Events with a valid (non-Unlabeled) class, original order preserved.
  EventCollection labeled_only() const {
    std::vector<EventRecord> kept;
    for (const auto& e : events_) {
      if (e.label != Label::Unlabeled) kept.push_back(e);
    }
    return EventCollection(std::move(kept));
  }

  bool operator==(const EventCollection& o) const {
    return events_ == o.events_;
  }

 private:
  std::vector<EventRecord> events_;
  std::map<Label, int> class_counts_;
};

}  // namespace vnibcreg
