#include "llperm/generator.hpp"

namespace llperm {

const char* to_string(MoveSource source) {
  switch (source) {
    case MoveSource::NoOp:
      return "noop";
    case MoveSource::Left:
      return "left";
    case MoveSource::Right:
      return "right";
  }
  return "?";
}

MoveCursor::MoveCursor(std::size_t length)
    : length_(length), slots_(length < 2 ? 0 : length - 1, 0) {}

std::optional<MoveRecord> MoveCursor::next() {
  // Odometer over the recursion frames, deepest frame varying fastest.
  for (std::size_t d = slots_.size(); d-- > 0;) {
    const std::size_t sublist = length_ - d;
    if (slots_[d] + 1 < sublist) {
      ++slots_[d];
      for (std::size_t deeper = d + 1; deeper < slots_.size(); ++deeper) slots_[deeper] = 0;
      return MoveRecord{d, schedule_source(sublist, slots_[d]), sublist};
    }
  }
  return std::nullopt;
}

std::vector<MoveRecord> move_stream(std::size_t length) {
  std::vector<MoveRecord> moves;
  MoveCursor cursor(length);
  while (auto move = cursor.next()) moves.push_back(*move);
  return moves;
}

std::vector<MoveRecord> schedule_stream(std::size_t length) {
  std::vector<MoveRecord> records;
  if (length < 2) return records;
  auto enter_frames = [&](std::size_t from) {
    for (std::size_t d = from; d + 1 < length; ++d) {
      records.push_back({d, MoveSource::NoOp, length - d});
    }
  };
  enter_frames(0);
  MoveCursor cursor(length);
  while (auto move = cursor.next()) {
    records.push_back(*move);
    enter_frames(move->index + 1);
  }
  return records;
}

}  // namespace llperm
