// Schedule interchange: UTF-8 JSON documents with stable field order
// (instance, regime, transmissions[, note]).
#pragma once

#include <string>

#include "cdpic/schemes.hpp"

namespace cdpic {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScheduleDocument {
  ProblemInstance instance;
  std::string regime;
  std::vector<Transmission> transmissions;  // payloads sorted ascending
  std::string note;                         // optional, omitted when empty

  bool operator==(const ScheduleDocument&) const = default;
};

ScheduleDocument document_from_schedule(const Schedule&, std::string note = "");
Schedule schedule_from_document(const ScheduleDocument&);

std::string render_document(const ScheduleDocument&);
ScheduleDocument parse_document(const std::string& text);
ScheduleDocument load_document(const std::string& path);

}  // namespace cdpic
