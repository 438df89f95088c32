#include "cdpic/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cdpic {

namespace {

using Json = nlohmann::ordered_json;

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer field: ") + key);
  return j[key].get<int>();
}

}  // namespace

ScheduleDocument document_from_schedule(const Schedule& schedule, std::string note) {
  return ScheduleDocument{schedule.instance, schedule.regime, schedule.transmissions,
                          std::move(note)};
}

Schedule schedule_from_document(const ScheduleDocument& doc) {
  return Schedule{doc.instance, doc.transmissions, doc.regime};
}

std::string render_document(const ScheduleDocument& doc) {
  Json j;
  j["instance"] = {{"m", doc.instance.m},
                   {"c", doc.instance.c},
                   {"k", doc.instance.k},
                   {"s", doc.instance.s}};
  j["regime"] = doc.regime;
  j["transmissions"] = Json::array();
  for (const auto& t : doc.transmissions)
    j["transmissions"].push_back({{"tx", t.transmitter}, {"xor", t.payload}});
  if (!doc.note.empty()) j["note"] = doc.note;
  return j.dump(2) + "\n";
}

ScheduleDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("instance") || !j["instance"].is_object())
    throw ParseError("document must be an object with an instance");

  ScheduleDocument doc;
  const Json& inst = j["instance"];
  try {
    doc.instance = make_instance(require_int(inst, "m"), require_int(inst, "c"),
                                 require_int(inst, "k"), require_int(inst, "s"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }

  if (!j.contains("regime") || !j["regime"].is_string())
    throw ParseError("missing or non-string field: regime");
  doc.regime = j["regime"].get<std::string>();

  if (!j.contains("transmissions") || !j["transmissions"].is_array())
    throw ParseError("missing or non-array field: transmissions");
  for (const Json& t : j["transmissions"]) {
    if (!t.is_object() || !t.contains("xor") || !t["xor"].is_array())
      throw ParseError("each transmission needs tx and an xor array");
    const int tx = require_int(t, "tx");
    if (tx < 0 || tx >= doc.instance.c) throw ParseError("tx out of range");
    std::vector<int> payload;
    for (const Json& v : t["xor"]) {
      if (!v.is_number_integer()) throw ParseError("xor entries must be integers");
      const int msg = v.get<int>();
      if (msg < 0 || msg >= doc.instance.m) throw ParseError("xor index out of range");
      payload.push_back(msg);
    }
    try {
      doc.transmissions.push_back(make_transmission(tx, std::move(payload)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  if (j.contains("note")) {
    if (!j["note"].is_string()) throw ParseError("note must be a string");
    doc.note = j["note"].get<std::string>();
  }
  return doc;
}

ScheduleDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace cdpic
