// Decoding-table rendering: one row per client with its side information
// and the message it recovers from each transmission, or "-".
#pragma once

#include <span>
#include <string>
#include <vector>

#include "cdpic/decoder.hpp"

namespace cdpic {

std::string message_label(int message);  // "X_7"

struct DecodingTable {
  std::vector<std::string> header;             // client, side information, W_1..W_N
  std::vector<std::vector<std::string>> rows;  // one per client
};

DecodingTable make_decoding_table(const ProblemInstance&, const DecodingReport&);

// Fixed-width grid; widths derive from the content, so equal inputs render
// byte-identically.
std::string render_table(const DecodingTable&);

}  // namespace cdpic
