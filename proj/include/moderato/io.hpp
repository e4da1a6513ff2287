#pragma once

#include "moderato/sim.hpp"
#include "moderato/turn.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace moderato {

// Turn-log JSONL. One object per line; field names are part of the wire
// format: t_index, speaker, duration_s, words and, for full log entries,
// time_err_s, word_err, n_comm, addressee, directive.
std::string to_jsonl(const TurnLog& log);
void write_turn_log_jsonl(const TurnLog& log, const std::filesystem::path& path);

// Reads the core turn fields back from a JSONL log.
std::vector<Turn> read_turns_jsonl(const std::filesystem::path& path);

// Plot-ready per-turn series: t_index, speaker, duration_s, words, metrics,
// and one window-seconds column per speaker.
void write_series_csv(const TurnLog& log, int n_speakers, const std::filesystem::path& path);

// Numeric column of a headered CSV file, skipping blank cells.
std::vector<double> read_csv_column(const std::filesystem::path& path, const std::string& column);

} // namespace moderato
