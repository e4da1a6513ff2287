#include "moderato/io.hpp"

#include "moderato/policy.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace moderato {

namespace {

using json = nlohmann::ordered_json;

json entry_to_json(const TurnLogEntry& entry) {
    json line;
    line["t_index"] = entry.turn.index;
    line["speaker"] = entry.turn.speaker;
    line["duration_s"] = entry.turn.duration_s;
    line["words"] = entry.turn.words;
    line["time_err_s"] = entry.time_err_s;
    line["word_err"] = entry.word_err;
    line["n_comm"] = entry.n_comm;
    line["addressee"] = entry.addressee;
    line["directive"] = to_string(entry.directive);
    return line;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

} // namespace

std::string to_jsonl(const TurnLog& log) {
    std::string out;
    for (const TurnLogEntry& entry : log) {
        out += entry_to_json(entry).dump();
        out += '\n';
    }
    return out;
}

void write_turn_log_jsonl(const TurnLog& log, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    out << to_jsonl(log);
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

std::vector<Turn> read_turns_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path.string());
    std::vector<Turn> turns;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const json parsed = json::parse(line);
        Turn turn;
        turn.index = parsed.at("t_index").get<long>();
        turn.speaker = parsed.at("speaker").get<SpeakerId>();
        turn.duration_s = parsed.at("duration_s").get<double>();
        turn.words = parsed.at("words").get<long>();
        turns.push_back(turn);
    }
    return turns;
}

void write_series_csv(const TurnLog& log, int n_speakers, const std::filesystem::path& path) {
    if (n_speakers <= 0)
        throw std::invalid_argument("write_series_csv: n_speakers must be positive");
    std::ofstream out = open_for_write(path);
    out << "t_index,speaker,duration_s,words,time_err_s,word_err,n_comm";
    for (int i = 0; i < n_speakers; ++i)
        out << ",window_time_s_" << i;
    out << '\n';
    out << std::setprecision(17);
    for (const TurnLogEntry& entry : log) {
        out << entry.turn.index << ',' << entry.turn.speaker << ',' << entry.turn.duration_s
            << ',' << entry.turn.words << ',' << entry.time_err_s << ',' << entry.word_err << ','
            << entry.n_comm;
        for (int i = 0; i < n_speakers; ++i)
            out << ',' << (i < entry.window_time_s.size() ? entry.window_time_s(i) : 0.0);
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

std::vector<double> read_csv_column(const std::filesystem::path& path, const std::string& column) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV file: " + path.string());
    const std::vector<std::string> header = split_csv_line(line);
    std::size_t target = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == column)
            target = i;
    if (target == header.size())
        throw std::runtime_error("column not found in " + path.string() + ": " + column);
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (target >= cells.size() || cells[target].empty())
            continue;
        values.push_back(std::stod(cells[target]));
    }
    return values;
}

} // namespace moderato
