// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>
#include <vector>

#include "margin/ingestion.hpp"
#include "margin/text_format.hpp"
#include "margin/validation.hpp"

namespace margin {

namespace {

std::string loc(const std::string& name, std::size_t line) {
    return name + ":" + std::to_string(line);
}

std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

LogNormalSpec parse_fleet_spec(const std::vector<std::string>& tokens, const std::string& where) {
    if (tokens.size() != 6)
        throw ValidationError(where,
                              "fleet line needs 5 values: mu_log sigma_log scale_mw shift_mw sign");
    LogNormalSpec spec;
    spec.mu_log = parse_double(tokens[1], where + " mu_log");
    spec.sigma_log = parse_double(tokens[2], where + " sigma_log");
    spec.scale_mw = parse_double(tokens[3], where + " scale_mw");
    spec.shift_mw = parse_double(tokens[4], where + " shift_mw");
    if (tokens[5] == "+1")
        spec.sign = +1;
    else if (tokens[5] == "-1")
        spec.sign = -1;
    else
        throw ValidationError(where, "sign must be '+1' or '-1', got '" + tokens[5] + "'");
    try {
        spec.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(where, e.what());
    }
    return spec;
}

std::vector<std::string> expected_columns(const DriverSet& drivers) {
    std::vector<std::string> cols = {"instant"};
    if (drivers.wind) {
        cols.insert(cols.end(), {"wind_expected_mw", "wind_q10_mw", "wind_q90_mw"});
    }
    if (drivers.pv) {
        cols.insert(cols.end(), {"pv_expected_mw", "pv_q10_mw", "pv_q90_mw"});
    }
    if (drivers.consumption) cols.push_back("consumption_mw");
    return cols;
}

}  // namespace

ForecastSnapshot parse_snapshot(std::istream& in, const std::string& name) {
    ForecastSnapshot snap;
    bool saw_schema = false;
    bool saw_t0 = false;
    bool saw_drivers = false;
    bool saw_positive = false;
    bool saw_bidirectional = false;
    FleetSnapshot fleet;

    enum class Section { preamble, header, rows };
    Section section = Section::preamble;
    std::vector<std::string> columns;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string where = loc(name, line_no);

        if (section == Section::preamble) {
            const std::string& key = tokens[0];
            if (key == "schema") {
                if (tokens.size() != 2 || tokens[1] != kSnapshotSchema)
                    throw ValidationError(where, "expected 'schema " +
                                                     std::string(kSnapshotSchema) + "', got '" +
                                                     raw + "'");
                saw_schema = true;
            } else if (key == "t0") {
                if (tokens.size() != 2) throw ValidationError(where, "t0 needs one timestamp");
                try {
                    snap.t0 = Timestamp::parse(tokens[1]);
                } catch (const ValidationError& e) {
                    throw ValidationError(where, e.what());
                }
                saw_t0 = true;
            } else if (key == "drivers") {
                if (tokens.size() < 2) throw ValidationError(where, "drivers list is empty");
                for (std::size_t i = 1; i < tokens.size(); ++i) {
                    const std::string& d = tokens[i];
                    if (d == "wind")
                        snap.enabled.wind = true;
                    else if (d == "pv")
                        snap.enabled.pv = true;
                    else if (d == "consumption")
                        snap.enabled.consumption = true;
                    else if (d == "conventional")
                        snap.enabled.conventional = true;
                    else
                        throw ValidationError(where, "unknown driver '" + d + "'");
                }
                saw_drivers = true;
            } else if (key == "fleet.positive_only") {
                fleet.positive_only = parse_fleet_spec(tokens, where);
                saw_positive = true;
            } else if (key == "fleet.bidirectional") {
                fleet.bidirectional = parse_fleet_spec(tokens, where);
                saw_bidirectional = true;
            } else if (key == "table") {
                if (!saw_schema) throw ValidationError(where, "missing 'schema' line before table");
                if (!saw_t0) throw ValidationError(where, "missing 't0' line before table");
                if (!saw_drivers)
                    throw ValidationError(where, "missing 'drivers' line before table");
                section = Section::header;
            } else {
                throw ValidationError(where, "unknown directive '" + key + "'");
            }
            continue;
        }

        if (section == Section::header) {
            columns = expected_columns(snap.enabled);
            if (tokens != columns) {
                std::string want;
                for (const auto& c : columns) want += (want.empty() ? "" : " ") + c;
                throw ValidationError(where, "header must be '" + want + "' for drivers listed");
            }
            section = Section::rows;
            continue;
        }

        // Data row.
        if (tokens.size() != columns.size())
            throw ValidationError(where, "expected " + std::to_string(columns.size()) +
                                             " fields, got " + std::to_string(tokens.size()));
        Timestamp study;
        try {
            study = Timestamp::parse(tokens[0]);
        } catch (const ValidationError& e) {
            throw ValidationError(where + " field 'instant'", e.what());
        }
        if (study <= snap.t0)
            throw ValidationError(where + " field 'instant'",
                                  "study instant must be after t0 " + snap.t0.to_string());
        if (!snap.enabled.wind && !snap.enabled.pv && !snap.enabled.consumption)
            throw ValidationError(where,
                                  "table rows need at least one of wind, pv, or consumption");
        std::size_t col = 1;
        const auto next_value = [&]() {
            const std::string context = where + " field '" + columns[col] + "'";
            return parse_double(tokens[col++], context);
        };
        if (snap.enabled.wind) {
            RenewableForecast f{RenewableKind::wind, next_value(), next_value(), next_value()};
            try {
                f.validate();
            } catch (const ValidationError& e) {
                throw ValidationError(where, e.what());
            }
            if (!snap.wind.emplace(study, f).second)
                throw ValidationError(where, "duplicate study instant " + study.to_string());
        }
        if (snap.enabled.pv) {
            RenewableForecast f{RenewableKind::pv, next_value(), next_value(), next_value()};
            try {
                f.validate();
            } catch (const ValidationError& e) {
                throw ValidationError(where, e.what());
            }
            if (!snap.pv.emplace(study, f).second && !snap.enabled.wind)
                throw ValidationError(where, "duplicate study instant " + study.to_string());
        }
        if (snap.enabled.consumption) {
            const double v = next_value();
            if (v < 0.0)
                throw ValidationError(where + " field 'consumption_mw'",
                                      "must be non-negative, got " + format_double(v));
            if (!snap.consumption_mw.emplace(study, v).second && !snap.enabled.wind &&
                !snap.enabled.pv)
                throw ValidationError(where, "duplicate study instant " + study.to_string());
        }
    }

    if (section == Section::preamble)
        throw ValidationError(name, "missing 'table' section");
    if (section == Section::header) throw ValidationError(name, "missing table header row");
    if (snap.enabled.conventional) {
        if (!saw_positive || !saw_bidirectional)
            throw ValidationError(
                name, "conventional driver needs fleet.positive_only and fleet.bidirectional");
        snap.fleet = fleet;
    } else if (saw_positive || saw_bidirectional) {
        throw ValidationError(name, "fleet lines present but conventional driver not listed");
    }
    try {
        snap.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(name, e.what());
    }
    return snap;
}

ForecastSnapshot load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open snapshot file '" + path + "'");
    return parse_snapshot(in, path);
}

std::string serialize_snapshot(const ForecastSnapshot& snapshot) {
    std::ostringstream out;
    out << "schema " << kSnapshotSchema << "\n";
    out << "t0 " << snapshot.t0.to_string() << "\n";
    out << "drivers";
    if (snapshot.enabled.wind) out << " wind";
    if (snapshot.enabled.pv) out << " pv";
    if (snapshot.enabled.consumption) out << " consumption";
    if (snapshot.enabled.conventional) out << " conventional";
    out << "\n";
    if (snapshot.fleet) {
        const auto emit = [&out](const char* key, const LogNormalSpec& s) {
            out << key << " " << format_double(s.mu_log) << " " << format_double(s.sigma_log)
                << " " << format_double(s.scale_mw) << " " << format_double(s.shift_mw) << " "
                << (s.sign > 0 ? "+1" : "-1") << "\n";
        };
        emit("fleet.positive_only", snapshot.fleet->positive_only);
        emit("fleet.bidirectional", snapshot.fleet->bidirectional);
    }
    out << "table\n";
    const auto columns = expected_columns(snapshot.enabled);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? " " : "") << columns[i];
    out << "\n";
    for (const Timestamp study : snapshot.study_instants()) {
        out << study.to_string();
        if (snapshot.enabled.wind) {
            const auto& f = snapshot.wind.at(study);
            out << " " << format_double(f.expected_mw) << " " << format_double(f.q10_mw) << " "
                << format_double(f.q90_mw);
        }
        if (snapshot.enabled.pv) {
            const auto& f = snapshot.pv.at(study);
            out << " " << format_double(f.expected_mw) << " " << format_double(f.q10_mw) << " "
                << format_double(f.q90_mw);
        }
        if (snapshot.enabled.consumption)
            out << " " << format_double(snapshot.consumption_mw.at(study));
        out << "\n";
    }
    return out.str();
}

void save_snapshot(const ForecastSnapshot& snapshot, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write snapshot file '" + path + "'");
    out << serialize_snapshot(snapshot);
    if (!out) throw IoError("failed writing snapshot file '" + path + "'");
}

}  // namespace margin
