#include "swarmsim/log_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace swarmsim {

namespace {

constexpr const char* kTrajectoryHeader =
    "tick,time,agent,px,py,pz,vx,vy,vz,ux,uy,uz,detected_count,phase";
constexpr const char* kEventsHeader = "tick,kind,a,b";

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("csv parse error at line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

double parse_double(const std::string& field, std::size_t line_no) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        fail_line(line_no, "bad number '" + field + "'");
    }
    return v;
}

std::int64_t parse_int(const std::string& field, std::size_t line_no) {
    std::int64_t v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        fail_line(line_no, "bad integer '" + field + "'");
    }
    return v;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

const char* event_kind_name(EventKind k) {
    return k == EventKind::SafetyViolation ? "safety_violation" : "phase_change";
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

void write_trajectory_csv(std::ostream& os, const TrajectoryLog& log) {
    os << kTrajectoryHeader << '\n';
    for (const TickRecord& rec : log.records) {
        for (std::size_t i = 0; i < rec.agents.size(); ++i) {
            const AgentRecord& a = rec.agents[i];
            os << rec.tick << ',' << format_double(rec.time) << ',' << i << ','
               << format_double(a.position.x) << ',' << format_double(a.position.y) << ','
               << format_double(a.position.z) << ',' << format_double(a.velocity.x) << ','
               << format_double(a.velocity.y) << ',' << format_double(a.velocity.z) << ','
               << format_double(a.control.x) << ',' << format_double(a.control.y) << ','
               << format_double(a.control.z) << ',' << a.detected_count << ','
               << phase_name(rec.phase) << '\n';
        }
    }
}

void write_trajectory_csv(const std::string& path, const TrajectoryLog& log) {
    auto os = open_out(path);
    write_trajectory_csv(os, log);
    if (!os) throw std::runtime_error("write failed: " + path);
}

TrajectoryLog read_trajectory_csv(std::istream& is) {
    TrajectoryLog log;
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(is, line)) fail_line(1, "missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTrajectoryHeader) fail_line(1, "unexpected header '" + line + "'");

    TickRecord current;
    bool have_current = false;
    std::size_t expected_agent = 0;

    auto flush = [&]() {
        if (!have_current) return;
        if (log.agent_count == 0) {
            log.agent_count = current.agents.size();
        } else if (current.agents.size() != log.agent_count) {
            fail_line(line_no, "tick " + std::to_string(current.tick) + " has " +
                                   std::to_string(current.agents.size()) + " agents, expected " +
                                   std::to_string(log.agent_count));
        }
        log.records.push_back(std::move(current));
        current = TickRecord{};
        have_current = false;
        expected_agent = 0;
    };

    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 14) {
            fail_line(line_no, "expected 14 fields, got " + std::to_string(f.size()));
        }
        const std::int64_t tick = parse_int(f[0], line_no);
        const double time = parse_double(f[1], line_no);
        const std::int64_t agent = parse_int(f[2], line_no);

        if (have_current && tick != current.tick) flush();
        if (!have_current) {
            current.tick = tick;
            current.time = time;
            current.phase = [&] {
                try {
                    return phase_from_name(f[13]);
                } catch (const std::invalid_argument& e) {
                    fail_line(line_no, e.what());
                }
            }();
            have_current = true;
        }
        if (agent < 0 || static_cast<std::size_t>(agent) != expected_agent) {
            fail_line(line_no, "agent index " + f[2] + " out of order (expected " +
                                   std::to_string(expected_agent) + ")");
        }
        ++expected_agent;

        AgentRecord a;
        a.position = {parse_double(f[3], line_no), parse_double(f[4], line_no),
                      parse_double(f[5], line_no)};
        a.velocity = {parse_double(f[6], line_no), parse_double(f[7], line_no),
                      parse_double(f[8], line_no)};
        a.control = {parse_double(f[9], line_no), parse_double(f[10], line_no),
                     parse_double(f[11], line_no)};
        const std::int64_t det = parse_int(f[12], line_no);
        if (det < 0 || det > std::numeric_limits<int>::max()) {
            fail_line(line_no, "detected_count out of range");
        }
        a.detected_count = static_cast<int>(det);
        current.agents.push_back(a);
    }
    flush();
    if (log.records.empty()) fail_line(line_no, "no data rows");
    log.dt = log.records.size() >= 2 ? log.records[1].time - log.records[0].time : 0.0;
    return log;
}

TrajectoryLog read_trajectory_csv(const std::string& path) {
    auto is = open_in(path);
    return read_trajectory_csv(is);
}

void write_events_csv(std::ostream& os, const std::vector<Event>& events) {
    os << kEventsHeader << '\n';
    for (const Event& e : events) {
        os << e.tick << ',' << event_kind_name(e.kind) << ',' << e.a << ',' << e.b << '\n';
    }
}

void write_events_csv(const std::string& path, const std::vector<Event>& events) {
    auto os = open_out(path);
    write_events_csv(os, events);
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::vector<Event> read_events_csv(std::istream& is) {
    std::vector<Event> events;
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(is, line)) fail_line(1, "missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kEventsHeader) fail_line(1, "unexpected header '" + line + "'");
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 4) {
            fail_line(line_no, "expected 4 fields, got " + std::to_string(f.size()));
        }
        Event e;
        e.tick = parse_int(f[0], line_no);
        if (f[1] == "safety_violation") {
            e.kind = EventKind::SafetyViolation;
        } else if (f[1] == "phase_change") {
            e.kind = EventKind::PhaseChange;
        } else {
            fail_line(line_no, "unknown event kind '" + f[1] + "'");
        }
        e.a = parse_int(f[2], line_no);
        e.b = parse_int(f[3], line_no);
        events.push_back(e);
    }
    return events;
}

std::vector<Event> read_events_csv(const std::string& path) {
    auto is = open_in(path);
    return read_events_csv(is);
}

}  // namespace swarmsim
