#include "buzz/csv.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace buzz {

namespace {

bool parse_double(const std::string& tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_any(const std::string& text, const char* seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::strchr(seps, c)) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// shortest representation that round-trips, reusing the JSON dumper
std::string format_double(double v) { return nlohmann::json(v).dump(); }

}  // namespace

std::vector<double> parse_series_csv(const std::string& text) {
    std::vector<double> values;
    for (const std::string& tok : split_any(text, ", \t\r\n")) {
        double v;
        if (!parse_double(tok, v))
            throw std::invalid_argument("series CSV: cannot parse value '" + tok + "'");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("series CSV: no values found");
    return values;
}

std::string series_to_csv(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

PointCloud parse_cloud_csv(const std::string& text) {
    PointCloud cloud;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_any(line, ", \t\r");
        if (toks.empty()) continue;
        std::vector<double> coords;
        coords.reserve(toks.size());
        bool ok = true;
        for (const auto& tok : toks) {
            double v;
            if (!parse_double(tok, v)) {
                ok = false;
                break;
            }
            coords.push_back(v);
        }
        if (!ok) {
            if (first_row) {  // header row
                first_row = false;
                continue;
            }
            throw std::invalid_argument("cloud CSV: cannot parse row " + std::to_string(line_no));
        }
        first_row = false;
        if (cloud.points.empty()) {
            cloud.ambient_dim = static_cast<int>(coords.size());
        } else if (static_cast<int>(coords.size()) != cloud.ambient_dim) {
            throw std::invalid_argument("cloud CSV: row " + std::to_string(line_no) + " has " +
                                        std::to_string(coords.size()) + " columns, expected " +
                                        std::to_string(cloud.ambient_dim));
        }
        Point p;
        p.x = std::move(coords);
        p.id = static_cast<int>(cloud.points.size());
        cloud.points.push_back(std::move(p));
    }
    if (cloud.points.empty()) throw std::invalid_argument("cloud CSV: no points found");
    return cloud;
}

std::string cloud_to_csv(const PointCloud& cloud) {
    std::string out;
    for (const Point& p : cloud.points) {
        for (std::size_t k = 0; k < p.x.size(); ++k) {
            if (k) out += ',';
            out += format_double(p.x[k]);
        }
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace buzz
