#include "scoutnav/scene_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "scoutnav/number_io.hpp"
#include "scoutnav/partial_map.hpp"

namespace scoutnav {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void fail(const fs::path& where, const std::string& what) {
    throw FormatError(where.string() + ": " + what);
}

[[noreturn]] void fail_line(const fs::path& where, int line, const std::string& what) {
    fail(where, "line " + std::to_string(line) + ": " + what);
}

// ---- 16-bit binary PGM -----------------------------------------------------

void write_pgm16(const fs::path& file, int width, int height,
                 const std::vector<std::uint16_t>& values) {
    std::ofstream out(file, std::ios::binary);
    if (!out) fail(file, "cannot open for writing");
    out << "P5\n" << width << " " << height << "\n65535\n";
    std::vector<unsigned char> bytes;
    bytes.reserve(values.size() * 2);
    for (std::uint16_t v : values) {
        bytes.push_back(static_cast<unsigned char>(v >> 8));
        bytes.push_back(static_cast<unsigned char>(v & 0xff));
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(file, "write failed");
}

std::vector<std::uint16_t> read_pgm16(const fs::path& file, int expect_width, int expect_height) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(file, "cannot open");

    // Header tokens may be separated by arbitrary whitespace and # comments.
    auto next_token = [&]() -> std::string {
        std::string tok;
        int ch;
        while ((ch = in.get()) != EOF) {
            if (ch == '#') {
                while (ch != EOF && ch != '\n') ch = in.get();
                continue;
            }
            if (std::isspace(ch)) {
                if (!tok.empty()) return tok;
                continue;
            }
            tok.push_back(char(ch));
        }
        return tok;
    };

    if (next_token() != "P5") fail(file, "not a binary PGM (expected P5)");
    const auto w = parse_int(next_token());
    const auto h = parse_int(next_token());
    const auto maxval = parse_int(next_token());
    if (!w || !h || !maxval) fail(file, "malformed PGM header");
    if (*w != expect_width || *h != expect_height) {
        fail(file, "raster is " + std::to_string(*w) + "x" + std::to_string(*h) +
                       ", header declares " + std::to_string(expect_width) + "x" +
                       std::to_string(expect_height));
    }
    if (*maxval != 65535) fail(file, "expected 16-bit raster (maxval 65535)");

    const std::size_t n = std::size_t(*w) * std::size_t(*h);
    std::vector<unsigned char> bytes(n * 2);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (std::size_t(in.gcount()) != bytes.size()) fail(file, "raster data truncated");

    std::vector<std::uint16_t> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = std::uint16_t((unsigned(bytes[2 * i]) << 8) | unsigned(bytes[2 * i + 1]));
    }
    return values;
}

// ---- header ----------------------------------------------------------------

struct Header {
    std::map<std::string, std::string> pairs;
    std::map<std::string, int> lines;
    fs::path file;

    const std::string* find(const std::string& key) const {
        auto it = pairs.find(key);
        return it == pairs.end() ? nullptr : &it->second;
    }
    const std::string& require(const std::string& key) const {
        const std::string* v = find(key);
        if (!v) fail(file, "missing required key '" + key + "'");
        return *v;
    }
    double require_double(const std::string& key) const {
        auto v = parse_double(require(key));
        if (!v) fail_line(file, lines.at(key), "key '" + key + "' is not a number");
        return *v;
    }
    int require_cell_dim(const std::string& key) const {
        auto v = parse_int(require(key));
        if (!v || *v <= 0 || *v > 100000) {
            fail_line(file, lines.at(key), "key '" + key + "' must be a positive cell count");
        }
        return int(*v);
    }
    GridIndex require_cell(const std::string& key) const {
        const std::string& text = require(key);
        const auto comma = text.find(',');
        if (comma != std::string::npos) {
            const auto col = parse_int(text.substr(0, comma));
            const auto row = parse_int(text.substr(comma + 1));
            if (col && row) return {int(*col), int(*row)};
        }
        fail_line(file, lines.at(key), "key '" + key + "' must be 'col,row'");
    }
};

Header parse_header(const fs::path& file) {
    std::ifstream in(file);
    if (!in) fail(file, "cannot open");
    Header header;
    header.file = file;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // Trim surrounding whitespace.
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail_line(file, lineno, "expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        const auto vfirst = value.find_first_not_of(" \t");
        value = vfirst == std::string::npos ? std::string() : value.substr(vfirst);
        if (key.empty()) fail_line(file, lineno, "empty key");
        if (header.pairs.count(key)) fail_line(file, lineno, "duplicate key '" + key + "'");
        header.pairs[key] = value;
        header.lines[key] = lineno;
    }
    return header;
}

const char* const kKnownKeys[] = {
    "format",       "width",        "height",      "resolution", "cost_min",
    "cost_max",     "start",        "goal",        "obstacle_value",
    "cost_offset",  "cost_scale",   "scout_const", "scout_offset", "scout_scale",
};

}  // namespace

RasterMapping RasterMapping::for_range(double lo, double hi) {
    RasterMapping m;
    m.offset = lo;
    m.scale = hi > lo ? (hi - lo) / double(kMaxCostRasterValue) : 0.0;
    // Nudge the scale down until the top raster value decodes within [lo, hi];
    // plain division can land one ulp above the declared maximum.
    while (m.scale > 0.0 && m.decode(kMaxCostRasterValue) > hi) {
        m.scale = std::nextafter(m.scale, 0.0);
    }
    return m;
}

std::uint16_t RasterMapping::encode(double cost) const {
    if (scale <= 0.0) return 0;
    const double v = std::llround((cost - offset) / scale);
    return std::uint16_t(std::clamp(v, 0.0, double(kMaxCostRasterValue)));
}

double RasterMapping::decode(std::uint16_t value) const {
    return offset + double(value) * scale;
}

void save_scene(const GroundTruthScene& scene, const std::filesystem::path& dir) {
    scene.validate();
    fs::create_directories(dir);

    const RasterMapping follower_map = RasterMapping::for_range(scene.cost_min, scene.cost_max);

    const std::size_t n = scene.follower_cost.size();
    std::vector<std::uint16_t> follower_raster(n);
    for (std::size_t i = 0; i < n; ++i) {
        follower_raster[i] = scene.follower_cost[i] == kObstacleCost
                                 ? kObstacleRasterValue
                                 : follower_map.encode(scene.follower_cost[i]);
    }
    write_pgm16(dir / "follower_cost.pgm", scene.width, scene.height, follower_raster);

    const bool scout_constant =
        std::all_of(scene.scout_cost.begin(), scene.scout_cost.end(),
                    [&](double c) { return c == scene.scout_cost.front(); });
    RasterMapping scout_map;
    if (!scout_constant) {
        const auto [lo, hi] = std::minmax_element(scene.scout_cost.begin(), scene.scout_cost.end());
        scout_map = RasterMapping::for_range(*lo, *hi);
        std::vector<std::uint16_t> scout_raster(n);
        for (std::size_t i = 0; i < n; ++i) scout_raster[i] = scout_map.encode(scene.scout_cost[i]);
        write_pgm16(dir / "scout_cost.pgm", scene.width, scene.height, scout_raster);
    }

    std::ostringstream out;
    out << "format=scoutnav-scene-v1\n";
    out << "width=" << scene.width << "\n";
    out << "height=" << scene.height << "\n";
    out << "resolution=" << format_double(scene.resolution) << "\n";
    out << "cost_min=" << format_double(scene.cost_min) << "\n";
    out << "cost_max=" << format_double(scene.cost_max) << "\n";
    out << "start=" << scene.start.col << "," << scene.start.row << "\n";
    out << "goal=" << scene.goal.col << "," << scene.goal.row << "\n";
    out << "obstacle_value=" << kObstacleRasterValue << "\n";
    out << "cost_offset=" << format_double(follower_map.offset) << "\n";
    out << "cost_scale=" << format_double(follower_map.scale) << "\n";
    if (scout_constant) {
        out << "scout_const=" << format_double(scene.scout_cost.front()) << "\n";
    } else {
        out << "scout_offset=" << format_double(scout_map.offset) << "\n";
        out << "scout_scale=" << format_double(scout_map.scale) << "\n";
    }

    std::ofstream header(dir / "scene.txt", std::ios::binary);
    if (!header) fail(dir / "scene.txt", "cannot open for writing");
    header << out.str();
    if (!header) fail(dir / "scene.txt", "write failed");
}

GroundTruthScene load_scene(const std::filesystem::path& dir) {
    const fs::path header_file = dir / "scene.txt";
    Header header = parse_header(header_file);

    for (const auto& [key, value] : header.pairs) {
        if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys), [&](const char* k) {
                return key == k;
            }) == std::end(kKnownKeys)) {
            fail_line(header_file, header.lines.at(key), "unknown key '" + key + "'");
        }
    }
    if (header.require("format") != "scoutnav-scene-v1") {
        fail_line(header_file, header.lines.at("format"), "unsupported format");
    }

    GroundTruthScene scene;
    scene.width = header.require_cell_dim("width");
    scene.height = header.require_cell_dim("height");
    scene.resolution = header.require_double("resolution");
    scene.cost_min = header.require_double("cost_min");
    scene.cost_max = header.require_double("cost_max");
    scene.start = header.require_cell("start");
    scene.goal = header.require_cell("goal");
    if (scene.resolution <= 0.0) {
        fail_line(header_file, header.lines.at("resolution"), "resolution must be positive");
    }
    if (scene.cost_min <= 0.0) {
        fail_line(header_file, header.lines.at("cost_min"), "cost_min must be positive");
    }
    if (scene.cost_max < scene.cost_min) {
        fail_line(header_file, header.lines.at("cost_max"), "cost_max must be >= cost_min");
    }

    const auto obstacle_value = parse_int(header.require("obstacle_value"));
    if (!obstacle_value || *obstacle_value < 0 || *obstacle_value > 65535) {
        fail_line(header_file, header.lines.at("obstacle_value"),
                  "obstacle_value must be in [0, 65535]");
    }

    RasterMapping follower_map;
    follower_map.offset = header.require_double("cost_offset");
    follower_map.scale = header.require_double("cost_scale");
    if (follower_map.scale < 0.0) {
        fail_line(header_file, header.lines.at("cost_scale"), "cost_scale must be >= 0");
    }

    const auto raster =
        read_pgm16(dir / "follower_cost.pgm", scene.width, scene.height);
    const std::size_t n = raster.size();
    scene.follower_cost.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (raster[i] == *obstacle_value) {
            scene.follower_cost[i] = kObstacleCost;
            continue;
        }
        const double cost = follower_map.decode(raster[i]);
        if (cost < scene.cost_min || cost > scene.cost_max) {
            fail(dir / "follower_cost.pgm",
                 "cell " + std::to_string(i % std::size_t(scene.width)) + "," +
                     std::to_string(i / std::size_t(scene.width)) + ": cost " +
                     format_double(cost) + " outside [cost_min, cost_max]");
        }
        scene.follower_cost[i] = cost;
    }

    if (const std::string* scout_const = header.find("scout_const")) {
        const auto value = parse_double(*scout_const);
        if (!value || *value <= 0.0) {
            fail_line(header_file, header.lines.at("scout_const"),
                      "scout_const must be a positive number");
        }
        scene.scout_cost.assign(n, *value);
    } else if (header.find("scout_offset") || header.find("scout_scale")) {
        RasterMapping scout_map;
        scout_map.offset = header.require_double("scout_offset");
        scout_map.scale = header.require_double("scout_scale");
        const auto scout_raster =
            read_pgm16(dir / "scout_cost.pgm", scene.width, scene.height);
        scene.scout_cost.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double cost = scout_map.decode(scout_raster[i]);
            if (cost <= 0.0) {
                fail(dir / "scout_cost.pgm",
                     "cell " + std::to_string(i % std::size_t(scene.width)) + "," +
                         std::to_string(i / std::size_t(scene.width)) +
                         ": scout cost must be positive");
            }
            scene.scout_cost[i] = cost;
        }
    } else {
        scene.scout_cost.assign(n, 1.0);
    }

    try {
        scene.validate();
    } catch (const FormatError& e) {
        fail(header_file, e.what());
    }
    return scene;
}

void save_exploration_raster(const PartialMap& map, const std::filesystem::path& file) {
    std::vector<std::uint16_t> raster(map.cell_count());
    for (int row = 0; row < map.height(); ++row) {
        for (int col = 0; col < map.width(); ++col) {
            const GridIndex c{col, row};
            std::uint16_t v = 0;
            switch (map.state(c)) {
                case CellState::kUnknown: v = 0; break;
                case CellState::kObserved: v = 32768; break;
                case CellState::kObstacle: v = 65535; break;
            }
            raster[map.index(c)] = v;
        }
    }
    write_pgm16(file, map.width(), map.height(), raster);
}

}  // namespace scoutnav
