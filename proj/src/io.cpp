#include "contfit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace contfit::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    return in;
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
    return std::filesystem::path(path.string() + ".json");
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_samples_csv(const std::filesystem::path& path, const SampleSet& s) {
    s.validate();
    auto out = open_out(path);
    out << "x,y,value\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << format_double(s.coords[i][0]) << ',' << format_double(s.coords[i][1]) << ','
            << format_double(s.values[i]) << '\n';
}

SampleSet read_samples_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || line != "x,y,value")
        throw std::runtime_error("malformed samples CSV (bad header): " + path.string());
    SampleSet s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x, y, v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3)
            throw std::runtime_error("malformed samples CSV row: " + line);
        s.coords.push_back({x, y});
        s.values.push_back(v);
    }
    s.validate();
    return s;
}

void write_grid_bin(const std::filesystem::path& path, const EvalGrid& grid,
                    const std::vector<double>& values, bool signed_values) {
    grid.validate();
    if (values.size() != grid.count())
        throw std::invalid_argument("write_grid_bin: value count does not match grid");
    auto out = open_out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));

    nlohmann::json sidecar{
        {"x_min", grid.x_min}, {"x_max", grid.x_max},
        {"y_min", grid.y_min}, {"y_max", grid.y_max},
        {"n_x", grid.n_x},     {"n_y", grid.n_y},
        {"dtype", "float64"},  {"byte_order", "little"},
        {"layout", "row-major, y outer, x inner"},
        {"signed", signed_values},
    };
    write_json(sidecar_path(path), sidecar);
}

GridFile read_grid_bin(const std::filesystem::path& path) {
    nlohmann::json sidecar = read_json(sidecar_path(path));
    GridFile f;
    try {
        f.grid.x_min = sidecar.at("x_min").get<double>();
        f.grid.x_max = sidecar.at("x_max").get<double>();
        f.grid.y_min = sidecar.at("y_min").get<double>();
        f.grid.y_max = sidecar.at("y_max").get<double>();
        f.grid.n_x = sidecar.at("n_x").get<int>();
        f.grid.n_y = sidecar.at("n_y").get<int>();
        f.signed_values = sidecar.value("signed", false);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed grid sidecar " + sidecar_path(path).string() + ": " + e.what());
    }
    f.grid.validate();

    auto in = open_in(path, std::ios::binary);
    f.values.resize(f.grid.count());
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(f.values.size() * sizeof(double)))
        throw std::runtime_error("grid blob shorter than sidecar resolution: " + path.string());
    return f;
}

void write_grid_csv(const std::filesystem::path& path, const EvalGrid& grid,
                    const std::vector<double>& values) {
    grid.validate();
    if (values.size() != grid.count())
        throw std::invalid_argument("write_grid_csv: value count does not match grid");
    auto out = open_out(path);
    out << "x,y,value\n";
    std::size_t k = 0;
    for (int iy = 0; iy < grid.n_y; ++iy)
        for (int ix = 0; ix < grid.n_x; ++ix, ++k) {
            Vec2 p = grid.point(iy, ix);
            out << format_double(p[0]) << ',' << format_double(p[1]) << ','
                << format_double(values[k]) << '\n';
        }
}

void write_cross_section_csv(const std::filesystem::path& path, const EvalGrid& grid,
                             const std::vector<double>& values, double y) {
    grid.validate();
    if (values.size() != grid.count())
        throw std::invalid_argument("write_cross_section_csv: value count does not match grid");
    int iy = grid.nearest_row(y);
    auto out = open_out(path);
    out << "x,value\n";
    for (int ix = 0; ix < grid.n_x; ++ix)
        out << format_double(grid.point(iy, ix)[0]) << ','
            << format_double(values[static_cast<std::size_t>(iy) * grid.n_x + ix]) << '\n';
}

void render_pgm16(const std::filesystem::path& path, int width, int height,
                  const std::vector<double>& values, bool signed_values) {
    if (width <= 0 || height <= 0 ||
        values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw std::invalid_argument("render_pgm16: value count does not match dimensions");

    double lo = values[0], hi = values[0];
    for (double v : values) {
        if (!std::isfinite(v)) throw std::runtime_error("render_pgm16: non-finite value");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    std::vector<std::uint16_t> gray(values.size());
    if (signed_values) {
        double m = std::max(std::abs(lo), std::abs(hi));
        for (std::size_t i = 0; i < values.size(); ++i) {
            double g = m == 0.0 ? 32767.5 : 32767.5 + 32767.5 * (values[i] / m);
            gray[i] = static_cast<std::uint16_t>(std::lround(std::clamp(g, 0.0, 65535.0)));
        }
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
            double g = hi == lo ? 0.0 : 65535.0 * (values[i] - lo) / (hi - lo);
            gray[i] = static_cast<std::uint16_t>(std::lround(std::clamp(g, 0.0, 65535.0)));
        }
    }

    auto out = open_out(path, std::ios::binary);
    out << "P5\n" << width << ' ' << height << "\n65535\n";
    for (std::uint16_t g : gray) {
        // PGM stores the most significant byte first.
        char bytes[2] = {static_cast<char>(g >> 8), static_cast<char>(g & 0xff)};
        out.write(bytes, 2);
    }

    nlohmann::json sidecar{
        {"width", width},
        {"height", height},
        {"maxval", 65535},
        {"mapping", signed_values ? "signed-symmetric" : "linear"},
        {"value_min", lo},
        {"value_max", hi},
    };
    write_json(sidecar_path(path), sidecar);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

nlohmann::json read_json(const std::filesystem::path& path) {
    auto in = open_in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void append_jsonl(const std::filesystem::path& path, const nlohmann::json& j) {
    auto out = open_out(path, std::ios::app);
    out << j.dump() << '\n';
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
}

} // namespace contfit::io
