#include "frontier/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "frontier/errors.hpp"

namespace frontier {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_path_csv(const Path2D& path, std::ostream& os) {
    os << "t,re,im\n";
    for (std::size_t i = 0; i < path.size(); ++i)
        os << format_double(path.times[i]) << ',' << format_double(path.points[i].real())
           << ',' << format_double(path.points[i].imag()) << '\n';
}

Path2D read_path_csv(std::istream& is) {
    Path2D p;
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,re,im", 0) != 0)
        throw ConfigError("read_path_csv: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double t, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &re, &im) != 3)
            throw ConfigError("read_path_csv: bad row: " + line);
        p.times.push_back(t);
        p.points.emplace_back(re, im);
    }
    return p;
}

void write_indexset_csv(const IndexSet& set, std::ostream& os) {
    os << "index\n";
    for (auto i : set) os << i << '\n';
}

IndexSet read_indexset_csv(std::istream& is) {
    IndexSet out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("index", 0) != 0)
        throw ConfigError("read_indexset_csv: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(std::stoull(line));
    }
    return out;
}

void write_fit_csv(const PowerLawFit& fit, std::ostream& os) {
    os << "scale,value,sigma_log,n_samples,used\n";
    for (const auto& p : fit.points)
        os << format_double(p.scale) << ',' << format_double(p.value) << ','
           << format_double(p.sigma_log) << ',' << p.n_samples << ','
           << (p.used ? 1 : 0) << '\n';
}

std::vector<FitPoint> read_fit_csv(std::istream& is) {
    std::vector<FitPoint> out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("scale,value", 0) != 0)
        throw ConfigError("read_fit_csv: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        FitPoint p;
        unsigned long long n = 0;
        int used = 1;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%llu,%d", &p.scale, &p.value,
                        &p.sigma_log, &n, &used) != 5)
            throw ConfigError("read_fit_csv: bad row: " + line);
        p.n_samples = n;
        p.used = used != 0;
        out.push_back(p);
    }
    return out;
}

void write_svg(std::span<const std::complex<double>> pts, std::ostream& os,
               const std::string& stroke) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (!pts.empty()) {
        minx = maxx = pts[0].real();
        miny = maxy = pts[0].imag();
        for (const auto& z : pts) {
            minx = std::min(minx, z.real());
            maxx = std::max(maxx, z.real());
            miny = std::min(miny, z.imag());
            maxy = std::max(maxy, z.imag());
        }
    }
    double w = maxx - minx, h = maxy - miny;
    double pad = 0.05 * std::max({w, h, 1e-9});
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << format_double(minx - pad) << ' ' << format_double(-maxy - pad) << ' '
       << format_double(w + 2 * pad) << ' ' << format_double(h + 2 * pad)
       << "\">\n<polyline fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"" << format_double(std::max(w, h) / 800.0)
       << "\" points=\"";
    for (const auto& z : pts)
        os << format_double(z.real()) << ',' << format_double(-z.imag()) << ' ';
    os << "\"/>\n</svg>\n";
}

void write_pbm(const GridMask& mask, std::ostream& os) {
    os << "P4\n# cell " << format_double(mask.cell_size) << " origin " << mask.x0
       << ' ' << mask.y0 << "\n"
       << mask.width << ' ' << mask.height << '\n';
    const int bytes_per_row = (mask.width + 7) / 8;
    std::string row(bytes_per_row, '\0');
    for (int y = 0; y < mask.height; ++y) {
        std::fill(row.begin(), row.end(), '\0');
        for (int x = 0; x < mask.width; ++x)
            if (mask.test(mask.x0 + x, mask.y0 + y))
                row[x >> 3] |= static_cast<char>(0x80 >> (x & 7));
        os.write(row.data(), bytes_per_row);
    }
}

GridMask read_pbm(std::istream& is) {
    std::string magic;
    is >> magic;
    if (magic != "P4") throw ConfigError("read_pbm: not a P4 bitmap");
    double cell = 1.0;
    int x0 = 0, y0 = 0;
    is >> std::ws;
    while (is.peek() == '#') {
        std::string line;
        std::getline(is, line);
        std::sscanf(line.c_str(), "# cell %lf origin %d %d", &cell, &x0, &y0);
        is >> std::ws;
    }
    int w = 0, h = 0;
    is >> w >> h;
    if (!(w > 0 && h > 0)) throw ConfigError("read_pbm: bad dimensions");
    is.get();  // single whitespace after the header
    GridMask m = GridMask::empty_window(cell, x0, y0, w, h);
    const int bytes_per_row = (w + 7) / 8;
    std::string row(bytes_per_row, '\0');
    for (int y = 0; y < h; ++y) {
        is.read(row.data(), bytes_per_row);
        if (!is) throw ConfigError("read_pbm: truncated data");
        for (int x = 0; x < w; ++x)
            if (row[x >> 3] & (0x80 >> (x & 7))) m.set(x0 + x, y0 + y);
    }
    return m;
}

void write_region_ppm(const TriRegion& region, std::ostream& os) {
    os << "P6\n# mesh " << format_double(region.mesh) << "\n"
       << region.cols << ' ' << region.rows << "\n255\n";
    for (int r = region.rows - 1; r >= 0; --r) {
        for (int q = 0; q < region.cols; ++q) {
            unsigned char px[3];
            switch (region.color[region.index(q, r)]) {
                case SiteColor::white: px[0] = px[1] = px[2] = 245; break;
                case SiteColor::black: px[0] = px[1] = px[2] = 40; break;
                default: px[0] = px[1] = px[2] = 128; break;
            }
            os.write(reinterpret_cast<const char*>(px), 3);
        }
    }
}

std::string chain_to_json(const ConformalChain& chain) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : chain.steps)
        arr.push_back({s.duration, s.drive});
    return arr.dump();
}

ConformalChain chain_from_json_text(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw ConfigError("chain_from_json: expected an array");
    ConformalChain c;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw ConfigError("chain_from_json: expected [duration, drive] pairs");
        chordal_advance(c, e[1].get<double>(), e[0].get<double>());
    }
    return c;
}

void write_quadrilateral(const Quadrilateral& q, const std::string& base_path) {
    {
        std::ofstream pbm(base_path + ".pbm", std::ios::binary);
        if (!pbm) throw ConfigError("write_quadrilateral: cannot open " + base_path);
        write_pbm(q.blocked, pbm);
    }
    nlohmann::ordered_json sides;
    auto dump_side = [](const std::vector<std::pair<int, int>>& side) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (auto [x, y] : side) arr.push_back({x, y});
        return arr;
    };
    sides["side_a"] = dump_side(q.side_a);
    sides["side_b"] = dump_side(q.side_b);
    std::ofstream js(base_path + ".sides.json");
    js << sides.dump(2) << '\n';
}

Quadrilateral read_quadrilateral(const std::string& base_path) {
    Quadrilateral q;
    std::ifstream pbm(base_path + ".pbm", std::ios::binary);
    if (!pbm) throw ConfigError("read_quadrilateral: cannot open " + base_path + ".pbm");
    q.blocked = read_pbm(pbm);
    std::ifstream js(base_path + ".sides.json");
    if (!js) throw ConfigError("read_quadrilateral: missing sides file");
    auto sides = nlohmann::json::parse(js);
    for (const auto& e : sides.at("side_a"))
        q.side_a.emplace_back(e[0].get<int>(), e[1].get<int>());
    for (const auto& e : sides.at("side_b"))
        q.side_b.emplace_back(e[0].get<int>(), e[1].get<int>());
    return q;
}

}  // namespace frontier
