#include "fracgrowth/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

#include "fracgrowth/error.hpp"

namespace fracgrowth {

std::string format_shortest(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_full(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string format_csv(const Trajectory& tr) {
    std::string out = "t,Y\n";
    out.reserve(out.size() + tr.values.size() * 40);
    for (std::size_t i = 0; i < tr.values.size(); ++i) {
        out += format_full(tr.time(i));
        out += ',';
        out += format_full(tr.values[i]);
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.flush();
        if (!os) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string gnuplot_script(std::string_view title, const std::vector<PlotSeries>& series) {
    std::string out;
    out += "set datafile separator ','\n";
    out += "set key autotitle columnhead\n";
    out += "set xlabel 't'\n";
    out += "set ylabel 'Y(t)'\n";
    out += "set title '";
    out += title;
    out += "'\n";
    out += "plot ";
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i > 0) {
            out += ", \\\n     ";
        }
        out += "'" + series[i].file + "' using 1:2 with lines title '" + series[i].title + "'";
    }
    out += "\n";
    return out;
}

}  // namespace fracgrowth
