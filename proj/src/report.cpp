#include "slab/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace slab {

SlopeFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::domain_error("fit_linear: need >= 2 matching points");
    const int n = int(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    SlopeFit f;
    f.n = n;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    if (n > 2) {
        double ss = 0;
        for (int i = 0; i < n; ++i) {
            double e = ys[i] - (f.intercept + f.slope * xs[i]);
            ss += e * e;
        }
        f.stderr_slope = std::sqrt(ss / (n - 2) * n / denom);
    }
    return f;
}

SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys,
                    double base) {
    std::vector<double> lx(xs.size()), ly(ys.size());
    const double lb = std::log(base);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0) || !(ys[i] > 0))
            throw std::domain_error("fit_loglog: data must be positive");
        lx[i] = std::log(xs[i]) / lb;
        ly[i] = std::log(ys[i]) / lb;
    }
    return fit_linear(lx, ly);
}

std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void CsvWriter::emit(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ += ',';
        out_ += csv_escape(fields[i]);
    }
    out_ += "\r\n";
}

void CsvWriter::header(const std::vector<std::string>& names) { emit(names); }
void CsvWriter::row(const std::vector<std::string>& fields) { emit(fields); }

void CsvWriter::row_nums(const std::vector<double>& values) {
    std::vector<std::string> fields;
    fields.reserve(values.size());
    for (double v : values) fields.push_back(fmt_num(v));
    emit(fields);
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c == '\r' || c == '\n') {
            break;
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace slab
