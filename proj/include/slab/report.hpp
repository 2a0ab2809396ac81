#pragma once

#include <string>
#include <vector>

namespace slab {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    int n = 0;
};

// Least-squares line through (log_base x_i, log_base y_i).
SlopeFit fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys,
                    double base = 2.0);

// Least-squares line through (x_i, y_i).
SlopeFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys);

// Deterministic %.12g formatting so reruns are byte-identical.
std::string fmt_num(double x);

// Minimal RFC-4180 writer: fields holding comma/quote/CR/LF get quoted.
class CsvWriter {
public:
    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& fields);
    void row_nums(const std::vector<double>& values);
    const std::string& str() const { return out_; }

private:
    void emit(const std::vector<std::string>& fields);
    std::string out_;
};

// Splits one CSV line back into fields (inverse of CsvWriter for the
// subset of CSV this project emits).
std::vector<std::string> csv_split(const std::string& line);

} // namespace slab
