#include "nlbell/table_format.hpp"

#include <algorithm>
#include <sstream>

#include "nlbell/json_io.hpp"

namespace nlbell::io {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string grid(const std::vector<std::string>& top, const std::vector<std::string>& left,
                 const std::vector<std::vector<std::string>>& rows) {
    std::size_t width = 1;
    for (const auto& s : top) width = std::max(width, s.size());
    for (const auto& s : left) width = std::max(width, s.size());
    for (const auto& r : rows)
        for (const auto& s : r) width = std::max(width, s.size());

    std::ostringstream os;
    os << pad("", width) << " |";
    for (const auto& s : top) os << ' ' << pad(s, width);
    os << '\n' << std::string(width + 1, '-') << '+' << std::string(top.size() * (width + 1), '-') << '\n';
    for (std::size_t j = 0; j < left.size(); ++j) {
        os << pad(left[j], width) << " |";
        for (const auto& s : rows[j]) os << ' ' << pad(s, width);
        os << '\n';
    }
    return os.str();
}

template <typename T, typename Fmt>
std::string render_behavior(const BasicBehavior<T>& p, Fmt fmt) {
    const int n = p.settings();
    std::vector<std::string> top, left;
    std::vector<std::vector<std::string>> rows(n);
    for (int i = 0; i < n; ++i) top.push_back(fmt(p.alice[i]));
    for (int j = 0; j < n; ++j) {
        left.push_back(fmt(p.bob[j]));
        for (int i = 0; i < n; ++i) rows[j].push_back(fmt(p.joint(i, j)));
    }
    return grid(top, left, rows);
}

}  // namespace

std::string render_table(const BellFunctional& f) {
    const int n = f.settings();
    std::vector<std::string> top, left;
    std::vector<std::vector<std::string>> rows(n);
    for (int i = 0; i < n; ++i) top.push_back(std::to_string(f.alice[i]));
    for (int j = 0; j < n; ++j) {
        left.push_back(std::to_string(f.bob[j]));
        for (int i = 0; i < n; ++i) rows[j].push_back(std::to_string(f.joint(i, j)));
    }
    std::string out = grid(top, left, rows);
    if (f.constant != 0) out += "constant: " + std::to_string(f.constant) + "\n";
    return out;
}

std::string render_table(const BehaviorPoint& p) {
    return render_behavior(p, [](const Rational& r) { return r.to_string(); });
}

std::string render_table(const FloatBehavior& p) { return render_behavior(p, format_double); }

std::string render_census(const std::vector<ClassCensus>& census) {
    std::ostringstream os;
    std::size_t total = 0;
    os << "class   count   CHSH   I3322\n";
    for (const auto& c : census) {
        total += c.count;
        os << pad(to_string(c.label), 5) << pad(std::to_string(c.count), 8) << pad(std::to_string(c.chsh_violations), 7)
           << pad(std::to_string(c.i3322_violations), 8) << '\n';
    }
    os << "total " << pad(std::to_string(total), 7) << '\n';
    return os.str();
}

}  // namespace nlbell::io
