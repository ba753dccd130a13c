#include "gyro/text.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "gyro/errors.hpp"

namespace gyro {

double parse_real(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    if (body.empty() || body.front() == '+') throw DomainError("malformed number '" + std::string(text) + "'");
    double value = 0.0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || end != body.data() + body.size()) {
        throw DomainError("malformed number '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) throw DomainError("non-finite number '" + std::string(text) + "'");
    return value;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view field =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_real(field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_real(double x) {
    char buf[64];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_point(std::span<const double> coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i != 0) out += ',';
        out += format_real(coords[i]);
    }
    return out;
}

}  // namespace gyro
