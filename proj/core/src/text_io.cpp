#include "composita/text_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "composita/numbers.hpp"

namespace composita {

namespace {

// Bounds the resize driven by parsed indices; far above any usable order.
constexpr int kMaxTextIndex = 1 << 20;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Calls fn(line_number, trimmed_line) for every non-blank, non-comment line.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn fn) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        fn(line_no, line);
        if (end == text.size()) break;
    }
}

[[noreturn]] void malformed(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string series_to_text(const Series& s) {
    std::ostringstream out;
    for (int n = 0; n <= s.order(); ++n) {
        out << n << '\t' << s.coeff(n).str() << '\n';
    }
    return out.str();
}

Series series_from_text(std::string_view text, Kind kind) {
    std::vector<Rational> coeffs;
    int last_index = -1;
    for_each_data_line(text, [&](int line_no, std::string_view line) {
        size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            malformed(line_no, "expected 'index<TAB>value'");
        }
        std::string_view index_part = trim(line.substr(0, tab));
        std::string_view value_part = trim(line.substr(tab + 1));
        int index = 0;
        try {
            size_t used = 0;
            index = std::stoi(std::string(index_part), &used);
            if (used != index_part.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            malformed(line_no, "bad coefficient index '" + std::string(index_part) + "'");
        }
        if (index <= last_index) {
            malformed(line_no, "coefficient indices must be strictly increasing");
        }
        if (index > kMaxTextIndex) {
            malformed(line_no, "coefficient index " + std::to_string(index) +
                                   " above the supported maximum " +
                                   std::to_string(kMaxTextIndex));
        }
        coeffs.resize(static_cast<size_t>(index) + 1);  // gaps stay zero
        try {
            coeffs[static_cast<size_t>(index)] = Rational::parse(value_part);
        } catch (const std::invalid_argument& e) {
            malformed(line_no, e.what());
        }
        last_index = index;
    });
    if (coeffs.empty()) {
        throw std::invalid_argument("series text: no coefficients found");
    }
    return Series(kind, std::move(coeffs));
}

Series egf_from_integer_lines(std::string_view text) {
    std::vector<Rational> coeffs{Rational()};  // c(0) = 0
    int n = 0;
    for_each_data_line(text, [&](int line_no, std::string_view line) {
        ++n;
        Rational value;
        try {
            value = Rational::parse(trim(line));
        } catch (const std::invalid_argument& e) {
            malformed(line_no, e.what());
        }
        if (!value.is_integer()) {
            malformed(line_no, "EGF coefficient e(" + std::to_string(n) +
                                   ") = " + value.str() + " is not an integer");
        }
        coeffs.push_back(Rational(value.to_integer(), factorial(n)));
    });
    if (n == 0) {
        throw std::invalid_argument("EGF input: no coefficients found");
    }
    return Series(Kind::exponential, std::move(coeffs));
}

std::string to_csv(const CompositaTable& table) {
    std::ostringstream out;
    out << "n,k,value\n";
    for (int n = 1; n <= table.order(); ++n) {
        for (int k = 1; k <= n; ++k) {
            out << n << ',' << k << ',' << table.at(n, k).str() << '\n';
        }
    }
    return out.str();
}

}  // namespace composita
