#include "recipmono/polycore.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace recipmono {

namespace {

Integer parse_integer(const std::string& s)
{
    Integer v;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || v.set_str(t, 10) != 0) throw std::invalid_argument("malformed integer '" + s + "'");
    return v;
}

IntPoly parse_json_array(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed coefficient array: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("coefficient array expected");
    std::vector<Integer> coeffs;
    for (const auto& e : j) {
        if (e.is_string())
            coeffs.push_back(parse_integer(e.get<std::string>()));
        else if (e.is_number_integer())
            coeffs.push_back(parse_integer(e.dump()));
        else
            throw std::invalid_argument("coefficient array entries must be integers");
    }
    return IntPoly(std::move(coeffs));
}

// term := [sign] [digits] ['*'] [var ['^' digits]]
IntPoly parse_human(const std::string& text)
{
    // blanks may separate tokens but never split a number
    std::string s;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const unsigned char c = static_cast<unsigned char>(text[k]);
        if (!std::isspace(c)) {
            s += text[k];
            continue;
        }
        std::size_t next = k;
        while (next < text.size() && std::isspace(static_cast<unsigned char>(text[next]))) ++next;
        if (!s.empty() && next < text.size() && std::isdigit(static_cast<unsigned char>(s.back())) &&
            std::isdigit(static_cast<unsigned char>(text[next])))
            throw std::invalid_argument("unexpected blank inside a term");
        k = next - 1;
    }
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    std::map<unsigned long, Integer> terms;
    char var = 0;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;

        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        Integer coeff = (i > start) ? parse_integer(s.substr(start, i - start)) : Integer(1);
        bool had_digits = i > start;

        if (i < s.size() && s[i] == '*') {
            if (!had_digits) throw std::invalid_argument("'*' without a coefficient");
            ++i;
            if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("expected variable after '*'");
        }

        unsigned long exponent = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (var == 0) var = s[i];
            else if (s[i] != var) throw std::invalid_argument("more than one variable symbol");
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t es = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es) throw std::invalid_argument("missing exponent after '^'");
                exponent = std::stoul(s.substr(es, i - es));
            }
        } else if (!had_digits) {
            throw std::invalid_argument("malformed term at position " + std::to_string(start));
        }
        if (negative) coeff = -coeff;
        terms[exponent] += coeff;
    }

    std::vector<Integer> coeffs(terms.rbegin()->first + 1);
    for (auto& [e, c] : terms) coeffs[e] = c;
    return IntPoly(std::move(coeffs));
}

} // namespace

IntPoly parse_poly(const std::string& text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[' ? parse_json_array(text) : parse_human(text);
    }
    throw std::invalid_argument("empty polynomial");
}

std::string to_json_array(const IntPoly& f)
{
    std::string out = "[";
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
        if (j) out += ',';
        out += '"' + f.coeffs()[j].get_str() + '"';
    }
    return out + "]";
}

std::string to_string(const IntPoly& f, char var)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (int j = f.degree(); j >= 0; --j) {
        const Integer& c = f[j];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (j == 0 || mag != 1) out += mag.get_str();
        if (j >= 1) out += var;
        if (j >= 2) out += '^' + std::to_string(j);
    }
    return out;
}

} // namespace recipmono
