#include <nseries/errors.hpp>
#include <nseries/text_io.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace nseries
{

namespace
{

// Shared cursor for the two series grammars.
class Cursor
{
public:
    explicit Cursor(std::string_view text) : m_text(text) {}

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    bool done()
    {
        skip_space();
        return m_pos >= m_text.size();
    }
    char peek()
    {
        skip_space();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    std::size_t pos() const noexcept
    {
        return m_pos;
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg, m_pos);
    }

    std::optional<Rational> rational()
    {
        skip_space();
        const auto start = m_pos;
        auto digits = [&] {
            const auto s = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            return m_pos > s;
        };
        if (!digits()) {
            return std::nullopt;
        }
        if (m_pos < m_text.size() && m_text[m_pos] == '/') {
            ++m_pos;
            if (!digits()) {
                fail("expected denominator");
            }
        }
        if (m_pos < m_text.size() && (m_text[m_pos] == '.' || m_text[m_pos] == 'e' || m_text[m_pos] == 'E')) {
            fail("coefficients must be exact rationals p/q");
        }
        try {
            return parse_rational(m_text.substr(start, m_pos - start));
        } catch (const ParseError &e) {
            throw ParseError(e.what(), start);
        }
    }

    std::int64_t integer()
    {
        skip_space();
        const auto start = m_pos;
        if (m_pos < m_text.size() && (m_text[m_pos] == '-' || m_text[m_pos] == '+')) {
            ++m_pos;
        }
        const auto ds = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (m_pos == ds) {
            m_pos = start;
            fail("expected integer");
        }
        return std::stoll(std::string(m_text.substr(start, m_pos - start)));
    }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;
};

// Appends "c*body", "body" or "c" with sign handling.
void append_term(std::ostringstream &os, bool first, const Rational &c, const std::string &body)
{
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
        os << (negative ? "-" : "");
    } else {
        os << (negative ? " - " : " + ");
    }
    if (body.empty()) {
        os << mag.get_str();
    } else if (mag == 1) {
        os << body;
    } else {
        os << mag.get_str() << '*' << body;
    }
}

// Reads an optional leading sign and coefficient; returns the signed
// coefficient and whether an explicit coefficient was present.
std::pair<Rational, bool> signed_coefficient(Cursor &cur, bool first)
{
    Rational sign(1);
    if (cur.accept('-')) {
        sign = -1;
    } else if (!cur.accept('+') && !first) {
        cur.fail("expected '+' or '-' between terms");
    }
    if (auto c = cur.rational()) {
        cur.accept('*');
        return {sign * *c, true};
    }
    return {sign, false};
}

} // namespace

std::string format_free_series(const FreeSeries &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : p.terms()) {
        std::string body;
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            body += (i ? " X" : "X") + std::to_string(w.letters[i]);
        }
        append_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

FreeSeries parse_free_series(std::string_view text, std::size_t alphabet_size, std::size_t grade_bound)
{
    Cursor cur(text);
    std::vector<std::pair<Word, Rational>> terms;
    std::uint32_t max_letter = 0;
    bool any_letter = false;
    bool first = true;
    if (cur.done()) {
        cur.fail("empty series");
    }
    while (!cur.done()) {
        auto [coeff, explicit_coeff] = signed_coefficient(cur, first);
        Word w;
        while (cur.peek() == 'X') {
            cur.accept('X');
            const auto pos = cur.pos();
            const auto idx = cur.integer();
            if (idx < 0) {
                throw ParseError("negative variable index", pos);
            }
            w.letters.push_back(static_cast<std::uint32_t>(idx));
            max_letter = std::max(max_letter, static_cast<std::uint32_t>(idx));
            any_letter = true;
            cur.accept('*');
        }
        if (!explicit_coeff && w.empty()) {
            cur.fail("expected coefficient or monomial");
        }
        terms.emplace_back(std::move(w), std::move(coeff));
        first = false;
    }
    const auto alphabet = alphabet_size != 0 ? alphabet_size : (any_letter ? max_letter + 1 : 1);
    FreeSeries out(alphabet, grade_bound);
    for (const auto &[w, c] : terms) {
        out.add_to(w, c);
    }
    return out;
}

std::string format_hahn(const HahnPoly &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : a.ordered_terms()) {
        const bool constant = std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x == 0; });
        append_term(os, first, c, constant ? std::string{} : "t^" + exp_to_string(m));
        first = false;
    }
    return os.str();
}

HahnPoly parse_hahn(std::string_view text, const MonoidCtx &ctx, std::size_t weight_bound)
{
    Cursor cur(text);
    HahnPoly out(ctx, weight_bound);
    bool first = true;
    if (cur.done()) {
        cur.fail("empty series");
    }
    while (!cur.done()) {
        auto [coeff, explicit_coeff] = signed_coefficient(cur, first);
        ExpVec m(ctx.dimension(), 0);
        if (cur.accept('t')) {
            if (cur.accept('^')) {
                if (cur.accept('(')) {
                    ExpVec e;
                    do {
                        e.push_back(cur.integer());
                    } while (cur.accept(','));
                    cur.expect(')');
                    m = std::move(e);
                } else {
                    m = ExpVec{cur.integer()};
                }
            } else {
                m = ExpVec{1};
            }
            ctx.check(m);
        } else if (!explicit_coeff) {
            cur.fail("expected coefficient or monomial");
        }
        out.add_to(m, coeff);
        first = false;
    }
    return out;
}

nlohmann::json free_series_to_json(const FreeSeries &p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[w, c] : p.terms()) {
        terms.push_back({{"word", w.letters}, {"coeff", to_string(c)}});
    }
    return {{"schema", json_schema_version},
            {"alphabet", p.alphabet_size()},
            {"grade", p.grade_bound()},
            {"terms", std::move(terms)}};
}

FreeSeries free_series_from_json(const nlohmann::json &j)
{
    FreeSeries out(j.at("alphabet").get<std::size_t>(), j.at("grade").get<std::size_t>());
    for (const auto &t : j.at("terms")) {
        out.add_to(Word(t.at("word").get<std::vector<std::uint32_t>>()), parse_rational(t.at("coeff").get<std::string>()));
    }
    return out;
}

nlohmann::json hahn_to_json(const HahnPoly &a)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[m, c] : a.ordered_terms()) {
        terms.push_back({{"exps", m}, {"coeff", to_string(c)}});
    }
    return {{"schema", json_schema_version},
            {"ctx", a.ctx().descriptor()},
            {"weight_bound", a.weight_bound()},
            {"terms", std::move(terms)}};
}

HahnPoly hahn_from_json(const nlohmann::json &j)
{
    HahnPoly out(MonoidCtx::parse(j.at("ctx").get<std::string>()), j.at("weight_bound").get<std::size_t>());
    for (const auto &t : j.at("terms")) {
        out.add_to(t.at("exps").get<ExpVec>(), parse_rational(t.at("coeff").get<std::string>()));
    }
    return out;
}

std::string format_op_table(const OpTable &op)
{
    std::ostringstream os;
    os << "ctx=" << op.ctx().descriptor() << " N=" << op.weight_bound() << '\n';
    for (const auto &m : basis_universe(op.ctx(), op.weight_bound())) {
        os << "t^" << exp_to_string(m) << " -> " << format_hahn(op.image(m)) << '\n';
    }
    return os.str();
}

OpTable parse_op_table(std::string_view text)
{
    std::optional<MonoidCtx> ctx;
    std::size_t bound = 0;
    OpTable::image_map images;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const auto eol = text.find('\n', offset);
        auto line = text.substr(offset, eol == std::string_view::npos ? std::string_view::npos : eol - offset);
        const auto line_start = offset;
        offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
            continue;
        }
        if (!ctx) {
            std::istringstream is{std::string(line)};
            std::string ctx_field, n_field;
            is >> ctx_field >> n_field;
            if (ctx_field.rfind("ctx=", 0) != 0 || n_field.rfind("N=", 0) != 0) {
                throw ParseError("table header must read 'ctx=<descriptor> N=<bound>'", line_start);
            }
            ctx = MonoidCtx::parse(ctx_field.substr(4));
            try {
                bound = std::stoul(n_field.substr(2));
            } catch (const std::exception &) {
                throw ParseError("bad weight bound '" + n_field + "'", line_start);
            }
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            throw ParseError("expected 't^(..) -> <series>'", line_start);
        }
        HahnPoly lhs(*ctx, bound);
        try {
            lhs = parse_hahn(line.substr(0, arrow), *ctx, bound);
        } catch (const ParseError &e) {
            throw ParseError(e.what(), line_start + e.position());
        }
        if (lhs.terms().size() != 1 || lhs.terms().begin()->second != 1) {
            throw ParseError("left-hand side must be a single basis monomial", line_start);
        }
        HahnPoly rhs(*ctx, bound);
        try {
            rhs = parse_hahn(line.substr(arrow + 2), *ctx, bound);
        } catch (const ParseError &e) {
            throw ParseError(e.what(), line_start + arrow + 2 + e.position());
        }
        const auto &m = lhs.terms().begin()->first;
        if (!images.emplace(m, std::move(rhs)).second) {
            throw ParseError("duplicate image for t^" + exp_to_string(m), line_start);
        }
    }
    if (!ctx) {
        throw ParseError("missing table header", 0);
    }
    return OpTable(*ctx, bound, std::move(images));
}

nlohmann::json factor_aut_to_json(const FactorAut &f)
{
    nlohmann::json chi = nlohmann::json::array();
    for (const auto &v : f.chi.generator_values()) {
        chi.push_back(to_string(v));
    }
    return {{"schema", json_schema_version},
            {"ctx", f.residual.ctx().descriptor()},
            {"N", f.residual.weight_bound()},
            {"mu", f.mu.matrix()},
            {"chi", std::move(chi)},
            {"residual", format_op_table(f.residual)}};
}

FactorAut factor_aut_from_json(const nlohmann::json &j)
{
    const auto ctx = MonoidCtx::parse(j.at("ctx").get<std::string>());
    std::vector<Rational> chi;
    for (const auto &v : j.at("chi")) {
        chi.push_back(parse_rational(v.get<std::string>()));
    }
    auto residual = parse_op_table(j.at("residual").get<std::string>());
    if (!(residual.ctx() == ctx) || residual.weight_bound() != j.at("N").get<std::size_t>()) {
        throw DimensionError("residual table context differs from the factor header");
    }
    return FactorAut{ExponentAut(ctx, j.at("mu").get<IntMatrix>()), CharacterX(ctx, std::move(chi)), std::move(residual)};
}

} // namespace nseries
