#include <nseries/errors.hpp>
#include <nseries/support_order.hpp>

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace nseries
{

MonoidCtx MonoidCtx::lex(std::size_t dimension)
{
    if (dimension == 0) {
        throw DimensionError("monoid dimension must be at least 1");
    }
    return MonoidCtx(OrderKind::lex, std::vector<std::int64_t>(dimension, 1));
}

MonoidCtx MonoidCtx::product(std::size_t dimension)
{
    if (dimension == 0) {
        throw DimensionError("monoid dimension must be at least 1");
    }
    return MonoidCtx(OrderKind::product, std::vector<std::int64_t>(dimension, 1));
}

MonoidCtx MonoidCtx::weighted(std::vector<std::int64_t> weights)
{
    if (weights.empty()) {
        throw DimensionError("monoid dimension must be at least 1");
    }
    for (auto w : weights) {
        if (w < 1) {
            throw DomainError("generator weights must be positive, got " + std::to_string(w));
        }
    }
    return MonoidCtx(OrderKind::weighted, std::move(weights));
}

namespace
{

std::int64_t parse_int(std::string_view s, const std::string &context)
{
    std::int64_t v = 0;
    const auto *first = s.data();
    const auto *last = s.data() + s.size();
    if (!s.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError("expected integer in '" + context + "', got '" + std::string(s) + "'",
                         static_cast<std::size_t>(s.data() - context.data()));
    }
    return v;
}

} // namespace

MonoidCtx MonoidCtx::parse(const std::string &descriptor)
{
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) {
        throw ParseError("monoid descriptor must look like lex:d, prod:d or weighted:w1,...", 0);
    }
    const auto kind = descriptor.substr(0, colon);
    const std::string_view rest = std::string_view(descriptor).substr(colon + 1);
    if (kind == "lex" || kind == "prod") {
        const auto d = parse_int(rest, descriptor);
        if (d < 1) {
            throw DimensionError("monoid dimension must be at least 1");
        }
        return kind == "lex" ? lex(static_cast<std::size_t>(d)) : product(static_cast<std::size_t>(d));
    }
    if (kind == "weighted") {
        std::vector<std::int64_t> w;
        std::size_t start = 0;
        while (start <= rest.size()) {
            const auto comma = rest.find(',', start);
            const auto piece = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            w.push_back(parse_int(piece, descriptor));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return weighted(std::move(w));
    }
    throw ParseError("unknown order kind '" + kind + "'", 0);
}

std::string MonoidCtx::descriptor() const
{
    switch (m_kind) {
        case OrderKind::lex:
            return "lex:" + std::to_string(dimension());
        case OrderKind::product:
            return "prod:" + std::to_string(dimension());
        case OrderKind::weighted: {
            std::string out = "weighted:";
            for (std::size_t i = 0; i < m_weights.size(); ++i) {
                out += (i ? "," : "") + std::to_string(m_weights[i]);
            }
            return out;
        }
    }
    return {};
}

void MonoidCtx::check(const ExpVec &m) const
{
    if (m.size() != dimension()) {
        throw DimensionError("exponent " + exp_to_string(m) + " has dimension " + std::to_string(m.size())
                             + ", context expects " + std::to_string(dimension()));
    }
}

std::int64_t MonoidCtx::weight(const ExpVec &m) const
{
    check(m);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        w += m_weights[i] * m[i];
    }
    return w;
}

ExpVec exp_add(const ExpVec &a, const ExpVec &b)
{
    if (a.size() != b.size()) {
        throw DimensionError("exponent dimension mismatch");
    }
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

ExpVec exp_sub(const ExpVec &a, const ExpVec &b)
{
    if (a.size() != b.size()) {
        throw DimensionError("exponent dimension mismatch");
    }
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

ExpVec unit_exp(std::size_t d, std::size_t i)
{
    ExpVec e(d, 0);
    e.at(i) = 1;
    return e;
}

namespace
{

Cmp lex_cmp(const ExpVec &a, const ExpVec &b)
{
    const auto c = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    return c < 0 ? Cmp::less : (c > 0 ? Cmp::greater : Cmp::equal);
}

} // namespace

Cmp cmp(const MonoidCtx &ctx, const ExpVec &a, const ExpVec &b)
{
    ctx.check(a);
    ctx.check(b);
    switch (ctx.kind()) {
        case OrderKind::lex:
            return lex_cmp(a, b);
        case OrderKind::product: {
            bool le = true, ge = true;
            for (std::size_t i = 0; i < a.size(); ++i) {
                le = le && a[i] <= b[i];
                ge = ge && a[i] >= b[i];
            }
            if (le && ge) {
                return Cmp::equal;
            }
            return le ? Cmp::less : (ge ? Cmp::greater : Cmp::incomparable);
        }
        case OrderKind::weighted: {
            const auto wa = ctx.weight(a), wb = ctx.weight(b);
            if (wa != wb) {
                return wa < wb ? Cmp::less : Cmp::greater;
            }
            return lex_cmp(a, b);
        }
    }
    return Cmp::incomparable;
}

std::set<ExpVec> minimal_elements(const FinitePosetFragment &frag)
{
    std::set<ExpVec> out;
    for (const auto &x : frag.elements) {
        const bool dominated = std::any_of(frag.elements.begin(), frag.elements.end(),
                                           [&](const ExpVec &z) { return cmp(frag.ctx, z, x) == Cmp::less; });
        if (!dominated) {
            out.insert(x);
        }
    }
    return out;
}

std::set<ExpVec> max_antichain(const FinitePosetFragment &frag, std::size_t bound)
{
    if (frag.elements.size() > bound) {
        throw ResourceError("antichain search limited to " + std::to_string(bound) + " elements, fragment has "
                            + std::to_string(frag.elements.size()));
    }
    const std::vector<ExpVec> elems(frag.elements.begin(), frag.elements.end());
    const auto n = elems.size();
    std::vector<std::vector<bool>> free(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            free[i][j] = i != j && cmp(frag.ctx, elems[i], elems[j]) == Cmp::incomparable;
        }
    }

    std::vector<std::size_t> current, best;
    // Branch and bound over candidates that stay pairwise incomparable; the
    // include-first order makes the first maximum found the canonical one.
    auto search = [&](auto &&self, const std::vector<std::size_t> &candidates) -> void {
        if (candidates.empty()) {
            if (current.size() > best.size()) {
                best = current;
            }
            return;
        }
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (current.size() + (candidates.size() - k) <= best.size()) {
                return;
            }
            const auto v = candidates[k];
            std::vector<std::size_t> next;
            for (std::size_t l = k + 1; l < candidates.size(); ++l) {
                if (free[v][candidates[l]]) {
                    next.push_back(candidates[l]);
                }
            }
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) {
        all[i] = i;
    }
    search(search, all);

    std::set<ExpVec> out;
    for (auto i : best) {
        out.insert(elems[i]);
    }
    return out;
}

std::vector<std::pair<ExpVec, ExpVec>> convolution_pairs(const MonoidCtx &ctx, const ExpVec &m,
                                                         const std::set<ExpVec> &a, const std::set<ExpVec> &b)
{
    ctx.check(m);
    std::vector<std::pair<ExpVec, ExpVec>> out;
    for (const auto &x : a) {
        ctx.check(x);
        auto y = exp_sub(m, x);
        if (b.count(y) != 0) {
            out.emplace_back(x, std::move(y));
        }
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(const MonoidCtx &ctx,
                                                                  const std::vector<ExpVec> &seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            const auto c = cmp(ctx, seq[i], seq[j]);
            if (c == Cmp::less || c == Cmp::equal) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

std::set<ClosureWord> choice_closure(const MonoidCtx &ctx, const std::set<ExpVec> &seeds,
                                     const ChoiceOperator &theta, std::size_t depth)
{
    std::set<ClosureWord> out;
    if (depth == 0) {
        return out;
    }
    std::deque<ClosureWord> queue;
    for (const auto &y : seeds) {
        ctx.check(y);
        queue.push_back(ClosureWord{{y}});
    }
    while (!queue.empty()) {
        ClosureWord w = std::move(queue.front());
        queue.pop_front();
        if (w.letters.size() < depth) {
            for (auto &q : theta(w.last())) {
                if (cmp(ctx, w.last(), q) != Cmp::less) {
                    throw PreconditionError("choice operator is not strictly extensive: " + exp_to_string(q)
                                            + " in theta(" + exp_to_string(w.last()) + ") is not greater");
                }
                ClosureWord next = w;
                next.letters.push_back(std::move(q));
                queue.push_back(std::move(next));
            }
        }
        out.insert(std::move(w));
    }
    return out;
}

Cmp closure_cmp(const MonoidCtx &ctx, const ClosureWord &u, const ClosureWord &v)
{
    return cmp(ctx, u.last(), v.last());
}

std::string exp_to_string(const ExpVec &m)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? "," : "") << m[i];
    }
    os << ')';
    return os.str();
}

} // namespace nseries
