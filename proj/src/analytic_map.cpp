#include "subord/analytic_map.hpp"

#include "subord/complex_math.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <tuple>
#include <mutex>
#include <vector>

namespace subord {

namespace {

// Straight-line form of a tree: one instruction per distinct (node, variable)
// pair, so subtrees shared by differentiation are evaluated once per point.
struct Instr {
    AnalyticMap::Kind kind;
    Complex value;
    int a = -1;
    int b = -1;
};

struct Program {
    std::vector<Instr> code;
    int result = 0;
};

} // namespace

struct AnalyticMap::Node {
    Kind kind;
    Complex value;
    AnalyticMap a;
    AnalyticMap b;

    mutable std::once_flag compiled;
    mutable std::unique_ptr<const Program> program;
};

namespace {

constexpr double kMinDenominator = 1e-300;

} // namespace

AnalyticMap::AnalyticMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

AnalyticMap::AnalyticMap() : node_(nullptr) {}

AnalyticMap AnalyticMap::make(Kind kind, Complex value, const AnalyticMap* a, const AnalyticMap* b)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->value = value;
    if (a)
        node->a = *a;
    if (b)
        node->b = *b;
    return AnalyticMap(std::move(node));
}

AnalyticMap AnalyticMap::constant(Complex c) { return make(Kind::Constant, c, nullptr, nullptr); }

AnalyticMap AnalyticMap::identity() { return make(Kind::Identity, {}, nullptr, nullptr); }

// A default-constructed map has no node and behaves as the zero constant.
AnalyticMap::Kind AnalyticMap::kind() const noexcept { return node_ ? node_->kind : Kind::Constant; }

Complex AnalyticMap::value() const noexcept { return node_ ? node_->value : Complex{}; }

const void* AnalyticMap::id() const noexcept { return node_.get(); }

const AnalyticMap& AnalyticMap::lhs() const { return node_->a; }

const AnalyticMap& AnalyticMap::rhs() const { return node_->b; }

std::size_t AnalyticMap::size() const
{
    if (!node_)
        return 1;
    switch (node_->kind) {
    case Kind::Constant:
    case Kind::Identity:
        return 1;
    case Kind::Power:
    case Kind::Log:
    case Kind::Exp:
        return 1 + node_->a.size();
    default:
        return 1 + node_->a.size() + node_->b.size();
    }
}

AnalyticMap operator+(const AnalyticMap& a, const AnalyticMap& b)
{
    return AnalyticMap::make(AnalyticMap::Kind::Sum, {}, &a, &b);
}
AnalyticMap operator-(const AnalyticMap& a, const AnalyticMap& b)
{
    return AnalyticMap::make(AnalyticMap::Kind::Difference, {}, &a, &b);
}
AnalyticMap operator*(const AnalyticMap& a, const AnalyticMap& b)
{
    return AnalyticMap::make(AnalyticMap::Kind::Product, {}, &a, &b);
}
AnalyticMap operator/(const AnalyticMap& a, const AnalyticMap& b)
{
    return AnalyticMap::make(AnalyticMap::Kind::Quotient, {}, &a, &b);
}
AnalyticMap pow(const AnalyticMap& base, Complex exponent)
{
    return AnalyticMap::make(AnalyticMap::Kind::Power, exponent, &base, nullptr);
}
AnalyticMap log(const AnalyticMap& m) { return AnalyticMap::make(AnalyticMap::Kind::Log, {}, &m, nullptr); }
AnalyticMap exp(const AnalyticMap& m) { return AnalyticMap::make(AnalyticMap::Kind::Exp, {}, &m, nullptr); }
AnalyticMap compose(const AnalyticMap& outer, const AnalyticMap& inner)
{
    return AnalyticMap::make(AnalyticMap::Kind::Compose, {}, &outer, &inner);
}

AnalyticMap operator+(const AnalyticMap& a, Complex c) { return a + constant(c); }
AnalyticMap operator+(Complex c, const AnalyticMap& a) { return constant(c) + a; }
AnalyticMap operator-(const AnalyticMap& a, Complex c) { return a - constant(c); }
AnalyticMap operator-(Complex c, const AnalyticMap& a) { return constant(c) - a; }
AnalyticMap operator*(const AnalyticMap& a, Complex c) { return a * constant(c); }
AnalyticMap operator*(Complex c, const AnalyticMap& a) { return constant(c) * a; }
AnalyticMap operator/(const AnalyticMap& a, Complex c) { return a / constant(c); }
AnalyticMap operator/(Complex c, const AnalyticMap& a) { return constant(c) / a; }

AnalyticMap z_map() { return AnalyticMap::identity(); }
AnalyticMap constant(Complex c) { return AnalyticMap::constant(c); }


namespace {

class Compiler {
public:
    Program run(const AnalyticMap& m)
    {
        Program p;
        // register 0 holds z
        p.code.push_back({AnalyticMap::Kind::Identity, {}, -1, -1});
        code_ = &p.code;
        p.result = emit(m, 0);
        return p;
    }

private:
    int emit(const AnalyticMap& m, int var)
    {
        using Kind = AnalyticMap::Kind;
        if (m.kind() == Kind::Identity)
            return var;
        if (m.kind() == Kind::Constant)
            return push({Kind::Constant, m.value(), -1, -1});
        const auto key = std::make_pair(m.id(), var);
        if (auto it = seen_.find(key); it != seen_.end())
            return it->second;
        Instr in{m.kind(), m.value(), -1, -1};
        switch (m.kind()) {
        case Kind::Power:
        case Kind::Log:
        case Kind::Exp:
            in.a = emit(m.lhs(), var);
            break;
        case Kind::Compose:
            in.b = emit(m.rhs(), var);
            return seen_[key] = emit(m.lhs(), in.b);
        default:
            in.a = emit(m.lhs(), var);
            in.b = emit(m.rhs(), var);
            break;
        }
        return seen_[key] = push(in);
    }

    // Structurally equal instructions share a register even when they come
    // from distinct nodes, as differentiation tends to produce.
    int push(const Instr& in)
    {
        const auto key = std::make_tuple(static_cast<int>(in.kind), std::bit_cast<std::uint64_t>(in.value.real()),
                                         std::bit_cast<std::uint64_t>(in.value.imag()), in.a, in.b);
        if (auto it = shared_.find(key); it != shared_.end())
            return it->second;
        code_->push_back(in);
        return shared_[key] = static_cast<int>(code_->size() - 1);
    }

    std::vector<Instr>* code_ = nullptr;
    std::map<std::pair<const void*, int>, int> seen_;
    std::map<std::tuple<int, std::uint64_t, std::uint64_t, int, int>, int> shared_;
};

Complex run_program(const Program& p, Complex z)
{
    using Kind = AnalyticMap::Kind;
    thread_local std::vector<Complex> regs;
    regs.resize(p.code.size());
    regs[0] = z;
    for (std::size_t i = 1; i < p.code.size(); ++i) {
        const Instr& in = p.code[i];
        Complex& out = regs[i];
        switch (in.kind) {
        case Kind::Constant: out = in.value; break;
        case Kind::Identity: out = z; break;
        case Kind::Sum: out = regs[in.a] + regs[in.b]; break;
        case Kind::Difference: out = regs[in.a] - regs[in.b]; break;
        case Kind::Product: out = regs[in.a] * regs[in.b]; break;
        case Kind::Quotient: {
            const Complex den = regs[in.b];
            if (!(std::abs(den) >= kMinDenominator))
                throw Error(ErrorCode::DivisionByZero, "quotient denominator vanishes");
            out = regs[in.a] / den;
            break;
        }
        case Kind::Power: out = pow_principal(regs[in.a], in.value, kHardCutMargin); break;
        case Kind::Log: out = log_principal(regs[in.a], kHardCutMargin); break;
        case Kind::Exp: out = std::exp(regs[in.a]); break;
        case Kind::Compose: break; // never emitted: compositions rebind the variable
        }
    }
    return regs[p.result];
}

} // namespace

Complex eval(const AnalyticMap& m, Complex z) { return m(z); }

Complex AnalyticMap::operator()(Complex z) const
{
    try {
        Complex w;
        if (!node_) {
            w = 0.0;
        } else {
            std::call_once(node_->compiled, [this] { node_->program = std::make_unique<Program>(Compiler().run(*this)); });
            w = run_program(*node_->program, z);
        }
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw Error(ErrorCode::NonFinite, "value is not finite");
        return w;
    } catch (const Error& e) {
        if (e.point())
            throw;
        throw e.with_point(z);
    }
}

namespace {

// Derivatives are memoized per node so a subtree shared in the input yields
// one shared derivative subtree rather than a copy per reference.
class Differentiator {
public:
    AnalyticMap operator()(const AnalyticMap& m)
    {
        if (auto it = memo_.find(m.id()); it != memo_.end())
            return it->second;
        AnalyticMap d = rule(m);
        memo_.emplace(m.id(), d);
        return d;
    }

private:
    AnalyticMap rule(const AnalyticMap& m)
    {
        using Kind = AnalyticMap::Kind;
        auto& d = *this;
        switch (m.kind()) {
        case Kind::Constant:
            return constant(0.0);
        case Kind::Identity:
            return constant(1.0);
        case Kind::Sum:
            return d(m.lhs()) + d(m.rhs());
        case Kind::Difference:
            return d(m.lhs()) - d(m.rhs());
        case Kind::Product:
            return d(m.lhs()) * m.rhs() + m.lhs() * d(m.rhs());
        case Kind::Quotient: {
            const auto& num = m.lhs();
            const auto& den = m.rhs();
            return (d(num) * den - num * d(den)) / (den * den);
        }
        case Kind::Power: {
            const Complex c = m.value();
            if (c == Complex{})
                return constant(0.0);
            return c * pow(m.lhs(), c - 1.0) * d(m.lhs());
        }
        case Kind::Log:
            return d(m.lhs()) / m.lhs();
        case Kind::Exp:
            return m * d(m.lhs());
        case Kind::Compose:
            // the outer derivative lives in a different variable; its memo
            // entries stay valid because they depend on the node alone
            return compose(d(m.lhs()), m.rhs()) * d(m.rhs());
        }
        return constant(0.0);
    }

    std::map<const void*, AnalyticMap> memo_;
};

} // namespace

AnalyticMap differentiate(const AnalyticMap& m) { return Differentiator()(m); }

// ---------------------------------------------------------------------------
// Serialization

namespace {

void append_number(std::string& out, Complex c)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
    out += buf;
    if (c.imag() != 0.0) {
        std::snprintf(buf, sizeof buf, ",%.17g", c.imag());
        out += buf;
    }
}

void write_node(std::string& out, const AnalyticMap& m)
{
    using Kind = AnalyticMap::Kind;
    if (!out.empty())
        out += ' ';
    switch (m.kind()) {
    case Kind::Constant:
        append_number(out, m.value());
        return;
    case Kind::Identity:
        out += 'z';
        return;
    case Kind::Sum:
        out += '+';
        break;
    case Kind::Difference:
        out += '-';
        break;
    case Kind::Product:
        out += '*';
        break;
    case Kind::Quotient:
        out += '/';
        break;
    case Kind::Compose:
        out += '@';
        break;
    case Kind::Power:
        out += "pow[";
        append_number(out, m.value());
        out += ']';
        write_node(out, m.lhs());
        return;
    case Kind::Log:
        out += "log";
        write_node(out, m.lhs());
        return;
    case Kind::Exp:
        out += "exp";
        write_node(out, m.lhs());
        return;
    }
    write_node(out, m.lhs());
    write_node(out, m.rhs());
}

bool parse_real(std::string_view s, double& out)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

bool parse_number(std::string_view s, Complex& out)
{
    double re = 0.0;
    double im = 0.0;
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) {
        if (!parse_real(s, re))
            return false;
    } else if (!parse_real(s.substr(0, comma), re) || !parse_real(s.substr(comma + 1), im)) {
        return false;
    }
    out = {re, im};
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view text)
    {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            const std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            if (i > start)
                tokens_.push_back(text.substr(start, i - start));
        }
    }

    AnalyticMap parse_all()
    {
        if (tokens_.empty())
            throw Error(ErrorCode::ParseError, "empty expression");
        auto m = parse();
        if (pos_ != tokens_.size())
            throw Error(ErrorCode::ParseError, "trailing tokens after expression");
        return m;
    }

private:
    AnalyticMap parse()
    {
        if (pos_ >= tokens_.size())
            throw Error(ErrorCode::ParseError, "unexpected end of expression");
        const std::string_view tok = tokens_[pos_++];
        if (tok == "z")
            return z_map();
        if (tok == "+" || tok == "-" || tok == "*" || tok == "/" || tok == "@") {
            auto a = parse();
            auto b = parse();
            switch (tok[0]) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            case '/': return a / b;
            default: return compose(a, b);
            }
        }
        if (tok == "log")
            return log(parse());
        if (tok == "exp")
            return exp(parse());
        if (tok.starts_with("pow[") && tok.ends_with("]")) {
            Complex c;
            if (!parse_number(tok.substr(4, tok.size() - 5), c))
                throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(tok) + "'");
            return pow(parse(), c);
        }
        Complex c;
        if (parse_number(tok, c))
            return constant(c);
        throw Error(ErrorCode::ParseError, "unknown token '" + std::string(tok) + "'");
    }

    std::vector<std::string_view> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

std::string serialize(const AnalyticMap& m)
{
    std::string out;
    write_node(out, m);
    return out;
}

AnalyticMap parse_map(std::string_view text) { return Parser(text).parse_all(); }

} // namespace subord
