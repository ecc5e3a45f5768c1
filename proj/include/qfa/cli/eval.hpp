#ifndef QFA_CLI_EVAL_HPP
#define QFA_CLI_EVAL_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <qfa/algebra.hpp>
#include <qfa/cli/config.hpp>
#include <qfa/cli/parser.hpp>
#include <qfa/element.hpp>
#include <qfa/fock.hpp>
#include <qfa/format.hpp>
#include <qfa/laplace.hpp>
#include <qfa/renorm.hpp>
#include <qfa/series.hpp>
#include <qfa/tmaps.hpp>

namespace qfa::cli
{

class eval_error : public std::runtime_error
{
public:
    eval_error(const std::string &message, std::size_t offset)
        : std::runtime_error("error at byte " + std::to_string(offset) + ": " + message), m_offset(offset)
    {
    }
    std::size_t offset() const
    {
        return m_offset;
    }

private:
    std::size_t m_offset;
};

using value = std::variant<scalar, element, tensor_element, formal_series<scalar>, formal_series<element>>;

inline std::string kind_name(const value &v)
{
    switch (v.index()) {
    case 0: return "a scalar";
    case 1: return "an element";
    case 2: return "a tensor";
    case 3: return "a scalar series";
    default: return "an element series";
    }
}

inline std::string format(const value &v)
{
    return std::visit([](const auto &x) { return qfa::format(x); }, v);
}

class evaluator
{
public:
    explicit evaluator(config cfg, bool renormalised = false)
        : m_cfg(std::move(cfg)), m_renormalised(renormalised), m_mpair(m_cfg.zeta, m_cfg.pairing)
    {
    }

    const config &configuration() const
    {
        return m_cfg;
    }

    value eval(std::string_view text) const
    {
        return eval(*parse_expr(text));
    }

    value eval(const expr &e) const
    {
        switch (e.kind) {
        case expr_kind::scalar: return e.value;
        case expr_kind::generator: {
            if (e.index > m_cfg.dimension) {
                throw eval_error("generator e" + std::to_string(e.index) + " outside e1..e" + std::to_string(m_cfg.dimension),
                                 e.offset);
            }
            return element::generator(e.index);
        }
        case expr_kind::add: return add(eval(*e.args[0]), eval(*e.args[1]), false, e.offset);
        case expr_kind::subtract: return add(eval(*e.args[0]), eval(*e.args[1]), true, e.offset);
        case expr_kind::negate: return scale(scalar(-1L), eval(*e.args[0]));
        case expr_kind::scale: return scale(e.value, eval(*e.args[0]));
        case expr_kind::vee: return element_value(*e.args[0]) * element_value(*e.args[1]);
        case expr_kind::circle: return qfa::circle(element_value(*e.args[0]), element_value(*e.args[1]), m_cfg.pairing);
        case expr_kind::rcircle: return m_mpair.circle(element_value(*e.args[0]), element_value(*e.args[1]));
        case expr_kind::call: return call(e);
        }
        throw eval_error("unsupported expression", e.offset);
    }

private:
    // Builds the T-map context on first use; rejected when the pairing is not symmetric.
    const t_context &tmap_context(std::size_t offset) const
    {
        if (!m_tctx) {
            try {
                m_tctx = std::make_shared<t_context>(m_cfg.pairing, m_cfg.zeta);
            } catch (const asymmetric_pairing_error &err) {
                throw eval_error(err.what(), offset);
            }
        }
        return *m_tctx;
    }

    element element_value(const expr &e) const
    {
        auto v = eval(e);
        if (auto *c = std::get_if<scalar>(&v)) {
            return element(*c);
        }
        if (auto *u = std::get_if<element>(&v)) {
            return std::move(*u);
        }
        throw eval_error("expected an element, got " + kind_name(v), e.offset);
    }

    scalar scalar_value(const expr &e) const
    {
        auto v = eval(e);
        if (auto *c = std::get_if<scalar>(&v)) {
            return *c;
        }
        throw eval_error("expected a scalar, got " + kind_name(v), e.offset);
    }

    // A generator index: a positive integer or a generator e_k.
    generator_index index_value(const expr &e) const
    {
        auto v = eval(e);
        if (auto *u = std::get_if<element>(&v); u && u->size() == 1) {
            const auto &[m, c] = *u->terms().begin();
            if (m.grading() == 1 && c == scalar(1L)) {
                return m.factors()[0].first;
            }
        }
        if (auto *c = std::get_if<scalar>(&v); c && c->is_real() && c->real().get_den() == 1 && c->real() >= 1
                                               && c->real() <= m_cfg.dimension) {
            return static_cast<generator_index>(c->real().get_num().get_ui());
        }
        throw eval_error("expected a generator index in 1.." + std::to_string(m_cfg.dimension), e.offset);
    }

    unsigned count_value(const expr &e, unsigned limit) const
    {
        const auto c = scalar_value(e);
        if (!c.is_real() || c.real().get_den() != 1 || c.real() < 0 || c.real() > limit) {
            throw eval_error("expected an integer in 0.." + std::to_string(limit), e.offset);
        }
        return static_cast<unsigned>(c.real().get_num().get_ui());
    }

    static value add(value a, value b, bool subtract, std::size_t offset)
    {
        if (subtract) {
            b = scale(scalar(-1L), std::move(b));
        }
        auto promote = [](value &v) {
            if (auto *c = std::get_if<scalar>(&v)) {
                v = element(*c);
            }
        };
        if (a.index() == 0 && b.index() == 0) {
            return std::get<scalar>(a) + std::get<scalar>(b);
        }
        if (a.index() <= 1 && b.index() <= 1) {
            promote(a);
            promote(b);
        }
        if (a.index() != b.index()) {
            throw eval_error("cannot add " + kind_name(a) + " and " + kind_name(b), offset);
        }
        return std::visit(
            [&](const auto &x) -> value {
                using T = std::decay_t<decltype(x)>;
                return x + std::get<T>(b);
            },
            a);
    }

    static value scale(const scalar &s, value v)
    {
        return std::visit(
            [&](auto &x) -> value {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, scalar>) {
                    return s * x;
                } else if constexpr (std::is_same_v<T, element> || std::is_same_v<T, tensor_element>) {
                    return s * x;
                } else {
                    return x.map([&](const auto &c) { return c * s; });
                }
            },
            v);
    }

    value call(const expr &e) const
    {
        const auto &name = e.name;
        const auto &args = e.args;
        if (name == "T") {
            return t_map(element_value(*args[0]), tmap_context(e.offset));
        }
        if (name == "Tbar") {
            return tbar_map(element_value(*args[0]), tmap_context(e.offset));
        }
        if (name == "t") {
            return t_scalar(element_value(*args[0]), tmap_context(e.offset));
        }
        if (name == "tbar") {
            return tbar_scalar(element_value(*args[0]), tmap_context(e.offset));
        }
        if (name == "eps") {
            return counit(element_value(*args[0]));
        }
        if (name == "antipode") {
            return antipode(element_value(*args[0]));
        }
        if (name == "Sigma") {
            return sigma_apply(element_value(*args[0]), m_cfg.pairing);
        }
        if (name == "expSigma") {
            return exp_sigma(element_value(*args[0]), tmap_context(e.offset));
        }
        if (name == "coproduct") {
            return coproduct(element_value(*args[0]));
        }
        if (name == "phi") {
            if (!m_cfg.fock) {
                throw eval_error("phi needs a fock block in the config", e.offset);
            }
            return phi(element_value(*args[0]), *m_cfg.fock);
        }
        if (name == "pair") {
            return pairing(element_value(*args[0]), element_value(*args[1]), m_cfg.pairing);
        }
        if (name == "Z") {
            return z_pairing(element_value(*args[0]), element_value(*args[1]), m_cfg.zeta);
        }
        if (name == "mpair") {
            return m_mpair(element_value(*args[0]), element_value(*args[1]));
        }
        if (name == "delta") {
            const auto k = index_value(*args[0]);
            return derivation(k, element_value(*args[1]));
        }
        if (name == "dp") {
            const auto k = index_value(*args[0]);
            return divided_power<scalar>(k, count_value(*args[1], max_order));
        }
        if (name == "expv") {
            const auto u = element_value(*args[0]);
            return vee_exp(u, count_value(*args[1], max_order));
        }
        if (name == "S") {
            const auto u = element_value(*args[0]);
            const auto n = count_value(*args[1], max_order);
            return smatrix(u, tmap_context(e.offset), n, m_renormalised);
        }
        if (name == "green") {
            const auto i = index_value(*args[0]);
            const auto j = index_value(*args[1]);
            const auto u = element_value(*args[2]);
            const auto n = count_value(*args[3], max_order);
            return green(i, j, u, tmap_context(e.offset), n, m_renormalised);
        }
        throw eval_error("unknown function '" + name + "'", e.offset);
    }

    static constexpr unsigned max_order = 64;

    config m_cfg;
    bool m_renormalised;
    renormalised_pairing m_mpair;
    mutable std::shared_ptr<t_context> m_tctx;
};

} // namespace qfa::cli

#endif
