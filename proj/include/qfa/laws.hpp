#ifndef QFA_LAWS_HPP
#define QFA_LAWS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>
#include <qfa/fock.hpp>
#include <qfa/format.hpp>
#include <qfa/laplace.hpp>
#include <qfa/permanent.hpp>
#include <qfa/random.hpp>
#include <qfa/renorm.hpp>
#include <qfa/series.hpp>
#include <qfa/tmaps.hpp>

namespace qfa
{

struct check_options {
    std::uint32_t max_grade = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
};

// Everything a law may depend on besides the random stream.
struct check_environment {
    pairing_matrix pairing;
    scheme zeta;
    std::optional<fock_structure> fock;

    std::uint32_t dim() const
    {
        return static_cast<std::uint32_t>(pairing.dim());
    }
    bool symmetric() const
    {
        return pairing.entries_symmetric();
    }
};

struct law_result {
    std::string suite;
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    bool skipped = false;
    std::string counterexample;
    std::string note;

    bool ok() const
    {
        return failed == 0;
    }
};

namespace detail
{

inline std::string describe_value(const element &u)
{
    return format(u);
}
inline std::string describe_value(const tensor_element &t)
{
    return format(t);
}
inline std::string describe_value(const scalar &c)
{
    return format(c);
}
inline std::string describe_value(const monomial &m)
{
    return m.str();
}
inline std::string describe_value(const std::string &s)
{
    return s;
}
template <typename T>
std::string describe_value(const formal_series<T> &s)
{
    std::string out = "[";
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out += (n ? "; " : "") + format(s[n]);
    }
    return out + "]";
}
inline std::string describe_value(const std::vector<generator_index> &gens)
{
    std::string out;
    for (auto i : gens) {
        out += (out.empty() ? "e" : ", e") + std::to_string(i);
    }
    return "(" + out + ")";
}

inline void describe_into(std::string &) {}

template <typename T, typename... Rest>
void describe_into(std::string &out, const char *label, const T &value, const Rest &...rest)
{
    if (!out.empty()) {
        out += "; ";
    }
    out += label;
    out += " = ";
    out += describe_value(value);
    describe_into(out, rest...);
}

} // namespace detail

// "label = value; ..." for counterexample reports.
template <typename... Args>
std::string describe(const Args &...args)
{
    std::string out;
    detail::describe_into(out, args...);
    return out;
}

inline tensor_element tensor_of(const element &a, const element &b)
{
    tensor_element t(2);
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            t.add({ma, mb}, ca * cb);
        }
    }
    return t;
}

class law_context
{
public:
    law_context(const check_environment &env, const check_options &opts, law_result &result, std::uint64_t stream)
        : m_env(env), m_opts(opts), m_result(result)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        m_rng.seed(seq);
    }

    const check_environment &env() const
    {
        return m_env;
    }
    const check_options &options() const
    {
        return m_opts;
    }
    rng_type &rng()
    {
        return m_rng;
    }
    std::uint32_t dim() const
    {
        return m_env.dim();
    }
    std::uint32_t max_grade() const
    {
        return m_opts.max_grade;
    }
    std::size_t trials() const
    {
        return m_opts.trials;
    }

    element random(std::uint32_t max_grade)
    {
        return random_element(m_rng, dim(), max_grade);
    }
    element random()
    {
        return random(max_grade());
    }
    generator_index random_generator()
    {
        return std::uniform_int_distribution<generator_index>(1, dim())(m_rng);
    }
    // A random element of V (grading exactly 1).
    element random_vector()
    {
        element a;
        for (generator_index i = 1; i <= dim(); ++i) {
            a.add(monomial::generator(i), random_scalar(m_rng));
        }
        return a;
    }

    template <typename Describe>
    void expect(bool ok, Describe &&describe_failure)
    {
        if (ok) {
            ++m_result.passed;
            return;
        }
        ++m_result.failed;
        if (m_result.counterexample.empty()) {
            m_result.counterexample = describe_failure();
        }
    }

    void note(const std::string &text)
    {
        if (!m_result.note.empty()) {
            m_result.note += '\n';
        }
        m_result.note += text;
    }

private:
    const check_environment &m_env;
    const check_options &m_opts;
    law_result &m_result;
    rng_type m_rng;
};

enum class law_requirement { none, symmetric_pairing, fock_structure };

struct law {
    std::string suite;
    std::string name;
    law_requirement requires_ = law_requirement::none;
    std::function<void(law_context &)> run;
};

namespace laws
{

// Helpers shared by several laws.

inline element sweedler_left_counit(const element &u)
{
    element out;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
        if (u1.is_unit()) {
            out.add(u2, c);
        }
    });
    return out;
}

inline element sweedler_right_counit(const element &u)
{
    element out;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
        if (u2.is_unit()) {
            out.add(u1, c);
        }
    });
    return out;
}

inline element antipode_convolution(const element &u)
{
    element out;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
        out.add(u1 * u2, u1.grading() % 2 == 0 ? c : -c);
    });
    return out;
}

inline tensor_element divided_power_coproduct_rhs(generator_index k, unsigned n)
{
    tensor_element t(2);
    for (unsigned j = 0; j <= n; ++j) {
        t += tensor_of(divided_power<scalar>(k, j), divided_power<scalar>(k, n - j));
    }
    return t;
}

inline element circle_fold(const std::vector<generator_index> &gens, const pairing_matrix &L)
{
    auto out = element::one();
    for (auto g : gens) {
        out = circle(out, element::generator(g), L);
    }
    return out;
}

// Sum over both Sweedler expansions of u and v of f(u1, u2, v1, v2) * cu * cv.
template <typename Acc, typename F>
Acc double_sweedler(const element &u, const element &v, Acc init, F &&f)
{
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &cu) {
        for_each_sweedler(v, [&](const monomial &v1, const monomial &v2, const scalar &cv) {
            f(init, u1, u2, v1, v2, cu * cv);
        });
    });
    return init;
}

// Left and right sides of a coupling identity for a bilinear form B on basis words:
//   sum B(u1 v v1, w) B(u2, v2)  and  sum B(u, v1 v w1) B(v2, w2).
template <typename B>
std::pair<scalar, scalar> coupling_sides(const element &u, const element &v, const element &w, B &&form)
{
    auto bilinear = [&](const element &x, const element &y) {
        scalar total;
        for (const auto &[mx, cx] : x.terms()) {
            for (const auto &[my, cy] : y.terms()) {
                const scalar b = form(mx, my);
                if (!b.is_zero()) {
                    total += cx * cy * b;
                }
            }
        }
        return total;
    };
    const auto lhs = double_sweedler(u, v, scalar(), [&](scalar &acc, const monomial &u1, const monomial &u2,
                                                         const monomial &v1, const monomial &v2, const scalar &c) {
        const scalar right = form(u2, v2);
        if (!right.is_zero()) {
            acc += c * right * bilinear(element(u1 * v1), w);
        }
    });
    const auto rhs = double_sweedler(v, w, scalar(), [&](scalar &acc, const monomial &v1, const monomial &v2,
                                                         const monomial &w1, const monomial &w2, const scalar &c) {
        const scalar right = form(v2, w2);
        if (!right.is_zero()) {
            acc += c * right * bilinear(u, element(v1 * w1));
        }
    });
    return {lhs, rhs};
}

inline std::vector<generator_index> random_generator_list(law_context &ctx, std::size_t length)
{
    std::vector<generator_index> gens(length);
    for (auto &g : gens) {
        g = ctx.random_generator();
    }
    return gens;
}

inline std::uint32_t capped(std::uint32_t g, std::uint32_t cap)
{
    return g < cap ? g : cap;
}

// --- algebra -------------------------------------------------------------------------------

inline void add_algebra(std::vector<law> &out)
{
    out.push_back({"algebra", "vee associative, commutative, unital", law_requirement::none, [](law_context &ctx) {
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const bool ok = (u * v) * w == u * (v * w) && u * v == v * u && element::one() * u == u
                                           && u * element::one() == u;
                           ctx.expect(ok, [&] { return describe("u", u, "v", v, "w", w); });
                       }
                   }});
    out.push_back({"algebra", "coassociativity", law_requirement::none, [](law_context &ctx) {
                       auto check = [&](const element &u) {
                           const auto d = coproduct(u);
                           const auto lhs = coproduct_on_slot(d, 0);
                           const auto rhs = coproduct_on_slot(d, 1);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "(D x Id)D u", lhs, "(Id x D)D u", rhs); });
                       };
                       for (const auto &m : all_monomials(ctx.dim(), capped(ctx.max_grade(), 5))) {
                           check(element(m));
                       }
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           check(ctx.random());
                       }
                   }});
    out.push_back({"algebra", "cocommutativity", law_requirement::none, [](law_context &ctx) {
                       auto check = [&](const element &u) {
                           const auto d = coproduct(u);
                           ctx.expect(d.permuted({1, 0}) == d, [&] { return describe("u", u, "D u", d); });
                       };
                       for (const auto &m : all_monomials(ctx.dim(), capped(ctx.max_grade(), 5))) {
                           check(element(m));
                       }
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           check(ctx.random());
                       }
                   }});
    out.push_back({"algebra", "counit", law_requirement::none, [](law_context &ctx) {
                       auto check = [&](const element &u) {
                           const auto l = sweedler_left_counit(u);
                           const auto r = sweedler_right_counit(u);
                           ctx.expect(l == u && r == u, [&] { return describe("u", u, "sum eps(u1) u2", l, "sum u1 eps(u2)", r); });
                       };
                       for (const auto &m : all_monomials(ctx.dim(), capped(ctx.max_grade(), 5))) {
                           check(element(m));
                       }
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           check(ctx.random());
                       }
                   }});
    out.push_back({"algebra", "coproduct is multiplicative", law_requirement::none, [](law_context &ctx) {
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = coproduct(u * v);
                           const auto rhs = coproduct(u) * coproduct(v);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "D(u v v)", lhs, "D u * D v", rhs); });
                       }
                   }});
    out.push_back({"algebra", "antipode", law_requirement::none, [](law_context &ctx) {
                       auto check = [&](const element &u) {
                           const auto lhs = antipode_convolution(u);
                           const auto rhs = element(counit(u));
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "sum s(u1) v u2", lhs, "eps(u) 1", rhs); });
                       };
                       for (const auto &m : all_monomials(ctx.dim(), capped(ctx.max_grade(), 5))) {
                           check(element(m));
                       }
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           check(ctx.random());
                       }
                   }});
    out.push_back({"algebra", "derivations commute", law_requirement::none, [](law_context &ctx) {
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random();
                           const auto i = ctx.random_generator(), j = ctx.random_generator();
                           const auto lhs = derivation(i, derivation(j, u));
                           const auto rhs = derivation(j, derivation(i, u));
                           ctx.expect(lhs == rhs, [&] {
                               return describe("u", u, "i", std::to_string(i), "j", std::to_string(j), "d_i d_j u", lhs,
                                               "d_j d_i u", rhs);
                           });
                       }
                   }});
    out.push_back({"algebra", "divided powers", law_requirement::none, [](law_context &ctx) {
                       for (generator_index k = 1; k <= ctx.dim(); ++k) {
                           for (unsigned n = 0; n <= ctx.max_grade(); ++n) {
                               const auto a = divided_power<scalar>(k, n);
                               const auto d = coproduct(a);
                               const auto expected = divided_power_coproduct_rhs(k, n);
                               ctx.expect(d == expected, [&] { return describe("a^(n)", a, "D", d, "expected", expected); });
                               const auto s = antipode(a);
                               const auto sign = n % 2 == 0 ? a : -a;
                               ctx.expect(s == sign, [&] { return describe("a^(n)", a, "s(a^(n))", s); });
                           }
                       }
                   }});
}

// --- laplace -------------------------------------------------------------------------------

inline void add_laplace(std::vector<law> &out)
{
    out.push_back({"laplace", "Ryser permanent = permutation sum", law_requirement::none, [](law_context &ctx) {
                       for (std::size_t n = 0; n <= 6; ++n) {
                           for (std::size_t k = 0; k < 4; ++k) {
                               dense_matrix<scalar> a(n, n);
                               for (std::size_t r = 0; r < n; ++r) {
                                   for (std::size_t c = 0; c < n; ++c) {
                                       a(r, c) = random_scalar(ctx.rng());
                                   }
                               }
                               const auto fast = permanent(a), slow = permanent_by_permutations(a);
                               ctx.expect(fast == slow, [&] {
                                   return describe("n", std::to_string(n), "Ryser", fast, "permutations", slow);
                               });
                           }
                       }
                   }});
    out.push_back({"laplace", "Laplace identities", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto g = ctx.max_grade();
                           const auto u = ctx.random(g / 2 + 1), v = ctx.random(g / 2 + 1), w = ctx.random(g);
                           const auto lhs1 = pairing(u * v, w, L);
                           scalar rhs1;
                           for_each_sweedler(w, [&](const monomial &w1, const monomial &w2, const scalar &c) {
                               rhs1 += c * pairing(u, element(w1), L) * pairing(v, element(w2), L);
                           });
                           ctx.expect(lhs1 == rhs1, [&] { return describe("u", u, "v", v, "w", w, "(u v v|w)", lhs1, "sum", rhs1); });
                           const auto lhs2 = pairing(w, u * v, L);
                           scalar rhs2;
                           for_each_sweedler(w, [&](const monomial &w1, const monomial &w2, const scalar &c) {
                               rhs2 += c * pairing(element(w1), u, L) * pairing(element(w2), v, L);
                           });
                           ctx.expect(lhs2 == rhs2, [&] { return describe("u", w, "v", u, "w", v, "(u|v v w)", lhs2, "sum", rhs2); });
                       }
                   }});
    out.push_back({"laplace", "Laplace coupling identity", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto [lhs, rhs] = coupling_sides(u, v, w, [&](const monomial &a, const monomial &b) { return L.pair(a, b); });
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "w", w, "lhs", lhs, "rhs", rhs); });
                       }
                   }});
    out.push_back({"laplace", "circle associative", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto lhs = circle(circle(u, v, L), w, L);
                           const auto rhs = circle(u, circle(v, w, L), L);
                           ctx.expect(lhs == rhs, [&] {
                               return describe("u", u, "v", v, "w", w, "(u o v) o w", lhs, "u o (v o w)", rhs);
                           });
                       }
                   }});
    out.push_back({"laplace", "eps(u o v) = (u|v)", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = counit(circle(u, v, L));
                           const auto rhs = pairing(u, v, L);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "eps(u o v)", lhs, "(u|v)", rhs); });
                       }
                   }});
    out.push_back({"laplace", "coproduct of circle", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = coproduct(circle(u, v, L));
                           const auto first = double_sweedler(u, v, tensor_element(2), [&](tensor_element &acc, const monomial &u1, const monomial &u2,
                                                                                         const monomial &v1, const monomial &v2, const scalar &c) {
                               acc += c * tensor_of(element(u1 * v1), circle(u2, v2, L));
                           });
                           const auto second = double_sweedler(u, v, tensor_element(2), [&](tensor_element &acc, const monomial &u1, const monomial &u2,
                                                                                          const monomial &v1, const monomial &v2, const scalar &c) {
                               acc += c * tensor_of(circle(u1, v1, L), element(u2 * v2));
                           });
                           ctx.expect(lhs == first && lhs == second, [&] {
                               return describe("u", u, "v", v, "D(u o v)", lhs, "sum (u1 v v1) x (u2 o v2)", first,
                                               "sum (u1 o v1) x (u2 v v2)", second);
                           });
                       }
                   }});
    out.push_back({"laplace", "(u|v o w) = (u o v|w)", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto lhs = pairing(u, circle(v, w, L), L);
                           const auto rhs = pairing(circle(u, v, L), w, L);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "w", w, "(u|v o w)", lhs, "(u o v|w)", rhs); });
                       }
                   }});
    out.push_back({"laplace", "antipode recovers vee and pairing", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto vee_back = recover_vee(u, v, L);
                           ctx.expect(vee_back == u * v, [&] { return describe("u", u, "v", v, "sum (s(u1)|v1) u2 o v2", vee_back); });
                           const auto pair_back = recover_pairing(u, v, L);
                           const auto expected = element(pairing(u, v, L));
                           ctx.expect(pair_back == expected, [&] {
                               return describe("u", u, "v", v, "sum s(u1 v v1) v (u2 o v2)", pair_back, "(u|v)", expected);
                           });
                       }
                   }});
    out.push_back({"laplace", "distributivity", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto lhs = circle(u, v * w, L);
                           const auto rhs = circle_distribute(u, v, w, L);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "w", w, "u o (v v w)", lhs, "sum", rhs); });
                       }
                   }});
    out.push_back({"laplace", "circle commutativity criterion", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       if (ctx.env().symmetric()) {
                           for (std::size_t k = 0; k < ctx.trials(); ++k) {
                               const auto u = ctx.random(), v = ctx.random();
                               const auto lhs = circle(u, v, L), rhs = circle(v, u, L);
                               ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "u o v", lhs, "v o u", rhs); });
                           }
                           return;
                       }
                       // Asymmetric pairing: the defect on generators is exactly (e_i|e_j) - (e_j|e_i).
                       for (generator_index i = 1; i <= ctx.dim(); ++i) {
                           for (generator_index j = 1; j <= ctx.dim(); ++j) {
                               const auto ei = element::generator(i), ej = element::generator(j);
                               const auto defect = circle(ei, ej, L) - circle(ej, ei, L);
                               const auto expected = element(L(i, j) - L(j, i));
                               ctx.expect(defect == expected, [&] {
                                   return describe("i", std::to_string(i), "j", std::to_string(j), "e_i o e_j - e_j o e_i", defect,
                                                   "(e_i|e_j) - (e_j|e_i)", expected);
                               });
                               if (i < j && !defect.is_zero()) {
                                   ctx.note("e" + std::to_string(i) + " o e" + std::to_string(j) + " - e" + std::to_string(j) + " o e"
                                            + std::to_string(i) + " = " + format(defect));
                               }
                           }
                       }
                   }});
    out.push_back({"laplace", "Wick expansion = circle fold", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto length = std::uniform_int_distribution<std::size_t>(0, 6)(ctx.rng());
                           const auto gens = random_generator_list(ctx, length);
                           const auto lhs = wick_expand<scalar>(gens, L);
                           const auto rhs = circle_fold(gens, L);
                           ctx.expect(lhs == rhs, [&] { return describe("generators", gens, "contractions", lhs, "circle fold", rhs); });
                       }
                   }});
    out.push_back({"laplace", "pairing of divided powers", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       for (generator_index a = 1; a <= ctx.dim(); ++a) {
                           for (generator_index b = 1; b <= ctx.dim(); ++b) {
                               scalar power(1L);
                               for (unsigned n = 0; n <= ctx.max_grade(); ++n) {
                                   if (n > 0) {
                                       power *= L(a, b);
                                   }
                                   const auto lhs = pairing(divided_power<scalar>(a, n), divided_power<scalar>(b, n), L);
                                   const auto rhs = power * scalar(rational(integer(1), factorial(n)));
                                   ctx.expect(lhs == rhs, [&] {
                                       return describe("a", "e" + std::to_string(a), "b", "e" + std::to_string(b), "n", std::to_string(n),
                                                       "(a^(n)|b^(n))", lhs, "(a|b)^n/n!", rhs);
                                   });
                               }
                           }
                       }
                   }});
}

// --- renorm --------------------------------------------------------------------------------

inline void add_renorm(std::vector<law> &out)
{
    out.push_back({"renorm", "convolution group", law_requirement::none, [](law_context &ctx) {
                       const auto zeta = ctx.env().zeta;
                       const auto xi = random_scheme(ctx.rng(), ctx.dim(), ctx.max_grade());
                       const auto eta = random_scheme(ctx.rng(), ctx.dim(), ctx.max_grade());
                       const auto f = zeta.functional(), g = xi.functional(), h = eta.functional();
                       const auto eps = functional::counit();
                       const auto fg_h = convolve(convolve(f, g), h), f_gh = convolve(f, convolve(g, h));
                       const auto fg = convolve(f, g), gf = convolve(g, f);
                       const auto ef = convolve(eps, f), fe = convolve(f, eps);
                       const auto inv = zeta.inverse();
                       const auto fi = convolve(f, inv), i_f = convolve(inv, f);
                       for (const auto &m : all_monomials(ctx.dim(), ctx.max_grade())) {
                           const auto ctx_m = [&] { return describe("word", m); };
                           ctx.expect(fg_h(m) == f_gh(m), ctx_m);
                           ctx.expect(fg(m) == gf(m), ctx_m);
                           ctx.expect(ef(m) == f(m) && fe(m) == f(m), ctx_m);
                           ctx.expect(fi(m) == eps(m) && i_f(m) == eps(m), [&] {
                               return describe("word", m, "zeta * zeta^-1", fi(m), "zeta^-1 * zeta", i_f(m));
                           });
                       }
                   }});
    out.push_back({"renorm", "Z symmetric and unital", law_requirement::none, [](law_context &ctx) {
                       const auto &z = ctx.env().zeta;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto uv = z_pairing(u, v, z), vu = z_pairing(v, u, z);
                           ctx.expect(uv == vu, [&] { return describe("u", u, "v", v, "Z(u,v)", uv, "Z(v,u)", vu); });
                           const auto one_u = z_pairing(element::one(), u, z);
                           ctx.expect(one_u == counit(u), [&] { return describe("u", u, "Z(1,u)", one_u); });
                       }
                   }});
    out.push_back({"renorm", "Z coupling identity", law_requirement::none, [](law_context &ctx) {
                       const auto &z = ctx.env().zeta;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto [lhs, rhs] = coupling_sides(u, v, w, [&](const monomial &a, const monomial &b) { return z.z(a, b); });
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "w", w, "lhs", lhs, "rhs", rhs); });
                       }
                   }});
    out.push_back({"renorm", "Z(a v b, c v d) expansion", law_requirement::none, [](law_context &ctx) {
                       const auto &z = ctx.env().zeta;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto a = ctx.random_generator(), b = ctx.random_generator(), c = ctx.random_generator(),
                                      d = ctx.random_generator();
                           auto w = [](std::initializer_list<generator_index> idx) { return monomial::from_indices(idx); };
                           const auto lhs = z.z(w({a, b}), w({c, d}));
                           const auto rhs = z.z(w({a}), w({b, c, d})) + z.z(w({a}), w({c})) * z.z(w({b}), w({d}))
                                            + z.z(w({b}), w({c})) * z.z(w({a}), w({d}));
                           ctx.expect(lhs == rhs, [&] {
                               return describe("a,b,c,d", std::vector<generator_index>{a, b, c, d}, "Z(a v b, c v d)", lhs, "expansion", rhs);
                           });
                       }
                   }});
    out.push_back({"renorm", "modified pairing coupling identity", law_requirement::none, [](law_context &ctx) {
                       const renormalised_pairing rp(ctx.env().zeta, ctx.env().pairing);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto [lhs, rhs] = coupling_sides(u, v, w, [&](const monomial &a, const monomial &b) { return rp(a, b); });
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "w", w, "lhs", lhs, "rhs", rhs); });
                       }
                   }});
    out.push_back({"renorm", "renormalised circle associative", law_requirement::none, [](law_context &ctx) {
                       const renormalised_pairing rp(ctx.env().zeta, ctx.env().pairing);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random(), w = ctx.random();
                           const auto lhs = rp.circle(rp.circle(u, v), w);
                           const auto rhs = rp.circle(u, rp.circle(v, w));
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "w", w, "(u o~ v) o~ w", lhs, "u o~ (v o~ w)", rhs); });
                       }
                   }});
    out.push_back({"renorm", "renormalised circle commutative", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const renormalised_pairing rp(ctx.env().zeta, ctx.env().pairing);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = rp.circle(u, v), rhs = rp.circle(v, u);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "u o~ v", lhs, "v o~ u", rhs); });
                       }
                   }});
    out.push_back({"renorm", "coproduct of renormalised circle", law_requirement::none, [](law_context &ctx) {
                       const renormalised_pairing rp(ctx.env().zeta, ctx.env().pairing);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = coproduct(rp.circle(u, v));
                           const auto rhs = double_sweedler(u, v, tensor_element(2), [&](tensor_element &acc, const monomial &u1, const monomial &u2,
                                                                                       const monomial &v1, const monomial &v2, const scalar &c) {
                               acc += c * tensor_of(element(u1 * v1), rp.circle(u2, v2));
                           });
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "D(u o~ v)", lhs, "sum", rhs); });
                       }
                   }});
    out.push_back({"renorm", "trivial scheme gives circle", law_requirement::none, [](law_context &ctx) {
                       const auto &L = ctx.env().pairing;
                       const renormalised_pairing rp(scheme{}, L);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = rp.circle(u, v), rhs = circle(u, v, L);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "u o~ v", lhs, "u o v", rhs); });
                       }
                   }});
}

// --- tmaps ---------------------------------------------------------------------------------

inline void add_tmaps(std::vector<law> &out)
{
    out.push_back({"tmaps", "T routes agree", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (const auto &m : all_monomials(ctx.dim(), capped(ctx.max_grade(), 6))) {
                           const element u(m);
                           const auto wick = t_map(u, tc), fold = t_map_circle_fold(u, tc), expo = exp_sigma(u, tc);
                           ctx.expect(wick == fold && wick == expo, [&] {
                               return describe("u", u, "contractions", wick, "circle fold", fold, "exp(Sigma)", expo);
                           });
                       }
                   }});
    out.push_back({"tmaps", "coproduct of T", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random();
                           const auto lhs = coproduct(t_map(u, tc));
                           tensor_element right(2), left(2);
                           for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
                               right += c * tensor_of(element(u1), t_map(u2, tc));
                               left += c * tensor_of(t_map(u1, tc), element(u2));
                           });
                           ctx.expect(lhs == right && lhs == left, [&] {
                               return describe("u", u, "D T(u)", lhs, "sum u1 x T(u2)", right, "sum T(u1) x u2", left);
                           });
                       }
                   }});
    out.push_back({"tmaps", "T multiplicative", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = t_map(u * v, tc);
                           const auto rhs = circle(t_map(u, tc), t_map(v, tc), tc.pairing());
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "T(u v v)", lhs, "T(u) o T(v)", rhs); });
                       }
                   }});
    out.push_back({"tmaps", "T from scalar t", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random();
                           const auto lhs = t_map(u, tc), rhs = t_map_from_scalar(u, tc);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "T(u)", lhs, "sum t(u1) u2", rhs); });
                           const auto t = t_scalar(u, tc), et = counit(lhs);
                           ctx.expect(t == et, [&] { return describe("u", u, "t(u)", t, "eps(T(u))", et); });
                       }
                   }});
    out.push_back({"tmaps", "Sigma commutator", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       const auto &L = tc.pairing();
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto a = ctx.random_vector();
                           const auto u = ctx.random();
                           const auto commutator = sigma_apply(a * u, tc) - a * sigma_apply(u, tc);
                           element expected;
                           for (generator_index i = 1; i <= ctx.dim(); ++i) {
                               expected += derivation(i, u) * pairing(a, element::generator(i), L);
                           }
                           ctx.expect(commutator == expected, [&] {
                               return describe("a", a, "u", u, "[Sigma, a] u", commutator, "sum (a|e_i) d_i u", expected);
                           });
                           const auto lhs = circle(a, u, L);
                           const auto rhs = a * u + commutator;
                           ctx.expect(lhs == rhs, [&] { return describe("a", a, "u", u, "a o u", lhs, "a v u + [Sigma, a] u", rhs); });
                       }
                   }});
    out.push_back({"tmaps", "t closed form", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto length = 2 * std::uniform_int_distribution<std::size_t>(0, 4)(ctx.rng());
                           const auto gens = random_generator_list(ctx, length);
                           const auto recursive = t_scalar(monomial::from_indices(gens), tc);
                           const auto closed = t_closed_form<scalar>(gens, tc);
                           ctx.expect(recursive == closed, [&] {
                               return describe("generators", gens, "recursive t", recursive, "hafnian", closed);
                           });
                       }
                   }});
    out.push_back({"tmaps", "coproduct of Tbar", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random();
                           const auto lhs = coproduct(tbar_map(u, tc));
                           tensor_element rhs(2);
                           for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
                               rhs += c * tensor_of(element(u1), tbar_map(u2, tc));
                           });
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "D Tbar(u)", lhs, "sum u1 x Tbar(u2)", rhs); });
                       }
                   }});
    out.push_back({"tmaps", "Pinter identity", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       const auto &z = ctx.env().zeta;
                       auto check = [&](const element &u) {
                           const auto lhs = tbar_map(u, tc);
                           element rhs;
                           for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
                               const auto zv = z(u1);
                               if (!zv.is_zero()) {
                                   rhs += t_map(u2, tc) * (c * zv);
                               }
                           });
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "Tbar(u)", lhs, "sum zeta(u1) T(u2)", rhs); });
                       };
                       for (const auto &m : all_monomials(ctx.dim(), capped(ctx.max_grade(), 6))) {
                           check(element(m));
                       }
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           check(ctx.random());
                       }
                   }});
    out.push_back({"tmaps", "tbar = zeta * t", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       const auto &z = ctx.env().zeta;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random();
                           const auto tb = tbar_scalar(u, tc);
                           scalar conv;
                           element from_tbar;
                           for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const scalar &c) {
                               conv += c * z(u1) * t_scalar(u2, tc);
                               from_tbar.add(u2, c * tbar_scalar(u1, tc));
                           });
                           ctx.expect(tb == conv, [&] { return describe("u", u, "tbar(u)", tb, "sum zeta(u1) t(u2)", conv); });
                           const auto big = tbar_map(u, tc);
                           ctx.expect(big == from_tbar, [&] { return describe("u", u, "Tbar(u)", big, "sum tbar(u1) u2", from_tbar); });
                           const auto eb = counit(big);
                           ctx.expect(eb == tb, [&] { return describe("u", u, "eps(Tbar(u))", eb, "tbar(u)", tb); });
                       }
                   }});
    out.push_back({"tmaps", "T(u) o~ T(v) = sum Z(u1,v1) T(u2) o T(v2)", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       const auto g = (ctx.max_grade() + 1) / 2;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(g), v = ctx.random(g);
                           const auto [lhs, rhs] = first_identity_check(u, v, tc);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "T(u) o~ T(v)", lhs, "sum", rhs); });
                       }
                   }});
}

// --- fock ----------------------------------------------------------------------------------

inline void add_fock(std::vector<law> &out)
{
    out.push_back({"fock", "phi is an algebra isomorphism", law_requirement::fock_structure, [](law_context &ctx) {
                       const auto &f = *ctx.env().fock;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto lhs = phi(u * v, f), rhs = phi(u, f) * phi(v, f);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "phi(u v v)", lhs, "phi(u) phi(v)", rhs); });
                           // The inverse multiplies the two slots back together.
                           const auto image = phi(u, f);
                           element back;
                           for (const auto &[key, c] : image.terms()) {
                               back.add(key[0] * key[1], c);
                           }
                           ctx.expect(back == u, [&] { return describe("u", u, "phi(u)", image, "inverse image", back); });
                       }
                   }});
    out.push_back({"fock", "projectors", law_requirement::fock_structure, [](law_context &ctx) {
                       const auto &f = *ctx.env().fock;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto p = project_plus(u * v, f), pp = project_plus(u, f) * project_plus(v, f);
                           const auto m = project_minus(u * v, f), mm = project_minus(u, f) * project_minus(v, f);
                           ctx.expect(p == pp && m == mm, [&] { return describe("u", u, "v", v, "P(u v v)", p, "M(u v v)", m); });
                       }
                       for (auto c : f.creation()) {
                           for (auto a : f.annihilation()) {
                               const element mixed(monomial::from_indices({c, a}));
                               ctx.expect(project_plus(mixed, f).is_zero() && project_minus(mixed, f).is_zero(),
                                          [&] { return describe("mixed word", mixed); });
                           }
                       }
                   }});
    out.push_back({"fock", "involution", law_requirement::fock_structure, [](law_context &ctx) {
                       const auto &f = *ctx.env().fock;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(), v = ctx.random();
                           const auto twice = involute(involute(u, f), f);
                           ctx.expect(twice == u, [&] { return describe("u", u, "u**", twice); });
                           const auto lhs = involute(u * v, f), rhs = involute(u, f) * involute(v, f);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "v", v, "(u v v)*", lhs, "u* v v*", rhs); });
                       }
                   }});
    out.push_back({"fock", "vacuum expectation = counit", law_requirement::fock_structure, [](law_context &ctx) {
                       const auto &f = *ctx.env().fock;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random();
                           const auto lhs = vacuum_expectation(u, f), rhs = counit(u);
                           ctx.expect(lhs == rhs, [&] { return describe("u", u, "<0|u|0>", lhs, "eps(u)", rhs); });
                       }
                   }});
}

// --- series --------------------------------------------------------------------------------

inline formal_series<scalar> random_series(rng_type &rng, std::size_t order, bool unit_constant)
{
    formal_series<scalar> s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = random_scalar(rng);
    }
    if (unit_constant) {
        s[0] = scalar(1L);
    }
    return s;
}

inline void add_series(std::vector<law> &out)
{
    out.push_back({"series", "series ring", law_requirement::none, [](law_context &ctx) {
                       const std::size_t n = ctx.max_grade() + 2;
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto a = random_series(ctx.rng(), n, false), b = random_series(ctx.rng(), n, true),
                                      c = random_series(ctx.rng(), n, false);
                           ctx.expect((a * b) * c == a * (b * c), [&] { return describe("A", a, "B", b, "C", c); });
                           const auto q = a / b;
                           ctx.expect(q * b == a, [&] { return describe("A", a, "B", b, "A/B", q); });
                           const auto r = inverse_sqrt(b);
                           ctx.expect(r * r * b == formal_series<scalar>::constant(scalar(1L), n),
                                      [&] { return describe("B", b, "B^-1/2", r); });
                       }
                   }});
    out.push_back({"series", "Green denominator", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (std::size_t k = 0; k < ctx.trials(); ++k) {
                           const auto u = ctx.random(capped(ctx.max_grade(), 3));
                           for (bool renorm : {false, true}) {
                               const auto s = smatrix(u, tc, 2, renorm);
                               const auto d0 = counit(s[0]);
                               ctx.expect(d0 == scalar(1L), [&] { return describe("u", u, "eps(T(S)) at order 0", d0); });
                           }
                       }
                   }});
    out.push_back({"series", "simplest Lagrangian", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       for (generator_index a = 1; a <= ctx.dim(); ++a) {
                           const auto [lhs, rhs] = simplest_lagrangian_check(a, tc, 5);
                           ctx.expect(lhs == rhs, [&] { return describe("a", "e" + std::to_string(a), "T(exp(lambda a))", lhs, "closed form", rhs); });
                       }
                   }});
    out.push_back({"series", "Gaussian closed form", law_requirement::symmetric_pairing, [](law_context &ctx) {
                       const t_context tc(ctx.env().pairing, ctx.env().zeta);
                       const std::size_t order = ctx.dim() <= 2 ? 3 : 2;
                       const auto grading = capped(ctx.max_grade(), 6);
                       const auto [lhs, rhs] = gaussian_closed_form_check(tc, order, grading);
                       ctx.expect(lhs == rhs, [&] { return describe("T(exp(sum e_i v e_i))", lhs, "closed form", rhs); });
                   }});
}

} // namespace laws

inline std::vector<law> all_laws()
{
    std::vector<law> out;
    laws::add_algebra(out);
    laws::add_laplace(out);
    laws::add_renorm(out);
    laws::add_tmaps(out);
    laws::add_fock(out);
    laws::add_series(out);
    return out;
}

// Runs every law (or those whose "suite/name" contains filter). Each law draws from its own
// stream derived from the seed and its position, so results do not depend on which laws run.
inline std::vector<law_result> run_laws(const check_environment &env, const check_options &opts,
                                        const std::string &filter = {})
{
    std::vector<law_result> results;
    const auto registry = all_laws();
    for (std::size_t k = 0; k < registry.size(); ++k) {
        const auto &l = registry[k];
        if (!filter.empty() && (l.suite + "/" + l.name).find(filter) == std::string::npos) {
            continue;
        }
        law_result r;
        r.suite = l.suite;
        r.name = l.name;
        if (l.requires_ == law_requirement::symmetric_pairing && !env.symmetric()) {
            r.skipped = true;
            r.note = "skipped: needs a symmetric pairing";
        } else if (l.requires_ == law_requirement::fock_structure && !env.fock) {
            r.skipped = true;
            r.note = "skipped: no creation/annihilation split configured";
        } else {
            law_context ctx(env, opts, r, k);
            l.run(ctx);
        }
        results.push_back(std::move(r));
    }
    return results;
}

inline bool all_passed(const std::vector<law_result> &results)
{
    for (const auto &r : results) {
        if (!r.ok()) {
            return false;
        }
    }
    return true;
}

inline void print_report(std::ostream &os, const std::vector<law_result> &results)
{
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto &r : results) {
        const char *status = r.skipped ? "SKIP" : (r.ok() ? "PASS" : "FAIL");
        os << status << "  " << r.suite << ": " << r.name;
        if (!r.skipped) {
            os << "  (" << r.passed << " passed, " << r.failed << " failed)";
        }
        os << '\n';
        if (!r.ok()) {
            os << "      first counterexample: " << r.counterexample << '\n';
        }
        if (!r.note.empty()) {
            std::istringstream lines(r.note);
            for (std::string line; std::getline(lines, line);) {
                os << "      " << line << '\n';
            }
        }
        (r.skipped ? skipped : (r.ok() ? passed : failed)) += 1;
    }
    os << results.size() << " laws: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
}

} // namespace qfa

#endif
